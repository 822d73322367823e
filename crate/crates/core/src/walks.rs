//! Closed spanning walks, exact Hamiltonian numbers, and Hamiltonian spectra.
//!
//! The Hamiltonian number is the minimum cost of a cyclic vertex ordering under
//! shortest-path distance, so the exact solver is a Held–Karp style dynamic
//! program over vertex subsets of the metric closure.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, PlanarEmbedding, VertexId};

pub const DEFAULT_SOLVE_LIMIT: usize = 20;
pub const DEFAULT_SPECTRUM_LIMIT: usize = 9;

/// Cyclic vertex sequence; the closing step from the last vertex back to the
/// first is implicit. A single vertex is the trivial walk of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ClosedWalk(Vec<VertexId>);

impl ClosedWalk {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(ClosedWalk(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Number of edge traversals.
    pub fn len(&self) -> usize {
        if self.0.len() == 1 {
            0
        } else {
            self.0.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive pairs including the closing step.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = if self.0.len() == 1 { 0 } else { self.0.len() };
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % self.0.len()]))
    }

    /// Parses `w <L> <v_1> ... <v_L>`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut found: Option<Vec<VertexId>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if found.is_some() {
                return Err(Error::syntax(line_no, "walk file holds a single `w` line"));
            }
            let mut tokens = line.split_whitespace();
            if tokens.next() != Some("w") {
                return Err(Error::syntax(line_no, "walk line must read `w <L> <v_1> ... <v_L>`"));
            }
            let numbers = tokens
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::syntax(line_no, format!("`{s}` is not a vertex id")))
                })
                .collect::<Result<Vec<_>>>()?;
            let Some((&count, vertices)) = numbers.split_first() else {
                return Err(Error::syntax(line_no, "missing walk length"));
            };
            if count != vertices.len() {
                return Err(Error::syntax(
                    line_no,
                    format!("walk announces {count} vertices but lists {}", vertices.len()),
                ));
            }
            found = Some(vertices.to_vec());
        }
        match found {
            Some(v) => Self::new(v),
            None => Err(Error::syntax(1, "no `w` line")),
        }
    }

    pub fn to_walk_file(&self) -> String {
        let mut out = format!("w {}", self.0.len());
        for v in &self.0 {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkStats {
    pub length: usize,
    /// Occurrences minus one per vertex (0 for vertices never visited).
    pub multiplicities: Vec<u64>,
    pub repeats: u64,
    pub spanning: bool,
}

/// Statistics for any closed walk on `g`; fails only if a vertex is unknown or
/// a step does not follow an edge.
pub fn walk_stats(g: &PlanarEmbedding, walk: &ClosedWalk) -> Result<WalkStats> {
    let n = g.num_vertices();
    let mut occurrences = vec![0u64; n];
    for &v in walk.vertices() {
        if v == 0 || v > n {
            return Err(Error::UnknownVertex { vertex: v, n });
        }
        occurrences[v - 1] += 1;
    }
    for (index, (from, to)) in walk.steps().enumerate() {
        if g.edge_between(from, to).is_none() {
            return Err(Error::NonAdjacentStep { index, from, to });
        }
    }
    let multiplicities: Vec<u64> = occurrences.iter().map(|&c| c.saturating_sub(1)).collect();
    Ok(WalkStats {
        length: walk.len(),
        repeats: multiplicities.iter().sum(),
        spanning: occurrences.iter().all(|&c| c > 0),
        multiplicities,
    })
}

/// Checks that `walk` is a closed spanning walk on `g`.
pub fn validate_walk(g: &PlanarEmbedding, walk: &ClosedWalk) -> Result<WalkStats> {
    let stats = walk_stats(g, walk)?;
    if !stats.spanning {
        let present: BTreeSet<VertexId> = walk.vertices().iter().copied().collect();
        let missing = g.vertices().filter(|v| !present.contains(v)).collect();
        return Err(Error::NotSpanning { missing });
    }
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicOrdering {
    pub order: Vec<VertexId>,
    pub cost: u64,
}

pub fn ordering_cost(dist: &DistanceMatrix, order: &[VertexId]) -> u64 {
    if order.len() < 2 {
        return 0;
    }
    (0..order.len())
        .map(|i| u64::from(dist.get(order[i], order[(i + 1) % order.len()])))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonianSolution {
    pub h: u64,
    pub ordering: CyclicOrdering,
    pub walk: ClosedWalk,
}

/// Exact Hamiltonian number by subset dynamic programming on the metric
/// closure. Among optimal orderings starting at vertex 1 the lexicographically
/// smallest is returned, expanded leg by leg into shortest paths.
pub fn hamiltonian_number_exact(g: &PlanarEmbedding, limit: usize) -> Result<HamiltonianSolution> {
    let n = g.num_vertices();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let dist = g.shortest_path_matrix();
    let order = if n <= 2 {
        (1..=n).collect()
    } else {
        optimal_ordering(&dist)
    };
    let cost = ordering_cost(&dist, &order);
    let walk = expand_ordering(g, &dist, &order);
    debug_assert_eq!(walk.len() as u64, cost);
    Ok(HamiltonianSolution {
        h: cost,
        ordering: CyclicOrdering { order, cost },
        walk,
    })
}

fn optimal_ordering(dist: &DistanceMatrix) -> Vec<VertexId> {
    const UNSET: u16 = u16::MAX;
    let n = dist.n();
    let rest = n - 1;
    let full = (1usize << rest) - 1;
    // Vertex i+1 (0-based i >= 1) owns bit i-1; vertex 1 is the fixed start.
    let d = |a: usize, b: usize| dist.get(a + 1, b + 1) as u16;
    let bit = |v: usize| 1usize << (v - 1);
    // remaining[mask * n + j]: cheapest way to visit the vertices outside
    // `mask` from j and return to the start.
    let mut remaining = vec![UNSET; (full + 1) * n];
    for j in 1..n {
        remaining[full * n + j] = d(j, 0);
    }
    for mask in (0..full).rev() {
        for j in 0..n {
            let valid = if j == 0 { mask == 0 } else { mask & bit(j) != 0 };
            if !valid {
                continue;
            }
            let mut best = UNSET;
            for k in 1..n {
                if mask & bit(k) != 0 {
                    continue;
                }
                let tail = remaining[(mask | bit(k)) * n + k];
                best = best.min(d(j, k) + tail);
            }
            remaining[mask * n + j] = best;
        }
    }
    let mut order = vec![1];
    let (mut mask, mut j) = (0usize, 0usize);
    for _ in 0..rest {
        let target = remaining[mask * n + j];
        let k = (1..n)
            .find(|&k| mask & bit(k) == 0 && d(j, k) + remaining[(mask | bit(k)) * n + k] == target)
            .expect("an optimal successor exists");
        order.push(k + 1);
        mask |= bit(k);
        j = k;
    }
    order
}

/// Expands each leg of a cyclic ordering into the shortest path that always
/// steps to the smallest-labelled neighbour one hop closer to the target.
pub fn expand_ordering(g: &PlanarEmbedding, dist: &DistanceMatrix, order: &[VertexId]) -> ClosedWalk {
    if order.len() == 1 {
        return ClosedWalk(order.to_vec());
    }
    let mut vertices = Vec::new();
    for i in 0..order.len() {
        let (mut cur, target) = (order[i], order[(i + 1) % order.len()]);
        while cur != target {
            vertices.push(cur);
            let remaining = dist.get(cur, target);
            cur = g
                .neighbors(cur)
                .into_iter()
                .find(|&w| dist.get(w, target) + 1 == remaining)
                .expect("connected graph has a next hop");
        }
    }
    ClosedWalk(vertices)
}

/// Distinct costs of all cyclic orderings. Vertex 1 is fixed first and each
/// reflection pair is visited once (cost is rotation and reversal invariant).
pub fn hamiltonian_spectrum(g: &PlanarEmbedding, limit: usize) -> Result<Vec<u64>> {
    let n = g.num_vertices();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let dist = g.shortest_path_matrix();
    if n <= 2 {
        return Ok(vec![ordering_cost(&dist, &(1..=n).collect::<Vec<_>>())]);
    }
    let mut costs = BTreeSet::new();
    let mut order = vec![1];
    let mut used = vec![false; n + 1];
    used[1] = true;
    enumerate_orderings(&dist, &mut order, &mut used, 0, &mut costs);
    Ok(costs.into_iter().collect())
}

fn enumerate_orderings(
    dist: &DistanceMatrix,
    order: &mut Vec<VertexId>,
    used: &mut [bool],
    cost: u64,
    costs: &mut BTreeSet<u64>,
) {
    let n = dist.n();
    if order.len() == n {
        // Reflection keeps vertex 1 first and reverses the rest.
        if order[1] < order[n - 1] {
            costs.insert(cost + u64::from(dist.get(order[n - 1], 1)));
        }
        return;
    }
    let last = order[order.len() - 1];
    for v in 2..=n {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        enumerate_orderings(dist, order, used, cost + u64::from(dist.get(last, v)), costs);
        order.pop();
        used[v] = false;
    }
}

/// Depth-first closed walk around a spanning tree rooted at vertex 1,
/// neighbours taken in ascending order; length `2(n-1)`.
pub fn spanning_tree_walk(g: &PlanarEmbedding) -> ClosedWalk {
    let n = g.num_vertices();
    let mut visited = vec![false; n + 1];
    visited[1] = true;
    let mut vertices = vec![1];
    let mut stack: Vec<(VertexId, Vec<VertexId>, usize)> = vec![(1, g.neighbors(1), 0)];
    while let Some((_, neighbors, next)) = stack.last_mut() {
        if let Some(&w) = neighbors.get(*next) {
            *next += 1;
            if !visited[w] {
                visited[w] = true;
                vertices.push(w);
                stack.push((w, g.neighbors(w), 0));
            }
        } else {
            stack.pop();
            if let Some((parent, _, _)) = stack.last() {
                vertices.push(*parent);
            }
        }
    }
    if vertices.len() > 1 {
        // Drop the final return to the root; the closing step is implicit.
        vertices.pop();
    }
    ClosedWalk(vertices)
}
