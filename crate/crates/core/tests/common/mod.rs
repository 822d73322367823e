//! Shared helpers for the integration suites: a random straight-line planar
//! graph generator and brute-force oracles that do not touch the code paths
//! they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hamnum::walks::ClosedWalk;
use hamnum::PlanarEmbedding;
use rand::seq::SliceRandom;
use rand::Rng;

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Proper crossing of two segments that share no endpoint.
fn crosses(p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)) -> bool {
    let d1 = orient(p, q, r);
    let d2 = orient(p, q, s);
    let d3 = orient(r, s, p);
    let d4 = orient(r, s, q);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u - 1), find(&mut parent, v - 1));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

/// Connected straight-line planar graph on `n` random points. Candidate
/// segments are tried in random order; a non-crossing one is kept with
/// probability `density`, or always when it joins two components.
pub fn random_planar<R: Rng>(rng: &mut R, n: usize, density: f64) -> PlanarEmbedding {
    loop {
        let coords: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
        let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in &pairs {
            let free = edges.iter().all(|&(a, b)| {
                a == u
                    || a == v
                    || b == u
                    || b == v
                    || !crosses(coords[u - 1], coords[v - 1], coords[a - 1], coords[b - 1])
            });
            if !free {
                continue;
            }
            let before = component_count(n, &edges);
            edges.push((u, v));
            let joins = component_count(n, &edges) < before;
            if !joins && rng.gen::<f64>() >= density {
                edges.pop();
            }
        }
        if n == 1 || component_count(n, &edges) == 1 {
            return PlanarEmbedding::from_straight_line(&coords, edges).expect("straight-line drawing is planar");
        }
    }
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd_warshall(g: &PlanarEmbedding) -> Vec<Vec<u32>> {
    let n = g.num_vertices();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (_, u, v) in g.edges() {
        d[u - 1][v - 1] = 1;
        d[v - 1][u - 1] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Smallest vertex set whose removal disconnects the graph, by enumeration;
/// `n - 1` when no such set exists.
pub fn connectivity_by_enumeration(g: &PlanarEmbedding) -> usize {
    let n = g.num_vertices();
    let adjacency: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v)).collect();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let removed = mask.count_ones() as usize;
        if removed >= best || n - removed < 2 {
            continue;
        }
        let alive: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 0).collect();
        let mut seen = BTreeSet::from([alive[0]]);
        let mut stack = vec![alive[0]];
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v - 1] {
                if mask >> (w - 1) & 1 == 0 && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() < alive.len() {
            best = removed;
        }
    }
    best
}

/// Grinberg set by enumerating every non-constant sign vector.
pub fn grinberg_by_enumeration(lengths: &[u32]) -> Vec<u64> {
    let n = lengths.len();
    let mut out = BTreeSet::new();
    for mask in 1..(1u64 << n) - 1 {
        let sum: i64 = lengths
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if mask >> i & 1 == 1 {
                    i64::from(l) - 2
                } else {
                    2 - i64::from(l)
                }
            })
            .sum();
        out.insert(sum.unsigned_abs());
    }
    out.into_iter().collect()
}

/// Inserts a there-and-back detour `v, w, v` at a random position.
pub fn splice_detour<R: Rng>(rng: &mut R, g: &PlanarEmbedding, walk: &ClosedWalk) -> ClosedWalk {
    let mut vertices = walk.vertices().to_vec();
    let at = rng.gen_range(0..vertices.len());
    let v = vertices[at];
    let neighbours = g.neighbors(v);
    let w = neighbours[rng.gen_range(0..neighbours.len())];
    vertices.splice(at + 1..at + 1, [w, v]);
    ClosedWalk::new(vertices).unwrap()
}

pub fn is_tree(g: &PlanarEmbedding) -> bool {
    g.num_edges() + 1 == g.num_vertices()
}
