//! Reduction of a planar graph relative to a closed spanning walk.
//!
//! The reduced multigraph keeps exactly the traversed edges, with one extra
//! parallel copy per additional traversal. It is built as the host embedding
//! `H` with all copies inserted (each copy bounding a 2-gon with its
//! neighbour), whose faces are then merged across untraversed edges. Every
//! host face therefore sits inside exactly one reduced face.
//!
//! Worked example, 3×3 grid labelled row-major, walk `1,2,3,6,9,8,7,4,5,2`:
//! edge 1–2 is traversed twice, edges 1–4, 5–6, 5–8 are not. Dropping 1–4
//! merges the top-left square into the outer face, dropping 5–6 and 5–8 merges
//! the other three squares. With the 2-gon from the doubled edge there are
//! three reduced faces: two on one side of the colouring, one on the other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dart, FaceSet, PlanarEmbedding};
use crate::grinberg::{self, GrinbergSet};
use crate::walks::{validate_walk, ClosedWalk, WalkStats};

#[derive(Clone, Debug)]
pub struct ReducedGraph {
    /// Traversal count for each host edge.
    pub traversals: Vec<usize>,
    pub stats: WalkStats,
    /// Host plus one copy per additional traversal.
    pub expanded: PlanarEmbedding,
    expanded_faces: FaceSet,
    /// Reduced-face class (0-based) of every face of `expanded`.
    class_of: Vec<usize>,
    /// Boundary length of every reduced face.
    class_lengths: Vec<usize>,
    /// Reduced-face class of every host face.
    host_class: Vec<usize>,
    host_lengths: Vec<u32>,
    /// Degree of every vertex in the reduced graph.
    pub degrees: Vec<usize>,
    pub edge_count: usize,
    pub two_gons: usize,
    host_edges: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl ReducedGraph {
    /// Number of reduced faces.
    pub fn phi(&self) -> usize {
        self.class_lengths.len()
    }

    pub fn class_lengths(&self) -> &[usize] {
        &self.class_lengths
    }

    /// Reduced-face class (0-based) holding host face `face` (1-based).
    pub fn class_of_host_face(&self, face: usize) -> usize {
        self.host_class[face - 1]
    }

    pub fn host_face_count(&self) -> usize {
        self.host_class.len()
    }

    fn in_reduced(&self, dart: Dart) -> bool {
        dart.edge() > self.host_edges || self.traversals[dart.edge() - 1] > 0
    }

    /// Two-colours the reduced faces so that the two sides of every reduced
    /// edge differ. The class containing host face `anchor` (default 1) is `+`.
    pub fn sign_faces(&self, anchor: Option<usize>) -> Result<Vec<Sign>> {
        let faces = self.host_face_count();
        let anchor = anchor.unwrap_or(1);
        if anchor == 0 || anchor > faces {
            return Err(Error::UnknownFace { face: anchor, faces });
        }
        let phi = self.phi();
        let mut neighbours: Vec<Vec<(usize, usize)>> = vec![Vec::new(); phi];
        for (edge, _, _) in self.expanded.edges() {
            let forward = Dart::new(edge, false);
            if !self.in_reduced(forward) {
                continue;
            }
            let a = self.class_of[self.expanded_faces.face_of(forward) - 1];
            let b = self.class_of[self.expanded_faces.face_of(forward.reverse()) - 1];
            if a == b {
                return Err(Error::OddDualCycle { edge });
            }
            neighbours[a].push((b, edge));
            neighbours[b].push((a, edge));
        }
        let mut signs: Vec<Option<Sign>> = vec![None; phi];
        let start = self.class_of_host_face(anchor);
        signs[start] = Some(Sign::Plus);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let sign = signs[c].expect("queued classes are signed");
            for &(other, edge) in &neighbours[c] {
                match signs[other] {
                    None => {
                        signs[other] = Some(sign.flip());
                        queue.push_back(other);
                    }
                    Some(s) if s == sign => return Err(Error::OddDualCycle { edge }),
                    Some(_) => {}
                }
            }
        }
        Ok(signs
            .into_iter()
            .map(|s| s.expect("dual of a connected plane graph is connected"))
            .collect())
    }
}

/// Builds the reduction of a simple host relative to a closed spanning walk.
pub fn reduce_walk(g: &PlanarEmbedding, walk: &ClosedWalk) -> Result<ReducedGraph> {
    if let Some((first, second)) = g.parallel_pair() {
        return Err(Error::NotSimpleHost { first, second });
    }
    let stats = validate_walk(g, walk).map_err(|e| Error::InvalidWalk(Box::new(e)))?;
    if walk.is_empty() {
        return Err(Error::InvalidWalk(Box::new(Error::EmptyWalk)));
    }
    let m = g.num_edges();
    let mut traversals = vec![0usize; m];
    for (from, to) in walk.steps() {
        let edge = g.edge_between(from, to).expect("validated step");
        traversals[edge - 1] += 1;
    }
    let extra: Vec<usize> = traversals.iter().map(|&t| t.saturating_sub(1)).collect();
    let (expanded, copies) = g.with_duplicates(&extra);
    let expanded_faces = expanded.trace_faces();

    let mut classes = UnionFind::new(expanded_faces.len());
    for (i, &t) in traversals.iter().enumerate() {
        if t == 0 {
            let dart = Dart::new(i + 1, false);
            classes.union(
                expanded_faces.face_of(dart) - 1,
                expanded_faces.face_of(dart.reverse()) - 1,
            );
        }
    }
    let mut label = vec![usize::MAX; expanded_faces.len()];
    let mut class_of = vec![0; expanded_faces.len()];
    let mut next = 0;
    for (face, class) in class_of.iter_mut().enumerate() {
        let root = classes.find(face);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        *class = label[root];
    }

    let mut reduced = ReducedGraph {
        traversals,
        stats,
        expanded,
        expanded_faces,
        class_of,
        class_lengths: vec![0; next],
        host_class: Vec::new(),
        host_lengths: Vec::new(),
        degrees: vec![0; g.num_vertices()],
        edge_count: 0,
        two_gons: 0,
        host_edges: m,
    };

    for face in reduced.expanded_faces.faces() {
        let kept = face.boundary.iter().filter(|&&d| reduced.in_reduced(d)).count();
        reduced.class_lengths[reduced.class_of[face.id - 1]] += kept;
    }
    for (edge, u, v) in reduced.expanded.edges() {
        if reduced.in_reduced(Dart::new(edge, false)) {
            reduced.degrees[u - 1] += 1;
            reduced.degrees[v - 1] += 1;
            reduced.edge_count += 1;
        }
    }
    let mut class_sizes = vec![0usize; next];
    for &c in &reduced.class_of {
        class_sizes[c] += 1;
    }
    reduced.two_gons = reduced
        .expanded_faces
        .faces()
        .iter()
        .filter(|f| {
            class_sizes[reduced.class_of[f.id - 1]] == 1 && f.len() == 2 && f.boundary.iter().any(|d| d.edge() > m)
        })
        .count();

    // A host dart at the second endpoint of a duplicated edge is displaced by
    // its outermost copy; every other host dart keeps its face.
    let host_faces = g.trace_faces();
    for face in host_faces.faces() {
        let first = face.boundary[0];
        let chain = &copies[first.edge() - 1];
        let dart = match chain.last() {
            Some(&outer) if first.at_second_endpoint() => Dart::new(outer, true),
            _ => first,
        };
        let expanded_face = reduced.expanded_faces.face_of(dart);
        debug_assert_eq!(
            reduced.expanded_faces.faces()[expanded_face - 1].len(),
            face.len(),
            "host face survives duplication with its length"
        );
        reduced.host_class.push(reduced.class_of[expanded_face - 1]);
        reduced.host_lengths.push(face.len() as u32);
    }
    Ok(reduced)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionChecks {
    /// Reduced face count equals 2 + repeats.
    pub eq1: bool,
    /// Both colour classes have the same total boundary length, equal to the edge count.
    pub balance: bool,
    /// `|sum_+(|A|-2) - sum_-(|A|-2)| = 2|delta|` over the reduced faces.
    pub signed_difference: bool,
    /// The same identity over the host faces with inherited signs.
    pub eq3: bool,
    /// Repeats are at least half the Grinberg number.
    pub theorem: bool,
    /// Repeats equal `f/2 + 2 min(nu, pi)`.
    pub rho_identity: bool,
    pub f_in_grinberg_set: bool,
    /// `f` is in the Grinberg set, or all host faces share one sign and `f`
    /// is the full total `sum (|F_i| - 2)` (the excluded constant vector).
    pub f_accounted: bool,
    /// Every reduced degree equals `2 m_i + 2`.
    pub degrees: bool,
    /// `n - |E'| + phi = 2`.
    pub euler: bool,
    /// One 2-gon per additional traversal.
    pub two_gons: bool,
}

impl ReductionChecks {
    pub fn all(&self) -> bool {
        self.eq1
            && self.balance
            && self.signed_difference
            && self.eq3
            && self.theorem
            && self.rho_identity
            && self.f_accounted
            && self.degrees
            && self.euler
            && self.two_gons
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub phi: u64,
    pub sum_m: u64,
    pub n_plus: u64,
    pub n_minus: u64,
    pub delta_abs: u64,
    pub nu: u64,
    pub pi: u64,
    pub f: u64,
    /// Sign of the reduced face containing each host face, by host face id.
    pub epsilon: Vec<i8>,
    /// Every host face inherited the same sign.
    pub constant_signs: bool,
    pub grinberg_number: u64,
    pub edges: u64,
    pub two_gons: u64,
    /// Boundary lengths of the `+` and `-` reduced faces.
    pub plus_lengths: Vec<u64>,
    pub minus_lengths: Vec<u64>,
    pub checks: ReductionChecks,
}

impl ReductionReport {
    /// True when the walk's repeats meet the Grinberg bound exactly.
    pub fn is_tight(&self) -> bool {
        2 * self.sum_m == self.grinberg_number
    }
}

pub fn reduction_report(g: &PlanarEmbedding, walk: &ClosedWalk) -> Result<ReductionReport> {
    reduction_report_anchored(g, walk, None)
}

/// As [`reduction_report`], with host face `anchor` pinned to the `+` class.
pub fn reduction_report_anchored(
    g: &PlanarEmbedding,
    walk: &ClosedWalk,
    anchor: Option<usize>,
) -> Result<ReductionReport> {
    let reduced = reduce_walk(g, walk)?;
    let set = grinberg::grinberg_set(&grinberg::FaceLengthVector::new(reduced.host_lengths.clone())?)?;
    let signs = reduced.sign_faces(anchor)?;
    Ok(assemble_report(g, &reduced, &signs, &set))
}

fn assemble_report(g: &PlanarEmbedding, reduced: &ReducedGraph, signs: &[Sign], set: &GrinbergSet) -> ReductionReport {
    let phi = reduced.phi() as u64;
    let sum_m = reduced.stats.repeats;
    let mut plus_lengths = Vec::new();
    let mut minus_lengths = Vec::new();
    for (c, &len) in reduced.class_lengths().iter().enumerate() {
        match signs[c] {
            Sign::Plus => plus_lengths.push(len as u64),
            Sign::Minus => minus_lengths.push(len as u64),
        }
    }
    let n_plus = plus_lengths.len() as u64;
    let n_minus = minus_lengths.len() as u64;
    let delta_abs = n_plus.abs_diff(n_minus);
    let nu = n_minus.saturating_sub(1);
    let pi = n_plus.saturating_sub(1);
    let f = 2 * delta_abs;
    let edges = reduced.edge_count as u64;

    let excess = |lengths: &[u64]| lengths.iter().map(|&l| l as i64 - 2).sum::<i64>();
    let signed_difference = (excess(&plus_lengths) - excess(&minus_lengths)).unsigned_abs();

    let epsilon: Vec<i8> = (1..=reduced.host_face_count())
        .map(|face| signs[reduced.class_of_host_face(face)].value() as i8)
        .collect();
    let host_sum: i64 = epsilon
        .iter()
        .zip(&reduced.host_lengths)
        .map(|(&e, &len)| i64::from(e) * (i64::from(len) - 2))
        .sum();

    let g_number = set.min();
    let constant_signs = epsilon.iter().all(|&e| e == epsilon[0]);
    let total: u64 = reduced.host_lengths.iter().map(|&l| u64::from(l) - 2).sum();
    let extra: u64 = reduced.traversals.iter().map(|&t| t.saturating_sub(1) as u64).sum();
    let checks = ReductionChecks {
        eq1: phi == 2 + sum_m,
        balance: plus_lengths.iter().sum::<u64>() == edges && minus_lengths.iter().sum::<u64>() == edges,
        signed_difference: signed_difference == f,
        eq3: host_sum.unsigned_abs() == f,
        theorem: 2 * sum_m >= g_number,
        rho_identity: sum_m == f / 2 + 2 * nu.min(pi),
        f_in_grinberg_set: set.contains(f),
        f_accounted: set.contains(f) || (constant_signs && f == total),
        degrees: reduced
            .degrees
            .iter()
            .zip(&reduced.stats.multiplicities)
            .all(|(&d, &m)| d as u64 == 2 * m + 2),
        euler: g.num_vertices() as i64 - edges as i64 + phi as i64 == 2,
        two_gons: reduced.two_gons as u64 == extra,
    };
    ReductionReport {
        phi,
        sum_m,
        n_plus,
        n_minus,
        delta_abs,
        nu,
        pi,
        f,
        epsilon,
        constant_signs,
        grinberg_number: g_number,
        edges,
        two_gons: reduced.two_gons as u64,
        plus_lengths,
        minus_lengths,
        checks,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
