//! Upper and lower bounds on the Hamiltonian number, gathered into one report.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::grinberg::{self, repeat_lower_bound};
use crate::walks::{self, validate_walk, ClosedWalk};

/// `2(n-1) - floor(k/2)(2d-2)` for a k-connected graph of diameter d.
pub fn goodman_hedetniemi_bound(g: &PlanarEmbedding) -> u64 {
    let n = g.num_vertices() as i64;
    let k = g.vertex_connectivity() as i64;
    let d = i64::from(g.diameter());
    (2 * (n - 1) - (k / 2) * (2 * d - 2)) as u64
}

/// Smallest degree sum over non-adjacent pairs, clamped to `n`; `n` for
/// complete graphs. Degrees count distinct neighbours.
pub fn degree_sum_parameter(g: &PlanarEmbedding) -> u64 {
    let n = g.num_vertices();
    let adjacency: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v)).collect();
    let mut c = n;
    for v in 1..=n {
        for w in v + 1..=n {
            if adjacency[v - 1].binary_search(&w).is_err() {
                c = c.min(adjacency[v - 1].len() + adjacency[w - 1].len());
            }
        }
    }
    c as u64
}

/// `2n - c` with `c` from [`degree_sum_parameter`].
pub fn bermond_bound(g: &PlanarEmbedding) -> u64 {
    2 * g.num_vertices() as u64 - degree_sum_parameter(g)
}

#[derive(Clone, Debug, Default)]
pub struct BoundsOptions {
    pub solve: bool,
    pub limit: usize,
    /// A known closed spanning walk; its length is an upper bound.
    pub witness: Option<ClosedWalk>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    pub lower_elementary: u64,
    pub lower_grinberg: Option<u64>,
    /// Set when bridges forced the Grinberg bound onto the edge-doubled graph.
    pub grinberg_on_doubled: bool,
    pub grinberg_number: Option<u64>,
    pub upper_elementary: u64,
    pub upper_gh: Option<u64>,
    pub k: u64,
    pub d: u64,
    pub upper_bermond: Option<u64>,
    pub c: Option<u64>,
    pub upper_witness: Option<u64>,
    pub exact: Option<u64>,
    /// The Hamiltonian number is pinned: either solved exactly or the best
    /// lower bound meets the best upper bound.
    pub certified: bool,
}

impl BoundsReport {
    pub fn best_lower(&self) -> u64 {
        self.lower_grinberg.unwrap_or(0).max(self.lower_elementary)
    }

    pub fn best_upper(&self) -> u64 {
        [self.upper_gh, self.upper_bermond, self.upper_witness]
            .into_iter()
            .flatten()
            .fold(self.upper_elementary, u64::min)
    }

    /// Every lower bound sits below every upper bound and the exact value
    /// (if any) lies between them.
    pub fn is_consistent(&self) -> bool {
        let lower = self.best_lower();
        let upper = self.best_upper();
        lower <= upper && self.exact.is_none_or(|h| lower <= h && h <= upper)
    }
}

/// Collects every applicable bound. The Goodman–Hedetniemi and Bermond
/// bounds need `n >= 3`; the Grinberg bound needs at least two faces after
/// doubling (so any graph with an edge).
pub fn bounds_report(g: &PlanarEmbedding, options: &BoundsOptions) -> Result<BoundsReport> {
    let n = g.num_vertices() as u64;
    let has_bridges = !g.bridges().is_empty();
    let grinberg_host = if has_bridges { g.double_all_edges() } else { g.clone() };
    let grinberg_number = match grinberg::analyze(&grinberg_host) {
        Ok(analysis) => Some(analysis.number()),
        Err(Error::TooFewFaces { .. }) => None,
        Err(e) => return Err(e),
    };
    let lower_grinberg = match grinberg_number {
        Some(number) => Some(n + repeat_lower_bound(number)?),
        None => None,
    };
    let large = n >= 3;
    let upper_witness = match &options.witness {
        Some(walk) => Some(validate_walk(g, walk)?.length as u64),
        None => None,
    };
    let exact = if options.solve {
        Some(walks::hamiltonian_number_exact(g, options.limit)?.h)
    } else {
        None
    };
    let mut report = BoundsReport {
        n,
        lower_elementary: n,
        lower_grinberg,
        grinberg_on_doubled: has_bridges,
        grinberg_number,
        upper_elementary: 2 * n.saturating_sub(1),
        upper_gh: large.then(|| goodman_hedetniemi_bound(g)),
        k: g.vertex_connectivity() as u64,
        d: u64::from(g.diameter()),
        upper_bermond: large.then(|| bermond_bound(g)),
        c: large.then(|| degree_sum_parameter(g)),
        upper_witness,
        exact,
        certified: false,
    };
    if n == 1 {
        report.upper_elementary = 0;
        report.lower_elementary = 0;
    }
    report.certified = report.exact.is_some() || report.best_lower() == report.best_upper();
    if !report.is_consistent() {
        return Err(Error::InconsistentBounds(format!(
            "lower {} exceeds upper {} or exact {:?} falls outside",
            report.best_lower(),
            report.best_upper(),
            report.exact
        )));
    }
    Ok(report)
}
