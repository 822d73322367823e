//! Grinberg sets and the repeat bounds they imply.
//!
//! For face lengths `|F_1|..|F_N|` the Grinberg set collects every value
//! `|sum eps_i (|F_i| - 2)|` over sign vectors that are not constant. The
//! minimum is the Grinberg number `g`; any closed spanning walk repeats at
//! least `g / 2` vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlanarEmbedding};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLengthVector(Vec<u32>);

impl FaceLengthVector {
    pub fn new(lengths: Vec<u32>) -> Result<Self> {
        if let Some(&length) = lengths.iter().find(|&&l| l < 2) {
            return Err(Error::InvalidFaceLength { length });
        }
        Ok(FaceLengthVector(lengths))
    }

    pub fn of(g: &PlanarEmbedding) -> Result<Self> {
        Self::new(g.trace_faces().lengths())
    }

    /// Parses a comma-separated list such as `6,6,6,6,6,18`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let lengths = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::syntax(1, format!("`{}` is not a face length", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lengths)
    }

    pub fn lengths(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum (|F_i| - 2)`.
    pub fn total_contribution(&self) -> u64 {
        self.0.iter().map(|&l| u64::from(l - 2)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GrinbergSet(Vec<u64>);

impl GrinbergSet {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, value: u64) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }
}

impl FromIterator<u64> for GrinbergSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let set: BTreeSet<u64> = iter.into_iter().collect();
        GrinbergSet(set.into_iter().collect())
    }
}

/// Subset-sum over contributions `c_i = |F_i| - 2`: a "+" subset with sum `s`
/// yields `|2s - T|`. The empty and full subsets are the only witnesses of
/// `0` and `T` unless some `c_i` is zero, in which case a single zero face
/// (or its complement) stands in for them.
pub fn grinberg_set(faces: &FaceLengthVector) -> Result<GrinbergSet> {
    if faces.len() < 2 {
        return Err(Error::TooFewFaces { faces: faces.len() });
    }
    let total = faces.total_contribution() as usize;
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for &length in faces.lengths() {
        let c = (length - 2) as usize;
        if c == 0 {
            continue;
        }
        for s in (c..=total).rev() {
            if reachable[s - c] {
                reachable[s] = true;
            }
        }
    }
    let has_zero_face = faces.lengths().contains(&2);
    if !has_zero_face {
        reachable[0] = false;
        reachable[total] = false;
    }
    Ok(reachable
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(s, _)| (2 * s as i64 - total as i64).unsigned_abs())
        .collect())
}

pub fn grinberg_number(set: &GrinbergSet) -> u64 {
    set.min()
}

/// Minimum number of repeated vertices in any closed spanning walk.
pub fn repeat_lower_bound(grinberg_number: u64) -> Result<u64> {
    if grinberg_number % 2 == 1 {
        return Err(Error::OddGrinbergNumber(grinberg_number));
    }
    Ok(grinberg_number / 2)
}

/// Repeat counts `f/2 + 2k` (for `f` in the set, `k >= 0`) up to `cap`.
pub fn feasible_repeat_counts(set: &GrinbergSet, cap: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &f in set.values() {
        let mut rho = f / 2;
        while rho <= cap {
            out.insert(rho);
            rho += 2;
        }
    }
    out
}

/// [`feasible_repeat_counts`] plus the counts `T/2 + 2k` reached when every
/// host face lands in one reduced face (all signs equal, so `f = T` even though
/// the constant vector is excluded from the set). Every spanning-tree walk is
/// such a case: it has `n - 2 = T/2` repeats.
pub fn attainable_repeat_counts(faces: &FaceLengthVector, set: &GrinbergSet, cap: u64) -> BTreeSet<u64> {
    let mut out = feasible_repeat_counts(set, cap);
    let mut rho = faces.total_contribution() / 2;
    while rho <= cap {
        out.insert(rho);
        rho += 2;
    }
    out
}

/// Grinberg data computed from an embedding, together with the bridges whose
/// presence makes some face boundaries repeat an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrinbergAnalysis {
    pub faces: FaceLengthVector,
    pub set: GrinbergSet,
    pub bridges: Vec<EdgeId>,
}

impl GrinbergAnalysis {
    pub fn number(&self) -> u64 {
        self.set.min()
    }
}

pub fn analyze(g: &PlanarEmbedding) -> Result<GrinbergAnalysis> {
    let faces = FaceLengthVector::of(g)?;
    let set = grinberg_set(&faces)?;
    Ok(GrinbergAnalysis {
        faces,
        set,
        bridges: g.bridges(),
    })
}

/// `n + g/2`: no closed spanning walk is shorter.
pub fn hamiltonian_lower_bound(g: &PlanarEmbedding) -> Result<u64> {
    let analysis = analyze(g)?;
    Ok(g.num_vertices() as u64 + repeat_lower_bound(analysis.number())?)
}

/// Grinberg's condition: `false` certifies that `g` has no Hamiltonian cycle.
pub fn hamiltonicity_necessary_condition(g: &PlanarEmbedding) -> Result<bool> {
    Ok(analyze(g)?.number() == 0)
}
