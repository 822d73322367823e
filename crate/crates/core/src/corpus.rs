//! Deterministic fixtures for the example graphs.
//!
//! Every embedded fixture is drawn with straight lines, so rotations are the
//! counterclockwise angular order around each vertex.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::graph::{PlanarEmbedding, VertexId};
use crate::walks::{spanning_tree_walk, ClosedWalk};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Reported with the example.
    Published,
    /// Computed independently (enumeration, hand tracing, solver).
    Derived,
    /// Immediate from the definitions.
    Immediate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected<T> {
    pub value: T,
    pub source: Source,
}

fn published<T>(value: T) -> Option<Expected<T>> {
    Some(Expected {
        value,
        source: Source::Published,
    })
}

fn derived<T>(value: T) -> Option<Expected<T>> {
    Some(Expected {
        value,
        source: Source::Derived,
    })
}

fn immediate<T>(value: T) -> Option<Expected<T>> {
    Some(Expected {
        value,
        source: Source::Immediate,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub grinberg_set: Option<Expected<Vec<u64>>>,
    pub grinberg_number: Option<Expected<u64>>,
    pub repeat_lower_bound: Option<Expected<u64>>,
    pub hamiltonian_number: Option<Expected<u64>>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub embedding: Option<PlanarEmbedding>,
    pub face_lengths: Vec<u32>,
    pub walks: Vec<ClosedWalk>,
    pub expected: Expectations,
}

pub const FIXTURE_NAMES: &[&str] = &[
    "cycle",
    "star",
    "path_tree",
    "grid",
    "altered_tree",
    "hexcluster5",
    "fig5",
    "octagon_faces",
    "k4",
];

/// Builds fixture `name`. Parameters: `cycle <k>`, `star <q>`,
/// `path_tree <edges>`, `grid <rows> <cols>`, `altered_tree <fixture...>`;
/// the rest take none. Missing parameters fall back to the example sizes.
pub fn fixture(name: &str, params: &[&str]) -> Result<Fixture> {
    let numbers = || -> Result<Vec<usize>> {
        params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::BadParams(format!("`{p}` is not a count")))
            })
            .collect()
    };
    let one = |default: usize| -> Result<usize> {
        match numbers()?.as_slice() {
            [] => Ok(default),
            [k] => Ok(*k),
            _ => Err(Error::BadParams(format!("{name} takes one parameter"))),
        }
    };
    let none = || -> Result<()> {
        if params.is_empty() {
            Ok(())
        } else {
            Err(Error::BadParams(format!("{name} takes no parameters")))
        }
    };
    match name {
        "cycle" => cycle(one(6)?),
        "star" => star(one(4)?),
        "path_tree" => path_tree(one(10)?),
        "grid" => match numbers()?.as_slice() {
            [] => grid(3, 3),
            [r, c] => grid(*r, *c),
            _ => Err(Error::BadParams("grid takes <rows> <cols>".into())),
        },
        "altered_tree" => {
            let base = match params.split_first() {
                Some((base, rest)) => fixture(base, rest)?,
                None => path_tree(10)?,
            };
            altered_tree(base)
        }
        "hexcluster5" => none().and_then(|_| hexcluster5()),
        "fig5" => none().and_then(|_| fig5()),
        "octagon_faces" => none().map(|_| octagon_faces()),
        "k4" => none().and_then(|_| k4()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

fn polygon(k: usize, phase: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let t = phase + TAU * i as f64 / k as f64;
            (t.cos(), t.sin())
        })
        .collect()
}

fn embedded(name: String, embedding: PlanarEmbedding, walks: Vec<ClosedWalk>, expected: Expectations) -> Fixture {
    Fixture {
        name,
        face_lengths: embedding.trace_faces().lengths(),
        embedding: Some(embedding),
        walks,
        expected,
    }
}

pub fn cycle(k: usize) -> Result<Fixture> {
    if k < 3 {
        return Err(Error::BadParams("cycle needs k >= 3".into()));
    }
    let g = PlanarEmbedding::from_straight_line(&polygon(k, 0.0), (1..=k).map(|i| (i, i % k + 1)).collect())?;
    let walk = ClosedWalk::new((1..=k).collect())?;
    Ok(embedded(
        format!("cycle_{k}"),
        g,
        vec![walk],
        Expectations {
            grinberg_set: immediate(vec![0]),
            grinberg_number: immediate(0),
            repeat_lower_bound: immediate(0),
            hamiltonian_number: immediate(k as u64),
        },
    ))
}

fn tree_expectations(n: usize) -> Expectations {
    Expectations {
        hamiltonian_number: published(2 * (n as u64 - 1)),
        ..Expectations::default()
    }
}

pub fn star(q: usize) -> Result<Fixture> {
    if q < 1 {
        return Err(Error::BadParams("star needs q >= 1".into()));
    }
    let mut coords = vec![(0.0, 0.0)];
    coords.extend(polygon(q, 0.0));
    let g = PlanarEmbedding::from_straight_line(&coords, (2..=q + 1).map(|v| (1, v)).collect())?;
    let walk = spanning_tree_walk(&g);
    Ok(embedded(format!("star_{q}"), g, vec![walk], tree_expectations(q + 1)))
}

/// Path with `q` edges on `q + 1` vertices.
pub fn path_tree(q: usize) -> Result<Fixture> {
    if q < 1 {
        return Err(Error::BadParams("path_tree needs at least one edge".into()));
    }
    let coords: Vec<(f64, f64)> = (0..=q).map(|i| (i as f64, 0.0)).collect();
    let g = PlanarEmbedding::from_straight_line(&coords, (1..=q).map(|i| (i, i + 1)).collect())?;
    let walk = spanning_tree_walk(&g);
    Ok(embedded(
        format!("path_tree_{q}"),
        g,
        vec![walk],
        tree_expectations(q + 1),
    ))
}

/// Rows × cols grid, vertex `(r, c)` labelled `r * cols + c + 1`.
pub fn grid(rows: usize, cols: usize) -> Result<Fixture> {
    if rows == 0 || cols == 0 || rows * cols < 2 {
        return Err(Error::BadParams("grid needs at least two vertices".into()));
    }
    let coords: Vec<(f64, f64)> = (0..rows * cols)
        .map(|i| ((i % cols) as f64, -((i / cols) as f64)))
        .collect();
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c + 1;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    let g = PlanarEmbedding::from_straight_line(&coords, edges)?;
    let mut walks = Vec::new();
    let mut expected = Expectations::default();
    if (rows, cols) == (3, 3) {
        walks.push(ClosedWalk::new(vec![1, 2, 3, 6, 9, 8, 7, 4, 5, 2])?);
        expected = Expectations {
            grinberg_set: derived(vec![2, 6, 10]),
            grinberg_number: published(2),
            repeat_lower_bound: published(1),
            hamiltonian_number: derived(10),
        };
    }
    walks.push(spanning_tree_walk(&g));
    Ok(embedded(format!("grid_{rows}x{cols}"), g, walks, expected))
}

/// Doubles every edge of a tree fixture so each edge bounds a 2-gon.
pub fn altered_tree(base: Fixture) -> Result<Fixture> {
    let Some(tree) = base.embedding.as_ref() else {
        return Err(Error::BadParams(format!("{} has no embedding", base.name)));
    };
    if tree.num_edges() + 1 != tree.num_vertices() {
        return Err(Error::BadParams(format!("{} is not a tree", base.name)));
    }
    let g = tree.double_all_edges();
    let n = tree.num_vertices() as u64;
    let is_example = base.name == "path_tree_10";
    let source = if is_example { Source::Published } else { Source::Derived };
    fn tag<T>(value: T, source: Source) -> Option<Expected<T>> {
        Some(Expected { value, source })
    }
    let g_number = 2 * (n - 1) - 2;
    let expected = Expectations {
        grinberg_set: tag(vec![g_number], source),
        grinberg_number: tag(g_number, source),
        repeat_lower_bound: tag(g_number / 2, source),
        hamiltonian_number: published(2 * (n - 1)),
    };
    Ok(embedded(format!("altered_{}", base.name), g, base.walks, expected))
}

/// Five hexagons: a centre cell and its neighbours in directions 1, 2, 4, 5
/// (directions counted counterclockwise from 30°), giving six shared edges.
pub fn hexcluster5() -> Result<Fixture> {
    let root3 = 3f64.sqrt();
    let mut centres = vec![(0.0, 0.0)];
    for dir in [1, 2, 4, 5] {
        let t = PI / 6.0 + PI / 3.0 * dir as f64;
        centres.push((root3 * t.cos(), root3 * t.sin()));
    }
    let key = |(x, y): (f64, f64)| ((x * 1e6).round() as i64, (y * 1e6).round() as i64);
    let mut points: BTreeMap<(i64, i64), (f64, f64)> = BTreeMap::new();
    let mut cells = Vec::new();
    for &(cx, cy) in &centres {
        let corners: Vec<(i64, i64)> = polygon(6, 0.0)
            .into_iter()
            .map(|(x, y)| {
                let p = (cx + x, cy + y);
                points.entry(key(p)).or_insert(p);
                key(p)
            })
            .collect();
        cells.push(corners);
    }
    // Label top to bottom, then left to right.
    let mut order: Vec<(i64, i64)> = points.keys().copied().collect();
    order.sort_by_key(|&(x, y)| (-y, x));
    let label: BTreeMap<(i64, i64), VertexId> = order.iter().enumerate().map(|(i, &k)| (k, i + 1)).collect();
    let coords: Vec<(f64, f64)> = order.iter().map(|k| points[k]).collect();
    let mut edges: Vec<(VertexId, VertexId)> = cells
        .iter()
        .flat_map(|corners| {
            (0..6).map(|i| {
                let a = label[&corners[i]];
                let b = label[&corners[(i + 1) % 6]];
                (a.min(b), a.max(b))
            })
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let g = PlanarEmbedding::from_straight_line(&coords, edges)?;
    let walk = ClosedWalk::new(HEXCLUSTER_WALK.to_vec())?;
    Ok(embedded(
        "hexcluster5".into(),
        g,
        vec![walk],
        Expectations {
            grinberg_set: published(vec![4, 12, 20, 28]),
            grinberg_number: published(4),
            repeat_lower_bound: published(2),
            hamiltonian_number: derived(22),
        },
    ))
}

/// Closed spanning walk on `hexcluster5` with two repeats.
const HEXCLUSTER_WALK: &[VertexId] = &[
    1, 2, 5, 8, 7, 8, 11, 12, 15, 18, 17, 14, 17, 20, 19, 16, 13, 10, 9, 6, 3, 4,
];

/// Outer 26-cycle `1..26` with `a = 1`, `x = 11`, `y = 17` (arcs of 10, 6 and
/// 10 edges) and interior paths `a-b-c-d-x` (`b, c, d = 27, 28, 29`) and
/// `a-e-f-g-y` (`e, f, g = 30, 31, 32`). Each interior face is one arc plus
/// the adjacent interior path(s): 10 + 4, 4 + 6 + 4 and 4 + 10, all 14, which
/// is what forces the chord endpoints onto this split of the outer cycle.
pub fn fig5() -> Result<Fixture> {
    let mut coords = polygon(26, PI);
    let along = |from: (f64, f64), to: (f64, f64), t: f64| (from.0 + t * (to.0 - from.0), from.1 + t * (to.1 - from.1));
    let (a, x, y) = (coords[0], coords[10], coords[16]);
    for target in [x, y] {
        for t in [0.25, 0.5, 0.75] {
            coords.push(along(a, target, t));
        }
    }
    let mut edges: Vec<(VertexId, VertexId)> = (1..=26).map(|i| (i, i % 26 + 1)).collect();
    edges.extend([(1, 27), (27, 28), (28, 29), (29, 11)]);
    edges.extend([(1, 30), (30, 31), (31, 32), (32, 17)]);
    let g = PlanarEmbedding::from_straight_line(&coords, edges)?;
    let mut walk: Vec<VertexId> = (1..=26).collect();
    walk.extend([1, 27, 28, 29, 28, 27, 1, 30, 31, 32, 31, 30]);
    Ok(embedded(
        "fig5".into(),
        g,
        vec![ClosedWalk::new(walk)?],
        Expectations {
            grinberg_set: derived(vec![12, 36]),
            grinberg_number: published(12),
            repeat_lower_bound: published(6),
            hamiltonian_number: derived(38),
        },
    ))
}

/// Eight octagons and a 20-edge outer face; face lengths only.
pub fn octagon_faces() -> Fixture {
    let mut face_lengths = vec![8; 8];
    face_lengths.push(20);
    Fixture {
        name: "octagon_faces".into(),
        embedding: None,
        face_lengths,
        walks: Vec::new(),
        expected: Expectations {
            grinberg_set: published(vec![6, 18, 30, 42, 54]),
            grinberg_number: published(6),
            repeat_lower_bound: published(3),
            hamiltonian_number: None,
        },
    }
}

pub fn k4() -> Result<Fixture> {
    let coords = [(0.0, 1.0), (-1.0, -0.6), (1.0, -0.6), (0.0, 0.0)];
    let edges = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let g = PlanarEmbedding::from_straight_line(&coords, edges)?;
    Ok(embedded(
        "k4".into(),
        g,
        vec![ClosedWalk::new(vec![1, 2, 3, 4])?],
        Expectations {
            grinberg_set: derived(vec![0, 2]),
            grinberg_number: derived(0),
            repeat_lower_bound: derived(0),
            hamiltonian_number: immediate(4),
        },
    ))
}
