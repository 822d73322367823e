//! Embedded planar multigraphs given as rotation systems.
//!
//! Vertices and edges carry 1-based ids everywhere in the public API, matching
//! the graph file format. A dart is one end of an edge; dart `2(e-1)` sits at
//! the first endpoint of edge `e`, dart `2(e-1)+1` at the second.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: EdgeId, at_second_endpoint: bool) -> Self {
        Dart(2 * (edge - 1) + usize::from(at_second_endpoint))
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> EdgeId {
        self.0 / 2 + 1
    }

    pub fn at_second_endpoint(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    n: usize,
    /// 1-based endpoints, indexed by edge id - 1.
    edges: Vec<(VertexId, VertexId)>,
    /// Counterclockwise dart order, indexed by vertex id - 1.
    rotations: Vec<Vec<Dart>>,
    /// Position of each dart inside the rotation of its tail.
    position: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    /// Face index (0-based) for every dart.
    face_of_dart: Vec<usize>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// 1-based id of the face whose boundary contains `dart`.
    pub fn face_of(&self, dart: Dart) -> usize {
        self.face_of_dart[dart.index()] + 1
    }

    pub fn lengths(&self) -> Vec<u32> {
        self.faces.iter().map(|f| f.len() as u32).collect()
    }

    pub fn sorted_lengths(&self) -> Vec<u32> {
        let mut lengths = self.lengths();
        lengths.sort_unstable();
        lengths
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.entries[(u - 1) * self.n + (v - 1)]
    }

    pub fn max(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

impl PlanarEmbedding {
    /// Builds and validates an embedding. `rotations[v-1]` lists the edge ids
    /// around vertex `v` counterclockwise; each id is bound to the endpoint
    /// whose rotation it appears in.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>, rotations: Vec<Vec<EdgeId>>) -> Result<Self> {
        let embedding = Self::assemble(n, edges, rotations)?;
        embedding.check_connected()?;
        embedding.check_euler()?;
        Ok(embedding)
    }

    fn assemble(n: usize, edges: Vec<(VertexId, VertexId)>, rotations: Vec<Vec<EdgeId>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParams("graph needs at least one vertex".into()));
        }
        if rotations.len() != n {
            return Err(Error::BadParams(format!(
                "expected {n} rotations, got {}",
                rotations.len()
            )));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::UnknownVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { edge: i + 1, vertex: u });
            }
        }
        let m = edges.len();
        let mut placed = vec![false; 2 * m];
        let mut darts = Vec::with_capacity(n);
        for (vi, rotation) in rotations.into_iter().enumerate() {
            let vertex = vi + 1;
            let mut ring = Vec::with_capacity(rotation.len());
            for edge in rotation {
                if edge == 0 || edge > m {
                    return Err(Error::DanglingDart {
                        edge,
                        message: format!("rotation of vertex {vertex} names an unknown edge"),
                    });
                }
                let (u, v) = edges[edge - 1];
                let dart = if u == vertex {
                    Dart::new(edge, false)
                } else if v == vertex {
                    Dart::new(edge, true)
                } else {
                    return Err(Error::DanglingDart {
                        edge,
                        message: format!("edge is not incident to vertex {vertex}"),
                    });
                };
                if placed[dart.index()] {
                    return Err(Error::DanglingDart {
                        edge,
                        message: format!("appears twice in the rotation of vertex {vertex}"),
                    });
                }
                placed[dart.index()] = true;
                ring.push(dart);
            }
            darts.push(ring);
        }
        if let Some(missing) = placed.iter().position(|&p| !p) {
            let dart = Dart(missing);
            let (u, v) = edges[dart.edge() - 1];
            let at = if dart.at_second_endpoint() { v } else { u };
            return Err(Error::DanglingDart {
                edge: dart.edge(),
                message: format!("missing from the rotation of vertex {at}"),
            });
        }
        let mut position = vec![0; 2 * m];
        for ring in &darts {
            for (i, d) in ring.iter().enumerate() {
                position[d.index()] = i;
            }
        }
        Ok(PlanarEmbedding {
            n,
            edges,
            rotations: darts,
            position,
        })
    }

    /// Straight-line drawing: each rotation is the counterclockwise angular
    /// order of the incident edges around the vertex position.
    pub fn from_straight_line(coords: &[(f64, f64)], edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = coords.len();
        let mut incident: Vec<Vec<(f64, EdgeId)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(Error::UnknownVertex { vertex: u.max(v), n });
            }
            let angle = |a: VertexId, b: VertexId| {
                let (ax, ay) = coords[a - 1];
                let (bx, by) = coords[b - 1];
                (by - ay).atan2(bx - ax)
            };
            incident[u - 1].push((angle(u, v), i + 1));
            incident[v - 1].push((angle(v, u), i + 1));
        }
        let rotations = incident
            .into_iter()
            .map(|mut ring| {
                ring.sort_by(|a, b| a.0.total_cmp(&b.0));
                ring.into_iter().map(|(_, e)| e).collect()
            })
            .collect();
        Self::new(n, edges, rotations)
    }

    /// Parses the line-oriented graph file format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<Option<(VertexId, VertexId)>> = Vec::new();
        let mut rotations: Vec<Option<Vec<EdgeId>>> = Vec::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let kind = tokens.next().unwrap_or("");
            let fields: Vec<&str> = tokens.collect();
            let number = |s: &str| -> Result<usize> {
                s.parse::<usize>()
                    .map_err(|_| Error::syntax(line_no, format!("`{s}` is not a non-negative integer")))
            };
            match (kind, header) {
                ("p", None) => {
                    if fields.len() != 3 || fields[0] != "planar" {
                        return Err(Error::syntax(line_no, "header must read `p planar <n> <m>`"));
                    }
                    let n = number(fields[1])?;
                    let m = number(fields[2])?;
                    if n == 0 {
                        return Err(Error::syntax(line_no, "graph needs at least one vertex"));
                    }
                    header = Some((n, m));
                    edges = vec![None; m];
                    rotations = vec![None; n];
                }
                ("p", Some(_)) => return Err(Error::syntax(line_no, "duplicate header")),
                (_, None) => {
                    return Err(Error::syntax(
                        line_no,
                        "first non-comment line must be the `p planar` header",
                    ))
                }
                ("e", Some((n, m))) => {
                    if fields.len() != 3 {
                        return Err(Error::syntax(line_no, "edge line must read `e <id> <u> <v>`"));
                    }
                    let id = number(fields[0])?;
                    let u = number(fields[1])?;
                    let v = number(fields[2])?;
                    if id == 0 || id > m {
                        return Err(Error::syntax(line_no, format!("edge id {id} outside 1..{m}")));
                    }
                    if edges[id - 1].is_some() {
                        return Err(Error::syntax(line_no, format!("edge {id} declared twice")));
                    }
                    for w in [u, v] {
                        if w == 0 || w > n {
                            return Err(Error::syntax(line_no, format!("vertex {w} outside 1..{n}")));
                        }
                    }
                    if u == v {
                        return Err(Error::LoopEdge { edge: id, vertex: u });
                    }
                    edges[id - 1] = Some((u, v));
                }
                ("r", Some((n, _))) => {
                    if fields.len() < 2 {
                        return Err(Error::syntax(
                            line_no,
                            "rotation line must read `r <v> <k> <d_1> ... <d_k>`",
                        ));
                    }
                    let v = number(fields[0])?;
                    let k = number(fields[1])?;
                    if v == 0 || v > n {
                        return Err(Error::syntax(line_no, format!("vertex {v} outside 1..{n}")));
                    }
                    if fields.len() - 2 != k {
                        return Err(Error::syntax(
                            line_no,
                            format!("rotation announces {k} darts but lists {}", fields.len() - 2),
                        ));
                    }
                    if rotations[v - 1].is_some() {
                        return Err(Error::syntax(line_no, format!("rotation of vertex {v} given twice")));
                    }
                    let darts = fields[2..].iter().map(|s| number(s)).collect::<Result<Vec<_>>>()?;
                    rotations[v - 1] = Some(darts);
                }
                (other, Some(_)) => return Err(Error::syntax(line_no, format!("unknown line type `{other}`"))),
            }
        }

        let Some((n, _)) = header else {
            return Err(Error::syntax(last_line.max(1), "missing `p planar` header"));
        };
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| Error::syntax(last_line, format!("edge {} never declared", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        let rotations = rotations.into_iter().map(Option::unwrap_or_default).collect();
        Self::new(n, edges, rotations)
    }

    /// Serializes to the graph file format; `parse` reproduces the same darts.
    pub fn to_graph_file(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p planar {} {}", self.n, self.edges.len());
        for (i, (u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(out, "e {} {} {}", i + 1, u, v);
        }
        for (vi, ring) in self.rotations.iter().enumerate() {
            let _ = write!(out, "r {} {}", vi + 1, ring.len());
            for d in ring {
                let _ = write!(out, " {}", d.edge());
            }
            out.push('\n');
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n
    }

    pub fn endpoints(&self, edge: EdgeId) -> (VertexId, VertexId) {
        self.edges[edge - 1]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(u, v))| (i + 1, u, v))
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotations[v - 1]
    }

    pub fn tail(&self, dart: Dart) -> VertexId {
        let (u, v) = self.edges[dart.edge() - 1];
        if dart.at_second_endpoint() {
            v
        } else {
            u
        }
    }

    pub fn head(&self, dart: Dart) -> VertexId {
        self.tail(dart.reverse())
    }

    /// Counterclockwise successor of `dart` around its tail.
    pub fn next_ccw(&self, dart: Dart) -> Dart {
        let ring = &self.rotations[self.tail(dart) - 1];
        ring[(self.position[dart.index()] + 1) % ring.len()]
    }

    /// Number of darts at `v` (parallel edges counted separately).
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v - 1].len()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.rotations[v - 1].iter().map(|&d| self.head(d)).collect();
        set.into_iter().collect()
    }

    fn adjacency(&self) -> Vec<Vec<VertexId>> {
        self.vertices().map(|v| self.neighbors(v)).collect()
    }

    /// Lowest-id edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotations[u - 1]
            .iter()
            .filter(|&&d| self.head(d) == v)
            .map(|d| d.edge())
            .min()
    }

    /// First pair of parallel edges, if the graph is not simple.
    pub fn parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen = std::collections::HashMap::new();
        for (id, u, v) in self.edges() {
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Some((first, id));
            }
            seen.insert(key, id);
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_pair().is_none()
    }

    fn components(&self) -> usize {
        let adjacency = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start + 1];
            while let Some(v) = stack.pop() {
                for &w in &adjacency[v - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    fn check_connected(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }

    fn check_euler(&self) -> Result<()> {
        let faces = self.trace_faces().len();
        let (n, m) = (self.n, self.edges.len());
        let expected = 2 - n as i64 + m as i64;
        if faces as i64 == expected {
            Ok(())
        } else {
            Err(Error::NonPlanarEmbedding { n, m, faces, expected })
        }
    }

    /// Traces every face: after a dart enters vertex `w`, the boundary
    /// continues with the counterclockwise successor of its reverse at `w`.
    /// An edgeless graph has a single empty face.
    pub fn trace_faces(&self) -> FaceSet {
        let darts = 2 * self.edges.len();
        if darts == 0 {
            return FaceSet {
                faces: vec![Face {
                    id: 1,
                    boundary: Vec::new(),
                }],
                face_of_dart: Vec::new(),
            };
        }
        let mut face_of_dart = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let index = faces.len();
            let mut boundary = Vec::new();
            let mut dart = Dart(start);
            while face_of_dart[dart.index()] == usize::MAX {
                face_of_dart[dart.index()] = index;
                boundary.push(dart);
                dart = self.next_ccw(dart.reverse());
            }
            faces.push(Face {
                id: index + 1,
                boundary,
            });
        }
        FaceSet { faces, face_of_dart }
    }

    pub fn shortest_path_matrix(&self) -> DistanceMatrix {
        let adjacency = self.adjacency();
        let n = self.n;
        let mut entries = vec![u32::MAX; n * n];
        for source in 0..n {
            let row = &mut entries[source * n..(source + 1) * n];
            row[source] = 0;
            let mut queue = VecDeque::from([source + 1]);
            while let Some(v) = queue.pop_front() {
                let next = row[v - 1] + 1;
                for &w in &adjacency[v - 1] {
                    if row[w - 1] == u32::MAX {
                        row[w - 1] = next;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, entries }
    }

    pub fn diameter(&self) -> u32 {
        self.shortest_path_matrix().max()
    }

    /// Largest k such that the graph is k-connected, by unit-capacity flow on
    /// the vertex-split network for every non-adjacent pair.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        let adjacency = self.adjacency();
        let mut best = n - 1;
        for s in 1..=n {
            for t in s + 1..=n {
                if adjacency[s - 1].binary_search(&t).is_ok() {
                    continue;
                }
                best = best.min(disjoint_paths(&adjacency, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    /// Embedding with `extra[e-1]` additional copies of each edge `e`, each
    /// placed right after the original at its first endpoint and right before
    /// it at its second, so consecutive copies bound 2-gons. New edges get ids
    /// `m+1..` in order of their originals. Returns the new embedding and, for
    /// every original edge, the ids of its copies (innermost first).
    pub fn with_duplicates(&self, extra: &[usize]) -> (PlanarEmbedding, Vec<Vec<EdgeId>>) {
        assert_eq!(extra.len(), self.edges.len(), "one multiplicity per edge");
        let mut edges = self.edges.clone();
        let mut copies: Vec<Vec<EdgeId>> = vec![Vec::new(); self.edges.len()];
        for (i, &k) in extra.iter().enumerate() {
            for _ in 0..k {
                edges.push(self.edges[i]);
                copies[i].push(edges.len());
            }
        }
        let rotations = self
            .rotations
            .iter()
            .map(|ring| {
                let mut out = Vec::with_capacity(ring.len());
                for d in ring {
                    let chain = &copies[d.edge() - 1];
                    if d.at_second_endpoint() {
                        out.extend(chain.iter().rev());
                        out.push(d.edge());
                    } else {
                        out.push(d.edge());
                        out.extend(chain.iter());
                    }
                }
                out
            })
            .collect();
        let doubled = Self::assemble(self.n, edges, rotations)
            .expect("duplicating edges of a valid embedding keeps every dart bound");
        (doubled, copies)
    }

    /// Every edge gains one parallel copy embedded next to it.
    pub fn double_all_edges(&self) -> PlanarEmbedding {
        self.with_duplicates(&vec![1; self.edges.len()]).0
    }

    /// Edges whose removal disconnects the graph, ascending.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.n;
        let mut order = vec![0usize; n];
        let mut low = vec![0usize; n];
        let mut counter = 1;
        let mut found = Vec::new();
        // Iterative DFS; frames are (vertex, edge used to enter, next rotation index).
        let mut stack: Vec<(VertexId, EdgeId, usize)> = Vec::new();
        for root in 1..=n {
            if order[root - 1] != 0 {
                continue;
            }
            order[root - 1] = counter;
            low[root - 1] = counter;
            counter += 1;
            stack.push((root, 0, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, via, ref mut next) = *frame;
                let ring = &self.rotations[v - 1];
                if *next < ring.len() {
                    let d = ring[*next];
                    *next += 1;
                    if d.edge() == via {
                        continue;
                    }
                    let w = self.head(d);
                    if order[w - 1] == 0 {
                        order[w - 1] = counter;
                        low[w - 1] = counter;
                        counter += 1;
                        stack.push((w, d.edge(), 0));
                    } else {
                        low[v - 1] = low[v - 1].min(order[w - 1]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent - 1] = low[parent - 1].min(low[v - 1]);
                        if low[v - 1] > order[parent - 1] {
                            found.push(via);
                        }
                    }
                }
            }
        }
        found.sort_unstable();
        found
    }
}

/// Maximum number of internally vertex-disjoint s–t paths, capped at `cap`.
fn disjoint_paths(adjacency: &[Vec<VertexId>], s: VertexId, t: VertexId, cap: usize) -> usize {
    let n = adjacency.len();
    // Node 2i is the entry of vertex i+1, node 2i+1 its exit.
    let nodes = 2 * n;
    let big = n as i32 + 1;
    let mut capacity = vec![vec![0i32; nodes]; nodes];
    for v in 1..=n {
        let inner = if v == s || v == t { big } else { 1 };
        capacity[2 * (v - 1)][2 * (v - 1) + 1] = inner;
        for &w in &adjacency[v - 1] {
            capacity[2 * (v - 1) + 1][2 * (w - 1)] = big;
        }
    }
    let source = 2 * (s - 1) + 1;
    let sink = 2 * (t - 1);
    let mut flow = 0;
    while flow < cap {
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if parent[y] == usize::MAX && capacity[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            capacity[x][y] -= 1;
            capacity[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}
