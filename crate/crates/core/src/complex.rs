//! Rotation-system representation of embedded planar multigraphs and of
//! diagrams (planar contractible 2-complexes with a base vertex).
//!
//! Conventions used throughout the crate:
//!
//! * every edge is a pair of darts related by `opposite`;
//! * `next(d)` is the dart following `d` counterclockwise around `origin(d)`;
//! * faces are the orbits of `face_succ = next ∘ opposite`. With
//!   counterclockwise rotations each face lies to the *right* of its orbit, so
//!   bounded faces are traversed clockwise and the outer face orbit runs
//!   anticlockwise around the diagram with the diagram on its left. The
//!   boundary walk is exactly the outer orbit.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Schema version written into every JSON document produced by this crate.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarComplex {
    origin: Vec<usize>,
    opposite: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    vertex_count: usize,
    vertex_dart: Vec<Option<usize>>,
    edge_of: Vec<usize>,
    edges: Vec<[usize; 2]>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

impl PlanarComplex {
    /// Builds a complex from a raw dart table, deriving edges and faces and
    /// checking every structural invariant.
    ///
    /// The vertex set is `0..=max(origin)`; a table without darts is the
    /// single-vertex complex, which has one (empty) face.
    pub fn from_darts(origin: Vec<usize>, opposite: Vec<usize>, next: Vec<usize>) -> Result<Self> {
        let n = origin.len();
        if opposite.len() != n || next.len() != n {
            return Err(Error::Malformed(format!(
                "dart table columns differ in length ({}, {}, {})",
                n,
                opposite.len(),
                next.len()
            )));
        }
        for d in 0..n {
            let o = opposite[d];
            if o >= n || o == d || opposite[o] != d {
                return Err(Error::NonInvolutiveOpposite { dart: d });
            }
        }

        let vertex_count = origin.iter().max().map_or(1, |&m| m + 1);
        let mut prev = vec![usize::MAX; n];
        for d in 0..n {
            let s = next[d];
            if s >= n {
                return Err(Error::BrokenRotation {
                    reason: format!("next[{d}] = {s} is out of range"),
                });
            }
            if prev[s] != usize::MAX {
                return Err(Error::BrokenRotation {
                    reason: format!("dart {s} has two rotation predecessors"),
                });
            }
            if origin[s] != origin[d] {
                return Err(Error::BrokenRotation {
                    reason: format!("next[{d}] = {s} leaves vertex {}", origin[d]),
                });
            }
            prev[s] = d;
        }

        let mut vertex_dart = vec![None; vertex_count];
        let mut vertex_degree = vec![0usize; vertex_count];
        for d in 0..n {
            vertex_degree[origin[d]] += 1;
            if vertex_dart[origin[d]].is_none() {
                vertex_dart[origin[d]] = Some(d);
            }
        }
        if n > 0 {
            for (v, first) in vertex_dart.iter().enumerate() {
                let Some(first) = *first else {
                    // an isolated vertex in a complex with edges
                    return Err(Error::Disconnected);
                };
                let mut len = 1;
                let mut d = next[first];
                while d != first {
                    len += 1;
                    d = next[d];
                }
                if len != vertex_degree[v] {
                    return Err(Error::BrokenRotation {
                        reason: format!("rotation at vertex {v} splits into several cycles"),
                    });
                }
            }
        }

        let mut edge_of = vec![usize::MAX; n];
        let mut edges = Vec::with_capacity(n / 2);
        for d in 0..n {
            if d < opposite[d] {
                edge_of[d] = edges.len();
                edge_of[opposite[d]] = edges.len();
                edges.push([d, opposite[d]]);
            }
        }

        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let Some(first) = vertex_dart[v] else { continue };
            let mut d = first;
            loop {
                let w = origin[opposite[d]];
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
                d = next[d];
                if d == first {
                    break;
                }
            }
        }
        if reached != vertex_count {
            return Err(Error::Disconnected);
        }

        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for d in 0..n {
            if face_of[d] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut orbit = Vec::new();
            let mut x = d;
            while face_of[x] == usize::MAX {
                face_of[x] = f;
                orbit.push(x);
                x = next[opposite[x]];
            }
            faces.push(orbit);
        }
        if n == 0 {
            faces.push(Vec::new());
        }

        let (v, e, f) = (vertex_count, edges.len(), faces.len());
        if v + f != e + 2 {
            return Err(Error::NonPlanarEuler { v, e, f });
        }

        Ok(Self {
            origin,
            opposite,
            next,
            prev,
            vertex_count,
            vertex_dart,
            edge_of,
            edges,
            face_of,
            faces,
        })
    }

    /// Builds a complex from per-vertex counterclockwise lists of incident
    /// edge ids. Edge `e = (a, b)` owns darts `2e` (at `a`) and `2e + 1` (at
    /// `b`); a loop is listed twice at its vertex, first for dart `2e`.
    pub fn from_rotations(vertex_count: usize, edge_ends: &[(usize, usize)], rotations: &[Vec<usize>]) -> Result<Self> {
        if rotations.len() != vertex_count {
            return Err(Error::Malformed(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                vertex_count
            )));
        }
        let n = 2 * edge_ends.len();
        let mut origin = vec![usize::MAX; n];
        let mut opposite = vec![0; n];
        for (e, &(a, b)) in edge_ends.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::OutOfRange {
                    kind: "vertex",
                    index: a.max(b),
                });
            }
            opposite[2 * e] = 2 * e + 1;
            opposite[2 * e + 1] = 2 * e;
        }
        let mut next = vec![usize::MAX; n];
        for (v, rot) in rotations.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &e in rot {
                let &(a, b) = edge_ends.get(e).ok_or(Error::OutOfRange { kind: "edge", index: e })?;
                let d = if a == v && origin[2 * e] == usize::MAX {
                    2 * e
                } else if b == v && origin[2 * e + 1] == usize::MAX {
                    2 * e + 1
                } else {
                    return Err(Error::BrokenRotation {
                        reason: format!("edge {e} listed too often at vertex {v}"),
                    });
                };
                origin[d] = v;
                darts.push(d);
            }
            for i in 0..darts.len() {
                next[darts[i]] = darts[(i + 1) % darts.len()];
            }
        }
        if let Some(d) = origin.iter().position(|&o| o == usize::MAX) {
            return Err(Error::BrokenRotation {
                reason: format!("edge {} missing from a rotation", d / 2),
            });
        }
        if n == 0 && vertex_count != 1 {
            return Err(Error::Disconnected);
        }
        let c = Self::from_darts(origin, opposite, next)?;
        if c.vertex_count != vertex_count {
            return Err(Error::Disconnected);
        }
        Ok(c)
    }

    /// Builds a complex from bounded faces given as counterclockwise vertex
    /// cycles (interior on the left). Edges are identified by their vertex
    /// pair, so the result is a simple graph. Returns the complex together
    /// with the faces that were not listed (the outer face of a disc, or
    /// the two boundary faces of an annulus).
    pub fn from_face_cycles(vertex_count: usize, cycles: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        let mut dart_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut origin = Vec::new();
        let mut opposite = Vec::new();
        let mut claimed = Vec::new();
        let mut dart = |a: usize, b: usize, origin: &mut Vec<usize>, opposite: &mut Vec<usize>| {
            if let Some(&d) = dart_of.get(&(a, b)) {
                return d;
            }
            let d = origin.len();
            origin.extend([a, b]);
            opposite.extend([d + 1, d]);
            dart_of.insert((a, b), d);
            dart_of.insert((b, a), d + 1);
            d
        };

        let mut next_partial: Vec<usize> = Vec::new();
        let mut pending: Vec<(usize, usize)> = Vec::new();
        for cycle in cycles {
            let k = cycle.len();
            if k < 3 {
                return Err(Error::Malformed(format!("face cycle of length {k}")));
            }
            for i in 0..k {
                let (u, v) = (cycle[i], cycle[(i + 1) % k]);
                if u >= vertex_count || v >= vertex_count || u == v {
                    return Err(Error::Malformed(format!("bad face edge ({u}, {v})")));
                }
                // orbit dart of this face is v -> u
                let d = dart(v, u, &mut origin, &mut opposite);
                claimed.resize(origin.len(), false);
                if claimed[d] {
                    return Err(Error::BrokenRotation {
                        reason: format!("directed edge {v}->{u} used by two faces"),
                    });
                }
                claimed[d] = true;
            }
            for i in 0..k {
                let prev = cycle[(i + k - 1) % k];
                let cur = cycle[i];
                let succ = cycle[(i + 1) % k];
                let a = dart(cur, succ, &mut origin, &mut opposite);
                let b = dart(cur, prev, &mut origin, &mut opposite);
                pending.push((a, b));
            }
        }
        next_partial.resize(origin.len(), usize::MAX);
        let mut has_pred = vec![false; origin.len()];
        for (a, b) in pending {
            if next_partial[a] != usize::MAX {
                return Err(Error::BrokenRotation {
                    reason: format!("dart {a} gets two rotation successors"),
                });
            }
            next_partial[a] = b;
            has_pred[b] = true;
        }

        // Close the open chains around boundary vertices.
        let mut tails: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        let mut heads: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for d in 0..origin.len() {
            if next_partial[d] == usize::MAX {
                tails[origin[d]].push(d);
            }
            if !has_pred[d] {
                heads[origin[d]].push(d);
            }
        }
        for v in 0..vertex_count {
            match (tails[v].as_slice(), heads[v].as_slice()) {
                ([], []) => {}
                ([t], [h]) => next_partial[*t] = *h,
                _ => {
                    return Err(Error::BrokenRotation {
                        reason: format!("vertex {v} is a pinch point of the face list"),
                    })
                }
            }
        }

        let claimed_len = origin.len();
        claimed.resize(claimed_len, false);
        let complex = Self::from_darts(origin, opposite, next_partial)?;
        if complex.vertex_count != vertex_count {
            return Err(Error::Disconnected);
        }
        let mut free: Vec<usize> = (0..claimed_len)
            .filter(|&d| !claimed[d])
            .map(|d| complex.face_of[d])
            .collect();
        free.sort_unstable();
        free.dedup();
        Ok((complex, free))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn origin(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.origin[self.opposite[d]]
    }

    pub fn opposite(&self, d: usize) -> usize {
        self.opposite[d]
    }

    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    /// Successor of `d` along its face orbit.
    pub fn face_succ(&self, d: usize) -> usize {
        self.next[self.opposite[d]]
    }

    pub fn edge_of(&self, d: usize) -> usize {
        self.edge_of[d]
    }

    /// The two darts of edge `e`, lower id first.
    pub fn edge_darts(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e];
        (self.origin[a], self.origin[b])
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// Darts of face `f` in orbit order, starting from the lowest dart id.
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn darts_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let first = self.vertex_dart[v];
        let mut cur = first;
        std::iter::from_fn(move || {
            let d = cur?;
            let n = self.next[d];
            cur = if Some(n) == first { None } else { Some(n) };
            Some(d)
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).count()
    }

    pub fn origins(&self) -> &[usize] {
        &self.origin
    }

    pub fn opposites(&self) -> &[usize] {
        &self.opposite
    }

    pub fn nexts(&self) -> &[usize] {
        &self.next
    }
}

/// A planar contractible 2-complex with a designated outer face and a base
/// vertex on its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    complex: PlanarComplex,
    outer_face: usize,
    base: usize,
}

impl Diagram {
    pub fn new(complex: PlanarComplex, outer_face: usize, base: usize) -> Result<Self> {
        if outer_face >= complex.face_count() {
            return Err(Error::OutOfRange {
                kind: "face",
                index: outer_face,
            });
        }
        if base >= complex.vertex_count() {
            return Err(Error::OutOfRange {
                kind: "vertex",
                index: base,
            });
        }
        let on_boundary =
            complex.dart_count() == 0 || complex.faces[outer_face].iter().any(|&d| complex.origin[d] == base);
        if !on_boundary {
            return Err(Error::BaseNotOnBoundary { base });
        }
        Ok(Self {
            complex,
            outer_face,
            base,
        })
    }

    /// The diagram consisting of the single vertex `⋆`.
    pub fn point() -> Self {
        let complex =
            PlanarComplex::from_darts(Vec::new(), Vec::new(), Vec::new()).expect("empty dart table is the point");
        Self {
            complex,
            outer_face: 0,
            base: 0,
        }
    }

    pub fn complex(&self) -> &PlanarComplex {
        &self.complex
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// The closed anticlockwise walk around the outer face starting at the
    /// first occurrence of `⋆` in the outer orbit.
    pub fn boundary_walk(&self) -> Walk {
        let orbit = &self.complex.faces[self.outer_face];
        let Some(start) = orbit.iter().position(|&d| self.complex.origin[d] == self.base) else {
            return Walk { darts: Vec::new() };
        };
        let mut darts = Vec::with_capacity(orbit.len());
        darts.extend_from_slice(&orbit[start..]);
        darts.extend_from_slice(&orbit[..start]);
        Walk { darts }
    }

    pub fn boundary_length(&self) -> usize {
        self.complex.faces[self.outer_face].len()
    }

    pub fn face_degree(&self, f: usize) -> Result<usize> {
        if f == self.outer_face {
            return Err(Error::OuterFaceQueried { face: f });
        }
        self.complex
            .faces
            .get(f)
            .map(Vec::len)
            .ok_or(Error::OutOfRange { kind: "face", index: f })
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.complex.face_count()).filter(move |&f| f != self.outer_face)
    }

    /// Number of 2-cells.
    pub fn area(&self) -> usize {
        self.complex.face_count() - 1
    }

    /// Largest bounded face degree, 0 when there are no 2-cells.
    pub fn max_cell_degree(&self) -> usize {
        self.bounded_faces()
            .map(|f| self.complex.faces[f].len())
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> DiagramJson {
        let c = &self.complex;
        DiagramJson {
            version: SCHEMA_VERSION,
            darts: (0..c.dart_count())
                .map(|d| DartRecord {
                    opposite: c.opposite[d],
                    next: c.next[d],
                    origin: c.origin[d],
                })
                .collect(),
            outer_face: self.outer_face,
            base: self.base,
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        if json.version != SCHEMA_VERSION {
            return Err(Error::Malformed(format!("unsupported schema version {}", json.version)));
        }
        let origin = json.darts.iter().map(|d| d.origin).collect();
        let opposite = json.darts.iter().map(|d| d.opposite).collect();
        let next = json.darts.iter().map(|d| d.next).collect();
        let complex = PlanarComplex::from_darts(origin, opposite, next)?;
        Self::new(complex, json.outer_face, json.base)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("diagram json serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_json(&json)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartRecord {
    pub opposite: usize,
    pub next: usize,
    pub origin: usize,
}

/// Versioned on-disk form of a [`Diagram`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub version: u32,
    pub darts: Vec<DartRecord>,
    pub outer_face: usize,
    pub base: usize,
}

/// A walk given by its darts; consecutive darts are head-to-tail.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Walk {
    pub darts: Vec<usize>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Origins of the darts, in order.
    pub fn vertices(&self, c: &PlanarComplex) -> Vec<usize> {
        self.darts.iter().map(|&d| c.origin(d)).collect()
    }

    pub fn is_consecutive(&self, c: &PlanarComplex) -> bool {
        self.darts.windows(2).all(|w| c.head(w[0]) == c.origin(w[1]))
    }

    pub fn is_closed_at(&self, c: &PlanarComplex, v: usize) -> bool {
        match (self.darts.first(), self.darts.last()) {
            (Some(&a), Some(&b)) => c.origin(a) == v && c.head(b) == v && self.is_consecutive(c),
            _ => true,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Boundary of a polygon with `k` vertices, interior as the single 2-cell.
    pub fn polygon(k: usize) -> Diagram {
        let cycle: Vec<usize> = (0..k).collect();
        let (c, free) = PlanarComplex::from_face_cycles(k, &[cycle]).unwrap();
        Diagram::new(c, free[0], 0).unwrap()
    }

    pub fn lone_edge() -> Diagram {
        let c = PlanarComplex::from_rotations(2, &[(0, 1)], &[vec![0], vec![0]]).unwrap();
        Diagram::new(c, 0, 0).unwrap()
    }

    /// Two unit squares side by side: vertices 0..3 bottom row, 3..6 top row.
    pub fn grid_1x2() -> Diagram {
        let faces = vec![vec![0, 1, 4, 3], vec![1, 2, 5, 4]];
        let (c, free) = PlanarComplex::from_face_cycles(6, &faces).unwrap();
        Diagram::new(c, free[0], 0).unwrap()
    }

    /// A square 0-1-2-3 with a pendant edge 0-4 hanging into the outer face.
    pub fn square_with_pendant(base: usize) -> Diagram {
        // edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,0) 4:(0,4)
        let ends = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)];
        // ccw: square at (0,0),(1,0),(1,1),(0,1); pendant heads south-west.
        let rot = vec![vec![0, 3, 4], vec![1, 0], vec![2, 1], vec![3, 2], vec![4]];
        let c = PlanarComplex::from_rotations(5, &ends, &rot).unwrap();
        let outer = (0..c.face_count()).find(|&f| c.face_darts(f).len() == 6).unwrap();
        Diagram::new(c, outer, base).unwrap()
    }

    /// K4 drawn with vertex 3 in the middle of triangle 0,1,2.
    pub fn k4() -> PlanarComplex {
        let faces = vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]];
        PlanarComplex::from_face_cycles(4, &faces).unwrap().0
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn four_cycle_has_two_faces() {
        let ends = [(0, 1), (1, 2), (2, 3), (3, 0)];
        let rot = vec![vec![0, 3], vec![1, 0], vec![2, 1], vec![3, 2]];
        let c = PlanarComplex::from_rotations(4, &ends, &rot).unwrap();
        assert_eq!((c.vertex_count(), c.dart_count(), c.face_count()), (4, 8, 2));
    }

    #[test]
    fn single_edge_has_one_face() {
        let d = lone_edge();
        assert_eq!(d.complex().face_count(), 1);
        assert_eq!(d.boundary_length(), 2);
        assert_eq!(d.boundary_walk().len(), 2);
    }

    #[test]
    fn k4_satisfies_euler() {
        let c = k4();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (4, 6, 4));
    }

    #[test]
    fn square_boundary_walk_is_anticlockwise() {
        let d = polygon(4);
        let w = d.boundary_walk();
        assert_eq!(w.len(), 4);
        assert!(w.is_closed_at(d.complex(), 0));
        // anticlockwise around 0,1,2,3 means 0 -> 1 -> 2 -> 3
        assert_eq!(w.vertices(d.complex()), vec![0, 1, 2, 3]);
        let inner = d.bounded_faces().next().unwrap();
        assert_eq!(d.face_degree(inner), Ok(4));
        assert_eq!(
            d.face_degree(d.outer_face()),
            Err(Error::OuterFaceQueried { face: d.outer_face() })
        );
    }

    #[test]
    fn pendant_edge_counted_twice() {
        let d = square_with_pendant(4);
        let w = d.boundary_walk();
        assert_eq!(w.len(), 6);
        assert!(w.is_closed_at(d.complex(), 4));
    }

    #[test]
    fn base_must_lie_on_boundary() {
        let faces = vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]];
        let (c, free) = PlanarComplex::from_face_cycles(4, &faces).unwrap();
        assert_eq!(Diagram::new(c, free[0], 3), Err(Error::BaseNotOnBoundary { base: 3 }));
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            PlanarComplex::from_darts(vec![0, 1], vec![0, 1], vec![0, 1]),
            Err(Error::NonInvolutiveOpposite { dart: 0 })
        );
        assert!(matches!(
            PlanarComplex::from_darts(vec![0, 1], vec![1, 0], vec![1, 0]),
            Err(Error::BrokenRotation { .. })
        ));
        // two disjoint edges
        assert_eq!(
            PlanarComplex::from_darts(vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![0, 1, 2, 3]),
            Err(Error::Disconnected)
        );
        // K4 with a rotation that embeds it on the torus: reverse the rotation at one vertex
        let c = k4();
        let mut next = c.nexts().to_vec();
        let at3: Vec<usize> = c.darts_at(3).collect();
        for i in 0..at3.len() {
            next[at3[(i + 1) % 3]] = at3[i];
        }
        assert!(matches!(
            PlanarComplex::from_darts(c.origins().to_vec(), c.opposites().to_vec(), next),
            Err(Error::NonPlanarEuler { .. })
        ));
    }

    #[test]
    fn face_degrees_and_boundary_sum_to_twice_edges() {
        for d in [polygon(3), polygon(5), grid_1x2(), square_with_pendant(0), lone_edge()] {
            let total: usize =
                d.bounded_faces().map(|f| d.face_degree(f).unwrap()).sum::<usize>() + d.boundary_length();
            assert_eq!(total, 2 * d.complex().edge_count());
        }
    }

    #[test]
    fn point_diagram() {
        let p = Diagram::point();
        assert_eq!(p.complex().vertex_count(), 1);
        assert_eq!(p.boundary_length(), 0);
        assert_eq!(Diagram::from_json_str(&p.to_json_string()).unwrap(), p);
    }

    proptest! {
        #[test]
        fn json_round_trip_is_identity(k in 3usize..9, base in 0usize..9) {
            let d = polygon(k);
            let d = Diagram::new(d.complex().clone(), d.outer_face(), base % k).unwrap();
            let s = d.to_json_string();
            let back = Diagram::from_json_str(&s).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(back.to_json_string(), s);
        }
    }
}
