//! Random small diagrams, grown by local edits of a rotation system.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Diagram, PlanarComplex};
use crate::error::Result;

/// A mutable rotation system supporting planarity-preserving edits.
#[derive(Clone, Debug)]
pub struct MapEditor {
    origin: Vec<usize>,
    opposite: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    vertex_count: usize,
}

impl MapEditor {
    /// A lone edge.
    pub fn edge() -> Self {
        Self {
            origin: vec![0, 1],
            opposite: vec![1, 0],
            next: vec![0, 1],
            prev: vec![0, 1],
            vertex_count: 2,
        }
    }

    /// A cycle of length `k >= 2`; `k = 2` gives a pair of parallel edges.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 2);
        let mut ed = Self::edge();
        let first = 0;
        let mut last = 1;
        for _ in 2..k {
            let w = ed.add_pendant(last);
            last = ed.dart_from(w);
        }
        ed.insert_edge(last, first);
        ed
    }

    fn dart_from(&self, v: usize) -> usize {
        (0..self.origin.len()).find(|&d| self.origin[d] == v).unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn face_succ(&self, d: usize) -> usize {
        self.next[self.opposite[d]]
    }

    pub fn orbit(&self, d: usize) -> Vec<usize> {
        let mut out = vec![d];
        let mut x = self.face_succ(d);
        while x != d {
            out.push(x);
            x = self.face_succ(x);
        }
        out
    }

    fn new_dart_pair(&mut self, a: usize, b: usize) -> (usize, usize) {
        let x = self.origin.len();
        self.origin.extend([a, b]);
        self.opposite.extend([x + 1, x]);
        self.next.extend([x, x + 1]);
        self.prev.extend([x, x + 1]);
        (x, x + 1)
    }

    /// Places dart `x` just before `d` in the rotation at `origin(d)`, i.e.
    /// in the corner of `d`'s face preceding `d`.
    fn insert_before(&mut self, x: usize, d: usize) {
        let p = self.prev[d];
        self.next[p] = x;
        self.prev[x] = p;
        self.next[x] = d;
        self.prev[d] = x;
    }

    /// Adds an edge between the corners before `d1` and before `d2`, which
    /// must lie on the same face. Returns the new darts at `origin(d1)` and
    /// `origin(d2)`; the first lies on the face containing `d2`.
    pub fn insert_edge(&mut self, d1: usize, d2: usize) -> (usize, usize) {
        let (x1, x2) = self.new_dart_pair(self.origin[d1], self.origin[d2]);
        self.insert_before(x1, d1);
        self.insert_before(x2, d2);
        (x1, x2)
    }

    /// Hangs a new leaf into the corner before `d`; returns the leaf.
    pub fn add_pendant(&mut self, d: usize) -> usize {
        let w = self.vertex_count;
        self.vertex_count += 1;
        let (x, _) = self.new_dart_pair(self.origin[d], w);
        self.insert_before(x, d);
        w
    }

    /// Splits the edge of dart `y` with a new degree-two vertex.
    pub fn subdivide(&mut self, y: usize) -> usize {
        let z = self.opposite[y];
        let w = self.vertex_count;
        self.vertex_count += 1;
        let (w1, w2) = self.new_dart_pair(w, w);
        // w1 pairs with y, w2 with z
        self.opposite[y] = w1;
        self.opposite[w1] = y;
        self.opposite[z] = w2;
        self.opposite[w2] = z;
        self.next[w1] = w2;
        self.prev[w1] = w2;
        self.next[w2] = w1;
        self.prev[w2] = w1;
        w
    }

    pub fn finish(self, outer_dart: usize, base: usize) -> Result<Diagram> {
        let c = PlanarComplex::from_darts(self.origin, self.opposite, self.next)?;
        let outer = c.face_of(outer_dart);
        Diagram::new(c, outer, base)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RandomDiagramParams {
    /// Grow until at least this many edges exist.
    pub target_edges: usize,
    /// Allow leaves hanging into the outer face.
    pub pendants: bool,
}

impl Default for RandomDiagramParams {
    fn default() -> Self {
        Self {
            target_edges: 10,
            pendants: true,
        }
    }
}

/// Grows a random diagram by chords in 2-cells, edge subdivisions, ears
/// attached along the outer face and (optionally) pendant edges.
pub fn random_diagram<R: Rng>(rng: &mut R, params: RandomDiagramParams) -> Result<Diagram> {
    let mut ed = match rng.gen_range(0..6) {
        0 => MapEditor::edge(),
        k => MapEditor::cycle(k.min(4) + 1),
    };
    // the orbit of dart 1 is the outer face of the start configuration
    let mut outer_dart = 1;
    while ed.edge_count() < params.target_edges {
        let outer = ed.orbit(outer_dart);
        match rng.gen_range(0..4) {
            0 => {
                // chord inside a random 2-cell
                let mut seen = vec![false; ed.origin.len()];
                for &d in &outer {
                    seen[d] = true;
                }
                let mut cells = Vec::new();
                for d in 0..ed.origin.len() {
                    if !seen[d] {
                        let orb = ed.orbit(d);
                        for &x in &orb {
                            seen[x] = true;
                        }
                        cells.push(orb);
                    }
                }
                let Some(cell) = cells.choose(rng) else { continue };
                let d1 = *cell.choose(rng).unwrap();
                let d2 = *cell.choose(rng).unwrap();
                if ed.origin[d1] != ed.origin[d2] {
                    ed.insert_edge(d1, d2);
                }
            }
            1 => {
                let y = rng.gen_range(0..ed.origin.len());
                ed.subdivide(y);
            }
            2 if params.pendants => {
                let d = *outer.choose(rng).unwrap();
                ed.add_pendant(d);
            }
            _ => {
                // ear: split the outer face; either side may stay outer
                let d1 = *outer.choose(rng).unwrap();
                let d2 = *outer.choose(rng).unwrap();
                if ed.origin[d1] == ed.origin[d2] {
                    continue;
                }
                let (x1, x2) = ed.insert_edge(d1, d2);
                if rng.gen_bool(0.5) {
                    ed.subdivide(x1);
                }
                outer_dart = if rng.gen_bool(0.5) { x1 } else { x2 };
            }
        }
    }
    let outer = ed.orbit(outer_dart);
    let base = ed.origin[*outer.choose(rng).unwrap()];
    ed.finish(outer_dart, base)
}

/// A reproducible corpus of `count` random diagrams with between
/// `min_edges` and `max_edges` edges and at least one 2-cell.
pub fn random_corpus(seed: u64, count: usize, min_edges: usize, max_edges: usize) -> Result<Vec<Diagram>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let target = rng.gen_range(min_edges..=max_edges.saturating_sub(1).max(min_edges));
        let pendants = rng.gen_bool(0.5);
        let d = random_diagram(
            &mut rng,
            RandomDiagramParams {
                target_edges: target,
                pendants,
            },
        )?;
        if d.area() > 0 && d.complex().edge_count() <= max_edges {
            out.push(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn corpus_respects_limits() {
        let corpus = random_corpus(7, 40, 4, 14).unwrap();
        assert_eq!(corpus.len(), 40);
        for d in &corpus {
            assert!(d.area() >= 1);
            assert!(d.complex().edge_count() <= 14);
        }
        assert_eq!(corpus, random_corpus(7, 40, 4, 14).unwrap());
    }

    #[test]
    fn cycles_build() {
        for k in 2..7 {
            let ed = MapEditor::cycle(k);
            let d = ed.finish(1, 0).unwrap();
            assert_eq!(d.complex().face_count(), 2);
            assert_eq!(d.boundary_length(), k);
        }
    }

    #[test]
    fn random_diagrams_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let d = random_diagram(
                &mut rng,
                RandomDiagramParams {
                    target_edges: 12,
                    pendants: true,
                },
            )
            .unwrap();
            let c = d.complex();
            assert!(c.edge_count() >= 12);
            let total: usize = d.bounded_faces().map(|f| d.face_degree(f).unwrap()).sum();
            assert_eq!(total + d.boundary_length(), 2 * c.edge_count());
            let back = Diagram::from_json_str(&d.to_json_string()).unwrap();
            assert_eq!(back, d);
        }
    }
}
