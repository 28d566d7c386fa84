#![allow(dead_code)]

use dualdiam_core::constructions::random::random_corpus;
use dualdiam_core::metrics::Graph;
use dualdiam_core::{Diagram, PlanarComplex};

pub fn polygon(k: usize) -> Diagram {
    let cycle: Vec<usize> = (0..k).collect();
    let (c, free) = PlanarComplex::from_face_cycles(k, &[cycle]).unwrap();
    Diagram::new(c, free[0], 0).unwrap()
}

pub fn lone_edge() -> Diagram {
    let c = PlanarComplex::from_rotations(2, &[(0, 1)], &[vec![0], vec![0]]).unwrap();
    Diagram::new(c, 0, 0).unwrap()
}

/// `w × h` grid of unit squares; vertex `(x, y)` is `y·(w+1) + x`, base at
/// the origin.
pub fn grid(w: usize, h: usize) -> Diagram {
    let id = |x: usize, y: usize| y * (w + 1) + x;
    let mut faces = Vec::new();
    for y in 0..h {
        for x in 0..w {
            faces.push(vec![id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)]);
        }
    }
    let (c, free) = PlanarComplex::from_face_cycles((w + 1) * (h + 1), &faces).unwrap();
    Diagram::new(c, free[0], 0).unwrap()
}

pub fn skeleton(d: &Diagram) -> Graph {
    Graph::skeleton(d.complex())
}

/// The named small diagrams plus a reproducible random corpus.
pub fn corpus() -> Vec<(String, Diagram)> {
    let mut out = vec![
        ("square".to_string(), polygon(4)),
        ("triangle".to_string(), polygon(3)),
        ("grid 1x2".to_string(), grid(2, 1)),
    ];
    for (i, d) in random_corpus(2024, 60, 4, 14).unwrap().into_iter().enumerate() {
        out.push((format!("random #{i}"), d));
    }
    out
}
