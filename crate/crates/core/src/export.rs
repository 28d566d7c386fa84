//! DOT and SVG renderings of diagrams.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::complex::Diagram;
use crate::duality::EdgeSet;
use crate::metrics::Graph;

/// Undirected DOT graph of the 1-skeleton. Edges in `highlight` are drawn
/// bold; `⋆` is labelled.
pub fn to_dot(d: &Diagram, highlight: Option<&EdgeSet>) -> String {
    let c = d.complex();
    let mut out = String::new();
    out.push_str("graph diagram {\n  node [shape=point];\n");
    let _ = writeln!(out, "  {} [shape=circle, label=\"*\", color=red];", d.base());
    for v in 0..c.vertex_count() {
        if v != d.base() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for e in 0..c.edge_count() {
        let (a, b) = c.edge_ends(e);
        let style = if highlight.is_some_and(|h| h.contains(e)) {
            ", penwidth=3"
        } else {
            ""
        };
        let _ = writeln!(out, "  {a} -- {b} [id=\"e{e}\"{style}];");
    }
    out.push_str("}\n");
    out
}

/// DOT graph of the dual: one node per face, the outer face labelled `r`.
pub fn dual_to_dot(d: &Diagram, highlight: Option<&EdgeSet>) -> String {
    let c = d.complex();
    let g = Graph::dual(c);
    let mut out = String::new();
    out.push_str("graph dual {\n  node [shape=point];\n");
    let _ = writeln!(out, "  {} [shape=circle, label=\"r\"];", d.outer_face());
    for f in 0..c.face_count() {
        if f != d.outer_face() {
            let _ = writeln!(out, "  {f};");
        }
    }
    for (e, (a, b)) in g.edge_list().into_iter().enumerate() {
        let style = if highlight.is_some_and(|h| h.contains(e)) {
            ", penwidth=3"
        } else {
            ""
        };
        let _ = writeln!(out, "  {a} -- {b} [id=\"e{e}\"{style}];");
    }
    out.push_str("}\n");
    out
}

/// Tutte barycentric layout: boundary vertices evenly spaced on the unit
/// circle in walk order, every other vertex relaxed towards the mean of its
/// neighbours.
pub fn tutte_layout(d: &Diagram, iterations: usize) -> Vec<(f64, f64)> {
    let c = d.complex();
    let n = c.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let walk = d.boundary_walk();
    let mut ring = Vec::new();
    for &x in &walk.darts {
        let v = c.origin(x);
        if !fixed[v] {
            fixed[v] = true;
            ring.push(v);
        }
    }
    if ring.is_empty() && n > 0 {
        fixed[d.base()] = true;
        ring.push(d.base());
    }
    for (i, &v) in ring.iter().enumerate() {
        let t = TAU * i as f64 / ring.len() as f64;
        pos[v] = (t.cos(), t.sin());
    }
    let g = Graph::skeleton(c);
    for _ in 0..iterations {
        for v in 0..n {
            if fixed[v] || g.degree(v) == 0 {
                continue;
            }
            let (mut sx, mut sy) = (0.0, 0.0);
            for &(w, _) in g.neighbors(v) {
                sx += pos[w].0;
                sy += pos[w].1;
            }
            let k = g.degree(v) as f64;
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

fn face_colour(degree: usize) -> &'static str {
    match degree {
        3 => "#f4d6a0",
        4 => "#c9dcef",
        5 => "#cfe8c4",
        _ => "#e4e4e4",
    }
}

/// SVG drawing with faces shaded by degree.
pub fn to_svg(d: &Diagram, iterations: usize) -> String {
    let c = d.complex();
    let pos = tutte_layout(d, iterations);
    let size = 800.0;
    let map = |(x, y): (f64, f64)| (size / 2.0 + x * size * 0.45, size / 2.0 - y * size * 0.45);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"none\">\n");
    for f in d.bounded_faces() {
        let pts: Vec<String> = c
            .face_darts(f)
            .iter()
            .map(|&x| {
                let (px, py) = map(pos[c.origin(x)]);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"{}\"/>",
            pts.join(" "),
            face_colour(c.face_darts(f).len())
        );
    }
    out.push_str("</g>\n<g stroke=\"#333\" stroke-width=\"0.6\">\n");
    for e in 0..c.edge_count() {
        let (a, b) = c.edge_ends(e);
        let (x1, y1) = map(pos[a]);
        let (x2, y2) = map(pos[b]);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>"
        );
    }
    out.push_str("</g>\n");
    let (bx, by) = map(pos[d.base()]);
    let _ = writeln!(out, "<circle cx=\"{bx:.2}\" cy=\"{by:.2}\" r=\"5\" fill=\"red\"/>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn dot_lists_every_edge() {
        let d = grid_1x2();
        let dot = to_dot(&d, None);
        assert_eq!(dot.matches(" -- ").count(), 7);
        assert!(dot.starts_with("graph diagram {"));
        let dual = dual_to_dot(&d, None);
        assert_eq!(dual.matches(" -- ").count(), 7);
    }

    #[test]
    fn layout_fixes_boundary_on_circle() {
        let d = grid_1x2();
        let pos = tutte_layout(&d, 50);
        for &(x, y) in &pos {
            assert!(((x * x + y * y).sqrt() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn svg_has_faces() {
        let d = grid_1x2();
        let svg = to_svg(&d, 50);
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert_eq!(svg.matches("<line").count(), 7);
    }
}
