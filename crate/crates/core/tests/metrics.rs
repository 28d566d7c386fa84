mod common;

use dualdiam_core::constructions::{assemble_delta, fatten, TrivalentTree};
use dualdiam_core::metrics::{metrics_report, Graph};

/// All-pairs shortest paths by Floyd–Warshall straight from the edge list.
fn floyd_diameter(vertex_count: usize, edges: &[(usize, usize)]) -> usize {
    const INF: usize = usize::MAX / 4;
    let mut dist = vec![vec![INF; vertex_count]; vertex_count];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in edges {
        if a != b {
            dist[a][b] = 1;
            dist[b][a] = 1;
        }
    }
    for k in 0..vertex_count {
        for i in 0..vertex_count {
            for j in 0..vertex_count {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    dist.iter().flatten().copied().max().unwrap()
}

#[test]
fn delta_one_diameters_match_floyd_warshall() {
    let delta = assemble_delta(1, None).unwrap();
    let c = delta.diagram.complex();
    let edges: Vec<(usize, usize)> = (0..c.edge_count()).map(|e| c.edge_ends(e)).collect();
    let g = Graph::skeleton(c);
    assert_eq!(g.diameter().unwrap(), floyd_diameter(c.vertex_count(), &edges));
    let gd = Graph::dual(c);
    assert_eq!(
        gd.diameter().unwrap(),
        floyd_diameter(gd.vertex_count(), &gd.edge_list())
    );
    assert!(g.double_sweep().unwrap() <= g.diameter().unwrap());
}

#[test]
fn corpus_diameters_match_floyd_warshall() {
    for (name, d) in common::corpus() {
        let c = d.complex();
        let edges: Vec<(usize, usize)> = (0..c.edge_count()).map(|e| c.edge_ends(e)).collect();
        assert_eq!(
            Graph::skeleton(c).diameter().unwrap(),
            floyd_diameter(c.vertex_count(), &edges),
            "{name}"
        );
    }
}

#[test]
fn fattened_vertices_stay_near_boundary() {
    for n in 1..=3 {
        let fat = fatten(&TrivalentTree::new(n, None), n).unwrap();
        let g = Graph::skeleton(fat.diagram.complex());
        let dist = g.bfs_filtered(&fat.boundary, |_| true);
        assert!(dist.iter().all(|&x| (x as usize) < n), "n = {n}");
    }
}

#[test]
/// Unmerged degree-two vertices on the outer cycle of a ring carry no radial
/// edge, so this bound does not hold for the pentagon ring profile in use.
fn delta_two_interior_within_rings_of_boundary() {
    let delta = assemble_delta(2, None).unwrap();
    let d = &delta.diagram;
    let c = d.complex();
    let g = Graph::skeleton(c);
    let walk = d.boundary_walk();
    let boundary: Vec<usize> = walk.vertices(c);
    let dist = g.bfs_filtered(&boundary, |_| true);
    let limit = 1 + delta.metadata.skirt_rings;
    let worst = (0..delta.fattened_vertices).map(|v| dist[v] as usize).max().unwrap();
    assert!(worst <= limit, "farthest A_2 vertex at {worst}, limit {limit}");
}

#[test]
fn report_agrees_with_graphs() {
    let delta = assemble_delta(2, None).unwrap();
    let r = metrics_report(&delta.diagram).unwrap();
    let c = delta.diagram.complex();
    assert_eq!(r.diam_g, Graph::skeleton(c).diameter().unwrap());
    assert_eq!(r.diam_gdual, Graph::dual(c).diameter().unwrap());
}

#[test]
fn skirt_rings_cost_at_most_two_steps_each() {
    for k in [8, 16, 48, 207] {
        let a = dualdiam_core::constructions::pentagon_annulus(k).unwrap();
        let g = Graph::skeleton(&a.complex);
        let dist = g.bfs_filtered(&a.inner, |_| true);
        let far = a.outer.iter().map(|&v| dist[v] as usize).max().unwrap();
        let near = a.outer.iter().map(|&v| dist[v] as usize).min().unwrap();
        assert_eq!(near, a.rings, "k = {k}");
        assert!(far <= 2 * a.rings, "k = {k}: {far}");
    }
}
