//! Dual graphs and dual spanning trees.

use serde::{Deserialize, Serialize};

use crate::complex::{DartRecord, Diagram, PlanarComplex, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::metrics::{farthest, Graph, UNREACHED};

/// A subset of the edges of a graph, stored as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet(Vec<bool>);

impl EdgeSet {
    pub fn empty(edge_count: usize) -> Self {
        Self(vec![false; edge_count])
    }

    pub fn from_ids(edge_count: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; edge_count];
        for e in ids {
            *mask.get_mut(e).ok_or(Error::OutOfRange { kind: "edge", index: e })? = true;
        }
        Ok(Self(mask))
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0[e]
    }

    pub fn insert(&mut self, e: usize) {
        self.0[e] = true;
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e)
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| !b).collect())
    }
}

/// The dual map: dual dart `d` corresponds to primal dart `d`, leaves the
/// face of `d` and rotates along the face orbit. Dual edge `e` is therefore
/// dual to primal edge `e`.
#[derive(Clone, Debug)]
pub struct DualGraph {
    complex: PlanarComplex,
    root: usize,
}

impl DualGraph {
    pub fn complex(&self) -> &PlanarComplex {
        &self.complex
    }

    /// The dual vertex of the outer face.
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn graph(&self) -> Graph {
        Graph::skeleton(&self.complex)
    }

    /// Primal edge dual to dual edge `e`.
    pub fn dual_of(&self, e: usize) -> usize {
        e
    }

    pub fn to_json(&self, primal: &Diagram) -> DualJson {
        let c = &self.complex;
        DualJson {
            version: SCHEMA_VERSION,
            darts: (0..c.dart_count())
                .map(|d| DartRecord {
                    opposite: c.opposite(d),
                    next: c.next(d),
                    origin: c.origin(d),
                })
                .collect(),
            // the dual face around primal vertex ⋆
            outer_face: c.face_of(primal.complex().darts_at(primal.base()).next().unwrap_or(0)),
            base: self.root,
            dual_of: (0..c.edge_count()).map(|e| self.dual_of(e)).collect(),
        }
    }
}

/// JSON form of a dual graph: the diagram schema plus a cross-reference
/// from dual edges to primal edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualJson {
    pub version: u32,
    pub darts: Vec<DartRecord>,
    pub outer_face: usize,
    pub base: usize,
    pub dual_of: Vec<usize>,
}

pub fn dual_graph(d: &Diagram) -> Result<DualGraph> {
    let c = d.complex();
    if c.dart_count() == 0 {
        return Ok(DualGraph {
            complex: Diagram::point().complex().clone(),
            root: 0,
        });
    }
    let origin = (0..c.dart_count()).map(|x| c.face_of(x)).collect();
    let next = (0..c.dart_count()).map(|x| c.face_succ(x)).collect();
    let complex = PlanarComplex::from_darts(origin, c.opposites().to_vec(), next)?;
    Ok(DualGraph {
        complex,
        root: d.outer_face(),
    })
}

/// A spanning tree of the 1-skeleton together with its dual tree. Both are
/// edge sets over the shared edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTreePair {
    pub tree: EdgeSet,
    pub dual_tree: EdgeSet,
}

/// Checks that `edges` forms a spanning tree of `g`.
pub fn check_spanning_tree(g: &Graph, edges: &EdgeSet) -> Result<()> {
    let mut uf = UnionFind::new(g.vertex_count());
    for (e, (a, b)) in g.edge_list().into_iter().enumerate() {
        if edges.contains(e) && !uf.union(a, b) {
            return Err(Error::NotAcyclic);
        }
    }
    let k = edges.len();
    if k + 1 != g.vertex_count() {
        return Err(Error::NotSpanning {
            reason: format!("{k} edges for {} vertices", g.vertex_count()),
        });
    }
    Ok(())
}

pub fn dual_tree(d: &Diagram, tree: &EdgeSet) -> Result<SpanningTreePair> {
    let c = d.complex();
    if tree.universe() != c.edge_count() {
        return Err(Error::NotSpanning {
            reason: "edge set has wrong universe".into(),
        });
    }
    check_spanning_tree(&Graph::skeleton(c), tree)?;
    let dual_tree = tree.complement();
    check_spanning_tree(&Graph::dual(c), &dual_tree).map_err(|e| Error::NotSpanning {
        reason: format!("complement is not a dual spanning tree: {e}"),
    })?;
    Ok(SpanningTreePair {
        tree: tree.clone(),
        dual_tree,
    })
}

/// Diameter of the spanning tree `tree` of `g`, by two farthest-vertex
/// sweeps.
pub fn tree_diameter(g: &Graph, tree: &EdgeSet) -> Result<usize> {
    check_spanning_tree(g, tree).map_err(|_| Error::NotATree)?;
    if g.vertex_count() <= 1 {
        return Ok(0);
    }
    let first = g.bfs_filtered(&[0], |e| tree.contains(e));
    let far = farthest(&first)?;
    let second = g.bfs_filtered(&[far], |e| tree.contains(e));
    Ok(second.iter().copied().filter(|&x| x != UNREACHED).max().unwrap_or(0) as usize)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// All spanning trees of a small multigraph, by branching on edges.
pub fn enumerate_spanning_trees(g: &Graph) -> Vec<EdgeSet> {
    let edges = g.edge_list();
    let need = g.vertex_count().saturating_sub(1);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(edges: &[(usize, usize)], i: usize, need: usize, n: usize, chosen: &mut Vec<usize>, out: &mut Vec<EdgeSet>) {
        if chosen.len() == need {
            let mut uf = UnionFind::new(n);
            if chosen.iter().all(|&e| uf.union(edges[e].0, edges[e].1)) {
                out.push(EdgeSet::from_ids(edges.len(), chosen.iter().copied()).unwrap());
            }
            return;
        }
        if edges.len() - i < need - chosen.len() {
            return;
        }
        // prune early on a cycle
        let mut uf = UnionFind::new(n);
        if !chosen.iter().all(|&e| uf.union(edges[e].0, edges[e].1)) {
            return;
        }
        chosen.push(i);
        rec(edges, i + 1, need, n, chosen, out);
        chosen.pop();
        rec(edges, i + 1, need, n, chosen, out);
    }
    rec(&edges, 0, need, g.vertex_count(), &mut chosen, &mut out);
    out
}

/// Number of spanning trees by Kirchhoff's theorem, using fraction-free
/// (Bareiss) elimination on the reduced Laplacian.
pub fn count_spanning_trees(g: &Graph) -> u128 {
    let n = g.vertex_count();
    if n <= 1 {
        return 1;
    }
    let m = n - 1;
    let mut a = vec![vec![0i128; m]; m];
    for (x, y) in g.edge_list() {
        if x == y {
            continue;
        }
        for (p, q) in [(x, y), (y, x)] {
            if p < m {
                a[p][p] += 1;
                if q < m {
                    a[p][q] -= 1;
                }
            }
        }
    }
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..m).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[m - 1][m - 1]) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    fn brute_diameter(n: usize, edges: &[(usize, usize)]) -> usize {
        Graph::from_edges(n, edges).diameter().unwrap()
    }

    #[test]
    fn dual_of_square() {
        let d = polygon(4);
        let dual = dual_graph(&d).unwrap();
        let g = dual.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 4));
        assert_eq!(dual.complex().face_count(), 4);
    }

    #[test]
    fn dual_counts_of_grid() {
        let d = grid_1x2();
        let dual = dual_graph(&d).unwrap();
        assert_eq!(dual.graph().vertex_count(), 3);
        assert_eq!(dual.graph().edge_count(), 7);
        assert_eq!(dual.graph().degree(dual.root()), d.boundary_length());
    }

    #[test]
    fn dual_tree_of_square_path() {
        let d = polygon(4);
        let g = Graph::skeleton(d.complex());
        let t = enumerate_spanning_trees(&g).remove(0);
        let pair = dual_tree(&d, &t).unwrap();
        assert_eq!(pair.tree.len(), 3);
        assert_eq!(pair.dual_tree.len(), 1);
    }

    #[test]
    fn dual_tree_of_lone_edge_is_empty() {
        let d = lone_edge();
        let pair = dual_tree(&d, &EdgeSet::from_ids(1, [0]).unwrap()).unwrap();
        assert!(pair.dual_tree.is_empty());
    }

    #[test]
    fn grid_trees_have_two_dual_edges() {
        let d = grid_1x2();
        let g = Graph::skeleton(d.complex());
        let trees = enumerate_spanning_trees(&g);
        assert_eq!(trees.len() as u128, count_spanning_trees(&g));
        assert_eq!(trees.len(), 15);
        for t in trees {
            assert_eq!(dual_tree(&d, &t).unwrap().dual_tree.len(), 2);
        }
    }

    #[test]
    fn rejects_non_trees() {
        let d = polygon(4);
        let all = EdgeSet::from_ids(4, 0..4).unwrap();
        assert_eq!(dual_tree(&d, &all), Err(Error::NotAcyclic));
        let two = EdgeSet::from_ids(4, 0..2).unwrap();
        assert!(matches!(dual_tree(&d, &two), Err(Error::NotSpanning { .. })));
    }

    #[test]
    fn tree_diameters() {
        let path: Vec<_> = (0..3).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(4, &path);
        assert_eq!(tree_diameter(&g, &EdgeSet::from_ids(3, 0..3).unwrap()), Ok(3));
        for k in 1..7 {
            let star: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            let g = Graph::from_edges(k + 1, &star);
            let want = if k == 1 { 1 } else { 2 };
            assert_eq!(tree_diameter(&g, &EdgeSet::from_ids(k, 0..k).unwrap()), Ok(want));
        }
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            tree_diameter(&c4, &EdgeSet::from_ids(4, 0..4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn two_sweep_matches_all_pairs_on_every_labelled_tree_up_to_7_vertices() {
        // Prüfer sequences enumerate all labelled trees.
        for n in 2..=7usize {
            let total = n.pow(n as u32 - 2);
            for code in 0..total {
                let mut seq = Vec::new();
                let mut x = code;
                for _ in 0..n - 2 {
                    seq.push(x % n);
                    x /= n;
                }
                let edges = prufer_decode(n, &seq);
                let g = Graph::from_edges(n, &edges);
                let t = EdgeSet::from_ids(n - 1, 0..n - 1).unwrap();
                assert_eq!(tree_diameter(&g, &t).unwrap(), brute_diameter(n, &edges));
            }
        }
    }

    fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
        let mut degree = vec![1usize; n];
        for &s in seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges
    }

    #[test]
    fn kirchhoff_counts() {
        let k4 = Graph::skeleton(&k4());
        assert_eq!(count_spanning_trees(&k4), 16);
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(count_spanning_trees(&tri), 3);
        // parallel edges count separately
        let digon = Graph::from_edges(2, &[(0, 1), (0, 1)]);
        assert_eq!(count_spanning_trees(&digon), 2);
    }
}
