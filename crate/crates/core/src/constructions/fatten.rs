//! Fattening `T_n` into the disc `A_n`: each tree edge becomes an `n × n`
//! grid of squares and each trivalent vertex a side-`n` patch of the
//! triangular lattice glued flush to three grid ends.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::tree::TrivalentTree;
use crate::complex::{Diagram, PlanarComplex};
use crate::duality::UnionFind;
use crate::error::{Error, Result};

/// Assignment of diagram vertices to the edges of an inscribed copy of
/// `T_n`. Each tree edge is realised as a path; the path's interior plus the
/// end-vertices the tree edge owns make up its vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InscribedTreeMap {
    /// Vertex count of the diagram the map refers to.
    pub vertex_count: usize,
    /// Realising path of every tree edge, end to end.
    pub paths: Vec<Vec<usize>>,
    /// Owned vertices of every tree edge.
    pub owned: Vec<Vec<usize>>,
}

impl InscribedTreeMap {
    pub fn tree_edge_count(&self) -> usize {
        self.paths.len()
    }

    /// The tree edge owning each diagram vertex, if any.
    pub fn owner_table(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.vertex_count];
        for (e, vs) in self.owned.iter().enumerate() {
            for &v in vs {
                owner[v] = Some(e);
            }
        }
        owner
    }

    /// Re-labels the vertices through `map` into a diagram with
    /// `vertex_count` vertices.
    pub fn relabel(&self, map: &[usize], vertex_count: usize) -> Self {
        let f = |vs: &Vec<usize>| vs.iter().map(|&v| map[v]).collect();
        Self {
            vertex_count,
            paths: self.paths.iter().map(f).collect(),
            owned: self.owned.iter().map(f).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FattenedTree {
    pub level: usize,
    pub vertex_count: usize,
    /// Counterclockwise cycles of the 2-cells.
    pub faces: Vec<Vec<usize>>,
    pub diagram: Diagram,
    /// The boundary circuit, anticlockwise from the base vertex.
    pub boundary: Vec<usize>,
    pub inscribed: InscribedTreeMap,
}

struct Layout {
    n: usize,
    grid_offset: Vec<usize>,
    patch_offset: Vec<usize>,
}

impl Layout {
    fn grid(&self, e: usize, x: usize, y: usize) -> usize {
        self.grid_offset[e] + y * (self.n + 1) + x
    }

    fn patch(&self, v: usize, i: usize, j: usize) -> usize {
        // rows j = 0..=n hold n + 1 - j vertices each
        let n = self.n;
        let before: usize = (0..j).map(|jj| n + 1 - jj).sum();
        self.patch_offset[v] + before + i
    }

    /// Side `s` of the patch at `v` in counterclockwise order.
    fn patch_side(&self, v: usize, s: usize, t: usize) -> usize {
        let n = self.n;
        match s {
            0 => self.patch(v, t, 0),
            1 => self.patch(v, n - t, t),
            _ => self.patch(v, 0, n - t),
        }
    }

    /// The grid end of edge `e` at tree vertex `v`, counterclockwise.
    fn grid_end(&self, e: usize, at_first_end: bool, t: usize) -> usize {
        if at_first_end {
            self.grid(e, t, 0)
        } else {
            self.grid(e, self.n - t, self.n)
        }
    }
}

pub fn fatten(tree: &TrivalentTree, n: usize) -> Result<FattenedTree> {
    if tree.level() != n {
        return Err(Error::LevelMismatch {
            tree: tree.level(),
            requested: n,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("fattening needs n >= 1".into()));
    }
    let edges = tree.edges();
    let wedges: Vec<usize> = tree.wedges().collect();
    let mut layout = Layout {
        n,
        grid_offset: Vec::new(),
        patch_offset: vec![usize::MAX; tree.vertex_count()],
    };
    let mut total = 0;
    for _ in edges {
        layout.grid_offset.push(total);
        total += (n + 1) * (n + 1);
    }
    let patch_size = (n + 1) * (n + 2) / 2;
    for &v in &wedges {
        layout.patch_offset[v] = total;
        total += patch_size;
    }

    let mut faces = Vec::new();
    for e in 0..edges.len() {
        for y in 0..n {
            for x in 0..n {
                faces.push(vec![
                    layout.grid(e, x, y),
                    layout.grid(e, x + 1, y),
                    layout.grid(e, x + 1, y + 1),
                    layout.grid(e, x, y + 1),
                ]);
            }
        }
    }
    for &v in &wedges {
        for j in 0..n {
            for i in 0..n - j {
                faces.push(vec![
                    layout.patch(v, i, j),
                    layout.patch(v, i + 1, j),
                    layout.patch(v, i, j + 1),
                ]);
                if i + j + 2 <= n {
                    faces.push(vec![
                        layout.patch(v, i + 1, j),
                        layout.patch(v, i + 1, j + 1),
                        layout.patch(v, i, j + 1),
                    ]);
                }
            }
        }
    }

    let mut uf = UnionFind::new(total);
    for &v in &wedges {
        for (s, &e) in tree.incident(v).iter().enumerate() {
            let first = edges[e].0 == v;
            for t in 0..=n {
                uf.union(layout.patch_side(v, s, t), layout.grid_end(e, first, n - t));
            }
        }
    }
    let mut relabel = vec![usize::MAX; total];
    let mut vertex_count = 0;
    for x in 0..total {
        let r = uf.find(x);
        if relabel[r] == usize::MAX {
            relabel[r] = vertex_count;
            vertex_count += 1;
        }
        relabel[x] = relabel[r];
    }
    for f in &mut faces {
        for v in f.iter_mut() {
            *v = relabel[*v];
        }
    }

    let (complex, free) = PlanarComplex::from_face_cycles(vertex_count, &faces)?;
    let [outer] = free[..] else {
        return Err(Error::Malformed(format!(
            "fattened tree has {} boundary faces",
            free.len()
        )));
    };
    let base = complex
        .face_darts(outer)
        .iter()
        .map(|&d| complex.origin(d))
        .min()
        .expect("nonempty boundary");
    let diagram = Diagram::new(complex, outer, base)?;
    let boundary = diagram.boundary_walk().vertices(diagram.complex());

    let inscribed = inscribe(tree, &layout, &relabel, vertex_count)?;
    Ok(FattenedTree {
        level: n,
        vertex_count,
        faces,
        diagram,
        boundary,
        inscribed,
    })
}

/// Patch position (along each side, counterclockwise) where the inscribed
/// path of a grid meets a junction.
fn junction_position(n: usize) -> usize {
    n / 2
}

fn inscribe(tree: &TrivalentTree, layout: &Layout, relabel: &[usize], vertex_count: usize) -> Result<InscribedTreeMap> {
    let n = layout.n;
    let edges = tree.edges();
    let pos = junction_position(n);

    // Routes inside every patch: hub plus one path per side, endpoint first.
    let mut hub_paths: Vec<Option<[Vec<usize>; 3]>> = vec![None; tree.vertex_count()];
    for v in tree.wedges() {
        let ends = [0, 1, 2].map(|s| layout.patch_side(v, s, pos));
        hub_paths[v] = Some(route_patch(layout, v, ends)?);
    }

    let mut paths = Vec::with_capacity(edges.len());
    let mut owned = Vec::with_capacity(edges.len());
    for (e, &(a, b)) in edges.iter().enumerate() {
        // columns where the path crosses the two grid ends
        let x_first = if tree.is_leaf(a) { None } else { Some(n - pos) };
        let x_last = if tree.is_leaf(b) { None } else { Some(pos) };
        let (x0, x1) = match (x_first, x_last) {
            (Some(p), Some(q)) => (p, q),
            (Some(p), None) => (p, p),
            (None, Some(q)) => (q, q),
            (None, None) => (pos, pos),
        };
        let mut local = Vec::new();
        if let Some(routes) = &hub_paths[a] {
            let s = tree.incident(a).iter().position(|&x| x == e).unwrap();
            local.extend(routes[s].iter().rev());
            local.pop(); // the grid path starts at the same glued vertex
        }
        let turn = n / 2;
        for y in 0..=turn {
            local.push(layout.grid(e, x0, y));
        }
        let step: isize = if x1 >= x0 { 1 } else { -1 };
        let mut x = x0 as isize;
        while x != x1 as isize {
            x += step;
            local.push(layout.grid(e, x as usize, turn));
        }
        for y in turn + 1..=n {
            local.push(layout.grid(e, x1, y));
        }
        if let Some(routes) = &hub_paths[b] {
            let s = tree.incident(b).iter().position(|&x| x == e).unwrap();
            local.extend(routes[s].iter().skip(1));
        }
        let path: Vec<usize> = local.iter().map(|&v| relabel[v]).collect();
        let mut own = path.clone();
        if tree.owner(b) != e {
            own.pop();
        }
        if tree.owner(a) != e {
            own.remove(0);
        }
        paths.push(path);
        owned.push(own);
    }

    let map = InscribedTreeMap {
        vertex_count,
        paths,
        owned,
    };
    let mut seen = vec![false; vertex_count];
    for vs in &map.owned {
        for &v in vs {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::MapMismatch {
                    reason: format!("vertex {v} owned twice"),
                });
            }
        }
    }
    Ok(map)
}

/// Picks a hub inside the patch at `v` and routes three internally disjoint
/// shortest-possible paths from the side points `ends` to it. Each returned
/// path starts at its endpoint and ends at the hub.
fn route_patch(layout: &Layout, v: usize, ends: [usize; 3]) -> Result<[Vec<usize>; 3]> {
    let n = layout.n;
    let mut coords = Vec::new();
    for j in 0..=n {
        for i in 0..=n - j {
            coords.push((i, j));
        }
    }
    let index = |i: usize, j: usize| layout.patch(v, i, j) - layout.patch_offset[v];
    let size = coords.len();
    let mut adj = vec![Vec::new(); size];
    for &(i, j) in &coords {
        let a = index(i, j);
        let mut link = |b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        if i + j < n {
            link(index(i + 1, j));
            link(index(i, j + 1));
        }
        if i >= 1 {
            link(index(i - 1, j + 1));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    let ends_local = ends.map(|g| g - layout.patch_offset[v]);

    let bfs = |src: usize, blocked: &[bool]| {
        let mut dist = vec![usize::MAX; size];
        let mut parent = vec![usize::MAX; size];
        dist[src] = 0;
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX && !blocked[y] {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                }
            }
        }
        (dist, parent)
    };
    let free = vec![false; size];
    let dists: Vec<Vec<usize>> = ends_local.iter().map(|&s| bfs(s, &free).0).collect();
    let mut hubs: Vec<usize> = (0..size).collect();
    hubs.sort_by_key(|&h| {
        let m = dists.iter().map(|d| d[h]).max().unwrap();
        let s: usize = dists.iter().map(|d| d[h]).sum();
        (m, s, h)
    });
    for hub in hubs {
        let mut blocked = vec![false; size];
        for &e in &ends_local {
            blocked[e] = true;
        }
        let mut routes: Vec<Vec<usize>> = Vec::new();
        let mut ok = true;
        for &s in &ends_local {
            blocked[s] = false;
            blocked[hub] = false;
            let (dist, parent) = bfs(s, &blocked);
            if dist[hub] == usize::MAX {
                ok = false;
                break;
            }
            let mut path = vec![hub];
            let mut x = hub;
            while x != s {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            for &x in &path {
                blocked[x] = true;
            }
            routes.push(path);
        }
        if ok {
            let off = layout.patch_offset[v];
            let mut it = routes.into_iter().map(|p| p.into_iter().map(|x| x + off).collect());
            return Ok([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]);
        }
    }
    Err(Error::MapMismatch {
        reason: "no disjoint routing inside junction patch".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::boundary_length_formula;
    use crate::metrics::Graph;

    #[test]
    fn level_mismatch() {
        let t = TrivalentTree::new(2, None);
        assert_eq!(
            fatten(&t, 3).err(),
            Some(Error::LevelMismatch { tree: 2, requested: 3 })
        );
    }

    #[test]
    fn boundary_matches_formula() {
        for n in 1..=4 {
            let a = fatten(&TrivalentTree::new(n, None), n).unwrap();
            assert_eq!(a.boundary.len(), boundary_length_formula(n));
            assert_eq!(a.diagram.boundary_length(), boundary_length_formula(n));
            // boundary circuit is simple
            let mut b = a.boundary.clone();
            b.sort_unstable();
            b.dedup();
            assert_eq!(b.len(), a.boundary.len());
        }
    }

    #[test]
    fn a1_and_a2_face_inventory() {
        let a1 = fatten(&TrivalentTree::new(1, None), 1).unwrap();
        assert_eq!(a1.diagram.boundary_length(), 9);
        let a2 = fatten(&TrivalentTree::new(2, None), 2).unwrap();
        let d = &a2.diagram;
        let squares = d.bounded_faces().filter(|&f| d.face_degree(f) == Ok(4)).count();
        let triangles = d.bounded_faces().filter(|&f| d.face_degree(f) == Ok(3)).count();
        assert_eq!((squares, triangles), (9 * 4, 4 * 4));
        assert_eq!(d.area(), 52);
    }

    #[test]
    fn every_vertex_near_boundary() {
        for n in 2..=4 {
            let a = fatten(&TrivalentTree::new(n, None), n).unwrap();
            let g = Graph::skeleton(a.diagram.complex());
            let dist = g.bfs_filtered(&a.boundary, |_| true);
            assert!(dist.iter().all(|&x| (x as usize) < n), "n = {n}");
        }
    }

    #[test]
    fn degrees_at_most_six() {
        for n in 1..=4 {
            let a = fatten(&TrivalentTree::new(n, Some(9)), n).unwrap();
            let c = a.diagram.complex();
            assert!((0..c.vertex_count()).all(|v| c.degree(v) <= 6));
            let on_boundary: std::collections::HashSet<_> = a.boundary.iter().collect();
            // boundary vertices keep a spare slot for the skirt
            assert!(a.boundary.iter().all(|&v| c.degree(v) <= 4), "n = {n}");
            assert!(!on_boundary.is_empty());
        }
    }

    #[test]
    fn inscribed_paths_form_a_subdivided_tree() {
        for n in 1..=4 {
            let t = TrivalentTree::new(n, None);
            let a = fatten(&t, n).unwrap();
            let m = &a.inscribed;
            assert_eq!(m.tree_edge_count(), t.edges().len());
            let g = Graph::skeleton(a.diagram.complex());
            let mut verts = std::collections::HashSet::new();
            let mut path_edges = std::collections::HashSet::new();
            for p in &m.paths {
                for w in p.windows(2) {
                    assert!(
                        g.neighbors(w[0]).iter().any(|&(x, _)| x == w[1]),
                        "path step not an edge"
                    );
                    path_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
                }
                verts.extend(p.iter().copied());
            }
            // a connected acyclic union: |E| = |V| - 1 and owned sets cover V
            assert_eq!(path_edges.len() + 1, verts.len());
            let owned: usize = m.owned.iter().map(Vec::len).sum();
            assert_eq!(owned, verts.len());
        }
    }
}
