//! Shellings: sequences of pendant removals and cell collapses reducing a
//! diagram to its base vertex.
//!
//! A state is described by which edges are still alive. A bounded face is
//! alive iff all of its edges are, and a dart is on the current boundary iff
//! it is alive and its original face is either the outer face or dead.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::Diagram;
use crate::duality::{dual_tree, EdgeSet, SpanningTreePair};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShellingMove {
    /// Remove a pendant edge together with its leaf (never `⋆`).
    PendantRemoval { edge: usize, leaf: usize },
    /// Remove a boundary edge together with the interior of a 2-cell on it.
    CellCollapse { edge: usize, face: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingRecord {
    pub moves: Vec<ShellingMove>,
    /// Boundary lengths of `Δ^0, …, Δ^m`.
    pub trace: Vec<usize>,
    pub max_boundary: usize,
}

impl ShellingRecord {
    fn start(initial: usize) -> Self {
        Self {
            moves: Vec::new(),
            trace: vec![initial],
            max_boundary: initial,
        }
    }

    fn push(&mut self, m: ShellingMove, boundary: usize) {
        self.moves.push(m);
        self.trace.push(boundary);
        self.max_boundary = self.max_boundary.max(boundary);
    }
}

#[derive(Clone, Debug)]
pub struct ShellingState<'a> {
    diagram: &'a Diagram,
    edge_alive: Vec<bool>,
    face_alive: Vec<bool>,
    vertex_alive: Vec<bool>,
    degree: Vec<usize>,
    boundary: usize,
    alive_edges: usize,
}

impl<'a> ShellingState<'a> {
    pub fn new(diagram: &'a Diagram) -> Self {
        let c = diagram.complex();
        Self::from_alive_edges(diagram, &vec![true; c.edge_count()])
    }

    /// The state in which exactly the edges flagged in `alive` remain.
    pub fn from_alive_edges(diagram: &'a Diagram, alive: &[bool]) -> Self {
        let c = diagram.complex();
        let outer = diagram.outer_face();
        let face_alive: Vec<bool> = (0..c.face_count())
            .map(|f| f != outer && c.face_darts(f).iter().all(|&d| alive[c.edge_of(d)]))
            .collect();
        let mut degree = vec![0; c.vertex_count()];
        let mut boundary = 0;
        for d in 0..c.dart_count() {
            if alive[c.edge_of(d)] {
                degree[c.origin(d)] += 1;
                if !face_alive[c.face_of(d)] {
                    boundary += 1;
                }
            }
        }
        let vertex_alive = (0..c.vertex_count())
            .map(|v| v == diagram.base() || degree[v] > 0)
            .collect();
        Self {
            diagram,
            edge_alive: alive.to_vec(),
            face_alive,
            vertex_alive,
            degree,
            boundary,
            alive_edges: alive.iter().filter(|&&a| a).count(),
        }
    }

    pub fn diagram(&self) -> &'a Diagram {
        self.diagram
    }

    pub fn is_edge_alive(&self, e: usize) -> bool {
        self.edge_alive[e]
    }

    pub fn is_face_alive(&self, f: usize) -> bool {
        self.face_alive[f]
    }

    pub fn is_vertex_alive(&self, v: usize) -> bool {
        self.vertex_alive[v]
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn boundary_length(&self) -> usize {
        self.boundary
    }

    pub fn alive_edge_count(&self) -> usize {
        self.alive_edges
    }

    pub fn alive_edges(&self) -> &[bool] {
        &self.edge_alive
    }

    /// True once only `⋆` remains.
    pub fn is_finished(&self) -> bool {
        self.alive_edges == 0
    }

    pub fn is_outer_dart(&self, d: usize) -> bool {
        let c = self.diagram.complex();
        self.edge_alive[c.edge_of(d)] && !self.face_alive[c.face_of(d)]
    }

    /// Whether `v` lies on the current boundary walk.
    pub fn on_boundary(&self, v: usize) -> bool {
        if v == self.diagram.base() {
            return true;
        }
        self.vertex_alive[v] && self.diagram.complex().darts_at(v).any(|d| self.is_outer_dart(d))
    }

    /// Every legal move, cell collapses first, each group sorted.
    pub fn legal_moves(&self) -> Vec<ShellingMove> {
        let c = self.diagram.complex();
        let mut moves = BTreeSet::new();
        for d in 0..c.dart_count() {
            let f = c.face_of(d);
            if self.face_alive[f] && self.is_outer_dart(c.opposite(d)) {
                moves.insert(ShellingMove::CellCollapse {
                    edge: c.edge_of(d),
                    face: f,
                });
            }
        }
        for v in 0..c.vertex_count() {
            if let Some(e) = self.pendant_edge(v) {
                moves.insert(ShellingMove::PendantRemoval { edge: e, leaf: v });
            }
        }
        let mut out: Vec<_> = moves.into_iter().collect();
        out.sort_by_key(|m| matches!(m, ShellingMove::PendantRemoval { .. }));
        out
    }

    /// The edge of `v` if `v` is a removable leaf.
    fn pendant_edge(&self, v: usize) -> Option<usize> {
        if v == self.diagram.base() || !self.vertex_alive[v] || self.degree[v] != 1 {
            return None;
        }
        let c = self.diagram.complex();
        let d = c.darts_at(v).find(|&d| self.edge_alive[c.edge_of(d)])?;
        (self.is_outer_dart(d) && self.is_outer_dart(c.opposite(d))).then(|| c.edge_of(d))
    }

    pub fn check_move(&self, m: ShellingMove) -> Result<()> {
        let c = self.diagram.complex();
        let illegal = |reason: String| Err(Error::IllegalMove { reason });
        match m {
            ShellingMove::PendantRemoval { edge, leaf } => {
                if edge >= c.edge_count() || leaf >= c.vertex_count() {
                    return illegal(format!("{m:?} out of range"));
                }
                if self.pendant_edge(leaf) != Some(edge) {
                    return illegal(format!("edge {edge} is not a pendant edge at leaf {leaf}"));
                }
            }
            ShellingMove::CellCollapse { edge, face } => {
                if edge >= c.edge_count() || face >= c.face_count() {
                    return illegal(format!("{m:?} out of range"));
                }
                if !self.face_alive[face] {
                    return illegal(format!("face {face} is not a live 2-cell"));
                }
                let [a, b] = c.edge_darts(edge);
                let ok =
                    (c.face_of(a) == face && self.is_outer_dart(b)) || (c.face_of(b) == face && self.is_outer_dart(a));
                if !ok {
                    return illegal(format!("edge {edge} is not shared by face {face} and the boundary"));
                }
            }
        }
        Ok(())
    }

    /// Applies a legal move and returns the new boundary length.
    pub fn apply(&mut self, m: ShellingMove) -> Result<usize> {
        self.check_move(m)?;
        let c = self.diagram.complex();
        match m {
            ShellingMove::PendantRemoval { edge, leaf } => {
                let (a, b) = c.edge_ends(edge);
                self.edge_alive[edge] = false;
                self.degree[a] -= 1;
                self.degree[b] -= 1;
                self.vertex_alive[leaf] = false;
                self.boundary -= 2;
            }
            ShellingMove::CellCollapse { edge, face } => {
                let (a, b) = c.edge_ends(edge);
                self.edge_alive[edge] = false;
                self.face_alive[face] = false;
                self.degree[a] -= 1;
                self.degree[b] -= 1;
                self.boundary = self.boundary + c.face_darts(face).len() - 2;
            }
        }
        self.alive_edges -= 1;
        Ok(self.boundary)
    }

    /// The current boundary walk from `⋆`, recomputed by walking the
    /// restricted rotation system.
    pub fn boundary_walk(&self) -> Vec<usize> {
        let c = self.diagram.complex();
        let Some(start) = c.darts_at(self.diagram.base()).find(|&d| self.is_outer_dart(d)) else {
            return Vec::new();
        };
        let alive_next = |mut d: usize| loop {
            d = c.next(d);
            if self.edge_alive[c.edge_of(d)] {
                return d;
            }
        };
        let mut walk = vec![start];
        let mut d = alive_next(c.opposite(start));
        while d != start {
            walk.push(d);
            d = alive_next(c.opposite(d));
        }
        walk
    }
}

pub fn legal_moves(state: &ShellingState<'_>) -> Vec<ShellingMove> {
    state.legal_moves()
}

pub fn apply_move(state: &mut ShellingState<'_>, m: ShellingMove) -> Result<usize> {
    state.apply(m)
}

/// Outcome of an independent replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    /// Boundary lengths recomputed by walking each intermediate boundary.
    pub walked: Vec<usize>,
    /// Boundary lengths predicted by the per-move deltas.
    pub ledger: Vec<isize>,
}

/// Replays `record` from the full diagram, checking legality, the recorded
/// trace against walked boundaries and per-move deltas, and termination at
/// `⋆`.
pub fn replay(d: &Diagram, record: &ShellingRecord) -> Result<Replay> {
    let c = d.complex();
    let mut state = ShellingState::new(d);
    let bad = |reason: String| Error::IllegalMove { reason };
    if record.trace.len() != record.moves.len() + 1 {
        return Err(bad("trace and move counts disagree".into()));
    }
    let first = state.boundary_walk().len();
    let mut walked = vec![first];
    let mut ledger = vec![first as isize];
    for (i, &m) in record.moves.iter().enumerate() {
        state.apply(m)?;
        let delta = match m {
            ShellingMove::PendantRemoval { .. } => -2,
            ShellingMove::CellCollapse { face, .. } => c.face_darts(face).len() as isize - 2,
        };
        ledger.push(ledger[i] + delta);
        walked.push(state.boundary_walk().len());
    }
    for (i, (&w, &t)) in walked.iter().zip(&record.trace).enumerate() {
        if w != t || ledger[i] != t as isize {
            return Err(bad(format!("step {i}: trace {t}, walked {w}, ledger {}", ledger[i])));
        }
    }
    if !state.is_finished()
        || c.vertex_count() > 0 && (0..c.vertex_count()).any(|v| v != d.base() && state.is_vertex_alive(v))
    {
        return Err(bad("shelling does not end at the base vertex".into()));
    }
    if record.max_boundary != record.trace.iter().copied().max().unwrap_or(0) {
        return Err(bad("max_boundary is not the trace maximum".into()));
    }
    Ok(Replay { walked, ledger })
}

/// Default guard on `area + edges` for [`exact_filling_length`].
pub const DEFAULT_EXACT_CAP: usize = 12;

/// Exact filling length by a bottleneck best-first search over alive-edge
/// sets, with a witness shelling attaining it.
pub fn exact_filling_length(d: &Diagram, cap: usize) -> Result<(usize, ShellingRecord)> {
    let c = d.complex();
    let size = d.area() + c.edge_count();
    if size > cap || c.edge_count() > 64 {
        return Err(Error::TooLargeForExactSearch { size, cap });
    }
    let e = c.edge_count();
    let full: u64 = if e == 64 { u64::MAX } else { (1u64 << e) - 1 };
    let unpack = |mask: u64| (0..e).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>();
    log::debug!("exact search over {e} edges, area {}", d.area());

    let mut best: HashMap<u64, usize> = HashMap::new();
    let mut parent: HashMap<u64, (u64, ShellingMove)> = HashMap::new();
    let mut heap = BinaryHeap::new();
    let start = ShellingState::new(d).boundary_length();
    best.insert(full, start);
    heap.push(Reverse((start, full)));
    while let Some(Reverse((cost, mask))) = heap.pop() {
        if best.get(&mask).is_some_and(|&b| b < cost) {
            continue;
        }
        if mask == 0 {
            let mut moves = Vec::new();
            let mut at = mask;
            while at != full {
                let (p, m) = parent[&at];
                moves.push(m);
                at = p;
            }
            moves.reverse();
            let mut state = ShellingState::new(d);
            let mut record = ShellingRecord::start(state.boundary_length());
            for m in moves {
                let b = state.apply(m)?;
                record.push(m, b);
            }
            debug_assert_eq!(record.max_boundary, cost);
            return Ok((cost, record));
        }
        let state = ShellingState::from_alive_edges(d, &unpack(mask));
        for m in state.legal_moves() {
            let mut next = state.clone();
            let b = next.apply(m)?;
            let edge = match m {
                ShellingMove::PendantRemoval { edge, .. } | ShellingMove::CellCollapse { edge, .. } => edge,
            };
            let nmask = mask & !(1u64 << edge);
            let ncost = cost.max(b);
            if best.get(&nmask).is_none_or(|&old| ncost < old) {
                best.insert(nmask, ncost);
                parent.insert(nmask, (mask, m));
                heap.push(Reverse((ncost, nmask)));
            }
        }
    }
    Err(Error::Malformed("no shelling reaches the base vertex".into()))
}

/// BFS spanning tree from `⋆`, exploring darts in rotation order.
pub fn geodesic_spanning_tree(d: &Diagram) -> EdgeSet {
    let c = d.complex();
    let mut seen = vec![false; c.vertex_count()];
    let mut tree = EdgeSet::empty(c.edge_count());
    let mut queue = std::collections::VecDeque::from([d.base()]);
    seen[d.base()] = true;
    while let Some(v) = queue.pop_front() {
        for x in c.darts_at(v) {
            let w = c.head(x);
            if !seen[w] {
                seen[w] = true;
                tree.insert(c.edge_of(x));
                queue.push_back(w);
            }
        }
    }
    tree
}

/// A dual spanning tree rooted at the outer face, with children listed in
/// the cyclic order of the embedding.
#[derive(Clone, Debug)]
pub struct RootedDualTree {
    pub root: usize,
    /// `children[f]` holds `(child face, entry dart)`; the entry dart lies
    /// in the child face on the shared edge.
    pub children: Vec<Vec<(usize, usize)>>,
    pub parent: Vec<Option<usize>>,
}

impl RootedDualTree {
    pub fn new(d: &Diagram, dual_tree: &EdgeSet) -> Self {
        let c = d.complex();
        let root = d.outer_face();
        let mut children = vec![Vec::new(); c.face_count()];
        let mut parent = vec![None; c.face_count()];
        let walk = d.boundary_walk();
        let mut stack = Vec::new();
        if let Some(&first) = walk.darts.first() {
            stack.push((root, first, true));
        }
        while let Some((f, entry, is_root)) = stack.pop() {
            // the orbit from the entry dart; a child skips its own entry
            let mut orbit = vec![entry];
            let mut x = c.face_succ(entry);
            while x != entry {
                orbit.push(x);
                x = c.face_succ(x);
            }
            let mut order = Vec::new();
            for &x in &orbit[usize::from(!is_root)..] {
                if dual_tree.contains(c.edge_of(x)) {
                    let y = c.opposite(x);
                    order.push((c.face_of(y), y));
                }
            }
            for &(g, _) in &order {
                parent[g] = Some(f);
            }
            for &(g, y) in order.iter().rev() {
                stack.push((g, y, false));
            }
            children[f] = order;
        }
        Self { root, children, parent }
    }

    /// Degree in the unrooted tree.
    pub fn degree(&self, f: usize) -> usize {
        self.children[f].len() + usize::from(self.parent[f].is_some())
    }

    /// Faces in depth-first preorder following the child lists.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(f) = stack.pop() {
            out.push(f);
            stack.extend(self.children[f].iter().rev().map(|&(g, _)| g));
        }
        out
    }

    pub fn child_lists(&self) -> Vec<Vec<usize>> {
        self.children
            .iter()
            .map(|l| l.iter().map(|&(g, _)| g).collect())
            .collect()
    }

    pub fn subtree_weight(&self, f: usize) -> usize {
        subtree_weight(&self.child_lists(), f)
    }

    /// Weights of the subtrees suspended from each face: for child `g` of
    /// `f`, the closure of the component of `T* ∖ {f}` containing `g`.
    /// Indexed by the child.
    pub fn suspended_weights(&self) -> Vec<usize> {
        let order = self.preorder();
        let mut w = vec![0; self.children.len()];
        for &u in order.iter().rev() {
            w[u] = usize::from(self.degree(u) >= 3) + self.children[u].iter().map(|&(g, _)| w[g]).sum::<usize>();
        }
        w
    }
}

/// Weight of the subtree of a rooted tree hanging from `v`, viewed as a tree
/// of its own: `v` has degree equal to its number of children and every
/// descendant keeps its full degree. `children` lists the children of each
/// vertex.
pub fn subtree_weight(children: &[Vec<usize>], v: usize) -> usize {
    let mut total = usize::from(children[v].len() >= 3);
    let mut stack: Vec<usize> = children[v].clone();
    while let Some(u) = stack.pop() {
        if children[u].len() + 1 >= 3 {
            total += 1;
        }
        stack.extend(&children[u]);
    }
    total
}

/// How children of a dual vertex are visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChildOrder {
    /// Cyclic order of the embedding.
    Cyclic,
    /// Least suspended weight first, ties in cyclic order.
    LeastWeight,
}

/// Tunnelling along a dual tree. `observe` is called after every move
/// with the state and the current path of faces from the root.
pub fn tunnel_with(
    d: &Diagram,
    dual_tree: &EdgeSet,
    order: ChildOrder,
    mut observe: impl FnMut(&ShellingState<'_>, &[usize]),
) -> Result<ShellingRecord> {
    let c = d.complex();
    let rooted = RootedDualTree::new(d, dual_tree);
    let mut children = rooted.children.clone();
    if order == ChildOrder::LeastWeight {
        let w = rooted.suspended_weights();
        for list in &mut children {
            list.sort_by_key(|&(g, _)| w[g]);
        }
    }

    let mut state = ShellingState::new(d);
    let mut record = ShellingRecord::start(state.boundary_length());
    let mut path = vec![rooted.root];
    strip_pendants(&mut state, &mut record, 0..c.vertex_count(), &path, &mut observe)?;

    let mut stack: Vec<(usize, usize)> = vec![(rooted.root, 0)];
    while let Some(top) = stack.last_mut() {
        let (f, i) = *top;
        if i == children[f].len() {
            stack.pop();
            path.pop();
            continue;
        }
        top.1 += 1;
        let (g, entry) = children[f][i];
        let m = ShellingMove::CellCollapse {
            edge: c.edge_of(entry),
            face: g,
        };
        path.push(g);
        let b = state.apply(m)?;
        record.push(m, b);
        observe(&state, &path);
        let touched: Vec<usize> = c.face_darts(g).iter().map(|&x| c.origin(x)).collect();
        strip_pendants(&mut state, &mut record, touched, &path, &mut observe)?;
        stack.push((g, 0));
    }
    // safety sweep; a correct run leaves nothing here
    strip_pendants(&mut state, &mut record, 0..c.vertex_count(), &[], &mut observe)?;
    if !state.is_finished() {
        return Err(Error::Malformed("tunnelling left live edges".into()));
    }
    Ok(record)
}

fn strip_pendants(
    state: &mut ShellingState<'_>,
    record: &mut ShellingRecord,
    candidates: impl IntoIterator<Item = usize>,
    path: &[usize],
    observe: &mut impl FnMut(&ShellingState<'_>, &[usize]),
) -> Result<()> {
    let c = state.diagram().complex();
    let mut work: BTreeSet<usize> = candidates.into_iter().collect();
    while let Some(v) = work.pop_first() {
        if let Some(e) = state.pendant_edge(v) {
            let m = ShellingMove::PendantRemoval { edge: e, leaf: v };
            let b = state.apply(m)?;
            record.push(m, b);
            observe(state, path);
            let (a, w) = c.edge_ends(e);
            work.insert(if a == v { w } else { a });
        }
    }
    Ok(())
}

fn check_pair(d: &Diagram, pair: &SpanningTreePair) -> Result<()> {
    let expected = dual_tree(d, &pair.tree).map_err(|e| Error::InvalidPair { reason: e.to_string() })?;
    if expected.dual_tree != pair.dual_tree {
        return Err(Error::InvalidPair {
            reason: "dual tree is not the complement of the tree".into(),
        });
    }
    Ok(())
}

/// Shelling obtained by tunnelling to the leaves of `T*` in cyclic order.
pub fn tunnelling_shelling(d: &Diagram, pair: &SpanningTreePair) -> Result<ShellingRecord> {
    check_pair(d, pair)?;
    tunnel_with(d, &pair.dual_tree, ChildOrder::Cyclic, |_, _| {})
}

/// Logarithmic shelling: tunnelling along the dual of a geodesic tree,
/// entering lighter suspended subtrees first.
pub fn logarithmic_shelling(d: &Diagram) -> Result<ShellingRecord> {
    let tree = geodesic_spanning_tree(d);
    let pair = dual_tree(d, &tree)?;
    tunnel_with(d, &pair.dual_tree, ChildOrder::LeastWeight, |_, _| {})
}

/// The right-hand side `Diam T + 2λ Diam T* + ℓ(∂Δ)` of the tunnelling bound.
pub fn tunnelling_bound(diam_t: usize, diam_dual: usize, lambda: usize, boundary: usize) -> usize {
    diam_t + 2 * lambda * diam_dual + boundary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;
    use crate::duality::{dual_tree, enumerate_spanning_trees, tree_diameter};
    use crate::metrics::Graph;

    fn polygon_path_tree(k: usize) -> EdgeSet {
        let d = polygon(k);
        let c = d.complex();
        // drop the edge between the last vertex and vertex 0
        let skip = (0..c.edge_count())
            .find(|&e| {
                let (a, b) = c.edge_ends(e);
                (a.min(b), a.max(b)) == (0, k - 1)
            })
            .unwrap();
        EdgeSet::from_ids(c.edge_count(), (0..c.edge_count()).filter(|&e| e != skip)).unwrap()
    }

    #[test]
    fn square_moves() {
        let d = polygon(4);
        let s = ShellingState::new(&d);
        let moves = s.legal_moves();
        assert_eq!(moves.len(), 4);
        assert!(moves.iter().all(|m| matches!(m, ShellingMove::CellCollapse { .. })));
    }

    #[test]
    fn lone_edge_moves() {
        let d = lone_edge();
        let s = ShellingState::new(&d);
        let moves = s.legal_moves();
        assert_eq!(moves.len(), 1);
        assert!(matches!(moves[0], ShellingMove::PendantRemoval { .. }));
    }

    #[test]
    fn collapse_deltas() {
        for k in 3..8 {
            let d = polygon(k);
            let mut s = ShellingState::new(&d);
            let m = s.legal_moves()[0];
            assert_eq!(s.apply(m).unwrap(), 2 * k - 2);
            assert_eq!(s.boundary_walk().len(), 2 * k - 2);
        }
    }

    #[test]
    fn illegal_moves_rejected() {
        let d = polygon(4);
        let mut s = ShellingState::new(&d);
        let err = s.apply(ShellingMove::PendantRemoval { edge: 0, leaf: 1 });
        assert!(matches!(err, Err(Error::IllegalMove { .. })));
        let m = s.legal_moves()[0];
        s.apply(m).unwrap();
        assert!(s.apply(m).is_err());
        // the base is never a removable leaf
        let d = lone_edge();
        let s = ShellingState::new(&d);
        let e = 0;
        assert!(s
            .check_move(ShellingMove::PendantRemoval {
                edge: e,
                leaf: d.base()
            })
            .is_err());
    }

    #[test]
    fn exact_values() {
        assert_eq!(exact_filling_length(&lone_edge(), 12).unwrap().0, 2);
        assert_eq!(exact_filling_length(&polygon(3), 12).unwrap().0, 4);
        let (fl, rec) = exact_filling_length(&polygon(4), 12).unwrap();
        assert_eq!(fl, 6);
        assert_eq!(rec.trace[..2], [4, 6]);
        replay(&polygon(4), &rec).unwrap();
    }

    #[test]
    fn exact_cap() {
        let d = grid_1x2();
        assert!(matches!(
            exact_filling_length(&d, 5),
            Err(Error::TooLargeForExactSearch { size: 9, cap: 5 })
        ));
        assert!(exact_filling_length(&d, 9).is_ok());
    }

    #[test]
    fn square_tunnelling() {
        let d = polygon(4);
        let pair = dual_tree(&d, &polygon_path_tree(4)).unwrap();
        let rec = tunnelling_shelling(&d, &pair).unwrap();
        assert_eq!(rec.max_boundary, 6);
        assert!(rec.max_boundary <= tunnelling_bound(3, 1, 4, 4));
        replay(&d, &rec).unwrap();
    }

    #[test]
    fn invalid_pair() {
        let d = polygon(4);
        let mut pair = dual_tree(&d, &polygon_path_tree(4)).unwrap();
        pair.dual_tree = EdgeSet::empty(4);
        assert!(matches!(tunnelling_shelling(&d, &pair), Err(Error::InvalidPair { .. })));
    }

    #[test]
    fn grid_all_trees_bound() {
        let d = grid_1x2();
        let g = Graph::skeleton(d.complex());
        let gd = Graph::dual(d.complex());
        let (fl, _) = exact_filling_length(&d, 12).unwrap();
        for t in enumerate_spanning_trees(&g) {
            let pair = dual_tree(&d, &t).unwrap();
            let rec = tunnelling_shelling(&d, &pair).unwrap();
            replay(&d, &rec).unwrap();
            let rhs = tunnelling_bound(
                tree_diameter(&g, &pair.tree).unwrap(),
                tree_diameter(&gd, &pair.dual_tree).unwrap(),
                4,
                d.boundary_length(),
            );
            assert!(fl <= rec.max_boundary);
            assert!(rec.max_boundary <= rhs);
        }
    }

    #[test]
    fn pendant_diagram_shellings() {
        for base in [0, 1, 4] {
            let d = square_with_pendant(base);
            let rec = logarithmic_shelling(&d).unwrap();
            replay(&d, &rec).unwrap();
            let (fl, _) = exact_filling_length(&d, 12).unwrap();
            assert!(fl <= rec.max_boundary);
        }
    }

    #[test]
    fn geodesic_tree_on_polygons() {
        for k in 3..9 {
            let d = polygon(k);
            let t = geodesic_spanning_tree(&d);
            let g = Graph::skeleton(d.complex());
            let dg = g.bfs(d.base());
            let dt = g.bfs_filtered(&[d.base()], |e| t.contains(e));
            assert_eq!(dg, dt);
            assert!(tree_diameter(&g, &t).unwrap() <= 2 * g.diameter().unwrap());
        }
    }

    /// Weight straight from the definition: build the subtree's adjacency and
    /// count vertices of degree at least three.
    fn weight_by_definition(children: &[Vec<usize>], v: usize) -> usize {
        let mut members = vec![v];
        let mut i = 0;
        while i < members.len() {
            members.extend(&children[members[i]]);
            i += 1;
        }
        let mut deg = vec![0; children.len()];
        for &u in &members {
            for &w in &children[u] {
                deg[u] += 1;
                deg[w] += 1;
            }
        }
        members.iter().filter(|&&u| deg[u] >= 3).count()
    }

    #[test]
    fn subtree_weights() {
        // rooted path 0-1-2-3
        let path = vec![vec![1], vec![2], vec![3], vec![]];
        assert!((0..4).all(|v| subtree_weight(&path, v) == 0));
        // balanced binary tree of depth 2 rooted at its centre
        let bin = vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![], vec![], vec![], vec![]];
        assert_eq!(subtree_weight(&bin, 0), 2);
        for v in 0..7 {
            assert_eq!(subtree_weight(&bin, v), weight_by_definition(&bin, v));
        }
        // K_{1,4} rooted at a leaf
        let star = vec![vec![1], vec![2, 3, 4], vec![], vec![], vec![]];
        assert_eq!(subtree_weight(&star, 0), 1);
        assert_eq!(weight_by_definition(&star, 0), 1);
    }

    #[test]
    fn suspended_weights_match_definition() {
        let d = grid_1x2();
        let g = Graph::skeleton(d.complex());
        for t in enumerate_spanning_trees(&g) {
            let pair = dual_tree(&d, &t).unwrap();
            let rooted = RootedDualTree::new(&d, &pair.dual_tree);
            let kids = rooted.child_lists();
            let w = rooted.suspended_weights();
            for (f, &wf) in w.iter().enumerate() {
                if rooted.parent[f].is_some() {
                    // closure of f's component: f gains its parent edge
                    let mut with_parent = kids.clone();
                    with_parent.push(vec![f]);
                    assert_eq!(wf, weight_by_definition(&with_parent, kids.len()));
                }
            }
        }
    }

    #[test]
    fn point_shells_trivially() {
        let d = Diagram::point();
        let rec = logarithmic_shelling(&d).unwrap();
        assert_eq!(rec.trace, vec![0]);
        assert_eq!(exact_filling_length(&d, 12).unwrap().0, 0);
    }
}
