//! Distances, diameters and degree statistics for the 1-skeleton and the
//! dual graph of a diagram.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Diagram, PlanarComplex};
use crate::error::{Error, Result};

pub const UNREACHED: u32 = u32::MAX;

/// Undirected multigraph in adjacency-array form. Every neighbour entry
/// carries the id of the edge it was reached through; loops appear twice.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    adj: Vec<(usize, usize)>,
    edge_count: usize,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut deg = vec![0usize; vertex_count + 1];
        for &(a, b) in edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let mut offsets = vec![0usize; vertex_count + 1];
        for v in 0..vertex_count {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![(0, 0); offsets[vertex_count]];
        for (e, &(a, b)) in edges.iter().enumerate() {
            adj[fill[a]] = (b, e);
            fill[a] += 1;
            adj[fill[b]] = (a, e);
            fill[b] += 1;
        }
        Self {
            offsets,
            adj,
            edge_count: edges.len(),
        }
    }

    /// The 1-skeleton; edge ids are the complex's edge ids and each vertex
    /// lists its neighbours in rotation order.
    pub fn skeleton(c: &PlanarComplex) -> Self {
        let order = (0..c.vertex_count()).flat_map(|v| c.darts_at(v)).collect();
        Self::from_darts(c.vertex_count(), c, order, |d| c.origin(d))
    }

    /// The dual graph: one vertex per face, dual edge `e` joins the faces on
    /// either side of primal edge `e`.
    pub fn dual(c: &PlanarComplex) -> Self {
        let order = (0..c.face_count())
            .flat_map(|f| c.face_darts(f).iter().copied())
            .collect();
        Self::from_darts(c.face_count(), c, order, |d| c.face_of(d))
    }

    fn from_darts(count: usize, c: &PlanarComplex, order: Vec<usize>, place: impl Fn(usize) -> usize) -> Self {
        let mut offsets = vec![0usize; count + 1];
        for d in 0..c.dart_count() {
            offsets[place(d) + 1] += 1;
        }
        for v in 0..count {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![(0, 0); c.dart_count()];
        for d in order {
            let p = place(d);
            adj[fill[p]] = (place(c.opposite(d)), c.edge_of(d));
            fill[p] += 1;
        }
        Self {
            offsets,
            adj,
            edge_count: c.edge_count(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edge list `(a, b)` indexed by edge id.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(usize::MAX, usize::MAX); self.edge_count];
        for v in 0..self.vertex_count() {
            for &(w, e) in self.neighbors(v) {
                if ends[e].0 == usize::MAX {
                    ends[e] = (v, w);
                }
            }
        }
        ends
    }

    /// BFS distances from `sources`, restricted to edges accepted by `keep`.
    pub fn bfs_filtered(&self, sources: &[usize], keep: impl Fn(usize) -> bool) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == UNREACHED {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let dv = dist[v];
            for &(w, e) in self.neighbors(v) {
                if dist[w] == UNREACHED && keep(e) {
                    dist[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs(&self, source: usize) -> Vec<u32> {
        self.bfs_filtered(&[source], |_| true)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        let dist = self.bfs(v);
        max_finite(&dist)
    }

    /// Exact diameter by a BFS from every vertex.
    pub fn diameter(&self) -> Result<usize> {
        if self.vertex_count() == 0 {
            return Ok(0);
        }
        let eccs: Vec<Result<usize>> = (0..self.vertex_count())
            .into_par_iter()
            .map(|v| self.eccentricity(v))
            .collect();
        eccs.into_iter().try_fold(0, |acc, e| Ok(acc.max(e?)))
    }

    /// Two-sweep lower bound on the diameter (exact on trees).
    pub fn double_sweep(&self) -> Result<usize> {
        if self.vertex_count() == 0 {
            return Ok(0);
        }
        let first = self.bfs(0);
        let far = farthest(&first)?;
        max_finite(&self.bfs(far))
    }
}

fn max_finite(dist: &[u32]) -> Result<usize> {
    let mut best = 0;
    for &x in dist {
        if x == UNREACHED {
            return Err(Error::Disconnected);
        }
        best = best.max(x as usize);
    }
    Ok(best)
}

pub(crate) fn farthest(dist: &[u32]) -> Result<usize> {
    let mut best = (0, 0);
    for (v, &x) in dist.iter().enumerate() {
        if x == UNREACHED {
            return Err(Error::Disconnected);
        }
        if x > best.0 {
            best = (x, v);
        }
    }
    Ok(best.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub diam_g: usize,
    pub diam_gdual: usize,
    pub max_degree_g: usize,
    pub max_degree_gdual: usize,
    pub boundary_length: usize,
    /// Largest 2-cell degree.
    pub lambda: usize,
    /// Number of 2-cells.
    pub area: usize,
}

pub fn metrics_report(d: &Diagram) -> Result<MetricsReport> {
    let c = d.complex();
    let g = Graph::skeleton(c);
    let gd = Graph::dual(c);
    Ok(MetricsReport {
        diam_g: g.diameter()?,
        diam_gdual: gd.diameter()?,
        max_degree_g: g.max_degree(),
        max_degree_gdual: gd.max_degree(),
        boundary_length: d.boundary_length(),
        lambda: d.max_cell_degree(),
        area: d.area(),
    })
}

impl fmt::Display for MetricsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("diam G", self.diam_g),
            ("diam G*", self.diam_gdual),
            ("max deg G", self.max_degree_g),
            ("max deg G*", self.max_degree_gdual),
            ("boundary length", self.boundary_length),
            ("lambda", self.lambda),
            ("area", self.area),
        ];
        for (name, value) in rows {
            writeln!(f, "{name:<16} {value:>10}")?;
        }
        Ok(())
    }
}
