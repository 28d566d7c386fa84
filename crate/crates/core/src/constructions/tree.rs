use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The trivalent tree `T_n`: `T_0` is a single edge and `T_n` is three copies
/// of `T_{n-1}` with one leaf of each identified.
///
/// Edge 0 owns both of its end-vertices; every other edge owns the endpoint
/// farther from edge 0. This partitions the vertex set, so the tree can be
/// treated as a disjoint union of half-open edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivalentTree {
    level: usize,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Incident edges of each vertex in counterclockwise order.
    incident: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl TrivalentTree {
    /// Builds `T_n`. Without a seed the first-indexed leaf of each copy is
    /// identified; a seed picks the identified leaves at random.
    pub fn new(level: usize, seed: Option<u64>) -> Self {
        let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
        let mut edges = vec![(0, 1)];
        let mut incident = vec![vec![0], vec![0]];
        for _ in 0..level {
            let v = incident.len();
            let leaves: Vec<usize> = (0..v).filter(|&x| incident[x].len() == 1).collect();
            let pick = |rng: &mut Option<ChaCha8Rng>| match rng {
                Some(r) => leaves[r.gen_range(0..leaves.len())],
                None => leaves[0],
            };
            let chosen = [pick(&mut rng), pick(&mut rng), pick(&mut rng)];

            // old id (copy k, vertex x) -> new id; the identified leaves all
            // map to the position of copy 0's leaf
            let mut map = vec![usize::MAX; 3 * v];
            let mut next_id = 0;
            for k in 0..3 {
                for x in 0..v {
                    if x == chosen[k] && k > 0 {
                        continue;
                    }
                    map[k * v + x] = next_id;
                    next_id += 1;
                }
            }
            let wedge = map[chosen[0]];
            for k in 1..3 {
                map[k * v + chosen[k]] = wedge;
            }

            let ecount = edges.len();
            let mut new_edges = Vec::with_capacity(3 * ecount);
            let mut new_incident = vec![Vec::new(); next_id];
            for k in 0..3 {
                for &(a, b) in &edges {
                    new_edges.push((map[k * v + a], map[k * v + b]));
                }
                for x in 0..v {
                    let nx = map[k * v + x];
                    new_incident[nx].extend(incident[x].iter().map(|&e| e + k * ecount));
                }
            }
            edges = new_edges;
            incident = new_incident;
        }
        let owner = ownership(incident.len(), &edges, &incident);
        Self {
            level,
            vertex_count: incident.len(),
            edges,
            incident,
            owner,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.incident[v].len() == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(|&v| self.is_leaf(v))
    }

    /// The identified (non-leaf) vertices.
    pub fn wedges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(|&v| !self.is_leaf(v))
    }

    /// The edge owning vertex `v` under the half-open convention.
    pub fn owner(&self, v: usize) -> usize {
        self.owner[v]
    }
}

fn ownership(n: usize, edges: &[(usize, usize)], incident: &[Vec<usize>]) -> Vec<usize> {
    let mut owner = vec![usize::MAX; n];
    let (a, b) = edges[0];
    owner[a] = 0;
    owner[b] = 0;
    let mut stack = vec![a, b];
    while let Some(v) = stack.pop() {
        for &e in &incident[v] {
            let (x, y) = edges[e];
            let w = if x == v { y } else { x };
            if owner[w] == usize::MAX {
                owner[w] = e;
                stack.push(w);
            }
        }
    }
    owner
}
