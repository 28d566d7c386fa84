//! The family `Δ_n`: fattened trivalent trees wrapped in a hyperbolic skirt
//! of pentagon rings, plus random small diagrams for testing.

mod annulus;
mod fatten;
pub mod random;
mod tree;

use serde::{Deserialize, Serialize};

pub use annulus::{annulus_exponent, pentagon_annulus, PentagonAnnulus};
pub use fatten::{fatten, FattenedTree, InscribedTreeMap};
pub use tree::TrivalentTree;

use crate::complex::{Diagram, PlanarComplex, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::metrics::Graph;

/// Length of the boundary circuit of `A_n`: `(5·3^n + 3)·n / 2`.
pub fn boundary_length_formula(n: usize) -> usize {
    (5 * 3usize.pow(n as u32) + 3) * n / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaMetadata {
    pub n: usize,
    pub seed: Option<u64>,
    pub p_n: usize,
    pub lambda: usize,
    pub boundary_length: usize,
    pub skirt_rings: usize,
    pub skirt_merges: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub max_degree_g: usize,
    pub max_degree_gdual: usize,
}

#[derive(Clone, Debug)]
pub struct DeltaConstruction {
    pub tree: TrivalentTree,
    pub diagram: Diagram,
    pub inscribed: InscribedTreeMap,
    /// The glued circuit `∂A_n` inside `Δ_n`.
    pub interface: Vec<usize>,
    /// Vertices `0..fattened_vertices` of `Δ_n` form `A_n`.
    pub fattened_vertices: usize,
    pub metadata: DeltaMetadata,
}

/// Sidecar document written next to a `Δ_n` diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSidecar {
    pub version: u32,
    pub metadata: DeltaMetadata,
    pub tree_edges: Vec<(usize, usize)>,
    pub inscribed: InscribedTreeMap,
}

impl DeltaConstruction {
    pub fn sidecar(&self) -> DeltaSidecar {
        DeltaSidecar {
            version: SCHEMA_VERSION,
            metadata: self.metadata.clone(),
            tree_edges: self.tree.edges().to_vec(),
            inscribed: self.inscribed.clone(),
        }
    }
}

/// Builds `Δ_n = A_n ∪ B_n` with `B_n = D_{p_n}` glued along `∂A_n`. The
/// boundary of `Δ_n` is the inner circuit of the skirt and `⋆` is its first
/// vertex.
pub fn assemble_delta(n: usize, seed: Option<u64>) -> Result<DeltaConstruction> {
    if n == 0 {
        return Err(Error::InvalidParameter("Δ_n needs n >= 1".into()));
    }
    let tree = TrivalentTree::new(n, seed);
    let fat = fatten(&tree, n)?;
    let p = boundary_length_formula(n);
    if fat.boundary.len() != p {
        return Err(Error::Malformed(format!(
            "∂A_{n} has length {} but p_n = {p}",
            fat.boundary.len()
        )));
    }
    let skirt = pentagon_annulus(p)?;

    // outer skirt vertex s is glued to boundary vertex -s (mod p) so that
    // shared edges are traversed in opposite directions
    let va = fat.vertex_count;
    let mut map = vec![usize::MAX; skirt.vertex_count];
    for (s, &o) in skirt.outer.iter().enumerate() {
        map[o] = fat.boundary[(p - s) % p];
    }
    let mut next_id = va;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next_id;
            next_id += 1;
        }
    }
    let mut faces = fat.faces.clone();
    faces.extend(
        skirt
            .faces
            .iter()
            .map(|f| f.iter().map(|&v| map[v]).collect::<Vec<_>>()),
    );
    let (complex, free) = PlanarComplex::from_face_cycles(next_id, &faces)?;
    let [outer] = free[..] else {
        return Err(Error::Malformed(format!("Δ_{n} has {} boundary faces", free.len())));
    };
    let base = map[skirt.inner[0]];
    let diagram = Diagram::new(complex, outer, base)?;

    let c = diagram.complex();
    let metadata = DeltaMetadata {
        n,
        seed,
        p_n: p,
        lambda: diagram.max_cell_degree(),
        boundary_length: diagram.boundary_length(),
        skirt_rings: skirt.rings,
        skirt_merges: skirt.merges,
        vertex_count: c.vertex_count(),
        edge_count: c.edge_count(),
        face_count: c.face_count(),
        max_degree_g: Graph::skeleton(c).max_degree(),
        max_degree_gdual: Graph::dual(c).max_degree(),
    };
    let inscribed = fat.inscribed.relabel(&(0..va).collect::<Vec<_>>(), next_id);
    Ok(DeltaConstruction {
        tree,
        diagram,
        inscribed,
        interface: fat.boundary,
        fattened_vertices: va,
        metadata,
    })
}
