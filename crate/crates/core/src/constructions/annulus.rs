//! Annuli `D_k` built from concentric rings of pentagons.
//!
//! For `k = 2^m` there are `m - 2` rings. Ring `j` (outermost first) sits
//! between boundary cycles of lengths `2^(m-j+1)` and `2^(m-j)` and holds
//! `2^(m-j)` pentagons, each with two outer edges, one inner edge and two
//! radial edges, so the innermost cycle has length 4. Smaller `k` merge pairs
//! of outer edges across degree-two outer vertices, turning those pentagons
//! into squares.

use crate::complex::PlanarComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct PentagonAnnulus {
    pub k: usize,
    /// `2^m` is the length of the unmerged outer cycle.
    pub m: u32,
    pub rings: usize,
    pub merges: usize,
    pub vertex_count: usize,
    /// Counterclockwise cycles of the 2-cells.
    pub faces: Vec<Vec<usize>>,
    /// Outer boundary cycle, counterclockwise.
    pub outer: Vec<usize>,
    /// Inner boundary cycle, counterclockwise.
    pub inner: Vec<usize>,
    pub complex: PlanarComplex,
}

/// Smallest `m >= 3` with `2^(m-1) < k <= 2^m`.
pub fn annulus_exponent(k: usize) -> u32 {
    let mut m = 3;
    while (1usize << m) < k {
        m += 1;
    }
    m
}

pub fn pentagon_annulus(k: usize) -> Result<PentagonAnnulus> {
    if k < 5 {
        return Err(Error::KTooSmall { k });
    }
    let m = annulus_exponent(k);
    let rings = m as usize - 2;
    let top = 1usize << m;
    let merges = top - k;
    let first_ring = top / 2;

    // cycles[j] has length 2^(m-j); cycle 0 is the outer one
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut count = 0;
    for j in 0..=rings {
        let len = top >> j;
        cycles.push((count..count + len).collect());
        count += len;
    }

    let mut merged = vec![false; first_ring];
    for t in 0..merges {
        merged[t * first_ring / merges] = true;
    }

    let mut faces = Vec::new();
    for j in 0..rings {
        let (outer, inner) = (&cycles[j], &cycles[j + 1]);
        let (lo, li) = (outer.len(), inner.len());
        for i in 0..li {
            let a = outer[2 * i];
            let mid = outer[2 * i + 1];
            let b = outer[(2 * i + 2) % lo];
            let (c, d) = (inner[(i + 1) % li], inner[i]);
            if j == 0 && merged[i] {
                faces.push(vec![a, b, c, d]);
            } else {
                faces.push(vec![a, mid, b, c, d]);
            }
        }
    }

    // drop the bypassed degree-two vertices and compact ids
    let mut removed = vec![false; count];
    for (i, &is_merged) in merged.iter().enumerate() {
        if is_merged {
            removed[cycles[0][2 * i + 1]] = true;
        }
    }
    let mut relabel = vec![usize::MAX; count];
    let mut vertex_count = 0;
    for v in 0..count {
        if !removed[v] {
            relabel[v] = vertex_count;
            vertex_count += 1;
        }
    }
    for f in &mut faces {
        for v in f.iter_mut() {
            *v = relabel[*v];
        }
    }
    let outer: Vec<usize> = cycles[0]
        .iter()
        .filter(|&&v| !removed[v])
        .map(|&v| relabel[v])
        .collect();
    let inner: Vec<usize> = cycles[rings].iter().map(|&v| relabel[v]).collect();
    debug_assert_eq!(outer.len(), k);

    let (complex, free) = PlanarComplex::from_face_cycles(vertex_count, &faces)?;
    if free.len() != 2 {
        return Err(Error::Malformed(format!("annulus has {} boundary faces", free.len())));
    }
    Ok(PentagonAnnulus {
        k,
        m,
        rings,
        merges,
        vertex_count,
        faces,
        outer,
        inner,
        complex,
    })
}
