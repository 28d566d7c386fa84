//! Numerical checks of the diameter bounds for `Δ_n` and of the
//! intersection argument behind the filling-length lower bound.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Diagram;
use crate::constructions::{assemble_delta, DeltaConstruction, InscribedTreeMap};
use crate::duality::{enumerate_spanning_trees, tree_diameter, EdgeSet};
use crate::error::{Error, Result};
use crate::metrics::Graph;
use crate::shelling::{logarithmic_shelling, tunnel_with, ChildOrder, ShellingRecord, ShellingState};

/// Spanning trees are enumerated exhaustively only up to this many edges.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 14;

/// `n·⌊n/3⌋`.
pub fn fl_lower_bound(n: usize) -> usize {
    n * (n / 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionProfile {
    /// Distinct inscribed tree edges met by the boundary walk of each `Δ^i`.
    pub per_step: Vec<usize>,
    pub max_met: usize,
    /// First step attaining `max_met`.
    pub step: usize,
    pub boundary_at_step: usize,
}

/// Replays `record` and counts, at every step, the tree edges whose owned
/// vertices lie on the boundary walk.
pub fn intersection_profile(
    d: &Diagram,
    record: &ShellingRecord,
    map: &InscribedTreeMap,
) -> Result<IntersectionProfile> {
    let c = d.complex();
    if map.vertex_count != c.vertex_count() {
        return Err(Error::MapMismatch {
            reason: format!("map has {} vertices, diagram {}", map.vertex_count, c.vertex_count()),
        });
    }
    let owner = map.owner_table();
    let mut state = ShellingState::new(d);
    let mut on = vec![false; c.vertex_count()];
    let mut hits = vec![0usize; map.tree_edge_count()];
    let mut met = 0;
    let mut refresh = |state: &ShellingState<'_>, v: usize, met: &mut usize| {
        let now = state.on_boundary(v);
        if now == on[v] {
            return;
        }
        on[v] = now;
        if let Some(t) = owner[v] {
            if now {
                hits[t] += 1;
                if hits[t] == 1 {
                    *met += 1;
                }
            } else {
                hits[t] -= 1;
                if hits[t] == 0 {
                    *met -= 1;
                }
            }
        }
    };
    for v in 0..c.vertex_count() {
        refresh(&state, v, &mut met);
    }
    let mut per_step = vec![met];
    for &m in &record.moves {
        state.apply(m)?;
        let mut touched = Vec::new();
        match m {
            crate::shelling::ShellingMove::PendantRemoval { edge, .. } => {
                let (a, b) = c.edge_ends(edge);
                touched.extend([a, b]);
            }
            crate::shelling::ShellingMove::CellCollapse { face, .. } => {
                touched.extend(c.face_darts(face).iter().map(|&x| c.origin(x)));
            }
        }
        for v in touched {
            refresh(&state, v, &mut met);
        }
        per_step.push(met);
    }
    let max_met = per_step.iter().copied().max().unwrap_or(0);
    let step = per_step.iter().position(|&x| x == max_met).unwrap_or(0);
    let boundary_at_step = record.trace.get(step).copied().unwrap_or(0);
    Ok(IntersectionProfile {
        per_step,
        max_met,
        step,
        boundary_at_step,
    })
}

/// Result of checking the lemma's consequence on one shelling of `Δ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAudit {
    pub strategy: String,
    pub step: usize,
    pub met: usize,
    pub boundary_length: usize,
    pub required_met: usize,
    pub required_length: usize,
}

impl LemmaAudit {
    pub fn new(strategy: &str, n: usize, profile: &IntersectionProfile) -> Self {
        Self {
            strategy: strategy.to_string(),
            step: profile.step,
            met: profile.max_met,
            boundary_length: profile.boundary_at_step,
            required_met: n + 1,
            required_length: fl_lower_bound(n),
        }
    }

    pub fn passed(&self) -> bool {
        self.met >= self.required_met && self.boundary_length >= self.required_length
    }
}

/// Uniform spanning tree by Wilson's loop-erased random walks. Multiple
/// edges are weighted by multiplicity, as the walk picks a uniform incident
/// edge.
pub fn wilson_random_spanning_tree<R: Rng>(g: &Graph, rng: &mut R) -> EdgeSet {
    let n = g.vertex_count();
    let mut tree = EdgeSet::empty(g.edge_count());
    if n == 0 {
        return tree;
    }
    let mut in_tree = vec![false; n];
    let mut step: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); n];
    in_tree[0] = true;
    for start in 0..n {
        let mut u = start;
        while !in_tree[u] {
            let nbrs = g.neighbors(u);
            step[u] = nbrs[rng.gen_range(0..nbrs.len())];
            u = step[u].0;
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            tree.insert(step[u].1);
            u = step[u].0;
        }
    }
    tree
}

/// The generator for sample `i` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

/// Least-squares fit of `y = a·x^b` on log scales; returns `(b, a)`.
pub fn fit_power_law(points: &[(f64, f64)]) -> (f64, f64) {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let (slope, intercept) = fit_line(&logs);
    (slope, intercept.exp())
}

/// Least-squares line `y = slope·x + intercept`.
pub fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    (slope, my - slope * mx)
}

/// Max over min of a family of positive ratios.
pub fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::MIN, f64::max);
    let min = values.iter().copied().fold(f64::MAX, f64::min);
    max / min
}

/// Checks that no four inscribed tree edges are pairwise closer than `n` in
/// the 1-skeleton of `Δ_n`, so any path meeting four of them has length at
/// least `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationAudit {
    pub n: usize,
    pub tree_edges: usize,
    /// Pairs of tree edges at distance below `n`.
    pub close_pairs: usize,
    /// Quadruples that are pairwise closer than `n`.
    pub violations: usize,
}

pub fn separation_audit(delta: &DeltaConstruction) -> SeparationAudit {
    let n = delta.metadata.n;
    let g = Graph::skeleton(delta.diagram.complex());
    let owned = &delta.inscribed.owned;
    let k = owned.len();
    let rows: Vec<Vec<u32>> = owned
        .par_iter()
        .map(|src| {
            let dist = g.bfs_filtered(src, |_| true);
            owned
                .iter()
                .map(|vs| vs.iter().map(|&v| dist[v]).min().unwrap_or(u32::MAX))
                .collect()
        })
        .collect();
    let close: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| (x as usize) < n).collect())
        .collect();
    let close_pairs = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .filter(|&(a, b)| close[a][b])
        .count();
    let mut violations = 0;
    for a in 0..k {
        let na: Vec<usize> = (a + 1..k).filter(|&b| close[a][b]).collect();
        for (i, &b) in na.iter().enumerate() {
            for (j, &c) in na.iter().enumerate().skip(i + 1) {
                if !close[b][c] {
                    continue;
                }
                violations += na[j + 1..].iter().filter(|&&d| close[b][d] && close[c][d]).count();
            }
        }
    }
    SeparationAudit {
        n,
        tree_edges: k,
        close_pairs,
        violations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Compute `Diam G_n` and `Diam G*_n` exactly.
    pub exact_diameters: bool,
    /// Enumerate every spanning tree when there are at most
    /// [`EXHAUSTIVE_EDGE_LIMIT`] edges.
    pub exhaustive: bool,
    /// Run the tunnelling and logarithmic shellings and audit them.
    pub audit_shellings: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            exact_diameters: true,
            exhaustive: false,
            audit_shellings: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Exhaustive {
    NotRequested,
    Skipped {
        edges: usize,
        limit: usize,
    },
    Done {
        trees: usize,
        min_tree_sum: usize,
        violations: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub seed: u64,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub lambda: usize,
    pub boundary_length: usize,
    pub diam_g: Option<usize>,
    pub diam_gdual: Option<usize>,
    /// `Diam G_n + Diam G*_n`.
    pub diam_sum_upper: Option<usize>,
    pub fl_lower: usize,
    /// `n⌊n/3⌋ − ℓ(∂Δ_n)`, the least value `Diam T + 2λ Diam T*` may take.
    pub chain_floor: i64,
    pub samples: usize,
    pub sampled_min_tree_sum: usize,
    pub sampled_max_tree_sum: usize,
    pub sampled_mean_tree_sum: f64,
    /// Samples with `Diam T + 2λ Diam T* < chain_floor`.
    pub chain_violations: usize,
    pub exhaustive: Exhaustive,
    pub intersection_witness: Vec<LemmaAudit>,
}

impl TheoremReport {
    /// True when every audited inequality holds.
    pub fn passed(&self) -> bool {
        let exhaustive_ok = !matches!(self.exhaustive, Exhaustive::Done { violations, .. } if violations > 0);
        self.chain_violations == 0 && exhaustive_ok && self.intersection_witness.iter().all(LemmaAudit::passed)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<(&str, String)> = vec![
            ("n", self.n.to_string()),
            ("seed", self.seed.to_string()),
            (
                "vertices / edges / faces",
                format!("{} / {} / {}", self.vertex_count, self.edge_count, self.face_count),
            ),
            ("lambda", self.lambda.to_string()),
            ("boundary length", self.boundary_length.to_string()),
            ("diam G", opt(self.diam_g)),
            ("diam G*", opt(self.diam_gdual)),
            ("diam G + diam G*", opt(self.diam_sum_upper)),
            ("FL lower bound n*floor(n/3)", self.fl_lower.to_string()),
            ("samples", self.samples.to_string()),
            ("min diam T + diam T*", self.sampled_min_tree_sum.to_string()),
            ("max diam T + diam T*", self.sampled_max_tree_sum.to_string()),
            ("mean diam T + diam T*", format!("{:.2}", self.sampled_mean_tree_sum)),
            ("chain violations", self.chain_violations.to_string()),
            (
                "exhaustive",
                match &self.exhaustive {
                    Exhaustive::NotRequested => "not requested".into(),
                    Exhaustive::Skipped { edges, limit } => format!("skipped ({edges} edges > {limit})"),
                    Exhaustive::Done {
                        trees,
                        min_tree_sum,
                        violations,
                    } => {
                        format!("{trees} trees, min sum {min_tree_sum}, {violations} violations")
                    }
                },
            ),
        ];
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        for (k, v) in rows {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        for a in &self.intersection_witness {
            writeln!(
                f,
                "{:<width$}  step {} meets {} tree edges (need {}), boundary {} (need {}) {}",
                format!("lemma audit [{}]", a.strategy),
                a.step,
                a.met,
                a.required_met,
                a.boundary_length,
                a.required_length,
                if a.passed() { "ok" } else { "FAILED" },
            )?;
        }
        write!(
            f,
            "{:<width$}  {}",
            "result",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Sampled tree diameters `(Diam T, Diam T*)`.
pub fn sample_tree_diameters(d: &Diagram, samples: usize, seed: u64) -> Vec<(usize, usize)> {
    let c = d.complex();
    let g = Graph::skeleton(c);
    let gd = Graph::dual(c);
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, i as u64);
            let t = wilson_random_spanning_tree(&g, &mut rng);
            let td = t.complement();
            let a = tree_diameter(&g, &t).expect("sampled tree is spanning");
            let b = tree_diameter(&gd, &td).expect("complement of a spanning tree is a dual tree");
            (a, b)
        })
        .collect()
}

/// Builds `Δ_n`, samples spanning trees and audits the diameter and
/// filling-length inequalities.
pub fn check_theorem(n: usize, samples: usize, seed: u64, options: CheckOptions) -> Result<TheoremReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("at least one sample is required".into()));
    }
    let delta = assemble_delta(n, None)?;
    let d = &delta.diagram;
    let c = d.complex();
    let g = Graph::skeleton(c);
    let gd = Graph::dual(c);
    let lambda = d.max_cell_degree();
    let boundary = d.boundary_length();
    let fl_lower = fl_lower_bound(n);
    let chain_floor = fl_lower as i64 - boundary as i64;

    let (diam_g, diam_gdual) = if options.exact_diameters {
        (Some(g.diameter()?), Some(gd.diameter()?))
    } else {
        (None, None)
    };

    log::debug!(
        "delta {n}: {} vertices, {} edges, sampling {samples} trees",
        c.vertex_count(),
        c.edge_count()
    );
    let diams = sample_tree_diameters(d, samples, seed);
    let sums: Vec<usize> = diams.iter().map(|&(a, b)| a + b).collect();
    let chain_violations = diams
        .iter()
        .filter(|&&(a, b)| ((a + 2 * lambda * b) as i64) < chain_floor)
        .count();

    let exhaustive = if !options.exhaustive {
        Exhaustive::NotRequested
    } else if c.edge_count() > EXHAUSTIVE_EDGE_LIMIT {
        Exhaustive::Skipped {
            edges: c.edge_count(),
            limit: EXHAUSTIVE_EDGE_LIMIT,
        }
    } else {
        let trees = enumerate_spanning_trees(&g);
        let mut min_tree_sum = usize::MAX;
        let mut violations = 0;
        for t in &trees {
            let a = tree_diameter(&g, t)?;
            let b = tree_diameter(&gd, &t.complement())?;
            min_tree_sum = min_tree_sum.min(a + b);
            if ((a + 2 * lambda * b) as i64) < chain_floor {
                violations += 1;
            }
        }
        Exhaustive::Done {
            trees: trees.len(),
            min_tree_sum,
            violations,
        }
    };

    let mut intersection_witness = Vec::new();
    if options.audit_shellings {
        let t = wilson_random_spanning_tree(&g, &mut sample_rng(seed, 0));
        let tunnel = tunnel_with(d, &t.complement(), ChildOrder::Cyclic, |_, _| {})?;
        let profile = intersection_profile(d, &tunnel, &delta.inscribed)?;
        intersection_witness.push(LemmaAudit::new("tunnel", n, &profile));
        let log = logarithmic_shelling(d)?;
        let profile = intersection_profile(d, &log, &delta.inscribed)?;
        intersection_witness.push(LemmaAudit::new("log", n, &profile));
    }

    Ok(TheoremReport {
        n,
        seed,
        vertex_count: c.vertex_count(),
        edge_count: c.edge_count(),
        face_count: c.face_count(),
        lambda,
        boundary_length: boundary,
        diam_g,
        diam_gdual,
        diam_sum_upper: diam_g.zip(diam_gdual).map(|(a, b)| a + b),
        fl_lower,
        chain_floor,
        samples,
        sampled_min_tree_sum: sums.iter().copied().min().unwrap_or(0),
        sampled_max_tree_sum: sums.iter().copied().max().unwrap_or(0),
        sampled_mean_tree_sum: sums.iter().sum::<usize>() as f64 / samples as f64,
        chain_violations,
        exhaustive,
        intersection_witness,
    })
}
