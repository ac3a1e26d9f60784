//! Verdict engines: each checker evaluates one inequality about distance
//! Laplacian spectral radii on concrete graphs and reports the signed margin.
//!
//! Strict inequalities pass only when the margin exceeds
//! [`STRICT_THRESHOLD`]; margins inside `(-threshold, threshold)` are
//! inconclusive, since rounding noise must not count as evidence. Non-strict
//! bounds pass when the margin is at least `-NONSTRICT_TOLERANCE`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumeration::{enumerate_connected, partitioned_enumerate, tree_from_prufer, CONNECTED_CEILING};
use crate::error::{Error, Result};
use crate::families::{attach_at_two_vertices, attach_two_paths, make_c4_spider, make_h_graph, make_kite};
use crate::graph::{Graph, Vertex};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::report::{round_sig, round_sig_map};
use crate::spectra::{apsp, laplacian_spectrum, spectral_radius};

pub const STRICT_THRESHOLD: f64 = 1e-6;
pub const NONSTRICT_TOLERANCE: f64 = 1e-8;
/// Seed for the randomized edge-addition suite unless overridden.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// The worse of two statuses (`Fail` > `Inconclusive` > `Pass`).
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// `lambda(G) >= Tr_max(G)`.
    Bound,
    /// `lambda(G + uv) <= lambda(G)`.
    EdgeAdd,
    /// `lambda(G_u(k, l)) < lambda(G_u(k + 1, l - 1))`.
    PathShift,
    /// Same shift for paths at two adjacent vertices with equal neighbourhoods.
    CliqueShift,
    /// `lambda(H_n) < lambda(Ki_{n,3})`.
    Dl1,
    /// Every 4-cycle spider is strictly below the kite.
    Dl2,
    /// The kite is the unique maximizer among unicyclic graphs.
    Theorem,
    /// `lambda_{n-1} >= n`, with equality iff the complement is disconnected.
    #[serde(rename = "lambda-n-1")]
    LambdaN1,
}

impl LemmaId {
    pub const ALL: [LemmaId; 8] = [
        LemmaId::Bound,
        LemmaId::EdgeAdd,
        LemmaId::PathShift,
        LemmaId::CliqueShift,
        LemmaId::Dl1,
        LemmaId::Dl2,
        LemmaId::Theorem,
        LemmaId::LambdaN1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Bound => "bound",
            LemmaId::EdgeAdd => "edge-add",
            LemmaId::PathShift => "path-shift",
            LemmaId::CliqueShift => "clique-shift",
            LemmaId::Dl1 => "dl1",
            LemmaId::Dl2 => "dl2",
            LemmaId::Theorem => "theorem",
            LemmaId::LambdaN1 => "lambda-n-1",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown lemma {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankedGraph {
    pub graph6: String,
    #[serde(serialize_with = "round_sig")]
    pub lambda: f64,
}

/// Outcome of an exhaustive search over one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalCertificate {
    pub n: usize,
    pub classes: usize,
    pub argmax_graph6: String,
    pub argmax_is_kite: bool,
    /// Up to three classes with the largest radius, descending.
    pub top: Vec<RankedGraph>,
    /// Radius of the best class minus the second best (`null` with one class).
    #[serde(serialize_with = "round_sig")]
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    pub instance: String,
    pub status: Status,
    /// Signed gap backing the inequality; positive means it holds. `null` in
    /// JSON when no instance constrains it (an empty minimum).
    #[serde(serialize_with = "round_sig")]
    pub margin: f64,
    /// Number of graphs or parameter tuples the verdict covers.
    pub instances: usize,
    #[serde(serialize_with = "round_sig_map")]
    pub evidence: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ExtremalCertificate>,
}

impl LemmaVerdict {
    fn new(lemma: LemmaId, instance: impl Into<String>, status: Status, margin: f64) -> Self {
        LemmaVerdict {
            lemma,
            instance: instance.into(),
            status,
            margin,
            instances: 1,
            evidence: BTreeMap::new(),
            witness: None,
            certificate: None,
        }
    }

    fn with(mut self, key: &str, value: f64) -> Self {
        self.evidence.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

/// One closed-form transmission value checked against the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransmissionCheck {
    pub graph: String,
    pub role: String,
    pub computed: u64,
    /// Twice the closed-form value; the forms are polynomials over 2.
    pub twice_formula: i64,
    pub formula: &'static str,
}

impl TransmissionCheck {
    pub fn holds(&self) -> bool {
        2 * self.computed as i64 == self.twice_formula
    }
}

/// Published closed forms for `H_n`: `Tr(w_{n-4}) = (n^2-n-8)/2`,
/// `Tr(w_1) = (n^2-9n+20)/2`, `Tr(u_1) = Tr(v_1) = (n^2-7n+24)/2`,
/// `Tr(u_2) = Tr(v_2) = (n^2-5n+20)/2`.
///
/// The `w_1` form omits the four branch vertices; the tree's actual value is
/// `(n^2-9n+32)/2`, so that check never holds.
pub fn h_graph_transmission_checks(n: usize) -> Result<Vec<TransmissionCheck>> {
    let (g, roles) = make_h_graph(n)?;
    let d = apsp(&g)?;
    let n = n as i64;
    let far = format!("w{}", n - 4);
    let forms: [(&str, i64, &'static str); 6] = [
        (&far, n * n - n - 8, "(n^2-n-8)/2"),
        ("w1", n * n - 9 * n + 20, "(n^2-9n+20)/2"),
        ("u1", n * n - 7 * n + 24, "(n^2-7n+24)/2"),
        ("v1", n * n - 7 * n + 24, "(n^2-7n+24)/2"),
        ("u2", n * n - 5 * n + 20, "(n^2-5n+20)/2"),
        ("v2", n * n - 5 * n + 20, "(n^2-5n+20)/2"),
    ];
    Ok(forms
        .into_iter()
        .map(|(role, twice, formula)| TransmissionCheck {
            graph: format!("h:n={n}"),
            role: role.to_string(),
            computed: d.transmission(roles.vertex(role)),
            twice_formula: twice,
            formula,
        })
        .collect())
}

/// Closed forms for the kite: pendant vertex `(n^2-n-2)/2`, the two degree-2
/// triangle vertices `(n^2-3n+4)/2`.
pub fn kite_transmission_checks(n: usize) -> Result<Vec<TransmissionCheck>> {
    if n < 4 {
        return Err(Error::BadOrder { family: "kite", n });
    }
    let (g, roles) = make_kite(n)?;
    let d = apsp(&g)?;
    let n = n as i64;
    let forms: [(&str, i64, &'static str); 3] = [
        ("pendant", n * n - n - 2, "(n^2-n-2)/2"),
        ("u2", n * n - 3 * n + 4, "(n^2-3n+4)/2"),
        ("v2", n * n - 3 * n + 4, "(n^2-3n+4)/2"),
    ];
    Ok(forms
        .into_iter()
        .map(|(role, twice, formula)| TransmissionCheck {
            graph: format!("kite:n={n}"),
            role: role.to_string(),
            computed: d.transmission(roles.vertex(role)),
            twice_formula: twice,
            formula,
        })
        .collect())
}

/// Compositions `l1 + l2 + l3 + l4 = total`, one per orbit of the dihedral
/// group of the 4-cycle (the lexicographically smallest image), sorted.
pub fn c4_compositions(total: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            for c in 0..=total - a - b {
                let l = [a, b, c, total - a - b - c];
                if dihedral_images(l).into_iter().min() == Some(l) {
                    out.push(l);
                }
            }
        }
    }
    out
}

fn dihedral_images(l: [usize; 4]) -> [[usize; 4]; 8] {
    let mut out = [[0; 4]; 8];
    for r in 0..4 {
        out[r] = [l[r], l[(r + 1) % 4], l[(r + 2) % 4], l[(r + 3) % 4]];
        out[r + 4] = [l[r], l[(r + 3) % 4], l[(r + 2) % 4], l[(r + 1) % 4]];
    }
    out
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.n()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub strict: f64,
    pub nonstrict: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            strict: STRICT_THRESHOLD,
            nonstrict: NONSTRICT_TOLERANCE,
        }
    }
}

impl Tolerances {
    pub fn strict_status(&self, margin: f64) -> Status {
        if margin > self.strict {
            Status::Pass
        } else if margin < -self.strict {
            Status::Fail
        } else {
            Status::Inconclusive
        }
    }

    pub fn nonstrict_status(&self, margin: f64) -> Status {
        if margin >= -self.nonstrict {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Runs the checkers under one set of tolerances.
#[derive(Clone, Copy, Debug, Default)]
pub struct LemmaLab {
    pub tol: Tolerances,
}

impl LemmaLab {
    pub fn new(tol: Tolerances) -> Self {
        LemmaLab { tol }
    }

    pub fn check_transmission_bound(&self, g: &Graph) -> Result<LemmaVerdict> {
        let d = apsp(g)?;
        let lambda = spectral_radius(g)?;
        let tr_max = d.max_transmission() as f64;
        let margin = lambda - tr_max;
        Ok(
            LemmaVerdict::new(LemmaId::Bound, g6(g), self.tol.nonstrict_status(margin), margin)
                .with("lambda", lambda)
                .with("tr_max", tr_max),
        )
    }

    pub fn check_edge_addition_monotone(&self, g: &Graph, u: Vertex, v: Vertex) -> Result<LemmaVerdict> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let plus = g.add_edge(u, v)?;
        let before = spectral_radius(g)?;
        let after = spectral_radius(&plus)?;
        let margin = before - after;
        Ok(LemmaVerdict::new(
            LemmaId::EdgeAdd,
            format!("{} +{{{u},{v}}}", g6(g)),
            self.tol.nonstrict_status(margin),
            margin,
        )
        .with("lambda_before", before)
        .with("lambda_after", after))
    }

    pub fn check_path_shift(&self, g: &Graph, u: Vertex, k: usize, l: usize) -> Result<LemmaVerdict> {
        if !(k >= l && l >= 1) {
            return Err(Error::BadParams(format!("need k >= l >= 1, got k={k}, l={l}")));
        }
        let before = spectral_radius(&attach_two_paths(g, u, k, l)?)?;
        let after = spectral_radius(&attach_two_paths(g, u, k + 1, l - 1)?)?;
        let margin = after - before;
        Ok(LemmaVerdict::new(
            LemmaId::PathShift,
            format!("{} u={u} k={k} l={l}", g6(g)),
            self.tol.strict_status(margin),
            margin,
        )
        .with("lambda_kl", before)
        .with("lambda_shifted", after))
    }

    pub fn check_clique_shift(&self, g: &Graph, u: Vertex, v: Vertex, k: usize, l: usize) -> Result<LemmaVerdict> {
        if !g.has_edge(u, v) {
            return Err(Error::PreconditionViolated(format!("{{{u},{v}}} is not an edge")));
        }
        let without = |x: Vertex, y: Vertex| -> Vec<Vertex> {
            g.neighbors(x).iter().copied().filter(|&w| w != y).collect()
        };
        let (nu, nv) = (without(u, v), without(v, u));
        if nu != nv || nu.is_empty() {
            return Err(Error::PreconditionViolated(format!(
                "N(u) - v = {nu:?} and N(v) - u = {nv:?} must be equal and nonempty"
            )));
        }
        if !(k >= l && l >= 1) {
            return Err(Error::BadParams(format!("need k >= l >= 1, got k={k}, l={l}")));
        }
        let before = spectral_radius(&attach_at_two_vertices(g, u, v, k, l)?)?;
        let after = spectral_radius(&attach_at_two_vertices(g, u, v, k + 1, l - 1)?)?;
        let margin = after - before;
        Ok(LemmaVerdict::new(
            LemmaId::CliqueShift,
            format!("{} u={u} v={v} k={k} l={l}", g6(g)),
            self.tol.strict_status(margin),
            margin,
        )
        .with("lambda_kl", before)
        .with("lambda_shifted", after))
    }

    /// `lambda(Ki_{n,3}) - lambda(H_n)`, with the transmission closed forms
    /// recorded as evidence (`tr_<role>` and `tr_<role>_formula`).
    pub fn check_h_vs_kite(&self, n: usize) -> Result<LemmaVerdict> {
        if n < 6 {
            return Err(Error::BadOrder { family: "h", n });
        }
        let kite = spectral_radius(&make_kite(n)?.0)?;
        let h = spectral_radius(&make_h_graph(n)?.0)?;
        let margin = kite - h;
        let mut verdict = LemmaVerdict::new(LemmaId::Dl1, format!("n={n}"), self.tol.strict_status(margin), margin)
            .with("lambda_kite", kite)
            .with("lambda_h", h);
        let checks = h_graph_transmission_checks(n)?;
        let mismatches = checks.iter().filter(|c| !c.holds()).count();
        for c in &checks {
            verdict = verdict
                .with(&format!("tr_{}", c.role), c.computed as f64)
                .with(&format!("tr_{}_formula", c.role), c.twice_formula as f64 / 2.0);
        }
        Ok(verdict.with("transmission_formula_mismatches", mismatches as f64))
    }

    /// `min` over the 4-cycle spiders of order `n` of
    /// `lambda(Ki_{n,3}) - lambda(C_n(l1..l4))`.
    pub fn check_c4_family(&self, n: usize) -> Result<LemmaVerdict> {
        if n < 4 {
            return Err(Error::BadOrder { family: "c4spider", n });
        }
        let kite = spectral_radius(&make_kite(n)?.0)?;
        let members = c4_compositions(n - 4);
        let radii: Vec<f64> = members
            .par_iter()
            .map(|&l| spectral_radius(&make_c4_spider(l)?.0))
            .collect::<Result<_>>()?;
        let (worst, &best_member) = radii
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("at least one composition");
        let margin = kite - best_member;
        let [a, b, c, d] = members[worst];
        let mut v = LemmaVerdict::new(LemmaId::Dl2, format!("n={n}"), self.tol.strict_status(margin), margin)
            .with("lambda_kite", kite)
            .with("lambda_max_member", best_member);
        v.instances = members.len();
        v.witness = Some(format!("c4spider:{a},{b},{c},{d}"));
        Ok(v)
    }

    pub fn extremal_search(&self, n: usize) -> Result<LemmaVerdict> {
        self.extremal_search_sharded(n, 1)
    }

    /// Exhaustive check that the kite is the unique maximizer among unicyclic
    /// graphs of order `n`. Margin: the kite's radius minus the largest radius
    /// of any other class (`+inf` for `n = 3`, where there is no other class).
    pub fn extremal_search_sharded(&self, n: usize, shards: usize) -> Result<LemmaVerdict> {
        let report = partitioned_enumerate(n, shards)?;
        let radius = |s: &String| -> Result<f64> { spectral_radius(&decode_graph6(s)?) };
        let radii: Vec<f64> = if shards > 1 {
            report.graphs.par_iter().map(radius).collect::<Result<_>>()?
        } else {
            report.graphs.iter().map(radius).collect::<Result<_>>()?
        };
        let kite = canonical_form(&make_kite(n)?.0)?.into_string();
        let kite_idx = report
            .graphs
            .iter()
            .position(|g| *g == kite)
            .ok_or_else(|| Error::PreconditionViolated(format!("kite missing from enumeration of n={n}")))?;

        let mut ranked: Vec<RankedGraph> = report
            .graphs
            .iter()
            .zip(&radii)
            .map(|(g, &lambda)| RankedGraph { graph6: g.clone(), lambda })
            .collect();
        ranked.sort_by(|a, b| b.lambda.total_cmp(&a.lambda).then_with(|| a.graph6.cmp(&b.graph6)));
        let best_other = radii
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != kite_idx)
            .map(|(_, &r)| r)
            .fold(f64::NEG_INFINITY, f64::max);
        let margin = radii[kite_idx] - best_other;
        let gap = match ranked.as_slice() {
            [a, b, ..] => a.lambda - b.lambda,
            _ => f64::INFINITY,
        };
        let certificate = ExtremalCertificate {
            n,
            classes: report.count,
            argmax_is_kite: ranked[0].graph6 == kite,
            argmax_graph6: ranked[0].graph6.clone(),
            top: ranked.iter().take(3).cloned().collect(),
            gap,
        };
        let mut v = LemmaVerdict::new(LemmaId::Theorem, format!("n={n}"), self.tol.strict_status(margin), margin)
            .with("lambda_kite", radii[kite_idx]);
        if best_other.is_finite() {
            v = v.with("lambda_runner_up", best_other);
        }
        v.instances = report.count;
        v.witness = Some(kite);
        v.certificate = Some(certificate);
        Ok(v)
    }

    /// Over all connected graphs of order `n`: `lambda_{n-1} >= n`, with
    /// equality exactly when the complement is disconnected. The margin is the
    /// smallest `lambda_{n-1} - n` among graphs with connected complement.
    pub fn check_algebraic_connectivity_analogue(&self, n: usize) -> Result<LemmaVerdict> {
        if n < 3 {
            return Err(Error::BadOrder { family: "connected", n });
        }
        if n > CONNECTED_CEILING {
            return Err(Error::TooLarge { n, ceiling: CONNECTED_CEILING });
        }
        let graphs = enumerate_connected(n)?;
        let rows: Vec<(f64, bool)> = graphs
            .par_iter()
            .map(|g| {
                let s = laplacian_spectrum(g)?;
                Ok((s.values()[n - 2], !g.complement().is_connected()))
            })
            .collect::<Result<_>>()?;
        let nf = n as f64;
        let mut margin = f64::INFINITY;
        let mut worst_equality: f64 = 0.0;
        let mut lowest: f64 = f64::INFINITY;
        let mut witness = None;
        for (g, &(l, comp_disc)) in graphs.iter().zip(&rows) {
            lowest = lowest.min(l - nf);
            if comp_disc {
                worst_equality = worst_equality.max((l - nf).abs());
            } else if l - nf < margin {
                margin = l - nf;
                witness = Some(g6(g));
            }
        }
        let mut status = self.tol.strict_status(margin);
        if lowest < -self.tol.nonstrict || worst_equality > self.tol.nonstrict {
            status = Status::Fail;
        }
        let disconnected = rows.iter().filter(|r| r.1).count();
        let mut v = LemmaVerdict::new(LemmaId::LambdaN1, format!("n={n}"), status, margin)
            .with("complement_disconnected", disconnected as f64)
            .with("max_equality_deviation", worst_equality)
            .with("min_lambda_minus_n", lowest);
        v.instances = graphs.len();
        v.witness = witness;
        Ok(v)
    }

    /// Path shifts at `u` for every `k >= l >= 1` with `k + l <= max_total`.
    pub fn path_shift_sweep(&self, g: &Graph, u: Vertex, max_total: usize) -> Result<Vec<LemmaVerdict>> {
        shift_params(max_total)
            .par_iter()
            .map(|&(k, l)| self.check_path_shift(g, u, k, l))
            .collect()
    }

    /// Clique shifts on `uv` for every `k >= l >= 1` with `k + l <= max_total`.
    pub fn clique_shift_sweep(&self, g: &Graph, u: Vertex, v: Vertex, max_total: usize) -> Result<Vec<LemmaVerdict>> {
        shift_params(max_total)
            .par_iter()
            .map(|&(k, l)| self.check_clique_shift(g, u, v, k, l))
            .collect()
    }

    /// Random labeled trees (uniform Prüfer sequences) of order `3..=max_n`,
    /// each with one uniformly chosen non-edge added.
    pub fn edge_addition_random_suite(&self, seed: u64, trials: usize, max_n: usize) -> Result<Vec<LemmaVerdict>> {
        if max_n < 3 {
            return Err(Error::BadParams(format!("max_n must be at least 3, got {max_n}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cases = Vec::with_capacity(trials);
        for _ in 0..trials {
            let n = rng.gen_range(3..=max_n);
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            let tree = tree_from_prufer(&seq)?;
            let non_edges: Vec<(Vertex, Vertex)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !tree.has_edge(u, v))
                .collect();
            let &(u, v) = non_edges.choose(&mut rng).expect("trees of order >= 3 have a non-edge");
            cases.push((tree, u, v));
        }
        cases
            .par_iter()
            .map(|(t, u, v)| self.check_edge_addition_monotone(t, *u, *v))
            .collect()
    }
}

fn shift_params(max_total: usize) -> Vec<(usize, usize)> {
    (2..=max_total)
        .flat_map(|total| (1..=total / 2).map(move |l| (total - l, l)))
        .collect()
}

/// Worst status across verdicts, `Pass` for an empty list.
pub fn overall_status(verdicts: &[LemmaVerdict]) -> Status {
    verdicts.iter().fold(Status::Pass, |acc, v| acc.and(v.status))
}
