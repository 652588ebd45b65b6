//! The theorem-verification report: one graph in, a fixed ordered list of
//! claims out, each gated by the hypotheses it needs.
//!
//! Equality claims apply when the graph is C5-free and vertex decomposable;
//! d = d' applies on chordal graphs; the chain and the two lower bounds apply
//! everywhere; the epsilon claims need an isolated-vertex-free graph. A claim
//! whose inputs hit a resource cutoff is marked inapplicable with note
//! "skipped: resource" instead of failing the report.

use serde::Serialize;

use crate::betti::{graph_homological_invariants, krull_dim};
use crate::config::Config;
use crate::decomp::{is_bipartite, is_c5_free, is_chordal, is_vertex_decomposable};
use crate::dual::{
    decomposition_identity_check, double_dual_check, dual_sequence_bounds_check,
    pd_reg_dual_check, primary_decomposition_check, terai_check,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::FieldChar;
use crate::invariants::{
    bight, c_number, d_number, domination_number, edgewise_domination_number, is_unmixed,
    min_max_maximal_independent, DPrimeEngine,
};
use crate::vset::VertexSet;

pub const SKIPPED_RESOURCE: &str = "skipped: resource";

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub applicable: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub pass: Option<bool>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn failed(&self) -> bool {
        self.applicable && self.pass == Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassFlags {
    pub c5_free: bool,
    pub c5_witness: Option<VertexSet>,
    pub vertex_decomposable: Option<bool>,
    pub chordal: bool,
    pub bipartite: bool,
    pub unmixed: Option<bool>,
    pub has_isolated: bool,
}

/// Combinatorial invariants; `None` means the computation hit a cutoff or is
/// undefined (epsilon with isolated vertices).
#[derive(Debug, Clone, Serialize)]
pub struct InvariantBundle {
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub d_prime: Option<usize>,
    pub bight: Option<usize>,
    pub gamma: Option<usize>,
    pub epsilon_open: Option<usize>,
    pub epsilon_closed: Option<usize>,
    pub min_maximal_independent: Option<usize>,
    pub max_maximal_independent: Option<usize>,
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleBundle {
    pub field_char: u32,
    /// rows (i, j, beta), sorted
    pub betti: Vec<(usize, usize, u64)>,
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub version: String,
    pub field_char: u32,
    pub seed: Option<u64>,
    pub dprime_engine: String,
    pub cutoffs: Config,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub graph: GraphSummary,
    pub flags: ClassFlags,
    pub invariants: InvariantBundle,
    pub oracle: Option<OracleBundle>,
    pub verdicts: Vec<Verdict>,
    pub meta: Meta,
}

impl VerificationReport {
    pub fn failures(&self) -> Vec<&Verdict> {
        self.verdicts.iter().filter(|v| v.failed()).collect()
    }

    pub fn all_applicable_pass(&self) -> bool {
        self.failures().is_empty()
    }

    /// Canonical JSON: sorted keys, stable across runs for fixed inputs.
    pub fn to_canonical_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)
            .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
        serde_json::to_string_pretty(&value)
            .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))
    }
}

/// Keeps resource errors as `None` (to become "skipped: resource" verdicts)
/// and propagates everything else.
fn allow_resource<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Resource(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn opt_i64(v: Option<usize>) -> Option<i64> {
    v.map(|x| x as i64)
}

fn claim(
    id: &str,
    applicable: bool,
    lhs: Option<i64>,
    rhs: Option<i64>,
    rel: fn(i64, i64) -> bool,
) -> Verdict {
    if !applicable {
        return Verdict {
            claim: id.into(),
            applicable: false,
            lhs,
            rhs,
            pass: None,
            note: None,
        };
    }
    match (lhs, rhs) {
        (Some(a), Some(b)) => Verdict {
            claim: id.into(),
            applicable: true,
            lhs,
            rhs,
            pass: Some(rel(a, b)),
            note: None,
        },
        _ => Verdict {
            claim: id.into(),
            applicable: false,
            lhs,
            rhs,
            pass: None,
            note: Some(SKIPPED_RESOURCE.into()),
        },
    }
}

fn eq(a: i64, b: i64) -> bool {
    a == b
}

fn le(a: i64, b: i64) -> bool {
    a <= b
}

fn ge(a: i64, b: i64) -> bool {
    a >= b
}

pub fn verify_theorems(
    g: &Graph,
    field: FieldChar,
    cfg: &Config,
    engine: &dyn DPrimeEngine,
    seed: Option<u64>,
) -> Result<VerificationReport> {
    let n = g.n();
    let has_isolated = (0..n).any(|v| g.nb(v).is_empty());

    let (c5_free, c5_witness) = is_c5_free(g);
    let vd = allow_resource(is_vertex_decomposable(g, cfg))?.map(|(yes, _)| yes);
    let chordal = is_chordal(g);
    let bipartite = is_bipartite(g);
    let unmixed = allow_resource(is_unmixed(g, cfg))?;

    let c = allow_resource(c_number(g, cfg))?.map(|o| o.value);
    let d = allow_resource(d_number(g, cfg))?.map(|o| o.value);
    let d_prime_outcome = allow_resource(engine.compute(g, cfg))?;
    let d_prime = d_prime_outcome.as_ref().map(|o| o.value);
    let bight_v = allow_resource(bight(g, cfg))?;
    let gamma = allow_resource(domination_number(g, cfg))?;
    let (eps_open, eps_closed) = if has_isolated {
        (None, None)
    } else {
        (
            allow_resource(edgewise_domination_number(g, cfg, false))?,
            allow_resource(edgewise_domination_number(g, cfg, true))?,
        )
    };
    let epsilon = if cfg.epsilon_closed { eps_closed } else { eps_open };
    let minmax = allow_resource(min_max_maximal_independent(g, cfg))?;
    let dim = allow_resource(krull_dim(g, cfg))?;

    let oracle = allow_resource(graph_homological_invariants(g, field, cfg))?;
    let (reg, pd, depth) = match &oracle {
        Some(h) => (Some(h.reg), Some(h.pd), Some(h.depth)),
        None => (None, None, None),
    };

    // hypothesis gate for the equality claims
    let hyp = c5_free && vd == Some(true);

    let mut verdicts = Vec::new();
    verdicts.push(claim("reg_eq_c", hyp, opt_i64(reg), opt_i64(c), eq));
    verdicts.push(claim("pd_eq_bight", hyp, opt_i64(pd), opt_i64(bight_v), eq));
    verdicts.push(claim("pd_eq_d_prime", hyp, opt_i64(pd), opt_i64(d_prime), eq));
    verdicts.push(claim(
        "depth_eq_min_maximal_independent",
        hyp,
        opt_i64(depth),
        opt_i64(minmax.map(|(min, _)| min)),
        eq,
    ));
    let cm = match (depth, dim) {
        (Some(a), Some(b)) => Some((a == b) as i64),
        _ => None,
    };
    verdicts.push(claim(
        "cm_iff_unmixed",
        hyp,
        cm,
        unmixed.map(|u| u as i64),
        eq,
    ));
    verdicts.push(claim(
        "d_eq_d_prime_chordal",
        chordal,
        opt_i64(d),
        opt_i64(d_prime),
        eq,
    ));

    // the unconditional chain c <= d <= d' <= bight <= pd (<= n - eps)
    verdicts.push(claim("c_le_d", true, opt_i64(c), opt_i64(d), le));
    verdicts.push(claim("d_le_d_prime", true, opt_i64(d), opt_i64(d_prime), le));
    verdicts.push(claim(
        "d_prime_le_bight",
        true,
        opt_i64(d_prime),
        opt_i64(bight_v),
        le,
    ));
    verdicts.push(claim("bight_le_pd", true, opt_i64(bight_v), opt_i64(pd), le));
    verdicts.push(claim(
        "pd_le_n_minus_epsilon",
        !has_isolated,
        opt_i64(pd),
        epsilon.map(|e| n as i64 - e as i64),
        le,
    ));
    let max_eps_gamma = match (epsilon, gamma) {
        (Some(e), Some(gm)) => Some(e.max(gm) as i64),
        _ => None,
    };
    verdicts.push(claim(
        "max_epsilon_gamma_le_d_prime",
        !has_isolated,
        max_eps_gamma,
        opt_i64(d_prime),
        le,
    ));

    // lower bounds valid with no hypotheses at all
    verdicts.push(claim("reg_ge_c", true, opt_i64(reg), opt_i64(c), ge));
    verdicts.push(claim("pd_ge_d", true, opt_i64(pd), opt_i64(d), ge));

    // duality identities, always checked
    let terai = allow_resource(terai_check(g, field, cfg))?;
    verdicts.push(claim(
        "terai",
        true,
        opt_i64(terai.as_ref().map(|t| t.pd_dual)),
        opt_i64(terai.as_ref().map(|t| t.reg_quotient)),
        eq,
    ));
    let primary = allow_resource(primary_decomposition_check(g, cfg))?;
    verdicts.push(claim(
        "primary_decomposition",
        true,
        primary.map(|b| b as i64),
        Some(1),
        eq,
    ));
    let ddual = allow_resource(double_dual_check(g, cfg))?;
    verdicts.push(claim("double_dual", true, ddual.map(|b| b as i64), Some(1), eq));
    let pd_reg = allow_resource(pd_reg_dual_check(g, field, cfg))?;
    verdicts.push(claim(
        "pd_eq_reg_dual",
        true,
        pd_reg.map(|b| b as i64),
        Some(1),
        eq,
    ));

    // per-vertex identities, aggregated: lhs = vertices passing, rhs = total
    let non_isolated: Vec<usize> = (0..n).filter(|&v| !g.nb(v).is_empty()).collect();
    let total = non_isolated.len();
    let mut decomposition_ok = Some(0i64);
    let mut bounds_ok = Some(0i64);
    for &x in &non_isolated {
        match allow_resource(decomposition_identity_check(g, x, cfg))? {
            Some(true) => decomposition_ok = decomposition_ok.map(|k| k + 1),
            Some(false) => {}
            None => decomposition_ok = None,
        }
        match allow_resource(dual_sequence_bounds_check(g, x, field, cfg))? {
            Some(true) => bounds_ok = bounds_ok.map(|k| k + 1),
            Some(false) => {}
            None => bounds_ok = None,
        }
    }
    verdicts.push(claim(
        "decomposition_identity_all_vertices",
        total > 0,
        decomposition_ok,
        Some(total as i64),
        eq,
    ));
    verdicts.push(claim(
        "dual_sequence_bounds_all_vertices",
        total > 0,
        bounds_ok,
        Some(total as i64),
        eq,
    ));

    // boundary-case marker: equalities gated off but reg differs from c
    if !hyp {
        if let (Some(r), Some(cv)) = (reg, c) {
            if r != cv {
                verdicts.push(Verdict {
                    claim: "info_reg_differs_from_c_outside_hypotheses".into(),
                    applicable: false,
                    lhs: Some(r as i64),
                    rhs: Some(cv as i64),
                    pass: None,
                    note: Some(
                        "equality gated off; the gap shows the hypotheses are not vacuous".into(),
                    ),
                });
            }
        }
    }

    Ok(VerificationReport {
        graph: GraphSummary {
            n,
            m: g.edge_count(),
            edges: g.edges().to_vec(),
        },
        flags: ClassFlags {
            c5_free,
            c5_witness,
            vertex_decomposable: vd,
            chordal,
            bipartite,
            unmixed,
            has_isolated,
        },
        invariants: InvariantBundle {
            c,
            d,
            d_prime,
            bight: bight_v,
            gamma,
            epsilon_open: eps_open,
            epsilon_closed: eps_closed,
            min_maximal_independent: minmax.map(|(min, _)| min),
            max_maximal_independent: minmax.map(|(_, max)| max),
            dim,
        },
        oracle: oracle.map(|h| OracleBundle {
            field_char: h.table.field_char,
            betti: h
                .table
                .entries
                .iter()
                .map(|(&(i, j), &b)| (i, j, b))
                .collect(),
            reg: h.reg,
            pd: h.pd,
            depth: h.depth,
        }),
        verdicts,
        meta: Meta {
            version: env!("CARGO_PKG_VERSION").into(),
            field_char: field.as_u32(),
            seed,
            dprime_engine: engine.name().into(),
            cutoffs: cfg.clone(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::invariants::MatchingEngine;

    fn report(g: &Graph) -> VerificationReport {
        verify_theorems(g, FieldChar::Zero, &Config::default(), &MatchingEngine, None).unwrap()
    }

    fn verdict<'a>(r: &'a VerificationReport, id: &str) -> &'a Verdict {
        r.verdicts.iter().find(|v| v.claim == id).unwrap()
    }

    #[test]
    fn p5_all_pass() {
        let r = report(&path(5));
        assert!(r.all_applicable_pass());
        let v = verdict(&r, "reg_eq_c");
        assert!(v.applicable);
        assert_eq!((v.lhs, v.rhs), (Some(2), Some(2)));
        let v = verdict(&r, "pd_eq_d_prime");
        assert_eq!((v.lhs, v.rhs), (Some(3), Some(3)));
        let v = verdict(&r, "depth_eq_min_maximal_independent");
        assert_eq!((v.lhs, v.rhs), (Some(2), Some(2)));
    }

    #[test]
    fn c5_gating_and_info_line() {
        let r = report(&cycle(5));
        assert!(r.all_applicable_pass());
        assert!(!r.flags.c5_free);
        assert_eq!(r.flags.vertex_decomposable, Some(true));
        for id in ["reg_eq_c", "pd_eq_bight", "cm_iff_unmixed"] {
            assert!(!verdict(&r, id).applicable, "{id}");
        }
        assert!(verdict(&r, "c_le_d").applicable);
        let info = verdict(&r, "info_reg_differs_from_c_outside_hypotheses");
        assert_eq!((info.lhs, info.rhs), (Some(2), Some(1)));
    }

    #[test]
    fn c4_equalities_gated_off_but_passes() {
        let r = report(&cycle(4));
        assert_eq!(r.flags.vertex_decomposable, Some(false));
        assert!(!verdict(&r, "reg_eq_c").applicable);
        assert!(r.all_applicable_pass());
        assert!(verdict(&r, "terai").applicable);
        assert_eq!(verdict(&r, "terai").pass, Some(true));
    }

    #[test]
    fn resource_skip_marks_inapplicable() {
        let mut cfg = Config::default();
        cfg.oracle_cutoff = 2;
        let r =
            verify_theorems(&path(4), FieldChar::Zero, &cfg, &MatchingEngine, None).unwrap();
        let v = verdict(&r, "reg_eq_c");
        assert!(!v.applicable);
        assert_eq!(v.note.as_deref(), Some(SKIPPED_RESOURCE));
        assert!(r.all_applicable_pass());
        // non-oracle claims still evaluated
        assert_eq!(verdict(&r, "c_le_d").pass, Some(true));
    }

    #[test]
    fn canonical_json_is_stable_and_sorted() {
        let r = report(&path(4));
        let a = r.to_canonical_json().unwrap();
        let b = report(&path(4)).to_canonical_json().unwrap();
        assert_eq!(a, b);
        let top: serde_json::Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = top.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["flags", "graph", "invariants", "meta", "oracle", "verdicts"]
        );
    }

    #[test]
    fn isolated_vertex_gates_epsilon_claims() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let r = report(&g);
        assert!(r.flags.has_isolated);
        assert!(!verdict(&r, "pd_le_n_minus_epsilon").applicable);
        assert!(!verdict(&r, "max_epsilon_gamma_le_d_prime").applicable);
        assert!(r.all_applicable_pass());
    }
}
