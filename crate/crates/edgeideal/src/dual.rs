//! Alexander duality for edge ideals: the cover ideal I(G)^∨, the
//! vertex-split decomposition identities, primary decomposition, and Terai
//! duality.

use serde::Serialize;

use crate::betti::{hochster_betti_table, ideal_of_graph};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::FieldChar;
use crate::ideal::SquarefreeMonomialIdeal;
use crate::vset::VertexSet;

/// I(G)^∨ with each generator tagged by its minimal vertex cover. For the
/// edgeless graph this is the unit ideal (generated by the empty cover).
#[derive(Debug, Clone, Serialize)]
pub struct CoverIdeal {
    #[serde(skip)]
    pub ideal: SquarefreeMonomialIdeal,
    pub covers: Vec<VertexSet>,
}

pub fn alexander_dual_of_edge_ideal(g: &Graph, cfg: &Config) -> Result<CoverIdeal> {
    let covers = g.minimal_vertex_covers(cfg)?;
    let ideal = if g.edge_count() == 0 {
        SquarefreeMonomialIdeal::unit(g.n())
    } else {
        SquarefreeMonomialIdeal::from_generators(g.n(), &covers)
    };
    Ok(CoverIdeal { ideal, covers })
}

/// Checks the two vertex-split identities for I(G)^∨ at a non-isolated x
/// with N(x) = {y_1..y_t}, G' = G∖{x}, G'' = G∖N[x]:
///
/// * I(G)^∨ = x·I(G')^∨ + y_1…y_t·I(G'')^∨
/// * x·y_1…y_t·I(G'')^∨ = x·I(G')^∨ ∩ y_1…y_t·I(G'')^∨
pub fn decomposition_identity_check(g: &Graph, x: usize, cfg: &Config) -> Result<bool> {
    let nx = g.neighbors(x)?;
    if nx.is_empty() {
        return Err(Error::Domain(format!(
            "vertex {x} is isolated; the decomposition requires N(x) nonempty"
        )));
    }
    let dual = alexander_dual_of_edge_ideal(g, cfg)?.ideal;

    // duals of the subgraphs, lifted back to the host variable set
    let dual_minus_x = lifted_dual(g, g.vertices().without(x), cfg)?;
    let dual_minus_nbhd = lifted_dual(g, g.vertices().difference(nx.with(x)), cfg)?;

    // the multiplied supports are disjoint from the lifted generators
    debug_assert!(dual_minus_x.support_disjoint_from(VertexSet::singleton(x)));
    debug_assert!(dual_minus_nbhd.support_disjoint_from(nx.with(x)));

    let left = dual_minus_x.multiply_support(VertexSet::singleton(x));
    let right = dual_minus_nbhd.multiply_support(nx);

    let sum_ok = dual == left.sum(&right);
    let product = dual_minus_nbhd.multiply_support(nx.with(x));
    let intersect_ok = product == left.intersect(&right);
    Ok(sum_ok && intersect_ok)
}

/// Cover ideal of the induced subgraph on `keep`, expressed in host-graph
/// variables.
fn lifted_dual(g: &Graph, keep: VertexSet, cfg: &Config) -> Result<SquarefreeMonomialIdeal> {
    let (sub, map) = g.induced_subgraph(keep)?;
    let dual = alexander_dual_of_edge_ideal(&sub, cfg)?.ideal;
    if dual.is_unit() {
        return Ok(SquarefreeMonomialIdeal::unit(g.n()));
    }
    let gens: Vec<VertexSet> = dual
        .generators()
        .iter()
        .map(|gen| gen.iter().map(|v| map[v]).collect())
        .collect();
    Ok(SquarefreeMonomialIdeal::from_generators(g.n(), &gens))
}

/// I(G) = ∩ P_C over minimal vertex covers C, where P_C is the prime on the
/// variables of C.
pub fn primary_decomposition_check(g: &Graph, cfg: &Config) -> Result<bool> {
    let covers = g.minimal_vertex_covers(cfg)?;
    let mut intersection = SquarefreeMonomialIdeal::unit(g.n());
    for cover in covers {
        let prime = SquarefreeMonomialIdeal::from_generators(
            g.n(),
            &cover.iter().map(VertexSet::singleton).collect::<Vec<_>>(),
        );
        intersection = intersection.intersect(&prime);
    }
    Ok(intersection == ideal_of_graph(g))
}

#[derive(Debug, Clone, Serialize)]
pub struct TeraiOutcome {
    pub pd_dual: usize,
    pub reg_quotient: usize,
    pub holds: bool,
}

/// pd(I(G)^∨) as a module equals pd(R/I(G)^∨) - 1; the quotient side comes
/// from the same Hochster oracle. Conventions for the edgeless graph: both
/// sides 0.
pub fn terai_check(g: &Graph, field: FieldChar, cfg: &Config) -> Result<TeraiOutcome> {
    let reg_quotient = hochster_betti_table(&ideal_of_graph(g), field, cfg)?.reg();
    let dual = alexander_dual_of_edge_ideal(g, cfg)?.ideal;
    let pd_dual = if dual.is_unit() {
        0
    } else {
        hochster_betti_table(&dual, field, cfg)?.pd() - 1
    };
    Ok(TeraiOutcome {
        pd_dual,
        reg_quotient,
        holds: pd_dual == reg_quotient,
    })
}

/// (I(G)^∨)^∨ = I(G).
pub fn double_dual_check(g: &Graph, cfg: &Config) -> Result<bool> {
    let dual = alexander_dual_of_edge_ideal(g, cfg)?.ideal;
    Ok(dual.alexander_dual() == ideal_of_graph(g))
}

/// pd(R/I(G)) = reg(I(G)^∨), with reg of a nonzero ideal one more than reg
/// of its quotient.
pub fn pd_reg_dual_check(g: &Graph, field: FieldChar, cfg: &Config) -> Result<bool> {
    let pd = hochster_betti_table(&ideal_of_graph(g), field, cfg)?.pd();
    let dual = alexander_dual_of_edge_ideal(g, cfg)?.ideal;
    let reg_dual = if dual.is_unit() {
        0
    } else {
        hochster_betti_table(&dual, field, cfg)?.reg() + 1
    };
    Ok(pd == reg_dual)
}

/// The short-exact-sequence bounds on the dual at a non-isolated x:
/// pd(I^∨) ≤ max(pd(I(G')^∨), pd(I(G'')^∨)+1) and
/// reg(I^∨) ≤ max(reg(I(G')^∨)+1, reg(I(G'')^∨)+t).
pub fn dual_sequence_bounds_check(
    g: &Graph,
    x: usize,
    field: FieldChar,
    cfg: &Config,
) -> Result<bool> {
    let nx = g.neighbors(x)?;
    if nx.is_empty() {
        return Err(Error::Domain(format!(
            "vertex {x} is isolated; the bounds require N(x) nonempty"
        )));
    }
    let t = nx.len();
    let module_invariants = |h: &Graph| -> Result<(usize, usize)> {
        let dual = alexander_dual_of_edge_ideal(h, cfg)?.ideal;
        if dual.is_unit() {
            return Ok((0, 0));
        }
        let table = hochster_betti_table(&dual, field, cfg)?;
        // module conventions: pd(I) = pd(R/I) - 1, reg(I) = reg(R/I) + 1
        Ok((table.pd() - 1, table.reg() + 1))
    };
    let (pd_g, reg_g) = module_invariants(g)?;
    let (pd_gp, reg_gp) = module_invariants(&g.delete_vertex(x)?)?;
    let (pd_gpp, reg_gpp) = module_invariants(&g.delete_closed_neighborhood(x)?)?;
    Ok(pd_g <= pd_gp.max(pd_gpp + 1) && reg_g <= (reg_gp + 1).max(reg_gpp + t))
}
