//! Graded Betti tables of R/I via Hochster's formula, and the derived
//! homological invariants reg, pd, depth and Krull dimension.

use std::collections::BTreeMap;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{reduced_homology_ranks, FieldChar};
use crate::ideal::SquarefreeMonomialIdeal;
use crate::vset::VertexSet;

/// Graded Betti numbers β_{i,j}(R/I); only strictly positive entries are
/// stored, and β_{0,0} = 1 always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field_char: u32,
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn reg(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0)
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Auslander-Buchsbaum: depth(R/I) = n - pd(R/I).
    pub fn depth(&self) -> usize {
        self.n - self.pd()
    }

    /// Canonical text block: lines "i j beta" sorted by (i, j).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&(i, j), &beta) in &self.entries {
            out.push_str(&format!("{i} {j} {beta}\n"));
        }
        out
    }
}

/// The edge ideal I(G): one quadratic generator per edge; edgeless graphs
/// give the zero ideal.
pub fn ideal_of_graph(g: &Graph) -> SquarefreeMonomialIdeal {
    let gens: Vec<VertexSet> = g
        .edges()
        .iter()
        .map(|&(u, v)| VertexSet::singleton(u).with(v))
        .collect();
    SquarefreeMonomialIdeal::from_generators(g.n(), &gens)
}

/// Independence complex Ind(G): facets are the maximal independent sets.
pub fn independence_complex(g: &Graph, cfg: &Config) -> Result<crate::complex::SimplicialComplex> {
    let facets = g.maximal_independent_sets(cfg)?;
    Ok(crate::complex::SimplicialComplex::from_facets(g.n(), &facets))
}

/// Betti table of R/I by Hochster's formula:
/// β_{i,j}(R/I) = Σ_{|W|=j} rank H̃_{j-i-1}(Δ|_W) over the Stanley-Reisner
/// complex Δ of I. The W = ∅ term contributes exactly β_{0,0} = 1.
pub fn hochster_betti_table(
    ideal: &SquarefreeMonomialIdeal,
    field: FieldChar,
    cfg: &Config,
) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::Domain(
            "Betti table of R/I is undefined for the unit ideal".into(),
        ));
    }
    let n = ideal.n();
    if n > cfg.oracle_cutoff {
        return Err(Error::Resource(format!(
            "Hochster oracle cutoff is {} variables, ideal has {}",
            cfg.oracle_cutoff, n
        )));
    }
    let delta = ideal.stanley_reisner_complex()?;
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    // ascending popcount order over W
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let w = VertexSet::from_bits(mask);
        let j = w.len();
        let restricted = delta.restrict(w);
        for (&d, &rank) in reduced_homology_ranks(&restricted, field)?.iter() {
            if rank == 0 {
                continue;
            }
            let i = j as i64 - d - 1;
            debug_assert!(i >= 0);
            *entries.entry((i as usize, j)).or_insert(0) += rank as u64;
        }
    }
    debug_assert_eq!(entries.get(&(0, 0)), Some(&1));
    Ok(BettiTable {
        n,
        field_char: field.as_u32(),
        entries,
    })
}

/// reg, pd and depth of R/I(G) plus the Betti table they came from.
#[derive(Debug, Clone)]
pub struct HomologicalInvariants {
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
    pub table: BettiTable,
}

pub fn graph_homological_invariants(
    g: &Graph,
    field: FieldChar,
    cfg: &Config,
) -> Result<HomologicalInvariants> {
    let table = hochster_betti_table(&ideal_of_graph(g), field, cfg)?;
    Ok(HomologicalInvariants {
        reg: table.reg(),
        pd: table.pd(),
        depth: table.depth(),
        table,
    })
}

/// Krull dimension of R/I(G): the maximum independent-set size, computed
/// combinatorially.
pub fn krull_dim(g: &Graph, cfg: &Config) -> Result<usize> {
    Ok(g.maximal_independent_sets(cfg)?
        .iter()
        .map(|f| f.len())
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Graph};

    fn cfg() -> Config {
        Config::default()
    }

    fn table(g: &Graph) -> BettiTable {
        hochster_betti_table(&ideal_of_graph(g), FieldChar::Zero, &cfg()).unwrap()
    }

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(ideal_of_graph(&complete(2)).generators(), &[vs(&[0, 1])]);
        assert_eq!(
            ideal_of_graph(&path(3)).generators(),
            &[vs(&[0, 1]), vs(&[1, 2])]
        );
        assert!(ideal_of_graph(&Graph::empty(2)).is_zero());
    }

    #[test]
    fn independence_complex_examples() {
        let c3 = independence_complex(&cycle(3), &cfg()).unwrap();
        assert_eq!(c3.facets(), &[vs(&[0]), vs(&[1]), vs(&[2])]);
        let k2 = independence_complex(&complete(2), &cfg()).unwrap();
        assert_eq!(k2.facets(), &[vs(&[0]), vs(&[1])]);
        // Ind(C5) is again a 5-cycle
        let c5 = independence_complex(&cycle(5), &cfg()).unwrap();
        assert_eq!(c5.facets().len(), 5);
        assert!(c5.facets().iter().all(|f| f.len() == 2));
        // SR complex of I(G) equals Ind(G)
        for g in [path(4), cycle(4), star(4)] {
            assert_eq!(
                ideal_of_graph(&g).stanley_reisner_complex().unwrap(),
                independence_complex(&g, &cfg()).unwrap()
            );
        }
    }

    #[test]
    fn k2_betti_table_is_koszul() {
        let t = table(&complete(2));
        let mut expected = BTreeMap::new();
        expected.insert((0, 0), 1);
        expected.insert((1, 2), 1);
        assert_eq!(t.entries, expected);
        assert_eq!((t.reg(), t.pd(), t.depth()), (1, 1, 1));
        assert_eq!(t.to_text(), "0 0 1\n1 2 1\n");
    }

    #[test]
    fn c3_pd_and_reg() {
        let t = table(&cycle(3));
        assert_eq!((t.pd(), t.reg()), (2, 1));
    }

    #[test]
    fn c5_has_beta_3_5() {
        let t = table(&cycle(5));
        assert!(t.entries.get(&(3, 5)).copied().unwrap_or(0) >= 1);
        assert_eq!(t.reg(), 2);
    }

    #[test]
    fn derived_invariants_examples() {
        let t = table(&complete(2));
        assert_eq!((t.reg(), t.pd(), t.depth()), (1, 1, 1));
        assert_eq!(krull_dim(&complete(2), &cfg()).unwrap(), 1);

        let t = table(&Graph::empty(3));
        assert_eq!((t.reg(), t.pd(), t.depth()), (0, 0, 3));
        assert_eq!(krull_dim(&Graph::empty(3), &cfg()).unwrap(), 3);

        let t = table(&star(4));
        assert_eq!((t.pd(), t.depth(), t.reg()), (3, 1, 1));
        assert_eq!(krull_dim(&star(4), &cfg()).unwrap(), 3);
    }

    #[test]
    fn beta_1_counts_edges() {
        for g in [path(4), cycle(5), star(5), complete(4)] {
            let t = table(&g);
            assert_eq!(
                t.entries.get(&(1, 2)).copied().unwrap_or(0),
                g.edge_count() as u64
            );
            assert!(t
                .entries
                .keys()
                .all(|&(i, j)| i != 1 || j == 2));
        }
    }

    #[test]
    fn unit_ideal_rejected() {
        let unit = SquarefreeMonomialIdeal::unit(2);
        assert!(hochster_betti_table(&unit, FieldChar::Zero, &cfg()).is_err());
    }
}
