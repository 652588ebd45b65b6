//! Squarefree monomial ideals as antichains of generator supports.
//!
//! A squarefree monomial is identified with its support, a [`VertexSet`].
//! Ideals are kept minimalized (the generator list is an inclusion
//! antichain), so ideal equality is exact antichain equality. The zero ideal
//! and the unit ideal have explicit representations.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    n: usize,
    gens: Vec<VertexSet>,
    unit: bool,
}

impl SquarefreeMonomialIdeal {
    pub fn zero(n: usize) -> Self {
        SquarefreeMonomialIdeal {
            n,
            gens: vec![],
            unit: false,
        }
    }

    pub fn unit(n: usize) -> Self {
        SquarefreeMonomialIdeal {
            n,
            gens: vec![],
            unit: true,
        }
    }

    /// Builds an ideal from generator supports, minimalizing to an antichain.
    /// An empty support (the monomial 1) makes the ideal the unit ideal.
    pub fn from_generators(n: usize, candidates: &[VertexSet]) -> Self {
        if candidates.iter().any(|g| g.is_empty()) {
            return SquarefreeMonomialIdeal::unit(n);
        }
        let mut gens: Vec<VertexSet> = Vec::new();
        for (i, &g) in candidates.iter().enumerate() {
            let redundant = candidates
                .iter()
                .enumerate()
                .any(|(j, &h)| (h != g || j < i) && h.is_subset_of(g));
            if !redundant {
                gens.push(g);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        SquarefreeMonomialIdeal {
            n,
            gens,
            unit: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generator supports, sorted by bitmask; empty for the zero and
    /// unit ideals (distinguish via [`is_unit`](Self::is_unit)).
    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    /// Membership of the squarefree monomial with support `m`: divisible by
    /// some generator.
    pub fn contains_monomial(&self, m: VertexSet) -> bool {
        self.unit || self.gens.iter().any(|g| g.is_subset_of(m))
    }

    pub fn sum(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        if self.unit || other.unit {
            return SquarefreeMonomialIdeal::unit(self.n);
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        SquarefreeMonomialIdeal::from_generators(self.n, &gens)
    }

    /// Intersection, computed on squarefree supports: pairwise least common
    /// multiples (unions) followed by minimalization.
    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        if self.is_zero() || other.is_zero() {
            return SquarefreeMonomialIdeal::zero(self.n);
        }
        if self.unit {
            return other.clone();
        }
        if other.unit {
            return self.clone();
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                gens.push(a.union(b));
            }
        }
        SquarefreeMonomialIdeal::from_generators(self.n, &gens)
    }

    /// Multiplies by the squarefree monomial with support `m` (union of
    /// supports).
    pub fn multiply_support(&self, m: VertexSet) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.unit {
            return SquarefreeMonomialIdeal::from_generators(self.n, &[m]);
        }
        let gens: Vec<VertexSet> = self.gens.iter().map(|&g| g.union(m)).collect();
        SquarefreeMonomialIdeal::from_generators(self.n, &gens)
    }

    /// True iff `m` is disjoint from every generator support. The lemma-style
    /// identities only ever multiply by such monomials; callers assert this
    /// before multiplying.
    pub fn support_disjoint_from(&self, m: VertexSet) -> bool {
        self.gens.iter().all(|g| g.intersection(m).is_empty())
    }

    /// Alexander dual: generated by the minimal transversals (hitting sets)
    /// of the generator supports. Dual of the zero ideal is the unit ideal
    /// and vice versa.
    pub fn alexander_dual(&self) -> Self {
        if self.is_zero() {
            return SquarefreeMonomialIdeal::unit(self.n);
        }
        if self.unit {
            return SquarefreeMonomialIdeal::zero(self.n);
        }
        let transversals = minimal_transversals(self.n, &self.gens);
        SquarefreeMonomialIdeal {
            n: self.n,
            gens: transversals,
            unit: false,
        }
    }

    /// Stanley-Reisner complex: faces are the subsets containing no generator
    /// support. The unit ideal corresponds to the void complex and is
    /// rejected.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        if self.unit {
            return Err(Error::Domain(
                "the unit ideal has a void Stanley-Reisner complex".into(),
            ));
        }
        if self.is_zero() {
            return Ok(SimplicialComplex::simplex(self.n));
        }
        // maximal faces are complements of minimal transversals
        let full = VertexSet::full(self.n);
        let facets: Vec<VertexSet> = minimal_transversals(self.n, &self.gens)
            .into_iter()
            .map(|t| full.difference(t))
            .collect();
        Ok(SimplicialComplex::from_facets(self.n, &facets))
    }

    /// Canonical form: sorted list of sorted variable-index lists.
    pub fn to_support_lists(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|g| g.to_vec()).collect()
    }
}

/// All inclusion-minimal subsets of `0..n-1` meeting every set in `sets`,
/// sorted by bitmask. A hitting set is minimal iff each of its members is
/// the unique hitter of some set.
fn minimal_transversals(n: usize, sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let t = VertexSet::from_bits(bits);
        if !sets.iter().all(|s| !s.intersection(t).is_empty()) {
            continue;
        }
        let minimal = t
            .iter()
            .all(|v| !sets.iter().all(|s| !s.intersection(t.without(v)).is_empty()));
        if minimal {
            out.push(t);
        }
    }
    out
}

impl std::fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.unit {
            write!(f, "Ideal(n={}, unit)", self.n)
        } else {
            write!(f, "Ideal(n={}, gens={:?})", self.n, self.gens)
        }
    }
}
