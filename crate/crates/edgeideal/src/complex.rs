//! Simplicial complexes as facet antichains.

use std::collections::HashSet;

use crate::vset::VertexSet;

/// A simplicial complex on vertices `0..n-1`, stored by its facets.
///
/// The facet list is a sorted antichain. An empty facet list is the void
/// complex (no faces at all); the facet list `[{}]` is the complex whose only
/// face is the empty face.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from candidate facets, dropping any set contained in
    /// another and deduplicating. Faces are the subsets of the survivors.
    pub fn from_facets(n: usize, candidates: &[VertexSet]) -> Self {
        let mut facets: Vec<VertexSet> = Vec::new();
        for (i, &f) in candidates.iter().enumerate() {
            let dominated = candidates
                .iter()
                .enumerate()
                .any(|(j, &g)| (f != g || j < i) && f.is_subset_of(g));
            if !dominated {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        facets.dedup();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    /// The full simplex on all n vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: max facet size minus one; the complex `{∅}` has dimension -1.
    /// Void complex has no dimension (None).
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset_of(f))
    }

    /// All nonempty faces bucketed by dimension: `result[d]` holds the
    /// d-dimensional faces (size d+1), each bucket sorted by bitmask.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let dim = match self.dim() {
            None | Some(-1) => return vec![],
            Some(d) => d as usize,
        };
        let mut seen: HashSet<u64> = HashSet::new();
        let mut buckets: Vec<Vec<VertexSet>> = vec![Vec::new(); dim + 1];
        for &facet in &self.facets {
            // enumerate all submasks of the facet
            let bits = facet.bits();
            let mut sub = bits;
            loop {
                if sub != 0 && seen.insert(sub) {
                    let s = VertexSet::from_bits(sub);
                    buckets[s.len() - 1].push(s);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        for bucket in &mut buckets {
            bucket.sort_unstable();
        }
        buckets
    }

    /// Total face count including the empty face (0 for the void complex).
    pub fn face_count(&self) -> usize {
        if self.is_void() {
            return 0;
        }
        1 + self.faces_by_dim().iter().map(|b| b.len()).sum::<usize>()
    }

    /// Induced subcomplex on the vertex subset `w`.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void(self.n);
        }
        let restricted: Vec<VertexSet> =
            self.facets.iter().map(|&f| f.intersection(w)).collect();
        SimplicialComplex::from_facets(self.n, &restricted)
    }

    /// Reduced Euler characteristic from face counts alone.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        if self.is_void() {
            return 0;
        }
        let mut chi: i64 = -1; // empty face at dimension -1
        for (d, bucket) in self.faces_by_dim().iter().enumerate() {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            chi += sign * bucket.len() as i64;
        }
        chi
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets)
    }
}
