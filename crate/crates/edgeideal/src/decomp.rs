//! Graph classification: vertex decomposability with certificates,
//! C5-freeness, chordality, bipartiteness and the dominated-neighbor lemma.
//!
//! The decomposability recursion works in host-graph coordinates: induced
//! subgraphs are vertex-subset bitmasks of the original graph, which makes
//! the memo table trivially canonical.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Shedding test on the induced subgraph `mask`: no maximal independent set
/// of G∖N[x] may stay maximal in G∖{x}, i.e. every one extends by a
/// neighbor of x.
pub fn is_shedding_in(g: &Graph, mask: VertexSet, x: usize) -> bool {
    debug_assert!(mask.contains(x));
    let closed = g.nb(x).with(x).intersection(mask);
    let rest = mask.difference(closed);
    let candidates = g.nb(x).intersection(mask);
    g.maximal_independent_sets_within(rest).iter().all(|&f| {
        candidates
            .iter()
            .any(|v| g.nb(v).intersection(f).is_empty())
    })
}

pub fn is_shedding_vertex(g: &Graph, x: usize) -> Result<bool> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    Ok(is_shedding_in(g, g.vertices(), x))
}

/// A replayable witness of vertex decomposability.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Totally disconnected base case.
    Leaf { vertices: VertexSet },
    Step {
        vertices: VertexSet,
        shedding: usize,
        without_vertex: Box<Certificate>,
        without_neighborhood: Box<Certificate>,
    },
}

impl Certificate {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Certificate::Leaf { vertices } => *vertices,
            Certificate::Step { vertices, .. } => *vertices,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    NotDecomposable,
    Leaf,
    Shed(usize),
}

fn decompose(
    g: &Graph,
    mask: VertexSet,
    memo: &mut Option<HashMap<u64, Status>>,
) -> Status {
    if let Some(m) = memo.as_ref() {
        if let Some(&s) = m.get(&mask.bits()) {
            return s;
        }
    }
    let status = if g.edge_count_within(mask) == 0 {
        Status::Leaf
    } else {
        // candidates tried in ascending id; first success recorded
        let mut found = Status::NotDecomposable;
        for x in mask.iter() {
            if !is_shedding_in(g, mask, x) {
                continue;
            }
            let without_vertex = mask.without(x);
            let without_nbhd = mask.difference(g.nb(x).with(x));
            if decompose(g, without_vertex, memo) != Status::NotDecomposable
                && decompose(g, without_nbhd, memo) != Status::NotDecomposable
            {
                found = Status::Shed(x);
                break;
            }
        }
        found
    };
    if let Some(m) = memo.as_mut() {
        m.insert(mask.bits(), status);
    }
    status
}

fn build_certificate(g: &Graph, mask: VertexSet, memo: &mut Option<HashMap<u64, Status>>) -> Certificate {
    match decompose(g, mask, memo) {
        Status::Leaf => Certificate::Leaf { vertices: mask },
        Status::Shed(x) => Certificate::Step {
            vertices: mask,
            shedding: x,
            without_vertex: Box::new(build_certificate(g, mask.without(x), memo)),
            without_neighborhood: Box::new(build_certificate(
                g,
                mask.difference(g.nb(x).with(x)),
                memo,
            )),
        },
        Status::NotDecomposable => unreachable!("certificate requested for a non-decomposable subgraph"),
    }
}

fn vertex_decomposable_impl(
    g: &Graph,
    cfg: &Config,
    use_memo: bool,
) -> Result<(bool, Option<Certificate>)> {
    if g.n() > cfg.decomp_cutoff {
        return Err(Error::Resource(format!(
            "decomposability cutoff is {} vertices, graph has {}",
            cfg.decomp_cutoff,
            g.n()
        )));
    }
    let mut memo = use_memo.then(HashMap::new);
    let full = g.vertices();
    match decompose(g, full, &mut memo) {
        Status::NotDecomposable => Ok((false, None)),
        _ => Ok((true, Some(build_certificate(g, full, &mut memo)))),
    }
}

/// Vertex decomposability per the recursive definition, with a full
/// certificate on success.
pub fn is_vertex_decomposable(g: &Graph, cfg: &Config) -> Result<(bool, Option<Certificate>)> {
    vertex_decomposable_impl(g, cfg, true)
}

/// Same recursion without the memo table; used to validate memo
/// transparency.
pub fn is_vertex_decomposable_unmemoized(
    g: &Graph,
    cfg: &Config,
) -> Result<(bool, Option<Certificate>)> {
    vertex_decomposable_impl(g, cfg, false)
}

/// Independently replays a certificate: every step's shedding condition and
/// child vertex sets, every leaf's edgelessness.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    fn check(g: &Graph, cert: &Certificate) -> bool {
        match cert {
            Certificate::Leaf { vertices } => g.edge_count_within(*vertices) == 0,
            Certificate::Step {
                vertices,
                shedding,
                without_vertex,
                without_neighborhood,
            } => {
                let x = *shedding;
                vertices.contains(x)
                    && is_shedding_in(g, *vertices, x)
                    && without_vertex.vertices() == vertices.without(x)
                    && without_neighborhood.vertices()
                        == vertices.difference(g.nb(x).with(x))
                    && check(g, without_vertex)
                    && check(g, without_neighborhood)
            }
        }
    }
    cert.vertices() == g.vertices() && check(g, cert)
}

/// C5-subgraph detection (any 5-cycle, chords allowed) by 5-subset scan;
/// witness is the cycle's vertex set.
pub fn is_c5_free(g: &Graph) -> (bool, Option<VertexSet>) {
    let n = g.n();
    if n < 5 {
        return (true, None);
    }
    for a in 0..n {
        // a C5 vertex needs two cycle neighbors
        if g.degree(a) < 2 {
            continue;
        }
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let combo = [a, b, c, d, e];
                        let mask: VertexSet = combo.into_iter().collect();
                        if g.edge_count_within(mask) >= 5
                            && combo.iter().all(|&v| g.nb(v).intersection(mask).len() >= 2)
                            && has_spanning_c5(g, combo)
                        {
                            return (false, Some(mask));
                        }
                    }
                }
            }
        }
    }
    (true, None)
}

/// Whether the five vertices carry a cycle through all of them.
fn has_spanning_c5(g: &Graph, vs: [usize; 5]) -> bool {
    // fix vs[0] first; try every order of the remaining four
    let mut rest = [vs[1], vs[2], vs[3], vs[4]];
    permutations4(&mut rest, 0, &mut |p| {
        let cycle = [vs[0], p[0], p[1], p[2], p[3]];
        (0..5).all(|i| g.nb(cycle[i]).contains(cycle[(i + 1) % 5]))
    })
}

/// Calls `f` on each permutation of `items[k..]`; true once `f` is.
fn permutations4(items: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4]) -> bool) -> bool {
    if k == 4 {
        return f(items);
    }
    for i in k..4 {
        items.swap(k, i);
        if permutations4(items, k + 1, f) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Chordality via maximum-cardinality search plus perfect-elimination-order
/// verification.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex exists");
        numbered = numbered.with(v);
        visit_order.push(v);
        for w in g.nb(v).difference(numbered).iter() {
            weight[w] += 1;
        }
    }
    // reverse MCS order is a PEO iff the graph is chordal
    let mut remaining = g.vertices();
    for &v in visit_order.iter().rev() {
        remaining = remaining.without(v);
        let later = g.nb(v).intersection(remaining);
        let later_vec = later.to_vec();
        for (i, &a) in later_vec.iter().enumerate() {
            for &b in &later_vec[i + 1..] {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// 2-colorability by breadth-first layering.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for w in g.nb(v).iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Smallest y ∈ N(x) with N[y] ⊆ N[x], if any.
pub fn dominated_neighbor(g: &Graph, x: usize) -> Result<Option<usize>> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let closed_x = g.nb(x).with(x);
    Ok(g.nb(x)
        .iter()
        .find(|&y| g.nb(y).with(y).is_subset_of(closed_x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Graph};

    fn cfg() -> Config {
        Config::default()
    }

    fn vd(g: &Graph) -> bool {
        let (ok, cert) = is_vertex_decomposable(g, &cfg()).unwrap();
        if let Some(cert) = &cert {
            assert!(verify_certificate(g, cert), "certificate replay failed: {g:?}");
        }
        assert_eq!(ok, cert.is_some());
        ok
    }

    #[test]
    fn shedding_examples() {
        assert!(is_shedding_vertex(&complete(2), 0).unwrap());
        let s = star(4);
        assert!(is_shedding_vertex(&s, 0).unwrap());
        assert!(!is_shedding_vertex(&s, 1).unwrap());
        let c4 = cycle(4);
        for x in 0..4 {
            assert!(!is_shedding_vertex(&c4, x).unwrap());
        }
        assert!(is_shedding_vertex(&c4, 5).is_err());
    }

    #[test]
    fn vertex_decomposable_examples() {
        assert!(vd(&Graph::empty(0)));
        assert!(vd(&Graph::empty(5)));
        assert!(vd(&cycle(5)));
        assert!(!vd(&cycle(4)));
        assert!(vd(&path(4)));
        assert!(vd(&star(4)));
    }

    #[test]
    fn c5_free_examples() {
        let (free, witness) = is_c5_free(&cycle(5));
        assert!(!free);
        assert_eq!(witness.unwrap(), cycle(5).vertices());
        assert!(is_c5_free(&path(6)).0);
        assert!(is_c5_free(&cycle(4)).0);
        assert!(is_c5_free(&whiskered_c4()).0);
        // C6 carries no 5-cycle
        assert!(is_c5_free(&cycle(6)).0);
    }

    fn whiskered_c4() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
        for i in 0..4 {
            edges.push((i, 4 + i));
        }
        Graph::new(8, &edges).unwrap()
    }

    #[test]
    fn whiskered_c4_classification() {
        let g = whiskered_c4();
        assert!(is_c5_free(&g).0);
        assert!(vd(&g));
        assert!(!is_chordal(&g));
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&path(6)));
        assert!(is_chordal(&star(5)));
        assert!(is_chordal(&complete(4)));
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(5)));
        assert!(is_chordal(&Graph::empty(3)));
    }

    #[test]
    fn chordal_matches_brute_force_on_small_graphs() {
        // oracle: chordal iff no chordless cycle of length >= 4, by direct
        // induced-cycle scan over vertex subsets
        for n in 0..=6usize {
            for g in crate::graph::tests::all_graphs(n) {
                assert_eq!(is_chordal(&g), chordal_brute(&g), "{g:?}");
            }
        }
    }

    fn chordal_brute(g: &Graph) -> bool {
        let n = g.n();
        for bits in 0..1u64 << n {
            let mask = VertexSet::from_bits(bits);
            let k = mask.len();
            if k < 4 {
                continue;
            }
            // induced k-cycle: k edges, all degrees 2, connected
            if g.edge_count_within(mask) == k
                && mask.iter().all(|v| g.nb(v).intersection(mask).len() == 2)
                && connected_within(g, mask)
            {
                return false;
            }
        }
        true
    }

    fn connected_within(g: &Graph, mask: VertexSet) -> bool {
        let Some(start) = mask.min() else { return true };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.nb(v).intersection(mask).difference(seen).iter() {
                seen = seen.with(w);
                stack.push(w);
            }
        }
        seen == mask
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&path(4)));
        assert!(!is_bipartite(&cycle(5)));
        assert!(is_bipartite(&star(5)));
        assert!(is_bipartite(&cycle(6)));
        assert!(!is_bipartite(&complete(3)));
    }

    #[test]
    fn dominated_neighbor_examples() {
        assert_eq!(dominated_neighbor(&star(4), 0).unwrap(), Some(1));
        assert_eq!(dominated_neighbor(&cycle(4), 0).unwrap(), None);
        assert_eq!(dominated_neighbor(&complete(2), 0).unwrap(), Some(1));
        assert!(dominated_neighbor(&complete(2), 2).is_err());
    }

    #[test]
    fn shedding_lemma_on_small_c5_free_graphs() {
        // C5-free + shedding vertex => dominated neighbor exists
        for n in 1..=5usize {
            for g in crate::graph::tests::all_graphs(n) {
                if !is_c5_free(&g).0 {
                    continue;
                }
                for x in 0..n {
                    if is_shedding_vertex(&g, x).unwrap() {
                        assert!(
                            dominated_neighbor(&g, x).unwrap().is_some(),
                            "{g:?} x={x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c5_subgraph_with_chord_detected() {
        // 5-cycle plus one chord: no induced C5, but a C5 subgraph
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
        assert!(!is_c5_free(&g).0);
        // triangular prism carries the 5-cycle 0-3-2-1-4-0
        let prism = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)],
        )
        .unwrap();
        assert!(!is_c5_free(&prism).0);
    }

    #[test]
    fn chordal_implies_vertex_decomposable_small() {
        for n in 1..=5usize {
            for g in crate::graph::tests::all_graphs(n) {
                if is_chordal(&g) {
                    assert!(vd(&g), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn memoization_transparency() {
        for n in 0..=5usize {
            for g in crate::graph::tests::all_graphs(n) {
                let memo = is_vertex_decomposable(&g, &cfg()).unwrap().0;
                let plain = is_vertex_decomposable_unmemoized(&g, &cfg()).unwrap().0;
                assert_eq!(memo, plain, "{g:?}");
            }
        }
    }

    #[test]
    fn bipartite_implies_c5_free_small() {
        for n in 0..=5usize {
            for g in crate::graph::tests::all_graphs(n) {
                if is_bipartite(&g) {
                    assert!(is_c5_free(&g).0);
                }
            }
        }
    }
}
