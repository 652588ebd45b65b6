//! Immutable simple graphs on dense vertex ids `0..n-1`.
//!
//! Adjacency is a bitset row per vertex, so induced-subgraph questions and
//! independent-set enumeration operate on whole words. Many algorithms work
//! "within a mask": they stay in host-graph coordinates and restrict
//! attention to an active vertex subset, which keeps subset bitmasks usable
//! as memo keys across the whole recursion tree.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list; rejects loops, duplicates and
    /// out-of-range endpoints. Edges are stored sorted as `(min, max)` pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut sorted = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate edge {u} {v}")));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: sorted,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    /// Open neighborhood N(x). Panics on out-of-range `x`; use [`neighbors`]
    /// at API boundaries.
    ///
    /// [`neighbors`]: Graph::neighbors
    pub fn nb(&self, x: usize) -> VertexSet {
        self.adj[x]
    }

    pub fn neighbors(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.adj[x])
    }

    pub fn closed_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.adj[x].with(x))
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.adj[v].is_empty())
    }

    /// Induced subgraph on `w`, relabeled to `0..|w|-1` in ascending original
    /// id order. The relabeling map (new id -> original id) is returned
    /// alongside.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !w.is_subset_of(self.vertices()) {
            return Err(Error::InvalidInput(format!(
                "vertex set {:?} not contained in 0..{}",
                w, self.n
            )));
        }
        let map: Vec<usize> = w.to_vec();
        let mut inverse = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if w.contains(u) && w.contains(v) {
                edges.push((inverse[u], inverse[v]));
            }
        }
        Ok((Graph::new(map.len(), &edges)?, map))
    }

    pub fn delete_vertex(&self, x: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        Ok(self.induced_subgraph(self.vertices().without(x))?.0)
    }

    pub fn delete_closed_neighborhood(&self, x: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        let keep = self.vertices().difference(self.closed_neighborhood(x)?);
        Ok(self.induced_subgraph(keep)?.0)
    }

    /// Number of edges with both endpoints inside `mask`.
    pub fn edge_count_within(&self, mask: VertexSet) -> usize {
        mask.iter()
            .map(|v| self.adj[v].intersection(mask).len())
            .sum::<usize>()
            / 2
    }

    /// True iff `mask` spans no edge.
    pub fn is_independent(&self, mask: VertexSet) -> bool {
        mask.iter().all(|v| self.adj[v].intersection(mask).is_empty())
    }

    /// True iff every edge of the graph has an endpoint in `mask`.
    pub fn is_vertex_cover(&self, mask: VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| mask.contains(u) || mask.contains(v))
    }

    /// All inclusion-maximal independent sets of the subgraph induced on
    /// `mask` (as subsets of `mask`, in host coordinates), sorted by bitmask.
    ///
    /// Bron-Kerbosch with pivoting on the complement graph.
    pub fn maximal_independent_sets_within(&self, mask: VertexSet) -> Vec<VertexSet> {
        if mask.is_empty() {
            // The empty set is the unique (vacuously maximal) independent set.
            return vec![VertexSet::EMPTY];
        }
        let mut out = Vec::new();
        self.bk_complement(VertexSet::EMPTY, mask, VertexSet::EMPTY, mask, &mut out);
        out.sort_unstable();
        out
    }

    fn comp_nb(&self, v: usize, mask: VertexSet) -> VertexSet {
        mask.difference(self.adj[v]).without(v)
    }

    fn bk_complement(
        &self,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        mask: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&v| self.comp_nb(v, mask).intersection(p).len())
            .expect("p or x nonempty");
        let candidates = p.difference(self.comp_nb(pivot, mask));
        let mut p = p;
        let mut x = x;
        for v in candidates.iter() {
            let nv = self.comp_nb(v, mask);
            self.bk_complement(r.with(v), p.intersection(nv), x.intersection(nv), mask, out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// All maximal independent sets, behind the enumeration cutoff.
    pub fn maximal_independent_sets(&self, cfg: &Config) -> Result<Vec<VertexSet>> {
        if self.n > cfg.enum_cutoff {
            return Err(Error::Resource(format!(
                "independent-set enumeration cutoff is {} vertices, graph has {}",
                cfg.enum_cutoff, self.n
            )));
        }
        Ok(self.maximal_independent_sets_within(self.vertices()))
    }

    /// Minimal vertex covers are exactly complements of maximal independent
    /// sets; results sorted by bitmask.
    pub fn minimal_vertex_covers(&self, cfg: &Config) -> Result<Vec<VertexSet>> {
        let full = self.vertices();
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets(cfg)?
            .into_iter()
            .map(|f| full.difference(f))
            .collect();
        covers.sort_unstable();
        Ok(covers)
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for w in self.adj[v].difference(comp).iter() {
                    comp = comp.with(w);
                    frontier.push(w);
                }
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    /// Parses the edge-list text format: first non-comment line is `n`, each
    /// following non-comment line is `u v`. Lines starting with `#` are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut adj: Vec<VertexSet> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match n {
                None => {
                    let count: usize = line.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("expected vertex count, got {line:?}"),
                    })?;
                    if count > MAX_VERTICES {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex count {count} exceeds maximum {MAX_VERTICES}"),
                        });
                    }
                    adj = vec![VertexSet::EMPTY; count];
                    n = Some(count);
                }
                Some(count) => {
                    let mut it = line.split_whitespace();
                    let parse = |tok: Option<&str>| -> Result<usize> {
                        tok.ok_or_else(|| Error::Parse {
                            line: line_no,
                            msg: "expected \"u v\"".into(),
                        })?
                        .parse()
                        .map_err(|_| Error::Parse {
                            line: line_no,
                            msg: format!("invalid vertex in {line:?}"),
                        })
                    };
                    let u = parse(it.next())?;
                    let v = parse(it.next())?;
                    if it.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("trailing tokens in {line:?}"),
                        });
                    }
                    if u >= count || v >= count {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex out of range in {line:?} (n = {count})"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("loop at vertex {u}"),
                        });
                    }
                    if adj[u].contains(v) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate edge {u} {v}"),
                        });
                    }
                    adj[u] = adj[u].with(v);
                    adj[v] = adj[v].with(u);
                    edges.push((u, v));
                }
            }
        }
        match n {
            None => Err(Error::Parse {
                line: 0,
                msg: "empty input: expected vertex count".into(),
            }),
            Some(count) => Graph::new(count, &edges),
        }
    }

    /// Canonical edge-list text; round-trips bit-exactly through
    /// [`parse_edge_list`](Graph::parse_edge_list).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path is valid")
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges).expect("cycle is valid")
}

/// Star with center 0 and n-1 leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges).expect("star is valid")
}

/// Complete graph.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is valid")
}

/// All 2^(n choose 2) labeled graphs on n vertices, edge bitmask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0..1u64 << m).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}
