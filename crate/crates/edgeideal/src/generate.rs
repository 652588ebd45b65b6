//! Seeded graph generators, registered by family name.
//!
//! Each family implements [`GraphFamily`] and is selected at runtime by its
//! name; `whisker-of(<base>)` wraps any other family. The same seed always
//! reproduces the same graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::decomp;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::vset::VertexSet;

pub trait GraphFamily: Sync {
    fn name(&self) -> String;
    fn generate(&self, n: usize, seed: u64, cfg: &Config) -> Result<Graph>;
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Path;
impl GraphFamily for Path {
    fn name(&self) -> String {
        "path".into()
    }
    fn generate(&self, n: usize, _seed: u64, _cfg: &Config) -> Result<Graph> {
        Ok(graph::path(n))
    }
}

struct Cycle;
impl GraphFamily for Cycle {
    fn name(&self) -> String {
        "cycle".into()
    }
    fn generate(&self, n: usize, _seed: u64, _cfg: &Config) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidInput("cycle needs n >= 3".into()));
        }
        Ok(graph::cycle(n))
    }
}

struct Star;
impl GraphFamily for Star {
    fn name(&self) -> String {
        "star".into()
    }
    fn generate(&self, n: usize, _seed: u64, _cfg: &Config) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput("star needs n >= 1".into()));
        }
        Ok(graph::star(n))
    }
}

struct Complete;
impl GraphFamily for Complete {
    fn name(&self) -> String {
        "complete".into()
    }
    fn generate(&self, n: usize, _seed: u64, _cfg: &Config) -> Result<Graph> {
        Ok(graph::complete(n))
    }
}

struct Tree;
impl GraphFamily for Tree {
    fn name(&self) -> String {
        "tree".into()
    }
    fn generate(&self, n: usize, seed: u64, _cfg: &Config) -> Result<Graph> {
        let mut rng = rng_for(seed);
        random_tree(n, &mut rng)
    }
}

/// Uniform random labeled tree from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n <= 1 {
        return Ok(Graph::empty(n));
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last.remove(0), last.remove(0)));
    Graph::new(n, &edges)
}

struct Forest;
impl GraphFamily for Forest {
    fn name(&self) -> String {
        "forest".into()
    }
    fn generate(&self, n: usize, seed: u64, _cfg: &Config) -> Result<Graph> {
        let mut rng = rng_for(seed);
        let tree = random_tree(n, &mut rng)?;
        let kept: Vec<(usize, usize)> = tree
            .edges()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.7))
            .collect();
        Graph::new(n, &kept)
    }
}

struct Chordal;
impl GraphFamily for Chordal {
    fn name(&self) -> String {
        "chordal".into()
    }

    /// Subtree-intersection construction: chordal graphs are exactly the
    /// intersection graphs of subtrees of a tree. Each vertex gets a random
    /// connected subtree of a random host tree; adjacency is subtree
    /// intersection. The result is verified before it is returned.
    fn generate(&self, n: usize, seed: u64, _cfg: &Config) -> Result<Graph> {
        let mut rng = rng_for(seed);
        if n == 0 {
            return Ok(Graph::empty(0));
        }
        let host = random_tree(n.max(2), &mut rng)?;
        let mut subtrees: Vec<VertexSet> = Vec::with_capacity(n);
        for _ in 0..n {
            let start = rng.gen_range(0..host.n());
            let mut nodes = VertexSet::singleton(start);
            let target = rng.gen_range(1..=host.n().div_ceil(2));
            while nodes.len() < target {
                let frontier: Vec<usize> = nodes
                    .iter()
                    .flat_map(|v| host.nb(v).difference(nodes).iter())
                    .collect();
                if frontier.is_empty() {
                    break;
                }
                let pick = frontier[rng.gen_range(0..frontier.len())];
                nodes = nodes.with(pick);
            }
            subtrees.push(nodes);
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !subtrees[i].intersection(subtrees[j]).is_empty() {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        debug_assert!(decomp::is_chordal(&g));
        Ok(g)
    }
}

struct BipartiteVd;
impl GraphFamily for BipartiteVd {
    fn name(&self) -> String {
        "bipartite_vd".into()
    }

    /// Rejection sampling: seeded random bipartite graphs filtered by the
    /// vertex-decomposability checker.
    fn generate(&self, n: usize, seed: u64, cfg: &Config) -> Result<Graph> {
        const ATTEMPTS: u64 = 500;
        for attempt in 0..ATTEMPTS {
            let mut rng = rng_for(seed.wrapping_add(attempt.wrapping_mul(0x9e3779b97f4a7c15)));
            let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] && rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges)?;
            if decomp::is_vertex_decomposable(&g, cfg)?.0 {
                return Ok(g);
            }
        }
        Err(Error::Resource(format!(
            "no vertex-decomposable bipartite graph found in {ATTEMPTS} attempts (n={n}, seed={seed})"
        )))
    }
}

struct Random;
impl GraphFamily for Random {
    fn name(&self) -> String {
        "random".into()
    }
    fn generate(&self, n: usize, seed: u64, _cfg: &Config) -> Result<Graph> {
        let mut rng = rng_for(seed);
        random_graph(n, 0.5, &mut rng)
    }
}

/// G(n, p) with the given edge probability.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Adds one pendant (whisker) vertex to every vertex of the base graph.
pub fn whisker(base: &Graph) -> Result<Graph> {
    let n = base.n();
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::new(2 * n, &edges)
}

struct WhiskerOf {
    base: Box<dyn GraphFamily>,
}

impl GraphFamily for WhiskerOf {
    fn name(&self) -> String {
        format!("whisker-of({})", self.base.name())
    }
    fn generate(&self, n: usize, seed: u64, cfg: &Config) -> Result<Graph> {
        whisker(&self.base.generate(n, seed, cfg)?)
    }
}

/// Names of the plain registered families (whisker-of composes over them).
pub fn family_names() -> Vec<&'static str> {
    vec![
        "path",
        "cycle",
        "star",
        "complete",
        "tree",
        "forest",
        "chordal",
        "bipartite_vd",
        "random",
    ]
}

/// Looks up a family by name; `whisker-of(<family>)` wraps any base family.
pub fn lookup(name: &str) -> Result<Box<dyn GraphFamily>> {
    if let Some(inner) = name
        .strip_prefix("whisker-of(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        return Ok(Box::new(WhiskerOf {
            base: lookup(inner)?,
        }));
    }
    match name {
        "path" => Ok(Box::new(Path)),
        "cycle" => Ok(Box::new(Cycle)),
        "star" => Ok(Box::new(Star)),
        "complete" => Ok(Box::new(Complete)),
        "tree" => Ok(Box::new(Tree)),
        "forest" => Ok(Box::new(Forest)),
        "chordal" => Ok(Box::new(Chordal)),
        "bipartite_vd" => Ok(Box::new(BipartiteVd)),
        "random" => Ok(Box::new(Random)),
        other => Err(Error::InvalidInput(format!(
            "unknown graph family {other:?}; known: {} and whisker-of(<family>)",
            family_names().join(", ")
        ))),
    }
}
