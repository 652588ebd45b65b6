//! Combinatorial invariants: the 3-disjoint edge number c, the bouquet
//! invariants d and d', big height, domination numbers and unmixedness.
//!
//! d' has two interchangeable engines behind [`DPrimeEngine`]: a literal
//! brute force over bouquet families and a faster independent-roots +
//! bipartite-matching formulation. Both are registered by name; the matching
//! engine is the default and is cross-validated against the brute force in
//! the acceptance suite.

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A star subgraph: a root plus a nonempty set of flowers adjacent to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bouquet {
    pub root: usize,
    pub flowers: VertexSet,
}

impl Bouquet {
    pub fn vertex_set(&self) -> VertexSet {
        self.flowers.with(self.root)
    }

    pub fn stems(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.flowers.iter().map(move |w| (self.root, w))
    }
}

/// A set of bouquets of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct BouquetFamily {
    pub bouquets: Vec<Bouquet>,
}

impl BouquetFamily {
    pub fn roots(&self) -> VertexSet {
        self.bouquets.iter().map(|b| b.root).collect()
    }

    pub fn flowers(&self) -> VertexSet {
        self.bouquets
            .iter()
            .fold(VertexSet::EMPTY, |acc, b| acc.union(b.flowers))
    }

    pub fn stems(&self) -> Vec<(usize, usize)> {
        self.bouquets.iter().flat_map(|b| b.stems()).collect()
    }

    pub fn flower_count(&self) -> usize {
        self.bouquets.iter().map(|b| b.flowers.len()).sum()
    }

    /// Bouquet validity plus pairwise vertex-disjointness.
    pub fn is_disjoint_family(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for b in &self.bouquets {
            if b.flowers.is_empty()
                || b.flowers.contains(b.root)
                || !b.flowers.is_subset_of(g.nb(b.root))
            {
                return false;
            }
            let vs = b.vertex_set();
            if !seen.intersection(vs).is_empty() {
                return false;
            }
            seen = seen.union(vs);
        }
        true
    }

    /// Semi-strongly disjoint: vertex-disjoint with an independent root set.
    pub fn is_semi_strongly_disjoint(&self, g: &Graph) -> bool {
        self.is_disjoint_family(g) && g.is_independent(self.roots())
    }

    /// Strongly disjoint: vertex-disjoint and admitting a pairwise-3-disjoint
    /// selection of one stem per bouquet.
    pub fn is_strongly_disjoint(&self, g: &Graph) -> bool {
        self.is_disjoint_family(g) && self.three_disjoint_stem_system(g).is_some()
    }

    /// Backtracking search for one stem per bouquet, pairwise 3-disjoint.
    pub fn three_disjoint_stem_system(&self, g: &Graph) -> Option<Vec<(usize, usize)>> {
        fn rec(
            g: &Graph,
            bouquets: &[Bouquet],
            chosen: &mut Vec<(usize, usize)>,
        ) -> bool {
            let Some(b) = bouquets.first() else {
                return true;
            };
            for w in b.flowers.iter() {
                if chosen
                    .iter()
                    .all(|&e| stems_three_disjoint(g, e, (b.root, w)))
                {
                    chosen.push((b.root, w));
                    if rec(g, &bouquets[1..], chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::with_capacity(self.bouquets.len());
        rec(g, &self.bouquets, &mut chosen).then_some(chosen)
    }
}

fn stems_three_disjoint(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let e: VertexSet = [a, b].into_iter().collect();
    let f: VertexSet = [c, d].into_iter().collect();
    if !e.intersection(f).is_empty() {
        return false;
    }
    g.edge_count_within(e.union(f)) == 2
}

/// Two edges are 3-disjoint when their four endpoints induce exactly the two
/// edges themselves.
pub fn three_disjoint(g: &Graph, e: (usize, usize), f: (usize, usize)) -> Result<bool> {
    for (u, v) in [e, f] {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("{{{u},{v}}} is not an edge")));
        }
    }
    Ok(stems_three_disjoint(g, e, f))
}

/// A c-number together with an optimal pairwise-3-disjoint edge set.
#[derive(Debug, Clone, Serialize)]
pub struct CNumber {
    pub value: usize,
    pub witness: Vec<(usize, usize)>,
}

/// c_G: maximum size of a pairwise-3-disjoint edge set, as a maximum clique
/// in the compatibility graph on edges (branch and bound with a greedy
/// coloring bound).
pub fn c_number(g: &Graph, cfg: &Config) -> Result<CNumber> {
    let edges = g.edges();
    let m = edges.len();
    if m > cfg.clique_edge_budget || m > 128 {
        return Err(Error::Resource(format!(
            "3-disjoint clique search budget is {} edges, graph has {m}",
            cfg.clique_edge_budget.min(128)
        )));
    }
    if m == 0 {
        return Ok(CNumber {
            value: 0,
            witness: vec![],
        });
    }
    let mut adj = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            if stems_three_disjoint(g, edges[i], edges[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let solver = CliqueSolver { adj };
    let clique = solver.max_clique();
    let witness: Vec<(usize, usize)> = (0..m).filter(|i| clique >> i & 1 == 1).map(|i| edges[i]).collect();
    Ok(CNumber {
        value: clique.count_ones() as usize,
        witness,
    })
}

struct CliqueSolver {
    adj: Vec<u128>,
}

impl CliqueSolver {
    fn max_clique(&self) -> u128 {
        let mut best = 0u128;
        let mut current = Vec::new();
        let all = if self.adj.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.adj.len()) - 1
        };
        self.expand(&mut current, all, &mut best);
        best
    }

    /// Greedy coloring of the candidate set; returns vertices ordered by
    /// color class with their color-count upper bounds.
    fn color_sort(&self, p: u128) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut uncolored = p;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut available = uncolored;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                available &= !(1u128 << v) & !self.adj[v];
                uncolored &= !(1u128 << v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&self, current: &mut Vec<usize>, p: u128, best: &mut u128) {
        if p == 0 {
            if current.len() > best.count_ones() as usize {
                *best = current.iter().fold(0u128, |acc, &v| acc | 1 << v);
            }
            return;
        }
        let (order, bounds) = self.color_sort(p);
        let mut p = p;
        for i in (0..order.len()).rev() {
            let v = order[i];
            if current.len() + bounds[i] <= best.count_ones() as usize {
                return;
            }
            current.push(v);
            self.expand(current, p & self.adj[v], best);
            current.pop();
            p &= !(1u128 << v);
        }
    }
}

/// Outcome of a bouquet-invariant search: the optimum and a witness family
/// (with, for d, the chosen 3-disjoint stem system).
#[derive(Debug, Clone, Serialize)]
pub struct BouquetOutcome {
    pub value: usize,
    pub family: BouquetFamily,
    pub stem_system: Option<Vec<(usize, usize)>>,
}

fn check_search_cutoff(g: &Graph, cfg: &Config) -> Result<()> {
    if g.n() > cfg.enum_cutoff {
        return Err(Error::Resource(format!(
            "bouquet search cutoff is {} vertices, graph has {}",
            cfg.enum_cutoff,
            g.n()
        )));
    }
    Ok(())
}

/// Builds the witness family for a root set: each root keeps its required
/// flower(s), every remaining neighbor of the root set is attached to its
/// smallest adjacent root.
fn assemble_family(g: &Graph, roots: &[usize], required: &[(usize, usize)]) -> BouquetFamily {
    let root_set: VertexSet = roots.iter().copied().collect();
    let mut bouquets: Vec<Bouquet> = roots
        .iter()
        .map(|&z| Bouquet {
            root: z,
            flowers: required
                .iter()
                .filter(|&&(r, _)| r == z)
                .map(|&(_, w)| w)
                .collect(),
        })
        .collect();
    let taken: VertexSet = required.iter().map(|&(_, w)| w).collect();
    let all_flowers = roots
        .iter()
        .fold(VertexSet::EMPTY, |acc, &z| acc.union(g.nb(z)))
        .difference(root_set);
    for v in all_flowers.difference(taken).iter() {
        let bouquet = bouquets
            .iter_mut()
            .find(|b| g.nb(b.root).contains(v))
            .expect("flower is adjacent to some root");
        bouquet.flowers = bouquet.flowers.with(v);
    }
    bouquets.sort_by_key(|b| b.root);
    BouquetFamily { bouquets }
}

/// d_G: maximum flower count over strongly disjoint bouquet families.
///
/// Search per independent root set Z: a strongly disjoint family with roots
/// Z exists iff a pairwise-3-disjoint system of stems (one per root) exists,
/// and the best such family collects every vertex of N(Z) as a flower.
pub fn d_number(g: &Graph, cfg: &Config) -> Result<BouquetOutcome> {
    check_search_cutoff(g, cfg)?;
    let n = g.n();
    let mut best: Option<BouquetOutcome> = None;
    for bits in 1..1u64 << n {
        let z = VertexSet::from_bits(bits);
        if !g.is_independent(z) {
            continue;
        }
        if z.iter().any(|v| g.nb(v).is_empty()) {
            continue;
        }
        let flowers = z
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.nb(v)));
        let value = flowers.len();
        if best.as_ref().is_some_and(|b| b.value >= value) {
            continue;
        }
        let roots: Vec<usize> = z.to_vec();
        if let Some(stems) = stem_system_for_roots(g, &roots) {
            let family = assemble_family(g, &roots, &stems);
            best = Some(BouquetOutcome {
                value,
                family,
                stem_system: Some(stems),
            });
        }
    }
    Ok(best.unwrap_or(BouquetOutcome {
        value: 0,
        family: BouquetFamily::default(),
        stem_system: Some(vec![]),
    }))
}

/// Backtracking choice of one flower per root so the stems are pairwise
/// 3-disjoint; flowers are distinct by 3-disjointness itself.
fn stem_system_for_roots(g: &Graph, roots: &[usize]) -> Option<Vec<(usize, usize)>> {
    fn rec(g: &Graph, roots: &[usize], chosen: &mut Vec<(usize, usize)>) -> bool {
        let Some(&z) = roots.first() else {
            return true;
        };
        for w in g.nb(z).iter() {
            if chosen.iter().all(|&e| stems_three_disjoint(g, e, (z, w))) {
                chosen.push((z, w));
                if rec(g, &roots[1..], chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(roots.len());
    rec(g, roots, &mut chosen).then_some(chosen)
}

/// Strategy interface for computing d'_G. Engines are registered by name and
/// selectable at runtime.
pub trait DPrimeEngine: Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, g: &Graph, cfg: &Config) -> Result<BouquetOutcome>;
}

/// Fast engine: per independent root set Z, the family is feasible iff a
/// bipartite matching assigns each root a distinct flower; the optimum for Z
/// is then |N(Z)|.
pub struct MatchingEngine;

impl DPrimeEngine for MatchingEngine {
    fn name(&self) -> &'static str {
        "matching"
    }

    fn compute(&self, g: &Graph, cfg: &Config) -> Result<BouquetOutcome> {
        check_search_cutoff(g, cfg)?;
        let n = g.n();
        let mut best: Option<BouquetOutcome> = None;
        for bits in 1..1u64 << n {
            let z = VertexSet::from_bits(bits);
            if !g.is_independent(z) || z.iter().any(|v| g.nb(v).is_empty()) {
                continue;
            }
            let flowers = z
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(g.nb(v)));
            let value = flowers.len();
            if best.as_ref().is_some_and(|b| b.value >= value) {
                continue;
            }
            let roots: Vec<usize> = z.to_vec();
            if let Some(matched) = saturating_matching(g, &roots) {
                let family = assemble_family(g, &roots, &matched);
                best = Some(BouquetOutcome {
                    value,
                    family,
                    stem_system: None,
                });
            }
        }
        Ok(best.unwrap_or(BouquetOutcome {
            value: 0,
            family: BouquetFamily::default(),
            stem_system: None,
        }))
    }
}

/// Kuhn augmenting-path matching from roots to their neighbors; returns the
/// (root, flower) pairs when every root is matched.
fn saturating_matching(g: &Graph, roots: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut matched_flower: Vec<Option<usize>> = vec![None; g.n()]; // flower -> root index
    fn augment(
        g: &Graph,
        roots: &[usize],
        i: usize,
        visited: &mut VertexSet,
        matched_flower: &mut Vec<Option<usize>>,
    ) -> bool {
        for w in g.nb(roots[i]).iter() {
            if visited.contains(w) {
                continue;
            }
            *visited = visited.with(w);
            match matched_flower[w] {
                None => {
                    matched_flower[w] = Some(i);
                    return true;
                }
                Some(other) => {
                    if augment(g, roots, other, visited, matched_flower) {
                        matched_flower[w] = Some(i);
                        return true;
                    }
                }
            }
        }
        false
    }
    for i in 0..roots.len() {
        let mut visited = VertexSet::EMPTY;
        if !augment(g, roots, i, &mut visited, &mut matched_flower) {
            return None;
        }
    }
    let mut pairs: Vec<(usize, usize)> = matched_flower
        .iter()
        .enumerate()
        .filter_map(|(w, &i)| i.map(|i| (roots[i], w)))
        .collect();
    pairs.sort_unstable();
    Some(pairs)
}

/// Reference engine: literal enumeration of bouquet families (roots in
/// ascending order, all nonempty flower subsets), with an admissible
/// remaining-vertices bound.
pub struct BruteForceEngine;

impl DPrimeEngine for BruteForceEngine {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn compute(&self, g: &Graph, cfg: &Config) -> Result<BouquetOutcome> {
        check_search_cutoff(g, cfg)?;
        let mut best_value = 0usize;
        let mut best_family = BouquetFamily::default();
        let mut family: Vec<Bouquet> = Vec::new();
        brute_families(
            g,
            0,
            VertexSet::EMPTY,
            VertexSet::EMPTY,
            0,
            &mut family,
            &mut best_value,
            &mut best_family,
        );
        Ok(BouquetOutcome {
            value: best_value,
            family: best_family,
            stem_system: None,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn brute_families(
    g: &Graph,
    min_root: usize,
    used: VertexSet,
    roots: VertexSet,
    flower_total: usize,
    family: &mut Vec<Bouquet>,
    best_value: &mut usize,
    best_family: &mut BouquetFamily,
) {
    if flower_total > *best_value {
        *best_value = flower_total;
        *best_family = BouquetFamily {
            bouquets: family.clone(),
        };
    }
    let available = g.vertices().difference(used);
    // every future flower comes from the unused pool
    if flower_total + available.len() <= *best_value {
        return;
    }
    for z in min_root..g.n() {
        if used.contains(z) || !g.nb(z).intersection(roots).is_empty() {
            continue;
        }
        let pool = g.nb(z).difference(used);
        if pool.is_empty() {
            continue;
        }
        // all nonempty subsets of the pool
        let bits = pool.bits();
        let mut sub = bits;
        while sub != 0 {
            let flowers = VertexSet::from_bits(sub);
            family.push(Bouquet { root: z, flowers });
            brute_families(
                g,
                z + 1,
                used.union(flowers).with(z),
                roots.with(z),
                flower_total + flowers.len(),
                family,
                best_value,
                best_family,
            );
            family.pop();
            sub = (sub - 1) & bits;
        }
    }
}

static MATCHING: MatchingEngine = MatchingEngine;
static BRUTE: BruteForceEngine = BruteForceEngine;
static ENGINES: [&dyn DPrimeEngine; 2] = [&MATCHING, &BRUTE];

/// All registered d' engines.
pub fn d_prime_engines() -> &'static [&'static dyn DPrimeEngine] {
    &ENGINES
}

/// Looks up a d' engine by its registered name.
pub fn d_prime_engine(name: &str) -> Option<&'static dyn DPrimeEngine> {
    d_prime_engines().iter().copied().find(|e| e.name() == name)
}

/// d'_G with the default (matching) engine.
pub fn d_prime_number(g: &Graph, cfg: &Config) -> Result<BouquetOutcome> {
    MATCHING.compute(g, cfg)
}

/// bight(I(G)): maximum size of a minimal vertex cover.
pub fn bight(g: &Graph, cfg: &Config) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    Ok(g.minimal_vertex_covers(cfg)?
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0))
}

/// γ(G): minimum dominating set size. For the edgeless graph this is n.
pub fn domination_number(g: &Graph, cfg: &Config) -> Result<usize> {
    check_search_cutoff(g, cfg)?;
    let n = g.n();
    let full = g.vertices();
    let mut best = n;
    for bits in 0..1u64 << n {
        let a = VertexSet::from_bits(bits);
        if a.len() >= best {
            continue;
        }
        let covered = a
            .iter()
            .fold(a, |acc, v| acc.union(g.nb(v)));
        if covered == full {
            best = a.len();
        }
    }
    Ok(best)
}

/// ε(G): minimum number of edges F such that every vertex is adjacent to an
/// endpoint of some edge in F. `closed = true` also counts a vertex's own
/// membership in an endpoint set (see Config::epsilon_closed).
pub fn edgewise_domination_number(g: &Graph, cfg: &Config, closed: bool) -> Result<usize> {
    check_search_cutoff(g, cfg)?;
    if g.has_isolated_vertex() {
        return Err(Error::Domain(
            "edgewise domination is undefined when the graph has an isolated vertex".into(),
        ));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let full = g.vertices();
    let masks: Vec<VertexSet> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let open = g.nb(u).union(g.nb(v));
            if closed {
                open.with(u).with(v)
            } else {
                open
            }
        })
        .collect();
    let m = masks.len();
    for k in 1..=m {
        let mut picks = Vec::with_capacity(k);
        if cover_search(&masks, full, 0, k, VertexSet::EMPTY, &mut picks) {
            return Ok(k);
        }
    }
    Err(Error::Domain(
        "no edgewise dominant set exists".into(),
    ))
}

fn cover_search(
    masks: &[VertexSet],
    target: VertexSet,
    start: usize,
    remaining: usize,
    covered: VertexSet,
    picks: &mut Vec<usize>,
) -> bool {
    if covered == target {
        return true;
    }
    if remaining == 0 || start >= masks.len() {
        return false;
    }
    for i in start..masks.len() {
        picks.push(i);
        if cover_search(masks, target, i + 1, remaining - 1, covered.union(masks[i]), picks) {
            return true;
        }
        picks.pop();
    }
    false
}

/// True iff all maximal independent sets share one cardinality.
pub fn is_unmixed(g: &Graph, cfg: &Config) -> Result<bool> {
    let (lo, hi) = min_max_maximal_independent(g, cfg)?;
    Ok(lo == hi)
}

/// (min, max) size over maximal independent sets.
pub fn min_max_maximal_independent(g: &Graph, cfg: &Config) -> Result<(usize, usize)> {
    let sizes: Vec<usize> = g
        .maximal_independent_sets(cfg)?
        .iter()
        .map(|f| f.len())
        .collect();
    let lo = sizes.iter().copied().min().unwrap_or(0);
    let hi = sizes.iter().copied().max().unwrap_or(0);
    Ok((lo, hi))
}
