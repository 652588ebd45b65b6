//! Counterexample search for the open question: does d = d' hold on every
//! C5-free vertex decomposable graph?
//!
//! Exhaustive over all labeled graphs for small n, then seeded random graphs
//! up to the budget. Any candidate with d != d' is re-verified with the
//! brute-force engine before it is reported.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::decomp::{is_c5_free, is_vertex_decomposable};
use crate::error::Result;
use crate::generate::random_graph;
use crate::graph::Graph;
use crate::invariants::{d_number, d_prime_engine, d_prime_number};

/// Upper bound of the exhaustive pass; above this the search is sampled.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub counterexample: Option<Graph>,
    pub candidates_checked: u64,
}

/// Returns the first C5-free vertex decomposable graph found with d != d',
/// or `None` once the exhaustive pass and `budget` sampled graphs are done.
pub fn search_d_question(
    max_n: usize,
    budget: u64,
    seed: u64,
    cfg: &Config,
) -> Result<SearchOutcome> {
    let mut checked = 0u64;

    for n in 1..=max_n.min(EXHAUSTIVE_MAX_N) {
        for g in crate::graph::all_labeled_graphs(n) {
            if check_candidate(&g, cfg, &mut checked)? {
                return Ok(SearchOutcome {
                    counterexample: Some(g),
                    candidates_checked: checked,
                });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = 0u64;
    while sampled < budget {
        let n = rng.gen_range(EXHAUSTIVE_MAX_N.min(max_n)..=max_n).max(1);
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(n, p, &mut rng)?;
        sampled += 1;
        if check_candidate(&g, cfg, &mut checked)? {
            return Ok(SearchOutcome {
                counterexample: Some(g),
                candidates_checked: checked,
            });
        }
    }
    Ok(SearchOutcome {
        counterexample: None,
        candidates_checked: checked,
    })
}

/// True when g is in the question's class and d != d' survives brute-force
/// recomputation.
fn check_candidate(g: &Graph, cfg: &Config, checked: &mut u64) -> Result<bool> {
    if !is_c5_free(g).0 || !is_vertex_decomposable(g, cfg)?.0 {
        return Ok(false);
    }
    *checked += 1;
    let d = d_number(g, cfg)?.value;
    let d_prime = d_prime_number(g, cfg)?.value;
    if d == d_prime {
        return Ok(false);
    }
    let brute = d_prime_engine("brute").expect("brute engine registered");
    Ok(d != brute.compute(g, cfg)?.value)
}
