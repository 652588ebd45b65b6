//! Cutoffs and toggles shared by the enumeration and oracle engines.
//!
//! Every field has an environment-variable override so batch runs can be
//! tuned without recompiling:
//!
//! * `EDGEIDEAL_ENUM_CUTOFF` — max vertices for independent-set / cover enumeration
//! * `EDGEIDEAL_ORACLE_CUTOFF` — max variables for the Betti-table oracle
//! * `EDGEIDEAL_DECOMP_CUTOFF` — max vertices for the decomposability recursion
//! * `EDGEIDEAL_CLIQUE_EDGE_BUDGET` — max edges for the 3-disjoint clique search
//! * `EDGEIDEAL_EPSILON_CLOSED` — `1` switches edgewise domination to the
//!   closed-neighborhood reading

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Config {
    pub enum_cutoff: usize,
    pub oracle_cutoff: usize,
    pub decomp_cutoff: usize,
    pub clique_edge_budget: usize,
    pub epsilon_closed: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enum_cutoff: 25,
            oracle_cutoff: 16,
            decomp_cutoff: 20,
            clique_edge_budget: 128,
            epsilon_closed: false,
        }
    }
}

impl Config {
    /// Defaults with environment overrides applied.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(v) = env_usize("EDGEIDEAL_ENUM_CUTOFF") {
            cfg.enum_cutoff = v;
        }
        if let Some(v) = env_usize("EDGEIDEAL_ORACLE_CUTOFF") {
            cfg.oracle_cutoff = v;
        }
        if let Some(v) = env_usize("EDGEIDEAL_DECOMP_CUTOFF") {
            cfg.decomp_cutoff = v;
        }
        if let Some(v) = env_usize("EDGEIDEAL_CLIQUE_EDGE_BUDGET") {
            cfg.clique_edge_budget = v;
        }
        if let Ok(v) = std::env::var("EDGEIDEAL_EPSILON_CLOSED") {
            cfg.epsilon_closed = v == "1" || v.eq_ignore_ascii_case("true");
        }
        cfg
    }
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}
