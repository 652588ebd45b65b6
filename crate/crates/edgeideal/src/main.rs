use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use edgeideal::config::Config;
use edgeideal::decomp::{is_bipartite, is_c5_free, is_chordal, is_vertex_decomposable};
use edgeideal::error::{Error, Result};
use edgeideal::generate;
use edgeideal::graph::Graph;
use edgeideal::homology::FieldChar;
use edgeideal::invariants::{self, DPrimeEngine};
use edgeideal::report::{verify_theorems, InvariantBundle, VerificationReport};
use edgeideal::search::search_d_question;

#[derive(Parser)]
#[command(name = "edgeideal", version, about = "Edge-ideal invariants and theorem verification")]
struct Cli {
    /// d' engine: matching (default) or brute
    #[arg(long, global = true, default_value = "matching")]
    dprime_engine: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CharArg {
    /// Field characteristic: 0 or a prime
    #[arg(long = "char", default_value_t = 0)]
    field_char: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial invariant bundle of a graph file
    Invariants { file: PathBuf },
    /// Graded Betti table of R/I(G)
    Betti {
        file: PathBuf,
        #[command(flatten)]
        char_arg: CharArg,
    },
    /// Class flags and certificates
    Classify { file: PathBuf },
    /// Full theorem-verification report; exit 1 if an applicable claim fails
    Verify {
        file: PathBuf,
        #[command(flatten)]
        char_arg: CharArg,
    },
    /// Generate a graph from a seeded family
    Gen {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counterexample searches
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Batch verification over a corpus directory or the builtin corpus
    Suite {
        #[arg(long)]
        corpus: String,
        #[command(flatten)]
        char_arg: CharArg,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Search for a C5-free vertex decomposable graph with d != d'
    Dq {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    });
}

fn field_of(arg: &CharArg) -> Result<FieldChar> {
    FieldChar::new(arg.field_char)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    Graph::parse_edge_list(&text)
}

fn engine_of(name: &str) -> Result<&'static dyn DPrimeEngine> {
    invariants::d_prime_engine(name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown d' engine {name:?}")))
}

fn run(cli: Cli) -> Result<i32> {
    let cfg = Config::from_env();
    let engine = engine_of(&cli.dprime_engine)?;
    match cli.command {
        Command::Invariants { file } => {
            let g = read_graph(&file)?;
            let bundle = invariant_bundle(&g, &cfg, engine)?;
            println!("{}", canonical_json(&bundle)?);
            Ok(0)
        }
        Command::Betti { file, char_arg } => {
            let g = read_graph(&file)?;
            let field = field_of(&char_arg)?;
            let table = edgeideal::betti::hochster_betti_table(
                &edgeideal::betti::ideal_of_graph(&g),
                field,
                &cfg,
            )?;
            print!("{}", table.to_text());
            println!("reg {}", table.reg());
            println!("pd {}", table.pd());
            println!("depth {}", table.depth());
            Ok(0)
        }
        Command::Classify { file } => {
            let g = read_graph(&file)?;
            println!("{}", canonical_json(&classify(&g, &cfg)?)?);
            Ok(0)
        }
        Command::Verify { file, char_arg } => {
            let g = read_graph(&file)?;
            let field = field_of(&char_arg)?;
            let report = verify_theorems(&g, field, &cfg, engine, None)?;
            println!("{}", report.to_canonical_json()?);
            Ok(if report.all_applicable_pass() { 0 } else { 1 })
        }
        Command::Gen {
            family,
            n,
            seed,
            out,
        } => {
            let g = generate::lookup(&family)?.generate(n, seed, &cfg)?;
            let text = g.to_edge_list();
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Search { target } => match target {
            SearchTarget::Dq { max_n, budget, seed } => {
                let out = search_d_question(max_n, budget, seed, &cfg)?;
                println!("candidates_checked {}", out.candidates_checked);
                match out.counterexample {
                    Some(g) => {
                        println!("counterexample found:");
                        print!("{}", g.to_edge_list());
                    }
                    None => println!("no counterexample"),
                }
                Ok(0)
            }
        },
        Command::Suite { corpus, char_arg } => {
            let field = field_of(&char_arg)?;
            suite(&corpus, field, &cfg, engine)
        }
    }
}

fn canonical_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    serde_json::to_string_pretty(&v)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))
}

fn invariant_bundle(
    g: &Graph,
    cfg: &Config,
    engine: &dyn DPrimeEngine,
) -> Result<InvariantBundle> {
    let has_isolated = (0..g.n()).any(|v| g.nb(v).is_empty());
    let (eps_open, eps_closed) = if has_isolated {
        (None, None)
    } else {
        (
            Some(invariants::edgewise_domination_number(g, cfg, false)?),
            Some(invariants::edgewise_domination_number(g, cfg, true)?),
        )
    };
    let (min_mis, max_mis) = invariants::min_max_maximal_independent(g, cfg)?;
    Ok(InvariantBundle {
        c: Some(invariants::c_number(g, cfg)?.value),
        d: Some(invariants::d_number(g, cfg)?.value),
        d_prime: Some(engine.compute(g, cfg)?.value),
        bight: Some(invariants::bight(g, cfg)?),
        gamma: Some(invariants::domination_number(g, cfg)?),
        epsilon_open: eps_open,
        epsilon_closed: eps_closed,
        min_maximal_independent: Some(min_mis),
        max_maximal_independent: Some(max_mis),
        dim: Some(edgeideal::betti::krull_dim(g, cfg)?),
    })
}

#[derive(serde::Serialize)]
struct Classification {
    c5_free: bool,
    c5_witness: Option<edgeideal::vset::VertexSet>,
    vertex_decomposable: bool,
    certificate: Option<edgeideal::decomp::Certificate>,
    chordal: bool,
    bipartite: bool,
    unmixed: bool,
    has_isolated: bool,
}

fn classify(g: &Graph, cfg: &Config) -> Result<Classification> {
    let (c5_free, c5_witness) = is_c5_free(g);
    let (vd, certificate) = is_vertex_decomposable(g, cfg)?;
    Ok(Classification {
        c5_free,
        c5_witness,
        vertex_decomposable: vd,
        certificate,
        chordal: is_chordal(g),
        bipartite: is_bipartite(g),
        unmixed: invariants::is_unmixed(g, cfg)?,
        has_isolated: (0..g.n()).any(|v| g.nb(v).is_empty()),
    })
}

fn builtin_corpus(cfg: &Config) -> Result<Vec<(String, Graph)>> {
    use edgeideal::graph::{complete, cycle, path, star};
    let mut corpus: Vec<(String, Graph)> = vec![
        ("c3".into(), cycle(3)),
        ("c4".into(), cycle(4)),
        ("c5".into(), cycle(5)),
        ("k2".into(), complete(2)),
        ("k4".into(), complete(4)),
        ("p4".into(), path(4)),
        ("p5".into(), path(5)),
        ("star4".into(), star(4)),
        ("whisker-c4".into(), generate::whisker(&cycle(4))?),
        ("whisker-p3".into(), generate::whisker(&path(3))?),
    ];
    for seed in 0..5u64 {
        corpus.push((
            format!("tree-{seed}"),
            generate::lookup("tree")?.generate(7, seed, cfg)?,
        ));
        corpus.push((
            format!("chordal-{seed}"),
            generate::lookup("chordal")?.generate(7, seed, cfg)?,
        ));
    }
    corpus.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(corpus)
}

fn suite(
    corpus: &str,
    field: FieldChar,
    cfg: &Config,
    engine: &dyn DPrimeEngine,
) -> Result<i32> {
    let graphs: Vec<(String, Graph)> = if corpus == "builtin" {
        builtin_corpus(cfg)?
    } else {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(corpus)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "edges"))
            .collect();
        entries.sort();
        let mut graphs = Vec::new();
        for path in entries {
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            graphs.push((name, read_graph(&path)?));
        }
        graphs
    };
    if graphs.is_empty() {
        return Err(Error::InvalidInput(format!("no graphs in corpus {corpus:?}")));
    }

    use rayon::prelude::*;
    let reports: Vec<(String, Result<VerificationReport>)> = graphs
        .par_iter()
        .map(|(name, g)| (name.clone(), verify_theorems(g, field, cfg, engine, None)))
        .collect();

    let mut any_fail = false;
    println!("{:<16} {:>3} {:>3} {:>10} {:>6} {:>6}  verdict", "graph", "n", "m", "applicable", "pass", "fail");
    for (name, report) in &reports {
        match report {
            Ok(r) => {
                let applicable = r.verdicts.iter().filter(|v| v.applicable).count();
                let failed = r.failures().len();
                let passed = applicable - failed;
                let verdict = if failed == 0 { "ok" } else { "FAIL" };
                any_fail |= failed > 0;
                println!(
                    "{:<16} {:>3} {:>3} {:>10} {:>6} {:>6}  {verdict}",
                    name, r.graph.n, r.graph.m, applicable, passed, failed
                );
            }
            Err(e) => return Err(Error::InvalidInput(format!("{name}: {e}"))),
        }
    }
    Ok(if any_fail { 1 } else { 0 })
}
