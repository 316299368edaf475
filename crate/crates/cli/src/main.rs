use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use minhom::classify::{classify, TargetClass};
use minhom::digraph::Digraph;
use minhom::io;
use minhom::minmax::{order_acyclic_locally_semicomplete, proper_exchange_procedure, ExchangeOutcome};
use minhom::pib::is_proper_interval_bigraph;
use minhom::recognize::{is_locally_semicomplete, is_quasi_transitive, is_transitive_oriented, recognize_all};
use minhom::reductions::{max_independent_set, reduce_i3, reduce_independent_set, Gadget, ReductionInstance};
use minhom::solver::{solve, Algorithm};
use minhom::suites::{run_suite, Suite};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "minhom", version, about = "Classify MinHOM targets and solve MinHOM instances exactly")]
struct Cli {
    /// Emit JSON (the only output format; accepted for compatibility).
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide polynomial vs NP-hard for a target digraph.
    Classify {
        #[arg(long, value_enum, default_value = "auto")]
        class: ClassArg,
        #[arg(long)]
        input: PathBuf,
    },
    /// Report class memberships of a digraph.
    Recognize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Find a Min-Max ordering or an obstruction.
    Order {
        #[arg(long)]
        input: PathBuf,
    },
    /// Proper interval bigraph test on a bipartite graph.
    Pib {
        #[arg(long)]
        input: PathBuf,
    },
    /// Solve a MinHOM instance exactly.
    Solve {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'H', long = "target")]
        target: PathBuf,
        #[arg(short = 'c', long = "costs")]
        costs: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: AlgorithmArg,
    },
    /// Build an independent-set reduction instance.
    Reduce {
        #[arg(long, value_enum)]
        gadget: GadgetArg,
        /// Cycle length for h1/h2.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        graph: PathBuf,
        /// Directory to write the instance files into.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run seeded self-check suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Ls,
    Qt,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Brute,
    Mincut,
    Shift,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetArg {
    H1,
    H2,
    O1,
    O2,
    O3,
    O4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Minmax,
    Exchange,
    Pib,
    Reduction,
    Oreduction,
    Classifier,
    All,
}

#[derive(Serialize)]
struct InputFile {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    subcommand: &'static str,
    inputs: Vec<InputFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
    result: Value,
}

enum Failure {
    Usage(String),
    Input(anyhow::Error),
}

struct Outcome {
    result: Value,
    /// Exit code 3: the report is complete but a check failed.
    verification_failed: bool,
}

struct Inputs(Vec<InputFile>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display())).map_err(Failure::Input)?;
        self.0.push(InputFile { path: path.display().to_string(), sha256: hex::encode(Sha256::digest(&bytes)) });
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display())).map_err(Failure::Input)
    }

    fn digraph(&mut self, path: &Path) -> Result<Digraph, Failure> {
        let text = self.read(path)?;
        io::parse_digraph(&text).with_context(|| format!("parsing {}", path.display())).map_err(Failure::Input)
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn ok(result: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { result, verification_failed: false })
}

fn run(command: &Command, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match command {
        Command::Classify { class, input } => {
            let h = inputs.digraph(input)?;
            let class = match class {
                ClassArg::Ls => TargetClass::LocallySemicomplete,
                ClassArg::Qt => TargetClass::QuasiTransitive,
                ClassArg::Auto if is_locally_semicomplete(&h) || !is_quasi_transitive(&h) => TargetClass::LocallySemicomplete,
                ClassArg::Auto => TargetClass::QuasiTransitive,
            };
            let verdict = classify(&h, class).map_err(|e| Failure::Input(e.into()))?;
            ok(to_value(verdict))
        }
        Command::Recognize { input } => ok(to_value(recognize_all(&inputs.digraph(input)?))),
        Command::Order { input } => {
            let h = inputs.digraph(input)?;
            if h.is_acyclic() && h.is_weakly_connected() && is_locally_semicomplete(&h) {
                let o = order_acyclic_locally_semicomplete(&h).map_err(|e| Failure::Input(e.into()))?;
                return ok(json!({ "method": "acyclic_locally_semicomplete", "ordering": o.order }));
            }
            if !is_transitive_oriented(&h) {
                return Err(Failure::Usage(
                    "order needs a connected acyclic locally semicomplete digraph or a transitive oriented graph".into(),
                ));
            }
            let run = proper_exchange_procedure(&h).map_err(|e| Failure::Input(e.into()))?;
            let steps = run.steps.len();
            ok(match run.outcome {
                ExchangeOutcome::Ordering(o) => json!({ "method": "exchange", "steps": steps, "ordering": o.order }),
                ExchangeOutcome::ObstructionO(o) => json!({
                    "method": "exchange",
                    "obstruction": { "kind": format!("O{}", o.variant + 1), "vertices": o.vertices },
                }),
                ExchangeOutcome::NotPib(obs) => json!({
                    "method": "exchange",
                    "obstruction": { "kind": to_value(obs.kind), "vertices": to_value(&obs.vertices) },
                }),
            })
        }
        Command::Pib { input } => {
            let text = inputs.read(input)?;
            let b = io::parse_bipartite(&text).with_context(|| format!("parsing {}", input.display())).map_err(Failure::Input)?;
            let cert = is_proper_interval_bigraph(&b);
            ok(json!({ "pib": cert.is_pib(), "certificate": to_value(&cert) }))
        }
        Command::Solve { graph, target, costs, algorithm } => {
            let g = inputs.digraph(graph)?;
            let h = inputs.digraph(target)?;
            let text = inputs.read(costs)?;
            let c = io::parse_costs(&text).with_context(|| format!("parsing {}", costs.display())).map_err(Failure::Input)?;
            let algorithm = match algorithm {
                AlgorithmArg::Auto => Algorithm::Auto,
                AlgorithmArg::Brute => Algorithm::Brute,
                AlgorithmArg::Mincut => Algorithm::Mincut,
                AlgorithmArg::Shift => Algorithm::Shift,
            };
            let solution = solve(&g, &h, &c, algorithm).map_err(|e| match e {
                minhom::solver::SolveError::Dimensions(_) => Failure::Input(e.into()),
                other => Failure::Usage(other.to_string()),
            })?;
            let hom = solution.homomorphism.as_ref();
            ok(json!({
                "feasible": hom.is_some(),
                "cost": hom.map(|x| x.cost),
                "homomorphism": hom.map(|x| &x.f),
                "algorithms": solution.algorithms,
                "warnings": solution.warnings,
            }))
        }
        Command::Reduce { gadget, k, graph, emit } => {
            let text = inputs.read(graph)?;
            let g = io::parse_ugraph(&text).with_context(|| format!("parsing {}", graph.display())).map_err(Failure::Input)?;
            let built = match gadget {
                GadgetArg::H1 => reduce_independent_set(&g, Gadget::H1 { k: *k }),
                GadgetArg::H2 => reduce_independent_set(&g, Gadget::H2 { k: *k }),
                GadgetArg::O1 => reduce_i3(&g, 0),
                GadgetArg::O2 => reduce_i3(&g, 1),
                GadgetArg::O3 => reduce_i3(&g, 2),
                GadgetArg::O4 => reduce_i3(&g, 3),
            };
            let instance = built.map_err(|e| Failure::Usage(e.to_string()))?;
            let manifest = manifest(&instance, &g);
            if let Some(dir) = emit {
                write_instance(dir, &instance, &manifest).map_err(Failure::Input)?;
            }
            ok(manifest)
        }
        Command::Verify { suite, seed, trials } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Oracle => vec![Suite::Oracle],
                SuiteArg::Minmax => vec![Suite::Minmax],
                SuiteArg::Exchange => vec![Suite::Exchange],
                SuiteArg::Pib => vec![Suite::Pib],
                SuiteArg::Reduction => vec![Suite::Reduction],
                SuiteArg::Oreduction => vec![Suite::OReduction],
                SuiteArg::Classifier => vec![Suite::Classifier],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, *seed, *trials)).collect();
            let passed = reports.iter().all(|r| r.passed);
            Ok(Outcome {
                result: json!({ "seed": seed, "trials": trials, "passed": passed, "suites": reports }),
                verification_failed: !passed,
            })
        }
    }
}

fn manifest(instance: &ReductionInstance, g: &minhom::ugraph::UGraph) -> Value {
    let alpha = max_independent_set(g).ok();
    json!({
        "gadget": instance.gadget,
        "source_vertices": g.n(),
        "source_edges": g.edge_count(),
        "vertices": instance.g.n(),
        "arcs": instance.g.arc_count(),
        "target_vertices": instance.h.n(),
        "expected_cost": "source_vertices - alpha",
        "alpha": alpha,
        "expected_cost_value": alpha.map(|a| instance.expected_cost(a)),
    })
}

fn write_instance(dir: &Path, instance: &ReductionInstance, manifest: &Value) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let files = [
        ("g.dg", io::write_digraph(&instance.g)),
        ("h.dg", io::write_digraph(&instance.h)),
        ("costs.csv", io::write_costs(&instance.costs)),
        ("manifest.json", serde_json::to_string_pretty(manifest)? + "\n"),
    ];
    for (name, content) in files {
        let path = dir.join(name);
        std::fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Recognize { .. } => "recognize",
        Command::Order { .. } => "order",
        Command::Pib { .. } => "pib",
        Command::Solve { .. } => "solve",
        Command::Reduce { .. } => "reduce",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = std::env::var("MINHOM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let start = Instant::now();
    let mut inputs = Inputs(Vec::new());
    let outcome = run(&cli.command, &mut inputs);
    let outcome = match outcome {
        Ok(o) => o,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        subcommand: subcommand_name(&cli.command),
        inputs: inputs.0,
        wall_time_ms: cli.timing.then(|| start.elapsed().as_millis()),
        result: outcome.result,
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(if outcome.verification_failed { 3 } else { 0 })
}
