//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use minhom::classify::{
    classify_locally_semicomplete, classify_quasi_transitive, verify_certificate, ComponentOutcome, Outcome, Verdict,
    WitnessKind,
};
use minhom::digraph::Digraph;
use minhom::enumerate::{
    all_bipartite, all_digraphs, forward_dags, graphs_up_to_isomorphism, permutations, proper_colorings, random_bipartite,
};
use minhom::iso::are_isomorphic;
use minhom::minmax::{o_family, order_acyclic_locally_semicomplete, verify_minmax};
use minhom::pib::obstruction_is_induced;
use minhom::recognize::{is_locally_semicomplete, is_semicomplete, is_transitive_oriented};
use minhom::reductions::{gadget_h1, gadget_h2, reduce_i3, reduce_independent_set, verify_reduction, Gadget};
use minhom::suites::{check_exchange, check_pib_agreement, run_suite, Suite};
use minhom::ugraph::UGraph;

struct Line {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

// Distinct labelled digraphs isomorphic to one of `reps`.
fn all_labellings(reps: impl Iterator<Item = Digraph>) -> Vec<Digraph> {
    let perms = permutations(6);
    let mut seen = std::collections::BTreeSet::new();
    for d in reps {
        for p in &perms {
            let mut arcs: Vec<(usize, usize)> = d.arcs().into_iter().map(|(u, v)| (p[u], p[v])).collect();
            arcs.sort_unstable();
            seen.insert(arcs);
        }
    }
    seen.into_iter().map(|arcs| Digraph::new(6, arcs).expect("relabelled")).collect()
}

fn first_failures(failures: &[String]) -> String {
    failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn oracle_equivalence() -> Line {
    let report = run_suite(Suite::Oracle, 2024, 600);
    Line {
        id: 1,
        title: "polynomial solvers match the exhaustive oracle",
        passed: report.passed && report.checked >= 500,
        detail: format!(
            "{} instances with a polynomial solver, {} disagreements {}",
            report.checked,
            report.failures.len(),
            report.failures.iter().take(2).map(|f| f.detail.clone()).collect::<Vec<_>>().join("; ")
        ),
    }
}

fn acyclic_ls_orderings() -> Line {
    let check = |h: &Digraph| -> Option<String> {
        match order_acyclic_locally_semicomplete(h) {
            Ok(o) if verify_minmax(h, &o) => None,
            Ok(o) => Some(format!("{o:?} fails on {h:?}")),
            Err(e) => Some(format!("{e} on {h:?}")),
        }
    };
    let eligible = |h: &Digraph| h.n() > 0 && h.is_acyclic() && h.is_weakly_connected() && is_locally_semicomplete(h);
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 1..=5 {
        let found: Vec<String> = all_digraphs(n).par_bridge().filter(|h| eligible(h)).filter_map(|h| check(&h)).collect();
        failures.extend(found);
        checked += all_digraphs(n).filter(|h| eligible(h)).count();
    }
    let graphs = all_labellings(forward_dags(6).filter(|h| eligible(h)));
    checked += graphs.len();
    failures.extend(graphs.par_iter().filter_map(check).collect::<Vec<_>>());
    Line {
        id: 2,
        title: "acyclic locally semicomplete digraphs get Min-Max orderings",
        passed: failures.is_empty(),
        detail: format!("{checked} digraphs, {} failures {}", failures.len(), first_failures(&failures)),
    }
}

fn exchange_procedure() -> Line {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    // every labelled transitive oriented graph up to 5 vertices
    for n in 1..=5 {
        let graphs: Vec<Digraph> = all_digraphs(n).filter(is_transitive_oriented).collect();
        checked += graphs.len();
        failures.extend(graphs.par_iter().filter_map(|t| check_exchange(t).err()).collect::<Vec<_>>());
    }
    // every labelled 6-vertex graph, as the distinct relabellings of forward ones
    let graphs = all_labellings(forward_dags(6).filter(is_transitive_oriented));
    checked += graphs.len();
    failures.extend(graphs.par_iter().filter_map(|t| check_exchange(t).err()).collect::<Vec<_>>());
    Line {
        id: 3,
        title: "exchange procedure: step bound, Min-Max after each step, success iff PIB and no O",
        passed: failures.is_empty(),
        detail: format!("{checked} runs, {} failures {}", failures.len(), first_failures(&failures)),
    }
}

fn dual_pib_oracle() -> Line {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for w in 1..=4 {
        for b in 1..=4 {
            let graphs: Vec<_> = all_bipartite(w, b).collect();
            checked += graphs.len();
            failures.extend(graphs.par_iter().filter_map(|g| check_pib_agreement(g).err()).collect::<Vec<_>>());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let (w, b) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let density = rng.gen_range(0.15..0.7);
        checked += 1;
        failures.extend(check_pib_agreement(&random_bipartite(&mut rng, w, b, density)).err());
    }
    Line {
        id: 4,
        title: "ordering search and forbidden-subgraph search agree on PIB",
        passed: failures.is_empty(),
        detail: format!("{checked} bipartite graphs, {} disagreements {}", failures.len(), first_failures(&failures)),
    }
}

fn small_graphs() -> Vec<UGraph> {
    (0..=5).flat_map(graphs_up_to_isomorphism).collect()
}

fn h_reductions() -> Line {
    let mut graphs = small_graphs();
    graphs.extend([UGraph::cycle(5), UGraph::path(3)]);
    let mut parts = Vec::new();
    let mut passed = true;
    for gadget in [Gadget::H1 { k: 2 }, Gadget::H1 { k: 3 }, Gadget::H2 { k: 3 }] {
        let failures: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| {
                let inst = reduce_independent_set(g, gadget).expect("valid gadget");
                let r = verify_reduction(&inst, g).expect("small instance");
                (!r.passed).then(|| {
                    format!(
                        "edges {:?}: expected {}, found {:?}, forced sequence {:?}, never both 2 {:?}",
                        g.edges(),
                        r.expected,
                        r.found,
                        r.forced_sequence,
                        r.never_both_2
                    )
                })
            })
            .collect();
        passed &= failures.is_empty();
        parts.push(format!("{gadget:?}: {}/{} fail {}", failures.len(), graphs.len(), first_failures(&failures[..failures.len().min(1)])));
    }
    Line {
        id: 5,
        title: "H1/H2 reductions: optimum = |V(G)| - alpha(G), forced sequences, never both 2",
        passed,
        detail: parts.join(" | "),
    }
}

fn o_reductions() -> Line {
    let coloured: Vec<UGraph> = small_graphs()
        .into_iter()
        .flat_map(|g| proper_colorings(&g).into_iter().map(move |c| g.clone().with_coloring(c).expect("proper")))
        .collect();
    let mut failures = Vec::new();
    for variant in 0..4 {
        failures.extend(
            coloured
                .par_iter()
                .filter_map(|x| {
                    let r = verify_reduction(&reduce_i3(x, variant).expect("coloured"), x).expect("small instance");
                    (r.found != Some(r.expected))
                        .then(|| format!("O{} edges {:?}: expected {}, found {:?}", variant + 1, x.edges(), r.expected, r.found))
                })
                .collect::<Vec<_>>(),
        );
    }
    Line {
        id: 6,
        title: "O reductions: optimum = |V(X)| - alpha(X)",
        passed: failures.is_empty(),
        detail: format!("{} instances, {} failures {}", 4 * coloured.len(), failures.len(), first_failures(&failures)),
    }
}

// Independent restatement: induced copy of the named obstruction.
fn witness_is_genuine(h: &Digraph, kind: &WitnessKind, vertices: &[usize], converse: bool) -> bool {
    let Ok(sub) = h.induced_subdigraph(vertices) else { return false };
    match kind {
        WitnessKind::SemicompleteWithCycle => {
            is_semicomplete(&sub) && !sub.is_acyclic() && sub.n() >= 3 && !are_isomorphic(&sub, &Digraph::directed_cycle(3))
        }
        WitnessKind::H1 { k } => gadget_h1(*k).is_some_and(|g| are_isomorphic(&sub, &if converse { g.converse() } else { g })),
        WitnessKind::H2 { k } => gadget_h2(*k).is_some_and(|g| are_isomorphic(&sub, &if converse { g.converse() } else { g })),
        WitnessKind::InducedO { variant } => o_family().get(*variant).is_some_and(|o| are_isomorphic(&sub, o)),
        WitnessKind::BigraphObstruction { obstruction } => obstruction_is_induced(&h.bipartite_replication(), obstruction),
    }
}

fn verdict_problems(h: &Digraph, v: &Verdict) -> Option<String> {
    for c in &v.components {
        match &c.outcome {
            ComponentOutcome::Polynomial { certificate } if !verify_certificate(h, &c.vertices, certificate) => {
                return Some(format!("certificate {certificate:?} fails on {h:?}"));
            }
            ComponentOutcome::NpHard { witness } if !witness_is_genuine(h, &witness.kind, &witness.vertices, witness.converse) => {
                return Some(format!("witness {witness:?} is not genuine in {h:?}"));
            }
            _ => {}
        }
    }
    None
}

// Polynomial iff every weak component is acyclic or a directed cycle.
fn ls_rule(h: &Digraph) -> Outcome {
    let easy = h.weak_components().into_iter().all(|comp| {
        let sub = h.induced_subdigraph(&comp).expect("component");
        let cycle = sub.n() >= 2 && sub.arc_count() == sub.n() && (0..sub.n()).all(|v| sub.out_neighbors(v).len() == 1 && sub.in_neighbors(v).len() == 1);
        sub.is_acyclic() || cycle
    });
    if easy {
        Outcome::Polynomial
    } else {
        Outcome::NpHard
    }
}

fn classifier_soundness() -> Line {
    let graphs: Vec<Digraph> = (0..=4).flat_map(all_digraphs).collect();
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|h| {
            let ls = match classify_locally_semicomplete(h) {
                Ok(v) => v,
                Err(e) => return Some(format!("{e} on {h:?}")),
            };
            let qt = match classify_quasi_transitive(h) {
                Ok(v) => v,
                Err(e) => return Some(format!("{e} on {h:?}")),
            };
            if let Some(p) = verdict_problems(h, &ls).or_else(|| verdict_problems(h, &qt)) {
                return Some(p);
            }
            if is_semicomplete(h) && ls.verdict != qt.verdict {
                return Some(format!("semicomplete {h:?}: {:?} vs {:?}", ls.verdict, qt.verdict));
            }
            if is_locally_semicomplete(h) && ls.verdict != ls_rule(h) {
                return Some(format!("{h:?}: verdict {:?}, rule {:?}", ls.verdict, ls_rule(h)));
            }
            None
        })
        .collect();
    Line {
        id: 7,
        title: "classifier certificates, witnesses and consistency on all digraphs up to 4 vertices",
        passed: failures.is_empty(),
        detail: format!("{} digraphs, {} failures {}", graphs.len(), failures.len(), first_failures(&failures)),
    }
}

fn determinism() -> Line {
    let run = || Command::new(env!("CARGO_BIN_EXE_minhom")).args(["verify", "--seed", "42"]).output().expect("binary runs");
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    Line {
        id: 8,
        title: "verify --seed 42 is byte-identical across runs",
        passed: same && a.status.success() && b.status.success(),
        detail: format!("{} bytes, identical = {same}, exit codes {:?} {:?}", a.stdout.len(), a.status.code(), b.status.code()),
    }
}

fn main() {
    let criteria: [fn() -> Line; 8] = [
        oracle_equivalence,
        acyclic_ls_orderings,
        exchange_procedure,
        dual_pib_oracle,
        h_reductions,
        o_reductions,
        classifier_soundness,
        determinism,
    ];
    let mut all = true;
    for criterion in criteria {
        let start = Instant::now();
        let line = criterion();
        all &= line.passed;
        println!(
            "criterion {}: {} : {} ({}; {:.1}s)",
            line.id,
            if line.passed { "PASS" } else { "FAIL" },
            line.title,
            line.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if !all {
        std::process::exit(1);
    }
}
