//! Seeded randomized self-checks, run by `minhom verify`.
//!
//! Trial `t` of a suite draws from its own ChaCha8 stream, so results do not
//! depend on how trials are scheduled across threads.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_locally_semicomplete, classify_quasi_transitive, verify_verdict, Outcome};
use crate::digraph::Digraph;
use crate::enumerate::{random_bipartite, random_c3_extension, random_digraph, random_round_dag, random_transitive_oriented};
use crate::minmax::{find_induced_o, order_acyclic_locally_semicomplete, proper_exchange_procedure, verify_minmax, ExchangeOutcome};
use crate::pib::{find_bipartite_minmax_ordering, find_forbidden_bigraph, is_minmax_bipartite_ordering, obstruction_is_induced};
use crate::recognize::is_locally_semicomplete;
use crate::reductions::{reduce_i3, reduce_independent_set, verify_reduction, Gadget};
use crate::solver::{brute_force_minhom, cost_of, is_homomorphism, solve, Algorithm, CostMatrix};
use crate::ugraph::{Color, UGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Polynomial solvers against the exhaustive oracle.
    Oracle,
    /// Min-Max orderings of acyclic locally semicomplete digraphs.
    Minmax,
    /// The exchange procedure on transitive oriented graphs.
    Exchange,
    /// Ordering search against forbidden-subgraph search.
    Pib,
    /// The H1 independent-set reduction.
    Reduction,
    /// The O independent-set reductions.
    OReduction,
    /// Certificates and witnesses of both classifiers.
    Classifier,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Oracle, Suite::Minmax, Suite::Exchange, Suite::Pib, Suite::Reduction, Suite::OReduction, Suite::Classifier];

    fn stream_base(self) -> u64 {
        (Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64) << 32
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: u64,
    /// Trials whose check applied (for `oracle`: a polynomial solver ran).
    pub checked: u64,
    pub failures: Vec<TrialFailure>,
    pub passed: bool,
}

enum TrialResult {
    Checked,
    Skipped,
    Failed(String),
}

pub fn trial_rng(suite: Suite, seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.stream_base() | trial);
    rng
}

pub fn run_suite(suite: Suite, seed: u64, trials: u64) -> SuiteReport {
    let results: Vec<TrialResult> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(suite, seed, trial);
            match suite {
                Suite::Oracle => oracle_trial(&mut rng),
                Suite::Minmax => minmax_trial(&mut rng),
                Suite::Exchange => exchange_trial(&mut rng),
                Suite::Pib => pib_trial(&mut rng),
                Suite::Reduction => reduction_trial(&mut rng),
                Suite::OReduction => o_reduction_trial(&mut rng),
                Suite::Classifier => classifier_trial(&mut rng),
            }
        })
        .collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (trial, r) in (0..).zip(results) {
        match r {
            TrialResult::Checked => checked += 1,
            TrialResult::Skipped => {}
            TrialResult::Failed(detail) => failures.push(TrialFailure { trial, detail }),
        }
    }
    let passed = failures.is_empty();
    SuiteReport { suite, seed, trials, checked, failures, passed }
}

fn random_costs(rng: &mut impl Rng, n: usize, p: usize, range: std::ops::RangeInclusive<i64>) -> CostMatrix {
    CostMatrix::from_rows((0..n).map(|_| (0..p).map(|_| rng.gen_range(range.clone())).collect()).collect())
        .expect("rectangular")
}

fn is_polynomial(h: &Digraph) -> bool {
    [classify_locally_semicomplete(h), classify_quasi_transitive(h)]
        .into_iter()
        .any(|v| matches!(v, Ok(v) if v.verdict == Outcome::Polynomial))
}

/// A random target on at most 6 vertices that one of the classifiers
/// declares polynomial.
pub fn random_polynomial_target(rng: &mut impl Rng) -> Digraph {
    loop {
        let n = rng.gen_range(1..=6);
        let h = match rng.gen_range(0..6) {
            0 => {
                let density = rng.gen_range(0.2..0.9);
                random_transitive_oriented(rng, n, density)
            }
            1 => random_round_dag(rng, n),
            2 => Digraph::directed_cycle(n.max(2)),
            3 => random_c3_extension(rng, n.max(3)),
            4 => {
                let a = rng.gen_range(1..=n.min(4));
                let left = random_round_dag(rng, a);
                left.disjoint_union(&Digraph::directed_cycle(rng.gen_range(2..=(6 - a).clamp(2, 4))))
            }
            _ => {
                let density = rng.gen_range(0.1..0.6);
                random_digraph(rng, n, density)
            }
        };
        if is_polynomial(&h) {
            return h;
        }
    }
}

/// A random input digraph on at most 7 vertices; half of them are built
/// around a random map to `h` so that a homomorphism exists.
pub fn random_input(rng: &mut impl Rng, h: &Digraph) -> Digraph {
    let n = rng.gen_range(0..=7);
    if rng.gen_bool(0.5) || h.n() == 0 {
        let density = rng.gen_range(0.05..0.5);
        return random_digraph(rng, n, density);
    }
    let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..h.n())).collect();
    let keep = rng.gen_range(0.2..1.0);
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && h.has_arc(f[u], f[v]))
        .collect();
    Digraph::new(n, arcs.into_iter().filter(|_| rng.gen_bool(keep))).expect("simple")
}

fn oracle_trial(rng: &mut impl Rng) -> TrialResult {
    let h = random_polynomial_target(rng);
    let g = random_input(rng, &h);
    let c = random_costs(rng, g.n(), h.n(), -5..=5);
    let fast = match solve(&g, &h, &c, Algorithm::Auto) {
        Ok(s) => s,
        Err(e) => return TrialResult::Failed(format!("solver error {e} on H = {h:?}")),
    };
    if fast.algorithms.contains(&Algorithm::Brute) {
        return TrialResult::Skipped;
    }
    let slow = brute_force_minhom(&g, &h, &c).expect("small instance");
    if let Some(hom) = &fast.homomorphism {
        if !is_homomorphism(&g, &h, &hom.f) || cost_of(&c, &hom.f) != hom.cost {
            return TrialResult::Failed(format!("invalid solution {hom:?} for G = {g:?}, H = {h:?}"));
        }
    }
    let (a, b) = (fast.homomorphism.map(|x| (x.cost, x.f)), slow.map(|x| (x.cost, x.f)));
    if a != b {
        return TrialResult::Failed(format!("{:?} found {a:?}, oracle {b:?}; G = {g:?}, H = {h:?}, c = {c:?}", fast.algorithms));
    }
    TrialResult::Checked
}

fn minmax_trial(rng: &mut impl Rng) -> TrialResult {
    let n = rng.gen_range(1..=8);
    let h = random_round_dag(rng, n);
    if !is_locally_semicomplete(&h) || !h.is_weakly_connected() {
        return TrialResult::Skipped;
    }
    match order_acyclic_locally_semicomplete(&h) {
        Ok(o) if verify_minmax(&h, &o) => TrialResult::Checked,
        Ok(o) => TrialResult::Failed(format!("{o:?} is not Min-Max for {h:?}")),
        Err(e) => TrialResult::Failed(format!("{e} for {h:?}")),
    }
}

/// Checks one run of the exchange procedure on a transitive oriented graph:
/// the step bound, the Min-Max property after every step, and success
/// exactly when `B(t)` is a proper interval bigraph and `t` has no induced `O`.
pub fn check_exchange(t: &Digraph) -> Result<(), String> {
    let run = proper_exchange_procedure(t).map_err(|e| format!("{e} on {t:?}"))?;
    let n = t.n();
    if run.steps.len() > n * n.saturating_sub(1) / 2 {
        return Err(format!("{} steps on {n} vertices: {t:?}", run.steps.len()));
    }
    if let Some(step) = run.steps.iter().find(|s| !s.minmax_after) {
        return Err(format!("step {step:?} lost the Min-Max property on {t:?}"));
    }
    let b = t.bipartite_replication();
    let pib = find_bipartite_minmax_ordering(&b).is_some();
    let has_o = find_induced_o(t).is_some();
    let succeeded = match &run.outcome {
        ExchangeOutcome::Ordering(o) => {
            if !verify_minmax(t, o) {
                return Err(format!("returned ordering {o:?} is not Min-Max for {t:?}"));
            }
            true
        }
        ExchangeOutcome::ObstructionO(_) | ExchangeOutcome::NotPib(_) => false,
    };
    if succeeded != (pib && !has_o) {
        return Err(format!("succeeded = {succeeded}, PIB = {pib}, induced O = {has_o} on {t:?}"));
    }
    Ok(())
}

fn exchange_trial(rng: &mut impl Rng) -> TrialResult {
    let n = rng.gen_range(1..=7);
    let density = rng.gen_range(0.2..0.9);
    let t = random_transitive_oriented(rng, n, density);
    // relabel so the forward order is not handed to the procedure
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let t = Digraph::new(n, t.arcs().into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("relabelled");
    match check_exchange(&t) {
        Ok(()) => TrialResult::Checked,
        Err(e) => TrialResult::Failed(e),
    }
}

/// The two recognizers agree, and each one's evidence checks out.
pub fn check_pib_agreement(b: &crate::digraph::BipartiteGraph) -> Result<(), String> {
    let ordering = find_bipartite_minmax_ordering(b);
    let obstruction = find_forbidden_bigraph(b);
    if let Some(o) = &ordering {
        if is_minmax_bipartite_ordering(b, o) != Ok(true) {
            return Err(format!("bad ordering {o:?} for {b:?}"));
        }
    }
    if let Some(obs) = &obstruction {
        if !obstruction_is_induced(b, obs) {
            return Err(format!("obstruction {obs:?} is not induced in {b:?}"));
        }
    }
    if ordering.is_some() == obstruction.is_some() {
        return Err(format!("ordering {ordering:?} and obstruction {obstruction:?} for {b:?}"));
    }
    Ok(())
}

fn pib_trial(rng: &mut impl Rng) -> TrialResult {
    let (w, k) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
    let density = rng.gen_range(0.15..0.7);
    let b = random_bipartite(rng, w, k, density);
    match check_pib_agreement(&b) {
        Ok(()) => TrialResult::Checked,
        Err(e) => TrialResult::Failed(e),
    }
}

fn random_ugraph(rng: &mut impl Rng, n: usize) -> UGraph {
    let density = rng.gen_range(0.1..0.8);
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    UGraph::new(n, edges.into_iter().filter(|_| rng.gen_bool(density))).expect("simple")
}

fn reduction_trial(rng: &mut impl Rng) -> TrialResult {
    let n = rng.gen_range(0..=6);
    let g = random_ugraph(rng, n);
    let k = rng.gen_range(2..=3);
    let inst = reduce_independent_set(&g, Gadget::H1 { k }).expect("valid gadget");
    match verify_reduction(&inst, &g) {
        Ok(r) if r.passed => TrialResult::Checked,
        Ok(r) => TrialResult::Failed(format!("{r:?} for edges {:?}", g.edges())),
        Err(e) => TrialResult::Failed(e.to_string()),
    }
}

fn o_reduction_trial(rng: &mut impl Rng) -> TrialResult {
    let n = rng.gen_range(0..=6);
    let coloring: Vec<Color> = (0..n).map(|_| Color::ALL[rng.gen_range(0..3)]).collect();
    let density = rng.gen_range(0.2..0.9);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| coloring[a] != coloring[b]).collect();
    let x = UGraph::new(n, edges.into_iter().filter(|_| rng.gen_bool(density)))
        .expect("simple")
        .with_coloring(coloring)
        .expect("proper by construction");
    let variant = rng.gen_range(0..4);
    let inst = reduce_i3(&x, variant).expect("coloured");
    match verify_reduction(&inst, &x) {
        Ok(r) if r.passed => TrialResult::Checked,
        Ok(r) => TrialResult::Failed(format!("{r:?} for edges {:?}", x.edges())),
        Err(e) => TrialResult::Failed(e.to_string()),
    }
}

fn classifier_trial(rng: &mut impl Rng) -> TrialResult {
    let n = rng.gen_range(1..=6);
    let density = rng.gen_range(0.1..0.9);
    let h = if rng.gen_bool(0.5) { random_digraph(rng, n, density) } else { random_polynomial_target(rng) };
    for verdict in [classify_locally_semicomplete(&h), classify_quasi_transitive(&h)] {
        match verdict {
            Ok(v) if verify_verdict(&h, &v) => {}
            Ok(v) => return TrialResult::Failed(format!("verdict {v:?} does not verify on {h:?}")),
            Err(e) => return TrialResult::Failed(format!("{e} on {h:?}")),
        }
    }
    TrialResult::Checked
}
