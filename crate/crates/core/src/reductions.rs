//! Hardness gadgets and the reductions from maximum independent set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{BipartiteGraph, Digraph};
use crate::minmax::o_family;
use crate::solver::{brute_force_minhom, brute_force_with, BruteOptions, CostMatrix, SolveError};
use crate::ugraph::{Color, UGraph};

fn numbered(d: Digraph) -> Digraph {
    let names = (1..=d.n()).map(|i| i.to_string()).collect();
    d.with_names(names).expect("one name per vertex")
}

/// The cycle `1 -> 2 -> ... -> k -> 1` plus a vertex `k+1` with `k -> k+1 -> 1`.
///
/// Vertex `i` of the description is id `i - 1`.
pub fn gadget_h1(k: usize) -> Option<Digraph> {
    if k < 2 {
        return None;
    }
    let arcs = (0..k).map(|i| (i, (i + 1) % k)).chain([(k - 1, k), (k, 0)]);
    Some(numbered(Digraph::from_arcs_lossy(k + 1, arcs)))
}

/// `gadget_h1(k)` plus the arc `k+1 -> 2`.
pub fn gadget_h2(k: usize) -> Option<Digraph> {
    if k < 3 {
        return None;
    }
    let arcs = (0..k).map(|i| (i, (i + 1) % k)).chain([(k - 1, k), (k, 0), (k, 1)]);
    Some(numbered(Digraph::from_arcs_lossy(k + 1, arcs)))
}

/// Which target a reduction instance is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Gadget {
    H1 { k: usize },
    H2 { k: usize },
    /// `variant` indexes [`o_family`].
    O { variant: usize },
}

impl Gadget {
    pub fn target(&self) -> Result<Digraph, ReductionError> {
        match *self {
            Gadget::H1 { k } => gadget_h1(k).ok_or(ReductionError::BadParameter(format!("H1 needs k >= 2, got {k}"))),
            Gadget::H2 { k } => gadget_h2(k).ok_or(ReductionError::BadParameter(format!("H2 needs k >= 3, got {k}"))),
            Gadget::O { variant } => o_family()
                .get(variant)
                .cloned()
                .ok_or(ReductionError::BadParameter(format!("O variant {variant} out of range"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("{0}")]
    BadParameter(String),
    #[error("the O reductions need a three-coloured graph")]
    MissingColoring,
    #[error("graph has {0} vertices; exact independence number is limited to 20")]
    TooLarge(usize),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// A MinHOM instance together with what it encodes.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub gadget: Gadget,
    pub g: Digraph,
    pub h: Digraph,
    pub costs: CostMatrix,
    /// Ids in `g` of the source graph's vertices (vertex `i` of the source is `g` vertex `i`).
    pub originals: Vec<usize>,
    /// For H1/H2 instances, the cycle vertices `c_1..c_{k(k+1)}` of each edge gadget.
    pub gadget_cycles: Vec<GadgetPorts>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPorts {
    pub u: usize,
    pub v: usize,
    pub cycle: Vec<usize>,
}

impl ReductionInstance {
    /// Minimum cost is the source order minus its independence number.
    pub fn expected_cost(&self, alpha: usize) -> i64 {
        self.originals.len() as i64 - alpha as i64
    }
}

struct Builder {
    arcs: Vec<(usize, usize)>,
    names: Vec<String>,
}

impl Builder {
    fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    fn finish(self) -> Digraph {
        let n = self.names.len();
        Digraph::new(n, self.arcs).expect("generated arcs are simple").with_names(self.names).expect("one name per vertex")
    }
}

/// Adds the edge gadget `D_uv` between existing vertices `u` and `v`:
/// a cycle `c_1..c_{k(k+1)}`, paths `c_{2k} -> u' -> u` and
/// `c_{k(k+1)-1} -> v' -> v`, and a transitive triangle `x -> y -> c_1`,
/// `x -> c_1`. Returns the cycle vertices.
fn add_edge_gadget(b: &mut Builder, k: usize, u: usize, v: usize, tag: &str) -> Vec<usize> {
    let len = k * (k + 1);
    let cycle: Vec<usize> = (1..=len).map(|i| b.vertex(format!("{tag}:c:{i}"))).collect();
    let [x, y, u1, v1] = ["x", "y", "u'", "v'"].map(|s| b.vertex(format!("{tag}:{s}")));
    b.arcs.extend((0..len).map(|i| (cycle[i], cycle[(i + 1) % len])));
    b.arcs.extend([(cycle[2 * k - 1], u1), (u1, u), (cycle[len - 2], v1), (v1, v), (x, y), (x, cycle[0]), (y, cycle[0])]);
    cycle
}

/// The edge gadget on its own: ports `u` (id 0) and `v` (id 1), then the
/// `k(k+1) + 4` internal vertices.
pub fn edge_gadget(k: usize) -> Option<Digraph> {
    if k < 2 {
        return None;
    }
    let mut b = Builder { arcs: Vec::new(), names: vec!["u".into(), "v".into()] };
    add_edge_gadget(&mut b, k, 0, 1, "uv");
    Some(b.finish())
}

/// Encodes maximum independent set in `g` as MinHOM to `H1(k)` or `H2(k)`.
///
/// Each edge `ab` (`a < b`) becomes an edge gadget with `u = a`, `v = b`.
/// Original vertices cost 1 at target vertex `1` and `|V(g)|` at `k+1`;
/// everything else is free.
pub fn reduce_independent_set(g: &UGraph, gadget: Gadget) -> Result<ReductionInstance, ReductionError> {
    let k = match gadget {
        Gadget::H1 { k } | Gadget::H2 { k } => k,
        Gadget::O { .. } => return Err(ReductionError::BadParameter("use reduce_i3 for O targets".into())),
    };
    let h = gadget.target()?;
    let mut b = Builder { arcs: Vec::new(), names: (0..g.n()).map(|v| v.to_string()).collect() };
    let gadget_cycles = g
        .edges()
        .into_iter()
        .map(|(u, v)| GadgetPorts { u, v, cycle: add_edge_gadget(&mut b, k, u, v, &format!("{u}-{v}")) })
        .collect();
    let d = b.finish();
    let mut costs = CostMatrix::zeros(d.n(), h.n());
    for u in 0..g.n() {
        costs.set(u, 0, 1);
        costs.set(u, k, g.n() as i64);
    }
    Ok(ReductionInstance { gadget, g: d, h, costs, originals: (0..g.n()).collect(), gadget_cycles })
}

/// Encodes maximum independent set in a three-coloured `x` as MinHOM to an
/// `O` digraph (`variant` indexes [`o_family`]).
///
/// `U-V` edges become arcs `u -> v`, `V-W` edges arcs `v -> w`, and each
/// `U-W` edge becomes `u -> m <- n -> w` with fresh `m`, `n`. With
/// `N = |V(x)|`, a `U` vertex costs 0 at `2` and 1 at `1`, a `V` vertex 0 at
/// `3` and 1 at `4`, a `W` vertex 0 at `5` and 1 at `6`; `m` and `n` cost
/// `-N` at `3`; every other entry is `N`.
pub fn reduce_i3(x: &UGraph, variant: usize) -> Result<ReductionInstance, ReductionError> {
    let gadget = Gadget::O { variant };
    let h = gadget.target()?;
    let coloring = x.coloring().ok_or(ReductionError::MissingColoring)?;
    let big = x.n() as i64;
    let mut b = Builder { arcs: Vec::new(), names: (0..x.n()).map(|v| v.to_string()).collect() };
    let mut rows: Vec<Vec<i64>> = coloring
        .iter()
        .map(|color| {
            let (free, unit) = match color {
                Color::U => (1, 0),
                Color::V => (2, 3),
                Color::W => (4, 5),
            };
            (0..6).map(|i| if i == free { 0 } else if i == unit { 1 } else { big }).collect()
        })
        .collect();
    for (a, c) in x.edges() {
        let (a, c) = if coloring[a] <= coloring[c] { (a, c) } else { (c, a) };
        match (coloring[a], coloring[c]) {
            (Color::U, Color::V) | (Color::V, Color::W) => b.arcs.push((a, c)),
            (Color::U, Color::W) => {
                let m = b.vertex(format!("{a}-{c}:m"));
                let n = b.vertex(format!("{a}-{c}:n"));
                b.arcs.extend([(a, m), (n, m), (n, c)]);
                for _ in 0..2 {
                    rows.push((0..6).map(|i| if i == 2 { -big } else { big }).collect());
                }
            }
            _ => unreachable!("colour classes are independent"),
        }
    }
    let g = b.finish();
    let costs = CostMatrix::from_rows(rows)?;
    Ok(ReductionInstance { gadget, g, h, costs, originals: (0..x.n()).collect(), gadget_cycles: Vec::new() })
}

/// Turns a MinHOM instance for `B(h)` into one for `h`.
///
/// `costs` has a row per vertex of `gb` (whites, then blacks) and a column
/// per vertex of `B(h)` (white copies, then black copies); a white vertex
/// only ever reads the white columns and a black one the black columns.
/// Edges are oriented white to black.
pub fn lift_bigraph_instance(gb: &BipartiteGraph, h: &Digraph, costs: &CostMatrix) -> Result<(Digraph, CostMatrix), ReductionError> {
    let (w, p) = (gb.whites(), h.n());
    let n = w + gb.blacks();
    if costs.rows().len() != n || costs.rows().iter().any(|r| r.len() != 2 * p) {
        return Err(SolveError::Dimensions(format!("bipartite costs must be {n} x {}", 2 * p)).into());
    }
    let d = Digraph::new(n, gb.edges().into_iter().map(|(a, b)| (a, w + b))).expect("bipartite edges");
    let rows = (0..n).map(|u| {
        let offset = if u < w { 0 } else { p };
        costs.rows()[u][offset..offset + p].to_vec()
    });
    Ok((d, CostMatrix::from_rows(rows.collect())?))
}

/// Exact optimum of side-preserving MinHOM from `gb` to `B(h)`, by
/// exhaustive search over the bipartite structure.
pub fn bipartite_minhom(gb: &BipartiteGraph, h: &Digraph, costs: &CostMatrix) -> Result<Option<i64>, ReductionError> {
    let (w, p) = (gb.whites(), h.n());
    let bh = h.bipartite_replication();
    // B(h) as a digraph oriented white -> black, ids whites then blacks
    let target = Digraph::new(2 * p, bh.edges().into_iter().map(|(a, b)| (a, p + b))).expect("bipartite edges");
    let source = Digraph::new(w + gb.blacks(), gb.edges().into_iter().map(|(a, b)| (a, w + b))).expect("bipartite edges");
    // wrong-side images are priced out of every optimum
    let wall = costs.rows().iter().flatten().map(|c| c.abs()).sum::<i64>() + 1;
    let rows = (0..source.n())
        .map(|u| (0..2 * p).map(|j| if (u < w) == (j < p) { costs.rows()[u][j] } else { wall }).collect())
        .collect();
    let best = brute_force_minhom(&source, &target, &CostMatrix::from_rows(rows)?)?;
    Ok(best.filter(|hom| hom.f.iter().enumerate().all(|(u, &j)| (u < w) == (j < p))).map(|hom| hom.cost))
}

/// Independence number by branch and bound on the highest-degree vertex.
pub fn max_independent_set(g: &UGraph) -> Result<usize, ReductionError> {
    if g.n() > 20 {
        return Err(ReductionError::TooLarge(g.n()));
    }
    let adj: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    fn go(adj: &[u32], live: u32, size: usize, best: &mut usize) {
        if size + live.count_ones() as usize <= *best {
            return;
        }
        if live == 0 {
            *best = size;
            return;
        }
        let v = (0..adj.len()).filter(|&v| live >> v & 1 == 1).max_by_key(|&v| (adj[v] & live).count_ones()).expect("live");
        if adj[v] & live == 0 {
            // isolated among the live vertices: always take it
            go(adj, live & !(1 << v), size + 1, best);
            return;
        }
        go(adj, live & !(1 << v) & !adj[v], size + 1, best);
        go(adj, live & !(1 << v), size, best);
    }
    let mut best = 0;
    go(&adj, if g.n() == 0 { 0 } else { u32::MAX >> (32 - g.n()) }, 0, &mut best);
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub gadget: Gadget,
    pub vertices: usize,
    pub alpha: usize,
    pub expected: i64,
    pub found: Option<i64>,
    /// H1/H2 only: every gadget cycle follows one of the two forced colour sequences.
    pub forced_sequence: Option<bool>,
    /// H1/H2 only: no edge has both ends at target vertex `2`.
    pub never_both_2: Option<bool>,
    pub passed: bool,
}

/// Solves `instance` exactly and checks it against the independence number of `source`.
pub fn verify_reduction(instance: &ReductionInstance, source: &UGraph) -> Result<ReductionReport, ReductionError> {
    let alpha = max_independent_set(source)?;
    let expected = instance.expected_cost(alpha);
    let opts = BruteOptions { canonical: false, branch_first: instance.originals.clone() };
    let hom = brute_force_with(&instance.g, &instance.h, &instance.costs, &opts)?;
    let (forced_sequence, never_both_2) = match (instance.gadget, &hom) {
        (Gadget::H1 { k } | Gadget::H2 { k }, Some(hom)) => {
            let h2 = matches!(instance.gadget, Gadget::H2 { .. });
            let forced = instance.gadget_cycles.iter().all(|gc| follows_forced_sequence(&hom.f, &gc.cycle, k, h2));
            let both = instance.gadget_cycles.iter().all(|gc| !(hom.f[gc.u] == 1 && hom.f[gc.v] == 1));
            (Some(forced), Some(both))
        }
        _ => (None, None),
    };
    let found = hom.map(|h| h.cost);
    let passed = found == Some(expected) && forced_sequence != Some(false) && never_both_2 != Some(false);
    Ok(ReductionReport {
        gadget: instance.gadget,
        vertices: instance.g.n(),
        alpha,
        expected,
        found,
        forced_sequence,
        never_both_2,
        passed,
    })
}

/// Whether the colours (ids `0..=k`) of a gadget cycle read `1, 2, .., k`
/// repeated `k+1` times or `1, 2, .., k+1` repeated `k` times. For `H2`
/// the `k`-cycle `k+1, 2, .., k` may stand in for `1, 2, .., k` after the
/// first lap.
pub fn follows_forced_sequence(f: &[usize], cycle: &[usize], k: usize, h2: bool) -> bool {
    let short = cycle.iter().enumerate().all(|(i, &c)| {
        let want = i % k;
        f[c] == want || (h2 && want == 0 && i > 0 && f[c] == k)
    });
    let long = cycle.iter().enumerate().all(|(i, &c)| f[c] == i % (k + 1));
    short || long
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::is_locally_semicomplete;
    use crate::solver::is_homomorphism;

    #[test]
    fn gadget_shapes() {
        let h1 = gadget_h1(2).unwrap();
        assert_eq!(h1.arcs(), vec![(0, 1), (1, 0), (1, 2), (2, 0)]);
        assert_eq!(gadget_h1(3).unwrap().arc_count(), 5);
        assert_eq!(gadget_h2(3).unwrap().arc_count(), 6);
        assert_eq!(gadget_h2(4).unwrap().arc_count(), 7);
        assert!(gadget_h1(1).is_none() && gadget_h2(2).is_none());
        for k in 2..8 {
            assert!(is_locally_semicomplete(&gadget_h1(k).unwrap()));
        }
        assert!(gadget_h2(4).unwrap().cycle_order().is_none());
    }

    #[test]
    fn edge_gadget_shape() {
        let d = edge_gadget(2).unwrap();
        assert_eq!(d.n(), 2 + 6 + 4);
        let c = |i: usize| (0..d.n()).find(|&v| d.label(v) == format!("uv:c:{i}")).unwrap();
        assert!(d.has_arc(c(6), c(1)));
        assert!(d.has_arc(c(4), (0..d.n()).find(|&v| d.label(v) == "uv:u'").unwrap()));
    }

    #[test]
    fn sizes_follow_the_formula() {
        for k in [2, 3] {
            for g in [UGraph::complete(2), UGraph::cycle(5), UGraph::path(3), UGraph::new(3, []).unwrap()] {
                let inst = reduce_independent_set(&g, Gadget::H1 { k }).unwrap();
                assert_eq!(inst.g.n(), g.n() + g.edge_count() * (k * (k + 1) + 4));
            }
        }
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(max_independent_set(&UGraph::complete(3)).unwrap(), 1);
        assert_eq!(max_independent_set(&UGraph::path(3)).unwrap(), 2);
        assert_eq!(max_independent_set(&UGraph::new(4, []).unwrap()).unwrap(), 4);
        assert_eq!(max_independent_set(&UGraph::cycle(5)).unwrap(), 2);
        assert!(max_independent_set(&UGraph::new(21, []).unwrap()).is_err());
    }

    #[test]
    fn h1_round_trips() {
        for (g, expect) in [(UGraph::complete(2), 1), (UGraph::new(3, []).unwrap(), 0), (UGraph::path(3), 1), (UGraph::cycle(5), 3)] {
            let inst = reduce_independent_set(&g, Gadget::H1 { k: 2 }).unwrap();
            let report = verify_reduction(&inst, &g).unwrap();
            assert_eq!(report.found, Some(expect));
            assert!(report.passed, "{report:?}");
        }
    }

    #[test]
    fn h2_gadget_cycle_can_start_at_2() {
        // x -> y -> c_1 maps onto k+1 -> 1 -> 2, so both ports of K2 reach 2
        let g = UGraph::complete(2);
        let inst = reduce_independent_set(&g, Gadget::H2 { k: 3 }).unwrap();
        let hom = brute_force_minhom(&inst.g, &inst.h, &inst.costs).unwrap().unwrap();
        assert_eq!(hom.cost, 0);
        assert_eq!((hom.f[0], hom.f[1]), (1, 1));
        assert_eq!(hom.f[inst.gadget_cycles[0].cycle[0]], 1);

        // pricing c_1 off every colour but 1 restores |V| - alpha
        let mut pinned = inst.clone();
        for i in 1..=3 {
            pinned.costs.set(inst.gadget_cycles[0].cycle[0], i, 100);
        }
        let hom = brute_force_minhom(&pinned.g, &pinned.h, &pinned.costs).unwrap().unwrap();
        assert_eq!(hom.cost, 1);
    }

    #[test]
    fn o_reduction_examples() {
        use Color::*;
        let uw = UGraph::complete(2).with_coloring(vec![U, W]).unwrap();
        let inst = reduce_i3(&uw, 0).unwrap();
        assert_eq!((inst.g.n(), inst.g.arc_count()), (4, 3));
        let tri = UGraph::complete(3).with_coloring(vec![U, V, W]).unwrap();
        let path = UGraph::path(3).with_coloring(vec![U, V, W]).unwrap();
        for variant in 0..4 {
            assert_eq!(verify_reduction(&reduce_i3(&uw, variant).unwrap(), &uw).unwrap().found, Some(1));
            assert_eq!(verify_reduction(&reduce_i3(&tri, variant).unwrap(), &tri).unwrap().found, Some(2));
            assert_eq!(verify_reduction(&reduce_i3(&path, variant).unwrap(), &path).unwrap().found, Some(1));
        }
        assert_eq!(reduce_i3(&UGraph::complete(2), 0).unwrap_err(), ReductionError::MissingColoring);
    }

    #[test]
    fn lifting_preserves_optima() {
        let cases = [
            (BipartiteGraph::new(1, 1, [(0, 0)]).unwrap(), Digraph::transitive_tournament(2)),
            (BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap(), Digraph::directed_cycle(2)),
            (BipartiteGraph::new(2, 1, []).unwrap(), Digraph::directed_cycle(3)),
        ];
        for (i, (gb, h)) in cases.into_iter().enumerate() {
            let n = gb.whites() + gb.blacks();
            let rows = (0..n).map(|u| (0..2 * h.n()).map(|j| ((u * 7 + j * 3 + i) % 5) as i64 - 2).collect()).collect();
            let costs = CostMatrix::from_rows(rows).unwrap();
            let (d, lifted) = lift_bigraph_instance(&gb, &h, &costs).unwrap();
            let direct = brute_force_minhom(&d, &h, &lifted).unwrap();
            assert!(direct.as_ref().is_none_or(|hom| is_homomorphism(&d, &h, &hom.f)));
            assert_eq!(direct.map(|hom| hom.cost), bipartite_minhom(&gb, &h, &costs).unwrap());
        }
    }
}
