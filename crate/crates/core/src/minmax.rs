//! Min-Max orderings of target digraphs.
//!
//! Acyclic locally semicomplete digraphs are ordered along their unique
//! Hamiltonian path. Transitive oriented graphs start from a bipartite
//! Min-Max ordering of their bipartite replication and exchange white or
//! black copies until every vertex pair is ordered the same way on both
//! sides; when neither exchange is possible one of the `O` digraphs is
//! extracted instead.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{BipartiteGraph, Digraph, Side};
use crate::error::PreconditionError;
use crate::iso::find_induced_embedding;
use crate::pib::{find_bipartite_minmax_ordering, find_forbidden_bigraph, is_minmax_bipartite_ordering, BigraphObstruction, BipartiteOrdering};
use crate::recognize::{is_locally_semicomplete, is_transitive_oriented};

/// A linear order on the vertices; `order[k]` is the vertex in position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MinMaxOrdering {
    pub order: Vec<usize>,
}

impl MinMaxOrdering {
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn is_permutation_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        self.order.len() == n && self.order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
    }
}

/// Arcs `ir`, `js` with `i < j` and `s < r` must come with `is` and `jr`.
pub fn verify_minmax(h: &Digraph, o: &MinMaxOrdering) -> bool {
    if !o.is_permutation_of(h.n()) {
        return false;
    }
    let pos = o.positions();
    let arcs = h.arcs();
    arcs.iter().all(|&(i, r)| {
        arcs.iter().all(|&(j, s)| {
            !(pos[i] < pos[j] && pos[s] < pos[r]) || (h.has_arc(i, s) && h.has_arc(j, r))
        })
    })
}

/// The Min-Max ordering of a connected acyclic locally semicomplete digraph:
/// its strong components (single vertices) in their unique order.
pub fn order_acyclic_locally_semicomplete(h: &Digraph) -> Result<MinMaxOrdering, PreconditionError> {
    if !h.is_weakly_connected() {
        return Err(PreconditionError::NotConnected);
    }
    if !h.is_acyclic() {
        return Err(PreconditionError::WrongClass("acyclic"));
    }
    if !is_locally_semicomplete(h) {
        return Err(PreconditionError::WrongClass("locally semicomplete"));
    }
    let order: Vec<usize> = h.strong_components().components.into_iter().map(|c| c[0]).collect();
    // consecutive vertices are joined, which makes the order unique
    if let Some(w) = order.windows(2).find(|w| !h.has_arc(w[0], w[1])) {
        return Err(PreconditionError::Other(format!("no arc {} -> {} between consecutive components", w[0], w[1])));
    }
    Ok(MinMaxOrdering { order })
}

/// The four `O` digraphs on vertices `0..6` (labels `1..6`): the ten base
/// arcs plus each subset of `{12, 56}`, in the order `{}`, `{12}`, `{56}`, `{12, 56}`.
pub fn o_family() -> [Digraph; 4] {
    const BASE: [(usize, usize); 10] = [(1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 6)];
    let variant = |extra: &[(usize, usize)]| {
        let arcs = BASE.iter().chain(extra).map(|&(u, v)| (u - 1, v - 1));
        let names = (1..=6).map(|i| i.to_string()).collect();
        Digraph::new(6, arcs).expect("O arcs").with_names(names).expect("six names")
    };
    [variant(&[]), variant(&[(1, 2)]), variant(&[(5, 6)]), variant(&[(1, 2), (5, 6)])]
}

/// An induced copy of `O_{variant+1}`: `vertices[p]` plays pattern vertex `p + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OEmbedding {
    pub variant: usize,
    pub vertices: Vec<usize>,
}

pub fn find_induced_o(h: &Digraph) -> Option<OEmbedding> {
    o_family().iter().enumerate().find_map(|(variant, o)| {
        find_induced_embedding(o, h, |_, _| true).map(|vertices| OEmbedding { variant, vertices })
    })
}

/// Identifies which `O` variant a six-vertex digraph is isomorphic to.
pub fn match_o(h: &Digraph) -> Option<OEmbedding> {
    if h.n() != 6 {
        return None;
    }
    find_induced_o(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error("pair ({x}, {y}) admits no exchange and no O obstruction was found")]
    Stuck { x: usize, y: usize },
    #[error("exchanging the copies of {x} and {y} broke the bipartite Min-Max property")]
    LostMinMax { x: usize, y: usize },
    #[error("final ordering fails the Min-Max check")]
    Unsound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeOutcome {
    Ordering(MinMaxOrdering),
    ObstructionO(OEmbedding),
    NotPib(BigraphObstruction),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// The two copies trade places.
    Swap,
    /// The copy of `x` is taken out and reinserted at position `y`.
    Move,
}

/// One exchange of the white (or black) copies of `x` and `y`.
///
/// Exchanging copies that are not adjacent can break the Min-Max property
/// even when the pairwise exchange condition holds, since the copies in
/// between change their order relative to `x` and `y`. Such exchanges, and
/// the fallback moves, are therefore checked against the full condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeStep {
    pub side: Side,
    pub kind: MoveKind,
    pub x: usize,
    pub y: usize,
    pub proper_before: usize,
    pub proper_after: usize,
    pub minmax_after: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeRun {
    pub outcome: ExchangeOutcome,
    /// Bipartite ordering the exchanges started from (absent when `B(T)` has none).
    pub start: Option<BipartiteOrdering>,
    pub steps: Vec<ExchangeStep>,
}

/// Bipartite ordering of `B(T)` plus the proper-pair count.
///
/// Only vertices with both an in- and an out-neighbour are counted: a
/// vertex with an isolated copy can be slotted anywhere on that side, so
/// its pairs never obstruct a common order (see [`consistent_order`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperPairState {
    pub ordering: BipartiteOrdering,
    pub proper_count: usize,
}

impl ProperPairState {
    pub fn new(t: &Digraph, ordering: BipartiteOrdering) -> Self {
        let proper_count = count_proper(&ordering, &two_sided(t));
        ProperPairState { ordering, proper_count }
    }
}

fn two_sided(t: &Digraph) -> Vec<bool> {
    (0..t.n()).map(|v| !t.out_neighbors(v).is_empty() && !t.in_neighbors(v).is_empty()).collect()
}

fn count_proper(o: &BipartiteOrdering, counted: &[bool]) -> usize {
    let n = o.white_order.len();
    let (wpos, bpos) = (inverse(&o.white_order), inverse(&o.black_order));
    (0..n)
        .filter(|&x| counted[x])
        .map(|x| (x + 1..n).filter(|&y| counted[y] && (wpos[x] < wpos[y]) == (bpos[x] < bpos[y])).count())
        .sum()
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Turns a bipartite Min-Max ordering of `B(T)` into a Min-Max ordering
/// of the transitive oriented graph `T`, or explains why there is none.
pub fn proper_exchange_procedure(t: &Digraph) -> Result<ExchangeRun, ExchangeError> {
    if !is_transitive_oriented(t) {
        return Err(PreconditionError::WrongClass("transitive oriented").into());
    }
    let b = t.bipartite_replication();
    let Some(start) = find_bipartite_minmax_ordering(&b) else {
        let obs = find_forbidden_bigraph(&b).expect("no bipartite Min-Max ordering implies an obstruction");
        return Ok(ExchangeRun { outcome: ExchangeOutcome::NotPib(obs), start: None, steps: Vec::new() });
    };
    run_exchanges(t, &b, start)
}

/// The exchange loop from a given bipartite Min-Max ordering of `B(T)`.
pub fn run_exchanges(t: &Digraph, b: &BipartiteGraph, start: BipartiteOrdering) -> Result<ExchangeRun, ExchangeError> {
    let n = t.n();
    let counted = two_sided(t);
    let first = start.clone();
    let mut state = ProperPairState::new(t, start);
    let mut steps = Vec::new();
    loop {
        let wpos = inverse(&state.ordering.white_order);
        let bpos = inverse(&state.ordering.black_order);
        let improper: Vec<(usize, usize)> = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| (state.ordering.white_order[p], state.ordering.white_order[q]))
            .filter(|&(x, y)| counted[x] && counted[y] && bpos[y] < bpos[x])
            .collect();
        if improper.is_empty() {
            let ordering = consistent_order(t, &state.ordering).ok_or(ExchangeError::Unsound)?;
            if !verify_minmax(t, &ordering) {
                return Err(ExchangeError::Unsound);
            }
            return Ok(ExchangeRun { outcome: ExchangeOutcome::Ordering(ordering), start: Some(first), steps });
        }
        let Some((side, kind, x, y, next)) = next_move(t, b, &state, &improper, &counted, &wpos, &bpos) else {
            let found = improper.iter().find_map(|&(x, y)| extract_o(t, &wpos, &bpos, x, y)).or_else(|| find_induced_o(t));
            let (x, y) = improper[0];
            return match found {
                Some(emb) => Ok(ExchangeRun { outcome: ExchangeOutcome::ObstructionO(emb), start: Some(first), steps }),
                None => Err(ExchangeError::Stuck { x, y }),
            };
        };
        let before = state.proper_count;
        let minmax_after = is_minmax_bipartite_ordering(b, &next) == Ok(true);
        state = ProperPairState::new(t, next);
        steps.push(ExchangeStep { side, kind, x, y, proper_before: before, proper_after: state.proper_count, minmax_after });
        if !minmax_after {
            return Err(ExchangeError::LostMinMax { x, y });
        }
        if state.proper_count <= before || steps.len() > n * n.saturating_sub(1) / 2 {
            // the measure must strictly increase; bail out rather than loop
            return Err(ExchangeError::Stuck { x, y });
        }
    }
}

/// A single order of `V(T)` that agrees with the white order on vertices
/// with out-neighbours and with the black order on vertices with
/// in-neighbours, if there is one (smallest available vertex first).
///
/// The Min-Max condition for `T` under such an order is exactly the
/// bipartite condition for the given ordering, because isolated copies
/// take part in no edge.
pub fn consistent_order(t: &Digraph, o: &BipartiteOrdering) -> Option<MinMaxOrdering> {
    let n = t.n();
    let whites: Vec<usize> = o.white_order.iter().copied().filter(|&v| !t.out_neighbors(v).is_empty()).collect();
    let blacks: Vec<usize> = o.black_order.iter().copied().filter(|&v| !t.in_neighbors(v).is_empty()).collect();
    let arcs = whites.windows(2).chain(blacks.windows(2)).map(|w| (w[0], w[1]));
    let constraints = Digraph::from_arcs_lossy(n, arcs);
    constraints.topological_order().map(|order| MinMaxOrdering { order })
}

type Move = (Side, MoveKind, usize, usize, BipartiteOrdering);

// Candidate moves, first acceptable one wins:
// 1. swaps of improper pairs whose copies are adjacent, ignoring isolated
//    copies, and pass the pairwise exchange condition (for such copies the
//    condition is exactly Min-Max preservation);
// 2. swaps of any improper pair passing the pairwise condition;
// 3. one copy reinserted elsewhere.
// Pairs are scanned in lexicographic order of white positions, white before
// black. Moves from 2 and 3 must keep the ordering Min-Max and raise the
// proper-pair count.
fn next_move(
    t: &Digraph,
    b: &BipartiteGraph,
    state: &ProperPairState,
    improper: &[(usize, usize)],
    counted: &[bool],
    wpos: &[usize],
    bpos: &[usize],
) -> Option<Move> {
    let current = &state.ordering;
    let swapped = |side: Side, x: usize, y: usize| {
        let mut next = current.clone();
        match side {
            Side::White => next.white_order.swap(wpos[x], wpos[y]),
            Side::Black => next.black_order.swap(bpos[x], bpos[y]),
        }
        next
    };
    let white_gap_free = |x: usize, y: usize| {
        current.white_order[wpos[x] + 1..wpos[y]].iter().all(|&w| t.out_neighbors(w).is_empty())
    };
    let black_gap_free = |x: usize, y: usize| {
        current.black_order[bpos[y] + 1..bpos[x]].iter().all(|&w| t.in_neighbors(w).is_empty())
    };
    for &(x, y) in improper {
        if white_gap_free(x, y) && white_exchange_allowed(t, bpos, x, y) {
            return Some((Side::White, MoveKind::Swap, x, y, swapped(Side::White, x, y)));
        }
        if black_gap_free(x, y) && black_exchange_allowed(t, wpos, x, y) {
            return Some((Side::Black, MoveKind::Swap, x, y, swapped(Side::Black, x, y)));
        }
    }
    let improves = |next: &BipartiteOrdering| {
        count_proper(next, counted) > state.proper_count && is_minmax_bipartite_ordering(b, next) == Ok(true)
    };
    for &(x, y) in improper {
        if white_exchange_allowed(t, bpos, x, y) {
            let next = swapped(Side::White, x, y);
            if improves(&next) {
                return Some((Side::White, MoveKind::Swap, x, y, next));
            }
        }
        if black_exchange_allowed(t, wpos, x, y) {
            let next = swapped(Side::Black, x, y);
            if improves(&next) {
                return Some((Side::Black, MoveKind::Swap, x, y, next));
            }
        }
    }
    let n = current.white_order.len();
    for side in [Side::White, Side::Black] {
        for v in (0..n).filter(|&v| counted[v]) {
            for to in 0..n {
                let next = match side {
                    Side::White => BipartiteOrdering {
                        white_order: moved(&current.white_order, v, to),
                        black_order: current.black_order.clone(),
                    },
                    Side::Black => BipartiteOrdering {
                        white_order: current.white_order.clone(),
                        black_order: moved(&current.black_order, v, to),
                    },
                };
                if improves(&next) {
                    return Some((side, MoveKind::Move, v, to, next));
                }
            }
        }
    }
    None
}

// `order` with vertex `v` taken out and reinserted at position `to`.
fn moved(order: &[usize], v: usize, to: usize) -> Vec<usize> {
    let mut next: Vec<usize> = order.iter().copied().filter(|&u| u != v).collect();
    next.insert(to, v);
    next
}

// x' and y' may swap when every d'' < c'' with x'd'', y'c'' also has x'c'', y'd''.
fn white_exchange_allowed(t: &Digraph, bpos: &[usize], x: usize, y: usize) -> bool {
    t.out_neighbors(x).iter().all(|&d| {
        t.out_neighbors(y)
            .iter()
            .all(|&c| !(bpos[d] < bpos[c]) || (t.has_arc(x, c) && t.has_arc(y, d)))
    })
}

// x'' and y'' may swap when every b' < a' with a'x'', b'y'' also has a'y'', b'x''.
fn black_exchange_allowed(t: &Digraph, wpos: &[usize], x: usize, y: usize) -> bool {
    t.in_neighbors(x).iter().all(|&a| {
        t.in_neighbors(y)
            .iter()
            .all(|&bv| !(wpos[bv] < wpos[a]) || (t.has_arc(a, y) && t.has_arc(bv, x)))
    })
}

// Blocking witnesses a, b (for the black swap) and c, d (for the white
// swap); the six vertices a, b, x, y, c, d induce one of the O digraphs.
fn extract_o(t: &Digraph, wpos: &[usize], bpos: &[usize], x: usize, y: usize) -> Option<OEmbedding> {
    let cds: Vec<(usize, usize)> = t
        .out_neighbors(x)
        .iter()
        .flat_map(|&d| t.out_neighbors(y).iter().map(move |&c| (c, d)))
        .filter(|&(c, d)| bpos[d] < bpos[c] && !(t.has_arc(x, c) && t.has_arc(y, d)))
        .collect();
    let abs: Vec<(usize, usize)> = t
        .in_neighbors(x)
        .iter()
        .flat_map(|&a| t.in_neighbors(y).iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| wpos[b] < wpos[a] && !(t.has_arc(a, y) && t.has_arc(b, x)))
        .collect();
    for &(a, bv) in &abs {
        for &(c, d) in &cds {
            let six = [a, bv, x, y, c, d];
            let distinct = (0..6).all(|i| (i + 1..6).all(|j| six[i] != six[j]));
            if !distinct {
                continue;
            }
            let sub = t.induced_subdigraph(&six).expect("vertices in range");
            if let Some(m) = match_o(&sub) {
                return Some(OEmbedding { variant: m.variant, vertices: m.vertices.iter().map(|&p| six[p]).collect() });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn verify_minmax_examples() {
        let tt3 = Digraph::transitive_tournament(3);
        assert!(verify_minmax(&tt3, &MinMaxOrdering { order: vec![0, 1, 2] }));
        assert!(!verify_minmax(&Digraph::directed_cycle(3), &MinMaxOrdering { order: vec![0, 1, 2] }));
        assert!(verify_minmax(&Digraph::empty(1), &MinMaxOrdering { order: vec![0] }));
        assert!(!verify_minmax(&tt3, &MinMaxOrdering { order: vec![0, 1] }));
    }

    #[test]
    fn acyclic_locally_semicomplete_examples() {
        let tt4 = Digraph::transitive_tournament(4);
        assert_eq!(order_acyclic_locally_semicomplete(&tt4).unwrap().order, vec![0, 1, 2, 3]);
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(order_acyclic_locally_semicomplete(&path).unwrap().order, vec![0, 1, 2]);
        // TT4 without its longest arc is still locally semicomplete
        let tt4_minus = Digraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_locally_semicomplete(&tt4_minus));
        let o = order_acyclic_locally_semicomplete(&tt4_minus).unwrap();
        assert_eq!(o.order, vec![0, 1, 2, 3]);
        assert!(verify_minmax(&tt4_minus, &o));
        let out_star = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(order_acyclic_locally_semicomplete(&out_star).is_err());
        assert!(order_acyclic_locally_semicomplete(&Digraph::directed_cycle(3)).is_err());
    }

    #[test]
    fn o_family_shape() {
        let family = o_family();
        let sizes: Vec<usize> = family.iter().map(Digraph::arc_count).collect();
        assert_eq!(sizes, vec![10, 11, 11, 12]);
        for o in &family {
            assert!(is_transitive_oriented(o));
            assert!(!o.adjacent(2, 3), "3 and 4 are nonadjacent");
        }
        // the four variants are pairwise non-isomorphic
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(!are_isomorphic(&family[i], &family[j]));
            }
        }
    }

    #[test]
    fn induced_o_examples() {
        let o1 = &o_family()[0];
        assert_eq!(find_induced_o(o1).unwrap().variant, 0);
        assert!(find_induced_o(&Digraph::transitive_tournament(6)).is_none());
        let padded = o1.disjoint_union(&Digraph::empty(1));
        assert!(find_induced_o(&padded).is_some());
    }

    #[test]
    fn exchange_examples() {
        let run = proper_exchange_procedure(&Digraph::transitive_tournament(3)).unwrap();
        assert_eq!(run.outcome, ExchangeOutcome::Ordering(MinMaxOrdering { order: vec![0, 1, 2] }));
        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        match proper_exchange_procedure(&arc).unwrap().outcome {
            ExchangeOutcome::Ordering(o) => assert_eq!(o.order.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        for (i, o) in o_family().iter().enumerate() {
            match proper_exchange_procedure(o).unwrap().outcome {
                ExchangeOutcome::ObstructionO(emb) => {
                    let sub = o.induced_subdigraph(&emb.vertices).unwrap();
                    assert!(are_isomorphic(&sub, &o_family()[emb.variant]), "variant {i}");
                }
                other => panic!("O{} gave {other:?}", i + 1),
            }
        }
        assert!(proper_exchange_procedure(&Digraph::directed_cycle(3)).is_err());
    }
}
