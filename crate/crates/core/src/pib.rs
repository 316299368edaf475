//! Proper interval bigraph recognition.
//!
//! Two independent routes are provided: a search for a bipartite Min-Max
//! ordering, and a search for one of the forbidden induced subgraphs (even
//! cycles of length at least six, the biclaw, the binet and the bitent).
//! A bipartite graph is a proper interval bigraph exactly when the first
//! route succeeds, and exactly when the second one fails.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{BiVertex, BipartiteGraph, Digraph, Side};
use crate::iso::find_induced_embedding;

/// Separate linear orders on the white and on the black vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteOrdering {
    pub white_order: Vec<usize>,
    pub black_order: Vec<usize>,
}

impl BipartiteOrdering {
    /// `(white positions, black positions)`, validating both permutations.
    pub fn positions(&self, b: &BipartiteGraph) -> Result<(Vec<usize>, Vec<usize>), OrderingError> {
        Ok((
            positions_of(&self.white_order, b.whites(), Side::White)?,
            positions_of(&self.black_order, b.blacks(), Side::Black)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("{side:?} order has {found} entries, expected {expected}")]
    WrongLength { side: Side, expected: usize, found: usize },
    #[error("{side:?} order repeats or skips vertex {vertex}")]
    NotPermutation { side: Side, vertex: usize },
}

pub(crate) fn positions_of(order: &[usize], n: usize, side: Side) -> Result<Vec<usize>, OrderingError> {
    if order.len() != n {
        return Err(OrderingError::WrongLength { side, expected: n, found: order.len() });
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrderingError::NotPermutation { side, vertex: v });
        }
        pos[v] = i;
    }
    Ok(pos)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ObstructionKind {
    /// Induced cycle on `2 * half_length` vertices, `half_length >= 3`.
    EvenCycle { half_length: usize },
    Biclaw,
    Binet,
    Bitent,
}

/// An induced forbidden subgraph. For the finite kinds, `vertices` follow
/// the pattern order `x1, x2, x3, x4, y1, y2, y3`; for cycles they follow the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigraphObstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<BiVertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PibCertificate {
    Ordering(BipartiteOrdering),
    Obstruction(BigraphObstruction),
}

impl PibCertificate {
    pub fn is_pib(&self) -> bool {
        matches!(self, PibCertificate::Ordering(_))
    }
}

/// Checks the bipartite Min-Max condition: whites `i < j`, blacks `s < r`
/// and edges `ir`, `js` force edges `is` and `jr`.
pub fn is_minmax_bipartite_ordering(b: &BipartiteGraph, o: &BipartiteOrdering) -> Result<bool, OrderingError> {
    let (wpos, bpos) = o.positions(b)?;
    let edges = b.edges();
    for &(i, r) in &edges {
        for &(j, s) in &edges {
            if wpos[i] < wpos[j] && bpos[s] < bpos[r] && !(b.has_edge(i, s) && b.has_edge(j, r)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a bipartite Min-Max ordering.
///
/// Components are ordered independently and concatenated. Within a
/// component the whites are placed one at a time; each placed pair of
/// whites forces precedences between blacks, and the branch dies as soon
/// as those precedences become cyclic.
pub fn find_bipartite_minmax_ordering(b: &BipartiteGraph) -> Option<BipartiteOrdering> {
    let mut white_order = Vec::with_capacity(b.whites());
    let mut black_order = Vec::with_capacity(b.blacks());
    for comp in b.components() {
        let whites: Vec<usize> = comp.iter().filter(|&&v| v < b.whites()).copied().collect();
        let blacks: Vec<usize> = comp.iter().filter(|&&v| v >= b.whites()).map(|&v| v - b.whites()).collect();
        let (w, bl) = order_component(b, &whites, &blacks)?;
        white_order.extend(w);
        black_order.extend(bl);
    }
    let result = BipartiteOrdering { white_order, black_order };
    debug_assert_eq!(is_minmax_bipartite_ordering(b, &result), Ok(true));
    Some(result)
}

struct ComponentSearch<'a> {
    b: &'a BipartiteGraph,
    whites: &'a [usize],
    black_local: Vec<usize>,
}

fn order_component(b: &BipartiteGraph, whites: &[usize], blacks: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    if whites.is_empty() || blacks.is_empty() {
        return Some((whites.to_vec(), blacks.to_vec()));
    }
    let mut black_local = vec![usize::MAX; b.blacks()];
    for (i, &bl) in blacks.iter().enumerate() {
        black_local[bl] = i;
    }
    let search = ComponentSearch { b, whites, black_local };
    let m = blacks.len();
    let reach = vec![vec![false; m]; m];
    let mut placed = Vec::with_capacity(whites.len());
    let mut used = vec![false; whites.len()];
    let reach = search.place(&mut placed, &mut used, reach)?;
    let white_order = placed.iter().map(|&i| whites[i]).collect();
    // smallest-index-first linear extension of the black precedences
    let mut black_order = Vec::with_capacity(m);
    let mut done = vec![false; m];
    while black_order.len() < m {
        let next = (0..m)
            .find(|&s| !done[s] && (0..m).all(|r| r == s || done[r] || !reach[r][s]))
            .expect("precedences are acyclic");
        done[next] = true;
        black_order.push(blacks[next]);
    }
    Some((white_order, black_order))
}

impl ComponentSearch<'_> {
    // Returns the final precedence closure on success.
    fn place(&self, placed: &mut Vec<usize>, used: &mut [bool], reach: Vec<Vec<bool>>) -> Option<Vec<Vec<bool>>> {
        if placed.len() == self.whites.len() {
            return Some(reach);
        }
        for cand in 0..self.whites.len() {
            if used[cand] {
                continue;
            }
            let mut next = reach.clone();
            if !self.add_constraints(placed, cand, &mut next) {
                continue;
            }
            used[cand] = true;
            placed.push(cand);
            if let Some(done) = self.place(placed, used, next) {
                return Some(done);
            }
            placed.pop();
            used[cand] = false;
        }
        None
    }

    // White `j` goes after every placed white `i`: edges `ir`, `js` without
    // both `is` and `jr` force black `r` before black `s`.
    fn add_constraints(&self, placed: &[usize], cand: usize, reach: &mut [Vec<bool>]) -> bool {
        let j = self.whites[cand];
        for &pi in placed {
            let i = self.whites[pi];
            for &r in self.b.white_neighbors(i) {
                for &s in self.b.white_neighbors(j) {
                    if r == s || (self.b.has_edge(i, s) && self.b.has_edge(j, r)) {
                        continue;
                    }
                    if !add_precedence(reach, self.black_local[r], self.black_local[s]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

// Adds `a before c` to a transitively closed relation; false on a cycle.
fn add_precedence(reach: &mut [Vec<bool>], a: usize, c: usize) -> bool {
    if reach[a][c] {
        return true;
    }
    if reach[c][a] {
        return false;
    }
    let m = reach.len();
    let before: Vec<usize> = (0..m).filter(|&x| x == a || reach[x][a]).collect();
    let after: Vec<usize> = (0..m).filter(|&y| y == c || reach[c][y]).collect();
    for &x in &before {
        for &y in &after {
            reach[x][y] = true;
        }
    }
    true
}

/// The biclaw: `x4` joined to `y1, y2, y3`, and `x_i y_i` for `i = 1, 2, 3`.
pub fn biclaw() -> BipartiteGraph {
    BipartiteGraph::new(4, 3, [(0, 0), (3, 0), (1, 1), (3, 1), (2, 2), (3, 2)]).expect("biclaw")
}

/// The binet: the 4-cycle `x3 y1 x4 y2` with pendants `x1` on `y1`, `x2` on `y2` and `y3` on `x4`.
pub fn binet() -> BipartiteGraph {
    BipartiteGraph::new(4, 3, [(0, 0), (2, 0), (2, 1), (3, 1), (3, 0), (1, 1), (3, 2)]).expect("binet")
}

/// The bitent: `y1` joined to every `x`, plus `x1 y2`, `x1 y3`, `x2 y3` and `x4 y2`.
pub fn bitent() -> BipartiteGraph {
    BipartiteGraph::new(4, 3, [(0, 0), (2, 0), (1, 0), (3, 0), (1, 2), (3, 1), (0, 2), (0, 1)]).expect("bitent")
}

pub fn even_cycle(half_length: usize) -> BipartiteGraph {
    let k = half_length;
    BipartiteGraph::new(k, k, (0..k).flat_map(|i| [(i, i), ((i + 1) % k, i)])).expect("even cycle")
}

fn pattern_for(kind: ObstructionKind) -> BipartiteGraph {
    match kind {
        ObstructionKind::EvenCycle { half_length } => even_cycle(half_length),
        ObstructionKind::Biclaw => biclaw(),
        ObstructionKind::Binet => binet(),
        ObstructionKind::Bitent => bitent(),
    }
}

/// Searches for an induced forbidden subgraph: the finite ones first, then
/// the shortest induced cycle of length at least six.
pub fn find_forbidden_bigraph(b: &BipartiteGraph) -> Option<BigraphObstruction> {
    let host = b.to_symmetric_digraph();
    for kind in [ObstructionKind::Biclaw, ObstructionKind::Binet, ObstructionKind::Bitent] {
        let pattern = pattern_for(kind);
        let pdig = pattern.to_symmetric_digraph();
        for flip in [false, true] {
            let found = find_induced_embedding(&pdig, &host, |p, h| {
                let side = pattern.from_flat(p).side;
                let side = if flip { side.flip() } else { side };
                b.from_flat(h).side == side
            });
            if let Some(map) = found {
                return Some(BigraphObstruction { kind, vertices: map.into_iter().map(|h| b.from_flat(h)).collect() });
            }
        }
    }
    let cycle = shortest_long_induced_cycle(&host)?;
    Some(BigraphObstruction {
        kind: ObstructionKind::EvenCycle { half_length: cycle.len() / 2 },
        vertices: cycle.into_iter().map(|h| b.from_flat(h)).collect(),
    })
}

// Shortest chordless cycle with at least six vertices in a symmetric digraph.
fn shortest_long_induced_cycle(g: &Digraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut len = 6;
    while len <= n {
        for start in 0..n {
            let mut path = vec![start];
            if induced_cycle_from(g, len, &mut path) {
                return Some(path);
            }
        }
        len += 2;
    }
    None
}

// Grows a chordless path from `path[0]` through larger vertices only.
fn induced_cycle_from(g: &Digraph, len: usize, path: &mut Vec<usize>) -> bool {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    let depth = path.len();
    for &v in g.out_neighbors(last) {
        if v <= start || path.contains(&v) {
            continue;
        }
        // no chords back into the path, except closing onto the start at the end
        let chord = depth > 1 && path[1..depth - 1].iter().any(|&u| g.has_arc(v, u));
        let closes = g.has_arc(v, start);
        if chord || (depth > 1 && depth + 1 < len && closes) {
            continue;
        }
        path.push(v);
        if depth + 1 == len {
            if closes {
                return true;
            }
        } else if induced_cycle_from(g, len, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Decides proper-interval-bigraph membership with a certificate either way.
pub fn is_proper_interval_bigraph(b: &BipartiteGraph) -> PibCertificate {
    match find_bipartite_minmax_ordering(b) {
        Some(o) => PibCertificate::Ordering(o),
        None => PibCertificate::Obstruction(
            find_forbidden_bigraph(b).expect("a bigraph without a Min-Max ordering has a forbidden subgraph"),
        ),
    }
}

/// Checks that the obstruction's vertices induce exactly its named kind.
pub fn obstruction_is_induced(b: &BipartiteGraph, obs: &BigraphObstruction) -> bool {
    let whites: Vec<usize> = obs.vertices.iter().filter(|v| v.side == Side::White).map(|v| v.index).collect();
    let blacks: Vec<usize> = obs.vertices.iter().filter(|v| v.side == Side::Black).map(|v| v.index).collect();
    if whites.len() + blacks.len() != obs.vertices.len() {
        return false;
    }
    let sub = b.induced(&whites, &blacks).to_symmetric_digraph();
    let pattern = pattern_for(obs.kind).to_symmetric_digraph();
    crate::iso::are_isomorphic(&sub, &pattern)
}
