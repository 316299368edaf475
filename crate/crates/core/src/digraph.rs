//! Loopless digraphs, bipartite graphs and the structural decompositions
//! shared by the rest of the crate.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::GraphError;

/// A loopless digraph on vertices `0..n` with set-semantics arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl Digraph {
    /// Builds a digraph, rejecting loops, repeated arcs and out-of-range endpoints.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelArc(u, w[0]));
            }
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        Ok(Digraph { n, out, inn, names: None })
    }

    /// Arcs are trusted to be loop free and in range; duplicates are merged.
    pub(crate) fn from_arcs_lossy(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            debug_assert!(u != v && u < n && v < n);
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Digraph { n, out, inn, names: None }
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, out: vec![Vec::new(); n], inn: vec![Vec::new(); n], names: None }
    }

    /// The directed cycle `0 -> 1 -> ... -> k-1 -> 0`.
    pub fn directed_cycle(k: usize) -> Self {
        assert!(k >= 2, "directed cycles need at least two vertices");
        Self::from_arcs_lossy(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// The transitive tournament with arcs `i -> j` for every `i < j`.
    pub fn transitive_tournament(p: usize) -> Self {
        Self::from_arcs_lossy(p, (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.n {
            return Err(GraphError::NameCount { expected: self.n, found: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of a vertex: its name when present, otherwise its id.
    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Either `uv` or `vu` is an arc.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// Distinct neighbors in the underlying undirected graph, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
            names: self.names.clone(),
        }
    }

    /// Subdigraph induced by `vertices`, re-indexed in the given order.
    /// Vertex `i` of the result is `vertices[i]` of `self`.
    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Result<Digraph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            index[v] = i;
        }
        let arcs = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.out[v].iter().filter_map(move |&w| (index[w] != usize::MAX).then_some((i, index[w])))
        });
        let mut sub = Digraph::from_arcs_lossy(vertices.len(), arcs);
        if let Some(names) = &self.names {
            sub.names = Some(vertices.iter().map(|&v| names[v].clone()).collect());
        }
        Ok(sub)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.n;
        let arcs = self.arcs().into_iter().chain(other.arcs().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Digraph::from_arcs_lossy(self.n + other.n, arcs)
    }

    /// Returns a witness `(u, v)` with both `uv` and `vu` present, smallest first.
    pub fn symmetric_arc(&self) -> Option<(usize, usize)> {
        self.arcs().into_iter().find(|&(u, v)| u < v && self.has_arc(v, u))
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut result: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = result.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in self.out[v].iter().chain(&self.inn[v]) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            result.push(members);
        }
        result
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.weak_components().len() <= 1
    }

    /// Strong components in a topological order of the condensation.
    pub fn strong_components(&self) -> ComponentOrdering {
        let comps = tarjan(self);
        let ordering = ComponentOrdering { components: comps };
        debug_assert!(ordering.is_topological(self));
        ordering
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// A topological order (smallest available vertex first), or `None` when cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..self.n).filter(|&v| indeg[v] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(std::cmp::Reverse(v)) = ready.pop() {
            order.push(v);
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(std::cmp::Reverse(w));
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// `Some(k)` iff the digraph is a single directed cycle of length `k >= 2`.
    pub fn directed_cycle_length(&self) -> Option<usize> {
        if self.n < 2 {
            return None;
        }
        let regular = (0..self.n).all(|v| self.out[v].len() == 1 && self.inn[v].len() == 1);
        (regular && self.is_weakly_connected()).then_some(self.n)
    }

    /// The vertices of a directed cycle listed along the cycle starting at 0.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        self.directed_cycle_length()?;
        let mut order = vec![0];
        let mut v = self.out[0][0];
        while v != 0 {
            order.push(v);
            v = self.out[v][0];
        }
        Some(order)
    }

    /// Decomposes the digraph as an extension of a directed cycle `C_k`, `k >= 2`.
    ///
    /// Vertices with identical in- and out-neighborhoods are collapsed; the
    /// quotient must be a directed cycle. Parts are listed along the cycle,
    /// starting with the part holding vertex 0.
    pub fn cycle_extension(&self) -> Option<CycleExtension> {
        if self.n < 2 {
            return None;
        }
        let mut class_of = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if class_of[v] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![v];
            class_of[v] = id;
            for w in v + 1..self.n {
                if class_of[w] == usize::MAX && self.out[w] == self.out[v] && self.inn[w] == self.inn[v] {
                    class_of[w] = id;
                    part.push(w);
                }
            }
            parts.push(part);
        }
        let k = parts.len();
        if k < 2 {
            return None;
        }
        let quotient = Digraph::from_arcs_lossy(k, self.arcs().into_iter().map(|(u, v)| (class_of[u], class_of[v])));
        let cycle = quotient.cycle_order()?;
        // every arc between consecutive parts must be present
        let complete = cycle.iter().enumerate().all(|(i, &p)| {
            let q = cycle[(i + 1) % k];
            parts[p].iter().all(|&u| parts[q].iter().all(|&w| self.has_arc(u, w)))
        });
        if !complete || quotient.arc_count() != k {
            return None;
        }
        Some(CycleExtension { parts: cycle.into_iter().map(|p| parts[p].clone()).collect() })
    }

    /// Parts `(S1, S2, S3)` when the digraph is an extension of `C_3`.
    pub fn c3_extension(&self) -> Option<CycleExtension> {
        self.cycle_extension().filter(|ext| ext.parts.len() == 3)
    }

    /// True only for the 2-cycle itself.
    pub fn is_c2(&self) -> bool {
        self.n == 2 && self.arc_count() == 2
    }

    /// Bipartite replication: white `v'` and black `v''` per vertex, edge `v'w''` per arc `vw`.
    pub fn bipartite_replication(&self) -> BipartiteGraph {
        BipartiteGraph::new(self.n, self.n, self.arcs()).expect("arcs are in range")
    }
}

/// An extension of a directed cycle: parts listed so that part `i` dominates part `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleExtension {
    pub parts: Vec<Vec<usize>>,
}

impl CycleExtension {
    pub fn cycle_length(&self) -> usize {
        self.parts.len()
    }

    /// Rebuilds the arc set implied by the parts.
    pub fn to_digraph(&self, n: usize) -> Digraph {
        let k = self.parts.len();
        let arcs = (0..k).flat_map(|i| {
            let next = &self.parts[(i + 1) % k];
            self.parts[i].iter().flat_map(move |&u| next.iter().map(move |&w| (u, w)))
        });
        Digraph::from_arcs_lossy(n, arcs)
    }

    /// Part index of each vertex.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                idx[v] = i;
            }
        }
        idx
    }
}

/// Strong components listed so that no arc goes from a later set to an earlier one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentOrdering {
    pub components: Vec<Vec<usize>>,
}

impl ComponentOrdering {
    pub fn is_topological(&self, d: &Digraph) -> bool {
        let mut position = vec![usize::MAX; d.n()];
        for (i, comp) in self.components.iter().enumerate() {
            for &v in comp {
                if position[v] != usize::MAX {
                    return false;
                }
                position[v] = i;
            }
        }
        position.iter().all(|&p| p != usize::MAX) && d.arcs().iter().all(|&(u, v)| position[u] <= position[v])
    }
}

// Iterative Tarjan. Components come out in reverse topological order.
fn tarjan(d: &Digraph) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = d.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(&w) = d.out_neighbors(v).get(*next) {
                *next += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps.reverse();
    comps
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    White,
    Black,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::White => Side::Black,
            Side::Black => Side::White,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BiVertex {
    pub side: Side,
    pub index: usize,
}

impl BiVertex {
    pub fn white(index: usize) -> Self {
        BiVertex { side: Side::White, index }
    }

    pub fn black(index: usize) -> Self {
        BiVertex { side: Side::Black, index }
    }
}

/// Undirected bipartite graph with a fixed white/black bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    whites: usize,
    blacks: usize,
    white_adj: Vec<Vec<usize>>,
    black_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(whites: usize, blacks: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut white_adj = vec![Vec::new(); whites];
        let mut black_adj = vec![Vec::new(); blacks];
        for (w, b) in edges {
            if w >= whites {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: whites });
            }
            if b >= blacks {
                return Err(GraphError::VertexOutOfRange { vertex: b, n: blacks });
            }
            white_adj[w].push(b);
            black_adj[b].push(w);
        }
        for (w, list) in white_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(GraphError::ParallelArc(w, pair[0]));
            }
        }
        for list in black_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(BipartiteGraph { whites, blacks, white_adj, black_adj })
    }

    pub fn whites(&self) -> usize {
        self.whites
    }

    pub fn blacks(&self) -> usize {
        self.blacks
    }

    pub fn edge_count(&self) -> usize {
        self.white_adj.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, white: usize, black: usize) -> bool {
        self.white_adj[white].binary_search(&black).is_ok()
    }

    pub fn white_neighbors(&self, white: usize) -> &[usize] {
        &self.white_adj[white]
    }

    pub fn black_neighbors(&self, black: usize) -> &[usize] {
        &self.black_adj[black]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.white_adj
            .iter()
            .enumerate()
            .flat_map(|(w, list)| list.iter().map(move |&b| (w, b)))
            .collect()
    }

    /// Swaps the roles of the two colour classes.
    pub fn flipped(&self) -> BipartiteGraph {
        BipartiteGraph {
            whites: self.blacks,
            blacks: self.whites,
            white_adj: self.black_adj.clone(),
            black_adj: self.white_adj.clone(),
        }
    }

    /// Flat vertex numbering: whites `0..whites`, blacks after them.
    pub fn flat_index(&self, v: BiVertex) -> usize {
        match v.side {
            Side::White => v.index,
            Side::Black => self.whites + v.index,
        }
    }

    pub fn from_flat(&self, i: usize) -> BiVertex {
        if i < self.whites {
            BiVertex::white(i)
        } else {
            BiVertex::black(i - self.whites)
        }
    }

    /// The underlying graph as a symmetric digraph on the flat numbering.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        let shift = self.whites;
        let arcs = self.edges().into_iter().flat_map(|(w, b)| [(w, b + shift), (b + shift, w)]);
        Digraph::from_arcs_lossy(self.whites + self.blacks, arcs)
    }

    /// Connected components as lists of flat indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.to_symmetric_digraph().weak_components()
    }

    /// Subgraph induced by the given white and black index lists, re-indexed in order.
    pub fn induced(&self, whites: &[usize], blacks: &[usize]) -> BipartiteGraph {
        let mut black_pos = vec![usize::MAX; self.blacks];
        for (i, &b) in blacks.iter().enumerate() {
            black_pos[b] = i;
        }
        let edges: Vec<(usize, usize)> = whites
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| {
                let black_pos = &black_pos;
                self.white_adj[w].iter().filter_map(move |&b| (black_pos[b] != usize::MAX).then_some((i, black_pos[b])))
            })
            .collect();
        BipartiteGraph::new(whites.len(), blacks.len(), edges).expect("induced edges are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt3() -> Digraph {
        Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_arcs() {
        assert_eq!(Digraph::new(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Digraph::new(2, [(0, 1), (0, 1)]), Err(GraphError::ParallelArc(0, 1)));
        assert!(matches!(Digraph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn strong_components_examples() {
        assert_eq!(Digraph::directed_cycle(3).strong_components().components, vec![vec![0, 1, 2]]);
        assert_eq!(tt3().strong_components().components, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Digraph::directed_cycle(2).strong_components().components, vec![vec![0, 1]]);
        // C3 feeding into a vertex that feeds a 2-cycle
        let d = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 4)]).unwrap();
        let sc = d.strong_components();
        assert_eq!(sc.components, vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(sc.is_topological(&d));
    }

    #[test]
    fn weak_components_examples() {
        let c2_plus = Digraph::new(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(c2_plus.weak_components().len(), 2);
        assert_eq!(tt3().weak_components().len(), 1);
        let c3_c2 = Digraph::directed_cycle(3).disjoint_union(&Digraph::directed_cycle(2));
        let sizes: Vec<usize> = c3_c2.weak_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn bipartite_replication_examples() {
        let single = Digraph::new(2, [(0, 1)]).unwrap().bipartite_replication();
        assert_eq!(single.edges(), vec![(0, 1)]);
        assert!(single.white_neighbors(1).is_empty() && single.black_neighbors(0).is_empty());
        assert_eq!(Digraph::directed_cycle(2).bipartite_replication().edges(), vec![(0, 1), (1, 0)]);
        assert_eq!(tt3().bipartite_replication().edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn converse_examples() {
        assert_eq!(Digraph::new(2, [(0, 1)]).unwrap().converse().arcs(), vec![(1, 0)]);
        assert_eq!(Digraph::directed_cycle(3).converse().directed_cycle_length(), Some(3));
        assert_eq!(tt3().converse().arcs(), vec![(1, 0), (2, 0), (2, 1)]);
    }

    #[test]
    fn induced_subdigraph_examples() {
        let sub = tt3().induced_subdigraph(&[0, 2]).unwrap();
        assert_eq!(sub.arcs(), vec![(0, 1)]);
        assert_eq!(tt3().induced_subdigraph(&[0, 1, 2]).unwrap(), tt3());
        assert_eq!(tt3().induced_subdigraph(&[]).unwrap().n(), 0);
        assert!(tt3().induced_subdigraph(&[3]).is_err());
    }

    #[test]
    fn acyclic_and_cycle_examples() {
        let tt4 = Digraph::transitive_tournament(4);
        assert!(tt4.is_acyclic());
        assert_eq!(tt4.directed_cycle_length(), None);
        let c2 = Digraph::directed_cycle(2);
        assert!(!c2.is_acyclic());
        assert_eq!(c2.directed_cycle_length(), Some(2));
        let pendant = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (3, 0)]).unwrap();
        assert_eq!(pendant.directed_cycle_length(), None);
        // two disjoint cycles are not one cycle
        let two = Digraph::directed_cycle(2).disjoint_union(&Digraph::directed_cycle(2));
        assert_eq!(two.directed_cycle_length(), None);
    }

    #[test]
    fn extension_examples() {
        let c3 = Digraph::directed_cycle(3);
        assert_eq!(c3.c3_extension().unwrap().parts, vec![vec![0], vec![1], vec![2]]);
        let ext = Digraph::new(4, [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        assert_eq!(ext.c3_extension().unwrap().parts, vec![vec![0, 1], vec![2], vec![3]]);
        assert!(tt3().c3_extension().is_none());
        // missing one arc between consecutive parts
        let broken = Digraph::new(4, [(0, 2), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(broken.c3_extension().is_none());
        assert!(Digraph::directed_cycle(2).is_c2());
        assert!(!Digraph::directed_cycle(3).is_c2());
    }

    #[test]
    fn extension_reconstructs_arcs() {
        let ext = Digraph::new(5, [(0, 2), (1, 2), (2, 3), (2, 4), (3, 0), (3, 1), (4, 0), (4, 1)]).unwrap();
        let parts = ext.c3_extension().unwrap();
        assert_eq!(parts.to_digraph(5).arcs(), ext.arcs());
    }
}
