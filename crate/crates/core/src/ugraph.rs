//! Simple undirected graphs with an optional proper three-colouring.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    U,
    V,
    W,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::U, Color::V, Color::W];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    coloring: Option<Vec<Color>>,
}

impl UGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelArc(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(UGraph { n, adj, coloring: None })
    }

    pub fn path(n: usize) -> Self {
        UGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        UGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        UGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid clique")
    }

    /// Attaches a colouring; fails unless every colour class is independent.
    pub fn with_coloring(mut self, coloring: Vec<Color>) -> Result<Self, String> {
        if coloring.len() != self.n {
            return Err(format!("colouring covers {} of {} vertices", coloring.len(), self.n));
        }
        if let Some((a, b)) = self.edges().into_iter().find(|&(a, b)| coloring[a] == coloring[b]) {
            return Err(format!("edge {a}-{b} joins two {:?} vertices", coloring[a]));
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        self.coloring.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}
