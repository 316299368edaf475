//! Maximum flow / minimum cut with Dinic's algorithm.

use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capacity {
    Finite(u64),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutValue {
    Finite(u64),
    /// Every cut crosses an infinite arc.
    Infinite,
}

#[derive(Clone, Debug)]
struct Edge {
    to: usize,
    cap: u64,
    infinite: bool,
}

/// A capacitated digraph with a distinguished source and sink.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    source: usize,
    sink: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork { source, sink, edges: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    pub fn nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: Capacity) {
        let (cap, infinite) = match cap {
            Capacity::Finite(c) => (c, false),
            Capacity::Infinite => (0, true),
        };
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap, infinite });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0, infinite: false });
    }

    fn finite_total(&self) -> u64 {
        self.edges.iter().step_by(2).filter(|e| !e.infinite).map(|e| e.cap).sum()
    }
}

/// Minimum cut value and the source side of the minimal minimum cut
/// (vertices reachable from the source in the final residual network).
///
/// Infinite arcs are given capacity one more than the sum of all finite
/// capacities, so a cut of at least that value must cross one.
pub fn min_cut(net: &FlowNetwork) -> (CutValue, Vec<bool>) {
    let big = net.finite_total().saturating_add(1);
    let n = net.nodes();
    let mut residual: Vec<u64> = net.edges.iter().map(|e| if e.infinite { big } else { e.cap }).collect();
    let (s, t) = (net.source, net.sink);
    let mut flow: u64 = 0;
    loop {
        let level = bfs_levels(net, &residual, s);
        if level[t] == usize::MAX {
            break;
        }
        let mut next = vec![0usize; n];
        loop {
            let pushed = dfs_push(net, &mut residual, &level, &mut next, s, t, u64::MAX);
            if pushed == 0 {
                break;
            }
            flow = flow.saturating_add(pushed);
            if flow >= big {
                break;
            }
        }
        if flow >= big {
            break;
        }
    }
    let level = bfs_levels(net, &residual, s);
    let side: Vec<bool> = level.iter().map(|&l| l != usize::MAX).collect();
    let value = if flow >= big { CutValue::Infinite } else { CutValue::Finite(flow) };
    (value, side)
}

fn bfs_levels(net: &FlowNetwork, residual: &[u64], s: usize) -> Vec<usize> {
    let mut level = vec![usize::MAX; net.nodes()];
    level[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &e in &net.adj[v] {
            let w = net.edges[e].to;
            if residual[e] > 0 && level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    level
}

// Iterative blocking-flow step along the level graph; returns the amount pushed.
fn dfs_push(
    net: &FlowNetwork,
    residual: &mut [u64],
    level: &[usize],
    next: &mut [usize],
    s: usize,
    t: usize,
    limit: u64,
) -> u64 {
    let mut path: Vec<usize> = Vec::new();
    let mut v = s;
    loop {
        if v == t {
            let amount = path.iter().map(|&e| residual[e]).min().unwrap_or(limit).min(limit);
            for &e in &path {
                residual[e] -= amount;
                residual[e ^ 1] += amount;
            }
            return amount;
        }
        let mut advanced = false;
        while next[v] < net.adj[v].len() {
            let e = net.adj[v][next[v]];
            let w = net.edges[e].to;
            if residual[e] > 0 && level[w] == level[v] + 1 {
                path.push(e);
                v = w;
                advanced = true;
                break;
            }
            next[v] += 1;
        }
        if !advanced {
            // dead end: retreat and skip the edge that led here
            let Some(e) = path.pop() else { return 0 };
            v = net.edges[e ^ 1].to;
            next[v] += 1;
        }
    }
}
