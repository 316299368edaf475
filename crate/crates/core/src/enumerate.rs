//! Exhaustive and random generators for small graphs.

use rand::Rng;

use crate::digraph::{BipartiteGraph, Digraph};
use crate::recognize::is_transitive_oriented;
use crate::ugraph::{Color, UGraph};

/// Every loopless labelled digraph on `n` vertices (`2^(n(n-1))` of them).
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    subsets(pairs).map(move |arcs| Digraph::from_arcs_lossy(n, arcs))
}

/// Every digraph whose arcs all point forward (`i -> j`, `i < j`).
/// Each acyclic digraph on `n` vertices is isomorphic to at least one of these.
pub fn forward_dags(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    subsets(pairs).map(move |arcs| Digraph::from_arcs_lossy(n, arcs))
}

/// Transitive oriented graphs on `n` vertices, one or more per isomorphism class.
pub fn transitive_oriented_graphs(n: usize) -> impl Iterator<Item = Digraph> {
    forward_dags(n).filter(is_transitive_oriented)
}

fn subsets<T: Copy>(items: Vec<T>) -> impl Iterator<Item = Vec<T>> {
    assert!(items.len() < 63, "too many items to enumerate");
    let count = 1u64 << items.len();
    (0..count).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// Every bipartite graph with the given side sizes.
pub fn all_bipartite(whites: usize, blacks: usize) -> impl Iterator<Item = BipartiteGraph> {
    let pairs: Vec<(usize, usize)> = (0..whites).flat_map(|w| (0..blacks).map(move |b| (w, b))).collect();
    subsets(pairs).map(move |edges| BipartiteGraph::new(whites, blacks, edges).expect("edges in range"))
}

/// One representative per isomorphism class of graphs on `n <= 7` vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<UGraph> {
    assert!(n <= 7, "canonical forms are computed by brute force");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &(a, b))| {
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    acc | 1 << pairs.iter().position(|&q| q == (x, y)).expect("pair")
                })
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| canon >> i & 1 == 1).map(|(_, &e)| e);
            reps.push(UGraph::new(n, edges).expect("valid graph"));
        }
    }
    reps
}

/// Every proper three-colouring of `g` as a colour vector.
pub fn proper_colorings(g: &UGraph) -> Vec<Vec<Color>> {
    let n = g.n();
    let mut result = Vec::new();
    let mut current = vec![Color::U; n];
    fn rec(g: &UGraph, v: usize, current: &mut Vec<Color>, result: &mut Vec<Vec<Color>>) {
        if v == g.n() {
            result.push(current.clone());
            return;
        }
        for c in Color::ALL {
            if g.neighbors(v).iter().any(|&w| w < v && current[w] == c) {
                continue;
            }
            current[v] = c;
            rec(g, v + 1, current, result);
        }
    }
    rec(g, 0, &mut current, &mut result);
    result
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, result: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            result.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, result);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            current.swap(j, k - 1);
        }
    }
    heap(n, &mut current, &mut result);
    result.sort();
    result
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect();
    let chosen: Vec<(usize, usize)> = arcs.into_iter().filter(|_| rng.gen_bool(density)).collect();
    Digraph::from_arcs_lossy(n, chosen)
}

pub fn random_bipartite(rng: &mut impl Rng, whites: usize, blacks: usize, density: f64) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> = (0..whites)
        .flat_map(|w| (0..blacks).map(move |b| (w, b)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    BipartiteGraph::new(whites, blacks, edges).expect("edges in range")
}

/// Transitive closure of a random forward DAG; always transitive oriented.
pub fn random_transitive_oriented(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut reach = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            reach[u][v] = rng.gen_bool(density);
        }
    }
    for u in (0..n).rev() {
        for v in u + 1..n {
            if reach[u][v] {
                for w in v + 1..n {
                    if reach[v][w] {
                        reach[u][w] = true;
                    }
                }
            }
        }
    }
    let arcs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| reach[u][v]);
    Digraph::from_arcs_lossy(n, arcs.collect::<Vec<_>>())
}

/// Random "round" acyclic digraph: `i -> j` for `i < j <= reach[i]` with
/// `reach` nondecreasing. These are locally semicomplete.
pub fn random_round_dag(rng: &mut impl Rng, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    let mut reach = 0;
    for i in 0..n {
        reach = reach.max(i + 1).min(n - 1);
        if reach + 1 < n && rng.gen_bool(0.4) {
            reach = rng.gen_range(reach..n);
        }
        for j in i + 1..=reach.min(n - 1) {
            if j > i {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs_lossy(n, arcs)
}

/// Random extension of `C_3` with the given total number of vertices (>= 3).
pub fn random_c3_extension(rng: &mut impl Rng, n: usize) -> Digraph {
    assert!(n >= 3);
    let mut part: Vec<usize> = (0..n).map(|v| if v < 3 { v } else { rng.gen_range(0..3) }).collect();
    // shuffle labels so parts are not contiguous
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        part.swap(i, j);
    }
    let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| (part[u] + 1) % 3 == part[v]);
    Digraph::from_arcs_lossy(n, arcs.collect::<Vec<_>>())
}
