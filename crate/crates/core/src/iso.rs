//! Induced subgraph isomorphism for small patterns.

use crate::digraph::Digraph;

/// Finds an induced copy of `pattern` in `host`.
///
/// Returns `map` with `map[p]` the host vertex playing pattern vertex `p`.
/// `compatible(p, h)` can restrict which host vertices may play `p`.
pub fn find_induced_embedding(
    pattern: &Digraph,
    host: &Digraph,
    compatible: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    let ok = extend(pattern, host, &compatible, &order, 0, &mut map, &mut used);
    ok.then_some(map)
}

/// An isomorphism `a -> b` as a vertex map, if one exists.
pub fn isomorphism(a: &Digraph, b: &Digraph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.arc_count() != b.arc_count() {
        return None;
    }
    find_induced_embedding(a, b, |p, h| {
        a.out_neighbors(p).len() == b.out_neighbors(h).len() && a.in_neighbors(p).len() == b.in_neighbors(h).len()
    })
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    isomorphism(a, b).is_some()
}

// Connected-first order keeps partial maps constrained early.
fn search_order(pattern: &Digraph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.adjacent(u, v)).count();
                (links, pattern.neighbors(v).len(), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn extend(
    pattern: &Digraph,
    host: &Digraph,
    compatible: &impl Fn(usize, usize) -> bool,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.n() {
        if used[h]
            || host.out_neighbors(h).len() < pattern.out_neighbors(p).len()
            || host.in_neighbors(h).len() < pattern.in_neighbors(p).len()
            || !compatible(p, h)
        {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| {
            let g = map[q];
            pattern.has_arc(p, q) == host.has_arc(h, g) && pattern.has_arc(q, p) == host.has_arc(g, h)
        });
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend(pattern, host, compatible, order, depth + 1, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}
