//! Membership tests for the digraph classes the dichotomy talks about.

use serde::Serialize;

use crate::digraph::Digraph;

/// Every pair of distinct vertices is joined by at least one arc.
pub fn is_semicomplete(d: &Digraph) -> bool {
    let n = d.n();
    (0..n).all(|u| (u + 1..n).all(|v| d.adjacent(u, v)))
}

fn is_semicomplete_set(d: &Digraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| d.adjacent(u, v)))
}

/// Every in-neighborhood and every out-neighborhood induces a semicomplete digraph.
pub fn is_locally_semicomplete(d: &Digraph) -> bool {
    (0..d.n()).all(|v| is_semicomplete_set(d, d.in_neighbors(v)) && is_semicomplete_set(d, d.out_neighbors(v)))
}

/// For every 2-path `x -> y -> z` with `x != z`, `x` and `z` are adjacent.
pub fn is_quasi_transitive(d: &Digraph) -> bool {
    (0..d.n()).all(|y| {
        d.in_neighbors(y)
            .iter()
            .all(|&x| d.out_neighbors(y).iter().all(|&z| x == z || d.adjacent(x, z)))
    })
}

/// Transitive and free of 2-cycles.
pub fn is_transitive_oriented(d: &Digraph) -> bool {
    d.symmetric_arc().is_none()
        && (0..d.n()).all(|y| {
            d.in_neighbors(y)
                .iter()
                .all(|&x| d.out_neighbors(y).iter().all(|&z| x == z || d.has_arc(x, z)))
        })
}

pub fn has_symmetric_arc(d: &Digraph) -> Option<(usize, usize)> {
    d.symmetric_arc()
}

/// The full set of class memberships, as reported by `recognize`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub semicomplete: bool,
    pub locally_semicomplete: bool,
    pub quasi_transitive: bool,
    pub transitive_oriented: bool,
    pub acyclic: bool,
    pub directed_cycle: Option<usize>,
    pub c3_extension: bool,
    pub symmetric_arc: Option<(usize, usize)>,
    pub connected: bool,
}

pub fn recognize_all(d: &Digraph) -> ClassReport {
    ClassReport {
        semicomplete: is_semicomplete(d),
        locally_semicomplete: is_locally_semicomplete(d),
        quasi_transitive: is_quasi_transitive(d),
        transitive_oriented: is_transitive_oriented(d),
        acyclic: d.is_acyclic(),
        directed_cycle: d.directed_cycle_length(),
        c3_extension: d.c3_extension().is_some(),
        symmetric_arc: d.symmetric_arc(),
        connected: d.is_weakly_connected(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_digraphs;

    #[test]
    fn semicomplete_examples() {
        assert!(is_semicomplete(&Digraph::directed_cycle(3)));
        assert!(!is_semicomplete(&Digraph::directed_cycle(4)));
        assert!(is_semicomplete(&Digraph::empty(1)));
    }

    #[test]
    fn locally_semicomplete_examples() {
        assert!(is_locally_semicomplete(&Digraph::directed_cycle(4)));
        let out_star = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(!is_locally_semicomplete(&out_star));
        assert!(is_locally_semicomplete(&Digraph::transitive_tournament(5)));
    }

    #[test]
    fn quasi_transitive_examples() {
        assert!(is_quasi_transitive(&Digraph::directed_cycle(3)));
        assert!(!is_quasi_transitive(&Digraph::directed_cycle(4)));
        assert!(is_quasi_transitive(&Digraph::transitive_tournament(5)));
    }

    #[test]
    fn transitive_oriented_examples() {
        assert!(is_transitive_oriented(&Digraph::transitive_tournament(4)));
        assert!(!is_transitive_oriented(&Digraph::directed_cycle(3)));
        assert!(!is_transitive_oriented(&Digraph::directed_cycle(2)));
    }

    #[test]
    fn symmetric_arc_examples() {
        assert_eq!(has_symmetric_arc(&Digraph::directed_cycle(2)), Some((0, 1)));
        assert_eq!(has_symmetric_arc(&Digraph::transitive_tournament(3)), None);
        let c3_plus = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(has_symmetric_arc(&c3_plus), Some((0, 1)));
    }

    #[test]
    fn class_implications_on_small_digraphs() {
        for n in 0..=4 {
            for d in all_digraphs(n) {
                if is_semicomplete(&d) {
                    assert!(is_locally_semicomplete(&d) && is_quasi_transitive(&d), "{d:?}");
                }
                if is_transitive_oriented(&d) {
                    assert!(is_quasi_transitive(&d) && d.is_acyclic(), "{d:?}");
                }
                let c = d.converse();
                assert_eq!(is_semicomplete(&d), is_semicomplete(&c));
                assert_eq!(is_locally_semicomplete(&d), is_locally_semicomplete(&c));
                assert_eq!(is_quasi_transitive(&d), is_quasi_transitive(&c));
                assert_eq!(is_transitive_oriented(&d), is_transitive_oriented(&c));
                assert_eq!(d.is_acyclic(), c.is_acyclic());
                assert_eq!(d.directed_cycle_length(), c.directed_cycle_length());
            }
        }
    }
}
