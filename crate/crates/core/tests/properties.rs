use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use minhom::classify::{classify_locally_semicomplete, classify_quasi_transitive, verify_verdict};
use minhom::digraph::{BipartiteGraph, Digraph};
use minhom::enumerate::random_round_dag;
use minhom::io::{parse_bipartite, parse_costs, parse_digraph, write_bipartite, write_costs, write_digraph};
use minhom::minmax::{order_acyclic_locally_semicomplete, verify_minmax};
use minhom::solver::{brute_force_minhom, is_homomorphism, solve, Algorithm, CostMatrix};
use minhom::suites::{check_exchange, check_pib_agreement, random_input, random_polynomial_target};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::new(n, arcs.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn bipartite(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(w, b)| {
        proptest::collection::vec(any::<bool>(), w * b).prop_map(move |bits| {
            let edges = (0..w).flat_map(|x| (0..b).map(move |y| (x, y))).filter(|&(x, y)| bits[x * b + y]);
            BipartiteGraph::new(w, b, edges.collect::<Vec<_>>()).unwrap()
        })
    })
}

fn permuted(d: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::new(d.n(), d.arcs().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #[test]
    fn converse_is_an_involution(d in digraph(7)) {
        prop_assert_eq!(d.converse().converse().arcs(), d.arcs());
        prop_assert_eq!(d.converse().arc_count(), d.arc_count());
    }

    #[test]
    fn replication_degrees(d in digraph(7)) {
        let b = d.bipartite_replication();
        prop_assert_eq!(b.edge_count(), d.arc_count());
        for v in 0..d.n() {
            prop_assert_eq!(b.white_neighbors(v).len(), d.out_neighbors(v).len());
            prop_assert_eq!(b.black_neighbors(v).len(), d.in_neighbors(v).len());
        }
    }

    #[test]
    fn text_formats_round_trip(d in digraph(7), b in bipartite(5)) {
        let text = write_digraph(&d);
        prop_assert_eq!(write_digraph(&parse_digraph(&text).unwrap()), text);
        let text = write_bipartite(&b);
        prop_assert_eq!(parse_bipartite(&text).unwrap(), b);
    }

    #[test]
    fn cost_tables_round_trip(rows in proptest::collection::vec(proptest::collection::vec(-1000i64..1000, 4), 0..6)) {
        let c = CostMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(parse_costs(&write_costs(&c)).unwrap(), c);
    }

    #[test]
    fn pib_recognizers_agree(b in bipartite(6)) {
        prop_assert_eq!(check_pib_agreement(&b), Ok(()));
    }

    #[test]
    fn verdicts_verify_and_survive_relabelling(d in digraph(5), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..d.n()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let e = permuted(&d, &perm);
        for classify in [classify_locally_semicomplete, classify_quasi_transitive] {
            let (a, b) = (classify(&d).unwrap(), classify(&e).unwrap());
            prop_assert!(verify_verdict(&d, &a));
            prop_assert!(verify_verdict(&e, &b));
            prop_assert_eq!(a.verdict, b.verdict);
        }
    }

    #[test]
    fn round_dags_get_minmax_orderings(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_round_dag(&mut rng, n);
        prop_assume!(h.is_weakly_connected());
        let o = order_acyclic_locally_semicomplete(&h).unwrap();
        prop_assert!(verify_minmax(&h, &o));
    }

    #[test]
    fn exchange_procedure_checks_out(seed in any::<u64>(), n in 1usize..8, density in 0.1f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = minhom::enumerate::random_transitive_oriented(&mut rng, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        prop_assert_eq!(check_exchange(&permuted(&t, &perm)), Ok(()));
    }

    #[test]
    fn polynomial_solvers_match_the_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_polynomial_target(&mut rng);
        let g = random_input(&mut rng, &h);
        let rows = (0..g.n()).map(|u| (0..h.n()).map(|i| ((seed >> ((u * 7 + i) % 60)) % 11) as i64 - 5).collect()).collect();
        let c = CostMatrix::from_rows(rows).unwrap();
        let fast = solve(&g, &h, &c, Algorithm::Auto).unwrap();
        let slow = brute_force_minhom(&g, &h, &c).unwrap();
        if let Some(hom) = &fast.homomorphism {
            prop_assert!(is_homomorphism(&g, &h, &hom.f));
        }
        // both break ties towards the lexicographically least map
        prop_assert_eq!(fast.homomorphism, slow);
    }

    #[test]
    fn shifting_a_row_shifts_the_optimum(seed in any::<u64>(), row in 0usize..7, shift in -20i64..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_polynomial_target(&mut rng);
        let g = random_input(&mut rng, &h);
        if g.n() == 0 {
            return Ok(());
        }
        let row = row % g.n();
        let mut c = CostMatrix::zeros(g.n(), h.n());
        for u in 0..g.n() {
            for i in 0..h.n() {
                c.set(u, i, ((u * 5 + i * 3 + seed as usize % 7) % 9) as i64 - 4);
            }
        }
        let base = brute_force_minhom(&g, &h, &c).unwrap();
        let mut shifted = c.clone();
        for i in 0..h.n() {
            shifted.set(row, i, c.get(row, i) + shift);
        }
        let moved = brute_force_minhom(&g, &h, &shifted).unwrap();
        prop_assert_eq!(base.as_ref().map(|x| x.cost + shift), moved.as_ref().map(|x| x.cost));
        prop_assert_eq!(base.map(|x| x.f), moved.map(|x| x.f));
        let fast = solve(&g, &h, &shifted, Algorithm::Auto).unwrap().homomorphism;
        prop_assert_eq!(fast.map(|x| (x.f, x.cost)), brute_force_minhom(&g, &h, &shifted).unwrap().map(|x| (x.f, x.cost)));
    }
}
