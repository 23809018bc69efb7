//! Property and randomized cross-checks: solver results against the
//! brute-force oracles, structural invariants of the products, and codec
//! round-trips.

mod common;

use gdka_core::{
    are_isomorphic, cartesian, corona, dka_number, domination_number, edge_corona, emit_graph6,
    find_1_perfect_code, gdka_number, generate, hierarchical, is_gdka, lexicographic,
    parse_graph6, AllianceValue, Family, Graph, Label, VertexSet,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn solver_matches_oracle(g in arb_graph(8), k in -4i64..=4) {
        let solved = gdka_number(&g, k).unwrap();
        let (value, witness) = common::oracle_gdka(&g, k);
        prop_assert_eq!(solved.value, value);
        prop_assert_eq!(
            solved.witness.map(|w| w.members().to_vec()),
            witness
        );

        let solved = dka_number(&g, k).unwrap();
        let (value, witness) = common::oracle_dka(&g, k);
        prop_assert_eq!(solved.value, value);
        prop_assert_eq!(
            solved.witness.map(|w| w.members().to_vec()),
            witness
        );

        let solved = domination_number(&g).unwrap();
        let (value, witness) = common::oracle_domination(&g);
        prop_assert_eq!(solved.value, value);
        prop_assert_eq!(
            solved.witness.map(|w| w.members().to_vec()),
            witness
        );
    }

    #[test]
    fn alliance_numbers_are_monotone_in_k(g in arb_graph(8), k in -4i64..=3) {
        let lo = gdka_number(&g, k).unwrap().value;
        let hi = gdka_number(&g, k + 1).unwrap().value;
        prop_assert!(lo <= hi);
    }

    #[test]
    fn domination_and_defense_bound_the_global_number(g in arb_graph(8), k in -4i64..=4) {
        let global = gdka_number(&g, k).unwrap().value;
        prop_assert!(domination_number(&g).unwrap().value <= global);
        prop_assert!(dka_number(&g, k).unwrap().value <= global);
    }

    #[test]
    fn solver_witnesses_satisfy_their_predicate(g in arb_graph(8), k in -4i64..=4) {
        let solved = gdka_number(&g, k).unwrap();
        if let Some(witness) = solved.witness {
            prop_assert_eq!(AllianceValue::Finite(witness.len()), solved.value);
            prop_assert!(is_gdka(&g, &witness, k).unwrap());
        }
    }

    #[test]
    fn perfect_code_is_a_partition_of_minimum_size(g in arb_graph(8)) {
        match find_1_perfect_code(&g).unwrap() {
            Some(code) => {
                let mut seen = vec![0usize; g.n()];
                for d in code.iter() {
                    seen[d] += 1;
                    for &u in g.neighbors(d) {
                        seen[u] += 1;
                    }
                }
                prop_assert!(seen.iter().all(|&c| c == 1));
                prop_assert_eq!(
                    AllianceValue::Finite(code.len()),
                    domination_number(&g).unwrap().value
                );
            }
            None => prop_assert!(!common::oracle_has_perfect_code(&g)),
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_relabel_invariant(g in arb_graph(8), seed in any::<u64>()) {
        prop_assert!(are_isomorphic(&g, &g));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let relabeled = Graph::new(g.n(), &edges).unwrap();
        prop_assert!(are_isomorphic(&g, &relabeled));
    }

    #[test]
    fn isomorphism_is_symmetric(a in arb_graph(6), b in arb_graph(6)) {
        prop_assert_eq!(are_isomorphic(&a, &b), are_isomorphic(&b, &a));
    }
}

#[test]
fn graph6_round_trip_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6ca7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = common::random_graph(&mut rng, n, 0.5);
        let encoded = emit_graph6(&g).unwrap();
        let decoded = parse_graph6(&encoded).unwrap();
        assert_eq!(g, decoded);
        assert_eq!(emit_graph6(&decoded).unwrap(), encoded);
    }
}

#[test]
fn product_counting_formulas_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x95eed);
    for _ in 0..500 {
        let ng = rng.gen_range(1..=6);
        let nh = rng.gen_range(1..=6);
        let g = common::random_graph(&mut rng, ng, 0.5);
        let h = common::random_graph(&mut rng, nh, 0.5);
        let u = VertexSet::new(ng, (0..ng).filter(|_| rng.gen_bool(0.5))).unwrap();

        let hier = hierarchical(&g, &u, &h).unwrap();
        assert_eq!(hier.graph().n(), ng * nh);
        assert_eq!(hier.graph().m(), nh * g.m() + u.len() * h.m());

        let cart = cartesian(&g, &h).unwrap();
        let full = hierarchical(&g, &VertexSet::full(ng), &h).unwrap();
        assert_eq!(cart.graph(), full.graph());
        assert_eq!(cart.labels(), full.labels());

        let lex = lexicographic(&g, &h).unwrap();
        assert_eq!(lex.graph().m(), g.m() * nh * nh + ng * h.m());
        for id in 0..lex.graph().n() {
            let Label::Pair { g: gv, h: hv } = lex.label(id) else {
                panic!("pair product must carry pair labels");
            };
            assert_eq!(
                lex.graph().degree(id),
                g.degree(gv) * nh + h.degree(hv)
            );
        }

        let cor = corona(&g, &h).unwrap();
        assert_eq!(cor.graph().n(), ng * (1 + nh));
        assert_eq!(cor.graph().m(), g.m() + ng * (h.m() + nh));

        let ec = edge_corona(&g, &h).unwrap();
        assert_eq!(ec.graph().n(), ng + g.m() * nh);
        assert_eq!(ec.graph().m(), g.m() + g.m() * (h.m() + 2 * nh));

        for p in [&hier, &cart, &lex, &cor, &ec] {
            for id in 0..p.graph().n() {
                assert_eq!(p.id_of(p.label(id)), Some(id));
            }
        }
    }
}

#[test]
fn hierarchical_layers_induce_the_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e5);
    for _ in 0..60 {
        let ng = rng.gen_range(1..=5);
        let nh = rng.gen_range(1..=5);
        let g = common::random_graph(&mut rng, ng, 0.5);
        let h = common::random_graph(&mut rng, nh, 0.5);
        let u = VertexSet::new(ng, (0..ng).filter(|_| rng.gen_bool(0.5))).unwrap();
        let prod = hierarchical(&g, &u, &h).unwrap();
        let n = prod.graph().n();

        for hv in 0..nh {
            let layer = VertexSet::new(n, (0..ng).map(|gv| gv * nh + hv)).unwrap();
            let (induced, _) = prod.graph().induced(&layer);
            assert!(are_isomorphic(&induced, &g));
        }
        for gv in u.iter() {
            let layer = VertexSet::new(n, (0..nh).map(|hv| gv * nh + hv)).unwrap();
            let (induced, _) = prod.graph().induced(&layer);
            assert!(are_isomorphic(&induced, &h));
        }
    }
}

#[test]
fn sun_graphs_match_their_closed_form_counts() {
    for n in 3..=12 {
        let sun = generate(Family::Sun, Some(n)).unwrap().graph;
        assert_eq!(sun.n(), 2 * n);
        assert_eq!(sun.m(), 3 * n);
        assert_eq!(sun.max_degree(), 4);
        assert_eq!(sun.min_degree(), 2);
    }
}
