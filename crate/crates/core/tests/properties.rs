mod common;

use std::collections::BTreeSet;

use dagbound::bound::{bound_report, insertion_pair_bounds_check, insertion_pairs, lemma1_check};
use dagbound::dim_two::{
    brute_force_dim2_oracle, certify_dimension_two, equality_orderings, intersection_of_orders,
    peel_equality_check, CertificationOutcome, CertifyOptions,
};
use dagbound::generators::random_dag;
use dagbound::io::{parse_instance, serialize_instance};
use dagbound::orderings::{
    arc_weight_sum, enumerate_orderings, inner_product, some_topological_ordering,
    validate_ordering,
};
use dagbound::search::{minimize_eg_bnb, minimize_eg_exhaustive, DEFAULT_EXHAUSTIVE_CAP};
use dagbound::{Digraph, Ranking};
use proptest::prelude::*;

use common::{brute_min, brute_orderings};

fn dag(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| random_dag(n, p, seed).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Ranking> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|r| Ranking::new(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn e_vector_sums_to_zero_with_even_square(d in dag(12)) {
        let e = d.e_vector();
        prop_assert_eq!(e.sum(), 0);
        prop_assert_eq!(e.norm_squared() % 2, 0);
    }

    #[test]
    fn closure_is_idempotent_and_transitive(d in dag(10)) {
        let c = d.transitive_closure().unwrap();
        prop_assert!(c.is_transitive());
        prop_assert!(c.is_acyclic());
        prop_assert!(d.arcs().all(|(u, v)| c.has_arc(u, v)));
        prop_assert_eq!(c.transitive_closure().unwrap(), c.clone());
        prop_assert_eq!(d.is_transitive(), c == d);
    }

    #[test]
    fn induced_on_everything_is_identity(d in dag(10)) {
        let sub = d.induced_subgraph(0..d.vertex_count()).unwrap();
        prop_assert_eq!(sub.graph, d);
    }

    #[test]
    fn deleting_a_maximal_vertex(d in dag(10)) {
        let big_e = d.e_vector();
        for z in (0..d.vertex_count()).filter(|&z| d.is_maximal(z)) {
            let sub = d.remove_vertex(z).unwrap();
            let e = sub.graph.e_vector();
            let preds = d.in_neighbors(z).unwrap();
            for x in 0..sub.graph.vertex_count() {
                let orig = sub.map.original(x);
                let bump = i64::from(preds.contains(&orig));
                prop_assert_eq!(e[x], big_e[orig] + bump);
            }
            let small_sum: i64 = preds.iter().map(|&x| e[sub.map.new_index(x).unwrap()]).sum();
            let big_sum: i64 = preds.iter().map(|&x| big_e[x]).sum();
            prop_assert_eq!(small_sum, big_sum + preds.len() as i64);
        }
    }

    #[test]
    fn enumeration_matches_filtered_permutations(d in dag(7)) {
        let streamed: Vec<Ranking> = enumerate_orderings(&d).unwrap().collect();
        let brute = brute_orderings(&d);
        prop_assert_eq!(&streamed, &brute);
        prop_assert_eq!(&streamed[0], &some_topological_ordering(&d).unwrap());
        for g in &streamed {
            prop_assert!(validate_ordering(&d, g.ranks()).unwrap());
        }
    }

    #[test]
    fn arc_weights_equal_inner_product(d in dag(8)) {
        let e = d.e_vector();
        for g in enumerate_orderings(&d).unwrap().take(500) {
            prop_assert_eq!(
                arc_weight_sum(&d, &g).unwrap(),
                inner_product(e.values(), &g.to_vector()).unwrap()
            );
        }
    }

    #[test]
    fn bound_holds_for_every_ordering(d in dag(7)) {
        for g in enumerate_orderings(&d).unwrap() {
            prop_assert!(bound_report(&d, &g).unwrap().gap2 >= 0);
        }
    }

    #[test]
    fn insertion_inequality_for_maximal_last_orderings(d in dag(7)) {
        for g in enumerate_orderings(&d).unwrap().filter(|g| !g.is_empty()) {
            let z = g.top().unwrap();
            // the top vertex of an acyclic ordering is always maximal
            prop_assert!(d.is_maximal(z));
            prop_assert!(lemma1_check(&d, &g, z).unwrap());
        }
    }

    #[test]
    fn pruned_search_matches_brute_force(d in dag(8)) {
        let bnb = minimize_eg_bnb(&d).unwrap();
        let ex = minimize_eg_exhaustive(&d, DEFAULT_EXHAUSTIVE_CAP).unwrap();
        prop_assert_eq!(bnb.min_eg, ex.min_eg);
        prop_assert_eq!(&bnb.argmin, &ex.argmin);
        prop_assert!(bnb.explored <= ex.explored);
        prop_assert!(2 * bnb.min_eg >= d.e_vector().norm_squared());
        if d.vertex_count() <= 6 {
            prop_assert_eq!((ex.min_eg, ex.argmin), brute_min(&d));
        }
    }

    #[test]
    fn equality_forces_a_poset(d in dag(7)) {
        if let Some(g) = equality_orderings(&d, Some(1)).unwrap().first() {
            prop_assert!(d.is_transitive());
            prop_assert!(peel_equality_check(&d, g).unwrap());
        }
    }

    #[test]
    fn certificate_iff_oracle_on_closures(d in dag(6)) {
        let poset = d.transitive_closure().unwrap();
        let outcome = certify_dimension_two(&poset, CertifyOptions::default()).unwrap();
        let oracle = brute_force_dim2_oracle(&poset, 7).unwrap();
        let floor = poset.e_vector().norm_squared() / 2;
        match outcome {
            CertificationOutcome::CertifiedDim2(c) => {
                prop_assert!(oracle);
                prop_assert_eq!(intersection_of_orders(&c.f, &c.g).unwrap(), poset);
                prop_assert!(c.checks.all());
            }
            CertificationOutcome::NotDim2 { min_eg, floor: f } => {
                prop_assert!(!oracle);
                prop_assert_eq!(f, floor);
                prop_assert!(min_eg > floor);
            }
            other => prop_assert!(false, "unexpected outcome {:?}", other),
        }
    }

    #[test]
    fn intersections_are_posets(
        (f, g) in (0..9usize).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let d = intersection_of_orders(&f, &g).unwrap();
        prop_assert!(d.is_acyclic());
        prop_assert!(d.is_transitive());
        prop_assert!(validate_ordering(&d, f.ranks()).unwrap());
        prop_assert!(validate_ordering(&d, g.ranks()).unwrap());
        // a two-dimensional poset always has an ordering at the bound
        let certified = matches!(
            certify_dimension_two(&d, CertifyOptions { as_is: true, budget: None }).unwrap(),
            CertificationOutcome::CertifiedDim2(_)
        );
        prop_assert!(certified);
    }

    #[test]
    fn text_format_round_trips(d in dag(15)) {
        let parsed = parse_instance(&serialize_instance(&d, Some("x"))).unwrap();
        prop_assert_eq!(parsed.graph, d);
    }
}

#[test]
fn insertion_pair_bounds_over_all_subsets() {
    for n in 0..=10usize {
        for mask in 0u32..(1 << n) {
            let s: BTreeSet<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            assert!(
                insertion_pair_bounds_check(&s, n).unwrap(),
                "S = {s:?}, n = {n}"
            );
            let brute = s
                .iter()
                .flat_map(|&a| (1..=n).filter(move |&t| a < t).map(move |t| (a, t)))
                .filter(|(_, t)| !s.contains(t))
                .count() as u64;
            assert_eq!(insertion_pairs(&s, n).unwrap(), brute);
        }
    }
}
