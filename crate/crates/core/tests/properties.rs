mod common;

use std::collections::BTreeSet;

use common::*;
use ngsh_core::io::{generate_random, parse_tuples, write_tuples};
use ngsh_core::{
    brute_force_concepts, check_n_ordered, concept_count_bound_exponent, dimension_diagram,
    enumerate_concepts, introducer_oracle, introducers, ComponentTuple, ElementSet,
    DEFAULT_ORACLE_CAP,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumerator_matches_oracles(ctx in small_context()) {
        let fast = enumerate_concepts(&ctx);
        let brute = brute_force_concepts(&ctx, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(&fast, &brute);
        let bits: usize = ctx.dims().iter().map(|d| d.len()).sum();
        if bits <= 14 {
            let naive = naive_concepts(&ctx);
            let got: BTreeSet<Lists> = fast.iter().map(lists).collect();
            prop_assert_eq!(got, naive);
        }
    }

    #[test]
    fn concepts_are_closed_and_bounded(ctx in small_context()) {
        let all = enumerate_concepts(&ctx);
        let exponent = concept_count_bound_exponent(&ctx);
        prop_assert!((all.len() as u128) <= 1u128 << exponent);
        for c in &all {
            prop_assert!(ctx.is_concept(c).unwrap());
            prop_assert!(ctx.is_full_box(c).unwrap());
            for i in 0..ctx.arity() {
                prop_assert_eq!(&ctx.extend_height(i, &c.width(i)).unwrap(), c.component(i));
            }
        }
    }

    #[test]
    fn widths_are_boxes_of_slices(ctx in context_of_arity(2..=4)) {
        let all = enumerate_concepts(&ctx);
        for i in 0..ctx.arity() {
            for x in 0..ctx.dims()[i].len() {
                let slice = ctx.slice(i, x).unwrap();
                for c in all.iter().filter(|c| c.component(i).contains(x)) {
                    prop_assert!(slice.is_full_box(&ComponentTuple::new(c.width(i))).unwrap());
                }
            }
        }
    }

    #[test]
    fn slice_keeps_layer_crosses(ctx in context_of_arity(2..=4)) {
        for i in 0..ctx.arity() {
            for x in 0..ctx.dims()[i].len() {
                let expected = ctx.relation().iter().filter(|t| t[i] == x).count();
                prop_assert_eq!(ctx.slice(i, x).unwrap().len(), expected);
            }
        }
    }

    #[test]
    fn introducers_match_definition(ctx in context_of_arity(2..=4)) {
        let set = introducers(&ctx).unwrap();
        prop_assert_eq!(&set, &introducer_oracle(&ctx, DEFAULT_ORACLE_CAP).unwrap());
        let all = enumerate_concepts(&ctx);
        prop_assert!(set.concepts().all(|c| all.contains(c)));
        for i in 0..ctx.arity() {
            for x in 0..ctx.dims()[i].len() {
                let slice_concepts = enumerate_concepts(&ctx.slice(i, x).unwrap());
                let introduced: BTreeSet<Lists> = set
                    .introducing(i, x)
                    .map(|r| lists(r.concept()))
                    .collect();
                let images: BTreeSet<Lists> = slice_concepts
                    .iter()
                    .map(|w| {
                        let h = ctx.extend_height(i, w.components()).unwrap();
                        lists(&ComponentTuple::from_width(i, w.components(), h))
                    })
                    .collect();
                prop_assert_eq!(introduced.len(), slice_concepts.len());
                prop_assert_eq!(introduced, images);
            }
        }
        prop_assert_eq!(&introducers(&ctx).unwrap(), &set);
    }

    #[test]
    fn two_dimensional_introducers_are_object_and_attribute_concepts(ctx in context_of_arity(2..=2)) {
        let set = introducers(&ctx).unwrap();
        let (n1, n2) = (ctx.dims()[0].len(), ctx.dims()[1].len());
        let mut classical = BTreeSet::new();
        for o in 0..n1 {
            let intent = ctx.derive(0, &ElementSet::from_indices(n1, [o])).unwrap();
            let extent = ctx.derive(1, &intent).unwrap();
            classical.insert(ComponentTuple::new(vec![extent, intent]));
        }
        for a in 0..n2 {
            let extent = ctx.derive(1, &ElementSet::from_indices(n2, [a])).unwrap();
            let intent = ctx.derive(0, &extent).unwrap();
            classical.insert(ComponentTuple::new(vec![extent, intent]));
        }
        let got: BTreeSet<ComponentTuple> = set.concepts().cloned().collect();
        prop_assert_eq!(got, classical);
        prop_assert!(set.len() <= n1 + n2);
    }

    #[test]
    fn closure_pairs_are_concepts(ctx in context_of_arity(2..=2)) {
        let n1 = ctx.dims()[0].len();
        let all = enumerate_concepts(&ctx);
        let mut from_closures = BTreeSet::new();
        for bits in 0u32..(1 << n1) {
            let x = ElementSet::from_indices(n1, (0..n1).filter(|b| bits >> b & 1 == 1));
            let x1 = ctx.derive(0, &x).unwrap();
            let x11 = ctx.derive(1, &x1).unwrap();
            prop_assert_eq!(&ctx.derive(0, &x11).unwrap(), &x1);
            let pair = ComponentTuple::new(vec![x11, x1]);
            prop_assert!(ctx.is_concept(&pair).unwrap());
            from_closures.insert(pair);
        }
        let got: BTreeSet<ComponentTuple> = all.iter().cloned().collect();
        prop_assert_eq!(got, from_closures);
    }

    #[test]
    fn concept_sets_are_n_ordered(ctx in context_of_arity(2..=4)) {
        let all = enumerate_concepts(&ctx);
        prop_assert!(check_n_ordered(all.as_slice()).is_n_ordered());
        let set = introducers(&ctx).unwrap();
        let report = check_n_ordered(set.records());
        prop_assert!(report.is_n_ordered());
        for (a, b) in all.iter().zip(all.iter().skip(1)) {
            prop_assert!((0..ctx.arity()).any(|i| a.component(i) != b.component(i)));
        }
    }

    #[test]
    fn diagram_reachability_is_inclusion(ctx in context_of_arity(2..=3), dim in 0usize..2) {
        let all = enumerate_concepts(&ctx);
        let d = dimension_diagram(all.as_slice(), dim).unwrap();
        let members: usize = d.nodes.iter().map(|n| n.members.len()).sum();
        prop_assert_eq!(members, all.len());
        for a in 0..d.nodes.len() {
            for b in 0..d.nodes.len() {
                let included = d.nodes[a].component.is_subset(&d.nodes[b].component);
                prop_assert_eq!(d.reaches(a, b), included);
            }
        }
        for &(a, b) in &d.edges {
            let implied = d.edges.iter().any(|&(x, y)| x == a && y != b && d.reaches(y, b));
            prop_assert!(!implied);
        }
    }

    #[test]
    fn tuple_files_round_trip(ctx in small_context()) {
        prop_assert_eq!(parse_tuples(&write_tuples(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn generation_is_deterministic(
        sizes in prop::collection::vec(1usize..=5, 1..=4),
        density in 0.0f64..=1.0,
        seed in any::<u64>(),
    ) {
        prop_assert_eq!(
            generate_random(&sizes, density, seed).unwrap(),
            generate_random(&sizes, density, seed).unwrap()
        );
    }
}

#[test]
fn pinned_random_fixture() {
    let ctx = generate_random(&[2, 3, 3], 0.35, 42).unwrap();
    let pinned = include_str!("../../../data/random_2x3x3_d035_s42.tsv");
    assert_eq!(write_tuples(&ctx), pinned);
    let all = enumerate_concepts(&ctx);
    let naive = naive_concepts(&ctx);
    assert_eq!(all.iter().map(lists).collect::<BTreeSet<_>>(), naive);
    assert_eq!(all.len(), 13);
}
