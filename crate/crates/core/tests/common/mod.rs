#![allow(dead_code)]

use std::collections::BTreeSet;

use ngsh_core::io::generate_random;
use ngsh_core::{ComponentTuple, NContext};
use proptest::prelude::*;

pub type Lists = Vec<Vec<usize>>;

pub fn lists(t: &ComponentTuple) -> Lists {
    t.components().iter().map(|c| c.to_vec()).collect()
}

/// Every tuple of the product of `comps`.
fn product(comps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    comps.iter().fold(vec![vec![]], |acc, c| {
        acc.iter()
            .flat_map(|p| {
                c.iter().map(move |&e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect()
    })
}

pub fn naive_full_box(ctx: &NContext, comps: &[Vec<usize>]) -> bool {
    product(comps).iter().all(|t| ctx.relation().contains(t))
}

/// Concepts straight from the definition, over every combination of
/// subsets of every dimension. Only for tiny contexts.
pub fn naive_concepts(ctx: &NContext) -> BTreeSet<Lists> {
    let sizes: Vec<usize> = ctx.dims().iter().map(|d| d.len()).collect();
    let bits: usize = sizes.iter().sum();
    assert!(bits <= 16, "naive oracle is for tiny contexts");
    let mut out = BTreeSet::new();
    for code in 0u32..(1 << bits) {
        let mut rest = code;
        let comps: Lists = sizes
            .iter()
            .map(|&s| {
                let c = (0..s).filter(|b| rest >> b & 1 == 1).collect();
                rest >>= s;
                c
            })
            .collect();
        if !naive_full_box(ctx, &comps) {
            continue;
        }
        let extendable = (0..sizes.len()).any(|i| {
            (0..sizes[i]).filter(|k| !comps[i].contains(k)).any(|k| {
                let mut others = comps.clone();
                others[i] = vec![k];
                naive_full_box(ctx, &others)
            })
        });
        if !extendable {
            out.insert(comps);
        }
    }
    out
}

/// Random contexts of arity 1..=4 with dimensions of 1..=4 elements.
pub fn small_context() -> impl Strategy<Value = NContext> {
    (
        prop::collection::vec(1usize..=4, 1..=4),
        0.0f64..=1.0,
        any::<u64>(),
    )
        .prop_map(|(sizes, density, seed)| generate_random(&sizes, density, seed).unwrap())
}

pub fn context_of_arity(arity: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = NContext> {
    (
        prop::collection::vec(1usize..=4, arity),
        0.0f64..=1.0,
        any::<u64>(),
    )
        .prop_map(|(sizes, density, seed)| generate_random(&sizes, density, seed).unwrap())
}
