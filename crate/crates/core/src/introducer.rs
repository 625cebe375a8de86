//! Introducer concepts.
//!
//! For `x ∈ S_i`, every (n−1)-concept of the slice `C_x` is a maximal width
//! among the concepts holding `x` in dimension `i`. Extending it with every
//! element `y ∈ S_i` whose layer contains the whole width gives the unique
//! concept with that width, which introduces `x`. [`introducer_dim`] does
//! this for every element of one dimension and [`introducers`] for every
//! dimension, merging records of the same concept.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::context::{ComponentTuple, NContext};
use crate::enumerate::{brute_force_concepts, enumerate_concepts_with, EnumerateOptions};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A concept together with the elements it introduces, per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntroducerRecord {
    concept: ComponentTuple,
    introduces: Vec<ElementSet>,
}

impl IntroducerRecord {
    pub fn concept(&self) -> &ComponentTuple {
        &self.concept
    }

    /// Introduced elements, indexed by dimension.
    pub fn introduces(&self) -> &[ElementSet] {
        &self.introduces
    }

    pub fn introduces_element(&self, dimension: usize, x: usize) -> bool {
        self.introduces[dimension].contains(x)
    }
}

/// Introducer records keyed by concept, in canonical concept order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntroducerSet {
    records: Vec<IntroducerRecord>,
}

impl IntroducerSet {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[IntroducerRecord] {
        &self.records
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntroducerRecord> {
        self.records.iter()
    }

    pub fn concepts(&self) -> impl Iterator<Item = &ComponentTuple> {
        self.records.iter().map(|r| &r.concept)
    }

    pub fn get(&self, concept: &ComponentTuple) -> Option<&IntroducerRecord> {
        self.records
            .binary_search_by(|r| r.concept.cmp(concept))
            .ok()
            .map(|i| &self.records[i])
    }

    /// `I_x`: the records introducing element `x` of `dimension`.
    pub fn introducing(
        &self,
        dimension: usize,
        x: usize,
    ) -> impl Iterator<Item = &IntroducerRecord> + '_ {
        self.records
            .iter()
            .filter(move |r| r.introduces.get(dimension).is_some_and(|s| s.contains(x)))
    }

    /// `I(S_i)`: the records introducing some element of `dimension`.
    pub fn introducing_dimension(
        &self,
        dimension: usize,
    ) -> impl Iterator<Item = &IntroducerRecord> + '_ {
        self.records
            .iter()
            .filter(move |r| r.introduces.get(dimension).is_some_and(|s| !s.is_empty()))
    }

    /// Union with another set, merging annotations of equal concepts.
    pub fn merge(&self, other: &IntroducerSet) -> IntroducerSet {
        let mut builder = Builder::default();
        for r in self.records.iter().chain(&other.records) {
            builder.add_record(r);
        }
        builder.finish()
    }
}

impl<'a> IntoIterator for &'a IntroducerSet {
    type Item = &'a IntroducerRecord;
    type IntoIter = std::slice::Iter<'a, IntroducerRecord>;

    fn into_iter(self) -> Self::IntoIter {
        self.records.iter()
    }
}

#[derive(Default)]
struct Builder {
    map: BTreeMap<ComponentTuple, Vec<ElementSet>>,
}

impl Builder {
    fn annotations(&mut self, concept: ComponentTuple) -> &mut Vec<ElementSet> {
        self.map.entry(concept).or_insert_with_key(|c| {
            c.components()
                .iter()
                .map(|s| ElementSet::empty(s.universe()))
                .collect()
        })
    }

    fn add(&mut self, concept: ComponentTuple, dimension: usize, x: usize) {
        self.annotations(concept)[dimension].insert(x);
    }

    fn add_record(&mut self, record: &IntroducerRecord) {
        let slot = self.annotations(record.concept.clone());
        for (s, o) in slot.iter_mut().zip(&record.introduces) {
            s.union_with(o);
        }
    }

    fn finish(self) -> IntroducerSet {
        IntroducerSet {
            records: self
                .map
                .into_iter()
                .map(|(concept, introduces)| IntroducerRecord {
                    concept,
                    introduces,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntroducerOptions {
    /// Check that every extension is a concept.
    pub checked: bool,
    pub enumerate: EnumerateOptions,
}

impl Default for IntroducerOptions {
    fn default() -> Self {
        IntroducerOptions {
            checked: true,
            enumerate: EnumerateOptions::default(),
        }
    }
}

/// `I(S_i)`: the introducer concepts of every element of `dimension`.
pub fn introducer_dim(ctx: &NContext, dimension: usize) -> Result<IntroducerSet> {
    introducer_dim_with(ctx, dimension, &IntroducerOptions::default())
}

pub fn introducer_dim_with(
    ctx: &NContext,
    dimension: usize,
    options: &IntroducerOptions,
) -> Result<IntroducerSet> {
    require_slicable(ctx)?;
    let size = ctx.dim(dimension)?.len();
    let per_element: Vec<Vec<ComponentTuple>> = (0..size)
        .into_par_iter()
        .map(|x| introducers_of(ctx, dimension, x, options))
        .collect::<Result<_>>()?;

    let mut builder = Builder::default();
    for (x, concepts) in per_element.into_iter().enumerate() {
        for c in concepts {
            builder.add(c, dimension, x);
        }
    }
    Ok(builder.finish())
}

fn introducers_of(
    ctx: &NContext,
    dimension: usize,
    x: usize,
    options: &IntroducerOptions,
) -> Result<Vec<ComponentTuple>> {
    let slice = ctx.slice(dimension, x)?;
    let widths = enumerate_concepts_with(&slice, &options.enumerate)?;
    let mut out = Vec::with_capacity(widths.len());
    for width in &widths {
        let empty = ElementSet::empty(ctx.dims()[dimension].len());
        let mut tuple = ComponentTuple::from_width(dimension, width.components(), empty);
        let height = ctx.height_unchecked(dimension, tuple.components());
        debug_assert!(height.contains(x));
        tuple = ComponentTuple::from_width(dimension, width.components(), height);
        if options.checked && !ctx.concept_unchecked(tuple.components()) {
            return Err(Error::NotAConcept(ctx.format_tuple(&tuple)));
        }
        out.push(tuple);
    }
    Ok(out)
}

/// `I(C)`: the introducer concepts of every element of every dimension.
pub fn introducers(ctx: &NContext) -> Result<IntroducerSet> {
    introducers_with(ctx, &IntroducerOptions::default())
}

pub fn introducers_with(ctx: &NContext, options: &IntroducerOptions) -> Result<IntroducerSet> {
    require_slicable(ctx)?;
    let per_dim: Vec<IntroducerSet> = (0..ctx.arity())
        .into_par_iter()
        .map(|i| introducer_dim_with(ctx, i, options))
        .collect::<Result<_>>()?;
    Ok(per_dim
        .iter()
        .fold(IntroducerSet::default(), |acc, s| acc.merge(s)))
}

/// Keeps the records whose concept has no empty component.
pub fn nontrivial_filter(set: &IntroducerSet) -> IntroducerSet {
    IntroducerSet {
        records: set
            .records
            .iter()
            .filter(|r| !r.concept.has_empty_component())
            .cloned()
            .collect(),
    }
}

/// Definition-based introducers, for testing: for every element `x` of
/// every dimension `i`, the concepts of [`brute_force_concepts`] holding `x`
/// in dimension `i` whose width is maximal under componentwise inclusion.
pub fn introducer_oracle(ctx: &NContext, cap: u64) -> Result<IntroducerSet> {
    require_slicable(ctx)?;
    let all = brute_force_concepts(ctx, cap)?;
    let mut builder = Builder::default();
    for i in 0..ctx.arity() {
        for x in 0..ctx.dims()[i].len() {
            let holding: Vec<&ComponentTuple> =
                all.iter().filter(|c| c.component(i).contains(x)).collect();
            for a in &holding {
                let dominated = holding.iter().any(|b| {
                    b != a
                        && (0..ctx.arity())
                            .filter(|&j| j != i)
                            .all(|j| a.component(j).is_subset(b.component(j)))
                });
                if !dominated {
                    builder.add((*a).clone(), i, x);
                }
            }
        }
    }
    Ok(builder.finish())
}

fn require_slicable(ctx: &NContext) -> Result<()> {
    if ctx.arity() < 2 {
        return Err(Error::Arity(
            "introducers need a context of arity at least 2".into(),
        ));
    }
    Ok(())
}
