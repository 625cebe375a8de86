//! Enumeration of all n-concepts `T(C)` of a context.
//!
//! [`enumerate_concepts`] is a binary-partition search over closed n-sets:
//! every node holds the elements already in the box, the candidates that
//! can still join it and the elements explicitly left out. A subtree is cut
//! as soon as a left-out element could extend every box below it, and
//! candidates that extend every box below a node are pulled in eagerly.
//!
//! [`brute_force_concepts`] is the reference: it tries every combination of
//! subsets of all dimensions but the largest.

use crate::context::{ComponentTuple, NContext};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default oracle cap: at most 2^20 subset combinations.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 20;

/// A deduplicated set of tuples in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConceptSet {
    concepts: Vec<ComponentTuple>,
}

impl ConceptSet {
    pub fn new(concepts: impl IntoIterator<Item = ComponentTuple>) -> Self {
        let mut concepts: Vec<ComponentTuple> = concepts.into_iter().collect();
        concepts.sort();
        concepts.dedup();
        ConceptSet { concepts }
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ComponentTuple> {
        self.concepts.iter()
    }

    pub fn as_slice(&self) -> &[ComponentTuple] {
        &self.concepts
    }

    pub fn contains(&self, tuple: &ComponentTuple) -> bool {
        self.concepts.binary_search(tuple).is_ok()
    }

    pub fn is_subset(&self, other: &ConceptSet) -> bool {
        self.iter().all(|c| other.contains(c))
    }
}

impl FromIterator<ComponentTuple> for ConceptSet {
    fn from_iter<I: IntoIterator<Item = ComponentTuple>>(iter: I) -> Self {
        ConceptSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a ConceptSet {
    type Item = &'a ComponentTuple;
    type IntoIter = std::slice::Iter<'a, ComponentTuple>;

    fn into_iter(self) -> Self::IntoIter {
        self.concepts.iter()
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Abort with [`Error::ConceptLimit`] once more concepts than this are found.
    pub max_concepts: Option<usize>,
}

/// All n-concepts of `ctx`.
pub fn enumerate_concepts(ctx: &NContext) -> ConceptSet {
    enumerate_concepts_with(ctx, &EnumerateOptions::default())
        .expect("enumeration without a limit cannot fail")
}

pub fn enumerate_concepts_with(ctx: &NContext, options: &EnumerateOptions) -> Result<ConceptSet> {
    let n = ctx.arity();
    let included: Vec<ElementSet> = ctx
        .dims()
        .iter()
        .map(|d| ElementSet::empty(d.len()))
        .collect();
    let mut candidates: Vec<ElementSet> = ctx.dims().iter().map(|d| d.all()).collect();
    let excluded = included.clone();
    restrict_candidates(ctx, &included, &mut candidates);

    let mut search = Search {
        ctx,
        limit: options.max_concepts,
        found: Vec::new(),
    };
    search.descend(included, candidates, excluded)?;
    debug_assert!(search.found.iter().all(|c| c.arity() == n));
    Ok(ConceptSet::new(search.found))
}

struct Search<'a> {
    ctx: &'a NContext,
    limit: Option<usize>,
    found: Vec<ComponentTuple>,
}

impl Search<'_> {
    fn descend(
        &mut self,
        mut included: Vec<ElementSet>,
        mut candidates: Vec<ElementSet>,
        mut excluded: Vec<ElementSet>,
    ) -> Result<()> {
        let ctx = self.ctx;
        let n = ctx.arity();
        loop {
            let reach: Vec<ElementSet> = included
                .iter()
                .zip(&candidates)
                .map(|(u, v)| u.union(v))
                .collect();
            let mut forced = false;
            for j in 0..n {
                let mask = ctx.width_mask(j, &reach);
                if excluded[j].iter().any(|e| mask.is_subset(ctx.layer(j, e))) {
                    // every box below this node misses an element that extends it
                    return Ok(());
                }
                let pulled: Vec<usize> = candidates[j]
                    .iter()
                    .filter(|&v| mask.is_subset(ctx.layer(j, v)))
                    .collect();
                for v in pulled {
                    candidates[j].remove(v);
                    included[j].insert(v);
                    forced = true;
                }
            }
            if !forced {
                break;
            }
            restrict_candidates(ctx, &included, &mut candidates);
        }

        let Some(j) = candidates.iter().position(|c| !c.is_empty()) else {
            debug_assert!(ctx.concept_unchecked(&included));
            self.found.push(ComponentTuple::new(included));
            if let Some(limit) = self.limit {
                if self.found.len() > limit {
                    return Err(Error::ConceptLimit { limit });
                }
            }
            return Ok(());
        };
        let v = candidates[j].first().expect("non-empty candidate set");
        candidates[j].remove(v);

        let mut with_v = included.clone();
        with_v[j].insert(v);
        let mut with_v_candidates = candidates.clone();
        restrict_candidates(ctx, &with_v, &mut with_v_candidates);
        self.descend(with_v, with_v_candidates, excluded.clone())?;

        excluded[j].insert(v);
        self.descend(included, candidates, excluded)
    }
}

/// Drops candidates that cannot join the current box.
fn restrict_candidates(ctx: &NContext, included: &[ElementSet], candidates: &mut [ElementSet]) {
    for (j, cand) in candidates.iter_mut().enumerate() {
        let mask = ctx.width_mask(j, included);
        cand.retain(|v| mask.is_subset(ctx.layer(j, v)));
    }
}

/// Index of the largest dimension (first on ties) and the number of
/// subset bits over all the other dimensions.
pub fn oracle_exponent(ctx: &NContext) -> (usize, u32) {
    let sizes: Vec<usize> = ctx.dims().iter().map(|d| d.len()).collect();
    let largest = sizes
        .iter()
        .enumerate()
        .fold(0, |best, (i, &s)| if s > sizes[best] { i } else { best });
    let bits: usize = sizes
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != largest)
        .map(|(_, &s)| s)
        .sum();
    (largest, u32::try_from(bits).unwrap_or(u32::MAX))
}

/// `log2` of the bound `∏_{i≠k} 2^|S_i|` on the number of concepts, where
/// `k` is the largest dimension.
pub fn concept_count_bound_exponent(ctx: &NContext) -> u32 {
    oracle_exponent(ctx).1
}

/// Definition-based enumeration used as a verification oracle. Refuses with
/// [`Error::OracleInfeasible`] when the number of subset combinations
/// exceeds `cap`.
pub fn brute_force_concepts(ctx: &NContext, cap: u64) -> Result<ConceptSet> {
    let (largest, exponent) = oracle_exponent(ctx);
    if exponent >= 64 || (1u64 << exponent) > cap {
        return Err(Error::OracleInfeasible { exponent, cap });
    }
    let n = ctx.arity();
    let sizes: Vec<usize> = ctx.dims().iter().map(|d| d.len()).collect();
    let mut found = Vec::new();
    for code in 0..(1u64 << exponent) {
        let mut rest = code;
        let mut comps = Vec::with_capacity(n);
        for (i, &size) in sizes.iter().enumerate() {
            if i == largest {
                comps.push(ElementSet::empty(size));
                continue;
            }
            comps.push(ElementSet::from_indices(
                size,
                (0..size).filter(|b| rest >> b & 1 == 1),
            ));
            rest >>= size;
        }
        comps[largest] = ctx.height_unchecked(largest, &comps);
        if ctx.concept_unchecked(&comps) {
            found.push(ComponentTuple::new(comps));
        }
    }
    Ok(ConceptSet::new(found))
}
