//! The quasi-orders `≲_i` (inclusion of i-th components), the n-ordered-set
//! axioms, and per-dimension order diagrams.

use crate::context::{ComponentTuple, NContext};
use crate::error::{Error, Result};
use crate::introducer::{introducers, IntroducerRecord};
use crate::set::ElementSet;

/// Anything that carries a concept tuple, optionally with introduction
/// annotations.
pub trait AsConcept {
    fn concept(&self) -> &ComponentTuple;

    fn introduced(&self) -> Option<&[ElementSet]> {
        None
    }
}

impl AsConcept for ComponentTuple {
    fn concept(&self) -> &ComponentTuple {
        self
    }
}

impl AsConcept for IntroducerRecord {
    fn concept(&self) -> &ComponentTuple {
        IntroducerRecord::concept(self)
    }

    fn introduced(&self) -> Option<&[ElementSet]> {
        Some(self.introduces())
    }
}

impl<T: AsConcept> AsConcept for &T {
    fn concept(&self) -> &ComponentTuple {
        (*self).concept()
    }

    fn introduced(&self) -> Option<&[ElementSet]> {
        (*self).introduced()
    }
}

/// `a ≲_i b`, i.e. `a_i ⊆ b_i`.
pub fn leq(a: &ComponentTuple, b: &ComponentTuple, dimension: usize) -> Result<bool> {
    let arity = a.arity().min(b.arity());
    if dimension >= arity {
        return Err(Error::InvalidDimension {
            index: dimension,
            arity,
        });
    }
    Ok(a.component(dimension).is_subset(b.component(dimension)))
}

/// A violated antiordinal dependency: `first ≲_i second` for every `i` other
/// than `dimension`, but not `second ≲_dimension first`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiordinalViolation {
    pub first: usize,
    pub second: usize,
    pub dimension: usize,
}

/// Outcome of [`check_n_ordered`]. Pair entries are positions in the
/// checked slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub uniqueness_ok: bool,
    /// Distinct positions `(a, b)`, `a < b`, equivalent in every dimension.
    pub uniqueness_violations: Vec<(usize, usize)>,
    pub antiordinal_ok: bool,
    pub antiordinal_violations: Vec<AntiordinalViolation>,
    /// Ordered pairs of distinct positions with `a ≲_i b`, per dimension.
    pub per_dimension_relation_sizes: Vec<usize>,
    /// Unordered pairs comparable in some dimension that have no `i ≠ j`
    /// with `a ≲_i b` and `b ≲_j a`. Such pairs may still satisfy the
    /// antiordinal dependency; this probe is informational.
    pub sufficient_condition_misses: Vec<(usize, usize)>,
}

impl OrderReport {
    pub fn is_n_ordered(&self) -> bool {
        self.uniqueness_ok && self.antiordinal_ok
    }
}

/// Checks the uniqueness condition and the antiordinal dependency of
/// `(items, ≲_1, …, ≲_n)`.
pub fn check_n_ordered<T: AsConcept>(items: &[T]) -> OrderReport {
    let n = items.first().map_or(0, |t| t.concept().arity());
    debug_assert!(items.iter().all(|t| t.concept().arity() == n));

    let mut uniqueness_violations = Vec::new();
    let mut antiordinal_violations = Vec::new();
    let mut sufficient_condition_misses = Vec::new();
    let mut sizes = vec![0; n];

    for (a, ta) in items.iter().enumerate() {
        let ca = ta.concept().components();
        for (b, tb) in items.iter().enumerate() {
            if a == b {
                continue;
            }
            let cb = tb.concept().components();
            let below: Vec<bool> = (0..n).map(|i| ca[i].is_subset(&cb[i])).collect();
            let above: Vec<bool> = (0..n).map(|i| cb[i].is_subset(&ca[i])).collect();
            for (i, &le) in below.iter().enumerate() {
                sizes[i] += usize::from(le);
            }
            for (j, &ge) in above.iter().enumerate() {
                let premise = (0..n).filter(|&i| i != j).all(|i| below[i]);
                if premise && !ge {
                    antiordinal_violations.push(AntiordinalViolation {
                        first: a,
                        second: b,
                        dimension: j,
                    });
                }
            }
            if a < b {
                if ca == cb {
                    uniqueness_violations.push((a, b));
                }
                let comparable = below.iter().chain(&above).any(|&x| x);
                let witnessed = (0..n).any(|i| below[i] && (0..n).any(|j| j != i && above[j]));
                if comparable && !witnessed {
                    sufficient_condition_misses.push((a, b));
                }
            }
        }
    }

    OrderReport {
        uniqueness_ok: uniqueness_violations.is_empty(),
        uniqueness_violations,
        antiordinal_ok: antiordinal_violations.is_empty(),
        antiordinal_violations,
        per_dimension_relation_sizes: sizes,
        sufficient_condition_misses,
    }
}

/// One `∼_i` equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramNode<T> {
    /// The shared i-th component.
    pub component: ElementSet,
    pub members: Vec<T>,
}

/// The order `≲_i` over a set of concepts, drawn on its `∼_i` classes.
/// Nodes are sorted by component; edges `(lower, upper)` are the covering
/// pairs of strict component inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionDiagram<T> {
    pub dimension: usize,
    pub nodes: Vec<DiagramNode<T>>,
    pub edges: Vec<(usize, usize)>,
}

impl<T> DimensionDiagram<T> {
    /// Whether `upper` is reachable from `lower` along edges (reflexive).
    pub fn reaches(&self, lower: usize, upper: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![lower];
        while let Some(v) = stack.pop() {
            if v == upper {
                return true;
            }
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == v).map(|e| e.1));
        }
        false
    }
}

pub fn dimension_diagram<T: AsConcept + Clone>(
    items: &[T],
    dimension: usize,
) -> Result<DimensionDiagram<T>> {
    if let Some(bad) = items.iter().find(|t| dimension >= t.concept().arity()) {
        return Err(Error::InvalidDimension {
            index: dimension,
            arity: bad.concept().arity(),
        });
    }
    let mut nodes: Vec<DiagramNode<T>> = Vec::new();
    let mut order: Vec<&T> = items.iter().collect();
    order.sort_by(|a, b| {
        a.concept()
            .component(dimension)
            .cmp(b.concept().component(dimension))
            .then_with(|| a.concept().cmp(b.concept()))
    });
    for item in order {
        let comp = item.concept().component(dimension);
        match nodes.last_mut() {
            Some(node) if &node.component == comp => node.members.push(item.clone()),
            _ => nodes.push(DiagramNode {
                component: comp.clone(),
                members: vec![item.clone()],
            }),
        }
    }

    let below = |a: usize, b: usize| a != b && nodes[a].component.is_subset(&nodes[b].component);
    let mut edges = Vec::new();
    for a in 0..nodes.len() {
        for b in 0..nodes.len() {
            if below(a, b) && !(0..nodes.len()).any(|c| below(a, c) && below(c, b)) {
                edges.push((a, b));
            }
        }
    }
    Ok(DimensionDiagram {
        dimension,
        nodes,
        edges,
    })
}

/// The Galois sub-hierarchy of a 2-context: its introducer concepts ordered
/// by extent inclusion.
pub fn gsh_2d(ctx: &NContext) -> Result<DimensionDiagram<IntroducerRecord>> {
    if ctx.arity() != 2 {
        return Err(Error::Arity(format!(
            "the Galois sub-hierarchy needs a 2-context, got arity {}",
            ctx.arity()
        )));
    }
    let set = introducers(ctx)?;
    dimension_diagram(set.records(), 0)
}
