//! Immutable n-contexts: dimensions, the n-ary relation, slicing and the
//! box/concept tests everything else is built on.
//!
//! Besides the set of relation tuples, a context keeps one bit row per
//! element of every dimension (its "layer"). The layer of `x ∈ S_i` has one
//! bit per cell of the product of the other dimensions, so "does the box
//! `{x} × ∏_{j≠i} X_j` lie in the relation" is a single bit-row containment
//! test against the mask of `∏_{j≠i} X_j`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// One dimension of a context: a name plus an ordered list of distinct
/// element labels. The order is fixed and defines canonical ordering.
#[derive(Clone)]
pub struct Dimension {
    name: String,
    elements: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Dimension {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let name = name.into();
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::with_capacity(elements.len());
        for (i, label) in elements.iter().enumerate() {
            if lookup.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateElement {
                    dimension: name,
                    label: label.clone(),
                });
            }
        }
        Ok(Dimension {
            name,
            elements,
            lookup,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.elements[index]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }
}

impl PartialEq for Dimension {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.elements == other.elements
    }
}

impl Eq for Dimension {}

impl fmt::Debug for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.name, self.elements)
    }
}

/// Where a sliced context came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceOrigin {
    /// Zero-based dimension index in the parent context.
    pub dimension: usize,
    pub dimension_name: String,
    pub element: usize,
    pub label: String,
}

/// An n-tuple of element subsets, one per dimension. Not necessarily a
/// concept. Equality and ordering are canonical: components are compared
/// in dimension order, each as a sorted index list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentTuple {
    components: Vec<ElementSet>,
}

impl ComponentTuple {
    pub fn new(components: Vec<ElementSet>) -> Self {
        ComponentTuple { components }
    }

    /// Rebuilds a full tuple from a width (the components of every dimension
    /// except `dimension`, in order) and a height for `dimension`.
    pub fn from_width(dimension: usize, width: &[ElementSet], height: ElementSet) -> Self {
        assert!(dimension <= width.len());
        let mut components = Vec::with_capacity(width.len() + 1);
        components.extend_from_slice(&width[..dimension]);
        components.push(height);
        components.extend_from_slice(&width[dimension..]);
        ComponentTuple { components }
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[ElementSet] {
        &self.components
    }

    pub fn component(&self, dimension: usize) -> &ElementSet {
        &self.components[dimension]
    }

    /// All components except `dimension`.
    pub fn width(&self, dimension: usize) -> Vec<ElementSet> {
        self.components
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != dimension)
            .map(|(_, c)| c.clone())
            .collect()
    }

    pub fn has_empty_component(&self) -> bool {
        self.components.iter().any(ElementSet::is_empty)
    }
}

impl fmt::Debug for ComponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = f.debug_tuple("");
        for c in &self.components {
            t.field(c);
        }
        t.finish()
    }
}

/// An n-context `(S_1, …, S_n, R)`.
#[derive(Clone)]
pub struct NContext {
    dims: Vec<Dimension>,
    relation: BTreeSet<Vec<usize>>,
    // strides[i][j]: weight of dimension j in the flattened cell index of
    // the layers of dimension i (0 for j == i).
    strides: Vec<Vec<usize>>,
    cells: Vec<usize>,
    layers: Vec<Vec<FixedBitSet>>,
    provenance: Vec<SliceOrigin>,
}

impl NContext {
    /// Builds a context from index tuples. Duplicate tuples collapse.
    pub fn new(dims: Vec<Dimension>, tuples: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::Arity(
                "a context needs at least one dimension".into(),
            ));
        }
        let mut relation = BTreeSet::new();
        for t in tuples {
            if t.len() != n {
                return Err(Error::MalformedTuple(format!(
                    "tuple of length {} in a context of arity {n}",
                    t.len()
                )));
            }
            for (d, &e) in dims.iter().zip(&t) {
                if e >= d.len() {
                    return Err(Error::ElementOutOfRange {
                        dimension: d.name.clone(),
                        index: e,
                    });
                }
            }
            relation.insert(t);
        }

        let mut strides = vec![vec![0; n]; n];
        let mut cells = vec![1; n];
        for i in 0..n {
            let mut weight = 1;
            for j in (0..n).rev().filter(|&j| j != i) {
                strides[i][j] = weight;
                weight *= dims[j].len();
            }
            cells[i] = weight;
        }

        let mut layers: Vec<Vec<FixedBitSet>> = (0..n)
            .map(|i| vec![FixedBitSet::with_capacity(cells[i]); dims[i].len()])
            .collect();
        for t in &relation {
            for i in 0..n {
                let offset: usize = t.iter().zip(&strides[i]).map(|(e, s)| e * s).sum();
                layers[i][t[i]].insert(offset);
            }
        }

        Ok(NContext {
            dims,
            relation,
            strides,
            cells,
            layers,
            provenance: Vec::new(),
        })
    }

    /// Builds a context from label tuples resolved against `dims`.
    pub fn from_labels<S: AsRef<str>>(
        dims: Vec<Dimension>,
        tuples: impl IntoIterator<Item = Vec<S>>,
    ) -> Result<Self> {
        let mut resolved = Vec::new();
        for t in tuples {
            if t.len() != dims.len() {
                return Err(Error::MalformedTuple(format!(
                    "tuple of length {} in a context of arity {}",
                    t.len(),
                    dims.len()
                )));
            }
            let mut row = Vec::with_capacity(t.len());
            for (d, label) in dims.iter().zip(&t) {
                row.push(
                    d.position(label.as_ref())
                        .ok_or_else(|| Error::UnknownElement {
                            dimension: d.name.clone(),
                            label: label.as_ref().to_string(),
                        })?,
                );
            }
            resolved.push(row);
        }
        NContext::new(dims, resolved)
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[Dimension] {
        &self.dims
    }

    pub fn dim(&self, index: usize) -> Result<&Dimension> {
        self.dims.get(index).ok_or(Error::InvalidDimension {
            index,
            arity: self.arity(),
        })
    }

    pub fn relation(&self) -> &BTreeSet<Vec<usize>> {
        &self.relation
    }

    /// Number of crosses.
    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        self.relation.contains(tuple)
    }

    /// Slices this context has been cut from, outermost first.
    pub fn provenance(&self) -> &[SliceOrigin] {
        &self.provenance
    }

    /// Resolves a dimension selector: a dimension name, or a 1-based index.
    pub fn dimension_index(&self, selector: &str) -> Result<usize> {
        if let Some(i) = self.dims.iter().position(|d| d.name == selector) {
            return Ok(i);
        }
        match selector.parse::<usize>() {
            Ok(k) if (1..=self.arity()).contains(&k) => Ok(k - 1),
            Ok(k) => Err(Error::InvalidDimension {
                index: k,
                arity: self.arity(),
            }),
            Err(_) => Err(Error::UnknownDimensionName(selector.to_string())),
        }
    }

    pub fn element(&self, dimension: usize, label: &str) -> Result<usize> {
        let d = self.dim(dimension)?;
        d.position(label).ok_or_else(|| Error::UnknownElement {
            dimension: d.name.clone(),
            label: label.to_string(),
        })
    }

    /// Builds a tuple from per-dimension label lists.
    pub fn tuple<S: AsRef<str>>(&self, components: &[&[S]]) -> Result<ComponentTuple> {
        if components.len() != self.arity() {
            return Err(Error::MalformedTuple(format!(
                "{} components for a context of arity {}",
                components.len(),
                self.arity()
            )));
        }
        let mut out = Vec::with_capacity(components.len());
        for (i, labels) in components.iter().enumerate() {
            let mut set = ElementSet::empty(self.dims[i].len());
            for label in labels.iter() {
                set.insert(self.element(i, label.as_ref())?);
            }
            out.push(set);
        }
        Ok(ComponentTuple::new(out))
    }

    pub fn check_tuple(&self, tuple: &ComponentTuple) -> Result<()> {
        if tuple.arity() != self.arity() {
            return Err(Error::MalformedTuple(format!(
                "{} components for a context of arity {}",
                tuple.arity(),
                self.arity()
            )));
        }
        for (d, c) in self.dims.iter().zip(tuple.components()) {
            if c.universe() != d.len() {
                return Err(Error::MalformedTuple(format!(
                    "component over {} elements for dimension `{}` of size {}",
                    c.universe(),
                    d.name,
                    d.len()
                )));
            }
        }
        Ok(())
    }

    /// The (n−1)-context `C_x` obtained by fixing element `x` of dimension
    /// `dimension`.
    pub fn slice(&self, dimension: usize, x: usize) -> Result<NContext> {
        let d = self.dim(dimension)?;
        if self.arity() == 1 {
            return Err(Error::Arity("cannot slice a 1-context".into()));
        }
        if x >= d.len() {
            return Err(Error::ElementOutOfRange {
                dimension: d.name.clone(),
                index: x,
            });
        }
        let dims: Vec<Dimension> = self
            .dims
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != dimension)
            .map(|(_, d)| d.clone())
            .collect();
        let tuples = self.relation.iter().filter(|t| t[dimension] == x).map(|t| {
            let mut t = t.clone();
            t.remove(dimension);
            t
        });
        let mut sliced = NContext::new(dims, tuples)?;
        sliced.provenance = self.provenance.clone();
        sliced.provenance.push(SliceOrigin {
            dimension,
            dimension_name: d.name.clone(),
            element: x,
            label: d.label(x).to_string(),
        });
        Ok(sliced)
    }

    pub fn slice_label(&self, dimension: usize, label: &str) -> Result<NContext> {
        let x = self.element(dimension, label)?;
        self.slice(dimension, x)
    }

    /// Whether the whole product of the tuple's components lies in the
    /// relation. Vacuously true when any component is empty.
    pub fn is_full_box(&self, tuple: &ComponentTuple) -> Result<bool> {
        self.check_tuple(tuple)?;
        Ok(self.full_box_unchecked(tuple.components()))
    }

    /// Whether the tuple is an n-concept: a full box that cannot be extended
    /// by any single element in any dimension.
    pub fn is_concept(&self, tuple: &ComponentTuple) -> Result<bool> {
        self.check_tuple(tuple)?;
        Ok(self.concept_unchecked(tuple.components()))
    }

    /// Derivation operator of a 2-context: the elements of the other side
    /// related to every element of `set`.
    pub fn derive(&self, side: usize, set: &ElementSet) -> Result<ElementSet> {
        if self.arity() != 2 {
            return Err(Error::Arity(format!(
                "derivation needs a 2-context, got arity {}",
                self.arity()
            )));
        }
        let d = self.dim(side)?;
        if set.universe() != d.len() {
            return Err(Error::MalformedTuple(format!(
                "set over {} elements for dimension `{}` of size {}",
                set.universe(),
                d.name,
                d.len()
            )));
        }
        let other = 1 - side;
        let mut comps = vec![set.clone(), set.clone()];
        comps[other] = ElementSet::empty(self.dims[other].len());
        Ok(self.height_unchecked(other, &comps))
    }

    /// `{y ∈ S_i | ∏_{j≠i} X_j × {y} ⊆ R}` for a width given as the
    /// components of every dimension except `dimension`, in order.
    pub fn extend_height(&self, dimension: usize, width: &[ElementSet]) -> Result<ElementSet> {
        self.dim(dimension)?;
        if width.len() + 1 != self.arity() {
            return Err(Error::MalformedTuple(format!(
                "width of {} components for a context of arity {}",
                width.len(),
                self.arity()
            )));
        }
        let full = ComponentTuple::from_width(
            dimension,
            width,
            ElementSet::empty(self.dims[dimension].len()),
        );
        self.check_tuple(&full)?;
        Ok(self.height_unchecked(dimension, full.components()))
    }

    pub(crate) fn full_box_unchecked(&self, comps: &[ElementSet]) -> bool {
        if comps.iter().any(ElementSet::is_empty) {
            return true;
        }
        let mask = self.width_mask(0, comps);
        comps[0].iter().all(|x| mask.is_subset(&self.layers[0][x]))
    }

    pub(crate) fn concept_unchecked(&self, comps: &[ElementSet]) -> bool {
        self.full_box_unchecked(comps)
            && (0..self.arity()).all(|i| self.height_unchecked(i, comps) == comps[i])
    }

    /// Elements `y` of `dimension` whose layer contains the product of the
    /// other components of `comps` (`comps[dimension]` is ignored).
    pub(crate) fn height_unchecked(&self, dimension: usize, comps: &[ElementSet]) -> ElementSet {
        let mask = self.width_mask(dimension, comps);
        let size = self.dims[dimension].len();
        ElementSet::from_indices(
            size,
            (0..size).filter(|&y| mask.is_subset(&self.layers[dimension][y])),
        )
    }

    /// Bit mask over the layer cells of `dimension` covering the product of
    /// the other components of `comps`.
    pub(crate) fn width_mask(&self, dimension: usize, comps: &[ElementSet]) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.cells[dimension]);
        let mut offsets = vec![0usize];
        for (j, comp) in comps.iter().enumerate() {
            if j == dimension {
                continue;
            }
            if comp.is_empty() {
                return mask;
            }
            let stride = self.strides[dimension][j];
            offsets = offsets
                .iter()
                .flat_map(|&o| comp.iter().map(move |e| o + e * stride))
                .collect();
        }
        for o in offsets {
            mask.insert(o);
        }
        mask
    }

    pub(crate) fn layer(&self, dimension: usize, x: usize) -> &FixedBitSet {
        &self.layers[dimension][x]
    }

    /// Renders a tuple with dimension-order labels, e.g. `(αβ, 13, a)`.
    /// Elements are concatenated when every label of the dimension is a
    /// single character and space-separated otherwise; `∅` marks an empty
    /// component.
    pub fn format_tuple(&self, tuple: &ComponentTuple) -> String {
        let parts: Vec<String> = tuple
            .components()
            .iter()
            .zip(&self.dims)
            .map(|(c, d)| self.format_component(d, c))
            .collect();
        format!("({})", parts.join(", "))
    }

    pub(crate) fn format_component(&self, d: &Dimension, set: &ElementSet) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        let compact = d.elements.iter().all(|l| l.chars().count() == 1);
        let labels: Vec<&str> = set.iter().map(|e| d.label(e)).collect();
        labels.join(if compact { "" } else { " " })
    }

    pub fn labels(&self, dimension: usize, set: &ElementSet) -> Vec<String> {
        self.labels_of(&self.dims[dimension], set)
    }

    pub(crate) fn labels_of(&self, d: &Dimension, set: &ElementSet) -> Vec<String> {
        set.iter().map(|e| d.label(e).to_string()).collect()
    }
}

impl PartialEq for NContext {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.relation == other.relation
    }
}

impl Eq for NContext {}

impl fmt::Debug for NContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NContext")
            .field("dims", &self.dims)
            .field("relation", &self.relation)
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The 3×3 object/attribute context with crosses 1ab, 2bc, 3ac.
    pub fn triangle() -> NContext {
        let dims = vec![
            Dimension::new("objects", ["1", "2", "3"]).unwrap(),
            Dimension::new("attributes", ["a", "b", "c"]).unwrap(),
        ];
        NContext::from_labels(
            dims,
            [
                ["1", "a"],
                ["1", "b"],
                ["2", "b"],
                ["2", "c"],
                ["3", "a"],
                ["3", "c"],
            ]
            .map(Vec::from),
        )
        .unwrap()
    }

    /// The 2×3×3 context with layers α = {1a, 1b, 3a} and β = {1a, 2a, 3a, 3c}.
    pub fn triadic() -> NContext {
        let dims = vec![
            Dimension::new("dim1", ["α", "β"]).unwrap(),
            Dimension::new("dim2", ["1", "2", "3"]).unwrap(),
            Dimension::new("dim3", ["a", "b", "c"]).unwrap(),
        ];
        NContext::from_labels(
            dims,
            [
                ["α", "1", "a"],
                ["α", "1", "b"],
                ["α", "3", "a"],
                ["β", "1", "a"],
                ["β", "2", "a"],
                ["β", "3", "a"],
                ["β", "3", "c"],
            ]
            .map(Vec::from),
        )
        .unwrap()
    }

    /// Splits a compact component like "αβ" into single-character labels.
    pub fn chars(s: &str) -> Vec<String> {
        s.chars().map(String::from).collect()
    }

    pub fn t(ctx: &NContext, parts: &[&str]) -> ComponentTuple {
        let owned: Vec<Vec<String>> = parts.iter().map(|p| chars(p)).collect();
        let refs: Vec<&[String]> = owned.iter().map(Vec::as_slice).collect();
        ctx.tuple(&refs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn labelled_relation(ctx: &NContext) -> BTreeSet<Vec<String>> {
        ctx.relation()
            .iter()
            .map(|t| {
                t.iter()
                    .enumerate()
                    .map(|(i, &e)| ctx.dims()[i].label(e).to_string())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn slice_triadic_alpha_layer() {
        let ctx = triadic();
        let alpha = ctx.slice_label(0, "α").unwrap();
        assert_eq!(alpha.arity(), 2);
        assert_eq!(alpha.dims()[0].elements(), ["1", "2", "3"]);
        assert_eq!(alpha.dims()[1].elements(), ["a", "b", "c"]);
        let expected: BTreeSet<Vec<String>> = [["1", "a"], ["1", "b"], ["3", "a"]]
            .iter()
            .map(|t| t.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(labelled_relation(&alpha), expected);
        assert_eq!(alpha.provenance()[0].label, "α");
        assert_eq!(alpha.provenance()[0].dimension, 0);
    }

    #[test]
    fn slice_triangle_object_gives_its_intent() {
        let ctx = triangle();
        let one = ctx.slice_label(0, "1").unwrap();
        assert_eq!(one.arity(), 1);
        let expected: BTreeSet<Vec<String>> = [vec!["a".to_string()], vec!["b".to_string()]]
            .into_iter()
            .collect();
        assert_eq!(labelled_relation(&one), expected);
    }

    #[test]
    fn slice_empty_layer() {
        let dims = vec![
            Dimension::new("d1", ["x", "y"]).unwrap(),
            Dimension::new("d2", ["p", "q"]).unwrap(),
            Dimension::new("d3", ["u"]).unwrap(),
        ];
        let ctx = NContext::from_labels(dims, [vec!["x", "p", "u"]]).unwrap();
        let s = ctx.slice_label(0, "y").unwrap();
        assert!(s.is_empty());
        assert_eq!(s.arity(), 2);
    }

    #[test]
    fn slice_errors() {
        let ctx = triadic();
        assert!(matches!(
            ctx.slice(3, 0),
            Err(Error::InvalidDimension { .. })
        ));
        assert!(matches!(
            ctx.slice(0, 7),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert!(matches!(
            ctx.slice_label(0, "γ"),
            Err(Error::UnknownElement { .. })
        ));
        let one = triangle().slice(0, 0).unwrap();
        assert!(matches!(one.slice(0, 0), Err(Error::Arity(_))));
    }

    #[test]
    fn slice_preserves_cross_count() {
        let ctx = triadic();
        for i in 0..ctx.arity() {
            for x in 0..ctx.dims()[i].len() {
                let expected = ctx.relation().iter().filter(|t| t[i] == x).count();
                assert_eq!(ctx.slice(i, x).unwrap().len(), expected);
            }
        }
    }

    #[test]
    fn full_box_examples() {
        let ctx = triadic();
        assert!(ctx.is_full_box(&t(&ctx, &["αβ", "13", "a"])).unwrap());
        assert!(!ctx.is_full_box(&t(&ctx, &["αβ", "123", "a"])).unwrap());
        assert!(ctx.is_full_box(&t(&ctx, &["", "123", "abc"])).unwrap());
    }

    #[test]
    fn full_box_rejects_malformed() {
        let ctx = triadic();
        let bad = ComponentTuple::new(vec![ElementSet::empty(2), ElementSet::empty(3)]);
        assert!(matches!(
            ctx.is_full_box(&bad),
            Err(Error::MalformedTuple(_))
        ));
        let wrong_universe = ComponentTuple::new(vec![
            ElementSet::empty(2),
            ElementSet::empty(4),
            ElementSet::empty(3),
        ]);
        assert!(ctx.is_full_box(&wrong_universe).is_err());
    }

    #[test]
    fn concept_examples() {
        let ctx = triadic();
        assert!(ctx.is_concept(&t(&ctx, &["αβ", "13", "a"])).unwrap());
        assert!(!ctx.is_concept(&t(&ctx, &["β", "13", "a"])).unwrap());
        assert!(ctx.is_concept(&t(&ctx, &["", "123", "abc"])).unwrap());
        // (β, 13, a) extends by α in dim 1 and by 2 in dim 2.
        let partial = t(&ctx, &["β", "13", "a"]);
        assert_eq!(
            ctx.height_unchecked(0, partial.components()).to_vec(),
            vec![0, 1]
        );
        assert_eq!(
            ctx.height_unchecked(1, partial.components()).to_vec(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn derive_examples() {
        let ctx = triangle();
        let one = ElementSet::from_indices(3, [0]);
        assert_eq!(ctx.derive(0, &one).unwrap().to_vec(), vec![0, 1]);
        let b = ElementSet::from_indices(3, [1]);
        assert_eq!(ctx.derive(1, &b).unwrap().to_vec(), vec![0, 1]);
        assert!(ctx.derive(0, &ElementSet::empty(3)).unwrap().is_full());
        assert!(ctx.derive(1, &ElementSet::empty(3)).unwrap().is_full());
    }

    #[test]
    fn derive_errors() {
        let ctx = triangle();
        assert!(ctx.derive(0, &ElementSet::empty(5)).is_err());
        assert!(ctx.derive(2, &ElementSet::empty(3)).is_err());
        assert!(matches!(
            triadic().derive(0, &ElementSet::empty(2)),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn double_derivation_is_idempotent() {
        let ctx = triangle();
        for bits in 0..8usize {
            let x = ElementSet::from_indices(3, (0..3).filter(|b| bits >> b & 1 == 1));
            let x1 = ctx.derive(0, &x).unwrap();
            let x11 = ctx.derive(1, &x1).unwrap();
            let x111 = ctx.derive(0, &x11).unwrap();
            assert_eq!(x111, x1);
            assert!(x.is_subset(&x11));
        }
    }

    #[test]
    fn extend_height_examples() {
        let ctx = triadic();
        let w = |a: &str, b: &str| {
            let tt = t(&ctx, &["", a, b]);
            tt.width(0)
        };
        assert_eq!(
            ctx.extend_height(0, &w("13", "a")).unwrap().to_vec(),
            vec![0, 1]
        );
        assert_eq!(
            ctx.extend_height(0, &w("1", "ab")).unwrap().to_vec(),
            vec![0]
        );
        assert_eq!(
            ctx.extend_height(0, &w("123", "")).unwrap().to_vec(),
            vec![0, 1]
        );
        assert!(matches!(
            ctx.extend_height(5, &w("1", "a")),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn dimension_selectors() {
        let ctx = triangle();
        assert_eq!(ctx.dimension_index("attributes").unwrap(), 1);
        assert_eq!(ctx.dimension_index("1").unwrap(), 0);
        assert!(ctx.dimension_index("0").is_err());
        assert!(ctx.dimension_index("3").is_err());
        assert!(ctx.dimension_index("colour").is_err());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Dimension::new("d", ["a", "a"]).is_err());
        assert!(NContext::new(vec![], Vec::<Vec<usize>>::new()).is_err());
        let dims = vec![Dimension::new("d", ["a"]).unwrap()];
        assert!(NContext::new(dims.clone(), [vec![1]]).is_err());
        assert!(NContext::new(dims, [vec![0, 0]]).is_err());
    }

    #[test]
    fn duplicate_tuples_collapse() {
        let dims = vec![Dimension::new("d", ["a", "b"]).unwrap()];
        let ctx = NContext::new(dims, [vec![0], vec![0], vec![1]]).unwrap();
        assert_eq!(ctx.len(), 2);
    }

    #[test]
    fn format_tuple_compact_and_spaced() {
        let ctx = triadic();
        assert_eq!(
            ctx.format_tuple(&t(&ctx, &["αβ", "13", "a"])),
            "(αβ, 13, a)"
        );
        assert_eq!(
            ctx.format_tuple(&t(&ctx, &["αβ", "", "abc"])),
            "(αβ, ∅, abc)"
        );
        let dims = vec![
            Dimension::new("people", ["ann", "bob"]).unwrap(),
            Dimension::new("tags", ["x"]).unwrap(),
        ];
        let ctx = NContext::from_labels(dims, [vec!["ann", "x"]]).unwrap();
        let tt = ctx.tuple(&[&["ann", "bob"][..], &["x"][..]]).unwrap();
        assert_eq!(ctx.format_tuple(&tt), "(ann bob, x)");
    }
}
