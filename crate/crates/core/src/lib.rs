//! n-dimensional formal contexts and their introducer concepts.
//!
//! An [`NContext`] is an n-ary relation over `n` finite dimensions. Its
//! n-concepts are the maximal boxes full of crosses; they are enumerated by
//! [`enumerate_concepts`] and cross-checked by [`brute_force_concepts`].
//!
//! The introducer concepts of an element `x` of dimension `i` are the concepts
//! containing `x` in dimension `i` whose remaining components are maximal.
//! [`introducer_dim`] computes them for every element of one dimension by
//! enumerating the concepts of each slice `C_x` and extending them back into
//! the full context; [`introducers`] unions that over every dimension. For
//! two-dimensional contexts this is the classical Galois sub-hierarchy
//! (AOC-poset), see [`gsh_2d`].
//!
//! The [`order`] module checks the n-ordered-set axioms and builds
//! per-dimension order diagrams; [`io`] reads and writes the file formats
//! used by the `ngsh` command-line tool.

pub mod context;
pub mod enumerate;
pub mod error;
pub mod introducer;
pub mod io;
pub mod order;
pub mod set;

pub use context::{ComponentTuple, Dimension, NContext, SliceOrigin};
pub use enumerate::{
    brute_force_concepts, concept_count_bound_exponent, enumerate_concepts,
    enumerate_concepts_with, oracle_exponent, ConceptSet, EnumerateOptions, DEFAULT_ORACLE_CAP,
};
pub use error::{Error, Result};
pub use introducer::{
    introducer_dim, introducer_dim_with, introducer_oracle, introducers, introducers_with,
    nontrivial_filter, IntroducerOptions, IntroducerRecord, IntroducerSet,
};
pub use order::{
    check_n_ordered, dimension_diagram, gsh_2d, leq, AsConcept, DiagramNode, DimensionDiagram,
    OrderReport,
};
pub use set::ElementSet;
