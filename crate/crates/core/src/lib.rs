//! Finite ≤-hypergroupoids and the crisp/fuzzy substructure correspondences
//! on them, checked by exhaustive enumeration at small orders.
//!
//! A ≤-hypergroupoid is a [`FiniteHypergroupoid`] paired with an arbitrary
//! [`BinaryRelation`]. The [`crisp`] and [`fuzzy`] modules decide ideals,
//! filters and their fuzzy counterparts; [`theorem`] checks that the two
//! sides correspond over whole domains produced by [`enumeration`];
//! [`textio`] reads and writes the line-oriented structure and report formats.

pub mod crisp;
pub mod enumeration;
pub mod error;
pub mod fuzzy;
pub mod structures;
pub mod textio;
pub mod theorem;

pub use crisp::{FilterConditionProfile, IdealSide};
pub use error::{EnumerationError, GradeError, PredicateError, SearchError, StructureError};
pub use fuzzy::{FuzzySubset, Grade};
pub use structures::{
    relation_diagnostics, BinaryRelation, Carrier, CrispSubset, ElementId, FiniteHypergroupoid,
    RelationDiagnostics,
};
pub use theorem::{Relaxation, TheoremId, Verdict, VerifyDomain, Witness};
