//! Unigraphic degree sequences of radius-one 3-polytopes.
//!
//! A 3-polytope of radius one is an apex joined to every vertex of a rim
//! cycle, with a set of pairwise non-crossing chords drawn across the rim.
//! The crate classifies sequences into the known unigraphic families,
//! builds the canonical realisation of each family, and checks the
//! classification against an exhaustive enumeration of chord diagrams.

pub mod error;
pub mod families;
pub mod apex;
pub mod graph;
pub mod oracle;
pub mod rewrites;
pub mod structure;

pub use error::{Error, Result};
pub use apex::{ChordDegreeSequence, ChordDiagram};
pub use families::{classify, FamilyMatch, FamilySpec, FamilyTag, Scope};
pub use graph::{CanonicalForm, DegreeSequence, PolytopeGraph};
pub use structure::{decompose, Decomposition};
pub use oracle::{enumerate_realizations, is_unigraphic, verify_theorem, RealizationReport, VerificationReport};
pub use rewrites::{apply_rule, find_rule_witness, find_witness, layout, RewriteRule, Witness};
