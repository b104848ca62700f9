//! Homological obstructions to contact embeddings and fillings.
//!
//! [`intlab`] does exact integer linear algebra. [`brieskorn`] builds Seifert
//! and intersection forms of Brieskorn links. [`bundles`] and [`fillings`]
//! work with graded Betti profiles. Verdicts carry a trace whose steps cite
//! entries of [`cite::TABLE`].

pub mod betti;
pub mod brieskorn;
pub mod bundles;
pub mod cite;
pub mod error;
pub mod fillings;
pub mod intlab;
pub mod verdict;

pub use betti::{Field, GradedBetti};
pub use error::{Error, Result};
pub use intlab::IntMatrix;
pub use verdict::{Status, TraceStep, Verdict};
