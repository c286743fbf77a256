//! Exact-arithmetic auditing of curve arrangements in the complex projective plane.
//!
//! Arrangements with smooth components and ordinary singularities are handled
//! through their combinatorics: a component list and the counts `t_r` of
//! `r`-fold points. On top of that data the crate evaluates orbifold Euler
//! numbers, the orbifold Miyaoka-Yau inequality and the Hirzebruch-type
//! inequalities that follow from it, derives t-vectors from explicit rational
//! line arrangements, and searches for t-vectors that no inequality rules out.
//!
//! All arithmetic is exact ([`Rational`] over big integers).

pub mod arrangement;
pub mod catalog;
pub mod error;
pub mod format;
pub mod geometry;
pub mod inequalities;
pub mod orbifold;
pub mod rational;
pub mod search;

pub use arrangement::{choose2, milnor_ordinary, ArrangementClass, ComponentGroup, ComponentSpec, TVector};
pub use catalog::{catalog, CatalogEntry};
pub use error::{Error, Result};
pub use inequalities::{audit, Audit, InequalityId, InequalityKind, InequalityReport};
pub use rational::Rational;
