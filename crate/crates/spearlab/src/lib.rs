//! spearlab models finite-dimensional real normed spaces whose unit balls
//! are symmetric polytopes, entirely in exact rational arithmetic. On top of
//! that kernel it decides, with re-checkable certificates, which unit
//! vectors are spear vectors, which finite sets are spear sets, and which
//! norm-one operators are lush / spear / alternative-Daugavet, and it
//! computes numerical ranges, radii and indices.
//!
//! Every exact decider is paired with an independent floating-point
//! sampling oracle in [`oracle`]; the oracles gate regressions but never
//! override certificates.
//!
//! Start with the runnable examples (`cargo run --example space_tour`), or
//! with [`spaces::fixture`] and [`analysis::decide_operator`].

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exactgeom;
pub mod operators;
pub mod oracle;
pub mod rational;
pub mod spaces;
pub mod speartest;
pub mod wire;
pub mod workspace;

pub use error::{Error, Result};
pub use rational::{rat, rat_int, RatMatrix, RatVector, Rational};
