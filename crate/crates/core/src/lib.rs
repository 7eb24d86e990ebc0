//! Exact combinatorics of tableaux and Gelfand-Tsetlin patterns for the
//! classical types A, B and C.
//!
//! The crate provides
//!
//! - sparse Laurent polynomials with big-integer coefficients and the
//!   hyperoctahedral group acting on them ([`algebra`]);
//! - partitions, semistandard / King symplectic / Sundaram orthogonal
//!   tableaux and their pattern counterparts ([`combinat`]);
//! - the weight-preserving bijections between them ([`bijections`]);
//! - Bender-Knuth involutions of types A, B and C on patterns and tableaux
//!   ([`benderknuth`]);
//! - exhaustive enumeration and the Schur, symplectic and orthogonal
//!   generating functions ([`enumeration`]);
//! - independent cross-checks: alternant characters and detropicalized
//!   Bender-Knuth maps over exact rationals ([`oracles`]);
//! - bounded verification sweeps that drive all of the above ([`verify`]).

pub mod algebra;
pub mod benderknuth;
pub mod bijections;
pub mod combinat;
pub mod enumeration;
pub mod error;
pub mod json;
pub mod oracles;
pub mod render;
pub mod verify;

pub use algebra::{LaurentPolynomial, Monomial, SignedPermutation};
pub use combinat::{AlphabetKind, GTPattern, KingPattern, Letter, OrthogonalPattern, Partition, Tableau};
pub use error::{Error, Result};
