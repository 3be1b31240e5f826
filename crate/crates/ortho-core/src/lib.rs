//! Exact order-theoretic computations on finite-dimensional vector
//! lattices over the rationals: orthosymmetric products with verified
//! axioms, neutral parts and quotients, multiplication operators,
//! Riesz–Kantorovich absolute values, adjoints, and operator classifiers.
//!
//! Everything decisive runs on arbitrary-precision rationals, so the
//! algebraic identities the library checks are decided exactly rather
//! than up to a tolerance.
//!
//! ```
//! use ortho_core::fixtures;
//! use ortho_core::operator::{adjoint, AdjointResult};
//! use ortho_core::RegularOperator;
//!
//! // the dot product on Q^2, axioms already verified
//! let p = fixtures::euclidean(2);
//!
//! // a positive operator and its absolute value
//! let t = RegularOperator::from_matrix(ortho_core::RatMatrix::from_i64_rows(&[
//!     &[1, -2],
//!     &[0, 3],
//! ]));
//! assert_eq!(
//!     t.rk_abs()?.matrix(),
//!     &ortho_core::RatMatrix::from_i64_rows(&[&[1, 2], &[0, 3]]),
//! );
//!
//! // under dot products the adjoint is the transpose, and it is unique
//! match adjoint(&p, &p, &t)? {
//!     AdjointResult::Unique(s) => assert_eq!(s.matrix(), &t.matrix().transpose()),
//!     other => panic!("expected a unique adjoint, got {}", other.kind()),
//! }
//! # Ok::<(), ortho_core::Error>(())
//! ```

pub mod demos;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod instance;
pub mod lattice;
pub mod matrix;
pub mod operator;
pub mod product;
pub mod rational;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use lattice::{Element, LatticeSpace, OrderKind};
pub use matrix::{solve_linear, LinearSolution, RatMatrix};
pub use operator::{
    abs_mult_check, adjoint, check_riesz, classify, phi, AdjointResult, ClassificationReport,
    RegularOperator,
};
pub use product::{NeutralPart, OrthoProduct, QuotientSpace, VerificationReport};
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use report::{CheckResult, Report, Verdict};
