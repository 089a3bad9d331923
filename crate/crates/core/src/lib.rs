//! Polynomial identities with involution on finite-dimensional *-simple
//! algebras over the rationals.
//!
//! The crate evaluates and tests *-polynomials on matrix algebras with
//! transpose, symplectic and exchange involutions, searches for minimal
//! degrees of standard *-identities, compares identity ideals degree by
//! degree, and constructs and verifies involution-preserving embeddings
//! between the algebras. All arithmetic is exact rational arithmetic;
//! every verdict labeled exhaustive is a finite, complete check.
//!
//! Deciding whether a polynomial is a *-identity:
//!
//! ```
//! use starpi_core::checker::{is_star_identity, Budget, CheckMode};
//! use starpi_core::{parse_polynomial, StarAlgebra};
//!
//! let alg = StarAlgebra::from_descriptor("t:2")?;
//! let budget = Budget::default();
//!
//! // Skew 2x2 matrices form a line, so the skew commutator vanishes.
//! let p = parse_polynomial("st(2; z,z)")?;
//! assert!(is_star_identity(&p, &alg, CheckMode::Exhaustive, &budget, 1)?.is_identity());
//!
//! // Symmetric 2x2 matrices do not commute; the report carries a witness.
//! let q = parse_polynomial("[y1,y2]")?;
//! let report = is_star_identity(&q, &alg, CheckMode::Exhaustive, &budget, 1)?;
//! assert!(!report.is_identity());
//! assert!(report.witness.unwrap().verify(&q, &alg));
//! # Ok::<(), starpi_core::Error>(())
//! ```
//!
//! Constructing and verifying an involution-preserving embedding:
//!
//! ```
//! use starpi_core::EmbeddingPlan;
//!
//! let plan = EmbeddingPlan::exchange_to_symplectic(2)?;
//! assert_eq!(plan.source().descriptor(), "ex:2");
//! assert_eq!(plan.target().descriptor(), "s:4");
//! assert!(plan.verify(1).all_passed);
//! # Ok::<(), starpi_core::Error>(())
//! ```

pub mod algebra;
pub mod checker;
pub mod embed;
pub mod error;
pub mod eval;
pub mod linalg;
pub mod matrix;
pub mod parallel;
pub mod parse;
pub mod poly;
pub mod rat;

pub use algebra::{Element, InvolutionKind, Parity, StarAlgebra};
pub use checker::{
    check_containment, identity_subspace, is_star_identity, min_standard_degree,
    min_standard_degree_report, Budget, CheckMethod, CheckMode, CheckReport, ContainmentReport,
    MinDegreeReport, Verdict, Witness,
};
pub use embed::{decide, DecideOutcome, DecideReport, EmbeddingPlan, PrimitiveMap, VerificationReport};
pub use error::{Error, Result};
pub use eval::{evaluate, evaluate_standard_fast, Assignment};
pub use linalg::{kernel_basis, rank, rref, subspace_contains, RowReducer, SubspaceBasis};
pub use matrix::RatMatrix;
pub use parse::parse_polynomial;
pub use poly::{standard_poly, Signature, StarMonomial, StarPolynomial, VarRef};
pub use rat::{rat, rat_int, Rat};
