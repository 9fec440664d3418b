//! Exact combinatorics and prime-field linear algebra for experimenting with
//! hyperplane restriction bounds on standard graded algebras.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! filesystem, parses text or prints reports lives in the companion
//! `hyperplane` crate.
//!
//! Layout:
//!
//! * [`macaulay`]: binomials with the vanishing convention, Macaulay
//!   representations, the shadow operator `c_<d>` and its iterates.
//! * [`field`], [`rng`], [`linalg`]: arithmetic in GF(p), a seeded
//!   deterministic generator, dense rank and incremental row spaces.
//! * [`poly`], [`algebra`]: sparse polynomials, presented algebras, graded
//!   component dimensions, hyperplane restriction and quotients by forms.
//! * [`green`]: randomized checks of the hyperplane restriction bound and its
//!   iterated form.
//! * [`reduction`]: the Eakin-Sathaye counting condition, finders for
//!   annihilating forms and ideal reductions, certificates and a brute-force
//!   oracle for small fields.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod field;
pub mod green;
pub mod linalg;
pub mod macaulay;
pub mod poly;
pub mod reduction;
pub mod rng;

pub use algebra::{Limits, LinearForm, PresentedAlgebra};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use green::{check_corollary, check_green, GreenReport};
pub use macaulay::{BigCount, MacaulayRep};
pub use poly::{Monomial, Polynomial};
pub use reduction::{CertificateMode, EquigeneratedIdeal, ReductionCertificate, Subject, Verification};
pub use rng::{SeededRng, VectorConstraint};
