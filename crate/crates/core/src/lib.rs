//! Gröbner bases for toric ideals of monomial curves given by almost
//! arithmetic sequences.
//!
//! A sequence `m0 < m1 < ... < mp` in arithmetic progression together with an
//! arbitrary `mn` (with `p = n - 1`) defines the curve `x_i = t^{m_i}`. Its
//! defining ideal is the kernel of `x_i -> t^{m_i}` and is generated by
//! binomials. This crate
//!
//! * extracts the semigroup parameters (`u`, `v`, `w`, `z`, `lambda`, `mu`,
//!   `nu`, ...) that drive the closed-form generators ([`semigroup`]),
//! * builds the three classical generating sets: the minimal Gröbner basis
//!   `G`, Patil's minimal generators and the Patil–Singh generators
//!   ([`closedform`]),
//! * decides minimality and reducedness, both from the parameter conditions
//!   `C1`/`C2` and directly from the binomials,
//! * re-checks everything with a small exact binomial Buchberger engine
//!   ([`groebner`]) and with a bounded standard-monomial injectivity test
//!   ([`verify`]).
//!
//! ```
//! use monocurve::{closedform, poly::MonomialOrder, semigroup, Variant};
//!
//! let seq = semigroup::validate_input(&[5, 6, 7, 8, 9]).unwrap();
//! let params = semigroup::compute_params(&seq).unwrap();
//! assert_eq!((params.u, params.upsilon, params.z), (4, 2, 3));
//!
//! let order = MonomialOrder::ascending(&seq);
//! let g = closedform::build_generators(&seq, &params, Variant::G, &order).unwrap();
//! assert_eq!(g.len(), 10);
//! assert!(closedform::is_minimal_basis(&g));
//! assert!(!closedform::is_reduced_basis(&g));
//! ```

pub mod cli;
pub mod closedform;
mod error;
pub mod groebner;
pub mod poly;
pub mod semigroup;
pub mod verify;

pub use closedform::{BasisSet, GeneratorTag, Variant};
pub use error::{Error, Result};
pub use poly::{Binomial, Monomial, MonomialOrder, VariableOrder};
pub use semigroup::{SemigroupParams, ValidatedSequence};
