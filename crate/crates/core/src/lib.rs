//! Equivalence of quadratic irrationals `m/q + √v`.
//!
//! Two such numbers are equivalent when their continued fractions end in the
//! same period, or equivalently when a matrix in `GL(2, Z)` carries one to
//! the other. For fixed `v` and `q` the question is settled by a single
//! invariant `q0 | q`, computed from the fundamental unit of `Z[√v]`:
//!
//! * `m/q + √v ~ n/q + √v` iff `q0 | m - n`;
//! * they have mutually reversed periods iff `q0 | gcd(m + n, q)`;
//! * the family splits into `φ(q0)` classes of `φ(q)/φ(q0)` members.
//!
//! [`oracle`] recomputes each answer from the expansions themselves.
//!
//! ```
//! use surd_equiv::{equiv, surd};
//!
//! let x = surd::make_surd(1, 12, 7)?;
//! assert_eq!(x.expand().period().len(), 14);
//! assert!(equiv::equivalent(7, 12, 1, 5)?);
//! assert_eq!(equiv::class_summary(979, 12)?.num_classes, 4);
//! # Ok::<(), surd_equiv::Error>(())
//! ```

pub mod arith;
pub mod cli;
pub mod equiv;
mod error;
pub mod oracle;
pub mod pell;
pub mod surd;

pub use equiv::{apply_moebius, ClassReport, Family, GlMatrix, Mat2};
pub use error::{Error, Result};
pub use pell::{fundamental_unit, Norm, Unit, UnitGroupData};
pub use surd::{make_surd, CfExpansion, PeriodRelation, Surd};
