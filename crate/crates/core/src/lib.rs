//! Exact invariants of abelian Chern–Simons theory on Seifert-fibered
//! three-manifolds.
//!
//! Everything here works in exact rational arithmetic. Floating point never
//! appears; the only approximate quantity is the magnitude of a partition
//! function with arbitrary supplied phases, which is evaluated in
//! arbitrary-precision fixed point (see [`hp`]).
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use chern_seifert::{invariants, seifert::{parse_seifert, TorusRank}};
//!
//! let poincare = parse_seifert("[0, -1; (2,1), (3,1), (5,1)]").unwrap();
//! let rank = TorusRank::new(1).unwrap();
//! assert_eq!(chern_seifert::seifert::chern_number(&poincare).to_string(), "1/30");
//! assert_eq!(invariants::eta0(&poincare, rank).value().to_string(), "-91/180");
//! ```

#![no_std]

extern crate alloc;

pub mod cyclotomic;
pub mod dedekind;
mod error;
pub mod hp;
pub mod invariants;
pub mod partition;
pub mod phase;
pub mod rational;
pub mod regularization;
pub mod seifert;
pub mod torsion;

pub use error::{Error, ParseError, Result};
pub use phase::{PhaseRatPi, SqrtRational};
pub use rational::Rational;
pub use seifert::{Cone, SeifertData, TorusRank};
