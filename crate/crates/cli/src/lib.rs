//! Std companion to `chern-seifert`: catalog files, phase files, report
//! rendering and the property-check suites behind the `chern-seifert` binary.

pub mod catalog;
pub mod error;
pub mod phasefile;
pub mod report;
pub mod suite;

pub use error::CliError;
