//! Exact verification of left-invariant hypercomplex geometry on Lie algebras:
//! Obata connections, HKT forms, canonical sections and holonomy, all over
//! the Gaussian rationals.

pub mod catalog;
pub mod controls;
pub mod error;
pub mod exact;
pub mod hkt;
pub mod instance;
pub mod lefschetz;
pub mod lie;
pub mod obata;
pub mod quat;
pub mod random;
pub mod report;

pub use error::{Error, Result};
