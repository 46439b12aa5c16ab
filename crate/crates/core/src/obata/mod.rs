//! The Obata connection of a left-invariant hypercomplex structure, its
//! curvature and holonomy, and the induced connection on the canonical bundle.

mod canonical;
mod connection;
mod holonomy;

pub use canonical::{canonical_connection_form, nabla_on_forms, real_one_form_in_frame, CanonicalConnectionForm};
pub use connection::{commutant_basis, covariant_derivative, obata_solve, Connection};
pub use holonomy::{curvature, holonomy_algebra, holonomy_in_sl_check, Curvature, HolonomyAlgebra, Origin, SlCertificate};
