//! Quaternionic Hermitian metrics, the (2,0)-form `Omega`, the HKT
//! condition and the canonical section `Theta`.

mod canonical;
mod metric;
mod omega;
mod triangular;

pub use canonical::{
    canonical_section, omega_power_section, proportionality, theta_closed_and_holomorphic, CanonicalSection,
    Provenance, ThetaReport,
};
pub use metric::{average, QuatHermMetric};
pub use omega::{
    bilinear_matrix, hkt_check, is_j_real, j_positivity, metric_from_omega, omega_from_metric, HktReport,
    Positivity, TwoZeroForm,
};
pub use triangular::{triangular_basis_search, triangular_violation, TriangularReport};
