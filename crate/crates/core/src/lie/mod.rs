//! Lie algebras from structure constants and the Chevalley–Eilenberg complex
//! of left-invariant forms.

mod algebra;
mod differential;
mod forms;
mod series;

pub use algebra::{unit, Bracket, LieAlgebra};
pub use differential::{ce_d, d_squared_check, CeDifferential};
pub use forms::{generator_name, sort_with_sign, wedge_monomials, Coframe, InvariantForm, Monomial};
pub use series::{derived_series, is_nilpotent, is_solvable, lower_central_series, Series};
