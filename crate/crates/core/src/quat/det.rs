use super::structure::HypercomplexStructure;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

/// Determinant of an H-linear map: the complex determinant of its
/// restriction to the (1,0)-space of `I`, i.e. its action on the top
/// exterior power of (1,0)-vectors. Always a positive real number for an
/// invertible H-linear map; a violation is reported as an internal error.
pub fn quat_det(h: &Matrix, hs: &HypercomplexStructure) -> Result<Scalar> {
    hs.ensure_quaternion_linear(h)?;
    let det = hs.complex().restrict_to_one_zero(h)?.determinant();
    if !det.is_real() {
        return Err(Error::Internal(format!("quaternionic determinant {det} is not real")));
    }
    if !det.is_zero() && !det.is_positive_real() {
        return Err(Error::Internal(format!("quaternionic determinant {det} is negative")));
    }
    Ok(det)
}

/// Membership of an H-linear endomorphism in `sl(n, H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlMembership {
    pub member: bool,
    /// Complex trace of the (1,0)-restriction.
    pub complex_trace: Scalar,
    pub real_trace: Scalar,
}

/// `A in sl(n,H)` iff the complex trace of `A` on the (1,0)-space vanishes.
/// Cross-checks `tr_R(A) = 2 tr_C(A|(1,0))` and `tr_R(IA) = 0`.
pub fn in_sl_n_h(a: &Matrix, hs: &HypercomplexStructure) -> Result<SlMembership> {
    hs.ensure_quaternion_linear(a)?;
    let complex_trace = hs.complex().restrict_to_one_zero(a)?.trace();
    let real_trace = a.trace();
    if real_trace != &complex_trace + &complex_trace {
        return Err(Error::Internal(format!(
            "real trace {real_trace} differs from twice the complex trace {complex_trace}"
        )));
    }
    let i_trace = hs.i().mul(a).trace();
    if !i_trace.is_zero() {
        return Err(Error::Internal(format!("tr(I A) = {i_trace} is nonzero for H-linear A")));
    }
    Ok(SlMembership { member: complex_trace.is_zero(), complex_trace, real_trace })
}
