use super::connection::Connection;
use super::holonomy::curvature;
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::lie::{ce_d, Coframe, InvariantForm, LieAlgebra};
use crate::quat::{ComplexStructure, HypercomplexStructure};

/// Connection form of the induced connection on the canonical bundle in
/// the trivialization by `Theta = theta_1 ^ .. ^ theta_m`:
/// `nabla_x Theta = alpha(x) Theta` with `alpha(x) = -tr_C(Gamma_x | (1,0))`.
#[derive(Debug, Clone)]
pub struct CanonicalConnectionForm {
    /// `alpha` in the real coframe.
    pub alpha: InvariantForm,
    /// `theta`: the (1,0)-part of `alpha`, in the complex coframe.
    pub theta: InvariantForm,
    /// `bar theta`: the (0,1)-part of `alpha`.
    pub theta_bar: InvariantForm,
    /// `d alpha`, the curvature of the induced connection.
    pub d_alpha: InvariantForm,
    /// `-tr_C(R(x, y) | (1,0))` as a real 2-form.
    pub trace_curvature: InvariantForm,
}

impl CanonicalConnectionForm {
    /// `nabla Theta = 0`.
    pub fn parallel(&self) -> bool {
        self.alpha.is_zero()
    }

    /// Local holonomy of the induced connection is trivial.
    pub fn flat(&self) -> bool {
        self.d_alpha.is_zero()
    }

    /// Connection form on the square root of the canonical bundle.
    pub fn half(&self) -> InvariantForm {
        self.alpha.scale(&Scalar::from_frac(1, 2))
    }

    /// `(theta / 2, bar theta / 2)`.
    pub fn half_parts(&self) -> (InvariantForm, InvariantForm) {
        let h = Scalar::from_frac(1, 2);
        (self.theta.scale(&h), self.theta_bar.scale(&h))
    }
}

/// Rewrites a real-coframe 1-form in the complex coframe of `cs`.
pub fn real_one_form_in_frame(eta: &InvariantForm, cs: &ComplexStructure) -> InvariantForm {
    let n = cs.dim();
    let frame = cs.frame();
    // xi_i = sum_c frame[i][c] eps_c
    let images: Vec<InvariantForm> = (0..n)
        .map(|i| InvariantForm::from_terms(cs.coframe_tag(), n, 1, (0..n).map(|c| (vec![c], frame[(i, c)].clone()))))
        .collect();
    eta.substitute(&images)
}

pub fn canonical_connection_form(
    c: &Connection,
    l: &LieAlgebra,
    hs: &HypercomplexStructure,
) -> Result<CanonicalConnectionForm> {
    let n = l.dim();
    let cs = hs.complex();
    let mut alpha_terms = Vec::new();
    for i in 0..n {
        let t = -cs.restrict_to_one_zero(c.gamma(i))?.trace();
        if !t.is_real() {
            return Err(Error::Internal(format!("alpha(g{}) = {t} is not real", i + 1)));
        }
        alpha_terms.push((vec![i], t));
    }
    let alpha = InvariantForm::from_terms(Coframe::Real, n, 1, alpha_terms);
    let complex = real_one_form_in_frame(&alpha, cs);
    let theta = complex.project(1, 0);
    let theta_bar = complex.project(0, 1);
    let d_alpha = ce_d(l, &alpha)?;
    let curv = curvature(c, l, None)?;
    let mut tr_terms = Vec::new();
    for ((i, j), r) in curv.values() {
        tr_terms.push((vec![*i, *j], -cs.restrict_to_one_zero(r)?.trace()));
    }
    let trace_curvature = InvariantForm::from_terms(Coframe::Real, n, 2, tr_terms);
    if d_alpha != trace_curvature {
        return Err(Error::Internal("d alpha differs from -tr R on the canonical bundle".into()));
    }
    if theta_bar != theta.conj() {
        return Err(Error::Internal("(0,1)-part of alpha is not the conjugate of its (1,0)-part".into()));
    }
    Ok(CanonicalConnectionForm { alpha, theta, theta_bar, d_alpha, trace_curvature })
}

/// `nabla_{g_x}` acting on forms in the complex coframe as a derivation,
/// with `nabla_x eps_c = -sum_d (Gamma_x in frame)_{cd} eps_d`.
pub fn nabla_on_forms(c: &Connection, cs: &ComplexStructure, x: usize, eta: &InvariantForm) -> InvariantForm {
    let n = cs.dim();
    let gf = cs.in_frame(c.gamma(x));
    let images: Vec<InvariantForm> = (0..n)
        .map(|cc| InvariantForm::from_terms(cs.coframe_tag(), n, 1, (0..n).map(|d| (vec![d], -&gf[(cc, d)]))))
        .collect();
    eta.derive(&images)
}
