use super::metric::QuatHermMetric;
use crate::error::{Error, Result};
use crate::exact::{is_positive_definite, Definiteness, Matrix, Scalar};
use crate::lie::{InvariantForm, LieAlgebra, Monomial};
use crate::quat::{nijenhuis, ComplexStructure, HypercomplexStructure};

/// Antisymmetric matrix `M` of a 2-form in its coframe:
/// `eta(u, v) = u^T M v` for frame coordinates `u, v`.
pub fn bilinear_matrix(eta: &InvariantForm) -> Matrix {
    assert_eq!(eta.degree(), 2, "bilinear_matrix needs a 2-form");
    let n = eta.generators();
    let mut m = Matrix::zeros(n, n);
    for (mono, c) in eta.terms() {
        m[(mono[0], mono[1])] = c.clone();
        m[(mono[1], mono[0])] = -c;
    }
    m
}

/// A (2,0)-form with respect to `I`, written in the cached complex coframe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoZeroForm {
    form: InvariantForm,
}

impl TwoZeroForm {
    pub fn new(form: InvariantForm, hs: &HypercomplexStructure) -> Result<Self> {
        if form.coframe() != hs.coframe_tag() || form.generators() != hs.dim() {
            return Err(Error::CoframeMismatch);
        }
        if form.degree() != 2 || !form.is_pure(2, 0) {
            return Err(Error::WrongBidegree { expected_p: 2, expected_q: 0 });
        }
        Ok(TwoZeroForm { form })
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    pub fn into_form(self) -> InvariantForm {
        self.form
    }

    pub fn scale(&self, s: &Scalar) -> TwoZeroForm {
        TwoZeroForm { form: self.form.scale(s) }
    }

    /// `Omega(x, y)` for vectors in the standard basis of `g (x) C`.
    pub fn eval(&self, hs: &HypercomplexStructure, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let cs = hs.complex();
        self.form.evaluate(&[cs.to_frame(x), cs.to_frame(y)])
    }
}

/// `Omega := g(J., .) + i g(K., .)`.
pub fn omega_from_metric(g: &QuatHermMetric, hs: &HypercomplexStructure) -> Result<TwoZeroForm> {
    let gram = g.gram();
    let b = hs.j().transpose().mul(gram).add(&hs.k().transpose().mul(gram).scale(&Scalar::i()));
    let frame = hs.complex().frame();
    let bf = frame.transpose().mul(&b).mul(frame);
    let n = hs.dim();
    let mut terms = Vec::new();
    for a in 0..n {
        for c in a + 1..n {
            if bf[(a, c)] != -&bf[(c, a)] {
                return Err(Error::Internal("g(J., .) + i g(K., .) is not antisymmetric".into()));
            }
            terms.push((vec![a, c], bf[(a, c)].clone()));
        }
    }
    let form = InvariantForm::from_terms(hs.coframe_tag(), n, 2, terms);
    if !form.is_pure(2, 0) {
        return Err(Error::Internal(format!("Omega has components of bidegree {:?}", form.bidegrees())));
    }
    let omega = TwoZeroForm { form };
    if is_j_real(&omega, hs)?.is_some() {
        return Err(Error::Internal("Omega built from a metric is not J-real".into()));
    }
    if !j_positivity(&omega, hs).is_positive() {
        return Err(Error::Internal("Omega built from a metric is not J-positive".into()));
    }
    Ok(omega)
}

/// `g(x, y) := Re Omega(x, J y)`; the imaginary part is checked to be
/// `-g(I x, y)`.
pub fn metric_from_omega(omega: &TwoZeroForm, hs: &HypercomplexStructure) -> Result<QuatHermMetric> {
    if is_j_real(omega, hs)?.is_some() {
        return Err(Error::NotJReal);
    }
    let pos = j_positivity(omega, hs);
    if !pos.hermitian {
        return Err(Error::NotHermitian);
    }
    if let Some(def) = &pos.definiteness {
        if let Some(minor) = def.failing_minor {
            return Err(Error::NotPositive { minor });
        }
    }
    let cs = hs.complex();
    let m = bilinear_matrix(omega.form());
    let full = cs.coframe().transpose().mul(&m).mul(cs.coframe()).mul(hs.j());
    let re = full.map(|s| Scalar::real(s.re.clone()));
    let im = full.map(|s| Scalar::real(s.im.clone()));
    if im != re.mul(hs.i()) {
        return Err(Error::Internal("Im Omega(x, Jy) differs from -g(Ix, y)".into()));
    }
    QuatHermMetric::new(re, hs)
}

/// First monomial where `J(Omega)` and `bar Omega` differ, with the
/// coefficient of the difference; `None` when `Omega` is J-real.
pub fn is_j_real(omega: &TwoZeroForm, hs: &HypercomplexStructure) -> Result<Option<(Monomial, Scalar)>> {
    let diff = hs.j_on_forms(omega.form())?.sub(&omega.form().conj());
    let witness = diff.terms().next().map(|(m, c)| (m.clone(), c.clone()));
    Ok(witness)
}

/// The matrix `M_ab = Omega(h_a, J bar h_b)` and its Sylvester test.
#[derive(Debug, Clone)]
pub struct Positivity {
    pub matrix: Matrix,
    pub hermitian: bool,
    pub definiteness: Option<Definiteness>,
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        self.definiteness.as_ref().is_some_and(|d| d.positive)
    }

    pub fn failing_minor(&self) -> Option<usize> {
        self.definiteness.as_ref().and_then(|d| d.failing_minor)
    }
}

pub fn j_positivity(omega: &TwoZeroForm, hs: &HypercomplexStructure) -> Positivity {
    let cs = hs.complex();
    let mh = cs.half();
    let jf = cs.in_frame(hs.j());
    let full = bilinear_matrix(omega.form()).mul(&jf);
    let matrix = full.block(0, mh, mh, 2 * mh);
    let hermitian = matrix.is_hermitian();
    let definiteness = if hermitian { is_positive_definite(&matrix).ok() } else { None };
    Positivity { matrix, hermitian, definiteness }
}

/// `d Omega` and its (3,0)-part `del Omega`.
#[derive(Debug, Clone)]
pub struct HktReport {
    pub d_omega: InvariantForm,
    pub del_omega: InvariantForm,
}

impl HktReport {
    pub fn is_hkt(&self) -> bool {
        self.del_omega.is_zero()
    }
}

pub(crate) fn ensure_integrable(l: &LieAlgebra, cs: &ComplexStructure) -> Result<()> {
    let report = nijenhuis(l, cs.op())?;
    match report.witness() {
        Some(((i, j), _)) => Err(Error::NotIntegrable(*i, *j)),
        None => Ok(()),
    }
}

/// `del Omega` as the (3,0)-component of `d Omega`; refuses non-integrable `I`.
pub fn hkt_check(l: &LieAlgebra, hs: &HypercomplexStructure, omega: &TwoZeroForm) -> Result<HktReport> {
    ensure_integrable(l, hs.complex())?;
    let d = hs.complex().differential(l)?;
    let d_omega = d.apply(omega.form())?;
    let del_omega = d_omega.project(3, 0);
    Ok(HktReport { d_omega, del_omega })
}
