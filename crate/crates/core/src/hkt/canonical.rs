use super::omega::{ensure_integrable, TwoZeroForm};
use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::lie::{InvariantForm, LieAlgebra};
use crate::quat::{ComplexStructure, HypercomplexStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// `theta_1 ^ .. ^ theta_m` in the cached (1,0)-coframe.
    CoframeWedge,
    /// `Omega^n` for a (2,0)-form `Omega`.
    OmegaPower,
}

/// Nonzero left-invariant section of the canonical bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSection {
    pub theta: InvariantForm,
    pub provenance: Provenance,
}

/// `theta_1 ^ .. ^ theta_m` for an integrable complex structure.
pub fn canonical_section(l: &LieAlgebra, cs: &ComplexStructure) -> Result<CanonicalSection> {
    ensure_integrable(l, cs)?;
    let m = cs.half();
    let theta = InvariantForm::monomial(cs.coframe_tag(), cs.dim(), (0..m).collect(), Scalar::one());
    Ok(CanonicalSection { theta, provenance: Provenance::CoframeWedge })
}

/// `Omega^n`, `n` the quaternionic dimension.
pub fn omega_power_section(omega: &TwoZeroForm, hs: &HypercomplexStructure) -> Result<CanonicalSection> {
    let theta = omega.form().power(hs.quaternionic_dim());
    if theta.is_zero() {
        return Err(Error::DegenerateForm("Omega^n vanishes"));
    }
    Ok(CanonicalSection { theta, provenance: Provenance::OmegaPower })
}

/// `c` with `a = c * b`, if the two forms are proportional and `b != 0`.
pub fn proportionality(a: &InvariantForm, b: &InvariantForm) -> Option<Scalar> {
    let (mono, cb) = b.terms().next()?;
    let c = &a.coeff(mono) / cb;
    (b.scale(&c) == *a).then_some(c)
}

/// `d Theta` split into types. `del Theta` vanishes by degree.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub d_theta: InvariantForm,
    pub del_bar_theta: InvariantForm,
}

impl ThetaReport {
    pub fn closed(&self) -> bool {
        self.d_theta.is_zero()
    }

    pub fn holomorphic(&self) -> bool {
        self.del_bar_theta.is_zero()
    }
}

/// Evaluates `d Theta` directly in the cached coframe. Works for any
/// complex structure (no abelian or nilpotent hypothesis is used), so it
/// also reports failures on inputs outside those hypotheses.
pub fn theta_closed_and_holomorphic(l: &LieAlgebra, cs: &ComplexStructure) -> Result<ThetaReport> {
    let m = cs.half();
    let theta = InvariantForm::monomial(cs.coframe_tag(), cs.dim(), (0..m).collect(), Scalar::one());
    let d_theta = cs.differential(l)?.apply(&theta)?;
    if !d_theta.project(m + 1, 0).is_zero() {
        return Err(Error::Internal("d Theta has an (m+1,0)-component".into()));
    }
    let del_bar_theta = d_theta.project(m, 1);
    let integrable = crate::quat::nijenhuis(l, cs.op())?.is_integrable();
    if integrable && del_bar_theta != d_theta {
        return Err(Error::Internal("d Theta differs from its (m,1)-part for integrable I".into()));
    }
    Ok(ThetaReport { d_theta, del_bar_theta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::exact::{rat, Matrix};
    use crate::hkt::{omega_from_metric, QuatHermMetric};
    use crate::lie::Bracket;
    use crate::quat::real_structure_check;
    use crate::random::Rng;

    #[test]
    fn flat_r4_section() {
        let hs = HypercomplexStructure::standard(1);
        let s = canonical_section(&LieAlgebra::abelian(4), hs.complex()).unwrap();
        assert_eq!(s.theta.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>(), vec![vec![0, 1]]);
    }

    #[test]
    fn omega_power_is_proportional_and_real() {
        let mut rng = Rng::seeded(4);
        for inst in crate::catalog::all() {
            let hs = &inst.structure;
            let g = QuatHermMetric::random(&mut rng, hs, 2).unwrap();
            let omega = omega_from_metric(&g, hs).unwrap();
            let power = omega_power_section(&omega, hs).unwrap();
            let wedge = canonical_section(&inst.algebra, hs.complex()).unwrap();
            let c = proportionality(&power.theta, &wedge.theta).unwrap();
            assert!(!c.is_zero());
            assert!(real_structure_check(hs, &power.theta).unwrap().fixed);
        }
    }

    #[test]
    fn two_coframes_give_proportional_sections() {
        let inst = catalog("qheis_r").unwrap();
        let hs = &inst.structure;
        let cs = hs.complex();
        // h'_1 = h_1 + 2 h_2, h'_a = h_a otherwise
        let mut ones: Vec<_> = (0..4).map(|a| cs.one_zero_vector(a)).collect();
        ones[0] = ones[0].iter().zip(&cs.one_zero_vector(1)).map(|(x, y)| x + &y.scale(&rat(2, 1))).collect();
        let other = hs.with_one_zero_basis(ones).unwrap();
        let t1 = canonical_section(&inst.algebra, cs).unwrap().theta;
        let t2 = canonical_section(&inst.algebra, other.complex()).unwrap().theta;
        let t2_here = other.complex().express_in(&t2, cs).unwrap();
        assert!(proportionality(&t2_here, &t1).is_some_and(|c| !c.is_zero()));
    }

    #[test]
    fn catalog_theta_closed() {
        for inst in crate::catalog::all() {
            let r = theta_closed_and_holomorphic(&inst.algebra, inst.structure.complex()).unwrap();
            assert!(r.closed() && r.holomorphic());
        }
    }

    #[test]
    fn affine_plane_squared_has_nonclosed_theta() {
        // aff(R) + aff(R): [g1,g2] = g2, [g3,g4] = g4, with I g1 = g2, I g3 = g4
        let l = LieAlgebra::new(
            4,
            &[Bracket::new(0, 1, vec![(1, rat(1, 1))]), Bracket::new(2, 3, vec![(3, rat(1, 1))])],
        )
        .unwrap();
        let i = Matrix::from_int_rows(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let cs = ComplexStructure::new(i).unwrap();
        let r = theta_closed_and_holomorphic(&l, &cs).unwrap();
        assert!(!r.closed());
        assert_eq!(r.d_theta, r.del_bar_theta);
    }
}
