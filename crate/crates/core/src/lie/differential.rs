use super::algebra::LieAlgebra;
use super::forms::{Coframe, InvariantForm};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Vector};

/// Chevalley–Eilenberg differential on left-invariant forms, in a fixed coframe.
///
/// Convention: `d xi(x, y) = -xi([x, y])`, so for a frame `e_a` with
/// `[e_a, e_b] = sum_c C^c_ab e_c` the dual coframe satisfies
/// `d eps_c = -sum_{a<b} C^c_ab eps_a ^ eps_b`. The operator is extended to
/// all degrees by the graded Leibniz rule.
#[derive(Debug, Clone)]
pub struct CeDifferential {
    coframe: Coframe,
    dim: usize,
    generator_d: Vec<InvariantForm>,
}

impl CeDifferential {
    /// Differential in the real coframe dual to `g_1..g_dim`.
    pub fn real(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let generator_d = (0..n)
            .map(|c| {
                let mut terms = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        let s = l.structure_constant(a, b, c);
                        if !s.is_zero() {
                            terms.push((vec![a, b], -s));
                        }
                    }
                }
                InvariantForm::from_terms(Coframe::Real, n, 2, terms)
            })
            .collect();
        CeDifferential { coframe: Coframe::Real, dim: n, generator_d }
    }

    /// Differential in the coframe dual to the (complex) frame whose vectors
    /// are the columns of `frame`.
    pub fn in_frame(l: &LieAlgebra, frame: &Matrix, coframe: Coframe) -> Result<Self> {
        let n = l.dim();
        if frame.rows() != n || frame.cols() != n {
            return Err(Error::DimensionMismatch { context: "frame", expected: n, found: frame.cols() });
        }
        let inv = frame
            .inverse()
            .ok_or_else(|| Error::Internal("frame is not a basis".into()))?;
        let cols: Vec<Vector> = (0..n).map(|a| frame.column(a)).collect();
        let mut terms: Vec<Vec<(Vec<usize>, Scalar)>> = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                let coords = inv.mul_vec(&l.bracket(&cols[a], &cols[b]));
                for (c, s) in coords.into_iter().enumerate() {
                    if !s.is_zero() {
                        terms[c].push((vec![a, b], -s));
                    }
                }
            }
        }
        let generator_d =
            terms.into_iter().map(|t| InvariantForm::from_terms(coframe, n, 2, t)).collect();
        Ok(CeDifferential { coframe, dim: n, generator_d })
    }

    pub fn coframe(&self) -> Coframe {
        self.coframe
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `d eps_c`.
    pub fn of_generator(&self, c: usize) -> &InvariantForm {
        &self.generator_d[c]
    }

    pub fn apply(&self, eta: &InvariantForm) -> Result<InvariantForm> {
        if eta.coframe() != self.coframe || eta.generators() != self.dim {
            return Err(Error::CoframeMismatch);
        }
        let mut out = InvariantForm::zero(self.coframe, self.dim, eta.degree() + 1);
        for (mono, c) in eta.terms() {
            for (s, &idx) in mono.iter().enumerate() {
                let d_gen = &self.generator_d[idx];
                if d_gen.is_zero() {
                    continue;
                }
                let sign = if s % 2 == 0 { c.clone() } else { -c };
                let left = InvariantForm::monomial(self.coframe, self.dim, mono[..s].to_vec(), sign);
                let right =
                    InvariantForm::monomial(self.coframe, self.dim, mono[s + 1..].to_vec(), Scalar::one());
                out = out.add(&left.wedge(d_gen).wedge(&right));
            }
        }
        Ok(out)
    }
}

/// `d` in the real coframe.
pub fn ce_d(l: &LieAlgebra, eta: &InvariantForm) -> Result<InvariantForm> {
    CeDifferential::real(l).apply(eta)
}

/// First generator `k` with `d(d xi_k) != 0`, with the offending 3-form.
pub fn d_squared_check(l: &LieAlgebra) -> Option<(usize, InvariantForm)> {
    let d = CeDifferential::real(l);
    (0..l.dim()).find_map(|k| {
        let dd = d.apply(d.of_generator(k)).expect("same coframe");
        (!dd.is_zero()).then_some((k, dd))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lie::Bracket;
    use proptest::prelude::*;

    fn heisenberg3() -> LieAlgebra {
        LieAlgebra::new(3, &[Bracket::new(0, 1, vec![(2, rat(1, 1))])]).unwrap()
    }

    fn xi(i: usize) -> InvariantForm {
        InvariantForm::generator(Coframe::Real, 3, i)
    }

    #[test]
    fn abelian_differential_vanishes() {
        let l = LieAlgebra::abelian(4);
        let f = InvariantForm::generator(Coframe::Real, 4, 2);
        assert!(ce_d(&l, &f).unwrap().is_zero());
        assert!(d_squared_check(&l).is_none());
    }

    #[test]
    fn heisenberg_d_xi3() {
        let l = heisenberg3();
        // -xi3([g1, g2]) = -1 on the pair (g1, g2)
        let d3 = ce_d(&l, &xi(2)).unwrap();
        assert_eq!(d3, xi(0).wedge(&xi(1)).neg());
        let e = |i| crate::lie::unit(3, i);
        assert_eq!(d3.evaluate(&[e(0), e(1)]), Scalar::from_int(-1));
        // d(xi1 ^ xi3) = -xi1 ^ d xi3 = xi1 ^ xi1 ^ xi2 = 0
        assert!(ce_d(&l, &xi(0).wedge(&xi(2))).unwrap().is_zero());
        assert!(d_squared_check(&l).is_none());
    }

    #[test]
    fn coframe_mismatch_is_rejected() {
        let l = heisenberg3();
        let f = InvariantForm::generator(Coframe::Complex { half: 1 }, 3, 0);
        assert!(matches!(ce_d(&l, &f), Err(Error::CoframeMismatch)));
    }

    #[test]
    fn d_squared_detects_jacobi_failure() {
        let l = LieAlgebra::new_unchecked(
            3,
            &[Bracket::new(0, 1, vec![(1, rat(1, 1))]), Bracket::new(1, 2, vec![(0, rat(1, 1))])],
        )
        .unwrap();
        let (k, dd) = d_squared_check(&l).expect("d^2 != 0");
        // oracle: d xi1 = -xi2^xi3, d xi2 = -xi1^xi2, so d d xi1 = xi1^xi2^xi3
        assert_eq!(k, 0);
        assert_eq!(dd, xi(0).wedge(&xi(1)).wedge(&xi(2)));
    }

    #[test]
    fn frame_differential_matches_real_one_on_identity_frame() {
        let l = heisenberg3();
        let d = CeDifferential::in_frame(&l, &Matrix::identity(3), Coframe::Real).unwrap();
        let r = CeDifferential::real(&l);
        for k in 0..3 {
            assert_eq!(d.of_generator(k), r.of_generator(k));
        }
    }

    fn random_two_step(coeffs: &[i64]) -> LieAlgebra {
        // 5-dim: brackets of g1..g3 land in span(g4, g5)
        let mut brackets = Vec::new();
        let mut it = coeffs.iter();
        for i in 0..3 {
            for j in i + 1..3 {
                let a = *it.next().unwrap();
                let b = *it.next().unwrap();
                brackets.push(Bracket::new(i, j, vec![(3, rat(a, 1)), (4, rat(b, 1))]));
            }
        }
        LieAlgebra::new(5, &brackets).unwrap()
    }

    proptest! {
        #[test]
        fn leibniz_rule(coeffs in proptest::collection::vec(-3i64..4, 6),
                        a in proptest::collection::vec(-2i64..3, 5),
                        b in proptest::collection::vec(-2i64..3, 10)) {
            let l = random_two_step(&coeffs);
            let eta = InvariantForm::from_terms(Coframe::Real, 5, 1,
                a.iter().enumerate().map(|(i, &c)| (vec![i], Scalar::from_int(c))));
            let mut pairs = Vec::new();
            for i in 0..5 { for j in i + 1..5 { pairs.push(vec![i, j]); } }
            let mu = InvariantForm::from_terms(Coframe::Real, 5, 2,
                pairs.into_iter().zip(&b).map(|(m, &c)| (m, Scalar::from_int(c))));
            let lhs = ce_d(&l, &eta.wedge(&mu)).unwrap();
            let rhs = ce_d(&l, &eta).unwrap().wedge(&mu)
                .sub(&eta.wedge(&ce_d(&l, &mu).unwrap()));
            prop_assert_eq!(lhs, rhs);
            let dd = ce_d(&l, &ce_d(&l, &mu).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }

        #[test]
        fn d_squared_iff_jacobi(c in proptest::collection::vec(-2i64..3, 9)) {
            // arbitrary antisymmetric brackets on R^3
            let brackets: Vec<Bracket> = [(0usize, 1usize), (0, 2), (1, 2)].iter().enumerate()
                .map(|(p, &(i, j))| Bracket::new(i, j, (0..3).map(|k| (k, rat(c[3 * p + k], 1))).collect()))
                .collect();
            let l = LieAlgebra::new_unchecked(3, &brackets).unwrap();
            prop_assert_eq!(l.jacobi_check().is_none(), d_squared_check(&l).is_none());
        }
    }
}
