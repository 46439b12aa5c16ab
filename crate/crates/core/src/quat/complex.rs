use crate::error::{Error, Result};
use crate::exact::{kernel, Matrix, Scalar, Vector};
use crate::lie::{unit, CeDifferential, Coframe, InvariantForm, LieAlgebra};

/// A linear complex structure `A` (A^2 = -id) on a real vector space, with
/// its cached (1,0)-frame.
///
/// The (1,0)-space is the `+i` eigenspace of `A`; the frame is
/// `h_1..h_m, bar h_1..bar h_m` and the dual coframe is
/// `theta_1..theta_m, bar theta_1..bar theta_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStructure {
    op: Matrix,
    frame: Matrix,
    coframe: Matrix,
    half: usize,
}

impl ComplexStructure {
    pub fn new(op: Matrix) -> Result<Self> {
        if !op.is_square() {
            return Err(Error::DimensionMismatch { context: "complex structure", expected: op.rows(), found: op.cols() });
        }
        let n = op.rows();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        if !op.is_real() || op.mul(&op) != Matrix::identity(n).neg() {
            return Err(Error::NotAlmostComplex);
        }
        let shifted = op.sub(&Matrix::identity(n).scale(&Scalar::i()));
        let ones: Vec<Vector> = kernel(&shifted);
        Self::with_one_zero_basis(op, ones)
    }

    /// Uses the given vectors (which must span the `+i` eigenspace) as `h_1..h_m`.
    pub fn with_one_zero_basis(op: Matrix, ones: Vec<Vector>) -> Result<Self> {
        let n = op.rows();
        let half = n / 2;
        if ones.len() != half {
            return Err(Error::Internal(format!("(1,0)-space has dimension {} not {half}", ones.len())));
        }
        let i_unit = Scalar::i();
        for h in &ones {
            let ih: Vector = h.iter().map(|x| x * &i_unit).collect();
            if op.mul_vec(h) != ih {
                return Err(Error::Internal("(1,0)-basis vector is not a +i eigenvector".into()));
            }
        }
        let mut cols = ones.clone();
        cols.extend(ones.iter().map(|h| h.iter().map(Scalar::conj).collect::<Vector>()));
        let frame = Matrix::from_columns(&cols);
        let coframe = frame
            .inverse()
            .ok_or_else(|| Error::Internal("(1,0) and (0,1) vectors are dependent".into()))?;
        Ok(ComplexStructure { op, frame, coframe, half })
    }

    pub fn op(&self) -> &Matrix {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.rows()
    }

    /// Complex dimension `m` of the (1,0)-space.
    pub fn half(&self) -> usize {
        self.half
    }

    /// Columns `h_1..h_m, bar h_1..bar h_m`.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    /// Rows are the dual coframe; `coframe * frame = id`.
    pub fn coframe(&self) -> &Matrix {
        &self.coframe
    }

    pub fn coframe_tag(&self) -> Coframe {
        Coframe::Complex { half: self.half }
    }

    /// `h_a` for `a < m`.
    pub fn one_zero_vector(&self, a: usize) -> Vector {
        self.frame.column(a)
    }

    /// Coordinates of `v` in the frame.
    pub fn to_frame(&self, v: &[Scalar]) -> Vector {
        self.coframe.mul_vec(v)
    }

    /// Matrix of an endomorphism in the frame basis.
    pub fn in_frame(&self, a: &Matrix) -> Matrix {
        self.coframe.mul(a).mul(&self.frame)
    }

    /// Restriction of an endomorphism commuting with the structure to the
    /// (1,0)-space, as an `m x m` complex matrix.
    pub fn restrict_to_one_zero(&self, a: &Matrix) -> Result<Matrix> {
        let f = self.in_frame(a);
        let m = self.half;
        if !f.block(m, 2 * m, 0, m).is_zero() || !f.block(0, m, m, 2 * m).is_zero() {
            return Err(Error::Internal("endomorphism does not preserve the (1,0)-space".into()));
        }
        Ok(f.block(0, m, 0, m))
    }

    /// `(v^{1,0}, v^{0,1}) = (1/2 (v - i A v), 1/2 (v + i A v))`.
    pub fn pq_split(&self, v: &[Scalar]) -> (Vector, Vector) {
        let av = self.op.mul_vec(v);
        let half = Scalar::from_frac(1, 2);
        let one_zero = v.iter().zip(&av).map(|(x, y)| &(x - &y.mul_i()) * &half).collect();
        let zero_one = v.iter().zip(&av).map(|(x, y)| &(x + &y.mul_i()) * &half).collect();
        (one_zero, zero_one)
    }

    /// Rewrites a form given in this coframe in the coframe of `target`.
    pub fn express_in(&self, eta: &InvariantForm, target: &ComplexStructure) -> Result<InvariantForm> {
        if eta.coframe() != self.coframe_tag() || eta.generators() != self.dim() || target.dim() != self.dim() {
            return Err(Error::CoframeMismatch);
        }
        let t = self.coframe.mul(&target.frame);
        let n = self.dim();
        let tag = target.coframe_tag();
        let images: Vec<InvariantForm> = (0..n)
            .map(|a| InvariantForm::from_terms(tag, n, 1, (0..n).map(|c| (vec![c], t[(a, c)].clone()))))
            .collect();
        Ok(eta.substitute(&images))
    }

    /// Chevalley–Eilenberg differential in this complex coframe.
    pub fn differential(&self, l: &LieAlgebra) -> Result<CeDifferential> {
        CeDifferential::in_frame(l, &self.frame, self.coframe_tag())
    }
}

/// Nonzero values of the Nijenhuis tensor on basis pairs `i < j`.
#[derive(Debug, Clone)]
pub struct NijenhuisReport {
    pub nonzero: Vec<((usize, usize), Vector)>,
}

impl NijenhuisReport {
    pub fn is_integrable(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn witness(&self) -> Option<&((usize, usize), Vector)> {
        self.nonzero.first()
    }
}

/// `N(x,y) = [x,y] + A[Ax,y] + A[x,Ay] - [Ax,Ay]` on all basis pairs.
pub fn nijenhuis(l: &LieAlgebra, a: &Matrix) -> Result<NijenhuisReport> {
    let n = l.dim();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch { context: "nijenhuis", expected: n, found: a.rows() });
    }
    if a.mul(a) != Matrix::identity(n).neg() {
        return Err(Error::NotAlmostComplex);
    }
    let mut nonzero = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let (ax, ay) = (a.column(i), a.column(j));
            let t1 = l.bracket(&x, &y);
            let t2 = a.mul_vec(&l.bracket(&ax, &y));
            let t3 = a.mul_vec(&l.bracket(&x, &ay));
            let t4 = l.bracket(&ax, &ay);
            let v: Vector = (0..n).map(|k| &(&(&t1[k] + &t2[k]) + &t3[k]) - &t4[k]).collect();
            if v.iter().any(|s| !s.is_zero()) {
                nonzero.push(((i, j), v));
            }
        }
    }
    Ok(NijenhuisReport { nonzero })
}

/// First basis pair with `[A g_i, A g_j] != [g_i, g_j]`, or `None` if `A` is abelian.
pub fn is_abelian_complex(l: &LieAlgebra, a: &Matrix) -> Option<(usize, usize)> {
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            if l.bracket(&a.column(i), &a.column(j)) != *l.basis_bracket(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Checks `[h_a, h_b] = 0` for all (1,0)-frame vectors; returns the first
/// nonzero bracket.
pub fn one_zero_bracket_check(l: &LieAlgebra, cs: &ComplexStructure) -> Option<(usize, usize, Vector)> {
    let m = cs.half();
    for a in 0..m {
        for b in a + 1..m {
            let br = l.bracket(&cs.one_zero_vector(a), &cs.one_zero_vector(b));
            if br.iter().any(|s| !s.is_zero()) {
                return Some((a, b, br));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lie::Bracket;

    /// Rotation `g1 -> g2 -> -g1` on each consecutive pair.
    pub(crate) fn standard_complex(n: usize) -> Matrix {
        let mut a = Matrix::zeros(n, n);
        for p in 0..n / 2 {
            a[(2 * p + 1, 2 * p)] = Scalar::one();
            a[(2 * p, 2 * p + 1)] = Scalar::from_int(-1);
        }
        a
    }

    #[test]
    fn frame_is_dual_and_eigen() {
        let cs = ComplexStructure::new(standard_complex(4)).unwrap();
        assert_eq!(cs.coframe().mul(cs.frame()), Matrix::identity(4));
        let f = cs.in_frame(cs.op());
        assert_eq!(f.block(0, 2, 0, 2), Matrix::identity(2).scale(&Scalar::i()));
        assert_eq!(f.block(2, 4, 2, 4), Matrix::identity(2).scale(&-Scalar::i()));
    }

    #[test]
    fn rejects_bad_operators() {
        assert!(matches!(ComplexStructure::new(Matrix::identity(2)), Err(Error::NotAlmostComplex)));
        assert!(matches!(ComplexStructure::new(Matrix::identity(3)), Err(Error::OddDimension(3))));
    }

    #[test]
    fn pq_split_examples() {
        let cs = ComplexStructure::new(standard_complex(2)).unwrap();
        let g1 = unit(2, 0);
        let (p, q) = cs.pq_split(&g1);
        // I g1 = g2, so g1^{1,0} = (g1 - i g2) / 2
        assert_eq!(p, vec![Scalar::from_frac(1, 2), Scalar::new(rat(0, 1), rat(-1, 2))]);
        assert_eq!(q, p.iter().map(Scalar::conj).collect::<Vec<_>>());
        let h = cs.one_zero_vector(0);
        let (p, q) = cs.pq_split(&h);
        assert_eq!(p, h);
        assert!(q.iter().all(Scalar::is_zero));
    }

    #[test]
    fn pq_projectors() {
        let a = standard_complex(4);
        let cs = ComplexStructure::new(a.clone()).unwrap();
        let v: Vector = [3, -1, 2, 5].iter().map(|&x| Scalar::from_int(x)).collect();
        let (p, q) = cs.pq_split(&v);
        let sum: Vector = p.iter().zip(&q).map(|(x, y)| x + y).collect();
        assert_eq!(sum, v);
        assert_eq!(cs.pq_split(&p).0, p);
        let ip: Vector = p.iter().map(Scalar::mul_i).collect();
        assert_eq!(a.mul_vec(&p), ip);
    }

    #[test]
    fn nijenhuis_on_abelian_algebra() {
        let l = LieAlgebra::abelian(4);
        assert!(nijenhuis(&l, &standard_complex(4)).unwrap().is_integrable());
        assert!(is_abelian_complex(&l, &standard_complex(4)).is_none());
    }

    #[test]
    fn non_integrable_on_padded_heisenberg() {
        // h3 + R with basis g1..g4, [g1,g2] = g3; A: g1->g3, g2->g4
        let l = LieAlgebra::new(4, &[Bracket::new(0, 1, vec![(2, rat(1, 1))])]).unwrap();
        let a = Matrix::from_int_rows(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let report = nijenhuis(&l, &a).unwrap();
        assert!(!report.is_integrable());
        // hand evaluation: N(g1,g2) = [g1,g2] + A[g3,g2] + A[g1,g4] - [g3,g4] = g3
        assert_eq!(report.witness().unwrap(), &((0, 1), unit(4, 2)));
        let cs = ComplexStructure::new(a.clone()).unwrap();
        assert!(one_zero_bracket_check(&l, &cs).is_some());
        assert!(is_abelian_complex(&l, &a).is_some());
    }

    #[test]
    fn abelian_structure_on_padded_heisenberg() {
        // I: g1 -> g2, g3 -> g4 is abelian on h3 + R
        let l = LieAlgebra::new(4, &[Bracket::new(0, 1, vec![(2, rat(1, 1))])]).unwrap();
        let a = standard_complex(4);
        assert!(is_abelian_complex(&l, &a).is_none());
        assert!(nijenhuis(&l, &a).unwrap().is_integrable());
        let cs = ComplexStructure::new(a).unwrap();
        assert!(one_zero_bracket_check(&l, &cs).is_none());
    }
}
