use super::complex::{is_abelian_complex, ComplexStructure};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::lie::{Coframe, InvariantForm, LieAlgebra};

/// Checks `I^2 = J^2 = K^2 = IJK = -id`; `Ok(Some(name))` names the first
/// failing relation.
pub fn check_quaternion_relations(i: &Matrix, j: &Matrix, k: &Matrix) -> Result<Option<&'static str>> {
    let n = i.rows();
    for m in [i, j, k] {
        if !m.is_square() || m.rows() != n {
            return Err(Error::DimensionMismatch { context: "quaternion triple", expected: n, found: m.rows() });
        }
    }
    if n % 4 != 0 {
        return Err(Error::DimensionNotQuaternionic(n));
    }
    let minus = Matrix::identity(n).neg();
    let checks: [(&'static str, Matrix); 4] = [
        ("I^2=-1", i.mul(i)),
        ("J^2=-1", j.mul(j)),
        ("K^2=-1", k.mul(k)),
        ("IJK=-1", i.mul(j).mul(k)),
    ];
    Ok(checks.into_iter().find(|(_, m)| *m != minus).map(|(name, _)| name))
}

/// Linear hypercomplex structure `(I, J, K)` on a real vector space of
/// dimension `4n`, with the (1,0)-frame of `I` cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercomplexStructure {
    complex: ComplexStructure,
    j: Matrix,
    k: Matrix,
    /// `-J` written in the frame of `I`, used for `J` acting on 1-forms.
    j_on_coframe: Vec<InvariantForm>,
}

impl HypercomplexStructure {
    pub fn new(i: Matrix, j: Matrix, k: Matrix) -> Result<Self> {
        if let Some(rel) = check_quaternion_relations(&i, &j, &k)? {
            return Err(Error::QuaternionRelation(rel));
        }
        if !i.is_real() || !j.is_real() || !k.is_real() {
            return Err(Error::Internal("quaternion triple must be real".into()));
        }
        let complex = ComplexStructure::new(i)?;
        Ok(Self::assemble(complex, j, k))
    }

    fn assemble(complex: ComplexStructure, j: Matrix, k: Matrix) -> Self {
        // (J eps_c)(e_d) = eps_c(J^{-1} e_d) = -(J in frame)_{cd}
        let jf = complex.in_frame(&j);
        let n = complex.dim();
        let tag = complex.coframe_tag();
        let j_on_coframe = (0..n)
            .map(|c| {
                InvariantForm::from_terms(tag, n, 1, (0..n).map(|d| (vec![d], -&jf[(c, d)])))
            })
            .collect();
        HypercomplexStructure { complex, j, k, j_on_coframe }
    }

    /// Standard structure on `R^{4n}` = `H^n` by left multiplication by
    /// `i, j, k` on each block of basis `(1, i, j, k)`.
    pub fn standard(n: usize) -> Self {
        let (i, j, k) = left_multiplication_blocks(n);
        Self::new(i, j, k).expect("standard quaternion triple")
    }

    pub fn i(&self) -> &Matrix {
        self.complex.op()
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }

    pub fn k(&self) -> &Matrix {
        &self.k
    }

    pub fn ops(&self) -> [(&'static str, &Matrix); 3] {
        [("I", self.i()), ("J", &self.j), ("K", &self.k)]
    }

    /// `I` together with its cached (1,0)-frame.
    pub fn complex(&self) -> &ComplexStructure {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    /// Quaternionic dimension `n` (real dimension `4n`).
    pub fn quaternionic_dim(&self) -> usize {
        self.dim() / 4
    }

    pub fn coframe_tag(&self) -> Coframe {
        self.complex.coframe_tag()
    }

    /// Name of the first of `I, J, K` that `a` fails to commute with.
    pub fn quaternion_linear_failure(&self, a: &Matrix) -> Option<&'static str> {
        self.ops().into_iter().find(|(_, m)| !a.commutes_with(m)).map(|(name, _)| name)
    }

    pub fn ensure_quaternion_linear(&self, a: &Matrix) -> Result<()> {
        match self.quaternion_linear_failure(a) {
            Some(name) => Err(Error::NotQuaternionLinear(name)),
            None => Ok(()),
        }
    }

    /// `J` on forms in the complex coframe: `(J xi)(x) = xi(J^{-1} x)` on
    /// 1-forms, extended multiplicatively and C-linearly.
    pub fn j_on_forms(&self, eta: &InvariantForm) -> Result<InvariantForm> {
        if eta.coframe() != self.coframe_tag() || eta.generators() != self.dim() {
            return Err(Error::CoframeMismatch);
        }
        Ok(eta.substitute(&self.j_on_coframe))
    }

    /// The real structure `eta -> J(bar eta)`.
    pub fn real_structure(&self, eta: &InvariantForm) -> Result<InvariantForm> {
        self.j_on_forms(&eta.conj())
    }

    /// Same `I` (and cached frame) with `J` replaced; `K = I J`.
    pub fn with_j(&self, j: Matrix) -> Result<Self> {
        let k = self.i().mul(&j);
        if let Some(rel) = check_quaternion_relations(self.i(), &j, &k)? {
            return Err(Error::QuaternionRelation(rel));
        }
        if !j.is_real() {
            return Err(Error::Internal("quaternion triple must be real".into()));
        }
        Ok(Self::assemble(self.complex.clone(), j, k))
    }

    /// Same hypercomplex structure with a different choice of (1,0)-frame.
    pub fn with_one_zero_basis(&self, ones: Vec<crate::exact::Vector>) -> Result<Self> {
        let complex = ComplexStructure::with_one_zero_basis(self.i().clone(), ones)?;
        Ok(Self::assemble(complex, self.j.clone(), self.k.clone()))
    }
}

/// Left multiplication by `i, j, k` on `H^n`, basis `(1, i, j, k)` per block.
pub fn left_multiplication_blocks(n: usize) -> (Matrix, Matrix, Matrix) {
    // columns are images of 1, i, j, k
    let li: [[i64; 4]; 4] = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]];
    let lj: [[i64; 4]; 4] = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]];
    let lk: [[i64; 4]; 4] = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]];
    let block = |b: &[[i64; 4]; 4]| {
        Matrix::from_fn(4 * n, 4 * n, |r, c| {
            if r / 4 == c / 4 {
                Scalar::from_int(b[r % 4][c % 4])
            } else {
                Scalar::zero()
            }
        })
    };
    (block(&li), block(&lj), block(&lk))
}

/// First `(operator, i, j)` where `[A g_i, A g_j] != [g_i, g_j]`.
pub fn is_abelian_hypercomplex(l: &LieAlgebra, h: &HypercomplexStructure) -> Option<(&'static str, usize, usize)> {
    h.ops()
        .into_iter()
        .find_map(|(name, a)| is_abelian_complex(l, a).map(|(i, j)| (name, i, j)))
}

/// Result of checking the real structure on a top-degree (2n,0)-form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealStructureReport {
    pub image: InvariantForm,
    pub fixed: bool,
    pub involution: bool,
}

pub fn real_structure_check(h: &HypercomplexStructure, eta: &InvariantForm) -> Result<RealStructureReport> {
    let m = h.complex().half();
    if eta.coframe() != h.coframe_tag() {
        return Err(Error::CoframeMismatch);
    }
    if eta.degree() != m || !eta.is_pure(m, 0) {
        return Err(Error::WrongBidegree { expected_p: m, expected_q: 0 });
    }
    let image = h.real_structure(eta)?;
    let involution = h.real_structure(&image)? == *eta;
    let fixed = image == *eta;
    Ok(RealStructureReport { image, fixed, involution })
}
