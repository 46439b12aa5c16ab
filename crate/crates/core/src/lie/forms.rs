use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Scalar;

/// Which coframe the indices of an [`InvariantForm`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coframe {
    /// The real coframe `xi_1..xi_dim` dual to `g_1..g_dim`.
    Real,
    /// A complex coframe `theta_1..theta_half, bar theta_1..bar theta_half`;
    /// indices `< half` are (1,0), indices `>= half` are (0,1).
    Complex { half: usize },
}

/// Strictly increasing multi-index.
pub type Monomial = Vec<usize>;

/// Sign and merged index list of `e_a ^ e_b`, or `None` if they share an index.
pub fn wedge_monomials(a: &[usize], b: &[usize]) -> Option<(bool, Monomial)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining a's
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((odd, out))
}

/// Left-invariant exterior form with `Q(i)` coefficients on strictly
/// increasing multi-indices. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct InvariantForm {
    coframe: Coframe,
    generators: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl InvariantForm {
    pub fn zero(coframe: Coframe, generators: usize, degree: usize) -> Self {
        InvariantForm { coframe, generators, degree, terms: BTreeMap::new() }
    }

    /// The constant function `c` (a 0-form).
    pub fn constant(coframe: Coframe, generators: usize, c: Scalar) -> Self {
        let mut f = Self::zero(coframe, generators, 0);
        f.add_term(Vec::new(), c);
        f
    }

    /// The coframe generator with index `i`.
    pub fn generator(coframe: Coframe, generators: usize, i: usize) -> Self {
        Self::monomial(coframe, generators, vec![i], Scalar::one())
    }

    /// `c * e_{mono}`; panics unless `mono` is strictly increasing and in range.
    pub fn monomial(coframe: Coframe, generators: usize, mono: Monomial, c: Scalar) -> Self {
        assert!(mono.windows(2).all(|w| w[0] < w[1]), "multi-index not strictly increasing");
        assert!(mono.iter().all(|&i| i < generators), "multi-index out of range");
        let mut f = Self::zero(coframe, generators, mono.len());
        f.add_term(mono, c);
        f
    }

    /// Sum of `c * e_mono` over the given terms (repeated monomials accumulate).
    pub fn from_terms(
        coframe: Coframe,
        generators: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut f = Self::zero(coframe, generators, degree);
        for (m, c) in terms {
            assert_eq!(m.len(), degree, "term degree mismatch");
            assert!(m.windows(2).all(|w| w[0] < w[1]), "multi-index not strictly increasing");
            assert!(m.iter().all(|&i| i < generators), "multi-index out of range");
            f.add_term(m, c);
        }
        f
    }

    fn add_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coframe(&self) -> Coframe {
        self.coframe
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &[usize]) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    fn assert_compatible(&self, other: &InvariantForm) {
        assert_eq!(self.coframe, other.coframe, "forms on different coframes");
        assert_eq!(self.generators, other.generators, "forms on different algebras");
    }

    pub fn add(&self, other: &InvariantForm) -> InvariantForm {
        self.assert_compatible(other);
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &InvariantForm) -> InvariantForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> InvariantForm {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> InvariantForm {
        let mut out = Self::zero(self.coframe, self.generators, self.degree);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        out
    }

    pub fn wedge(&self, other: &InvariantForm) -> InvariantForm {
        self.assert_compatible(other);
        let mut out = Self::zero(self.coframe, self.generators, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((odd, m)) = wedge_monomials(a, b) {
                    let c = ca * cb;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        out
    }

    /// `self ^ self ^ ... ^ self` (`k` factors); `k = 0` gives the constant 1.
    pub fn power(&self, k: usize) -> InvariantForm {
        let mut out = Self::constant(self.coframe, self.generators, Scalar::one());
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }

    /// Algebra map sending generator `e_i` to the 1-form `images[i]`;
    /// the result lives in the coframe of the images.
    pub fn substitute(&self, images: &[InvariantForm]) -> InvariantForm {
        assert_eq!(images.len(), self.generators, "substitute: one image per generator");
        let (tag, n) = images
            .first()
            .map(|f| (f.coframe, f.generators))
            .unwrap_or((self.coframe, self.generators));
        let mut out = Self::zero(tag, n, self.degree);
        for (mono, c) in &self.terms {
            let mut acc = Self::constant(tag, n, c.clone());
            for &idx in mono {
                acc = acc.wedge(&images[idx]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Degree-preserving derivation sending generator `e_i` to the 1-form
    /// `images[i]` (same coframe).
    pub fn derive(&self, images: &[InvariantForm]) -> InvariantForm {
        assert_eq!(images.len(), self.generators, "derive: one image per generator");
        let mut out = Self::zero(self.coframe, self.generators, self.degree);
        for (mono, c) in &self.terms {
            for (s, &idx) in mono.iter().enumerate() {
                if images[idx].is_zero() {
                    continue;
                }
                let left = Self::monomial(self.coframe, self.generators, mono[..s].to_vec(), c.clone());
                let right = Self::monomial(self.coframe, self.generators, mono[s + 1..].to_vec(), Scalar::one());
                out = out.add(&left.wedge(&images[idx]).wedge(&right));
            }
        }
        out
    }

    /// Complex conjugation. On a complex coframe this swaps `theta_a` with
    /// `bar theta_a` and re-sorts with the permutation sign.
    pub fn conj(&self) -> InvariantForm {
        let mut out = Self::zero(self.coframe, self.generators, self.degree);
        for (m, c) in &self.terms {
            match self.coframe {
                Coframe::Real => out.add_term(m.clone(), c.conj()),
                Coframe::Complex { half } => {
                    let swapped: Vec<usize> =
                        m.iter().map(|&i| if i < half { i + half } else { i - half }).collect();
                    let (odd, sorted) = sort_with_sign(swapped);
                    let c = c.conj();
                    out.add_term(sorted, if odd { -c } else { c });
                }
            }
        }
        out
    }

    /// `(p, q)` type of a monomial on a complex coframe.
    pub fn monomial_bidegree(&self, mono: &[usize]) -> (usize, usize) {
        match self.coframe {
            Coframe::Complex { half } => {
                let p = mono.iter().filter(|&&i| i < half).count();
                (p, mono.len() - p)
            }
            Coframe::Real => panic!("bidegree needs a complex coframe"),
        }
    }

    /// Component of bidegree `(p, q)`.
    pub fn project(&self, p: usize, q: usize) -> InvariantForm {
        let mut out = Self::zero(self.coframe, self.generators, self.degree);
        for (m, c) in &self.terms {
            if self.monomial_bidegree(m) == (p, q) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Bidegrees with a nonzero component, sorted.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.terms.keys().map(|m| self.monomial_bidegree(m)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_pure(&self, p: usize, q: usize) -> bool {
        self.terms.keys().all(|m| self.monomial_bidegree(m) == (p, q))
    }

    /// Evaluates on vectors given in frame coordinates, with the
    /// determinant convention `(e_1 ^ .. ^ e_k)(v_1, .., v_k) = det(e_a(v_b))`.
    pub fn evaluate(&self, vectors: &[Vec<Scalar>]) -> Scalar {
        assert_eq!(vectors.len(), self.degree, "evaluate: wrong number of vectors");
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mat = crate::exact::Matrix::from_fn(self.degree, self.degree, |a, b| vectors[b][m[a]].clone());
            total += &(c * &mat.determinant());
        }
        total
    }
}

/// Sorts a list of distinct indices, returning whether the permutation was odd.
pub fn sort_with_sign(mut v: Vec<usize>) -> (bool, Vec<usize>) {
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    (odd, v)
}

impl fmt::Debug for InvariantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for InvariantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let names: Vec<String> = m.iter().map(|&i| generator_name(self.coframe, i)).collect();
                if names.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", names.join("^"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Human-readable 1-based name of a coframe generator.
pub fn generator_name(coframe: Coframe, i: usize) -> String {
    match coframe {
        Coframe::Real => format!("xi{}", i + 1),
        Coframe::Complex { half } if i < half => format!("th{}", i + 1),
        Coframe::Complex { half } => format!("thb{}", i - half + 1),
    }
}
