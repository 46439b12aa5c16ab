//! Hypercomplex instances outside the abelian hypothesis, used as negative
//! controls, and random abelian complex structures.

use crate::exact::{rat, Matrix, Scalar};
use crate::instance::Instance;
use crate::lie::{Bracket, LieAlgebra};
use crate::quat::HypercomplexStructure;
use crate::random::Rng;

fn instance(name: &str, description: &str, algebra: LieAlgebra, structure: HypercomplexStructure) -> Instance {
    Instance {
        name: name.to_string(),
        description: description.to_string(),
        algebra,
        structure,
        metric: None,
        omega: None,
    }
}

/// `R` acting on `R^3` by dilations, `[g1, ga] = ga`, with the standard
/// structure: hypercomplex, not abelian, not unimodular.
pub fn hyperbolic() -> Instance {
    let brackets: Vec<Bracket> = (1..4).map(|a| Bracket::new(0, a, vec![(a, rat(1, 1))])).collect();
    let algebra = LieAlgebra::new(4, &brackets).expect("Jacobi");
    instance("hyperbolic", "R acting on R^3 by dilations", algebra, HypercomplexStructure::standard(1))
}

/// `u(2) + u(2)`, each summand `H` with `[x, y] = xy - yx`, and left
/// multiplication by `i, j, k`: hypercomplex, not abelian.
pub fn u2_plus_u2() -> Instance {
    // e_a e_b = e_c for cyclic (a, b, c) among i, j, k
    let cyclic = [(1, 2, 3), (2, 3, 1), (1, 3, 2)];
    let mut brackets = Vec::new();
    for blk in 0..2 {
        for (a, b, c) in cyclic {
            let s = if (a, b, c) == (1, 3, 2) { -2 } else { 2 };
            brackets.push(Bracket::new(4 * blk + a, 4 * blk + b, vec![(4 * blk + c, rat(s, 1))]));
        }
    }
    let algebra = LieAlgebra::new(8, &brackets).expect("Jacobi");
    instance("u2_plus_u2", "u(2) + u(2) with left multiplication", algebra, HypercomplexStructure::standard(2))
}

/// Random abelian complex structure on a random 2-step nilpotent algebra of
/// dimension `2a + 2b`: `g = V + Z`, `[V, V] in Z`, bracket invariant under
/// the standard `I`, then conjugated by a random basis change.
pub fn random_abelian_complex(rng: &mut Rng, a: usize, b: usize) -> (LieAlgebra, Matrix) {
    let n = 2 * (a + b);
    let v = 2 * a;
    let i0 = standard_complex(n);
    let mut brackets = Vec::new();
    for x in 0..v {
        for y in x + 1..v {
            let coeffs: Vec<(usize, Scalar)> = (v..n).map(|z| (z, Scalar::from_int(rng.int(2)))).collect();
            brackets.push((x, y, coeffs));
        }
    }
    // B(x, y) = B0(x, y) + B0(Ix, Iy)
    let b0 = LieAlgebra::new_unchecked(n, &to_brackets(&brackets)).expect("valid indices");
    let mut avg = Vec::new();
    for x in 0..v {
        for y in x + 1..v {
            let ex = crate::lie::unit(n, x);
            let ey = crate::lie::unit(n, y);
            let direct = b0.bracket(&ex, &ey);
            let rotated = b0.bracket(&i0.mul_vec(&ex), &i0.mul_vec(&ey));
            let coeffs: Vec<(usize, Scalar)> =
                (0..n).map(|k| (k, &direct[k] + &rotated[k])).filter(|(_, c)| !c.is_zero()).collect();
            avg.push((x, y, coeffs));
        }
    }
    let l = LieAlgebra::new(n, &to_brackets(&avg)).expect("2-step nilpotent");
    let p = rng.invertible_matrix(n, 2);
    let p_inv = p.inverse().expect("invertible");
    (l.change_basis(&p).expect("invertible"), p_inv.mul(&i0).mul(&p))
}

fn to_brackets(entries: &[(usize, usize, Vec<(usize, Scalar)>)]) -> Vec<Bracket> {
    entries
        .iter()
        .filter(|(_, _, c)| !c.is_empty())
        .map(|(x, y, c)| Bracket::new(*x, *y, c.iter().map(|(k, s)| (*k, s.re.clone())).collect()))
        .collect()
}

/// `e_{2k} -> e_{2k+1} -> -e_{2k}`.
fn standard_complex(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for k in 0..n / 2 {
        m[(2 * k + 1, 2 * k)] = Scalar::one();
        m[(2 * k, 2 * k + 1)] = -Scalar::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hkt::theta_closed_and_holomorphic;
    use crate::lie::is_nilpotent;
    use crate::quat::{is_abelian_complex, is_abelian_hypercomplex, nijenhuis};

    #[test]
    fn controls_are_hypercomplex_but_not_abelian() {
        for inst in [hyperbolic(), u2_plus_u2()] {
            for (_, a) in inst.structure.ops() {
                assert!(nijenhuis(&inst.algebra, a).unwrap().is_integrable(), "{}", inst.name);
            }
            assert!(is_abelian_hypercomplex(&inst.algebra, &inst.structure).is_some());
        }
    }

    #[test]
    fn hyperbolic_theta_is_not_closed() {
        let inst = hyperbolic();
        let r = theta_closed_and_holomorphic(&inst.algebra, inst.structure.complex()).unwrap();
        assert!(!r.closed() && !r.holomorphic());
    }

    #[test]
    fn random_structures_are_abelian() {
        let mut rng = Rng::seeded(7);
        for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let (l, i) = random_abelian_complex(&mut rng, a, b);
            assert!(l.jacobi_check().is_none());
            assert!(is_nilpotent(&l));
            assert_eq!(is_abelian_complex(&l, &i), None);
        }
    }
}
