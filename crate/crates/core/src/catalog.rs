//! Built-in example instances.

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix};
use crate::instance::Instance;
use crate::lie::{is_nilpotent, Bracket, LieAlgebra};
use crate::quat::{is_abelian_hypercomplex, HypercomplexStructure};

pub const CATALOG_NAMES: [&str; 3] = ["abelian_h1", "abelian_h2", "qheis_r"];

/// Quaternion product on the basis `(1, i, j, k)`: `e_a e_b = sign * e_c`.
fn quaternion_product(a: usize, b: usize) -> (i64, usize) {
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    TABLE[a][b]
}

/// `g = H + Im H + R` with `[x, y] = Im(conj(x) y)` on the `H` summand;
/// basis `g1..g4 = 1, i, j, k` of `H`, `g5` spans `R`, `g6..g8 = i, j, k` of
/// `Im H`.
pub fn quaternionic_heisenberg_plus_r() -> LieAlgebra {
    let mut brackets = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            // conj(e_a) = e_a for a = 0, else -e_a
            let conj_sign = if a == 0 { 1 } else { -1 };
            let (s, c) = quaternion_product(a, b);
            if c != 0 {
                brackets.push(Bracket::new(a, b, vec![(4 + c, rat(conj_sign * s, 1))]));
            }
        }
    }
    LieAlgebra::new(8, &brackets).expect("quaternionic Heisenberg algebra satisfies Jacobi")
}

fn build(name: &str) -> Option<Instance> {
    let (algebra, n, description) = match name {
        "abelian_h1" => (LieAlgebra::abelian(4), 1, "abelian R^4 with the standard hypercomplex structure"),
        "abelian_h2" => (LieAlgebra::abelian(8), 2, "abelian R^8 with the standard hypercomplex structure"),
        "qheis_r" => (
            quaternionic_heisenberg_plus_r(),
            2,
            "quaternionic Heisenberg algebra plus R (dim 8) with left multiplication by i, j, k",
        ),
        _ => return None,
    };
    let structure = HypercomplexStructure::standard(n);
    Some(Instance {
        name: name.to_string(),
        description: description.to_string(),
        algebra,
        structure,
        metric: None,
        omega: None,
    })
}

/// Catalog entry by name. Every entry is re-checked for Jacobi, the
/// quaternion relations and the abelian condition before it is returned.
pub fn catalog(name: &str) -> Result<Instance> {
    let inst = build(name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    if let Some(w) = inst.algebra.jacobi_check() {
        return Err(Error::JacobiViolation(w));
    }
    if let Some((op, i, j)) = is_abelian_hypercomplex(&inst.algebra, &inst.structure) {
        return Err(Error::Internal(format!("catalog entry {name}: {op} not abelian on (g{}, g{})", i + 1, j + 1)));
    }
    if !is_nilpotent(&inst.algebra) {
        return Err(Error::Internal(format!("catalog entry {name} is not nilpotent")));
    }
    Ok(inst)
}

pub fn all() -> Vec<Instance> {
    CATALOG_NAMES.iter().map(|n| catalog(n).expect("catalog entries are valid")).collect()
}

/// `(I, J, K)` matrices as used by the catalog, for tests and tooling.
pub fn standard_triple(n: usize) -> (Matrix, Matrix, Matrix) {
    crate::quat::left_multiplication_blocks(n)
}
