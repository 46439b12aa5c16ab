//! Dolbeault calculus on invariant forms: `del`, `del_bar`, the twisted
//! operator `del_bar_J`, the Lefschetz `sl(2)` triple and Laplacians.

mod dolbeault;
mod operator;
mod pairing;
mod sl2;

pub use dolbeault::{
    bicomplex_check, del_bar_j, dolbeault_split, j_perturbation_search, twisted_del, twisted_del_bar,
    BicomplexReport, DolbeaultSplit, PerturbationWitness, Twist,
};
pub use operator::{Domain, FormBasis, OperatorOnForms};
pub use pairing::HermitianPairing;
pub use sl2::{lefschetz_triple, laplacian_experiment, DegreeData, LaplacianReport, LefschetzTriple, Sl2Certificate};
