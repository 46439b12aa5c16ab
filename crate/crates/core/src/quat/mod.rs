//! Complex and hypercomplex structures on Lie algebras: quaternion relations,
//! integrability, the abelian condition, the (1,0)/(0,1) splitting, `J` on
//! forms, and the quaternionic determinant.

mod complex;
mod det;
mod structure;

pub use complex::{is_abelian_complex, nijenhuis, one_zero_bracket_check, ComplexStructure, NijenhuisReport};
pub use det::{in_sl_n_h, quat_det, SlMembership};
pub use structure::{
    check_quaternion_relations, is_abelian_hypercomplex, left_multiplication_blocks, real_structure_check,
    HypercomplexStructure, RealStructureReport,
};
