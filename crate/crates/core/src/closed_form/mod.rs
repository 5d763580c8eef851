//! Closed formulas and structural constructions for `S_a(b, n)`.

mod apery;
mod formulas;
mod lattice;
mod rtuple;

pub use apery::{apery_closed, apery_recursive, homogeneity_witness, lift_apery};
pub use formulas::{
    apery_sum_closed, apery_sum_coefficients, frobenius_closed, genus_closed,
    invariant_report_closed, length_sum_closed, maximal_apery_closed, pseudo_frobenius_closed,
};
pub use lattice::{
    affine_closure_check, affine_image, affine_translation, determinant,
    generator_shift_identity, lattice_matrix, maximal_minors, LatticeMatrix,
};
pub use rtuple::{enumerate_r, RTuple};
