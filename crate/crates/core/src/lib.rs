//! Exact-arithmetic verification of the depth-two relation structure of
//! motivic double zeta values of odd weight: the derivation matrix, the
//! restricted period polynomial spaces, the relation space as a left
//! kernel, the symmetrization machinery, and a floating-point double zeta
//! oracle confirming the produced relations numerically.

pub mod depth;
pub mod error;
pub mod matrix;
pub mod numeric;
pub mod periods;
pub mod poly;
pub mod rat;
pub mod rels;
pub mod report;
pub mod sym;

pub use depth::{decomposition, dmatrix, rank_law, DecompRow, PairIndex};
pub use error::{Error, Result};
pub use matrix::QMatrix;
pub use numeric::{
    resolve_decomposition_convention, verify_relation_numeric, zeta_double, zeta_single,
    NumericResult,
};
pub use periods::{dim_cusp_forms, period_constraint_matrix, w_basis, PeriodSpace, Sign};
pub use poly::{l_operator, mobius_subst, QPoly};
pub use rat::{binomial, Rat};
pub use rels::{
    j_matrix, relations, verify_exactness, xi_minus, xi_plus, ExactnessReport, RelationVec,
};
pub use sym::{
    admissible_space, antisymmetrize_q, newton_expansion, symmetrize_p, verify_lemma_sym,
    verify_membership, AdmissibleC,
};
