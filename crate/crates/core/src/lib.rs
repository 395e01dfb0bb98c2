//! Exact ψ-extended finite operator calculus.
//!
//! Scalars are exact rationals or rational functions in a formal `q`;
//! every public routine computes without floating point.

pub mod error;
pub mod matrices;
pub mod psi;
pub mod qhat;
pub mod qplane;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
pub use matrices::{
    count_subspaces, fermat_matrix, pascal_matrix, verify_fermat_factorization, EvalMode, ExportFormat,
    ScalarMatrix,
};
pub use psi::{
    check_psi_multiplicativity, gauss_binomial, psi_plus_power, CommPoly2, MultiplicativityCheck, PsiFamily,
};
pub use qhat::{op_binomial, op_factorial, op_integer, qhat_mutator, qhat_operator, DiagOperator};
pub use qplane::{
    explore_observation1_general, qp_mul, qp_power, realization_check, sweep_cauchy_operator,
    sweep_cauchy_scalar, verify_cauchy_operator, verify_cauchy_scalar, verify_gauss_binomial_theorem,
    OpRealization, QPlanePoly,
};
pub use report::{Location, Mismatch, Report};
pub use scalars::{Field, Poly, RatFunc, Rational, Scalar};
