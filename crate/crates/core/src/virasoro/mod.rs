//! Virasoro operators, right-hand sides of their actions on Q_λ and s_λ,
//! and drivers comparing both sides as exact polynomials.

mod operators;
mod rhs;
mod verify;

pub use operators::{build_operator, Family, VirasoroSpec};
pub use rhs::{
    rhs_base_a, rhs_remark_a, rhs_t1_1, rhs_t1_2, rhs_t3_3, rhs_ta3, rhs_ta4, rhs_v_expansion,
};
pub use verify::{monomials_up_to, TheoremCase, Verdict, Verifier};
