//! The graded ring Q[t1, t2, …] (deg t_r = r) over a coefficient field and
//! linear operators acting on it.

mod monomial;
mod operator;
mod pairing;
mod poly;

pub use monomial::Monomial;
pub use operator::{commutator_apply, FamilyRule, LinOperator, OpTerm, Prim, PrimKind};
pub use pairing::{inner_product, monomial_norm};
pub use poly::TPoly;
