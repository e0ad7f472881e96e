//! Exact coefficient arithmetic.

mod cyclotomic;
mod ratfunc;
mod rational;
mod scalar;
mod unipoly;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyclotomic, CyclotomicField};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{Field, Scalar};
pub use unipoly::UniPoly;
