//! Exact Hall-Littlewood polynomials from vertex operators, their
//! specializations at roots of unity, and the action of Virasoro operators.

pub mod error;
pub mod exactnum;
pub mod structure;
pub mod suite;
pub mod tring;
pub mod vertex;
pub mod virasoro;

pub use error::{Error, Result};
