//! The Q-basis: straightening, the coefficients c_μ(ρ), power-sum
//! expansions and multiplication, and the border-strip rule.

mod basis;
mod coeff;
mod combination;
mod mn;
mod partition;
mod straighten;

pub use basis::expand_in_q_basis;
pub use coeff::{b_poly, c_coeff, c_generic, multiply_p, p_expand, phi_poly};
pub use combination::QCombination;
pub use mn::{mn_combination, mn_expand};
pub use partition::{partitions, partitions_bounded, Partition};
pub use straighten::{straighten_measure, Rewrite, Straightener};
