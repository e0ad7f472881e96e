//! Vertex operators B_m and Hall-Littlewood polynomials Q_λ(t; ρ).

mod cache;
mod lambda;
mod rho;

pub use cache::QCache;
pub use lambda::LambdaVector;
pub use rho::RhoSpec;
