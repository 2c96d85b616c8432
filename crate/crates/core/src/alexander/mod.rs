//! The Alexander polynomial by Fox calculus, the Conway function and the
//! colored invariant `Delta_c` built from it.

mod conway;
mod fox;

pub use conway::{connected_sum_delta, conway, delta_c, delta_weighted, ConwayCache, WeightedDelta};
pub use fox::{alexander_matrix, fox_alexander, fox_alexander_deleting, sparse_det, AlexanderClass};

#[cfg(test)]
mod tests;
