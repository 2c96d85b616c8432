//! Exact algebra: rationals, Laurent polynomials, rational functions,
//! cyclotomic fields, integer normal forms and matrix signatures.

pub mod cyclotomic;
pub mod gcd;
pub mod laurent;
pub mod matrix;
pub mod qpoly;
pub mod ratfunc;
pub mod rational;
pub mod signature;
pub mod value;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use laurent::{Exponent, MultiLaurent};
pub use matrix::{snf, IntMatrix, Smith};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use signature::sigma_plus;
pub use value::{substitute, Image, Value};
