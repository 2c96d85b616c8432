//! The gl(1|1)-Alexander invariant of 3-manifolds from surgery presentations.
//!
//! Everything is exact: rationals, Laurent polynomials, rational functions
//! and cyclotomic numbers. See the guide in `book/` for a walk-through.

pub mod alexander;
pub mod algebra;
pub mod checks;
pub mod error;
pub mod linkdiag;
pub mod lens;
pub mod manifold;
pub mod torsion;

pub use error::{Error, ErrorKind, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/links.md")]
    mod links {}
    #[doc = include_str!("../../../book/src/manifolds.md")]
    mod manifolds {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/lens.md")]
    mod lens {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
