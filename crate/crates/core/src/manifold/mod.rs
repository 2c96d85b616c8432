//! Surgery presentations, `H_1`, classes `omega` and the invariant
//! `Delta(M, omega)`.

mod eval;
mod group;
mod homology;
mod invariant;

pub use eval::{Multiplicities, Specializer};
pub use group::{symmetric_mod, GroupElem, OmegaClass, PaletteGroup};
pub use homology::{enumerate_omega, homology_h1, H1};
pub use invariant::{delta_kirby, delta_refined, kirby_terms, refined_formula, KirbyTerm};

use crate::algebra::{sigma_plus, IntMatrix};
use crate::error::Result;
use crate::linkdiag::LinkDiagram;

/// A framed link read as a surgery presentation of a closed 3-manifold.
#[derive(Clone, Debug)]
pub struct SurgeryPresentation {
    diagram: LinkDiagram,
    lk: Vec<Vec<i64>>,
    matrix: IntMatrix,
    sigma: usize,
    h1: H1,
}

impl SurgeryPresentation {
    pub fn new(diagram: LinkDiagram) -> Result<Self> {
        let lk = diagram.linking_numbers()?;
        let matrix = IntMatrix::from_rows(&lk);
        let sigma = sigma_plus(&matrix)?;
        let mut p = SurgeryPresentation {
            diagram,
            lk,
            matrix,
            sigma,
            h1: H1::default(),
        };
        p.h1 = homology_h1(&p);
        Ok(p)
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn components(&self) -> usize {
        self.diagram.components()
    }

    pub fn linking_numbers(&self) -> &[Vec<i64>] {
        &self.lk
    }

    pub fn linking_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Number of positive eigenvalues of the linking matrix.
    pub fn sigma_plus(&self) -> usize {
        self.sigma
    }

    pub fn h1(&self) -> &H1 {
        &self.h1
    }
}
