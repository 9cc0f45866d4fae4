//! The quotient Cayley 2-complex of a presentation and a realization.
//!
//! Vertices are the group elements, edges are element/generator pairs, and
//! faces are element/relator pairs for a chosen subset of relators. Cell
//! counts are `|Q|`, `n * |Q|`, `f * |Q|`; boundary matrices have one row per
//! higher cell. The second boundary can be assembled two independent ways,
//! by walking relator edge paths or through Fox derivatives, and the two must
//! agree entrywise.

use num_traits::One;

use crate::error::{Error, Result};
use crate::fox::fox_derivative;
use crate::linalg::SparseRationalMatrix;
use crate::rational::Rational;
use crate::realization::FiniteGroupRealization;
use crate::words::Presentation;

/// How to assemble the second boundary matrix. The two modes are independent
/// derivations of the same matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryMode {
    /// Walk each relator as a closed edge path, accumulating signed edge
    /// visits.
    Path,
    /// Take the Fox derivative of each relator with respect to each
    /// generator and push it to the quotient.
    Fox,
}

/// A presentation 2-complex over a finite realization. Borrowed views only;
/// the realization tables are the heavy part and callers typically reuse
/// them across several complexes.
#[derive(Clone, Copy, Debug)]
pub struct CayleyComplex<'a> {
    realization: &'a FiniteGroupRealization,
    presentation: &'a Presentation,
    active_relators: &'a [usize],
}

impl<'a> CayleyComplex<'a> {
    /// Builds the complex for the given subset of relator indices. Fails if
    /// the realization and presentation disagree on the generator count, an
    /// index is out of range, or some active relator does not hold in the
    /// realization (faces would not be closed paths).
    pub fn build(
        realization: &'a FiniteGroupRealization,
        presentation: &'a Presentation,
        active_relators: &'a [usize],
    ) -> Result<Self> {
        if realization.generator_count() != presentation.generator_count() {
            return Err(Error::GeneratorCountMismatch {
                supplied: realization.generator_count(),
                declared: presentation.generator_count(),
            });
        }
        for &index in active_relators {
            if index >= presentation.relator_count() {
                return Err(Error::ActiveRelatorOutOfRange {
                    index,
                    count: presentation.relator_count(),
                });
            }
            let relator = &presentation.relators()[index];
            if realization.evaluate_word(relator) != realization.identity_index() {
                return Err(Error::RelatorNotSatisfied { index });
            }
        }
        Ok(CayleyComplex {
            realization,
            presentation,
            active_relators,
        })
    }

    pub fn realization(&self) -> &FiniteGroupRealization {
        self.realization
    }

    pub fn presentation(&self) -> &Presentation {
        self.presentation
    }

    pub fn active_relators(&self) -> &[usize] {
        self.active_relators
    }

    pub fn vertex_count(&self) -> usize {
        self.realization.order()
    }

    pub fn edge_count(&self) -> usize {
        self.presentation.generator_count() * self.realization.order()
    }

    pub fn face_count(&self) -> usize {
        self.active_relators.len() * self.realization.order()
    }

    /// Edge cells are grouped in generator blocks: the edge from `x` along
    /// `g_j` sits at index `j * |Q| + x`.
    pub fn edge_index(&self, x: usize, j: usize) -> usize {
        j * self.realization.order() + x
    }

    /// The boundary of 1-cells: the edge from `x` along `g_j` has endpoint
    /// `x * g_j` with sign `+1` and origin `x` with sign `-1`. A loop edge
    /// (`x * g_j = x`) has zero boundary, so its row is empty.
    pub fn boundary1(&self) -> SparseRationalMatrix {
        let q = self.realization.order();
        let n = self.presentation.generator_count();
        let mut m = SparseRationalMatrix::new(self.edge_count(), self.vertex_count());
        for j in 0..n {
            for x in 0..q {
                let row = self.edge_index(x, j);
                let head = self
                    .realization
                    .right_multiply_generator(x, crate::words::Letter::new(j, 1));
                m.add_to(row, head, Rational::one());
                m.add_to(row, x, -Rational::one());
            }
        }
        m
    }

    /// The boundary of 2-cells, rows indexed by face `(relator position,
    /// basepoint)` at `position * |Q| + x`.
    pub fn boundary2(&self, mode: BoundaryMode) -> SparseRationalMatrix {
        let q = self.realization.order();
        let mut m = SparseRationalMatrix::new(self.face_count(), self.edge_count());
        match mode {
            BoundaryMode::Path => {
                for (position, &index) in self.active_relators.iter().enumerate() {
                    let relator = &self.presentation.relators()[index];
                    for x in 0..q {
                        let row = position * q + x;
                        let mut at = x;
                        for &letter in relator.letters() {
                            if letter.sign > 0 {
                                m.add_to(row, self.edge_index(at, letter.gen), Rational::one());
                                at = self.realization.right_multiply_generator(at, letter);
                            } else {
                                at = self.realization.right_multiply_generator(at, letter);
                                m.add_to(row, self.edge_index(at, letter.gen), -Rational::one());
                            }
                        }
                        debug_assert_eq!(at, x, "active relators close up");
                    }
                }
            }
            BoundaryMode::Fox => {
                for (position, &index) in self.active_relators.iter().enumerate() {
                    let relator = &self.presentation.relators()[index];
                    for j in 0..self.presentation.generator_count() {
                        let pushed = self
                            .realization
                            .push_to_quotient(&fox_derivative(relator, j));
                        for x in 0..q {
                            let row = position * q + x;
                            for (&y, coeff) in &pushed {
                                let edge = self.edge_index(self.realization.multiply(x, y), j);
                                m.add_to(row, edge, coeff.clone());
                            }
                        }
                    }
                }
            }
        }
        m
    }
}
