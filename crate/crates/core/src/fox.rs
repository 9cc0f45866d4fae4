//! The rational group ring of a free group, and Fox's free differential
//! calculus.
//!
//! [`fox_derivative`] is the workhorse behind the algebraic route to the
//! second boundary matrix of a presentation 2-complex: the derivative of a
//! relator with respect to a generator, pushed to a quotient group, gives the
//! column block of that generator.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::words::FreeWord;

/// A finite rational linear combination of free-group words. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeRingElement {
    terms: BTreeMap<FreeWord, Rational>,
}

impl FreeRingElement {
    pub fn zero() -> Self {
        FreeRingElement::default()
    }

    pub fn one() -> Self {
        FreeRingElement::from_word(FreeWord::identity())
    }

    pub fn from_word(word: FreeWord) -> Self {
        let mut out = FreeRingElement::zero();
        out.add_term(word, Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff * word`, removing the term if the total cancels.
    pub fn add_term(&mut self, word: FreeWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &FreeWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Rational)> {
        self.terms.iter()
    }

    /// Right translation by a word, i.e. multiplication by `word` as a ring
    /// element of coefficient one.
    pub fn right_mul_word(&self, word: &FreeWord) -> FreeRingElement {
        let mut out = FreeRingElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.concat(word), c.clone());
        }
        out
    }
}

impl Add for &FreeRingElement {
    type Output = FreeRingElement;
    fn add(self, rhs: &FreeRingElement) -> FreeRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeRingElement {
    type Output = FreeRingElement;
    fn sub(self, rhs: &FreeRingElement) -> FreeRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &FreeRingElement {
    type Output = FreeRingElement;
    fn neg(self) -> FreeRingElement {
        &FreeRingElement::zero() - self
    }
}

impl Mul for &FreeRingElement {
    type Output = FreeRingElement;
    fn mul(self, rhs: &FreeRingElement) -> FreeRingElement {
        let mut out = FreeRingElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

/// The Fox derivative of a reduced word with respect to generator `j`.
///
/// Characterized by `d(g_j) = 1`, `d(g) = 0` for other generators, and the
/// product rule `d(uv) = d(u) + u d(v)`. On letters this unwinds to: each
/// occurrence of `g_j` at position `i` contributes the length-`i` prefix with
/// coefficient `+1`, and each occurrence of `g_j^{-1}` contributes the prefix
/// *including* that letter with coefficient `-1`.
pub fn fox_derivative(word: &FreeWord, j: usize) -> FreeRingElement {
    let mut out = FreeRingElement::zero();
    let mut prefix = FreeWord::identity();
    for &letter in word.letters() {
        let mut next = prefix.clone();
        next.push(letter);
        if letter.gen == j {
            if letter.sign > 0 {
                out.add_term(prefix, Rational::one());
            } else {
                out.add_term(next.clone(), -Rational::one());
            }
        }
        prefix = next;
    }
    out
}
