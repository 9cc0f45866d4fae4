//! Finite permutation realizations of a generator alphabet.
//!
//! A realization assigns each generator a permutation of `0..degree`. The
//! group those permutations generate is enumerated breadth-first from the
//! identity, interleaving each generator with its inverse in input order, so
//! element indices and witness words are deterministic. The tables stored
//! here describe the *regular* right action of the group on itself, which is
//! what the complex construction needs; the permutation degree only matters
//! during enumeration.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fox::FreeRingElement;
use crate::rational::Rational;
use crate::words::{FreeWord, Letter};

/// Default ceiling on the number of enumerated elements. Generous for a
/// desk-side tool; raise it explicitly for bigger quotients.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// The finite group generated by a permutation assignment, tabulated for
/// right multiplication.
///
/// Element 0 is the identity. `element_word(i)` is a word in the generators
/// evaluating to element `i` (a breadth-first witness, not necessarily the
/// geodesic a human would pick).
#[derive(Clone, Debug)]
pub struct FiniteGroupRealization {
    degree: usize,
    identity_index: usize,
    element_words: Vec<FreeWord>,
    /// `action[j][x]` is the index of `x * g_j`.
    action: Vec<Vec<usize>>,
    /// `action_inv[j][x]` is the index of `x * g_j^{-1}`.
    action_inv: Vec<Vec<usize>>,
}

fn compose(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&i| then[i]).collect()
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = i;
    }
    out
}

fn check_permutation(image: &[usize], index: usize, degree: usize) -> Result<()> {
    let mut seen = vec![false; degree];
    if image.len() != degree {
        return Err(Error::NotAPermutation { index, degree });
    }
    for &p in image {
        if p >= degree || seen[p] {
            return Err(Error::NotAPermutation { index, degree });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Enumerates the group generated by `images` with the default element cap.
pub fn realize(images: &[Vec<usize>], degree: usize) -> Result<FiniteGroupRealization> {
    realize_with_cap(images, degree, DEFAULT_ORDER_CAP)
}

/// Enumerates the group generated by `images`, failing with
/// [`Error::OrderCapExceeded`] once more than `cap` elements appear.
pub fn realize_with_cap(
    images: &[Vec<usize>],
    degree: usize,
    cap: usize,
) -> Result<FiniteGroupRealization> {
    for (index, image) in images.iter().enumerate() {
        check_permutation(image, index, degree)?;
    }
    let mut steps: Vec<(Letter, Vec<usize>)> = Vec::with_capacity(2 * images.len());
    for (j, image) in images.iter().enumerate() {
        steps.push((Letter::new(j, 1), image.clone()));
        steps.push((Letter::new(j, -1), invert(image)));
    }

    let identity: Vec<usize> = (0..degree).collect();
    let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
    let mut element_words: Vec<FreeWord> = vec![FreeWord::identity()];
    let mut index_of: HashMap<Vec<usize>, usize> = HashMap::new();
    index_of.insert(identity, 0);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);

    while let Some(x) = queue.pop_front() {
        for (letter, step) in &steps {
            let next = compose(&elements[x], step);
            if let Entry::Vacant(slot) = index_of.entry(next) {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                let index = elements.len();
                elements.push(slot.key().clone());
                let mut word = element_words[x].clone();
                word.push(*letter);
                element_words.push(word);
                slot.insert(index);
                queue.push_back(index);
            }
        }
    }

    let action: Vec<Vec<usize>> = images
        .iter()
        .map(|image| {
            elements
                .iter()
                .map(|x| index_of[&compose(x, image)])
                .collect()
        })
        .collect();
    let action_inv = action.iter().map(|a| invert(a)).collect();

    Ok(FiniteGroupRealization {
        degree,
        identity_index: 0,
        element_words,
        action,
        action_inv,
    })
}

impl FiniteGroupRealization {
    pub fn order(&self) -> usize {
        self.element_words.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_count(&self) -> usize {
        self.action.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn element_word(&self, element: usize) -> &FreeWord {
        &self.element_words[element]
    }

    /// Index of `x * g_j^{sign}`.
    pub fn right_multiply_generator(&self, x: usize, letter: Letter) -> usize {
        if letter.sign > 0 {
            self.action[letter.gen][x]
        } else {
            self.action_inv[letter.gen][x]
        }
    }

    fn apply_word_from(&self, start: usize, word: &FreeWord) -> usize {
        word.letters()
            .iter()
            .fold(start, |x, &l| self.right_multiply_generator(x, l))
    }

    /// Evaluates a word at the identity. Generator indices must be valid for
    /// this realization.
    pub fn evaluate_word(&self, word: &FreeWord) -> usize {
        self.apply_word_from(self.identity_index, word)
    }

    /// Group multiplication on element indices.
    pub fn multiply(&self, x: usize, y: usize) -> usize {
        self.apply_word_from(x, &self.element_words[y])
    }

    pub fn inverse_of(&self, x: usize) -> usize {
        self.evaluate_word(&self.element_words[x].inverse())
    }

    /// Pushes a free-group-ring element to the group algebra of this
    /// realization: coefficients of words evaluating to the same element are
    /// summed, and exact cancellations disappear.
    pub fn push_to_quotient(&self, x: &FreeRingElement) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (word, coeff) in x.terms() {
            let element = self.evaluate_word(word);
            let total = out.entry(element).or_insert_with(Rational::zero);
            *total += coeff;
            if total.is_zero() {
                out.remove(&element);
            }
        }
        out
    }
}
