//! Free-group words and group presentations.
//!
//! Words are written over a named generator alphabet, one token per letter
//! block, separated by single spaces:
//!
//! ```text
//! word   := token (" " token)*
//! token  := name | name "'" | name "^" integer      (integer nonzero)
//! name   := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! `a b a' b'` is the commutator of `a` and `b`; `a^-2` equals `a' a'`.
//! Parsed words are freely reduced, so `a a'` parses to the empty word even
//! though the grammar has no token for the identity.

use crate::error::{Error, Result};

/// Maximum |exponent| accepted in a `name ^ integer` token. Keeps a typo like
/// `a^99999999999` from allocating a gigantic word.
const MAX_EXPONENT: i64 = 1 << 20;

/// One letter: a generator index with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            sign: -self.sign,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign == -other.sign
    }
}

/// A freely reduced word. The empty word is the group identity.
///
/// Reduction is a constructor invariant: no sequence of operations on
/// `FreeWord` values can produce adjacent cancelling letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        free_reduce(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Reduced concatenation: cancellation can only happen at the seam, so
    /// this pushes `other` letter by letter onto a copy of `self`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    /// Appends a letter, cancelling against the current tail if possible.
    pub fn push(&mut self, letter: Letter) {
        match self.letters.last() {
            Some(&tail) if tail.cancels(letter) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }
}

/// Freely reduces a letter sequence by stack cancellation.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> FreeWord {
    let mut out = FreeWord::identity();
    for l in letters {
        out.push(l);
    }
    out
}

fn is_name_start(b: u8) -> bool {
    b.is_ascii_alphabetic()
}

fn is_name_continue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

fn valid_name(name: &str) -> bool {
    let bytes = name.as_bytes();
    !bytes.is_empty() && is_name_start(bytes[0]) && bytes[1..].iter().all(|&b| is_name_continue(b))
}

fn parse_token(token: &str, position: usize, names: &[String]) -> Result<(usize, i64)> {
    if token.is_empty() {
        return Err(Error::EmptyToken { position });
    }
    let bytes = token.as_bytes();
    if !is_name_start(bytes[0]) {
        return Err(Error::MalformedToken {
            token: token.to_owned(),
            position,
        });
    }
    let name_end = bytes
        .iter()
        .position(|&b| !is_name_continue(b))
        .unwrap_or(bytes.len());
    let name = &token[..name_end];
    let gen = names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownGenerator {
            name: name.to_owned(),
            position,
        })?;
    let exponent = match &token[name_end..] {
        "" => 1,
        "'" => -1,
        rest if rest.starts_with('^') => {
            let exp_text = &rest[1..];
            let digits = exp_text.strip_prefix('-').unwrap_or(exp_text);
            let malformed = |reason: &str| Error::MalformedExponent {
                token: token.to_owned(),
                position,
                reason: reason.to_owned(),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed("expected a nonzero integer"));
            }
            let value: i64 = exp_text
                .parse()
                .map_err(|_| malformed("out of range"))?;
            if value == 0 {
                return Err(malformed("exponent must be nonzero"));
            }
            if value.abs() > MAX_EXPONENT {
                return Err(malformed("out of range"));
            }
            value
        }
        _ => {
            return Err(Error::MalformedToken {
                token: token.to_owned(),
                position,
            })
        }
    };
    Ok((gen, exponent))
}

/// Parses a word over `names`. Errors carry the byte offset of the offending
/// token within `text`.
pub fn parse_word(text: &str, names: &[String]) -> Result<FreeWord> {
    let mut letters = Vec::new();
    let mut position = 0;
    for token in text.split(' ') {
        let (gen, exponent) = parse_token(token, position, names)?;
        let sign = if exponent > 0 { 1 } else { -1 };
        for _ in 0..exponent.unsigned_abs() {
            letters.push(Letter::new(gen, sign));
        }
        position += token.len() + 1;
    }
    Ok(free_reduce(letters))
}

/// Renders a reduced word back to grammar form, compressing runs of one
/// generator into `^k` tokens. The identity renders as the empty string,
/// which [`parse_word`] does not accept; every nonempty reduced word round-
/// trips.
pub fn render_word(word: &FreeWord, names: &[String]) -> String {
    let mut tokens: Vec<String> = Vec::new();
    let mut run: Option<(Letter, i64)> = None;
    let flush = |tokens: &mut Vec<String>, run: Option<(Letter, i64)>| {
        if let Some((letter, count)) = run {
            let name = &names[letter.gen];
            let token = match (letter.sign, count) {
                (1, 1) => name.clone(),
                (-1, 1) => format!("{name}'"),
                (1, k) => format!("{name}^{k}"),
                (_, k) => format!("{name}^-{k}"),
            };
            tokens.push(token);
        }
    };
    for &letter in word.letters() {
        match &mut run {
            Some((head, count)) if *head == letter => *count += 1,
            _ => {
                flush(&mut tokens, run.take());
                run = Some((letter, 1));
            }
        }
    }
    flush(&mut tokens, run);
    tokens.join(" ")
}

/// A finite presentation: named generators and freely reduced relators.
///
/// Relators may not be the empty word, and every generator index appearing
/// in a relator must name a declared generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        for name in &generator_names {
            if !valid_name(name) {
                return Err(Error::InvalidGeneratorName { name: name.clone() });
            }
        }
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(Error::DuplicateGenerator { name: name.clone() });
            }
        }
        for (index, relator) in relators.iter().enumerate() {
            if relator.is_empty() {
                return Err(Error::EmptyRelator { index });
            }
            if let Some(generator) = relator.max_generator() {
                if generator >= generator_names.len() {
                    return Err(Error::GeneratorIndexOutOfRange {
                        index,
                        generator,
                        count: generator_names.len(),
                    });
                }
            }
        }
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    /// Parses relators given as grammar text. Parse failures are wrapped with
    /// the relator's index.
    pub fn parse<S: AsRef<str>>(generator_names: Vec<String>, relator_texts: &[S]) -> Result<Self> {
        let mut relators = Vec::with_capacity(relator_texts.len());
        for (index, text) in relator_texts.iter().enumerate() {
            let word = parse_word(text.as_ref(), &generator_names).map_err(|source| {
                Error::RelatorParse {
                    index,
                    source: Box::new(source),
                }
            })?;
            relators.push(word);
        }
        Presentation::new(generator_names, relators)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn w(text: &str, alphabet: &[&str]) -> FreeWord {
        parse_word(text, &names(alphabet)).unwrap()
    }

    #[test]
    fn parses_plain_primed_and_powered_tokens() {
        let word = w("a b a' b'", &["a", "b"]);
        assert_eq!(
            word.letters(),
            [
                Letter::new(0, 1),
                Letter::new(1, 1),
                Letter::new(0, -1),
                Letter::new(1, -1)
            ]
        );
        let squared = w("a^2 b^-3", &["a", "b"]);
        assert_eq!(squared.len(), 5);
        assert_eq!(squared.letters()[0], Letter::new(0, 1));
        assert_eq!(squared.letters()[2], Letter::new(1, -1));
        let multi = w("g1 g2'", &["g1", "g2"]);
        assert_eq!(multi.letters(), [Letter::new(0, 1), Letter::new(1, -1)]);
    }

    #[test]
    fn parsing_reduces() {
        assert!(w("a a'", &["a"]).is_empty());
        assert_eq!(w("a b b' a", &["a", "b"]), w("a^2", &["a"]));
    }

    #[test]
    fn reports_unknown_generator_with_position() {
        let err = parse_word("a c", &names(&["a", "b"])).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownGenerator {
                name: "c".into(),
                position: 2
            }
        );
    }

    #[test]
    fn reports_empty_tokens_from_stray_spaces() {
        assert_eq!(
            parse_word("", &names(&["a"])).unwrap_err(),
            Error::EmptyToken { position: 0 }
        );
        assert_eq!(
            parse_word("a  b", &names(&["a", "b"])).unwrap_err(),
            Error::EmptyToken { position: 2 }
        );
        assert_eq!(
            parse_word("a ", &names(&["a"])).unwrap_err(),
            Error::EmptyToken { position: 2 }
        );
    }

    #[test]
    fn reports_malformed_exponents() {
        for text in ["a^0", "a^", "a^x", "a^1.5", "a^--2", "a^999999999999999999999"] {
            assert!(matches!(
                parse_word(text, &names(&["a"])).unwrap_err(),
                Error::MalformedExponent { .. }
            ));
        }
    }

    #[test]
    fn reports_malformed_tokens() {
        for text in ["'a", "a'b", "1a", "a-"] {
            assert!(matches!(
                parse_word(text, &names(&["a", "b"])).unwrap_err(),
                Error::MalformedToken { .. } | Error::UnknownGenerator { .. }
            ));
        }
        assert_eq!(
            parse_word("a'b", &names(&["a", "b"])).unwrap_err(),
            Error::MalformedToken {
                token: "a'b".into(),
                position: 0
            }
        );
    }

    #[test]
    fn free_reduce_cancels_nested_pairs() {
        let word = free_reduce([
            Letter::new(0, 1),
            Letter::new(1, 1),
            Letter::new(1, -1),
            Letter::new(0, -1),
        ]);
        assert!(word.is_empty());
    }

    #[test]
    fn inverse_and_concat() {
        let word = w("a b'", &["a", "b"]);
        assert_eq!(render_word(&word.inverse(), &names(&["a", "b"])), "b a'");
        assert!(word.concat(&word.inverse()).is_empty());
    }

    #[test]
    fn render_compresses_runs() {
        let alphabet = names(&["a", "b"]);
        let word = parse_word("a a a b' b' a", &alphabet).unwrap();
        assert_eq!(render_word(&word, &alphabet), "a^3 b^-2 a");
        assert_eq!(render_word(&FreeWord::identity(), &alphabet), "");
    }

    #[test]
    fn presentation_rejects_bad_input() {
        assert!(matches!(
            Presentation::parse(names(&["a", "a"]), &["a"]),
            Err(Error::DuplicateGenerator { .. })
        ));
        assert!(matches!(
            Presentation::parse(names(&["3x"]), &[] as &[&str]),
            Err(Error::InvalidGeneratorName { .. })
        ));
        assert!(matches!(
            Presentation::parse(names(&["a"]), &["a a'"]),
            Err(Error::EmptyRelator { index: 0 })
        ));
        let err = Presentation::parse(names(&["a"]), &["a q"]).unwrap_err();
        assert!(matches!(err, Error::RelatorParse { index: 0, .. }));
        assert_eq!(err.kind(), "unknown-generator");
    }

    fn letter_strategy(gens: usize) -> impl Strategy<Value = Letter> {
        (0..gens, prop_oneof![Just(1i8), Just(-1i8)]).prop_map(|(g, s)| Letter::new(g, s))
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(letters in proptest::collection::vec(letter_strategy(3), 0..40)) {
            let once = free_reduce(letters.clone());
            let twice = free_reduce(once.letters().iter().copied());
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.len() <= letters.len());
        }

        #[test]
        fn concat_with_inverse_is_identity(letters in proptest::collection::vec(letter_strategy(3), 0..40)) {
            let word = free_reduce(letters);
            prop_assert!(word.concat(&word.inverse()).is_empty());
            prop_assert!(word.inverse().concat(&word).is_empty());
        }

        #[test]
        fn render_round_trips(letters in proptest::collection::vec(letter_strategy(2), 1..40)) {
            let alphabet = names(&["a", "b"]);
            let word = free_reduce(letters);
            prop_assume!(!word.is_empty());
            let text = render_word(&word, &alphabet);
            prop_assert_eq!(parse_word(&text, &alphabet).unwrap(), word);
        }
    }
}
