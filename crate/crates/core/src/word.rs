//! Fixed-length words and their base-`k` integer encoding.

use std::fmt;
use std::ops::Deref;

use crate::alphabet::Letter;
use crate::error::{Error, Result};

/// A word: a finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn from_indices(indices: &[u8]) -> Self {
        Word(indices.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Checks every letter is below `k`.
    pub fn check_alphabet(&self, k: usize) -> Result<()> {
        match self.0.iter().find(|l| l.index() >= k) {
            Some(l) => Err(Error::LetterOutOfRange {
                letter: l.index(),
                k,
            }),
            None => Ok(()),
        }
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Raw 0-based indices; use [`crate::Alphabet::render`] for symbols.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

/// `k^n`, or `None` on `u128` overflow.
pub fn word_space(k: usize, n: usize) -> Option<u128> {
    let n = u32::try_from(n).ok()?;
    (k as u128).checked_pow(n)
}

/// Big-endian base-`k` code of `letters`; lexicographic order on equal-length
/// words matches numeric order on codes.
pub fn encode(letters: &[Letter], k: usize) -> u64 {
    letters
        .iter()
        .fold(0u64, |acc, l| acc * k as u64 + l.0 as u64)
}

pub fn decode(mut code: u64, n: usize, k: usize) -> Word {
    let mut letters = vec![Letter(0); n];
    for slot in letters.iter_mut().rev() {
        *slot = Letter((code % k as u64) as u8);
        code /= k as u64;
    }
    Word(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn encode_is_big_endian() {
        assert_eq!(encode(&Word::from_indices(&[1, 0, 2]), 3), 9 + 2);
        assert_eq!(decode(11, 3, 3), Word::from_indices(&[1, 0, 2]));
        assert_eq!(word_space(3, 4), Some(81));
        assert_eq!(word_space(256, 20), None);
    }

    proptest! {
        #[test]
        fn codes_preserve_lexicographic_order(
            k in 2usize..7,
            a in proptest::collection::vec(0u8..6, 5),
            b in proptest::collection::vec(0u8..6, 5),
        ) {
            let a: Word = a.into_iter().map(|x| Letter(x % k as u8)).collect();
            let b: Word = b.into_iter().map(|x| Letter(x % k as u8)).collect();
            prop_assert_eq!(a.cmp(&b), encode(&a, k).cmp(&encode(&b, k)));
            prop_assert_eq!(decode(encode(&a, k), 5, k), a);
        }
    }
}
