//! Letters, display alphabets and category partitions.

use crate::error::{Error, Result};
use crate::word::Word;

/// A letter of a `k`-letter alphabet, stored as an index in `0..k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 256;

const DEFAULT_SYMBOLS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
const RANKING_SYMBOLS: &str = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Partition of the letters `0..k` into `L` nonempty, disjoint, labeled blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryPartition {
    block_of: Vec<usize>,
    sizes: Vec<usize>,
}

impl CategoryPartition {
    /// Contiguous blocks: the first `sizes[0]` letters form block 0, and so on.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParameters(
                "at least one category is required".into(),
            ));
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidParameters(format!("category {i} is empty")));
        }
        let k: usize = sizes.iter().sum();
        if k > MAX_ALPHABET {
            return Err(Error::InvalidParameters(format!(
                "categories cover {k} letters, more than {MAX_ALPHABET}"
            )));
        }
        let block_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
            .collect();
        Ok(Self {
            block_of,
            sizes: sizes.to_vec(),
        })
    }

    /// Arbitrary blocks over `0..k`; they must be nonempty, disjoint and cover every letter.
    pub fn from_blocks(k: usize, blocks: &[Vec<Letter>]) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidParameters(
                "at least one category is required".into(),
            ));
        }
        let mut block_of = vec![usize::MAX; k];
        let mut sizes = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidParameters(format!("category {b} is empty")));
            }
            for &l in block {
                let slot = block_of.get_mut(l.index()).ok_or(Error::LetterOutOfRange {
                    letter: l.index(),
                    k,
                })?;
                if *slot != usize::MAX {
                    return Err(Error::InvalidParameters(format!(
                        "letter {} appears in two categories",
                        l.index()
                    )));
                }
                *slot = b;
            }
            sizes.push(block.len());
        }
        if let Some(l) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidParameters(format!(
                "letter {l} has no category"
            )));
        }
        Ok(Self { block_of, sizes })
    }

    /// Number of categories `L`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Number of letters covered, `k = k_1 + ... + k_L`.
    pub fn alphabet_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn block_of(&self, l: Letter) -> usize {
        self.block_of[l.index()]
    }

    /// Bitmask-free census of which blocks occur in `letters`.
    pub fn blocks_present(&self, letters: &[Letter]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        for &l in letters {
            seen[self.block_of(l)] = true;
        }
        seen
    }
}

/// A `k`-letter alphabet with display symbols and optional categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    categories: Option<CategoryPartition>,
}

impl Alphabet {
    /// `k` letters displayed as `A..Z`, then `a..z`, then `0..9`.
    pub fn latin(k: usize) -> Result<Self> {
        Self::from_default(k, DEFAULT_SYMBOLS)
    }

    /// `k` ranks displayed 1-based: `1..9`, then Latin letters.
    pub fn ranks(k: usize) -> Result<Self> {
        Self::from_default(k, RANKING_SYMBOLS)
    }

    fn from_default(k: usize, pool: &str) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters(
                "alphabet size must be positive".into(),
            ));
        }
        let symbols: Vec<char> = pool.chars().take(k).collect();
        if symbols.len() < k {
            return Err(Error::InvalidParameters(format!(
                "no default symbols for k = {k}; supply explicit symbols"
            )));
        }
        Ok(Self {
            symbols,
            categories: None,
        })
    }

    pub fn with_symbols(symbols: Vec<char>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidParameters(
                "alphabet size must be positive".into(),
            ));
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::InvalidParameters(format!(
                "alphabet of {} symbols exceeds {MAX_ALPHABET}",
                symbols.len()
            )));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::InvalidParameters(format!(
                    "symbol `{c}` is repeated"
                )));
            }
        }
        Ok(Self {
            symbols,
            categories: None,
        })
    }

    pub fn with_categories(mut self, categories: CategoryPartition) -> Result<Self> {
        if categories.alphabet_size() != self.size() {
            return Err(Error::InvalidParameters(format!(
                "category sizes sum to {}, alphabet has {} letters",
                categories.alphabet_size(),
                self.size()
            )));
        }
        self.categories = Some(categories);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn categories(&self) -> Option<&CategoryPartition> {
        self.categories.as_ref()
    }

    pub fn symbol(&self, l: Letter) -> char {
        self.symbols[l.index()]
    }

    pub fn letter(&self, c: char) -> Result<Letter> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .map(|i| Letter(i as u8))
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn parse(&self, s: &str) -> Result<Word> {
        s.chars().map(|c| self.letter(c)).collect()
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&l| self.symbol(l)).collect()
    }
}
