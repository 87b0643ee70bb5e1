use crate::alphabet::{CategoryPartition, Letter, MAX_ALPHABET};
use crate::error::{Error, Result};

/// Fixed-size letter set covering every supported alphabet.
#[derive(Default)]
struct LetterSet([u64; MAX_ALPHABET / 64]);

impl LetterSet {
    /// Inserts `l`, returning whether it was already present.
    fn insert(&mut self, l: Letter) -> bool {
        let (word, bit) = (l.index() / 64, 1u64 << (l.index() % 64));
        let seen = self.0[word] & bit != 0;
        self.0[word] |= bit;
        seen
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn distinct_letters(w: &[Letter]) -> usize {
    let mut set = LetterSet::default();
    for &l in w {
        set.insert(l);
    }
    set.len()
}

pub fn is_all_words(_w: &[Letter]) -> bool {
    true
}

/// Some letter occurs at least twice.
pub fn is_noninjective(w: &[Letter]) -> bool {
    let mut set = LetterSet::default();
    w.iter().any(|&l| set.insert(l))
}

pub fn is_injective(w: &[Letter]) -> bool {
    !is_noninjective(w)
}

/// Some letter of the `k`-letter alphabet is missing from `w`.
pub fn is_nonsurjective(w: &[Letter], k: usize) -> bool {
    distinct_letters(w) < k
}

pub fn is_surjective(w: &[Letter], k: usize) -> bool {
    !is_nonsurjective(w, k)
}

/// Adjacent letters always fall in different blocks. Either block may start.
pub fn is_alternating(w: &[Letter], partition: &CategoryPartition) -> Result<bool> {
    if partition.len() != 2 {
        return Err(Error::InvalidParameters(format!(
            "alternation needs exactly 2 categories, got {}",
            partition.len()
        )));
    }
    Ok(alternates(w, partition))
}

/// [`is_alternating`] without the block-count check.
pub fn alternates(w: &[Letter], partition: &CategoryPartition) -> bool {
    w.windows(2)
        .all(|pair| partition.block_of(pair[0]) != partition.block_of(pair[1]))
}

/// Competition ranking: every rank `v` (1-based) that occurs has exactly
/// `v - 1` entries strictly better than it. Ranks are stored 0-based, so
/// rank index `r` needs exactly `r` smaller entries.
pub fn is_legal_ranking(w: &[Letter]) -> bool {
    let mut counts = [0usize; MAX_ALPHABET];
    for &l in w {
        counts[l.index()] += 1;
    }
    let mut below = 0;
    for (rank, &c) in counts.iter().enumerate().take(w.len().max(1)) {
        if c > 0 && below != rank {
            return false;
        }
        below += c;
    }
    // Ranks at or above n can never have rank-many smaller entries.
    w.iter().all(|l| l.index() < w.len())
}

pub fn is_illegal_ranking(w: &[Letter]) -> bool {
    !is_legal_ranking(w)
}

/// At least one category has no letter in `w`.
pub fn is_nonpassword(w: &[Letter], partition: &CategoryPartition) -> bool {
    partition.blocks_present(w).contains(&false)
}

pub fn is_password(w: &[Letter], partition: &CategoryPartition) -> bool {
    !is_nonpassword(w, partition)
}
