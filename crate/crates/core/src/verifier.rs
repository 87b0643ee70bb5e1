//! Brute-force certification of candidate U-cycles.
//!
//! Membership comes from the class predicate and the expected size from a
//! fresh enumeration; nothing here reads the transition digraph.

use std::collections::HashMap;

use crate::alphabet::Letter;
use crate::class::{for_each_member, WordClass};
use crate::error::{Error, Result};
use crate::word::{encode, Word};

/// First defect found in a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// Every window is a distinct member, yet the candidate is longer than
    /// the class. Unreachable by pigeonhole; kept as an explicit length gate.
    LengthMismatch {
        expected: u128,
        actual: usize,
    },
    NonMemberWindow {
        index: usize,
        window: Word,
    },
    DuplicateWindow {
        first: usize,
        second: usize,
        window: Word,
    },
    /// Every window is a distinct member but some members never appear.
    Incomplete {
        missing: u128,
    },
}

impl Defect {
    pub fn kind(&self) -> &'static str {
        match self {
            Defect::LengthMismatch { .. } => "LengthMismatch",
            Defect::NonMemberWindow { .. } => "NonMemberWindow",
            Defect::DuplicateWindow { .. } => "DuplicateWindow",
            Defect::Incomplete { .. } => "Incomplete",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub valid: bool,
    pub defect: Option<Defect>,
    pub expected_size: u128,
    pub actual_size: usize,
}

/// The `|s|` cyclic windows of length `n`.
pub fn windows(s: &[Letter], n: usize) -> Result<Vec<Word>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok((0..s.len())
        .map(|i| (0..n).map(|j| s[(i + j) % s.len()]).collect())
        .collect())
}

/// Checks that the cyclic windows of `s` are exactly the members of `class`,
/// each once. The lowest-index defect is reported.
pub fn verify_ucycle(s: &[Letter], class: &WordClass) -> Result<VerificationResult> {
    let mut expected = 0u128;
    for_each_member(class, |_, _| expected += 1)?;
    let k = class.k();
    if let Some(l) = s.iter().find(|l| l.index() >= k) {
        return Err(Error::LetterOutOfRange {
            letter: l.index(),
            k,
        });
    }

    let mut seen: HashMap<u64, usize> = HashMap::with_capacity(s.len());
    let mut defect = None;
    for (index, window) in windows(s, class.n())?.into_iter().enumerate() {
        if !class.contains(&window) {
            defect = Some(Defect::NonMemberWindow { index, window });
            break;
        }
        if let Some(&first) = seen.get(&encode(&window, k)) {
            defect = Some(Defect::DuplicateWindow {
                first,
                second: index,
                window,
            });
            break;
        }
        seen.insert(encode(&window, k), index);
    }

    let actual = s.len() as u128;
    let defect = defect.or(if actual < expected {
        Some(Defect::Incomplete {
            missing: expected - actual,
        })
    } else if actual > expected {
        Some(Defect::LengthMismatch {
            expected,
            actual: s.len(),
        })
    } else {
        None
    });

    Ok(VerificationResult {
        valid: defect.is_none(),
        defect,
        expected_size: expected,
        actual_size: s.len(),
    })
}
