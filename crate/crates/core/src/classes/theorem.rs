//! Known existence results for U-cycles of each class.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::class::{ClassKind, WordClass};

use super::counts::closed_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Exists,
    NotExists,
    /// No known result covers these parameters.
    Unsettled,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Exists => "exists",
            Verdict::NotExists => "not_exists",
            Verdict::Unsettled => "unsettled",
        }
    }

    /// `Some(bool)` for a settled verdict.
    pub fn settled(self) -> Option<bool> {
        match self {
            Verdict::Exists => Some(true),
            Verdict::NotExists => Some(false),
            Verdict::Unsettled => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verdict plus the condition that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub verdict: Verdict,
    pub citation: String,
}

impl TheoremVerdict {
    fn new(verdict: Verdict, citation: impl Into<String>) -> Self {
        Self {
            verdict,
            citation: citation.into(),
        }
    }
}

fn exists(citation: impl Into<String>) -> TheoremVerdict {
    TheoremVerdict::new(Verdict::Exists, citation)
}

fn not_exists(citation: impl Into<String>) -> TheoremVerdict {
    TheoremVerdict::new(Verdict::NotExists, citation)
}

fn unsettled(citation: impl Into<String>) -> TheoremVerdict {
    TheoremVerdict::new(Verdict::Unsettled, citation)
}

const DE_BRUIJN: &str = "de Bruijn: all k^n words admit a U-cycle for every n, k";

/// The verdict recorded on `class` when it was bound.
pub fn theorem_exists(class: &WordClass) -> TheoremVerdict {
    class.theorem_verdict().clone()
}

/// Existence verdict for a class with the given parameters.
pub fn theorem_verdict(kind: ClassKind, n: usize, alphabet: &Alphabet) -> TheoremVerdict {
    let k = alphabet.size();
    let categories = alphabet.categories();

    if kind == ClassKind::Nonpassword && categories.map_or(0, |p| p.len()) == 1 {
        return unsettled("non-passwords over a single category: not covered (the class is empty)");
    }
    if n == 1 {
        return single_letter_verdict(kind, alphabet);
    }

    match kind {
        ClassKind::AllWords => exists(DE_BRUIJN),
        ClassKind::Injective | ClassKind::Surjective if k < 3 => unsettled(format!(
            "{kind} words are only classified for k >= 3 (k = {k})"
        )),
        ClassKind::Injective if n == k => not_exists(
            "injective words with n = k >= 3 are permutations, which split into disjoint rotation cycles",
        ),
        ClassKind::Injective if k > n => exists("injective words, k >= 3: U-cycle iff k > n (holds)"),
        ClassKind::Injective => not_exists("injective words, k >= 3: U-cycle iff k > n (fails)"),
        ClassKind::Surjective if n == k => not_exists(
            "surjective words with n = k >= 3 are permutations, which split into disjoint rotation cycles",
        ),
        ClassKind::Surjective if n > k => exists("surjective words, k >= 3: U-cycle iff n > k (holds)"),
        ClassKind::Surjective => not_exists("surjective words, k >= 3: U-cycle iff n > k (fails)"),
        ClassKind::Alternating => {
            let sizes = categories.expect("alternating classes carry a partition").sizes();
            let (kv, kc) = (sizes[0], sizes[1]);
            if n.is_multiple_of(2) {
                exists("alternating words: U-cycle when n is even")
            } else if kv == kc {
                exists("alternating words: U-cycle when n is odd and kv = kc")
            } else {
                not_exists(format!(
                    "alternating words, n odd with kv != kc: a vertex running from one block to the \
                     other has out-degree {kv} and in-degree {kc} (degree obstruction)"
                ))
            }
        }
        ClassKind::Noninjective => {
            if n > k {
                exists(format!("n > k: every word repeats a letter, so {DE_BRUIJN}"))
            } else if n >= 4 {
                exists("non-injective words: U-cycle for n >= 4")
            } else if n == 2 {
                // n > k already covers k = 1.
                not_exists("non-injective words with n = 2 need k = 1")
            } else {
                unsettled("non-injective words with n = 3 are not covered")
            }
        }
        ClassKind::Nonsurjective => {
            if n < k {
                exists(format!("n < k: every word misses a letter, so {DE_BRUIJN}"))
            } else if k == 2 {
                not_exists("k = 2: the only non-surjective words are the two constant words")
            } else if k > 2 {
                exists("non-surjective words: U-cycle for n >= k > 2")
            } else {
                unsettled("non-surjective words over one letter are not covered (the class is empty)")
            }
        }
        ClassKind::IllegalRanking => {
            if n == 3 {
                not_exists("illegal rankings, n = 3: 112, 121, 211 form a separate three-cycle")
            } else {
                exists("illegal rankings: U-cycle for n != 1, 3")
            }
        }
        ClassKind::LegalRanking => unsettled("legal rankings are not classified here"),
        ClassKind::Password => unsettled("strong passwords are not classified here"),
        ClassKind::Nonpassword => {
            let l = categories.expect("password classes carry a partition").len();
            if l >= 3 {
                exists(format!("non-passwords: U-cycle for L >= 3 categories (L = {l})"))
            } else {
                not_exists(
                    "non-passwords, L = 2: single-category words of either block never connect",
                )
            }
        }
    }
}

/// With one-letter windows any listing of the members is a U-cycle, so the
/// question reduces to whether the class is empty.
fn single_letter_verdict(kind: ClassKind, alphabet: &Alphabet) -> TheoremVerdict {
    match kind {
        ClassKind::Noninjective => not_exists("n = 1: no single letter repeats"),
        ClassKind::IllegalRanking => not_exists("n = 1: the only ranking, 1, is legal"),
        _ => match closed_count(kind, 1, alphabet) {
            Some(0) => not_exists("n = 1: the class is empty"),
            Some(_) => exists("n = 1: any listing of the single-letter members is a U-cycle"),
            None => unsettled("n = 1: class size unavailable"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{make_class, ClassSpec};

    fn verdict(spec: ClassSpec) -> Verdict {
        theorem_exists(&make_class(&spec).unwrap()).verdict
    }

    #[test]
    fn worked_verdicts() {
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Noninjective, 4).k(5)),
            Verdict::Exists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::IllegalRanking, 3)),
            Verdict::NotExists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Nonpassword, 3).categories(&[1, 1])),
            Verdict::NotExists
        );
    }

    #[test]
    fn injective_and_surjective() {
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Injective, 3).k(3)),
            Verdict::NotExists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Injective, 3).k(4)),
            Verdict::Exists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Injective, 4).k(3)),
            Verdict::NotExists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Injective, 2).k(2)),
            Verdict::Unsettled
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Surjective, 3).k(3)),
            Verdict::NotExists
        );
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::Surjective, 4).k(3)),
            Verdict::Exists
        );
    }

    #[test]
    fn noninjective_cases() {
        let v = |n, k| verdict(ClassSpec::new(ClassKind::Noninjective, n).k(k));
        assert_eq!(v(1, 3), Verdict::NotExists);
        assert_eq!(v(2, 1), Verdict::Exists);
        assert_eq!(v(2, 3), Verdict::NotExists);
        assert_eq!(v(3, 3), Verdict::Unsettled);
        assert_eq!(v(3, 2), Verdict::Exists);
        assert_eq!(v(5, 6), Verdict::Exists);
    }

    #[test]
    fn nonsurjective_cases() {
        let v = |n, k| verdict(ClassSpec::new(ClassKind::Nonsurjective, n).k(k));
        assert_eq!(v(5, 2), Verdict::NotExists);
        assert_eq!(v(2, 3), Verdict::Exists);
        assert_eq!(v(3, 3), Verdict::Exists);
        assert_eq!(v(3, 1), Verdict::Unsettled);
    }

    #[test]
    fn alternating_parity_split() {
        let v = |n, kv, kc| verdict(ClassSpec::new(ClassKind::Alternating, n).alternation(kv, kc));
        assert_eq!(v(4, 2, 1), Verdict::Exists);
        assert_eq!(v(5, 2, 2), Verdict::Exists);
        assert_eq!(v(5, 2, 1), Verdict::NotExists);
        assert_eq!(v(1, 2, 1), Verdict::Exists);
    }

    #[test]
    fn rankings_and_passwords() {
        let v = |n| verdict(ClassSpec::new(ClassKind::IllegalRanking, n));
        assert_eq!(v(1), Verdict::NotExists);
        assert_eq!(v(2), Verdict::Exists);
        assert_eq!(v(4), Verdict::Exists);
        assert_eq!(
            verdict(ClassSpec::new(ClassKind::LegalRanking, 3)),
            Verdict::Unsettled
        );
        let np = |n, sizes: &[usize]| {
            verdict(ClassSpec::new(ClassKind::Nonpassword, n).categories(sizes))
        };
        assert_eq!(np(3, &[2]), Verdict::Unsettled);
        assert_eq!(np(1, &[1, 1]), Verdict::Exists);
        assert_eq!(np(4, &[1, 2, 1]), Verdict::Exists);
    }
}
