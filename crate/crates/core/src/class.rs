//! Word classes: a bound membership predicate over `n`-letter words plus
//! the metadata every other module reads (alphabet, verdict, closed count).

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Alphabet, CategoryPartition, Letter};
use crate::classes::{self, TheoremVerdict};
use crate::error::{Error, Result};
use crate::word::{self, Word};

/// Default ceiling on `k^n` for anything that enumerates the word space.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// The registered word classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    AllWords,
    Injective,
    Noninjective,
    Surjective,
    Nonsurjective,
    Alternating,
    LegalRanking,
    IllegalRanking,
    Password,
    Nonpassword,
}

impl ClassKind {
    pub const ALL: [ClassKind; 10] = [
        ClassKind::AllWords,
        ClassKind::Injective,
        ClassKind::Noninjective,
        ClassKind::Surjective,
        ClassKind::Nonsurjective,
        ClassKind::Alternating,
        ClassKind::LegalRanking,
        ClassKind::IllegalRanking,
        ClassKind::Password,
        ClassKind::Nonpassword,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::AllWords => "all_words",
            ClassKind::Injective => "injective",
            ClassKind::Noninjective => "noninjective",
            ClassKind::Surjective => "surjective",
            ClassKind::Nonsurjective => "nonsurjective",
            ClassKind::Alternating => "alternating",
            ClassKind::LegalRanking => "legal_ranking",
            ClassKind::IllegalRanking => "illegal_ranking",
            ClassKind::Password => "password",
            ClassKind::Nonpassword => "nonpassword",
        }
    }

    pub fn is_ranking(self) -> bool {
        matches!(self, ClassKind::LegalRanking | ClassKind::IllegalRanking)
    }

    pub fn uses_categories(self) -> bool {
        matches!(self, ClassKind::Password | ClassKind::Nonpassword)
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Unbound request for a class: name, word length and class parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub n: usize,
    pub k: Option<usize>,
    pub vowels: Option<usize>,
    pub consonants: Option<usize>,
    pub categories: Option<Vec<usize>>,
    pub symbols: Option<Vec<char>>,
    pub cap: u64,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, n: usize) -> Self {
        Self {
            kind,
            n,
            k: None,
            vowels: None,
            consonants: None,
            categories: None,
            symbols: None,
            cap: DEFAULT_CAP,
        }
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn alternation(mut self, vowels: usize, consonants: usize) -> Self {
        self.vowels = Some(vowels);
        self.consonants = Some(consonants);
        self
    }

    pub fn categories(mut self, sizes: &[usize]) -> Self {
        self.categories = Some(sizes.to_vec());
        self
    }

    pub fn symbols(mut self, symbols: &str) -> Self {
        self.symbols = Some(symbols.chars().collect());
        self
    }

    pub fn cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }
}

/// A fully bound class of `n`-letter words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordClass {
    kind: ClassKind,
    n: usize,
    alphabet: Alphabet,
    cap: u64,
    verdict: TheoremVerdict,
    closed_count: Option<u128>,
}

impl WordClass {
    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.alphabet.size()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn partition(&self) -> Option<&CategoryPartition> {
        self.alphabet.categories()
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn theorem_verdict(&self) -> &TheoremVerdict {
        &self.verdict
    }

    pub fn closed_count(&self) -> Option<u128> {
        self.closed_count
    }

    /// `k^n`, saturating at `u128::MAX`.
    pub fn space_size(&self) -> u128 {
        word::word_space(self.k(), self.n).unwrap_or(u128::MAX)
    }

    /// Fails unless the whole word space fits under the cap.
    pub fn check_cap(&self) -> Result<()> {
        let size = self.space_size();
        if size > self.cap as u128 {
            Err(Error::CapExceeded {
                size,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Membership predicate. `w` must have length `n` and letters below `k`.
    pub fn contains(&self, w: &[Letter]) -> bool {
        let k = self.k();
        match self.kind {
            ClassKind::AllWords => classes::is_all_words(w),
            ClassKind::Injective => classes::is_injective(w),
            ClassKind::Noninjective => classes::is_noninjective(w),
            ClassKind::Surjective => classes::is_surjective(w, k),
            ClassKind::Nonsurjective => classes::is_nonsurjective(w, k),
            ClassKind::Alternating => {
                let p = self
                    .partition()
                    .expect("alternating classes carry a partition");
                classes::alternates(w, p)
            }
            ClassKind::LegalRanking => classes::is_legal_ranking(w),
            ClassKind::IllegalRanking => !classes::is_legal_ranking(w),
            ClassKind::Password => classes::is_password(
                w,
                self.partition()
                    .expect("password classes carry a partition"),
            ),
            ClassKind::Nonpassword => classes::is_nonpassword(
                w,
                self.partition()
                    .expect("password classes carry a partition"),
            ),
        }
    }

    /// Checked membership for arbitrary input words.
    pub fn check_member(&self, w: &[Letter]) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: w.len(),
            });
        }
        if let Some(l) = w.iter().find(|l| l.index() >= self.k()) {
            return Err(Error::LetterOutOfRange {
                letter: l.index(),
                k: self.k(),
            });
        }
        Ok(self.contains(w))
    }

    /// Class parameters as `(key, value)` pairs, for reports.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if let Some(p) = self.partition() {
            if self.kind == ClassKind::Alternating {
                out.push(("kv", p.sizes()[0].to_string()));
                out.push(("kc", p.sizes()[1].to_string()));
            } else {
                let sizes: Vec<String> = p.sizes().iter().map(|s| s.to_string()).collect();
                out.push(("categories", sizes.join(",")));
            }
        }
        out
    }

    /// Short human label such as `noninjective(n=3, k=3)`.
    pub fn label(&self) -> String {
        let mut s = format!("{}(n={}, k={}", self.name(), self.n, self.k());
        for (key, value) in self.params() {
            s.push_str(&format!(", {key}={value}"));
        }
        s.push(')');
        s
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        self.alphabet.render(letters)
    }
}

fn reject_unused(spec: &ClassSpec) -> Result<()> {
    let name = spec.kind.name();
    if spec.kind != ClassKind::Alternating && (spec.vowels.is_some() || spec.consonants.is_some()) {
        return Err(Error::InvalidParameters(format!("{name} takes no kv/kc")));
    }
    if !spec.kind.uses_categories() && spec.categories.is_some() {
        return Err(Error::InvalidParameters(format!(
            "{name} takes no categories"
        )));
    }
    Ok(())
}

/// Binds a [`ClassSpec`] into a [`WordClass`], validating its parameters.
pub fn make_class(spec: &ClassSpec) -> Result<WordClass> {
    if spec.n < 1 {
        return Err(Error::InvalidParameters(
            "word length n must be at least 1".into(),
        ));
    }
    reject_unused(spec)?;

    let mismatch = |k: usize, implied: usize, what: &str| {
        Error::InvalidParameters(format!("k = {k} disagrees with {what} = {implied}"))
    };

    let (k, partition) = match spec.kind {
        ClassKind::Alternating => {
            let (kv, kc) = match (spec.vowels, spec.consonants) {
                (Some(kv), Some(kc)) => (kv, kc),
                _ => {
                    return Err(Error::InvalidParameters(
                        "alternating requires both kv and kc".into(),
                    ))
                }
            };
            let p = CategoryPartition::from_sizes(&[kv, kc])?;
            let implied = p.alphabet_size();
            match spec.k {
                Some(k) if k != implied => return Err(mismatch(k, implied, "kv + kc")),
                _ => (implied, Some(p)),
            }
        }
        kind if kind.uses_categories() => {
            let sizes = spec.categories.as_deref().ok_or_else(|| {
                Error::InvalidParameters(format!("{} requires category sizes", kind.name()))
            })?;
            let p = CategoryPartition::from_sizes(sizes)?;
            let implied = p.alphabet_size();
            match spec.k {
                Some(k) if k != implied => return Err(mismatch(k, implied, "the category total")),
                _ => (implied, Some(p)),
            }
        }
        kind if kind.is_ranking() => match spec.k {
            Some(k) if k != spec.n => return Err(mismatch(k, spec.n, "n for rankings")),
            _ => (spec.n, None),
        },
        kind => {
            let k = spec
                .k
                .ok_or_else(|| Error::InvalidParameters(format!("{} requires k", kind.name())))?;
            (k, None)
        }
    };

    let alphabet = match &spec.symbols {
        Some(symbols) => {
            if symbols.len() != k {
                return Err(Error::InvalidParameters(format!(
                    "{} symbols given for an alphabet of size {k}",
                    symbols.len()
                )));
            }
            Alphabet::with_symbols(symbols.clone())?
        }
        None if spec.kind.is_ranking() => Alphabet::ranks(k)?,
        None => Alphabet::latin(k)?,
    };
    let alphabet = match partition {
        Some(p) => alphabet.with_categories(p)?,
        None => alphabet,
    };

    let verdict = classes::theorem_verdict(spec.kind, spec.n, &alphabet);
    let closed_count = classes::closed_count(spec.kind, spec.n, &alphabet);
    Ok(WordClass {
        kind: spec.kind,
        n: spec.n,
        alphabet,
        cap: spec.cap,
        verdict,
        closed_count,
    })
}

/// Visits every class member in lexicographic order with its base-`k` code.
pub fn for_each_member(class: &WordClass, mut f: impl FnMut(u64, &[Letter])) -> Result<()> {
    class.check_cap()?;
    let k = class.k();
    let n = class.n;
    let total = class.space_size() as u64;
    let mut letters = vec![Letter(0); n];
    for code in 0..total {
        if class.contains(&letters) {
            f(code, &letters);
        }
        // Odometer increment, least significant letter last.
        for slot in letters.iter_mut().rev() {
            if slot.index() + 1 < k {
                slot.0 += 1;
                break;
            }
            slot.0 = 0;
        }
    }
    Ok(())
}

/// Lexicographic stream over the members of a class.
#[derive(Debug)]
pub struct ClassWords<'a> {
    class: &'a WordClass,
    next: Option<Vec<Letter>>,
}

impl Iterator for ClassWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let k = self.class.k();
        loop {
            let current = self.next.take()?;
            let mut succ = current.clone();
            let mut carried_out = true;
            for slot in succ.iter_mut().rev() {
                if slot.index() + 1 < k {
                    slot.0 += 1;
                    carried_out = false;
                    break;
                }
                slot.0 = 0;
            }
            if !carried_out {
                self.next = Some(succ);
            }
            if self.class.contains(&current) {
                return Some(Word(current));
            }
        }
    }
}

/// Streams the members of `class` in lexicographic order.
pub fn enumerate_class(class: &WordClass) -> Result<ClassWords<'_>> {
    class.check_cap()?;
    Ok(ClassWords {
        class,
        next: Some(vec![Letter(0); class.n]),
    })
}

/// `|class|`. When the closed form and an enumeration are both available
/// they are computed and compared.
pub fn count_class(class: &WordClass) -> Result<u128> {
    match (class.closed_count, class.check_cap()) {
        (Some(formula), Ok(())) => {
            let mut counted = 0u128;
            for_each_member(class, |_, _| counted += 1)?;
            if counted != formula {
                return Err(Error::CountMismatch {
                    class: class.label(),
                    formula,
                    enumerated: counted,
                });
            }
            Ok(formula)
        }
        (Some(formula), Err(_)) => Ok(formula),
        (None, Ok(())) => {
            let mut counted = 0u128;
            for_each_member(class, |_, _| counted += 1)?;
            Ok(counted)
        }
        (None, Err(e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(spec: ClassSpec) -> WordClass {
        make_class(&spec).unwrap()
    }

    #[test]
    fn make_class_examples() {
        let c = class(ClassSpec::new(ClassKind::Noninjective, 3).k(3));
        assert_eq!(c.closed_count(), Some(21));
        let c = class(ClassSpec::new(ClassKind::AllWords, 3).k(2));
        assert_eq!(c.closed_count(), Some(8));
        // Brute-force filter over all 3^4 words gives 8 (two starting blocks, 2*(2*1)^2).
        let c = class(ClassSpec::new(ClassKind::Alternating, 4).alternation(2, 1));
        assert_eq!(c.k(), 3);
        assert_eq!(c.closed_count(), Some(8));
        assert_eq!(count_class(&c).unwrap(), 8);
    }

    #[test]
    fn make_class_errors() {
        assert_eq!(
            "bogus".parse::<ClassKind>(),
            Err(Error::UnknownClass("bogus".into()))
        );
        let bad = [
            ClassSpec::new(ClassKind::AllWords, 0).k(2),
            ClassSpec::new(ClassKind::AllWords, 3),
            ClassSpec::new(ClassKind::Alternating, 3).k(3),
            ClassSpec::new(ClassKind::Alternating, 3)
                .alternation(2, 2)
                .k(5),
            ClassSpec::new(ClassKind::Alternating, 3).alternation(0, 2),
            ClassSpec::new(ClassKind::Nonpassword, 3),
            ClassSpec::new(ClassKind::Nonpassword, 3)
                .categories(&[1, 2])
                .k(4),
            ClassSpec::new(ClassKind::Password, 3).categories(&[1, 0, 2]),
            ClassSpec::new(ClassKind::IllegalRanking, 3).k(4),
            ClassSpec::new(ClassKind::Injective, 3)
                .k(3)
                .categories(&[1, 2]),
            ClassSpec::new(ClassKind::Injective, 3).k(3).symbols("AB"),
            ClassSpec::new(ClassKind::Injective, 3).k(3).symbols("ABA"),
        ];
        for spec in bad {
            assert!(
                matches!(make_class(&spec), Err(Error::InvalidParameters(_))),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn enumerate_small_classes() {
        let c = class(ClassSpec::new(ClassKind::Noninjective, 2).k(3));
        let words: Vec<String> = enumerate_class(&c).unwrap().map(|w| c.render(&w)).collect();
        assert_eq!(words, ["AA", "BB", "CC"]);

        let c = class(ClassSpec::new(ClassKind::Noninjective, 3).k(3));
        assert_eq!(enumerate_class(&c).unwrap().count(), 21);

        let c = class(ClassSpec::new(ClassKind::IllegalRanking, 3));
        assert_eq!(enumerate_class(&c).unwrap().count(), 14);
    }

    #[test]
    fn count_examples() {
        let count = |spec| count_class(&class(spec)).unwrap();
        assert_eq!(count(ClassSpec::new(ClassKind::Noninjective, 3).k(3)), 21);
        assert_eq!(count(ClassSpec::new(ClassKind::Injective, 3).k(3)), 6);
        // 3^4 - 36 surjections; 36 from inclusion-exclusion and a direct filter.
        assert_eq!(count(ClassSpec::new(ClassKind::Nonsurjective, 4).k(3)), 45);
    }

    #[test]
    fn cap_is_enforced_not_truncated() {
        let c = class(ClassSpec::new(ClassKind::AllWords, 5).k(4).cap(1000));
        assert_eq!(
            enumerate_class(&c).unwrap_err(),
            Error::CapExceeded {
                size: 1024,
                cap: 1000
            }
        );
        // The closed form still answers.
        assert_eq!(count_class(&c).unwrap(), 1024);
    }

    #[test]
    fn n_equal_one_is_a_valid_class() {
        let c = class(ClassSpec::new(ClassKind::AllWords, 1).k(4));
        assert_eq!(enumerate_class(&c).unwrap().count(), 4);
    }

    #[test]
    fn check_member_validates_shape() {
        let c = class(ClassSpec::new(ClassKind::Injective, 3).k(3));
        assert!(c.check_member(&Word::from_indices(&[0, 1])).is_err());
        assert!(c.check_member(&Word::from_indices(&[0, 1, 5])).is_err());
        assert!(c.check_member(&Word::from_indices(&[0, 1, 2])).unwrap());
    }
}
