//! Closed-form class sizes. `None` signals `u128` overflow.

use crate::alphabet::Alphabet;
use crate::class::ClassKind;
use crate::word::word_space;

/// `(k)_n = k (k-1) ... (k-n+1)`, the number of injective words.
pub fn falling_factorial(k: usize, n: usize) -> Option<u128> {
    if n > k {
        return Some(0);
    }
    (0..n).try_fold(1u128, |acc, i| acc.checked_mul((k - i) as u128))
}

fn binomial(n: usize, r: usize) -> Option<u128> {
    let r = r.min(n - r);
    (0..r).try_fold(1u128, |acc, i| {
        acc.checked_mul((n - i) as u128)
            .map(|x| x / (i as u128 + 1))
    })
}

/// Surjections from `[n]` onto `[k]`, by inclusion-exclusion over the
/// missing letters.
pub fn surjections(n: usize, k: usize) -> Option<u128> {
    let mut total: i128 = 0;
    for j in 0..=k {
        let term = binomial(k, j)?.checked_mul(word_space(k - j, n)?)?;
        let term = i128::try_from(term).ok()?;
        total = if j % 2 == 0 {
            total.checked_add(term)?
        } else {
            total.checked_sub(term)?
        };
    }
    u128::try_from(total).ok()
}

/// Ordered Bell (Fubini) number: weak orders on `n` items, which is the
/// number of legal competition rankings of `n` contestants.
pub fn ordered_bell(n: usize) -> Option<u128> {
    (0..=n).try_fold(0u128, |acc, j| acc.checked_add(surjections(n, j)?))
}

/// Words that use every category, by inclusion-exclusion over the set of
/// excluded categories. Subsets are grouped by the number of letters they
/// exclude so the cost is `O(L k)` rather than `2^L`.
pub fn passwords(n: usize, sizes: &[usize]) -> Option<u128> {
    let k: usize = sizes.iter().sum();
    // signed[s] = sum over subsets excluding exactly s letters of (-1)^|subset|
    let mut signed = vec![0i128; k + 1];
    signed[0] = 1;
    for &size in sizes {
        for s in (0..=k - size).rev() {
            let v = signed[s];
            signed[s + size] = signed[s + size].checked_sub(v)?;
        }
    }
    let mut total: i128 = 0;
    for (excluded, &coef) in signed.iter().enumerate() {
        if coef == 0 {
            continue;
        }
        let words = i128::try_from(word_space(k - excluded, n)?).ok()?;
        total = total.checked_add(coef.checked_mul(words)?)?;
    }
    u128::try_from(total).ok()
}

/// Words of length `n` whose adjacent letters alternate between a block of
/// `kv` and a block of `kc` letters, starting in either block.
pub fn alternating_words(n: usize, kv: usize, kc: usize) -> Option<u128> {
    if n == 0 {
        return Some(1);
    }
    let (kv, kc) = (kv as u128, kc as u128);
    let pow = |b: u128, e: usize| b.checked_pow(u32::try_from(e).ok()?);
    let half = n / 2;
    let from_v = pow(kv, n - half)?.checked_mul(pow(kc, half)?)?;
    let from_c = pow(kc, n - half)?.checked_mul(pow(kv, half)?)?;
    from_v.checked_add(from_c)
}

/// Closed-form size of a class, where one is known.
pub fn closed_count(kind: ClassKind, n: usize, alphabet: &Alphabet) -> Option<u128> {
    let k = alphabet.size();
    let all = word_space(k, n)?;
    let sizes = alphabet.categories().map(|p| p.sizes());
    match kind {
        ClassKind::AllWords => Some(all),
        ClassKind::Injective => falling_factorial(k, n),
        ClassKind::Noninjective => all.checked_sub(falling_factorial(k, n)?),
        ClassKind::Surjective => surjections(n, k),
        ClassKind::Nonsurjective => all.checked_sub(surjections(n, k)?),
        ClassKind::Alternating => {
            let sizes = sizes?;
            alternating_words(n, sizes[0], sizes[1])
        }
        ClassKind::LegalRanking => ordered_bell(n),
        ClassKind::IllegalRanking => all.checked_sub(ordered_bell(n)?),
        ClassKind::Password => passwords(n, sizes?),
        ClassKind::Nonpassword => all.checked_sub(passwords(n, sizes?)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute<F: Fn(&[usize]) -> bool>(n: usize, k: usize, keep: F) -> u128 {
        let mut count = 0;
        let mut w = vec![0usize; n];
        loop {
            if keep(&w) {
                count += 1;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < k {
                    break;
                }
                w[i] = 0;
            }
        }
    }

    fn distinct(w: &[usize]) -> usize {
        let mut v = w.to_vec();
        v.sort();
        v.dedup();
        v.len()
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(3, 3), Some(6));
        assert_eq!(falling_factorial(5, 2), Some(20));
        assert_eq!(falling_factorial(2, 3), Some(0));
        assert_eq!(falling_factorial(4, 0), Some(1));
    }

    #[test]
    fn surjections_match_filter() {
        assert_eq!(surjections(4, 3), Some(36));
        for n in 1..=6 {
            for k in 1..=5 {
                let direct = brute(n, k, |w| distinct(w) == k);
                assert_eq!(surjections(n, k), Some(direct), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ordered_bell_numbers() {
        let seq: Vec<u128> = (1..=6).map(|n| ordered_bell(n).unwrap()).collect();
        assert_eq!(seq, [1, 3, 13, 75, 541, 4683]);
    }

    #[test]
    fn passwords_match_filter() {
        for sizes in [&[1usize, 1][..], &[2, 1], &[1, 2, 1], &[2, 2, 1], &[3]] {
            let k: usize = sizes.iter().sum();
            let block = |l: usize| {
                let mut acc = 0;
                sizes.iter().position(|&s| {
                    acc += s;
                    l < acc
                })
            };
            for n in 1..=5 {
                let direct = brute(n, k, |w| {
                    (0..sizes.len()).all(|b| w.iter().any(|&l| block(l) == Some(b)))
                });
                assert_eq!(passwords(n, sizes), Some(direct), "{sizes:?} n={n}");
            }
        }
    }

    #[test]
    fn alternating_counts_match_filter() {
        for (kv, kc) in [(1, 1), (2, 1), (2, 3), (1, 4)] {
            for n in 1..=6 {
                let direct = brute(n, kv + kc, |w| {
                    w.windows(2).all(|p| (p[0] < kv) != (p[1] < kv))
                });
                assert_eq!(alternating_words(n, kv, kc), Some(direct));
            }
        }
    }

    #[test]
    fn overflow_is_none() {
        assert_eq!(falling_factorial(200, 40), None);
        assert_eq!(surjections(200, 3), None);
    }
}
