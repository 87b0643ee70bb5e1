//! Common in/out degree of a transition-digraph vertex, as predicted by the
//! counting argument behind each existence result.

use crate::alphabet::Letter;
use crate::class::{ClassKind, WordClass};
use crate::error::{Error, Result};

use super::predicates::{alternates, is_legal_ranking, is_noninjective};

/// Predicted common degree of `vertex` (an `(n-1)`-letter word), or `None`
/// where no prediction is made.
pub fn predicted_degree(class: &WordClass, vertex: &[Letter]) -> Result<Option<usize>> {
    let n = class.n();
    let k = class.k();
    if vertex.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(1),
            actual: vertex.len(),
        });
    }
    if let Some(l) = vertex.iter().find(|l| l.index() >= k) {
        return Err(Error::LetterOutOfRange {
            letter: l.index(),
            k,
        });
    }

    let degree = match class.kind() {
        ClassKind::Noninjective => Some(if is_noninjective(vertex) { k } else { n - 1 }),
        ClassKind::Nonsurjective => {
            let mut present = vec![false; k];
            for &l in vertex {
                present[l.index()] = true;
            }
            match present.iter().filter(|&&p| !p).count() {
                0 => None,
                1 => Some(k - 1),
                _ => Some(k),
            }
        }
        ClassKind::IllegalRanking => {
            let mut extended = vertex.to_vec();
            extended.push(Letter(0));
            let legal = (0..k)
                .filter(|&x| {
                    extended[n - 1] = Letter(x as u8);
                    is_legal_ranking(&extended)
                })
                .count();
            Some(n - legal)
        }
        ClassKind::Nonpassword => {
            let p = class
                .partition()
                .expect("password classes carry a partition");
            let missing: Vec<usize> = p
                .blocks_present(vertex)
                .iter()
                .enumerate()
                .filter(|(_, &present)| !present)
                .map(|(b, _)| b)
                .collect();
            match missing.as_slice() {
                [] => None,
                [only] => Some(k - p.sizes()[*only]),
                _ => Some(k),
            }
        }
        ClassKind::Alternating => {
            let p = class
                .partition()
                .expect("alternating classes carry a partition");
            let (kv, kc) = (p.sizes()[0], p.sizes()[1]);
            if vertex.is_empty() || !alternates(vertex, p) {
                None
            } else if n.is_multiple_of(2) {
                // Odd-length vertex: both ends share a block; extensions come from the other.
                match p.block_of(vertex[0]) {
                    0 => Some(kc),
                    _ => Some(kv),
                }
            } else if kv == kc {
                Some(kv)
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{make_class, ClassSpec};

    fn degree(spec: ClassSpec, vertex: &str) -> Option<usize> {
        let class = make_class(&spec).unwrap();
        let v = class.alphabet().parse(vertex).unwrap();
        predicted_degree(&class, &v).unwrap()
    }

    #[test]
    fn illegal_ranking_worked_vertices() {
        let spec = || ClassSpec::new(ClassKind::IllegalRanking, 5);
        assert_eq!(degree(spec(), "1145"), Some(3));
        assert_eq!(degree(spec(), "2254"), Some(4));
        assert_eq!(degree(spec(), "5555"), Some(5));
    }

    #[test]
    fn noninjective_distinct_vertex() {
        let spec = || ClassSpec::new(ClassKind::Noninjective, 4).k(5);
        assert_eq!(degree(spec(), "ABC"), Some(3));
        assert_eq!(degree(spec(), "ABA"), Some(5));
    }

    #[test]
    fn nonsurjective_and_nonpassword() {
        let spec = || ClassSpec::new(ClassKind::Nonsurjective, 4).k(3);
        assert_eq!(degree(spec(), "ABB"), Some(2));
        assert_eq!(degree(spec(), "AAA"), Some(3));
        assert_eq!(degree(spec(), "ABC"), None);

        let spec = || ClassSpec::new(ClassKind::Nonpassword, 4).categories(&[1, 2, 1]);
        assert_eq!(degree(spec(), "ABB"), Some(3));
        assert_eq!(degree(spec(), "BCB"), Some(4));
        assert_eq!(degree(spec(), "ABD"), None);
    }

    #[test]
    fn alternating_degrees() {
        // A, B vowels; C consonant.
        let even = || ClassSpec::new(ClassKind::Alternating, 4).alternation(2, 1);
        assert_eq!(degree(even(), "ACB"), Some(1));
        assert_eq!(degree(even(), "CAC"), Some(2));
        assert_eq!(degree(even(), "AAC"), None);
        let odd = || ClassSpec::new(ClassKind::Alternating, 5).alternation(2, 2);
        assert_eq!(degree(odd(), "ACAD"), Some(2));
    }

    #[test]
    fn unanalyzed_classes_and_errors() {
        let class = make_class(&ClassSpec::new(ClassKind::AllWords, 3).k(2)).unwrap();
        assert_eq!(
            predicted_degree(&class, &[Letter(0), Letter(1)]).unwrap(),
            None
        );
        assert!(predicted_degree(&class, &[Letter(0)]).is_err());
        assert!(predicted_degree(&class, &[Letter(0), Letter(7)]).is_err());
    }
}
