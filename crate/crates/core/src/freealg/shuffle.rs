use rustc_hash::FxHashMap;

use super::series::Series;
use super::word::{Alphabet, Word, X, Y};
use crate::q::Q;

type Counts = FxHashMap<Word, u64>;

fn to_series(alpha: Alphabet, c: Counts) -> Series {
    Series::from_terms(alpha, c.into_iter().map(|(w, n)| (w, Q::int(n as i64))))
}

/// Shuffle product of two words.
pub fn shuffle(alpha: Alphabet, u: Word, v: Word) -> Series {
    to_series(alpha, shuffle_counts(u, v))
}

pub fn shuffle_counts(u: Word, v: Word) -> Counts {
    let (n, m) = (u.len(), v.len());
    // table[i][j] = shuffle of u[i..] and v[j..]
    let mut table: Vec<Vec<Counts>> = vec![vec![Counts::default(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let mut c = Counts::default();
            if i == n {
                c.insert(v.slice(j, m), 1);
            } else if j == m {
                c.insert(u.slice(i, n), 1);
            } else {
                for (w, k) in &table[i + 1][j] {
                    *c.entry(w.prepend(u.get(i))).or_insert(0) += k;
                }
                for (w, k) in &table[i][j + 1] {
                    *c.entry(w.prepend(v.get(j))).or_insert(0) += k;
                }
            }
            table[i][j] = c;
        }
        if i + 1 <= n {
            table[i + 1] = Vec::new();
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend_part(w: Word, k: usize) -> Word {
    let mut w = w.prepend(Y);
    for _ in 1..k {
        w = w.prepend(X);
    }
    w
}

#[derive(Debug, thiserror::Error)]
#[error("stuffle needs words ending in the second letter")]
pub struct NotYTerminated;

/// Stuffle (quasi-shuffle) product of two y-terminated words, in the
/// letters y_i = x^{i-1} y with y_i ∗ y_j contributing y_{i+j}.
pub fn stuffle(alpha: Alphabet, u: Word, v: Word) -> Result<Series, NotYTerminated> {
    let a = u.to_composition().ok_or(NotYTerminated)?;
    let b = v.to_composition().ok_or(NotYTerminated)?;
    let (n, m) = (a.len(), b.len());
    let mut table: Vec<Vec<Counts>> = vec![vec![Counts::default(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let mut c = Counts::default();
            if i == n {
                c.insert(Word::from_composition(&b[j..]), 1);
            } else if j == m {
                c.insert(Word::from_composition(&a[i..]), 1);
            } else {
                for (w, k) in &table[i + 1][j] {
                    *c.entry(prepend_part(*w, a[i])).or_insert(0) += k;
                }
                for (w, k) in &table[i][j + 1] {
                    *c.entry(prepend_part(*w, b[j])).or_insert(0) += k;
                }
                for (w, k) in &table[i + 1][j + 1] {
                    *c.entry(prepend_part(*w, a[i] + b[j])).or_insert(0) += k;
                }
            }
            table[i][j] = c;
        }
    }
    Ok(to_series(alpha, std::mem::take(&mut table[0][0])))
}

/// Letters of `w` at the positions selected by `mask` (bit i = position i from the left).
fn subword(w: Word, mask: u64) -> Word {
    let mut out = Word::EMPTY;
    for i in 0..w.len() {
        if mask >> i & 1 == 1 {
            out = out.append(w.get(i));
        }
    }
    out
}

/// Components of the deshuffle coproduct of `f` with both factors nonempty.
pub fn deshuffle_reduced(f: &Series) -> FxHashMap<(Word, Word), Q> {
    let mut out: FxHashMap<(Word, Word), Q> = FxHashMap::default();
    for (w, q) in f.iter() {
        let n = w.len();
        if n < 2 {
            continue;
        }
        let full = (1u64 << n) - 1;
        for mask in 1..full {
            let key = (subword(*w, mask), subword(*w, full ^ mask));
            *out.entry(key).or_default() += q;
        }
    }
    out.retain(|_, q| !q.is_zero());
    out
}

/// Lie membership via the shuffle pairing: ⟨u ⧢ v, f⟩ = 0 for all nonempty u, v.
/// The pairing values are exactly the components of the deshuffle coproduct.
pub fn is_primitive(f: &Series) -> bool {
    if f.coeff(Word::EMPTY) != Q::zero() {
        return false;
    }
    deshuffle_reduced(f).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap().0
    }

    fn s(terms: &[(i64, &str)]) -> Series {
        Series::from_terms(Alphabet::XY, terms.iter().map(|(c, t)| (w(t), Q::int(*c))))
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(Alphabet::XY, w("xy"), w("xy")), s(&[(4, "xxyy"), (2, "xyxy")]));
        assert_eq!(shuffle(Alphabet::XY, w("x"), w("y")), s(&[(1, "xy"), (1, "yx")]));
        assert_eq!(shuffle(Alphabet::XY, Word::EMPTY, w("xyy")), s(&[(1, "xyy")]));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(stuffle(Alphabet::XY, w("xy"), w("xy")).unwrap(), s(&[(2, "xyxy"), (1, "xxxy")]));
        assert_eq!(
            stuffle(Alphabet::XY, w("yy"), w("xy")).unwrap(),
            s(&[(1, "xyyy"), (1, "yxyy"), (1, "yyxy"), (1, "xxyy"), (1, "yxxy")])
        );
        assert!(stuffle(Alphabet::XY, w("yx"), w("y")).is_err());
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&s(&[(1, "xy"), (-1, "yx")])));
        assert!(!is_primitive(&s(&[(1, "xy")])));
    }
}
