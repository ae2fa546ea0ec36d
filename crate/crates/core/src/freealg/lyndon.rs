use std::cell::RefCell;

use rustc_hash::FxHashMap;

use super::series::Series;
use super::word::{Alphabet, Word};
use crate::q::Q;

/// Strictly smaller than each of its proper suffixes.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Split point of the standard factorization w = u v, with v the longest
/// proper Lyndon suffix (equivalently the leftmost split into two Lyndon words).
pub fn standard_split<T: Ord>(w: &[T]) -> usize {
    debug_assert!(w.len() >= 2);
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a single letter is Lyndon")
}

/// Fold a Lyndon word into its standard bracketing.
pub fn bracket_fold<T: Ord, E>(w: &[T], leaf: &mut impl FnMut(&T) -> E, br: &mut impl FnMut(E, E) -> E) -> E {
    if w.len() == 1 {
        return leaf(&w[0]);
    }
    let i = standard_split(w);
    let l = bracket_fold(&w[..i], leaf, br);
    let r = bracket_fold(&w[i..], leaf, br);
    br(l, r)
}

/// Bracketing as text, e.g. `[x,[[x,y],y]]`.
pub fn bracket_string<T: Ord>(w: &[T], name: impl Fn(&T) -> String) -> String {
    bracket_fold(w, &mut |t| name(t), &mut |l, r| format!("[{},{}]", l, r))
}

/// Lyndon words of length `n` over `k` letters 0..k, increasing (Duval).
pub fn lyndon_sequences(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&l) = w.last() {
            if l == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

pub fn lyndon_words(n: usize) -> Vec<Word> {
    lyndon_sequences(2, n).iter().map(|v| Word::from_letters(v)).collect()
}

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut res = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    res
}

/// Witt formula: number of Lyndon words of length n over k letters.
pub fn witt(k: u64, n: usize) -> u64 {
    let s: i64 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) * (k as i64).pow((n / d) as u32)).sum();
    (s / n as i64) as u64
}

thread_local! {
    static BRACKETS: RefCell<FxHashMap<Word, Series>> = RefCell::new(FxHashMap::default());
}

#[derive(Debug, thiserror::Error)]
pub enum LyndonError {
    #[error("not a Lyndon word: {0:?}")]
    NotLyndon(Word),
    #[error("not a Lie element: leading word {0:?} is not Lyndon")]
    NotLie(Word),
}

/// Standard bracketing of a binary Lyndon word, expanded (over x, y).
pub fn lyndon_bracket(w: Word) -> Result<Series, LyndonError> {
    let v = w.to_vec();
    if !is_lyndon(&v) {
        return Err(LyndonError::NotLyndon(w));
    }
    Ok(bracket_cached(w, &v))
}

fn bracket_cached(w: Word, v: &[u8]) -> Series {
    if let Some(s) = BRACKETS.with(|c| c.borrow().get(&w).cloned()) {
        return s;
    }
    let s = if v.len() == 1 {
        Series::word(Alphabet::XY, w)
    } else {
        let i = standard_split(v);
        let l = bracket_cached(w.slice(0, i), &v[..i]);
        let r = bracket_cached(w.slice(i, v.len()), &v[i..]);
        l.bracket(&r)
    };
    BRACKETS.with(|c| c.borrow_mut().insert(w, s.clone()));
    s
}

/// Coefficients on Lyndon brackets, in increasing word order.
///
/// Each bracket P_L equals L plus lexicographically larger words, so the
/// smallest surviving word is always the next Lyndon word to peel off.
pub fn lie_decompose(f: &Series) -> Result<Vec<(Word, Q)>, LyndonError> {
    let mut rest = f.with_alphabet(Alphabet::XY);
    let mut out = Vec::new();
    while let Some(w) = rest.words().min() {
        let v = w.to_vec();
        if !is_lyndon(&v) {
            return Err(LyndonError::NotLie(w));
        }
        let c = rest.coeff(w);
        rest.add_scaled(&bracket_cached(w, &v), &-&c);
        out.push((w, c));
    }
    Ok(out)
}

/// Inverse of `lie_decompose`.
pub fn lie_compose(alpha: Alphabet, coeffs: &[(Word, Q)]) -> Series {
    let mut out = Series::zero(Alphabet::XY);
    for (w, c) in coeffs {
        out.add_scaled(&lyndon_bracket(*w).expect("Lyndon word"), c);
    }
    out.with_alphabet(alpha)
}

/// Lyndon words of one degree together with their expanded brackets.
pub struct LyndonIndex {
    pub degree: usize,
    pub words: Vec<Word>,
    pub brackets: Vec<Series>,
}

impl LyndonIndex {
    pub fn new(degree: usize) -> Self {
        let words = lyndon_words(degree);
        let brackets = words.iter().map(|w| lyndon_bracket(*w).unwrap()).collect();
        LyndonIndex { degree, words, brackets }
    }

    /// Coordinate vector aligned with `words`.
    pub fn coordinates(&self, f: &Series) -> Result<Vec<Q>, LyndonError> {
        let dec = lie_decompose(f)?;
        let mut v = vec![Q::zero(); self.words.len()];
        for (w, c) in dec {
            let i = self.words.binary_search(&w).map_err(|_| LyndonError::NotLie(w))?;
            v[i] = c;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap().0
    }

    #[test]
    fn standard_brackets() {
        let name = |l: &u8| if *l == 0 { "x".to_string() } else { "y".to_string() };
        assert_eq!(bracket_string(&w("xxyy").to_vec(), name), "[x,[[x,y],y]]");
        assert_eq!(bracket_string(&w("xy").to_vec(), name), "[x,y]");
        assert!(lyndon_bracket(w("yx")).is_err());
    }

    #[test]
    fn duval_counts() {
        let expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335];
        for n in 1..=12 {
            assert_eq!(lyndon_words(n).len(), expected[n - 1]);
            assert_eq!(witt(2, n), expected[n - 1] as u64);
        }
        assert_eq!(lyndon_sequences(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn decompose_small() {
        let x = Series::letter(Alphabet::XY, 0);
        let y = Series::letter(Alphabet::XY, 1);
        let f = y.bracket(&x.bracket(&y));
        assert_eq!(lie_decompose(&f).unwrap(), vec![(w("xyy"), Q::int(-1))]);
        assert!(lie_decompose(&Series::zero(Alphabet::XY)).unwrap().is_empty());
        assert!(lie_decompose(&Series::word(Alphabet::XY, w("xy"))).is_err());
    }
}
