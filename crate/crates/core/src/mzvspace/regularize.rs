use std::cell::RefCell;

use rustc_hash::FxHashMap;

use crate::freealg::{shuffle, Alphabet, Series, Word, X, Y};
use crate::q::Q;

thread_local! {
    static REG: RefCell<FxHashMap<Word, Series>> = RefCell::new(FxHashMap::default());
    static STAR_Y: RefCell<Vec<Series>> = const { RefCell::new(Vec::new()) };
}

const A: Alphabet = Alphabet::XY;

/// Shuffle regularization: a combination of convergent words (or the empty
/// word for the empty input), with Z(x) = Z(y) = 0.
pub fn shuffle_regularize(w: Word) -> Series {
    if w.is_empty() {
        return Series::one(A);
    }
    if w.is_convergent() {
        return Series::word(A, w);
    }
    if let Some(s) = REG.with(|c| c.borrow().get(&w).cloned()) {
        return s;
    }
    let n = w.len();
    let r = w.letters().take_while(|&l| l == Y).count();
    let s = if r == n { 0 } else { w.letters().rev().take_while(|&l| l == X).count() };
    let v = w.slice(r, n - s);
    let mut out = Series::zero(A);
    for a in 0..=r {
        for b in 0..=s {
            let mid = Word::power(Y, r - a).concat(v).concat(Word::power(X, s - b));
            let left = shuffle(A, Word::power(Y, a), mid);
            let full = left.shuffle(&Series::word(A, Word::power(X, b)));
            let sign = if (a + b) % 2 == 0 { Q::one() } else { Q::int(-1) };
            out.add_scaled(&full, &sign);
        }
    }
    debug_assert!(out.words().all(|u| u.is_convergent()), "regularization left divergent words for {:?}", w);
    REG.with(|c| c.borrow_mut().insert(w, out.clone()));
    out
}

pub fn regularize_series(f: &Series) -> Series {
    let mut out = Series::zero(A);
    for (w, q) in f.iter() {
        out.add_scaled(&shuffle_regularize(*w), q);
    }
    out
}

/// Z_*(y^n) from exp(Σ_{k≥2} (-1)^{k-1}/k Z(x^{k-1}y) T^k), products by shuffle.
fn star_y_power(n: usize) -> Series {
    STAR_Y.with(|c| {
        let mut e = c.borrow_mut();
        if e.is_empty() {
            e.push(Series::one(A));
        }
        while e.len() <= n {
            let m = e.len();
            // m E_m = Σ_{k=2}^{m} k s_k E_{m-k}, s_k = (-1)^{k-1}/k Z(x^{k-1}y)
            let mut acc = Series::zero(A);
            for k in 2..=m {
                let sk = Series::word(A, Word::power(X, k - 1).append(Y));
                let sign = if k % 2 == 1 { Q::one() } else { Q::int(-1) };
                acc.add_scaled(&sk.shuffle(&e[m - k]), &sign);
            }
            let em = acc.scale(&Q::new(1, m as i64));
            e.push(em);
        }
        e[n].clone()
    })
}

#[derive(Debug, thiserror::Error)]
#[error("stuffle regularization needs a word ending in y")]
pub struct NotYTerminated;

/// Stuffle regularization Z_*(w) in terms of shuffle-regularized symbols.
pub fn stuffle_regularize(w: Word) -> Result<Series, NotYTerminated> {
    if w.is_empty() {
        return Ok(Series::one(A));
    }
    if w.last() != Some(Y) {
        return Err(NotYTerminated);
    }
    let i = w.letters().take_while(|&l| l == Y).count();
    let v = w.slice(i, w.len());
    let mut out = Series::zero(A);
    for j in 0..=i {
        let sy = star_y_power(j);
        if sy.is_zero() {
            continue;
        }
        let rest = shuffle_regularize(Word::power(Y, i - j).concat(v));
        out.add_scaled(&sy.shuffle(&rest), &Q::one());
    }
    Ok(out)
}

pub fn stuffle_regularize_series(f: &Series) -> Result<Series, NotYTerminated> {
    let mut out = Series::zero(A);
    for (w, q) in f.iter() {
        out.add_scaled(&stuffle_regularize(*w)?, q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_series;

    fn s(t: &str) -> Series {
        parse_series(t, A).unwrap()
    }

    fn w(t: &str) -> Word {
        Word::parse(t).unwrap().0
    }

    #[test]
    fn shuffle_reg_examples() {
        assert_eq!(shuffle_regularize(w("yxy")), s("-2 xyy"));
        assert_eq!(shuffle_regularize(w("xy")), s("xy"));
        assert!(shuffle_regularize(w("y")).is_zero());
        assert!(shuffle_regularize(w("x")).is_zero());
        assert_eq!(shuffle_regularize(w("yx")), s("-xy"));
    }

    #[test]
    fn stuffle_reg_examples() {
        assert_eq!(stuffle_regularize(w("yy")).unwrap(), s("-1/2 xy"));
        assert_eq!(stuffle_regularize(w("yyy")).unwrap(), s("1/3 xxy"));
        assert_eq!(stuffle_regularize(w("xxy")).unwrap(), s("xxy"));
        assert!(stuffle_regularize(w("yx")).is_err());
    }

    #[test]
    fn regularization_is_convergent_everywhere() {
        for n in 0..=9 {
            for u in crate::freealg::word::all_words(n) {
                let r = shuffle_regularize(u);
                assert!(r.words().all(|v| v.is_convergent() || (n == 0 && v.is_empty())), "{:?}", u);
            }
        }
    }
}
