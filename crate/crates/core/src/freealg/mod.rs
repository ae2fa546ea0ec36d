//! Noncommutative polynomials in two letters: words, series, shuffle and
//! stuffle products, Lyndon brackets, push and switch.

pub mod lyndon;
pub mod nc;
pub mod parse;
pub mod series;
pub mod shuffle;
pub mod word;

pub use lyndon::{lie_decompose, lyndon_bracket, LyndonIndex};
pub use parse::parse_series;
pub use series::{Graded, Series};
pub use shuffle::{is_primitive, shuffle, stuffle};
pub use word::{Alphabet, Word, X, Y};

use crate::q::Q;

/// Push on every word of a series.
pub fn push_series(f: &Series) -> Series {
    f.map_words(|w| w.push())
}

/// Sum over the push orbit of a word, each distinct orbit element once per step.
pub fn push_orbit_sum(alpha: Alphabet, w: Word) -> Series {
    let mut out = Series::zero(alpha);
    let mut u = w;
    for _ in 0..=w.count(Y) {
        out.add_term(u, Q::one());
        u = u.push();
    }
    out
}

/// Iterated adjoint ad_u^n(v).
pub fn ad_pow(u: &Series, n: usize, v: &Series) -> Series {
    let mut r = v.clone();
    for _ in 0..n {
        r = u.bracket(&r);
    }
    r
}
