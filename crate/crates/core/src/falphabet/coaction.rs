//! Goncharov–Brown coaction Δ_GB : MZ → MZ ⊗ MZ-bar by the polygon rule.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::freealg::Word;
use crate::genuszero::{canonical_decomposition, ZeroError};
use crate::mzvspace::{self, weight_basis};
use crate::q::Q;

/// One polygon with a non-vanishing symbol: I(0; chosen; 1) ⊗ Π segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    /// positions (0-based) of the inner vertices in a_1 … a_n
    pub vertices: Vec<usize>,
    pub left: Word,
    pub right: Vec<Word>,
    pub sign: i64,
}

/// a_1 … a_n for I(0; a; 1) = ζ(w): the reversed word with x → 0, y → 1.
fn letters(w: Word) -> Vec<u8> {
    w.letters().rev().collect()
}

/// Word of I(a; s; b), with sign, or None when the symbol vanishes; Some(None) is 1.
fn segment(a: u8, s: &[u8], b: u8) -> Option<(Option<Word>, i64)> {
    if s.is_empty() {
        return Some((None, 1));
    }
    if a == b || s.len() == 1 {
        return None;
    }
    if a == 0 {
        let rev: Vec<u8> = s.iter().rev().copied().collect();
        Some((Some(Word::from_letters(&rev)), 1))
    } else {
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        Some((Some(Word::from_letters(s)), sign))
    }
}

/// All polygons with non-vanishing symbol, before any reduction.
pub fn polygons(w: Word) -> Vec<Polygon> {
    let a = letters(w);
    let n = a.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let vertices: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut right = Vec::new();
        let mut sign = 1;
        let mut prev_val = 0u8;
        let mut prev_pos = 0usize;
        let mut ok = true;
        for &v in vertices.iter().chain(std::iter::once(&n)) {
            let end = if v == n { 1 } else { a[v] };
            match segment(prev_val, &a[prev_pos..v], end) {
                None => {
                    ok = false;
                    break;
                }
                Some((seg, s)) => {
                    sign *= s;
                    right.extend(seg);
                }
            }
            if v < n {
                prev_val = a[v];
                prev_pos = v + 1;
            }
        }
        if !ok {
            continue;
        }
        let chosen: Vec<u8> = vertices.iter().rev().map(|&i| a[i]).collect();
        if chosen.len() == 1 {
            continue;
        }
        out.push(Polygon { vertices, left: Word::from_letters(&chosen), right, sign });
    }
    out
}

/// Element of MZ_{w'} ⊗ MZ-bar_{w''}, both factors in semi-canonical
/// coordinates, right factor with every ζ2-bearing coordinate removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    /// (left weight, right weight) → matrix [left index][right index]
    pub parts: BTreeMap<(usize, usize), Vec<Vec<Q>>>,
}

fn dim(w: usize) -> Result<usize, ZeroError> {
    Ok(match w {
        0 => 1,
        1 => 0,
        _ => weight_basis(w)?.dim(),
    })
}

/// Semi-canonical coordinates of a weight-basis vector.
pub fn semi(w: usize, v: &[Q]) -> Result<Vec<Q>, ZeroError> {
    Ok(if w < 2 { v.to_vec() } else { canonical_decomposition(w)?.semi_canonical(v) })
}

/// Semi-canonical coordinates modulo ζ2.
pub fn semi_bar(w: usize, v: &[Q]) -> Result<Vec<Q>, ZeroError> {
    if w < 2 {
        return Ok(v.to_vec());
    }
    let dec = canonical_decomposition(w)?;
    let mut s = dec.semi_canonical(v);
    for (x, m) in s.iter_mut().zip(&dec.monos) {
        if m.has_even() {
            *x = Q::zero();
        }
    }
    Ok(s)
}

impl Tensor {
    /// Add c · a ⊗ b for semi-canonical a (weight wl) and b (weight wr, already mod ζ2).
    pub fn add_outer(&mut self, wl: usize, a: &[Q], wr: usize, b: &[Q], c: &Q) -> Result<(), ZeroError> {
        if c.is_zero() || a.iter().all(|x| x.is_zero()) || b.iter().all(|x| x.is_zero()) {
            return Ok(());
        }
        let (dl, dr) = (dim(wl)?, dim(wr)?);
        let m = self.parts.entry((wl, wr)).or_insert_with(|| vec![vec![Q::zero(); dr]; dl]);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = c * x;
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    m[i][j] += &(&cx * y);
                }
            }
        }
        Ok(())
    }

    /// Add c · a ⊗ b for weight-basis vectors; the right factor is projected mod ζ2.
    pub fn add_basis_outer(&mut self, wl: usize, a: &[Q], wr: usize, b: &[Q], c: &Q) -> Result<(), ZeroError> {
        let a = semi(wl, a)?;
        let b = semi_bar(wr, b)?;
        self.add_outer(wl, &a, wr, &b, c)
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Q) {
        for (k, m) in &o.parts {
            let e = self.parts.entry(*k).or_insert_with(|| vec![vec![Q::zero(); m.first().map_or(0, |r| r.len())]; m.len()]);
            for (r, s) in e.iter_mut().zip(m) {
                for (x, y) in r.iter_mut().zip(s) {
                    *x += &(c * y);
                }
            }
        }
    }

    pub fn normalized(mut self) -> Tensor {
        self.parts.retain(|_, m| m.iter().any(|r| r.iter().any(|x| !x.is_zero())));
        self
    }

    /// Nonzero entries as (left label, right label, coefficient).
    pub fn describe(&self) -> Result<Vec<(String, String, Q)>, ZeroError> {
        let label = |w: usize, i: usize| -> Result<String, ZeroError> {
            Ok(if w == 0 { "1".into() } else { canonical_decomposition(w)?.monos[i].label() })
        };
        let mut out = Vec::new();
        for (&(wl, wr), m) in &self.parts {
            for (i, r) in m.iter().enumerate() {
                for (j, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        out.push((label(wl, i)?, label(wr, j)?, x.clone()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Weight-basis coordinates of a (possibly divergent) word; weight 0 is [1].
pub fn word_coords(w: Word) -> Result<Vec<Q>, ZeroError> {
    Ok(match w.len() {
        0 => vec![Q::one()],
        1 => vec![],
        n => weight_basis(n)?.reduce_word(w),
    })
}

fn product_coords(ws: &[Word]) -> Result<(usize, Vec<Q>), ZeroError> {
    let mut acc = (0usize, vec![Q::one()]);
    for &u in ws {
        let c = word_coords(u)?;
        acc = match (acc.0, u.len()) {
            (0, l) => (l, c),
            (_, 1) => (acc.0 + 1, vec![]),
            (w, l) => (w + l, mzvspace::multiply(w, &acc.1, l, &c)?),
        };
    }
    Ok(acc)
}

/// Δ_GB ζ(w) for any word (divergent words by shuffle regularization).
pub fn coaction_word(w: Word) -> Result<Tensor, ZeroError> {
    if !w.is_convergent() {
        let b = weight_basis(w.len())?;
        return coaction(w.len(), &b.reduce_word(w));
    }
    let mut grouped: FxHashMap<(Word, Vec<Word>), i64> = FxHashMap::default();
    for p in polygons(w) {
        let mut r = p.right;
        r.sort();
        *grouped.entry((p.left, r)).or_default() += p.sign;
    }
    let mut t = Tensor::default();
    for ((l, r), n) in grouped {
        if n == 0 {
            continue;
        }
        let a = word_coords(l)?;
        let (wr, b) = product_coords(&r)?;
        t.add_basis_outer(l.len(), &a, wr, &b, &Q::int(n))?;
    }
    Ok(t.normalized())
}

fn basis_memo() -> &'static crate::memo::Memo<Word, Result<std::sync::Arc<Tensor>, String>> {
    static M: std::sync::OnceLock<crate::memo::Memo<Word, Result<std::sync::Arc<Tensor>, String>>> =
        std::sync::OnceLock::new();
    M.get_or_init(crate::memo::Memo::new)
}

/// Δ_GB of an element of MZ_w given in weight-basis coordinates.
pub fn coaction(w: usize, v: &[Q]) -> Result<Tensor, ZeroError> {
    let b = weight_basis(w)?;
    let mut t = Tensor::default();
    for (x, &u) in v.iter().zip(&b.basis) {
        if x.is_zero() {
            continue;
        }
        let r = basis_memo().get_or_init(&u, || coaction_word(u).map(std::sync::Arc::new).map_err(|e| e.to_string()));
        let part = r.map_err(ZeroError::Other)?;
        t.add_scaled(&part, x);
    }
    Ok(t.normalized())
}

/// The other ordering Δ^GB = ι ∘ Δ_GB, as (right, left) pairs.
pub fn swapped(t: &Tensor) -> BTreeMap<(usize, usize), Vec<Vec<Q>>> {
    t.parts
        .iter()
        .map(|(&(l, r), m)| {
            let rows = m.first().map_or(0, |x| x.len());
            ((r, l), (0..rows).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect())
        })
        .collect()
}
