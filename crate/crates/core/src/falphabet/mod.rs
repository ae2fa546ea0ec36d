//! The f-alphabet comodule and the normalized isomorphism ρ : MZ → F.

pub mod coaction;
pub mod felem;

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use rustc_hash::FxHashMap;

pub use coaction::{coaction, coaction_word, polygons, Polygon, Tensor};
pub use felem::{even_ratio, FElem, FTensor, FWord};

use crate::genuszero::{canonical_decomposition, gen_coords, Gen, Mono, ZeroError};
use crate::q::Q;

type R<T> = Result<T, ZeroError>;

/// A normalized isomorphism ρ_c, with c the f_w-coefficients of the
/// semi-canonical irreducibles (all zero for the canonical ρ).
pub struct Rho {
    params: BTreeMap<Vec<usize>, Q>,
    irr: Mutex<FxHashMap<Vec<usize>, FElem>>,
}

impl Rho {
    pub fn with_params(params: BTreeMap<Vec<usize>, Q>) -> Rho {
        Rho { params, irr: Mutex::new(FxHashMap::default()) }
    }

    /// The canonical ρ = ρ_0.
    pub fn canonical() -> &'static Rho {
        static R: OnceLock<Rho> = OnceLock::new();
        R.get_or_init(|| Rho::with_params(BTreeMap::new()))
    }

    fn gen(&self, g: &Gen) -> R<FElem> {
        match g {
            Gen::Odd(n) => Ok(FElem::f(*n)),
            Gen::Irr(v) => self.irreducible(v),
        }
    }

    /// ρ(Z_v): the part with a last letter below the full weight is read off
    /// from the coaction; the f_w coefficient is the free parameter.
    pub fn irreducible(&self, v: &[usize]) -> R<FElem> {
        if let Some(e) = self.irr.lock().unwrap().get(v) {
            return Ok(e.clone());
        }
        let w: usize = v.iter().sum();
        let z = gen_coords(&Gen::Irr(v.to_vec()))?;
        let t = coaction(w, &z)?;
        let mut out = FElem::zero();
        for (&(wl, wr), m) in &t.parts {
            if wl == 0 || wr == 0 {
                continue;
            }
            let dec_r = canonical_decomposition(wr)?;
            // only a single ζ_l on the right has an f_l component under ρ̄
            let Some(j) = dec_r.index_of(&Mono { even: 0, gens: vec![Gen::Odd(wr)] }) else {
                continue;
            };
            let dec_l = canonical_decomposition(wl)?;
            for (i, row) in m.iter().enumerate() {
                if !row[j].is_zero() {
                    out.add_scaled(&self.mono(&dec_l.monos[i])?.append(wr), &row[j]);
                }
            }
        }
        if let Some(c) = self.params.get(v) {
            out.add_scaled(&FElem::f(w), c);
        }
        self.irr.lock().unwrap().insert(v.to_vec(), out.clone());
        Ok(out)
    }

    pub fn mono(&self, m: &Mono) -> R<FElem> {
        let mut acc = if m.even > 0 { FElem::f(m.even) } else { FElem::one() };
        for g in &m.gens {
            acc = acc.shuffle(&self.gen(g)?);
        }
        Ok(acc)
    }

    /// ρ on semi-canonical coordinates of weight w.
    pub fn semi(&self, w: usize, s: &[Q]) -> R<FElem> {
        if w == 0 {
            return Ok(FElem::one().scale(&s[0]));
        }
        let dec = canonical_decomposition(w)?;
        let mut out = FElem::zero();
        for (x, m) in s.iter().zip(&dec.monos) {
            if !x.is_zero() {
                out.add_scaled(&self.mono(m)?, x);
            }
        }
        Ok(out)
    }

    /// ρ on weight-basis coordinates of weight w.
    pub fn apply(&self, w: usize, v: &[Q]) -> R<FElem> {
        self.semi(w, &coaction::semi(w, v)?)
    }

    /// (ρ ⊗ ρ̄) of a coaction tensor.
    pub fn tensor(&self, t: &Tensor) -> R<FTensor> {
        let mut out = FTensor::default();
        for (&(wl, wr), m) in &t.parts {
            let left: Vec<FElem> = unit_images(self, wl)?;
            let right: Vec<FElem> = unit_images(self, wr)?.into_iter().map(|e| e.mod_f2()).collect();
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        out.add_product(&left[i], &right[j], x);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn unit_images(rho: &Rho, w: usize) -> R<Vec<FElem>> {
    if w == 0 {
        return Ok(vec![FElem::one()]);
    }
    let dec = canonical_decomposition(w)?;
    dec.monos.iter().map(|m| rho.mono(m)).collect()
}

/// Canonical ρ on weight-basis coordinates.
pub fn rho(w: usize, v: &[Q]) -> R<FElem> {
    Rho::canonical().apply(w, v)
}

/// Canonical ρ of a word.
pub fn rho_word(w: crate::Word) -> R<FElem> {
    rho(w.len(), &coaction::word_coords(w)?)
}

/// Whether Δ(ρ(ξ)) = (ρ ⊗ ρ̄)(Δ_GB ξ).
pub fn intertwines(w: usize, v: &[Q]) -> R<bool> {
    let lhs = rho(w, v)?.deconcatenate();
    let rhs = Rho::canonical().tensor(&coaction(w, v)?)?;
    Ok(lhs == rhs)
}

/// Matrix of ρ on weight w: rows are basis elements, columns the f-words that occur.
pub fn rho_matrix(w: usize) -> R<(Vec<FWord>, Vec<Vec<Q>>)> {
    let d = crate::mzvspace::weight_basis(w)?.dim();
    let mut images = Vec::new();
    for i in 0..d {
        let mut e = vec![Q::zero(); d];
        e[i] = Q::one();
        images.push(rho(w, &e)?);
    }
    let mut words: Vec<FWord> = images.iter().flat_map(|e| e.iter().map(|(w, _)| w.clone())).collect();
    words.sort();
    words.dedup();
    let rows = images.iter().map(|e| words.iter().map(|u| e.coeff(u)).collect()).collect();
    Ok((words, rows))
}

/// Number of f-words of weight w (f2 powers times odd words).
pub fn f_dimension(w: usize) -> usize {
    fn odd_words(n: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if n == 0 {
            return 1;
        }
        if let Some(c) = memo[n] {
            return c;
        }
        let mut c = 0;
        let mut k = 3;
        while k <= n {
            c += odd_words(n - k, memo);
            k += 2;
        }
        memo[n] = Some(c);
        c
    }
    let mut memo = vec![None; w + 1];
    (0..=w / 2).filter(|m| w - 2 * m != 1).map(|m| if w - 2 * m == 0 { 1 } else { odd_words(w - 2 * m, &mut memo) }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genuszero::expr::mzv_expr;
    use crate::Word;

    #[test]
    fn primitive_odd_singles() {
        for k in [3usize, 5, 7] {
            let t = coaction_word(Word::of_mzv(&[k])).unwrap();
            let d = t.describe().unwrap();
            let z = format!("z{}", k);
            assert_eq!(d, vec![("1".into(), z.clone(), Q::one()), (z, "1".into(), Q::one())]);
        }
        let t = coaction_word(Word::of_mzv(&[4])).unwrap();
        assert_eq!(t.describe().unwrap(), vec![("z4".into(), "1".into(), Q::one())]);
    }

    #[test]
    fn f_dimensions_match() {
        let d: Vec<usize> = (2..=10).map(f_dimension).collect();
        assert_eq!(d, vec![1, 1, 1, 2, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn rho_z2z3() {
        let (w, v) = mzv_expr("z2 z3").unwrap();
        assert_eq!(rho(w, &v).unwrap(), "f2 f3".parse().unwrap());
    }
}
