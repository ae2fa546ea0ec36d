//! Noncommutative polynomials over an arbitrary ordered alphabet.
//!
//! Used for formal computations in free Lie algebras on symbols (odd zeta
//! generators, ε-symbols), where words are short and sparse.

use std::collections::BTreeMap;
use std::fmt;

use super::lyndon::{is_lyndon, standard_split};
use crate::q::Q;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly<T: Ord + Clone> {
    terms: BTreeMap<Vec<T>, Q>,
}

impl<T: Ord + Clone> Default for NcPoly<T> {
    fn default() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> NcPoly<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w: Vec<T>, q: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(w, q);
        p
    }

    pub fn sym(t: T) -> Self {
        Self::monomial(vec![t], Q::one())
    }

    pub fn add_term(&mut self, w: Vec<T>, q: Q) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(q);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, q) in &o.terms {
            self.add_term(w.clone(), c * q);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut p = Self::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<T>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[T]) -> Q {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                p.add_term(w, a * b);
            }
        }
        p
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let mut p = self.mul(o);
        p.add_scaled(&o.mul(self), &Q::int(-1));
        p
    }

    /// Apply a linear map on letters extended as a derivation.
    pub fn derive(&self, d: impl Fn(&T) -> Vec<(T, Q)>) -> Self {
        let mut p = Self::zero();
        for (w, q) in &self.terms {
            for i in 0..w.len() {
                for (t, c) in d(&w[i]) {
                    let mut v = w.clone();
                    v[i] = t;
                    p.add_term(v, q * &c);
                }
            }
        }
        p
    }

    pub fn map_letters<U: Ord + Clone>(&self, f: impl Fn(&T) -> U) -> NcPoly<U> {
        let mut p = NcPoly::zero();
        for (w, q) in &self.terms {
            p.add_term(w.iter().map(&f).collect(), q.clone());
        }
        p
    }
}

/// Standard bracket of a Lyndon sequence, expanded.
pub fn lyndon_poly<T: Ord + Clone>(w: &[T]) -> NcPoly<T> {
    if w.len() == 1 {
        return NcPoly::sym(w[0].clone());
    }
    let i = standard_split(w);
    lyndon_poly(&w[..i]).bracket(&lyndon_poly(&w[i..]))
}

/// Decompose a Lie polynomial into Lyndon brackets; `None` if not Lie.
/// Ordering is by length, then lexicographic, matching the leading-term
/// property of standard brackets.
pub fn lie_decompose_nc<T: Ord + Clone>(f: &NcPoly<T>) -> Option<Vec<(Vec<T>, Q)>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while let Some(w) = rest.terms.keys().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).cloned() {
        if !is_lyndon(&w) {
            return None;
        }
        let c = rest.coeff(&w);
        rest.add_scaled(&lyndon_poly(&w), &-&c);
        out.push((w, c));
    }
    Some(out)
}

impl<T: Ord + Clone + fmt::Debug> fmt::Debug for NcPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, q)| format!("{} {:?}", q, w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_and_decompose() {
        let (a, b, c) = (NcPoly::sym(3u32), NcPoly::sym(5u32), NcPoly::sym(7u32));
        let j = a.bracket(&b.bracket(&c));
        let mut s = j.clone();
        s.add_scaled(&b.bracket(&c.bracket(&a)), &Q::one());
        s.add_scaled(&c.bracket(&a.bracket(&b)), &Q::one());
        assert!(s.is_zero());
        let d = lie_decompose_nc(&j).unwrap();
        let mut back = NcPoly::zero();
        for (w, q) in d {
            back.add_scaled(&lyndon_poly(&w), &q);
        }
        assert_eq!(back, j);
    }
}
