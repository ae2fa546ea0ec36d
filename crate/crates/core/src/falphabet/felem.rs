//! The f-alphabet Q[f2] ⊗ Q<f3, f5, …> with shuffle product and deconcatenation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::q::{bernoulli, factorial, Q};

/// f2^f2 · f_{word[0]} ⋯ f_{word[r-1]} with odd letters ≥ 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FWord {
    pub f2: usize,
    pub word: Vec<usize>,
}

impl FWord {
    pub fn new(f2: usize, word: Vec<usize>) -> FWord {
        assert!(word.iter().all(|&k| k >= 3 && k % 2 == 1), "f-letters must be odd and ≥ 3");
        FWord { f2, word }
    }

    pub fn weight(&self) -> usize {
        2 * self.f2 + self.word.iter().sum::<usize>()
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.f2 {
            0 => {}
            1 => parts.push("f2".to_string()),
            n => parts.push(format!("f2^{}", n)),
        }
        parts.extend(self.word.iter().map(|k| format!("f{}", k)));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// ζ_{2m}/ζ2^m = (−1)^{m−1} 24^m B_{2m} / (2 (2m)!).
pub fn even_ratio(m: usize) -> Q {
    let sign = if m % 2 == 1 { Q::one() } else { Q::int(-1) };
    sign * Q::int(24).pow(m as u32) * bernoulli(2 * m) / (Q::int(2) * factorial(2 * m as u64))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FElem {
    terms: BTreeMap<FWord, Q>,
}

fn shuffle_words(u: &[usize], v: &[usize], out: &mut BTreeMap<Vec<usize>, u64>) {
    fn rec(u: &[usize], v: &[usize], cur: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        if u.is_empty() || v.is_empty() {
            let mut w = cur.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *out.entry(w).or_default() += 1;
            return;
        }
        cur.push(u[0]);
        rec(&u[1..], v, cur, out);
        cur.pop();
        cur.push(v[0]);
        rec(u, &v[1..], cur, out);
        cur.pop();
    }
    rec(u, v, &mut Vec::new(), out);
}

impl FElem {
    pub fn zero() -> FElem {
        FElem::default()
    }

    pub fn one() -> FElem {
        FElem::word(FWord { f2: 0, word: vec![] })
    }

    pub fn word(w: FWord) -> FElem {
        let mut e = FElem::zero();
        e.add_term(w, Q::one());
        e
    }

    /// f_n, with f_{2m} = (ζ_{2m}/ζ2^m) f2^m.
    pub fn f(n: usize) -> FElem {
        assert!(n >= 2, "f_n needs n ≥ 2");
        if n % 2 == 0 {
            let mut e = FElem::zero();
            e.add_term(FWord { f2: n / 2, word: vec![] }, even_ratio(n / 2));
            e
        } else {
            FElem::word(FWord::new(0, vec![n]))
        }
    }

    pub fn add_term(&mut self, w: FWord, q: Q) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &FElem, c: &Q) {
        for (w, q) in &o.terms {
            self.add_term(w.clone(), q * c);
        }
    }

    pub fn scale(&self, c: &Q) -> FElem {
        let mut e = FElem::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &FWord) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FWord, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn shuffle(&self, o: &FElem) -> FElem {
        let mut out = FElem::zero();
        for (a, p) in &self.terms {
            for (b, q) in &o.terms {
                let mut ws = BTreeMap::new();
                shuffle_words(&a.word, &b.word, &mut ws);
                let c = p * q;
                for (w, n) in ws {
                    out.add_term(FWord { f2: a.f2 + b.f2, word: w }, &c * Q::int(n as i64));
                }
            }
        }
        out
    }

    /// Append the letter f_k to every word.
    pub fn append(&self, k: usize) -> FElem {
        let mut out = FElem::zero();
        for (w, q) in &self.terms {
            let mut v = w.word.clone();
            v.push(k);
            out.add_term(FWord::new(w.f2, v), q.clone());
        }
        out
    }

    /// Projection F → F-bar, dropping every term with a power of f2.
    pub fn mod_f2(&self) -> FElem {
        let mut out = FElem::zero();
        for (w, q) in &self.terms {
            if w.f2 == 0 {
                out.add_term(w.clone(), q.clone());
            }
        }
        out
    }

    /// Deconcatenation coaction F → F ⊗ F-bar; f2 powers stay on the left.
    pub fn deconcatenate(&self) -> FTensor {
        let mut t = FTensor::default();
        for (w, q) in &self.terms {
            for j in 0..=w.word.len() {
                let l = FWord { f2: w.f2, word: w.word[..j].to_vec() };
                let r = FWord { f2: 0, word: w.word[j..].to_vec() };
                t.add_term(l, r, q.clone());
            }
        }
        t
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, q)) in self.terms.iter().enumerate() {
            let neg = q.signum() < 0;
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = q.abs();
            let empty = w.f2 == 0 && w.word.is_empty();
            if empty {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", w)?;
            } else {
                write!(f, "{} {}", a, w)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot parse f-alphabet element: {0}")]
pub struct FParseError(String);

impl FromStr for FElem {
    type Err = FParseError;

    /// Terms `c fa fb^k …`; even fa means (ζ_a/ζ2^{a/2}) f2^{a/2}.
    fn from_str(s: &str) -> Result<FElem, FParseError> {
        let spaced = s.replace('*', " ").replace('+', " + ").replace('-', " - ");
        let mut out = FElem::zero();
        let mut sign = Q::one();
        let mut term: Option<FElem> = None;
        let mut flush = |sign: &Q, term: &mut Option<FElem>| {
            if let Some(t) = term.take() {
                out.add_scaled(&t, sign);
            }
        };
        for tok in spaced.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(&sign, &mut term);
                    sign = if tok == "-" { Q::int(-1) } else { Q::one() };
                }
                t if t.starts_with(|c: char| c.is_ascii_digit()) => {
                    if term.is_some() {
                        return Err(FParseError(format!("unexpected number {}", t)));
                    }
                    let q: Q = t.parse().map_err(|_| FParseError(t.into()))?;
                    term = Some(FElem::one().scale(&q));
                }
                t => {
                    let body = t.strip_prefix('f').ok_or_else(|| FParseError(t.into()))?;
                    let (n, k) = match body.split_once('^') {
                        Some((n, k)) => (n, k.parse::<usize>().map_err(|_| FParseError(t.into()))?),
                        None => (body, 1),
                    };
                    let n: usize = n.parse().map_err(|_| FParseError(t.into()))?;
                    if n < 2 {
                        return Err(FParseError(t.into()));
                    }
                    let mut acc = term.take().unwrap_or_else(FElem::one);
                    for _ in 0..k {
                        acc = if n % 2 == 0 { acc.shuffle(&FElem::f(n)) } else { acc.append(n) };
                    }
                    term = Some(acc);
                }
            }
        }
        flush(&sign, &mut term);
        Ok(out)
    }
}

/// Element of F ⊗ F-bar.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FTensor {
    terms: BTreeMap<(FWord, FWord), Q>,
}

impl FTensor {
    pub fn add_term(&mut self, l: FWord, r: FWord, q: Q) {
        if q.is_zero() || r.f2 > 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((l, r)) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// a ⊗ b with b projected mod f2.
    pub fn add_product(&mut self, a: &FElem, b: &FElem, c: &Q) {
        for (l, p) in a.iter() {
            for (r, q) in b.iter() {
                self.add_term(l.clone(), r.clone(), c * &(p * q));
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(FWord, FWord), &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), q)| format!("{} {} ⊗ {}", q, l, r)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FElem {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_and_ratios() {
        assert_eq!(e("f3").shuffle(&e("f3")), e("2 f3 f3"));
        assert_eq!(e("f3").shuffle(&e("f5")), e("f3 f5 + f5 f3"));
        assert_eq!(even_ratio(1), Q::one());
        assert_eq!(even_ratio(2), Q::new(2, 5));
        assert_eq!(even_ratio(3), Q::new(8, 35));
        assert_eq!(e("f4"), e("2/5 f2^2"));
        assert_eq!(e("f2 f3 f3").to_string(), "f2 f3 f3");
    }

    #[test]
    fn deconcatenation() {
        let t = e("f3 f5").deconcatenate();
        let mut want = FTensor::default();
        want.add_product(&e("f3 f5"), &FElem::one(), &Q::one());
        want.add_product(&e("f3"), &e("f5"), &Q::one());
        want.add_product(&FElem::one(), &e("f3 f5"), &Q::one());
        assert_eq!(t, want);
        let mut f2 = FTensor::default();
        f2.add_product(&e("f2"), &FElem::one(), &Q::one());
        assert_eq!(e("f2").deconcatenate(), f2);
    }
}
