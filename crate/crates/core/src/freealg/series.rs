use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;

use super::word::{Alphabet, Word};
use crate::q::Q;

/// Sparse exact linear combination of words.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    pub alpha: Alphabet,
    terms: FxHashMap<Word, Q>,
}

impl Series {
    pub fn zero(alpha: Alphabet) -> Series {
        Series { alpha, terms: FxHashMap::default() }
    }

    pub fn one(alpha: Alphabet) -> Series {
        Series::word(alpha, Word::EMPTY)
    }

    pub fn word(alpha: Alphabet, w: Word) -> Series {
        Series::term(alpha, w, Q::one())
    }

    pub fn term(alpha: Alphabet, w: Word, q: Q) -> Series {
        let mut s = Series::zero(alpha);
        s.add_term(w, q);
        s
    }

    pub fn letter(alpha: Alphabet, l: u8) -> Series {
        Series::word(alpha, Word::letter(l))
    }

    pub fn from_terms(alpha: Alphabet, it: impl IntoIterator<Item = (Word, Q)>) -> Series {
        let mut s = Series::zero(alpha);
        for (w, q) in it {
            s.add_term(w, q);
        }
        s
    }

    /// Accumulate in place; used while building fresh values.
    pub fn add_term(&mut self, w: Word, q: Q) {
        if q.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += &q;
                if v.is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(q);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Series, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, q) in &other.terms {
            self.add_term(*w, c * q);
        }
    }

    pub fn coeff(&self, w: Word) -> Q {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    /// Terms in the canonical graded-lexicographic order.
    pub fn sorted(&self) -> Vec<(Word, Q)> {
        let mut v: Vec<(Word, Q)> = self.terms.iter().map(|(w, q)| (*w, q.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.terms.keys().copied()
    }

    pub fn with_alphabet(&self, alpha: Alphabet) -> Series {
        Series { alpha, terms: self.terms.clone() }
    }

    pub fn scale(&self, c: &Q) -> Series {
        if c.is_zero() {
            return Series::zero(self.alpha);
        }
        Series { alpha: self.alpha, terms: self.terms.iter().map(|(w, q)| (*w, q * c)).collect() }
    }

    pub fn map_words(&self, f: impl Fn(Word) -> Word) -> Series {
        Series::from_terms(self.alpha, self.terms.iter().map(|(w, q)| (f(*w), q.clone())))
    }

    pub fn filter(&self, f: impl Fn(Word) -> bool) -> Series {
        Series { alpha: self.alpha, terms: self.terms.iter().filter(|(w, _)| f(**w)).map(|(w, q)| (*w, q.clone())).collect() }
    }

    pub fn degree_part(&self, n: usize) -> Series {
        self.filter(|w| w.len() == n)
    }

    pub fn truncate(&self, max: usize) -> Series {
        self.filter(|w| w.len() <= max)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    pub fn by_degree(&self) -> BTreeMap<usize, Series> {
        let mut out: BTreeMap<usize, Series> = BTreeMap::new();
        for (w, q) in &self.terms {
            out.entry(w.len()).or_insert_with(|| Series::zero(self.alpha)).terms.insert(*w, q.clone());
        }
        out
    }

    /// Concatenation product keeping only degrees ≤ `max`.
    pub fn mul_trunc(&self, o: &Series, max: usize) -> Series {
        let mut out = Series::zero(self.alpha);
        for (u, p) in &self.terms {
            for (v, q) in &o.terms {
                if u.len() + v.len() <= max {
                    out.add_term(u.concat(*v), p * q);
                }
            }
        }
        out
    }

    pub fn bracket(&self, o: &Series) -> Series {
        self.bracket_trunc(o, usize::MAX)
    }

    pub fn bracket_trunc(&self, o: &Series, max: usize) -> Series {
        let mut out = Series::zero(self.alpha);
        for (u, p) in &self.terms {
            for (v, q) in &o.terms {
                if u.len() + v.len() <= max {
                    let c = p * q;
                    out.add_term(u.concat(*v), c.clone());
                    out.add_term(v.concat(*u), -c);
                }
            }
        }
        out
    }

    pub fn switch(&self) -> Series {
        self.map_words(|w| w.switched())
    }

    /// Left multiplication by a single word.
    pub fn lmul_word(&self, w: Word) -> Series {
        self.map_words(|v| w.concat(v))
    }

    pub fn rmul_word(&self, w: Word) -> Series {
        self.map_words(|v| v.concat(w))
    }

    pub fn shuffle(&self, o: &Series) -> Series {
        let mut out = Series::zero(self.alpha);
        for (u, p) in &self.terms {
            for (v, q) in &o.terms {
                out.add_scaled(&super::shuffle::shuffle(self.alpha, *u, *v), &(p * q));
            }
        }
        out
    }

    pub fn stuffle(&self, o: &Series) -> Series {
        let mut out = Series::zero(self.alpha);
        for (u, p) in &self.terms {
            for (v, q) in &o.terms {
                let s = super::shuffle::stuffle(self.alpha, *u, *v).expect("stuffle needs y-terminated words");
                out.add_scaled(&s, &(p * q));
            }
        }
        out
    }

    /// Pairing ⟨self, other⟩ = Σ_w self_w other_w.
    pub fn pairing(&self, o: &Series) -> Q {
        let (a, b) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        a.terms.iter().filter_map(|(w, q)| b.terms.get(w).map(|r| q * r)).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted()
                .into_iter()
                .map(|(w, q)| serde_json::json!([q.numer().to_string(), q.denom().to_string(), w.spell(self.alpha)]))
                .collect(),
        )
    }

    pub fn from_json(alpha: Alphabet, v: &serde_json::Value) -> Result<Series, String> {
        let arr = v.as_array().ok_or("series must be an array")?;
        let mut s = Series::zero(alpha);
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or("term must be [num, den, word]")?;
            let n = t[0].as_str().ok_or("numerator must be a string")?;
            let d = t[1].as_str().ok_or("denominator must be a string")?;
            let w = t[2].as_str().ok_or("word must be a string")?;
            let q: Q = format!("{}/{}", n, d).parse().map_err(|e| format!("{}", e))?;
            let word = if w.is_empty() {
                Word::EMPTY
            } else {
                let (word, a) = Word::parse(w).ok_or_else(|| format!("bad word {}", w))?;
                if a != Some(alpha) {
                    return Err(format!("word {} not in alphabet {}", w, alpha.name()));
                }
                word
            };
            if s.terms.contains_key(&word) {
                return Err(format!("duplicate word {}", w));
            }
            s.add_term(word, q);
        }
        Ok(s)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, q)) in self.sorted().into_iter().enumerate() {
            let neg = q.signum() < 0;
            let a = q.abs();
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let ws = if w.is_empty() { "1".to_string() } else { w.spell(self.alpha) };
            if a.is_one() {
                write!(f, "{}", ws)?;
            } else {
                write!(f, "{} {}", a, ws)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        let mut s = self.clone();
        s.add_scaled(o, &Q::one());
        s
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        let mut s = self.clone();
        s.add_scaled(o, &Q::int(-1));
        s
    }
}

impl Add for Series {
    type Output = Series;
    fn add(mut self, o: Series) -> Series {
        self.add_scaled(&o, &Q::one());
        self
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(mut self, o: Series) -> Series {
        self.add_scaled(&o, &Q::int(-1));
        self
    }
}

impl AddAssign<&Series> for Series {
    fn add_assign(&mut self, o: &Series) {
        self.add_scaled(o, &Q::one());
    }
}

impl SubAssign<&Series> for Series {
    fn sub_assign(&mut self, o: &Series) {
        self.add_scaled(o, &Q::int(-1));
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&Q::int(-1))
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&Q::int(-1))
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        self.mul_trunc(o, usize::MAX)
    }
}

/// Degree-truncated series stored degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    pub alpha: Alphabet,
    pub max: usize,
    pub parts: BTreeMap<usize, Series>,
}

impl Graded {
    pub fn new(alpha: Alphabet, max: usize) -> Graded {
        Graded { alpha, max, parts: BTreeMap::new() }
    }

    pub fn from_series(s: &Series, max: usize) -> Graded {
        let mut g = Graded::new(s.alpha, max);
        for (d, p) in s.by_degree() {
            if d <= max {
                g.parts.insert(d, p);
            }
        }
        g
    }

    pub fn part(&self, d: usize) -> Series {
        self.parts.get(&d).cloned().unwrap_or_else(|| Series::zero(self.alpha))
    }

    pub fn set(&mut self, d: usize, s: Series) {
        if s.is_zero() {
            self.parts.remove(&d);
        } else {
            self.parts.insert(d, s);
        }
    }

    pub fn to_series(&self) -> Series {
        let mut out = Series::zero(self.alpha);
        for p in self.parts.values() {
            out.add_scaled(p, &Q::one());
        }
        out
    }
}
