use std::collections::BTreeMap;
use std::fmt;

use crate::freealg::{Alphabet, Series};
use crate::q::Q;

pub const A: u8 = 0;
pub const B: u8 = 1;

/// A derivation of Lie[a,b] given by its generator images, split by
/// derivation degree n (image words of length n+1), kept for n ≤ `max`.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    pub max: usize,
    on_a: BTreeMap<usize, Series>,
    on_b: BTreeMap<usize, Series>,
}

fn split(s: &Series, max: usize) -> BTreeMap<usize, Series> {
    let mut out = BTreeMap::new();
    for (d, p) in s.by_degree() {
        if d >= 1 && d - 1 <= max {
            out.insert(d - 1, p);
        }
    }
    out
}

impl Derivation {
    pub fn zero(max: usize) -> Derivation {
        Derivation { max, on_a: BTreeMap::new(), on_b: BTreeMap::new() }
    }

    /// From images of a and b; the images may mix degrees.
    pub fn from_images(a: &Series, b: &Series, max: usize) -> Derivation {
        Derivation { max, on_a: split(a, max), on_b: split(b, max) }
    }

    pub fn a(&self) -> Series {
        self.collect(&self.on_a)
    }

    pub fn b(&self) -> Series {
        self.collect(&self.on_b)
    }

    fn collect(&self, m: &BTreeMap<usize, Series>) -> Series {
        let mut s = Series::zero(Alphabet::AB);
        for p in m.values() {
            s += p;
        }
        s
    }

    pub fn a_part(&self, n: usize) -> Series {
        self.on_a.get(&n).cloned().unwrap_or_else(|| Series::zero(Alphabet::AB))
    }

    pub fn b_part(&self, n: usize) -> Series {
        self.on_b.get(&n).cloned().unwrap_or_else(|| Series::zero(Alphabet::AB))
    }

    pub fn set_part(&mut self, n: usize, a: Series, b: Series) {
        for (m, s) in [(&mut self.on_a, a), (&mut self.on_b, b)] {
            if s.is_zero() {
                m.remove(&n);
            } else {
                m.insert(n, s);
            }
        }
    }

    /// Degrees carrying a nonzero image.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.on_a.keys().chain(self.on_b.keys()).copied().collect();
        d.sort();
        d.dedup();
        d
    }

    pub fn part(&self, n: usize) -> Derivation {
        let mut d = Derivation::zero(self.max);
        d.set_part(n, self.a_part(n), self.b_part(n));
        d
    }

    pub fn truncate(&self, max: usize) -> Derivation {
        let max = max.min(self.max);
        let keep = |m: &BTreeMap<usize, Series>| m.range(..=max).map(|(k, v)| (*k, v.clone())).collect();
        Derivation { max, on_a: keep(&self.on_a), on_b: keep(&self.on_b) }
    }

    pub fn is_zero(&self) -> bool {
        self.on_a.is_empty() && self.on_b.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Derivation {
        let mut d = Derivation::zero(self.max);
        for n in self.degrees() {
            d.set_part(n, self.a_part(n).scale(c), self.b_part(n).scale(c));
        }
        d
    }

    pub fn add_scaled(&mut self, o: &Derivation, c: &Q) {
        self.max = self.max.min(o.max);
        let max = self.max;
        self.on_a.retain(|k, _| *k <= max);
        self.on_b.retain(|k, _| *k <= max);
        for n in o.degrees() {
            if n > max {
                continue;
            }
            let mut a = self.a_part(n);
            a.add_scaled(&o.a_part(n), c);
            let mut b = self.b_part(n);
            b.add_scaled(&o.b_part(n), c);
            self.set_part(n, a, b);
        }
    }

    /// Apply to a series; output words have length at most `cap`.
    pub fn apply_trunc(&self, f: &Series, cap: usize) -> Series {
        let mut out = Series::zero(Alphabet::AB);
        for (u, q) in f.iter() {
            let m = u.len();
            for p in 0..m {
                let imgs = if u.get(p) == A { &self.on_a } else { &self.on_b };
                let pre = u.slice(0, p);
                let post = u.slice(p + 1, m);
                for (n, img) in imgs {
                    if m + n > cap {
                        break;
                    }
                    for (v, c) in img.iter() {
                        out.add_term(pre.concat(*v).concat(post), q * c);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &Series) -> Series {
        self.apply_trunc(f, usize::MAX)
    }

    /// [self, o] = self∘o − o∘self, kept up to the smaller cap.
    pub fn bracket(&self, o: &Derivation) -> Derivation {
        let max = self.max.min(o.max);
        let mut d = Derivation::zero(max);
        let a = self.apply_trunc(&o.a(), max + 1) - o.apply_trunc(&self.a(), max + 1);
        let b = self.apply_trunc(&o.b(), max + 1) - o.apply_trunc(&self.b(), max + 1);
        d.on_a = split(&a, max);
        d.on_b = split(&b, max);
        d
    }

    /// θ∘δ∘θ with θ exchanging a and b.
    pub fn switched(&self) -> Derivation {
        let sw = |m: &BTreeMap<usize, Series>| m.iter().map(|(k, v)| (*k, v.switch())).collect();
        Derivation { max: self.max, on_a: sw(&self.on_b), on_b: sw(&self.on_a) }
    }

    /// δ([a,b]) in each degree, empty when δ lies in Der⁰.
    pub fn bracket_defect(&self) -> BTreeMap<usize, Series> {
        let a = Series::letter(Alphabet::AB, A);
        let b = Series::letter(Alphabet::AB, B);
        let mut out = BTreeMap::new();
        for n in self.degrees() {
            let s = self.a_part(n).bracket(&b) + a.bracket(&self.b_part(n));
            if !s.is_zero() {
                out.insert(n, s);
            }
        }
        out
    }

    pub fn in_der0(&self) -> bool {
        self.bracket_defect().is_empty()
    }

    /// Equality of the images in degrees ≤ both caps.
    pub fn agrees_with(&self, o: &Derivation) -> bool {
        let max = self.max.min(o.max);
        self.truncate(max) == o.truncate(max)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a ↦ {}; b ↦ {}", self.a(), self.b())
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Derivation(max {})", self.max)?;
        for n in self.degrees() {
            writeln!(f, "  a_{}: {}", n, self.a_part(n))?;
            writeln!(f, "  b_{}: {}", n, self.b_part(n))?;
        }
        Ok(())
    }
}

pub fn letter(l: u8) -> Series {
    Series::letter(Alphabet::AB, l)
}

/// ad_u^n(v) truncated to length `cap`.
pub fn ad_pow_trunc(u: &Series, n: usize, v: &Series, cap: usize) -> Series {
    let mut r = v.truncate(cap);
    for _ in 0..n {
        r = u.bracket_trunc(&r, cap);
    }
    r
}
