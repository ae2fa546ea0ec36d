use std::fmt;

use rustc_hash::FxHashMap;

use crate::q::Q;

/// Maximum number of commuting variables u1..u8.
pub const MAX_VARS: usize = 8;

/// Exponent vector packed 8 bits per variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(i: usize) -> Mono {
        Mono::ONE.with_exp(i, 1)
    }

    pub fn from_exps(es: &[u32]) -> Mono {
        let mut m = Mono::ONE;
        for (i, &e) in es.iter().enumerate() {
            m = m.with_exp(i, e);
        }
        m
    }

    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn with_exp(self, i: usize, e: u32) -> Mono {
        assert!(i < MAX_VARS && e < 256, "monomial out of range");
        Mono((self.0 & !(0xff << (8 * i))) | ((e as u64) << (8 * i)))
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exp(i)).sum()
    }

    /// Number of variables actually present (highest index + 1).
    pub fn support(self) -> usize {
        (0..MAX_VARS).rev().find(|&i| self.exp(i) > 0).map_or(0, |i| i + 1)
    }

    pub fn mul(self, o: Mono) -> Mono {
        let mut m = self;
        for i in 0..MAX_VARS {
            let e = self.exp(i) + o.exp(i);
            if e > 0 {
                m = m.with_exp(i, e);
            }
        }
        m
    }
}

/// Sparse commutative polynomial over Q in u1..u8.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: FxHashMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(q: Q) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Mono::ONE, q);
        p
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn var(i: usize) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Mono::var(i), Q::one());
        p
    }

    pub fn monomial(m: Mono, q: Q) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, q);
        p
    }

    /// Σ c_i u_{i+1}.
    pub fn linear(cs: &[i64]) -> Poly {
        let mut p = Poly::zero();
        for (i, &c) in cs.iter().enumerate() {
            p.add_term(Mono::var(i), Q::int(c));
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, q: Q) {
        if q.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, o: &Poly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, q) in &o.terms {
            self.add_term(*m, q * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, q)| (*m, q * c)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, p) in &self.terms {
            for (n, q) in &o.terms {
                out.add_term(m.mul(*n), p * q);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mono) -> Q {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn sorted(&self) -> Vec<(Mono, Q)> {
        let mut v: Vec<(Mono, Q)> = self.terms.iter().map(|(m, q)| (*m, q.clone())).collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| rev_exps(b.0).cmp(&rev_exps(a.0))));
        v
    }

    pub fn support(&self) -> usize {
        self.terms.keys().map(|m| m.support()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// p(s_1, …, s_n) for images s_i of u_i.
    pub fn subst(&self, imgs: &[Poly]) -> Poly {
        let mut powers: Vec<Vec<Poly>> = imgs.iter().map(|s| vec![Poly::one(), s.clone()]).collect();
        let mut out = Poly::zero();
        for (m, q) in &self.terms {
            let mut t = Poly::constant(q.clone());
            for i in 0..m.support() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                assert!(i < imgs.len(), "substitution misses variable u{}", i + 1);
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&imgs[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e]);
            }
            out.add_scaled(&t, &Q::one());
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, pt: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(m, q)| {
                let mut v = q.clone();
                for i in 0..m.support() {
                    v *= &pt[i].pow(m.exp(i));
                }
                v
            })
            .sum()
    }

    /// Exact quotient by a nonzero linear form, if it divides.
    pub fn div_linear(&self, l: &[i64]) -> Option<Poly> {
        let i = l.iter().position(|&c| c != 0).expect("zero linear form");
        let lead = Q::int(l[i]);
        let lp = Poly::linear(l);
        let mut r = self.clone();
        let mut quot = Poly::zero();
        loop {
            let top = r.terms.iter().filter(|(m, _)| m.exp(i) > 0).max_by(|a, b| a.0.exp(i).cmp(&b.0.exp(i)).then(a.0.cmp(b.0)));
            let Some((m, q)) = top else { break };
            let t = Poly::monomial(m.with_exp(i, m.exp(i) - 1), q / &lead);
            r.add_scaled(&t.mul(&lp), &Q::int(-1));
            quot.add_scaled(&t, &Q::one());
        }
        r.is_zero().then_some(quot)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&Q::int(-1))
    }
}

fn rev_exps(m: Mono) -> Vec<u32> {
    m.exps(MAX_VARS)
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(o, &Q::one());
        p
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(o, &Q::int(-1));
        p
    }
}

pub(crate) fn write_mono(f: &mut fmt::Formatter<'_>, m: Mono) -> fmt::Result {
    let mut first = true;
    for i in 0..m.support() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "u{}", i + 1)?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, q)) in self.sorted().into_iter().enumerate() {
            let neg = q.signum() < 0;
            let a = q.abs();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            if m == Mono::ONE {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                write_mono(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_division() {
        let u1 = Poly::var(0);
        let u2 = Poly::var(1);
        let s = &u1 + &u2;
        let p = s.mul(&(&u1 - &u2)).mul(&u2);
        assert_eq!(p.div_linear(&[1, 1]).unwrap(), (&u1 - &u2).mul(&u2));
        assert!(p.div_linear(&[1, 2]).is_none());
        assert_eq!(p.div_linear(&[0, 1]).unwrap(), s.mul(&(&u1 - &u2)));
    }

    #[test]
    fn substitution() {
        let p = Poly::var(0).mul(&Poly::var(1)).pow(2);
        let q = p.subst(&[Poly::linear(&[1, 1]), Poly::var(0)]);
        assert_eq!(q, Poly::linear(&[1, 1]).pow(2).mul(&Poly::var(0).pow(2)));
        assert_eq!(q.eval(&[Q::int(1), Q::int(2)]), Q::int(9));
    }
}
