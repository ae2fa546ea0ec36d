use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::poly::{Poly, MAX_VARS};
use crate::q::Q;

/// Linear form Σ c_i u_{i+1} with integer coefficients, primitive and with
/// positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Lin(Vec<i64>);

impl Lin {
    /// Splits a nonzero form into (unit content, normalized form).
    pub fn normalize(cs: &[i64]) -> Option<(i64, Lin)> {
        let mut v = cs.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        let lead = *v.iter().find(|&&c| c != 0)?;
        let g = v.iter().fold(0i64, |g, &c| g.gcd(&c)) * lead.signum();
        for c in v.iter_mut() {
            *c /= g;
        }
        Some((g, Lin(v)))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn to_poly(&self) -> Poly {
        Poly::linear(&self.0)
    }

    /// Composition with u_i ↦ args[i].
    pub fn compose(&self, args: &[Vec<i64>]) -> Vec<i64> {
        let mut out = vec![0i64; MAX_VARS];
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &a) in args[i].iter().enumerate() {
                out[j] += c * a;
            }
        }
        out
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Rational function num / Π L^m with the denominator kept factored into
/// linear forms. No canonical form: equality goes through the numerator of
/// the difference.
#[derive(Clone, Default)]
pub struct Frac {
    pub num: Poly,
    pub den: BTreeMap<Lin, u32>,
}

impl Frac {
    pub fn zero() -> Frac {
        Frac::default()
    }

    pub fn constant(q: Q) -> Frac {
        Frac::poly(Poly::constant(q))
    }

    pub fn poly(p: Poly) -> Frac {
        Frac { num: p, den: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiply by a linear form, cancelling against the denominator first.
    pub fn mul_linear(&self, cs: &[i64]) -> Frac {
        let (g, l) = Lin::normalize(cs).expect("zero linear factor");
        let mut out = self.clone();
        out.num = out.num.scale(&Q::int(g));
        match out.den.get_mut(&l) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                out.den.remove(&l);
            }
            None => out.num = out.num.mul(&l.to_poly()),
        }
        out
    }

    pub fn div_linear(&self, cs: &[i64]) -> Frac {
        let (g, l) = Lin::normalize(cs).expect("division by a zero linear form");
        let mut out = self.clone();
        out.num = out.num.scale(&Q::new(1, g));
        *out.den.entry(l).or_insert(0) += 1;
        out
    }

    pub fn scale(&self, c: &Q) -> Frac {
        if c.is_zero() {
            return Frac::zero();
        }
        Frac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        let mut den = self.den.clone();
        for (l, m) in &o.den {
            *den.entry(l.clone()).or_insert(0) += m;
        }
        let out = Frac { num: self.num.mul(&o.num), den };
        if out.num.is_zero() {
            Frac::zero()
        } else {
            out
        }
    }

    pub fn add_scaled(&mut self, o: &Frac, c: &Q) {
        if o.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.scale(c);
            return;
        }
        let mut den = self.den.clone();
        for (l, &m) in &o.den {
            let e = den.entry(l.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &Frac| {
            let mut p = f.num.clone();
            for (l, &m) in &den {
                let have = f.den.get(l).copied().unwrap_or(0);
                if m > have {
                    p = p.mul(&l.to_poly().pow(m - have));
                }
            }
            p
        };
        let mut num = lift(self);
        num.add_scaled(&lift(o), c);
        self.num = num;
        self.den = den;
        if self.num.is_zero() {
            self.den.clear();
        }
    }

    /// Cancel every denominator factor that divides the numerator.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<Lin> = self.den.keys().cloned().collect();
        for l in factors {
            while let Some(m) = self.den.get(&l).copied() {
                match self.num.div_linear(l.coeffs()) {
                    Some(q) => {
                        self.num = q;
                        if m == 1 {
                            self.den.remove(&l);
                        } else {
                            self.den.insert(l.clone(), m - 1);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn reduced(&self) -> Frac {
        let mut f = self.clone();
        f.reduce();
        f
    }

    /// The polynomial this function equals, if any.
    pub fn to_poly(&self) -> Option<Poly> {
        let f = self.reduced();
        f.den.is_empty().then_some(f.num)
    }

    pub fn denominator(&self) -> Poly {
        self.den.iter().fold(Poly::one(), |acc, (l, &m)| acc.mul(&l.to_poly().pow(m)))
    }

    /// f(args) where args[i] is the linear form replacing u_{i+1}.
    pub fn subst(&self, args: &[Vec<i64>]) -> Frac {
        let imgs: Vec<Poly> = args.iter().map(|a| Poly::linear(a)).collect();
        let mut num = self.num.subst(&imgs);
        let mut den = BTreeMap::new();
        for (l, &m) in &self.den {
            let (g, nl) = Lin::normalize(&l.compose(args)).expect("substitution makes a denominator vanish");
            num = num.scale(&Q::new(1, g).pow(m));
            *den.entry(nl).or_insert(0) += m;
        }
        if num.is_zero() {
            return Frac::zero();
        }
        Frac { num, den }
    }

    pub fn eval(&self, pt: &[Q]) -> Option<Q> {
        let d = self.denominator().eval(pt);
        (!d.is_zero()).then(|| self.num.eval(pt) / d)
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Frac) -> bool {
        let mut d = self.clone();
        d.add_scaled(o, &Q::int(-1));
        d.is_zero()
    }
}

impl Eq for Frac {}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 && self.num.total_degree() == Some(0) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        write!(f, "/(")?;
        for (k, (l, &m)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if l.0.iter().filter(|&&c| c != 0).count() > 1 {
                write!(f, "({})", l)?;
            } else {
                write!(f, "{}", l)?;
            }
            if m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_share_factors() {
        // 1/u1 − 1/(u1+u2) = u2/(u1(u1+u2))
        let a = Frac::constant(Q::one()).div_linear(&[1]);
        let mut b = a.clone();
        b.add_scaled(&Frac::constant(Q::one()).div_linear(&[1, 1]), &Q::int(-1));
        let want = Frac::poly(Poly::var(1)).div_linear(&[1]).div_linear(&[1, 1]);
        assert_eq!(b, want);
        assert_eq!(b.den.len(), 2);
    }

    #[test]
    fn normalization_moves_content() {
        let f = Frac::constant(Q::one()).div_linear(&[-2, -2]);
        assert_eq!(f.num, Poly::constant(Q::new(-1, 2)));
        let g = f.mul_linear(&[1, 1]);
        assert_eq!(g.to_poly().unwrap(), Poly::constant(Q::new(-1, 2)));
        let h = Frac::constant(Q::one()).div_linear(&[1, -1]).subst(&[vec![0, 1], vec![1]]);
        assert_eq!(h, Frac::constant(Q::int(-1)).div_linear(&[1, -1]));
    }
}
