//! Exact rationals with an inline fast path.
//!
//! Values whose reduced numerator and denominator fit in `i64` are stored
//! inline; everything else falls back to a boxed `BigRational`. The
//! representation is canonical, so derived equality and hashing are sound.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Q {
    /// numerator, positive denominator, coprime
    S(i64, i64),
    B(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Q {
    pub const ZERO: Q = Q::S(0, 1);
    pub const ONE: Q = Q::S(1, 1);

    pub fn zero() -> Q {
        Q::ZERO
    }

    pub fn one() -> Q {
        Q::ONE
    }

    pub fn int(n: i64) -> Q {
        Q::S(n, 1)
    }

    /// `n/d`; panics on `d == 0`.
    pub fn new(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Q {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n >= i64::MIN as i128 + 1 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Q::S(n as i64, d as i64)
        } else {
            Q::B(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Q {
        // BigRational::new normalizes; here we only shrink when possible
        let n = r.numer().to_i64();
        let d = r.denom().to_i64();
        match (n, d) {
            (Some(n), Some(d)) if n != i64::MIN => Q::S(n, d),
            _ => Q::B(Box::new(r)),
        }
    }

    pub fn from_bigint(n: BigInt) -> Q {
        Q::from_big(BigRational::from_integer(n))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::S(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::B(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::S(n, _) => BigInt::from(*n),
            Q::B(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::S(_, d) => BigInt::from(*d),
            Q::B(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::S(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::S(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::S(_, d) => *d == 1,
            Q::B(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::S(n, _) => n.signum() as i32,
            Q::B(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Q {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Q {
        match self {
            Q::S(0, _) => panic!("division by zero"),
            Q::S(n, d) => Q::from_i128(*d as i128, *n as i128),
            Q::B(b) => Q::from_big(b.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Q {
        let mut r = Q::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Residue modulo a prime `p < 2^32`, or `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        match self {
            Q::S(n, d) => {
                let dm = (*d as u64) % p;
                if dm == 0 {
                    return None;
                }
                let nm = n.rem_euclid(p as i64) as u64;
                Some(nm * crate::linalg::inv_mod(dm, p) % p)
            }
            Q::B(b) => {
                let pb = BigInt::from(p);
                let dm = b.denom().mod_floor(&pb).to_u64().unwrap();
                if dm == 0 {
                    return None;
                }
                let nm = b.numer().mod_floor(&pb).to_u64().unwrap();
                Some(nm * crate::linalg::inv_mod(dm, p) % p)
            }
        }
    }

    /// Size proxy in bits, used for heuristics only.
    pub fn bits(&self) -> u64 {
        match self {
            Q::S(n, d) => (64 - n.unsigned_abs().leading_zeros() + 64 - (*d as u64).leading_zeros()) as u64,
            Q::B(b) => b.numer().bits() + b.denom().bits(),
        }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::ZERO
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::S(n, 1)
    }
}

impl From<i32> for Q {
    fn from(n: i32) -> Q {
        Q::S(n as i64, 1)
    }
}

impl From<BigRational> for Q {
    fn from(r: BigRational) -> Q {
        Q::from_big(r)
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Q) -> bool {
        match (self, other) {
            (Q::S(a, b), Q::S(c, d)) => a == c && b == d,
            (Q::B(x), Q::B(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Q::S(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Q::B(b) => {
                1u8.hash(state);
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::S(a, b), Q::S(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_q(x: &Q, y: &Q) -> Q {
    match (x, y) {
        (Q::S(0, _), _) => y.clone(),
        (_, Q::S(0, _)) => x.clone(),
        (Q::S(a, b), Q::S(c, d)) => {
            if b == d {
                Q::from_i128(*a as i128 + *c as i128, *b as i128)
            } else {
                let n = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                Q::from_i128(n, *b as i128 * *d as i128)
            }
        }
        _ => Q::from_big(x.to_big() + y.to_big()),
    }
}

fn mul_q(x: &Q, y: &Q) -> Q {
    match (x, y) {
        (Q::S(0, _), _) | (_, Q::S(0, _)) => Q::ZERO,
        (Q::S(a, b), Q::S(c, d)) => Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
        _ => Q::from_big(x.to_big() * y.to_big()),
    }
}

fn neg_q(x: &Q) -> Q {
    match x {
        Q::S(n, d) => Q::S(-n, *d),
        Q::B(b) => Q::from_big(-(**b).clone()),
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Q> for &Q {
            type Output = Q;
            fn $m(self, o: &Q) -> Q {
                $f(self, o)
            }
        }
        impl $tr<Q> for Q {
            type Output = Q;
            fn $m(self, o: Q) -> Q {
                $f(&self, &o)
            }
        }
        impl $tr<&Q> for Q {
            type Output = Q;
            fn $m(self, o: &Q) -> Q {
                $f(&self, o)
            }
        }
        impl $tr<Q> for &Q {
            type Output = Q;
            fn $m(self, o: Q) -> Q {
                $f(self, &o)
            }
        }
    };
}

binop!(Add, add, add_q);
binop!(Mul, mul, mul_q);
binop!(Sub, sub, |a: &Q, b: &Q| add_q(a, &neg_q(b)));
binop!(Div, div, |a: &Q, b: &Q| mul_q(a, &b.recip()));

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        neg_q(&self)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        neg_q(self)
    }
}

impl AddAssign<&Q> for Q {
    fn add_assign(&mut self, o: &Q) {
        *self = add_q(self, o);
    }
}

impl AddAssign<Q> for Q {
    fn add_assign(&mut self, o: Q) {
        *self = add_q(self, &o);
    }
}

impl SubAssign<&Q> for Q {
    fn sub_assign(&mut self, o: &Q) {
        *self = add_q(self, &neg_q(o));
    }
}

impl SubAssign<Q> for Q {
    fn sub_assign(&mut self, o: Q) {
        *self = add_q(self, &neg_q(&o));
    }
}

impl MulAssign<&Q> for Q {
    fn mul_assign(&mut self, o: &Q) {
        *self = mul_q(self, o);
    }
}

impl std::iter::Sum for Q {
    fn sum<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::S(n, 1) => write!(f, "{}", n),
            Q::S(n, d) => write!(f, "{}/{}", n, d),
            Q::B(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational: {0}")]
pub struct ParseQError(pub String);

impl FromStr for Q {
    type Err = ParseQError;
    fn from_str(s: &str) -> Result<Q, ParseQError> {
        let s = s.trim();
        let err = || ParseQError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Q::from_big(BigRational::new(n, d)))
    }
}

impl serde::Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Binomial coefficient as an exact rational.
pub fn binom(n: u64, k: u64) -> Q {
    if k > n {
        return Q::ZERO;
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_bigint(r)
}

pub fn factorial(n: u64) -> Q {
    let mut r = BigInt::one();
    for i in 2..=n {
        r *= BigInt::from(i);
    }
    Q::from_bigint(r)
}

/// Bernoulli number B_n with B_1 = −1/2.
pub fn bernoulli(n: usize) -> Q {
    static TABLE: std::sync::Mutex<Vec<Q>> = std::sync::Mutex::new(Vec::new());
    let mut t = TABLE.lock().unwrap();
    while t.len() <= n {
        let m = t.len();
        if m == 0 {
            t.push(Q::one());
            continue;
        }
        // Σ_{k=0}^{m} C(m+1,k) B_k = 0
        let mut acc = Q::zero();
        for (k, b) in t.iter().enumerate() {
            acc += &(&binom(m as u64 + 1, k as u64) * b);
        }
        t.push(-(acc / binom(m as u64 + 1, m as u64)));
    }
    t[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b: Vec<String> = (0..=8).map(|n| bernoulli(n).to_string()).collect();
        assert_eq!(b, ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30"]);
        assert_eq!(bernoulli(12), Q::new(-691, 2730));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::int(i64::MAX);
        let s = &big + &Q::one();
        assert!(matches!(s, Q::B(_)));
        let back = &s - &Q::one();
        assert!(matches!(back, Q::S(_, _)));
        assert_eq!(back, big);
    }

    #[test]
    fn parse_and_print() {
        let q: Q = "-6/4".parse().unwrap();
        assert_eq!(q, Q::new(-3, 2));
        assert_eq!(q.to_string(), "-3/2");
        let b: Q = "22565838727030761032761/48180785666457600".parse().unwrap();
        assert_eq!(b.to_string(), "22565838727030761032761/48180785666457600");
        assert_eq!((&b - &b), Q::zero());
    }

    #[test]
    fn mod_p_matches_inverse() {
        let p = 2147483647u64;
        let q = Q::new(3, 7);
        let r = q.mod_p(p).unwrap();
        assert_eq!(r * 7 % p, 3);
        assert!(Q::new(1, 2147483647).mod_p(p).is_none());
    }
}
