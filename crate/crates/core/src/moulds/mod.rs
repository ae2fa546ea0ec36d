//! Rational moulds in commuting variables u1, u2, … with the operations of
//! Écalle's calculus needed to relate genus zero and genus one: mu, lu,
//! arit, ari, the ari exponential and logarithm, the adjoint action, and the
//! moulds pal and invpal.

pub mod frac;
pub mod pal;
pub mod poly;

use std::fmt;

pub use frac::{Frac, Lin};
pub use pal::{cross_check_tw, dupal, invpal, invpal_mu, lopal, pal, TwReport};
pub use poly::{Mono, Poly, MAX_VARS};

use crate::freealg::{Alphabet, Series, Word, X, Y};
use crate::q::Q;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MouldError {
    #[error("series is not a power series in the c_i = ad_x^(i-1) y")]
    NotInCSubring,
    #[error("depth {0} component is not a polynomial")]
    NotPolynomial(usize),
    #[error("depth {0} exceeds the cap {1}")]
    DepthCap(usize, usize),
    #[error("{0}")]
    Upstream(String),
}

/// Depth-indexed family; parts[r] is a rational function of u1..ur.
#[derive(Clone, PartialEq, Eq)]
pub struct Mould {
    parts: Vec<Frac>,
}

/// Argument lists are linear forms over the target variables.
type Args = Vec<Vec<i64>>;

fn unit(j: usize) -> Vec<i64> {
    let mut v = vec![0; j + 1];
    v[j] = 1;
    v
}

fn sum_range(i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; j];
    for c in v.iter_mut().take(j).skip(i) {
        *c = 1;
    }
    v
}

fn add_to(mut a: Vec<i64>, b: &[i64]) -> Vec<i64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

impl Mould {
    pub fn zero(max: usize) -> Mould {
        Mould { parts: vec![Frac::zero(); max + 1] }
    }

    /// The mu and diamond unit (1, 0, 0, …).
    pub fn id(max: usize) -> Mould {
        let mut m = Mould::zero(max);
        m.parts[0] = Frac::constant(Q::one());
        m
    }

    pub fn from_parts(parts: Vec<Frac>) -> Mould {
        assert!(!parts.is_empty());
        Mould { parts }
    }

    pub fn max_depth(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, r: usize) -> &Frac {
        &self.parts[r]
    }

    pub fn parts(&self) -> &[Frac] {
        &self.parts
    }

    pub fn set(&mut self, r: usize, f: Frac) {
        self.parts[r] = f;
    }

    pub fn truncate(&self, max: usize) -> Mould {
        let mut parts: Vec<Frac> = self.parts.iter().take(max + 1).cloned().collect();
        parts.resize(max + 1, Frac::zero());
        Mould { parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Frac::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Mould {
        Mould { parts: self.parts.iter().map(|f| f.scale(c)).collect() }
    }

    pub fn add_scaled(&mut self, o: &Mould, c: &Q) {
        for (r, f) in o.parts.iter().enumerate().take(self.parts.len()) {
            self.parts[r].add_scaled(f, c);
        }
    }

    pub fn reduce(&mut self) {
        for f in self.parts.iter_mut() {
            f.reduce();
        }
    }

    fn shifted(r: usize, off: usize) -> Args {
        (0..r).map(|k| unit(off + k)).collect()
    }

    /// mu(G,H)(u1..ur) = Σ_i G(u1..ui) H(u_{i+1}..ur).
    pub fn mu(&self, o: &Mould) -> Mould {
        let max = self.max_depth().min(o.max_depth());
        let mut out = Mould::zero(max);
        for r in 0..=max {
            let mut acc = Frac::zero();
            for i in 0..=r {
                let (g, h) = (&self.parts[i], &o.parts[r - i]);
                if g.is_zero() || h.is_zero() {
                    continue;
                }
                acc.add_scaled(&g.mul(&h.subst(&Mould::shifted(r - i, i))), &Q::one());
            }
            out.parts[r] = acc;
        }
        out
    }

    pub fn lu(&self, o: &Mould) -> Mould {
        let mut m = self.mu(o);
        m.add_scaled(&o.mu(self), &Q::int(-1));
        m
    }

    /// arit(self)·A by the u-flexion formula: for every factorization
    /// w = a b c with b nonempty, b's variables are absorbed into the first
    /// variable of c (when c is nonempty, sign +) or into the last variable
    /// of a (when a is nonempty, sign −).
    pub fn arit(&self, a: &Mould) -> Mould {
        let max = self.max_depth().min(a.max_depth());
        let mut out = Mould::zero(max);
        for r in 2..=max {
            let mut acc = Frac::zero();
            for lb in 1..r {
                let bpart = &self.parts[lb];
                if bpart.is_zero() {
                    continue;
                }
                let apart = &a.parts[r - lb];
                if apart.is_zero() {
                    continue;
                }
                for i in 0..=(r - lb) {
                    let bsum = sum_range(i, i + lb);
                    let bargs = Mould::shifted(lb, i);
                    let tail: Vec<Vec<i64>> = ((i + lb)..r).map(unit).collect();
                    let head: Vec<Vec<i64>> = (0..i).map(unit).collect();
                    let bval = bpart.subst(&bargs);
                    if !tail.is_empty() {
                        let mut args = head.clone();
                        args.push(add_to(tail[0].clone(), &bsum));
                        args.extend_from_slice(&tail[1..]);
                        acc.add_scaled(&apart.subst(&args).mul(&bval), &Q::one());
                    }
                    if !head.is_empty() {
                        let mut args = head.clone();
                        let last = args.pop().unwrap();
                        args.push(add_to(last, &bsum));
                        args.extend_from_slice(&tail);
                        acc.add_scaled(&apart.subst(&args).mul(&bval), &Q::int(-1));
                    }
                }
            }
            out.parts[r] = acc;
        }
        out
    }

    /// ari(G,H) = arit(H)·G − arit(G)·H + lu(G,H).
    pub fn ari(&self, h: &Mould) -> Mould {
        let mut m = h.arit(self);
        m.add_scaled(&self.arit(h), &Q::int(-1));
        m.add_scaled(&self.lu(h), &Q::one());
        m
    }

    /// G ⋄ H = mu(G,H) − arit(G)·H, for G without constant term.
    pub fn diamond(&self, h: &Mould) -> Mould {
        let mut m = self.mu(h);
        m.add_scaled(&self.arit(h), &Q::int(-1));
        m
    }

    /// preari(A,B) = mu(A,B) + arit(B)·A.
    pub fn preari(&self, b: &Mould) -> Mould {
        let mut m = self.mu(b);
        m.add_scaled(&b.arit(self), &Q::one());
        m
    }

    /// exp_ari(F) = Id + Σ preari(…preari(F,F)…,F)/n!, truncated at the
    /// depth cap.
    pub fn exp_ari(&self) -> Mould {
        let max = self.max_depth();
        let mut out = Mould::id(max);
        let mut pow = self.clone();
        let mut fact = Q::one();
        for n in 1..=max {
            fact = fact * Q::int(n as i64);
            out.add_scaled(&pow, &fact.recip());
            if n < max {
                pow = pow.preari(self);
                pow.reduce();
            }
        }
        out.reduce();
        out
    }

    /// Inverse of exp_ari on moulds with constant term 1, depth by depth.
    pub fn log_ari(&self) -> Mould {
        let max = self.max_depth();
        let mut l = Mould::zero(max);
        for r in 1..=max {
            let e = l.truncate(r).exp_ari();
            let mut d = self.parts[r].clone();
            d.add_scaled(&e.parts[r], &Q::int(-1));
            d.reduce();
            l.parts[r] = d;
        }
        l
    }

    /// exp(ad_ari L)(A) = A + ari(L,A) + ari(L,ari(L,A))/2 + …
    pub fn ad_exp(l: &Mould, a: &Mould) -> Mould {
        let max = l.max_depth().min(a.max_depth());
        let mut out = a.truncate(max);
        let mut t = out.clone();
        let mut fact = Q::one();
        for n in 1..max {
            t = l.ari(&t);
            t.reduce();
            if t.is_zero() {
                break;
            }
            fact = fact * Q::int(n as i64);
            out.add_scaled(&t, &fact.recip());
        }
        out.reduce();
        out
    }

    /// Ad_ari(P)(A) with L = log_ari(P).
    pub fn ad_ari(p: &Mould, a: &Mould) -> Mould {
        Mould::ad_exp(&p.log_ari(), a)
    }

    fn map_parts(&self, f: impl Fn(usize, &Frac) -> Frac) -> Mould {
        Mould { parts: self.parts.iter().enumerate().map(|(r, p)| if r == 0 { p.clone() } else { f(r, p) }).collect() }
    }

    /// (u1 + … + ur) F.
    pub fn dur(&self) -> Mould {
        self.map_parts(|r, f| f.mul_linear(&vec![1; r]))
    }

    /// u1⋯ur (u1 + … + ur) F.
    pub fn delta(&self) -> Mould {
        self.map_parts(|r, f| {
            let mut g = f.mul_linear(&vec![1; r]);
            for i in 0..r {
                g = g.mul_linear(&unit(i));
            }
            g
        })
    }

    pub fn delta_inv(&self) -> Mould {
        self.map_parts(|r, f| {
            let mut g = f.div_linear(&vec![1; r]);
            for i in 0..r {
                g = g.div_linear(&unit(i));
            }
            g
        })
    }

    /// F(v_r, v_{r-1} − v_r, …, v_1 − v_2), a mould in v1..vr.
    pub fn swap(&self) -> Mould {
        self.map_parts(|r, f| {
            let args: Args = (0..r)
                .map(|k| {
                    let j = r - 1 - k;
                    let mut v = unit(j);
                    if k > 0 {
                        v = add_to(v, &{
                            let mut n = vec![0; j + 2];
                            n[j + 1] = -1;
                            n
                        });
                    }
                    v
                })
                .collect();
            f.subst(&args)
        })
    }

    /// F(−u1 − … − ur, u1, …, u_{r−1}).
    pub fn push(&self) -> Mould {
        self.map_parts(|r, f| {
            let mut args: Args = vec![vec![-1; r]];
            args.extend((0..r - 1).map(unit));
            f.subst(&args)
        })
    }

    /// F(−u1, …, −ur).
    pub fn negate_args(&self) -> Mould {
        self.map_parts(|r, f| {
            let args: Args = (0..r).map(|i| {
                let mut v = unit(i);
                v[i] = -1;
                v
            }).collect();
            f.subst(&args)
        })
    }

    /// Sum of F over the shuffles of (u1..ui) with (u_{i+1}..ur).
    pub fn shuffle_sum(&self, r: usize, i: usize) -> Frac {
        let mut acc = Frac::zero();
        for pos in subsets(r, i) {
            // pos: slots taken by the first word, in order
            let mut args: Args = vec![Vec::new(); r];
            let (mut p, mut q) = (0, i);
            for (slot, a) in args.iter_mut().enumerate() {
                if pos.contains(&slot) {
                    *a = unit(p);
                    p += 1;
                } else {
                    *a = unit(q);
                    q += 1;
                }
            }
            acc.add_scaled(&self.parts[r].subst(&args), &Q::one());
        }
        acc
    }

    /// Alternality in depths 2..=max: the first failing (depth, split).
    pub fn alternality_defect(&self, max: usize) -> Option<(usize, usize)> {
        for r in 2..=max.min(self.max_depth()) {
            for i in 1..r {
                if !self.shuffle_sum(r, i).is_zero() {
                    return Some((r, i));
                }
            }
        }
        None
    }

    pub fn is_alternal(&self, max: usize) -> bool {
        self.alternality_defect(max).is_none()
    }

    /// Alternality up to adding a constant c_r in each depth r ≥ 2: the
    /// shuffle sums must equal −C(r,i)·c_r. Returns the nonzero c_r, or None
    /// if no such constants exist. Only degree-zero parts can need one.
    pub fn alternality_constants(&self, max: usize) -> Option<Vec<(usize, Q)>> {
        let mut out = Vec::new();
        for r in 2..=max.min(self.max_depth()) {
            let mut c: Option<Q> = None;
            for i in 1..r {
                let p = self.shuffle_sum(r, i).to_poly()?;
                if p.total_degree().unwrap_or(0) > 0 {
                    return None;
                }
                let ci = -p.coeff(Mono::ONE) / crate::q::binom(r as u64, i as u64);
                match &c {
                    Some(prev) if *prev != ci => return None,
                    _ => c = Some(ci),
                }
            }
            if let Some(c) = c.filter(|c| !c.is_zero()) {
                out.push((r, c));
            }
        }
        Some(out)
    }

    /// Alternal with swap alternal up to a constant-valued mould.
    pub fn is_bialternal(&self, max: usize) -> bool {
        self.is_alternal(max) && self.swap().alternality_constants(max).is_some()
    }

    /// Inverse of swap: G(u1..ur) = F(v_i = u1 + … + u_{r+1−i}).
    pub fn swap_back(&self) -> Mould {
        self.map_parts(|r, f| {
            let args: Args = (0..r).map(|i| vec![1; r - i]).collect();
            f.subst(&args)
        })
    }

    pub fn is_push_invariant(&self) -> bool {
        self.push() == *self
    }

    /// Polynomial components, failing at the first rational one.
    pub fn polys(&self) -> Result<Vec<Poly>, MouldError> {
        self.parts.iter().enumerate().map(|(r, f)| f.to_poly().ok_or(MouldError::NotPolynomial(r))).collect()
    }

    /// ma: c_{i1}⋯c_{ir} ↦ (−1)^{r+i1+…+ir} u1^{i1−1}⋯ur^{ir−1}, where
    /// c_i = ad_x^{i−1} y (letter 0 = x, letter 1 = y).
    pub fn ma(f: &Series, max: usize) -> Result<Mould, MouldError> {
        let mut rest = f.clone();
        let mut out = Mould::zero(max);
        let mut polys = vec![Poly::zero(); max + 1];
        loop {
            let lead = rest
                .iter()
                .filter(|(w, _)| w.last() == Some(Y) || w.is_empty())
                .map(|(w, q)| (w.to_composition().unwrap(), *w, q.clone()))
                .max_by(|a, b| a.0.cmp(&b.0));
            let Some((ks, _, q)) = lead else { break };
            rest.add_scaled(&c_monomial(f.alpha, &ks), &-&q);
            let r = ks.len();
            if r > max {
                return Err(MouldError::DepthCap(r, max));
            }
            let exps: Vec<u32> = ks.iter().map(|&k| k as u32 - 1).collect();
            let sign = if (r + ks.iter().sum::<usize>()) % 2 == 0 { q } else { -q };
            polys[r].add_term(Mono::from_exps(&exps), sign);
        }
        if !rest.is_zero() {
            return Err(MouldError::NotInCSubring);
        }
        for (r, p) in polys.into_iter().enumerate() {
            out.parts[r] = Frac::poly(p);
        }
        Ok(out)
    }

    /// Inverse of ma on polynomial moulds.
    pub fn ma_inverse(&self, alpha: Alphabet) -> Result<Series, MouldError> {
        let mut out = Series::zero(alpha);
        for (r, p) in self.polys()?.into_iter().enumerate() {
            for (m, q) in p.iter() {
                let ks: Vec<usize> = m.exps(r).into_iter().map(|e| e as usize + 1).collect();
                let sign = if (r + ks.iter().sum::<usize>()) % 2 == 0 { q.clone() } else { -q };
                out.add_scaled(&c_monomial(alpha, &ks), &sign);
            }
        }
        Ok(out)
    }
}

/// c_{k1}⋯c_{kr} expanded into words.
pub fn c_monomial(alpha: Alphabet, ks: &[usize]) -> Series {
    let mut out = Series::one(alpha);
    for &k in ks {
        // ad_x^{k-1} y = Σ_j (−1)^j C(k−1, j) x^{k−1−j} y x^j
        let mut c = Series::zero(alpha);
        for j in 0..k {
            let w = Word::power(X, k - 1 - j).concat(Word::letter(Y)).concat(Word::power(X, j));
            let b = crate::q::binom((k - 1) as u64, j as u64);
            c.add_term(w, if j % 2 == 0 { b } else { -b });
        }
        out = &out * &c;
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Mould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, p) in self.parts.iter().enumerate() {
            writeln!(f, "depth {}: {}", r, p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
