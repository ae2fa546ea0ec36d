//! Tsunogai derivations ε_k and their sl₂ descendants ε_k^{(j)} = ad_{ε₀}^j(ε_k),
//! and formal Lie polynomials in the symbols ε_k^{(j)}.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use super::derivation::{ad_pow_trunc, letter, Derivation, A, B};
use super::GenusOneError;
use crate::freealg::lyndon::{bracket_string, standard_split};
use crate::freealg::nc::{lie_decompose_nc, lyndon_poly, NcPoly};
use crate::freealg::{Alphabet, Series};
use crate::memo::Memo;
use crate::q::Q;

/// Cap used for homogeneous derivations, which never need truncating.
pub const FULL: usize = 1 << 16;

pub fn epsilon(k: usize) -> Result<Derivation, GenusOneError> {
    if k % 2 == 1 {
        return Err(GenusOneError::BadInput(format!("ε_{} needs an even index", k)));
    }
    let (a, b) = (letter(A), letter(B));
    if k == 0 {
        return Ok(Derivation::from_images(&b, &Series::zero(Alphabet::AB), FULL));
    }
    let on_a = ad_pow_trunc(&a, k, &b, FULL);
    let mut on_b = Series::zero(Alphabet::AB);
    for j in 0..k / 2 {
        let t = ad_pow_trunc(&a, j, &b, FULL).bracket(&ad_pow_trunc(&a, k - 1 - j, &b, FULL));
        on_b.add_scaled(&t, &Q::int(if j % 2 == 0 { 1 } else { -1 }));
    }
    Ok(Derivation::from_images(&on_a, &on_b, FULL))
}

pub fn eps0() -> Derivation {
    epsilon(0).unwrap()
}

pub fn eps0_vee() -> Derivation {
    Derivation::from_images(&Series::zero(Alphabet::AB), &letter(A), FULL)
}

pub fn h() -> Derivation {
    eps0().bracket(&eps0_vee())
}

/// ε_k^{(j)}, zero once j > k−2 (for k ≥ 2).
pub fn eps_kj(k: usize, j: usize) -> Result<Arc<Derivation>, GenusOneError> {
    static MEMO: OnceLock<Memo<(usize, usize), Arc<Derivation>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Memo::new);
    if k % 2 == 1 {
        return Err(GenusOneError::BadInput(format!("ε_{} needs an even index", k)));
    }
    if k >= 2 && j > k - 2 {
        return Ok(Arc::new(Derivation::zero(FULL)));
    }
    if j == 0 {
        return Ok(memo.get_or_init(&(k, 0), || Arc::new(epsilon(k).unwrap())));
    }
    let prev = eps_kj(k, j - 1)?;
    Ok(memo.get_or_init(&(k, j), || Arc::new(eps0().bracket(&prev))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsSym {
    pub k: u8,
    pub j: u8,
}

impl EpsSym {
    pub fn new(k: usize, j: usize) -> EpsSym {
        EpsSym { k: k as u8, j: j as u8 }
    }

    /// Generator degree k; modular depth contribution j.
    pub fn degree(self) -> usize {
        self.k as usize
    }

    pub fn is_zero(self) -> bool {
        self.k >= 2 && self.j + 2 > self.k
    }
}

impl fmt::Display for EpsSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j == 0 {
            write!(f, "ε{}", self.k)
        } else {
            write!(f, "ε{}^({})", self.k, self.j)
        }
    }
}

/// A rational combination of brackets of ε-symbols, stored as a Lie
/// polynomial in the free associative algebra on the symbols.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EpsExpr(pub NcPoly<EpsSym>);

impl EpsExpr {
    pub fn zero() -> EpsExpr {
        EpsExpr(NcPoly::zero())
    }

    pub fn sym(k: usize, j: usize) -> EpsExpr {
        let s = EpsSym::new(k, j);
        if s.is_zero() {
            EpsExpr::zero()
        } else {
            EpsExpr(NcPoly::sym(s))
        }
    }

    pub fn lyndon(seq: &[EpsSym]) -> EpsExpr {
        EpsExpr(lyndon_poly(seq))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bracket(&self, o: &EpsExpr) -> EpsExpr {
        EpsExpr(self.0.bracket(&o.0))
    }

    pub fn add_scaled(&mut self, o: &EpsExpr, c: &Q) {
        self.0.add_scaled(&o.0, c);
    }

    pub fn scale(&self, c: &Q) -> EpsExpr {
        EpsExpr(self.0.scale(c))
    }

    /// The homogeneous part of total ε-degree Σk = d.
    pub fn degree_part(&self, d: usize) -> EpsExpr {
        let mut p = NcPoly::zero();
        for (w, q) in self.0.iter() {
            if w.iter().map(|s| s.degree()).sum::<usize>() == d {
                p.add_term(w.clone(), q.clone());
            }
        }
        EpsExpr(p)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.0.iter().map(|(w, _)| w.iter().map(|s| s.degree()).sum()).collect();
        d.sort();
        d.dedup();
        d
    }

    /// ad_{ε₀} acting formally: ε_k^{(j)} ↦ ε_k^{(j+1)}.
    pub fn ad_eps0(&self) -> EpsExpr {
        EpsExpr(self.0.derive(|s| {
            let t = EpsSym { k: s.k, j: s.j + 1 };
            if t.is_zero() {
                vec![]
            } else {
                vec![(t, Q::one())]
            }
        }))
    }

    /// Coordinates in the Lyndon basis; `None` when not a Lie polynomial.
    pub fn lyndon_terms(&self) -> Option<Vec<(Vec<EpsSym>, Q)>> {
        lie_decompose_nc(&self.0)
    }

    /// The derivation obtained by evaluating the symbols.
    pub fn eval(&self) -> Result<Derivation, GenusOneError> {
        let terms = self.lyndon_terms().ok_or_else(|| GenusOneError::BadInput("not a Lie polynomial".into()))?;
        let mut memo = BTreeMap::new();
        let mut out = Derivation::zero(FULL);
        for (w, q) in terms {
            out.add_scaled(&eval_lyndon(&w, &mut memo)?, &q);
        }
        Ok(out)
    }
}

pub fn eval_lyndon(w: &[EpsSym], memo: &mut BTreeMap<Vec<EpsSym>, Derivation>) -> Result<Derivation, GenusOneError> {
    if let Some(d) = memo.get(w) {
        return Ok(d.clone());
    }
    let d = if w.len() == 1 {
        (*eps_kj(w[0].k as usize, w[0].j as usize)?).clone()
    } else {
        let i = standard_split(w);
        let l = eval_lyndon(&w[..i], memo)?;
        let r = eval_lyndon(&w[i..], memo)?;
        l.bracket(&r)
    };
    memo.insert(w.to_vec(), d.clone());
    Ok(d)
}

impl fmt::Display for EpsExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(terms) = self.lyndon_terms() else {
            return write!(f, "{:?}", self.0);
        };
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, q)) in terms.iter().enumerate() {
            let neg = q.signum() < 0;
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = q.abs();
            if !a.is_one() {
                write!(f, "{} ", a)?;
            }
            if w.len() == 1 {
                write!(f, "{}", w[0])?;
            } else {
                write!(f, "{}", bracket_string(w, |s| s.to_string()))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EpsExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    s: &'a [char],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn err<T>(&self, m: &str) -> Result<T, GenusOneError> {
        Err(GenusOneError::Parse(format!("{} at position {}", m, self.i)))
    }

    fn number(&mut self) -> Option<u64> {
        self.ws();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        (self.i > st).then(|| self.s[st..self.i].iter().collect::<String>().parse().ok()).flatten()
    }

    fn expr(&mut self) -> Result<EpsExpr, GenusOneError> {
        let mut out = EpsExpr::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.i += 1;
                    1
                }
                Some('-') | Some('−') => {
                    self.i += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(out),
            };
            first = false;
            let mut c = Q::int(sign);
            if let Some(n) = self.number() {
                let mut q = Q::int(n as i64);
                if self.peek() == Some('/') {
                    self.i += 1;
                    let Some(d) = self.number() else { return self.err("missing denominator") };
                    q = Q::new(n as i64, d as i64);
                }
                c = &c * &q;
            }
            let t = self.atom()?;
            out.add_scaled(&t, &c);
        }
    }

    fn atom(&mut self) -> Result<EpsExpr, GenusOneError> {
        match self.peek() {
            Some('[') => {
                self.i += 1;
                let l = self.expr()?;
                if self.peek() != Some(',') {
                    return self.err("expected ','");
                }
                self.i += 1;
                let r = self.expr()?;
                if self.peek() != Some(']') {
                    return self.err("expected ']'");
                }
                self.i += 1;
                Ok(l.bracket(&r))
            }
            Some('e') | Some('ε') => {
                self.i += 1;
                let Some(k) = self.number() else { return self.err("missing ε index") };
                let mut j = 0;
                if self.peek() == Some('^') {
                    self.i += 1;
                    let brace = self.peek() == Some('{');
                    if brace {
                        self.i += 1;
                    }
                    if self.peek() != Some('(') {
                        return self.err("expected '('");
                    }
                    self.i += 1;
                    let Some(n) = self.number() else { return self.err("missing exponent") };
                    j = n as usize;
                    for close in [Some(')'), if brace { Some('}') } else { None }].into_iter().flatten() {
                        if self.peek() != Some(close) {
                            return self.err("unclosed exponent");
                        }
                        self.i += 1;
                    }
                }
                if k % 2 == 1 {
                    return self.err("odd ε index");
                }
                Ok(EpsExpr::sym(k as usize, j))
            }
            _ => self.err("expected '[' or ε-symbol"),
        }
    }
}

impl FromStr for EpsExpr {
    type Err = GenusOneError;

    /// Accepts e.g. `-1/2 e4^(2) + 1/480 [e4,e4^(1)]`; `ε` may replace `e`.
    fn from_str(s: &str) -> Result<EpsExpr, GenusOneError> {
        let chars: Vec<char> = s.chars().collect();
        let mut p = Parser { s: &chars, i: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}
