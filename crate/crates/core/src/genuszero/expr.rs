//! Text syntax for MZV expressions, evaluated to weight-basis coordinates.
//!
//! Terms are an optional rational coefficient times factors separated by
//! spaces or `*`: `zN` (single zeta), `zN^k`, `z(k1,…,kr)` (multiple zeta
//! value ζ_{k1,…,kr}), `Zabc` (semi-canonical irreducible with one-digit odd
//! letters, e.g. `Z35`), each optionally raised to a power.

use super::{gen_coords, single_coords, Gen, ZeroError};
use crate::freealg::Word;
use crate::mzvspace::{self, weight_basis};
use crate::q::Q;

struct Factor {
    weight: usize,
    coords: Vec<Q>,
}

fn err(msg: impl Into<String>) -> ZeroError {
    ZeroError::Other(msg.into())
}

fn parse_factor(tok: &str) -> Result<Factor, ZeroError> {
    let (base, pow) = match tok.split_once('^') {
        Some((b, p)) => (b, p.parse::<usize>().map_err(|_| err(format!("bad power in {}", tok)))?),
        None => (tok, 1),
    };
    let one = if let Some(rest) = base.strip_prefix("z(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| err(format!("unclosed {}", tok)))?;
        let ks: Vec<usize> = inner
            .split(',')
            .map(|k| k.trim().parse::<usize>().map_err(|_| err(format!("bad index in {}", tok))))
            .collect::<Result<_, _>>()?;
        if ks.is_empty() || ks.iter().any(|&k| k == 0) || *ks.last().unwrap() < 2 {
            return Err(err(format!("divergent or empty {}", tok)));
        }
        let w: usize = ks.iter().sum();
        Factor { weight: w, coords: weight_basis(w)?.reduce_word(Word::of_mzv(&ks)) }
    } else if let Some(n) = base.strip_prefix('z') {
        let n: usize = n.parse().map_err(|_| err(format!("bad factor {}", tok)))?;
        if n < 2 {
            return Err(err("z1 is divergent"));
        }
        Factor { weight: n, coords: single_coords(n)? }
    } else if let Some(ds) = base.strip_prefix('Z') {
        let v: Vec<usize> = ds.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(|| err(format!("bad factor {}", tok)))?;
        let g = Gen::Irr(v);
        Factor { weight: g.weight(), coords: (*gen_coords(&g)?).clone() }
    } else {
        return Err(err(format!("unknown factor {}", tok)));
    };
    let mut acc = Factor { weight: one.weight, coords: one.coords.clone() };
    for _ in 1..pow {
        acc = Factor { weight: acc.weight + one.weight, coords: mzvspace::multiply(acc.weight, &acc.coords, one.weight, &one.coords)? };
    }
    Ok(acc)
}

/// Evaluate to (weight, coordinates). All terms must share one weight.
pub fn mzv_expr(text: &str) -> Result<(usize, Vec<Q>), ZeroError> {
    let spaced = text.replace('*', " ").replace('+', " + ").replace('-', " - ");
    let mut total: Option<(usize, Vec<Q>)> = None;
    let mut sign = Q::one();
    let mut coef: Option<Q> = None;
    let mut factors: Vec<Factor> = Vec::new();
    let flush = |sign: &Q, coef: &mut Option<Q>, factors: &mut Vec<Factor>, total: &mut Option<(usize, Vec<Q>)>| -> Result<(), ZeroError> {
        if coef.is_none() && factors.is_empty() {
            return Ok(());
        }
        let c = sign * coef.take().unwrap_or_else(Q::one);
        let mut it = std::mem::take(factors).into_iter();
        let first = it.next().ok_or_else(|| err("constant terms are not supported"))?;
        let (mut w, mut v) = (first.weight, first.coords);
        for f in it {
            v = mzvspace::multiply(w, &v, f.weight, &f.coords)?;
            w += f.weight;
        }
        let v: Vec<Q> = v.iter().map(|x| x * &c).collect();
        match total {
            None => *total = Some((w, v)),
            Some((tw, tv)) => {
                if *tw != w {
                    return Err(err("mixed weights"));
                }
                for (a, b) in tv.iter_mut().zip(&v) {
                    *a += b;
                }
            }
        }
        Ok(())
    };
    for tok in spaced.split_whitespace() {
        match tok {
            "+" | "-" => {
                flush(&sign, &mut coef, &mut factors, &mut total)?;
                sign = if tok == "-" { Q::int(-1) } else { Q::one() };
            }
            t if t.starts_with(|c: char| c.is_ascii_digit()) => {
                if coef.is_some() || !factors.is_empty() {
                    return Err(err(format!("unexpected number {}", t)));
                }
                coef = Some(t.parse().map_err(|_| err(format!("bad number {}", t)))?);
            }
            t => factors.push(parse_factor(t)?),
        }
    }
    flush(&sign, &mut coef, &mut factors, &mut total)?;
    total.ok_or_else(|| err("empty expression"))
}
