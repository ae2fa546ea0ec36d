//! Decomposition of σ_w into brackets of ε_k^{(j)} and extraction of z_w.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::derivation::Derivation;
use super::eps::{eps0, eps0_vee, eval_lyndon, EpsExpr, EpsSym, FULL};
use super::tau::sigma;
use super::GenusOneError;
use crate::freealg::lyndon::is_lyndon;
use crate::freealg::Word;
use crate::linalg::{solve_columns, SparseRow};
use crate::q::Q;

/// Lyndon sequences of symbols ε_k^{(j)}, k ≥ 4, with Σk = `degree` and
/// r + Σj = `depth`, in increasing order. They index a basis of the free
/// Lie algebra on the symbols in that bidegree.
pub fn ansatz_words(depth: usize, degree: usize) -> Vec<Vec<EpsSym>> {
    fn go(depth: usize, degree: usize, cur: &mut Vec<EpsSym>, out: &mut Vec<Vec<EpsSym>>) {
        if degree == 0 {
            if depth == 0 && is_lyndon(cur) {
                out.push(cur.clone());
            }
            return;
        }
        if depth == 0 {
            return;
        }
        for k in (4..=degree).step_by(2) {
            for j in 0..=(k - 2).min(depth - 1) {
                cur.push(EpsSym::new(k, j));
                go(depth - 1 - j, degree - k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(depth, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Index words of the a- and b-images in derivation degree `n` as rows.
struct Rows {
    index: FxHashMap<(bool, Word), usize>,
}

impl Rows {
    fn vector(&mut self, d: &Derivation, n: usize) -> SparseRow {
        let mut v = Vec::new();
        for (side, s) in [(false, d.a_part(n)), (true, d.b_part(n))] {
            for (w, q) in s.sorted() {
                let len = self.index.len();
                let i = *self.index.entry((side, w)).or_insert(len);
                v.push((i, q));
            }
        }
        v
    }
}

fn solve(cols: &[Derivation], rhs: &Derivation, n: usize) -> Result<Vec<Q>, GenusOneError> {
    let mut rows = Rows { index: FxHashMap::default() };
    let cv: Vec<SparseRow> = cols.iter().map(|d| rows.vector(d, n)).collect();
    let rv = rows.vector(rhs, n);
    solve_columns(&cv, &rv, rows.index.len()).map_err(|_| GenusOneError::Inconsistent(n))
}

/// Write the degree-`n` part of `delta` as a combination of ε-brackets of
/// total depth `depth`. Dependent directions get coefficient zero.
pub fn decompose(delta: &Derivation, depth: usize, n: usize) -> Result<EpsExpr, GenusOneError> {
    let words = ansatz_words(depth, n);
    let mut memo = BTreeMap::new();
    let cols = words.iter().map(|w| eval_lyndon(w, &mut memo)).collect::<Result<Vec<_>, _>>()?;
    let c = solve(&cols, &delta.part(n), n)?;
    let mut e = EpsExpr::zero();
    for (w, q) in words.iter().zip(&c) {
        e.add_scaled(&EpsExpr::lyndon(w), q);
    }
    Ok(e)
}

/// The split σ_w^key = z_w + [ε₀, H] in degree 2w. The geometric part is
/// sought in the image of ad_{ε₀}, so it has no sl₂-singlet component.
#[derive(Clone, Debug)]
pub struct KeySplit {
    pub zw: Derivation,
    pub geometric: EpsExpr,
}

pub fn split_key(w: usize) -> Result<KeySplit, GenusOneError> {
    let n = 2 * w;
    let key = sigma(w, n)?.part(n);
    let e0 = eps0();
    let words = ansatz_words(w - 1, n);
    let mut memo = BTreeMap::new();
    let mut raised = Vec::new();
    let mut cols = Vec::new();
    for h in &words {
        let r = e0.bracket(&eval_lyndon(h, &mut memo)?);
        cols.push(e0.bracket(&r));
        raised.push(r);
    }
    let c = solve(&cols, &e0.bracket(&key), n)?;
    // z_w is homogeneous, so it carries no truncation
    let mut zw = key;
    zw.max = FULL;
    let mut hexpr = EpsExpr::zero();
    for ((h, r), q) in words.iter().zip(&raised).zip(&c) {
        zw.add_scaled(r, &-q);
        hexpr.add_scaled(&EpsExpr::lyndon(h), q);
    }
    if !eps0_vee().bracket(&zw).is_zero() {
        return Err(GenusOneError::SingletResidual(w));
    }
    Ok(KeySplit { zw, geometric: hexpr.ad_eps0() })
}

pub fn z_w(w: usize) -> Result<Derivation, GenusOneError> {
    Ok(split_key(w)?.zw)
}

/// σ_w through derivation degree `max` as ε-brackets by degree; the key
/// degree holds only the geometric part, z_w is returned alongside.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub weight: usize,
    pub parts: BTreeMap<usize, EpsExpr>,
    pub zw: Derivation,
}

impl Expansion {
    pub fn total(&self) -> EpsExpr {
        let mut e = EpsExpr::zero();
        for p in self.parts.values() {
            e.add_scaled(p, &Q::one());
        }
        e
    }

    /// The derivation Σ parts + z_w, for comparison with σ_w.
    pub fn eval(&self) -> Result<Derivation, GenusOneError> {
        let mut d = self.total().eval()?;
        d.add_scaled(&self.zw, &Q::one());
        Ok(d)
    }
}

pub fn expansion(w: usize, max: usize) -> Result<Expansion, GenusOneError> {
    let s = sigma(w, max.max(2 * w))?;
    let split = split_key(w)?;
    let mut parts = BTreeMap::new();
    for n in s.degrees() {
        if n > max {
            continue;
        }
        let e = if n == 2 * w { split.geometric.clone() } else { decompose(&s, w, n)? };
        parts.insert(n, e);
    }
    Ok(Expansion { weight: w, parts, zw: split.zw })
}
