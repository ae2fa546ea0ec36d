//! The recursion in modular depth coming from [N, σ_w] = 0, carried out
//! formally in the free Lie algebra on the symbols ε_k^{(j)}, together with
//! the sl₂ projectors t^d, s^d and the closed formulas they express.

use std::collections::BTreeMap;

use crate::freealg::lyndon::is_lyndon;
use crate::freealg::nc::NcPoly;
use crate::genusone::{self, Derivation, EpsExpr, EpsSym, GenusOneError};
use crate::linalg::{solve_columns, SparseRow};
use crate::q::{bernoulli, factorial, Q};

pub mod closed;

pub use closed::{s_proj, sigma3_exact, sigma_depth2_closed, t_proj, z3_bracket_depth3, zw_bracket_depth2, Lowest};

/// B_k / k!.
pub fn bf(k: usize) -> Q {
    &bernoulli(k) / &factorial(k as u64)
}

fn fact(n: i64) -> Q {
    factorial(n as u64)
}

/// Formal ad_{ε₀^∨}: ε_k^{(j)} ↦ j(k−1−j) ε_k^{(j−1)}.
pub fn lower(e: &EpsExpr) -> EpsExpr {
    EpsExpr(e.0.derive(|s| {
        if s.j == 0 {
            return vec![];
        }
        let c = s.j as i64 * (s.k as i64 - 1 - s.j as i64);
        vec![(EpsSym { k: s.k, j: s.j - 1 }, Q::int(c))]
    }))
}

/// Formal ad_{ε₀}.
pub fn raise(e: &EpsExpr) -> EpsExpr {
    e.ad_eps0()
}

/// Modular depth m part: terms with m symbols.
pub fn depth_part(e: &EpsExpr, m: usize) -> EpsExpr {
    let mut p = NcPoly::zero();
    for (w, q) in e.0.iter() {
        if w.len() == m {
            p.add_term(w.clone(), q.clone());
        }
    }
    EpsExpr(p)
}

/// N = −ε₀ + Σ_{k≥4} (k−1) BF_k ε_k through derivation degree `max`.
pub fn n_series(max: usize) -> Derivation {
    let mut n = genusone::eps0().scale(&Q::int(-1));
    n.max = max;
    for k in (4..=max).step_by(2) {
        n.add_scaled(&genusone::epsilon(k).unwrap(), &(&Q::int(k as i64 - 1) * &bf(k)));
    }
    n.truncate(max)
}

/// Lyndon sequences with `m` symbols ε_k^{(j)}, k ≥ 4, Σk = n, Σj = jsum.
pub fn slice_basis(n: usize, m: usize, jsum: usize) -> Vec<Vec<EpsSym>> {
    fn go(n: usize, m: usize, jsum: usize, cur: &mut Vec<EpsSym>, out: &mut Vec<Vec<EpsSym>>) {
        if m == 0 {
            if n == 0 && jsum == 0 && is_lyndon(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for k in (4..=n.saturating_sub(4 * (m - 1))).step_by(2) {
            for j in 0..=(k - 2).min(jsum) {
                cur.push(EpsSym::new(k, j));
                go(n - k, m - 1, jsum - j, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, m, jsum, &mut Vec::new(), &mut out);
    out
}

/// Rows indexed by associative words; the expansion of Lie elements is injective.
struct Rows(BTreeMap<Vec<EpsSym>, usize>);

impl Rows {
    fn vector(&mut self, e: &EpsExpr) -> SparseRow {
        e.0.iter()
            .map(|(w, q)| {
                let len = self.0.len();
                (*self.0.entry(w.clone()).or_insert(len), q.clone())
            })
            .collect()
    }
}

fn solve_in(cols: &[EpsExpr], rhs: &EpsExpr) -> Option<Vec<Q>> {
    let mut rows = Rows(BTreeMap::new());
    let cv: Vec<SparseRow> = cols.iter().map(|c| rows.vector(c)).collect();
    let rv = rows.vector(rhs);
    solve_columns(&cv, &rv, rows.0.len()).ok()
}

fn combine(basis: &[EpsExpr], c: &[Q]) -> EpsExpr {
    let mut e = EpsExpr::zero();
    for (b, q) in basis.iter().zip(c) {
        e.add_scaled(b, q);
    }
    e
}

fn is_homogeneous(e: &EpsExpr) -> Option<(usize, usize, usize)> {
    let mut key = None;
    for (w, _) in e.0.iter() {
        let k = (w.iter().map(|s| s.k as usize).sum(), w.len(), w.iter().map(|s| s.j as usize).sum());
        if key.is_some_and(|x| x != k) {
            return None;
        }
        key = Some(k);
    }
    key
}

/// Split x in its (degree, depth, Σj) slice as hw + ad_{ε₀^∨}(u) with
/// [ε₀, hw] = 0; returns hw.
pub fn highest_weight_part(x: &EpsExpr) -> Result<EpsExpr, GenusOneError> {
    let Some((n, m, jsum)) = is_homogeneous(x) else {
        return if x.is_zero() { Ok(EpsExpr::zero()) } else { Err(GenusOneError::BadInput("inhomogeneous slice".into())) };
    };
    let us: Vec<EpsExpr> = slice_basis(n, m, jsum + 1).iter().map(|w| lower(&EpsExpr::lyndon(w))).collect();
    let cols: Vec<EpsExpr> = us.iter().map(raise).collect();
    let c = solve_in(&cols, &raise(x)).ok_or(GenusOneError::Inconsistent(n))?;
    let mut hw = x.clone();
    hw.add_scaled(&combine(&us, &c), &Q::int(-1));
    Ok(hw)
}

/// Highest-weight input for the recursion, read off the ε-decomposition of
/// σ_w below key degree: map (degree, modular depth) → hw vector.
pub fn hw_from_sigma(w: usize) -> Result<BTreeMap<(usize, usize), EpsExpr>, GenusOneError> {
    let ex = genusone::expansion(w, 2 * w - 2)?;
    let mut out = BTreeMap::new();
    for (n, e) in &ex.parts {
        for m in 1..=w {
            let hw = highest_weight_part(&depth_part(e, m))?;
            if !hw.is_zero() {
                out.insert((*n, m), hw);
            }
        }
    }
    Ok(out)
}

/// Output of the recursion through degree `max`.
#[derive(Clone, Debug)]
pub struct Recursion {
    pub weight: usize,
    pub max: usize,
    /// σ_w^{{m}} summed over degrees
    pub sigma: BTreeMap<usize, EpsExpr>,
    /// [z_w, ε_k]^{{m}} keyed by (k, m)
    pub zbr: BTreeMap<(usize, usize), EpsExpr>,
}

impl Recursion {
    pub fn sigma_total(&self) -> EpsExpr {
        let mut e = EpsExpr::zero();
        for s in self.sigma.values() {
            e.add_scaled(s, &Q::one());
        }
        e
    }

    pub fn zbracket(&self, k: usize) -> EpsExpr {
        let mut e = EpsExpr::zero();
        for ((kk, _), s) in &self.zbr {
            if *kk == k {
                e.add_scaled(s, &Q::one());
            }
        }
        e
    }

    /// σ_w as a derivation through `max` (evaluating brackets), z_w added.
    pub fn sigma_derivation(&self, max: usize) -> Result<Derivation, GenusOneError> {
        let mut total = EpsExpr::zero();
        for n in self.sigma_total().degrees() {
            if n <= max {
                total.add_scaled(&self.sigma_total().degree_part(n), &Q::one());
            }
        }
        let mut d = total.eval()?.truncate(max);
        d.add_scaled(&genusone::z_w(self.weight)?.truncate(max), &Q::one());
        Ok(d)
    }
}

/// Σ_k (k−1) BF_k [ε_k, x] in degree n, x given over all degrees.
fn n_bracket(x: &EpsExpr, n: usize) -> EpsExpr {
    let mut r = EpsExpr::zero();
    for k in (4..=n).step_by(2) {
        let part = x.degree_part(n - k);
        if part.is_zero() {
            continue;
        }
        r.add_scaled(&EpsExpr::sym(k, 0).bracket(&part), &(&Q::int(k as i64 - 1) * &bf(k)));
    }
    r
}

/// Run the recursion for σ_w^{{m}}, m = 1..w, and [z_w, ε_k]^{{m}},
/// m = 2..w+1, through degree `max`, inserting the supplied
/// highest-weight vectors.
pub fn recurse(w: usize, max: usize, hw: &BTreeMap<(usize, usize), EpsExpr>) -> Result<Recursion, GenusOneError> {
    let mut sigma: BTreeMap<usize, EpsExpr> = BTreeMap::new();
    let mut first = EpsExpr::sym(w + 1, w - 1).scale(&(&Q::int(-1) / &fact(w as i64 - 1)));
    if let Some(h) = hw.get(&(w + 1, 1)) {
        first = h.clone();
    }
    sigma.insert(1, first);
    for m in 2..=w {
        let prev = sigma[&(m - 1)].clone();
        let lowered = lower(&prev);
        let mut cur = EpsExpr::zero();
        for n in (4 * m..=max).step_by(2) {
            let rhs = n_bracket(&lowered, n);
            let jsum = w - m;
            let us: Vec<EpsExpr> = slice_basis(n, m, jsum + 1).iter().map(|v| lower(&EpsExpr::lyndon(v))).collect();
            if !rhs.is_zero() {
                let cols: Vec<EpsExpr> = us.iter().map(|u| lower(&raise(u))).collect();
                let c = solve_in(&cols, &rhs).ok_or(GenusOneError::Inconsistent(n))?;
                cur.add_scaled(&combine(&us, &c), &Q::one());
            }
            if let Some(h) = hw.get(&(n, m)) {
                cur.add_scaled(h, &Q::one());
            }
        }
        sigma.insert(m, cur);
    }
    let mut zbr = BTreeMap::new();
    for m in 2..=w + 1 {
        let prev = sigma.get(&(m - 1)).cloned().unwrap_or_default();
        let cur = sigma.get(&m).cloned().unwrap_or_default();
        for n in (2..=max).step_by(2) {
            let mut r = n_bracket(&prev, n);
            r.add_scaled(&raise(&cur.degree_part(n)), &Q::int(-1));
            // what is left must be a lowest-weight vector, and zero unless n = 2w + k
            if !lower(&r).is_zero() || (n < 2 * w + 4 && !r.is_zero()) {
                return Err(GenusOneError::Inconsistent(n));
            }
            if n < 2 * w + 4 {
                continue;
            }
            let k = n - 2 * w;
            let r = r.scale(&(&Q::one() / &(&Q::int(k as i64 - 1) * &bf(k))));
            if !r.is_zero() {
                zbr.insert((k, m), r);
            }
        }
    }
    Ok(Recursion { weight: w, max, sigma, zbr })
}

/// [N, σ] as derivations through degree `max`; empty when it vanishes.
pub fn n_commutator_defect(sigma: &Derivation, max: usize) -> Vec<usize> {
    let c = n_series(max).bracket(&sigma.truncate(max));
    c.degrees()
}
