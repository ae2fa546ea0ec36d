//! Canonical decomposition MZ_w = Qζ_w ⊕ I_w ⊕ R_w, the semi-canonical basis,
//! and the canonical polynomials g_w by two independent routes.

pub mod expr;
pub mod ihara;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use ihara::{diamond, diamond_chain, ihara_bracket, ihara_derivation};

use crate::freealg::lyndon::{bracket_fold, is_lyndon};
use crate::freealg::word::all_words;
use crate::freealg::{Series, Word, X, Y};
use crate::linalg;
use crate::memo::Memo;
use crate::mzvspace::{self, weight_basis, MzvError};
use crate::q::Q;

/// Algebra generator of MZ modulo even zetas: an odd single ζ_n or a
/// semi-canonical irreducible Z_{v1…vr} (Lyndon word in odd letters, r ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Odd(usize),
    Irr(Vec<usize>),
}

impl Gen {
    pub fn weight(&self) -> usize {
        match self {
            Gen::Odd(n) => *n,
            Gen::Irr(v) => v.iter().sum(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Gen::Odd(n) => format!("z{}", n),
            Gen::Irr(v) => format!("Z{}", v.iter().map(|k| k.to_string()).collect::<String>()),
        }
    }
}

/// Semi-canonical basis element: ζ_{2m} (m ≥ 0) times an ordered product of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub even: usize,
    pub gens: Vec<Gen>,
}

impl Mono {
    pub fn weight(&self) -> usize {
        self.even + self.gens.iter().map(|g| g.weight()).sum::<usize>()
    }

    pub fn factors(&self) -> usize {
        (self.even > 0) as usize + self.gens.len()
    }

    pub fn is_single(&self) -> bool {
        (self.even > 0 && self.gens.is_empty()) || (self.even == 0 && matches!(self.gens[..], [Gen::Odd(_)]))
    }

    pub fn is_irreducible(&self) -> bool {
        self.even == 0 && matches!(self.gens[..], [Gen::Irr(_)])
    }

    pub fn is_reducible(&self) -> bool {
        self.factors() >= 2
    }

    /// Lies in the ideal generated by ζ2.
    pub fn has_even(&self) -> bool {
        self.even > 0
    }

    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.even > 0 {
            parts.push(format!("z{}", self.even));
        }
        let mut i = 0;
        while i < self.gens.len() {
            let mut j = i;
            while j < self.gens.len() && self.gens[j] == self.gens[i] {
                j += 1;
            }
            let l = self.gens[i].label();
            parts.push(if j - i > 1 { format!("{}^{}", l, j - i) } else { l });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ZeroError {
    #[error(transparent)]
    Mzv(#[from] MzvError),
    #[error("semi-canonical elements are linearly dependent at weight {0}")]
    Dependent(usize),
    #[error("canonical generator system is singular at weight {0}")]
    Singular(usize),
    #[error("{0}")]
    Other(String),
}

type R<T> = Result<T, ZeroError>;

fn memo_err<T: Clone>(r: &Result<T, String>) -> R<T> {
    r.clone().map_err(ZeroError::Other)
}

/// Lyndon words in odd letters ≥ 3 of total weight w with at least two letters.
pub fn odd_lyndon_words(w: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 && is_lyndon(cur) {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 3;
        while k <= rest {
            cur.push(k);
            rec(rest - k, cur, out);
            cur.pop();
            k += 2;
        }
    }
    let mut out = Vec::new();
    rec(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Generators of weight ≤ w in a fixed order.
fn generators_up_to(w: usize) -> Vec<Gen> {
    let mut g = Vec::new();
    for n in 3..=w {
        if n % 2 == 1 {
            g.push(Gen::Odd(n));
        }
        for v in odd_lyndon_words(n) {
            g.push(Gen::Irr(v));
        }
    }
    g.sort();
    g
}

/// All semi-canonical basis elements of weight w: single first, then
/// irreducibles, then reducibles.
pub fn semi_canonical_monos(w: usize) -> Vec<Mono> {
    let gens = generators_up_to(w);
    let mut all = Vec::new();
    fn rec(gens: &[Gen], start: usize, rest: usize, cur: &mut Vec<Gen>, even: usize, out: &mut Vec<Mono>) {
        if rest == 0 {
            out.push(Mono { even, gens: cur.clone() });
            return;
        }
        for i in start..gens.len() {
            let gw = gens[i].weight();
            if gw <= rest {
                cur.push(gens[i].clone());
                rec(gens, i, rest - gw, cur, even, out);
                cur.pop();
            }
        }
    }
    let mut e = 0;
    while e <= w {
        rec(&gens, 0, w - e, &mut Vec::new(), e, &mut all);
        e += 2;
    }
    let single: Vec<Mono> = all.iter().filter(|m| m.is_single()).cloned().collect();
    let mut irr: Vec<Mono> = all.iter().filter(|m| m.is_irreducible()).cloned().collect();
    let mut red: Vec<Mono> = all.iter().filter(|m| m.is_reducible()).cloned().collect();
    irr.sort();
    red.sort_by(|a, b| (a.even == 0).cmp(&(b.even == 0)).then(a.even.cmp(&b.even)).then(a.gens.cmp(&b.gens)));
    let mut out = single;
    out.extend(irr);
    out.extend(red);
    out
}

fn single_word(n: usize) -> Word {
    Word::power(X, n - 1).append(Y)
}

/// Weight-basis coordinates of ζ_n.
pub fn single_coords(n: usize) -> R<Vec<Q>> {
    Ok(weight_basis(n)?.reduce_word(single_word(n)))
}

fn gen_memo() -> &'static Memo<Gen, Result<Arc<Vec<Q>>, String>> {
    static M: OnceLock<Memo<Gen, Result<Arc<Vec<Q>>, String>>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

/// Polynomial of a Lyndon word of odd letters: nested Ihara brackets of g's.
pub fn irreducible_polynomial(v: &[usize]) -> R<Series> {
    let mut err = None;
    let p = bracket_fold(
        v,
        &mut |k: &usize| match canonical_gw(*k) {
            Ok(g) => g.poly.clone(),
            Err(e) => {
                err = Some(e.to_string());
                Series::zero(crate::Alphabet::XY)
            }
        },
        &mut |a, b| ihara_bracket(&a, &b),
    );
    match err {
        Some(e) => Err(ZeroError::Other(e)),
        None => Ok(p),
    }
}

pub fn gen_coords(g: &Gen) -> R<Arc<Vec<Q>>> {
    let r = gen_memo().get_or_init(g, || {
        let run = || -> R<Arc<Vec<Q>>> {
            Ok(Arc::new(match g {
                Gen::Odd(n) => single_coords(*n)?,
                Gen::Irr(v) => {
                    let w: usize = v.iter().sum();
                    weight_basis(w)?.reduce(&irreducible_polynomial(v)?)
                }
            }))
        };
        run().map_err(|e| e.to_string())
    });
    memo_err(&r)
}

/// Weight-basis coordinates of a semi-canonical element.
pub fn mono_coords(m: &Mono) -> R<Vec<Q>> {
    let mut acc: Option<(usize, Vec<Q>)> = if m.even > 0 { Some((m.even, single_coords(m.even)?)) } else { None };
    for g in &m.gens {
        let c = gen_coords(g)?;
        acc = Some(match acc {
            None => (g.weight(), (*c).clone()),
            Some((w, a)) => (w + g.weight(), mzvspace::multiply(w, &a, g.weight(), &c)?),
        });
    }
    Ok(acc.map(|x| x.1).unwrap_or_else(|| vec![Q::one()]))
}

/// Canonical decomposition of one weight in semi-canonical coordinates.
#[derive(Clone, Debug)]
pub struct CanonicalDecomposition {
    pub weight: usize,
    /// single first, then irreducibles, then reducibles
    pub monos: Vec<Mono>,
    /// columns: weight-basis coordinates of each mono
    pub coords: Vec<Vec<Q>>,
    /// inverse of the coordinate matrix: semi-canonical coordinates of basis vectors
    inverse: Vec<Vec<Q>>,
}

impl CanonicalDecomposition {
    pub fn single(&self) -> &[Q] {
        &self.coords[0]
    }

    pub fn irreducibles(&self) -> Vec<(Mono, Vec<Q>)> {
        self.select(|m| m.is_irreducible())
    }

    pub fn reducibles(&self) -> Vec<(Mono, Vec<Q>)> {
        self.select(|m| m.is_reducible())
    }

    fn select(&self, f: impl Fn(&Mono) -> bool) -> Vec<(Mono, Vec<Q>)> {
        self.monos.iter().zip(&self.coords).filter(|(m, _)| f(m)).map(|(m, c)| (m.clone(), c.clone())).collect()
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        self.monos.iter().position(|x| x == m)
    }

    /// Express weight-basis coordinates in the semi-canonical basis.
    pub fn semi_canonical(&self, v: &[Q]) -> Vec<Q> {
        linalg::mat_vec(&self.inverse, v)
    }

    /// Readable semi-canonical expansion, skipping zero coefficients.
    pub fn describe(&self, v: &[Q]) -> Vec<(String, Q)> {
        self.semi_canonical(v)
            .into_iter()
            .zip(&self.monos)
            .filter(|(q, _)| !q.is_zero())
            .map(|(q, m)| (m.label(), q))
            .collect()
    }

    /// Linear form sending the i-th semi-canonical element to 1 and the others to 0.
    pub fn dual_form(&self, i: usize) -> Vec<Q> {
        self.inverse[i].clone()
    }
}

fn decomposition_memo() -> &'static Memo<usize, Result<Arc<CanonicalDecomposition>, String>> {
    static M: OnceLock<Memo<usize, Result<Arc<CanonicalDecomposition>, String>>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

pub fn canonical_decomposition(w: usize) -> R<Arc<CanonicalDecomposition>> {
    let r = decomposition_memo().get_or_init(&w, || {
        let run = || -> R<Arc<CanonicalDecomposition>> {
            let b = weight_basis(w)?;
            let monos = semi_canonical_monos(w);
            if monos.len() != b.dim() {
                return Err(ZeroError::Dependent(w));
            }
            let coords: Vec<Vec<Q>> = monos.iter().map(mono_coords).collect::<R<_>>()?;
            // matrix with the mono coordinates as columns
            let d = b.dim();
            let m: Vec<Vec<Q>> = (0..d).map(|i| (0..d).map(|j| coords[j][i].clone()).collect()).collect();
            let inverse = linalg::inverse(&m).ok_or(ZeroError::Dependent(w))?;
            Ok(Arc::new(CanonicalDecomposition { weight: w, monos, coords, inverse }))
        };
        run().map_err(|e| e.to_string())
    });
    memo_err(&r)
}

/// g_w with its Z-map image.
#[derive(Clone, Debug)]
pub struct CanonicalGenerator {
    pub weight: usize,
    pub poly: Series,
    /// weight-basis coordinates of Z(g_w)
    pub z_coords: Vec<Q>,
}

fn gram(w: usize) -> R<Vec<Vec<Q>>> {
    let b = weight_basis(w)?;
    let d = b.dim();
    let mut g = vec![vec![Q::zero(); d]; d];
    for u in all_words(w) {
        let r = b.reduce_word(u);
        for i in 0..d {
            if r[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if !r[j].is_zero() {
                    g[i][j] += &(&r[i] * &r[j]);
                }
            }
        }
    }
    Ok(g)
}

fn gw_memo() -> &'static Memo<usize, Result<Arc<CanonicalGenerator>, String>> {
    static M: OnceLock<Memo<usize, Result<Arc<CanonicalGenerator>, String>>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

/// The canonical polynomial g_w from its characterizing properties: unit
/// coefficient on x^{w-1}y, orthogonal to R_w, and Z(g_w) ∈ Qζ_w ⊕ R_w.
/// Only the reducibles enter; the irreducible basis is not used.
pub fn canonical_gw(w: usize) -> R<Arc<CanonicalGenerator>> {
    let r = gw_memo().get_or_init(&w, || canonical_gw_uncached(w).map(Arc::new).map_err(|e| e.to_string()));
    memo_err(&r)
}

fn reducible_monos(w: usize) -> Vec<Mono> {
    semi_canonical_monos(w).into_iter().filter(|m| m.is_reducible()).collect()
}

pub fn canonical_gw_uncached(w: usize) -> R<CanonicalGenerator> {
    let b = weight_basis(w)?;
    let d = b.dim();
    let single = single_coords(w)?;
    let reds: Vec<Vec<Q>> = reducible_monos(w).iter().map(mono_coords).collect::<R<_>>()?;
    let mut span = vec![single.clone()];
    span.extend(reds.iter().cloned());
    let ann = linalg::nullspace(&span, d);
    let g = gram(w)?;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs = Vec::new();
    rows.push(single.clone());
    rhs.push(Q::one());
    for r in &reds {
        rows.push(r.clone());
        rhs.push(Q::zero());
    }
    for psi in &ann {
        // ψ·(Gφ) = (ψ^T G)·φ
        let row: Vec<Q> = (0..d).map(|j| (0..d).map(|i| &psi[i] * &g[i][j]).sum()).collect();
        rows.push(row);
        rhs.push(Q::zero());
    }
    if rows.len() != d {
        return Err(ZeroError::Dependent(w));
    }
    let phi = linalg::solve_square(&rows, &rhs).ok_or(ZeroError::Singular(w))?;
    let poly = b.dual_polynomial(&phi);
    let z_coords = linalg::mat_vec(&g, &phi);
    Ok(CanonicalGenerator { weight: w, poly, z_coords })
}

/// Coefficient of a semi-canonical element in the weight-w part of the
/// associator, i.e. Σ_u c_m(Z(u)) u; for the single ζ_w this is g_w.
pub fn phi_coefficient_of(w: usize, m: &Mono) -> R<Series> {
    let dec = canonical_decomposition(w)?;
    let i = dec.index_of(m).ok_or_else(|| ZeroError::Other(format!("{} is not a weight-{} basis element", m, w)))?;
    Ok(weight_basis(w)?.dual_polynomial(&dec.dual_form(i)))
}

pub fn phi_coefficient(w: usize) -> R<Series> {
    let dec = canonical_decomposition(w)?;
    let m = dec.monos[0].clone();
    phi_coefficient_of(w, &m)
}

/// The single ζ_w as a semi-canonical element.
pub fn single_mono(w: usize) -> Mono {
    if w % 2 == 0 {
        Mono { even: w, gens: vec![] }
    } else {
        Mono { even: 0, gens: vec![Gen::Odd(w)] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_series, Alphabet};

    #[test]
    fn monos_weight_eight_and_ten() {
        let m8: Vec<String> = semi_canonical_monos(8).iter().map(|m| m.label()).collect();
        assert_eq!(m8, vec!["z8", "Z35", "z2 z3^2", "z3 z5"]);
        let m10 = semi_canonical_monos(10);
        assert_eq!(m10.len(), 7);
        assert_eq!(m10.iter().filter(|m| m.is_reducible()).count(), 5);
        assert_eq!(odd_lyndon_words(11), vec![vec![3, 3, 5]]);
        assert_eq!(odd_lyndon_words(12), vec![vec![3, 9], vec![5, 7]]);
    }

    #[test]
    fn g2_g3() {
        let g2 = canonical_gw(2).unwrap();
        assert_eq!(g2.poly, parse_series("[xy]", Alphabet::XY).unwrap());
        let g3 = canonical_gw(3).unwrap();
        assert_eq!(g3.poly, parse_series("[x[xy]]+[[xy]y]", Alphabet::XY).unwrap());
        assert_eq!(g3.z_coords, vec![Q::int(12)].iter().map(|q| q * &single_coords(3).unwrap()[0]).collect::<Vec<_>>());
    }
}
