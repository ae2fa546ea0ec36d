//! The extension-lemma construction of τ_w from g_w, and σ_w = θτ_wθ.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;

use super::derivation::{ad_pow_trunc, letter, Derivation, A, B};
use super::GenusOneError;
use crate::freealg::lyndon::standard_split;
use crate::freealg::{lie_decompose, Alphabet, Series, Word, X};
use crate::genuszero::canonical_gw;
use crate::memo::Memo;
use crate::q::{bernoulli, factorial, Q};

fn bf(n: usize) -> Q {
    &bernoulli(n) / &factorial(n as u64)
}

/// t₀₁ = −a − Σ_{n≥1} (B_n/n!) ad_b^n(a), words of length ≤ `cap`.
pub fn t01(cap: usize) -> Series {
    let (a, b) = (letter(A), letter(B));
    let mut t = -&a;
    let mut ad = a;
    for n in 1..cap {
        ad = b.bracket(&ad);
        t.add_scaled(&ad, &-bf(n));
    }
    t
}

pub fn t12() -> Series {
    letter(A).bracket(&letter(B))
}

/// The partner g' = Σ_i ((−1)^{i−1}/i!) a^i b ∂_a^i(g_a), with g = g_a a + g_b b.
pub fn partner(g: &Series) -> Series {
    let mut out = Series::zero(Alphabet::AB);
    for (w, q) in g.iter() {
        if w.last() != Some(A) {
            continue;
        }
        let u = w.init();
        let apos: Vec<usize> = (0..u.len()).filter(|&p| u.get(p) == A).collect();
        // (1/i!)∂_a^i deletes i of the a's in every possible way
        for mask in 0u64..(1 << apos.len()) {
            let i = mask.count_ones() as usize;
            let kept: Vec<u8> = (0..u.len())
                .filter(|&p| apos.iter().position(|&x| x == p).map_or(true, |t| mask >> t & 1 == 0))
                .map(|p| u.get(p))
                .collect();
            let word = Word::power(A, i).append(B).concat(Word::from_letters(&kept));
            out.add_term(word, if i % 2 == 1 { q.clone() } else { -q });
        }
    }
    out
}

pub fn is_push_invariant(s: &Series) -> bool {
    s.iter().all(|(w, q)| s.coeff(w.push()) == *q)
}

/// h(t₁₂, −t₀₁) for a Lie polynomial h in x,y, words of length ≤ `cap`.
pub fn substitute(h: &Series, cap: usize) -> Result<Series, GenusOneError> {
    let terms = lie_decompose(h).map_err(|e| GenusOneError::BadInput(format!("{:?}", e)))?;
    let x_img = t12();
    let y_img = -t01(cap);
    let mut memo: FxHashMap<Vec<u8>, Series> = FxHashMap::default();
    fn go(w: &[u8], x: &Series, y: &Series, cap: usize, memo: &mut FxHashMap<Vec<u8>, Series>) -> Series {
        if w.len() == 1 {
            return if w[0] == X { x.clone() } else { y.clone() };
        }
        if let Some(s) = memo.get(w) {
            return s.clone();
        }
        let i = standard_split(w);
        let s = go(&w[..i], x, y, cap, memo).bracket_trunc(&go(&w[i..], x, y, cap, memo), cap);
        memo.insert(w.to_vec(), s.clone());
        s
    }
    let mut out = Series::zero(Alphabet::AB);
    for (w, q) in terms {
        out.add_scaled(&go(&w.to_vec(), &x_img, &y_img, cap, &mut memo), &q);
    }
    Ok(out)
}

/// τ_h through derivation degree `max`, from κ_h(t₀₁) = [t₀₁, h(t₁₂, −t₀₁)].
pub fn build_tau(h: &Series, max: usize) -> Result<Derivation, GenusOneError> {
    let cap = max + 1;
    let t = t01(cap);
    let kappa = t.bracket_trunc(&substitute(h, cap.saturating_sub(1))?, cap).by_degree();
    let (a, b) = (letter(A), letter(B));
    let adb: Vec<Series> = (0..=cap).map(|k| ad_pow_trunc(&b, k, &a, cap)).collect();
    let coef: Vec<Q> = (0..=cap).map(bf).collect();
    let mut ta: BTreeMap<usize, Series> = BTreeMap::new();
    let mut tb: BTreeMap<usize, Series> = BTreeMap::new();
    for d in 1..=cap {
        let mut s = kappa.get(&d).map(|k| -k).unwrap_or_else(|| Series::zero(Alphabet::AB));
        for n in 1..d {
            if coef[n].is_zero() {
                continue;
            }
            let e = d - n;
            let c = -&coef[n];
            if let Some(x) = ta.get(&e) {
                s.add_scaled(&ad_pow_trunc(&b, n, x, cap), &c);
            }
            if let Some(y) = tb.get(&e) {
                for i in 0..n {
                    s.add_scaled(&ad_pow_trunc(&b, i, &y.bracket(&adb[n - 1 - i]), cap), &c);
                }
            }
        }
        if s.is_zero() {
            continue;
        }
        if !is_push_invariant(&s) {
            return Err(GenusOneError::NotPushInvariant(d - 1));
        }
        tb.insert(d, partner(&s));
        ta.insert(d, s);
    }
    let sum = |m: &BTreeMap<usize, Series>| m.values().fold(Series::zero(Alphabet::AB), |acc, s| acc + s.clone());
    let tau = Derivation::from_images(&sum(&ta), &sum(&tb), max);
    if let Some((n, _)) = tau.bracket_defect().into_iter().next() {
        return Err(GenusOneError::NotInDer0(n));
    }
    Ok(tau)
}

/// τ_w for the canonical generator g_w, through derivation degree `max`.
pub fn tau(w: usize, max: usize) -> Result<Arc<Derivation>, GenusOneError> {
    static MEMO: OnceLock<Memo<(usize, usize), Result<Arc<Derivation>, GenusOneError>>> = OnceLock::new();
    if w < 3 || w % 2 == 0 {
        return Err(GenusOneError::BadInput(format!("τ_w needs odd w ≥ 3, got {}", w)));
    }
    MEMO.get_or_init(Memo::new).get_or_init(&(w, max), || {
        let g = canonical_gw(w).map_err(|e| GenusOneError::BadInput(e.to_string()))?;
        build_tau(&g.poly, max).map(Arc::new)
    })
}

/// σ_w = θ∘τ_w∘θ.
pub fn sigma(w: usize, max: usize) -> Result<Arc<Derivation>, GenusOneError> {
    static MEMO: OnceLock<Memo<(usize, usize), Result<Arc<Derivation>, GenusOneError>>> = OnceLock::new();
    MEMO.get_or_init(Memo::new).get_or_init(&(w, max), || Ok(Arc::new(tau(w, max)?.switched())))
}
