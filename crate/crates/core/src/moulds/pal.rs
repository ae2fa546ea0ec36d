use std::sync::{Arc, OnceLock};

use super::{Frac, Mould, MouldError, Poly};
use crate::memo::Memo;
use crate::q::{bernoulli, binom, factorial, Q};

/// dupal(u1..ur) = B_r/r! · (Σ_j (−1)^j C(r−1,j) u_{j+1}) / (u1⋯ur).
pub fn dupal(max: usize) -> Mould {
    let mut m = Mould::zero(max);
    for r in 1..=max {
        let c = bernoulli(r) / factorial(r as u64);
        if c.is_zero() {
            continue;
        }
        let mut num = Poly::zero();
        for j in 0..r {
            let b = binom((r - 1) as u64, j as u64);
            num.add_scaled(&Poly::var(j), &if j % 2 == 0 { b } else { -b });
        }
        let mut f = Frac::poly(num.scale(&c));
        for i in 0..r {
            let mut e = vec![0; i + 1];
            e[i] = 1;
            f = f.div_linear(&e);
        }
        m.set(r, f);
    }
    m
}

fn memo(slot: &'static OnceLock<Memo<usize, Arc<Mould>>>) -> &'static Memo<usize, Arc<Mould>> {
    slot.get_or_init(Memo::new)
}

/// pal from dur(pal) = mu(pal, dupal) with pal(∅) = 1.
pub fn pal(max: usize) -> Arc<Mould> {
    static M: OnceLock<Memo<usize, Arc<Mould>>> = OnceLock::new();
    memo(&M).get_or_init(&max, || {
        let du = dupal(max);
        let mut p = Mould::id(max);
        for r in 1..=max {
            // only pal in depths < r enters, since dupal(∅) = 0
            let mut f = p.mu(&du).part(r).clone();
            f = f.div_linear(&vec![1; r]);
            f.reduce();
            p.set(r, f);
        }
        Arc::new(p)
    })
}

/// lopal = log_ari(pal).
pub fn lopal(max: usize) -> Arc<Mould> {
    static M: OnceLock<Memo<usize, Arc<Mould>>> = OnceLock::new();
    memo(&M).get_or_init(&max, || Arc::new(pal(max).log_ari()))
}

/// The inverse of pal in GARI: exp_ari(−lopal).
pub fn invpal(max: usize) -> Arc<Mould> {
    static M: OnceLock<Memo<usize, Arc<Mould>>> = OnceLock::new();
    memo(&M).get_or_init(&max, || Arc::new(lopal(max).scale(&Q::int(-1)).exp_ari()))
}

/// The inverse of pal for mu, which is a different mould from depth 2 on.
pub fn invpal_mu(max: usize) -> Mould {
    let p = pal(max);
    let mut inv = Mould::id(max);
    for r in 1..=max {
        let f = p.mu(&inv).part(r).clone();
        let mut g = f.scale(&Q::int(-1));
        g.reduce();
        inv.set(r, g);
    }
    inv
}

/// Outcome of comparing T_w = ma(τ_w(a)) with Δ∘Ad_ari(invpal)(ma(g_w)).
#[derive(Clone, Debug)]
pub struct TwReport {
    pub weight: usize,
    pub depth: usize,
    /// ma(τ_w(a)) from the extension lemma
    pub t: Mould,
    /// Ad_ari(invpal)(G_w)
    pub adjoint: Mould,
    /// first (depth, difference) where Δ(adjoint) and t disagree
    pub mismatch: Option<(usize, String)>,
    pub bialternal: bool,
    /// constants c_r making swap(adjoint) + c_r alternal in depth r
    pub swap_constants: Vec<(usize, Q)>,
    pub push_invariant: bool,
    pub even_parity: bool,
    pub even_depths_vanish: bool,
    /// T_w(u1) = u1^{w+1}
    pub depth_one: bool,
}

impl TwReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.bialternal && self.push_invariant && self.even_parity && self.even_depths_vanish && self.depth_one
    }
}

pub fn cross_check_tw(w: usize, rmax: usize) -> Result<TwReport, MouldError> {
    let up = |e: &dyn std::fmt::Display| MouldError::Upstream(e.to_string());
    let gw = crate::genuszero::canonical_gw(w).map_err(|e| up(&e))?;
    let g = Mould::ma(&gw.poly, w)?.truncate(rmax);
    let tau = crate::genusone::tau(w, w + rmax).map_err(|e| up(&e))?;
    let t = Mould::ma(&tau.a(), rmax)?;
    let adjoint = Mould::ad_exp(&lopal(rmax).scale(&Q::int(-1)), &g);
    let lhs = adjoint.delta();
    let mut mismatch = None;
    for r in 0..=rmax {
        let mut d = lhs.part(r).clone();
        d.add_scaled(t.part(r), &Q::int(-1));
        d.reduce();
        if !d.is_zero() {
            mismatch = Some((r, d.to_string()));
            break;
        }
    }
    let even_depths_vanish = (2..=rmax).step_by(2).all(|r| t.part(r).is_zero());
    let u1 = Frac::poly(Poly::var(0).pow(w as u32 + 1));
    Ok(TwReport {
        weight: w,
        depth: rmax,
        bialternal: adjoint.is_bialternal(rmax),
        swap_constants: adjoint.swap().alternality_constants(rmax).unwrap_or_default(),
        push_invariant: adjoint.is_push_invariant(),
        even_parity: adjoint.negate_args() == adjoint,
        even_depths_vanish,
        depth_one: *t.part(1) == u1,
        t,
        adjoint,
        mismatch,
    })
}
