//! sl₂ projectors and the closed formulas written with them.

use super::{bf, raise};
use crate::genusone::EpsExpr;
use crate::q::{binom, factorial, Q};

/// A lowest-weight vector together with the k of the V(ε_k) it generates.
#[derive(Clone, Debug)]
pub struct Lowest {
    pub expr: EpsExpr,
    pub k: i64,
}

impl Lowest {
    pub fn eps(k: usize) -> Lowest {
        Lowest { expr: EpsExpr::sym(k, 0), k: k as i64 }
    }

    /// ad_{ε₀}^j, zero past the top of the representation.
    fn raised(&self, j: i64) -> EpsExpr {
        if j < 0 || j > self.k - 2 {
            return EpsExpr::zero();
        }
        let mut e = self.expr.clone();
        for _ in 0..j {
            e = raise(&e);
        }
        e
    }
}

fn f(n: i64) -> Q {
    factorial(n as u64)
}

/// t^d(x, y): the lowest-weight vector of V(ε_{k₁+k₂−2d+2}) in V(x)⊗V(y).
pub fn t_proj(d: i64, x: &Lowest, y: &Lowest) -> Lowest {
    let (k1, k2) = (x.k, y.k);
    let pre = &f(d - 2) / &(&f(k1 - 2) * &f(k2 - 2));
    let mut e = EpsExpr::zero();
    for i in 0..=d - 2 {
        if k1 - 2 - i < 0 || k2 - d + i < 0 {
            continue;
        }
        let c = &(&f(k1 - 2 - i) * &f(k2 - d + i)) / &(&f(i) * &f(d - 2 - i));
        let c = if i % 2 == 0 { c } else { -c };
        e.add_scaled(&x.raised(i).bracket(&y.raised(d - 2 - i)), &(&pre * &c));
    }
    Lowest { expr: e, k: k1 + k2 - 2 * d + 2 }
}

/// s^d(x, y), a highest-weight vector when d ≤ min(k₁, k₂); for larger d
/// it is kept as the same formal combination.
pub fn s_proj(d: i64, x: &Lowest, y: &Lowest) -> EpsExpr {
    let (k1, k2) = (x.k, y.k);
    let pre = &f(d - 2) / &(&f(k1 - 2) * &f(k2 - 2));
    let mut e = EpsExpr::zero();
    for i in 0..=d - 2 {
        let c = if i % 2 == 0 { pre.clone() } else { -&pre };
        e.add_scaled(&x.raised(k1 - 2 - i).bracket(&y.raised(k2 - d + i)), &c);
    }
    e
}

fn eps(k: usize) -> Lowest {
    Lowest::eps(k)
}

/// All-order σ₃ without z₃, through ε-degree `max`.
pub fn sigma3_exact(max: usize) -> EpsExpr {
    let mut e: EpsExpr = "-1/2 e4^(2) + 1/480 [e4,e4^(1)]".parse().unwrap();
    for k in (6..=max.saturating_sub(4)).step_by(2) {
        let t = EpsExpr::sym(4, 1).bracket(&EpsExpr::sym(k, 0));
        let u = EpsExpr::sym(4, 0).bracket(&EpsExpr::sym(k, 1)).scale(&Q::new(-1, k as i64 - 2));
        e.add_scaled(&t, &bf(k));
        e.add_scaled(&u, &bf(k));
    }
    for m in (4..=max).step_by(2) {
        for r in (6..=max).step_by(2) {
            if m + 4 + r > max {
                break;
            }
            let c = &(&(&Q::int(m as i64 - 1) * &bf(m)) * &bf(r)) / &Q::int((m + r - 2) as i64);
            let b = EpsExpr::sym(m, 0).bracket(&EpsExpr::sym(4, 0).bracket(&EpsExpr::sym(r, 0)));
            e.add_scaled(&b, &c);
        }
    }
    e
}

/// The closed formula for σ_w^{{2}} through ε-degree `max`.
pub fn sigma_depth2_closed(w: usize, max: usize) -> EpsExpr {
    let wi = w as i64;
    let mut e = EpsExpr::zero();
    let keep = |x: &EpsExpr| {
        let mut y = EpsExpr::zero();
        for n in x.degrees() {
            if n <= max {
                y.add_scaled(&x.degree_part(n), &Q::one());
            }
        }
        y
    };
    for d in 3..=wi - 2 {
        let den = bf((wi - d + 2) as usize);
        if den.is_zero() {
            continue;
        }
        for k in d + 1..=wi - 1 {
            if k % 2 == 1 {
                continue;
            }
            let c = &(&(&bf((d - 1) as usize) * &bf((k - d + 1) as usize)) * &bf((wi - k + 1) as usize)) / &den;
            if c.is_zero() {
                continue;
            }
            let s = s_proj(d, &eps(k as usize), &eps((wi - k + d) as usize));
            e.add_scaled(&keep(&s), &(&c * &Q::new(-1, 2)));
        }
    }
    for d in 5..=wi {
        let c = bf((d - 1) as usize);
        if !c.is_zero() {
            e.add_scaled(&keep(&s_proj(d, &eps((d - 1) as usize), &eps(w + 1))), &-c);
        }
    }
    let s = s_proj(wi + 2, &eps(w + 1), &eps(w + 1));
    e.add_scaled(&keep(&s), &(&bf(w + 1) * &Q::new(-1, 2)));
    for k in (w + 3..=max.saturating_sub(w + 1)).filter(|k| k % 2 == 0) {
        for j in 0..=w - 2 {
            let c = &Q::one() / &(&(&binom(k as u64 - 2, j as u64) * &factorial(j as u64)) * &factorial((w - 2 - j) as u64));
            let c = if j % 2 == 0 { c } else { -c };
            let b = EpsExpr::sym(w + 1, w - 2 - j).bracket(&EpsExpr::sym(k, j));
            e.add_scaled(&b, &(&c * &bf(k)));
        }
    }
    e
}

/// [z_w, ε_k]^{{2}} = (BF_{w+k−1}/BF_k) t^{w+1}(ε_{w+1}, ε_{w+k−1}).
pub fn zw_bracket_depth2(w: usize, k: usize) -> EpsExpr {
    let t = t_proj(w as i64 + 1, &eps(w + 1), &eps(w + k - 1));
    t.expr.scale(&(&bf(w + k - 1) / &bf(k)))
}

/// The closed formula for [z₃, ε_k]^{{3}}; may contain ε₂, which is central.
pub fn z3_bracket_depth3(k: usize) -> EpsExpr {
    let ki = k as i64;
    let q = |n: i64, d: i64| Q::new(n, d);
    let mut e = EpsExpr::zero();
    let pre = &(&(&Q::int(3) * &bf(4)) * &bf(k - 2)) / &bf(k);
    let a = t_proj(2, &eps(4), &t_proj(3, &eps(4), &eps(k - 2)));
    let b = t_proj(3, &eps(4), &t_proj(2, &eps(4), &eps(k - 2)));
    e.add_scaled(&a.expr, &(&pre * &q(-(ki - 3), ki - 1)));
    e.add_scaled(&b.expr, &(&pre * &q(ki - 2, ki)));
    let outer = &Q::one() / &(&Q::int(ki - 1) * &bf(k));
    for l in (6..=ki - 4).step_by(2) {
        let c = &(&(&Q::int(l - 1) * &bf(l as usize)) * &bf((ki + 2 - l) as usize)) * &outer;
        let r = eps((ki + 2 - l) as usize);
        let a = t_proj(2, &eps(l as usize), &t_proj(3, &eps(4), &r));
        let b = t_proj(3, &eps(l as usize), &t_proj(2, &eps(4), &r));
        e.add_scaled(&a.expr, &(&c * &q(-2 * (ki - l + 1), ki - l + 2)));
        e.add_scaled(&b.expr, &(&c * &q(l - 2, ki)));
    }
    e
}
