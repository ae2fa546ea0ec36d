use zetagen::genusone::{self, eps0, eps0_vee, EpsExpr};
use zetagen::sl2recursion::*;
use zetagen::Q;

fn lw(k: usize) -> Lowest {
    Lowest::eps(k)
}

#[test]
fn projector_examples() {
    let t = t_proj(4, &lw(4), &lw(6));
    let want: EpsExpr = "1/12 [e4,e6^(2)] - 1/4 [e4^(1),e6^(1)] + 1/2 [e4^(2),e6]".parse().unwrap();
    assert_eq!(t.expr, want);
    assert_eq!(t.k, 4);
    for (d, k1, k2) in [(2, 4, 6), (3, 4, 6), (4, 6, 6), (3, 6, 8), (2, 4, 4)] {
        let t = t_proj(d, &lw(k1), &lw(k2));
        assert!(lower(&t.expr).is_zero());
        assert!(eps0_vee().bracket(&t.expr.eval().unwrap()).is_zero());
        let s = s_proj(d, &lw(k1), &lw(k2));
        assert!(raise(&s).is_zero());
    }
    for d in [2, 4, 6] {
        assert!(t_proj(d, &lw(6), &lw(6)).expr.is_zero());
    }
}

#[test]
fn n_series_coefficients() {
    let n = n_series(8);
    let e4 = genusone::epsilon(4).unwrap();
    assert_eq!(n.part(4), e4.scale(&Q::new(-1, 240)).truncate(8));
    let e6 = genusone::epsilon(6).unwrap();
    assert_eq!(n.part(6), e6.scale(&Q::new(1, 6048)).truncate(8));
    assert_eq!(n.part(0), eps0().scale(&Q::int(-1)).truncate(8));
}

#[test]
fn sigma3_exact_commutes_with_n() {
    let max = 17;
    let mut s = sigma3_exact(max).eval().unwrap().truncate(max);
    s.add_scaled(&genusone::z_w(3).unwrap(), &Q::one());
    assert!(n_commutator_defect(&s, max).is_empty());
    // and it is σ₃ itself
    assert!(s.agrees_with(&genusone::sigma(3, 16).unwrap()));
}

#[test]
fn recursion_w3_reproduces_exact_sigma3() {
    let hw = hw_from_sigma(3).unwrap();
    let r = recurse(3, 18, &hw).unwrap();
    assert_eq!(r.sigma_total(), sigma3_exact(18));
    assert_eq!(r.sigma[&1], "-1/2 e4^(2)".parse().unwrap());
    // [z3, ε12] at modular depth four is a single bracket
    let want: EpsExpr = "[e4,[e4,[e4,e6]]]".parse().unwrap();
    let c = &(&(&Q::int(9) * &bf(4)) * &bf(4)) * &bf(6);
    let c = &c / &(&Q::int(88) * &bf(12));
    assert_eq!(r.zbr[&(12, 4)], want.scale(&c));
}

fn check_recursion(w: usize, max: usize) {
    let hw = hw_from_sigma(w).unwrap();
    let r = recurse(w, max, &hw).unwrap();
    let ex = genusone::expansion(w, max.min(14)).unwrap();
    let direct = ex.total();
    let rec = r.sigma_total();
    for n in (w + 1..14.min(max + 1)).step_by(2) {
        assert_eq!(rec.degree_part(n), direct.degree_part(n), "w={} degree {}", w, n);
    }
    let s = genusone::sigma(w, max).unwrap();
    let d = r.sigma_derivation(max).unwrap();
    assert!(d.agrees_with(&s), "w={} as derivations", w);
    assert!(n_commutator_defect(&d, max).is_empty(), "[N, σ{}]", w);
    assert_eq!(r.sigma[&1], EpsExpr::sym(w + 1, w - 1).scale(&(&Q::int(-1) / &zetagen::q::factorial(w as u64 - 1))));
}

#[test]
fn recursion_w5() {
    check_recursion(5, 16);
}

#[test]
fn recursion_w7() {
    check_recursion(7, 14);
}

#[test]
fn depth_two_bracket_closed_form() {
    for w in [3, 5, 7] {
        let hw = hw_from_sigma(w).unwrap();
        let r = recurse(w, 2 * w + 8, &hw).unwrap();
        for k in [4, 6, 8] {
            assert_eq!(r.zbr[&(k, 2)], zw_bracket_depth2(w, k), "w={} k={}", w, k);
        }
    }
}

#[test]
fn depth_three_bracket_closed_form() {
    let hw = hw_from_sigma(3).unwrap();
    let r = recurse(3, 14, &hw).unwrap();
    for k in [4, 8] {
        let got = r.zbr.get(&(k, 3)).cloned().unwrap_or_default().eval().unwrap();
        let want = z3_bracket_depth3(k).eval().unwrap();
        assert_eq!(got, want, "k={}", k);
    }
    // k = 6, where ε_{k−2} = ε4: the depth-three part forced by the bracket
    // [z3, ε6] of derivations is half of the general formula
    let got = r.zbr[&(6, 3)].clone();
    assert_eq!(got, "-21/400 [e4,[e4,e4^(1)]]".parse().unwrap());
    let mut direct = genusone::z_w(3).unwrap().bracket(&genusone::epsilon(6).unwrap());
    direct.add_scaled(&zw_bracket_depth2(3, 6).eval().unwrap(), &Q::int(-1));
    assert_eq!(got.eval().unwrap(), direct);
    assert_eq!(z3_bracket_depth3(6), got.scale(&Q::int(2)));
}

#[test]
fn depth_two_sigma_closed_form() {
    for (w, max) in [(3, 16), (5, 16), (7, 16)] {
        let hw = hw_from_sigma(w).unwrap();
        let r = recurse(w, max, &hw).unwrap();
        let closed = sigma_depth2_closed(w, max);
        let got = r.sigma[&2].clone();
        for n in closed.degrees().into_iter().chain(got.degrees()) {
            if n < 14 {
                assert_eq!(got.degree_part(n), closed.degree_part(n), "w={} n={}", w, n);
            }
        }
        assert_eq!(got.eval().unwrap().truncate(max), closed.eval().unwrap().truncate(max), "w={}", w);
    }
}

#[test]
fn z_bracket_is_consistent_with_derivations() {
    // [z_w, ε_k] assembled over depths equals the bracket of derivations
    for (w, k) in [(3, 4), (3, 6), (5, 4)] {
        let hw = hw_from_sigma(w).unwrap();
        let r = recurse(w, 2 * w + k, &hw).unwrap();
        let z = genusone::z_w(w).unwrap();
        let direct = z.bracket(&genusone::epsilon(k).unwrap());
        assert_eq!(r.zbracket(k).eval().unwrap().truncate(direct.max), direct, "w={} k={}", w, k);
    }
}
