//! Seeded property suites: shuffle and stuffle laws, Lyndon counts, sl2
//! relations, push-invariance of τ_w(a) and the switch symmetry of z_w.

use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use zetagen::freealg::lyndon::{lyndon_words, witt};
use zetagen::freealg::{is_primitive, lyndon_bracket, Alphabet, Series, Word};
use zetagen::genusone::{eps0, eps0_vee, eps_kj, epsilon, h, tau, z_w};
use zetagen::q::{binom, factorial};
use zetagen::Q;

fn config(seed: u64, cases: u32) -> ProptestConfig {
    ProptestConfig { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..ProptestConfig::default() }
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max).prop_map(|v| Word::from_letters(&v))
}

fn y_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..max).prop_map(|v| Word::from_letters(&v).append(1))
}

fn series(ws: &[Word], cs: &[i64]) -> Series {
    let mut s = Series::zero(Alphabet::XY);
    for (w, c) in ws.iter().zip(cs) {
        s.add_term(*w, Q::int(*c));
    }
    s
}

fn coefficient_sum(s: &Series) -> Q {
    s.iter().map(|(_, q)| q.clone()).sum()
}

proptest! {
    #![proptest_config(config(101, 64))]

    #[test]
    fn shuffle_laws(u in word(5), v in word(5), w in word(4)) {
        let (su, sv, sw) = (Series::word(Alphabet::XY, u), Series::word(Alphabet::XY, v), Series::word(Alphabet::XY, w));
        prop_assert_eq!(su.shuffle(&sv), sv.shuffle(&su));
        prop_assert_eq!(su.shuffle(&sv).shuffle(&sw), su.shuffle(&sv.shuffle(&sw)));
        prop_assert_eq!(su.shuffle(&Series::one(Alphabet::XY)), su.clone());
        let n = binom((u.len() + v.len()) as u64, u.len() as u64);
        prop_assert_eq!(coefficient_sum(&su.shuffle(&sv)), n);
    }

    #[test]
    fn stuffle_laws(u in y_word(5), v in y_word(5), w in y_word(4)) {
        let (su, sv, sw) = (Series::word(Alphabet::XY, u), Series::word(Alphabet::XY, v), Series::word(Alphabet::XY, w));
        prop_assert_eq!(su.stuffle(&sv), sv.stuffle(&su));
        prop_assert_eq!(su.stuffle(&sv).stuffle(&sw), su.stuffle(&sv.stuffle(&sw)));
        // the top-depth part of a stuffle is the shuffle of the depth blocks
        let top = u.count(1) + v.count(1);
        let st = su.stuffle(&sv).filter(|x| x.count(1) == top);
        prop_assert_eq!(coefficient_sum(&st), binom(top as u64, u.count(1) as u64));
    }

    #[test]
    fn shuffle_is_bilinear(ws in prop::collection::vec(word(4), 1..4), cs in prop::collection::vec(-5i64..6, 3), v in word(4)) {
        let f = series(&ws, &cs);
        let sv = Series::word(Alphabet::XY, v);
        let mut termwise = Series::zero(Alphabet::XY);
        for (u, q) in f.iter() {
            termwise.add_scaled(&Series::word(Alphabet::XY, *u).shuffle(&sv), q);
        }
        prop_assert_eq!(f.shuffle(&sv), termwise);
    }
}

proptest! {
    #![proptest_config(config(202, 48))]

    #[test]
    fn lyndon_brackets_are_primitive(n in 1usize..=9, pick in any::<prop::sample::Index>()) {
        let ws = lyndon_words(n);
        let w = ws[pick.index(ws.len())];
        prop_assert!(is_primitive(&lyndon_bracket(w).unwrap()));
    }

    #[test]
    fn sl2_relations(half in 1usize..=5, jj in any::<prop::sample::Index>()) {
        let k = 2 * half;
        let j = jj.index(k - 1);
        let (e0, f, hh) = (eps0(), eps0_vee(), h());
        let e = eps_kj(k, j).unwrap();
        // degrees: a-degree k − j and b-degree j + 1 on the image of a
        prop_assert!(e.a().words().all(|u| u.count(0) == k - j && u.count(1) == j + 1));
        prop_assert_eq!(hh.bracket(&e), e.scale(&Q::int(2 + 2 * j as i64 - k as i64)));
        if j < k - 2 {
            prop_assert_eq!(e0.bracket(&e), (*eps_kj(k, j + 1).unwrap()).clone());
        } else {
            prop_assert!(e0.bracket(&e).is_zero());
        }
        if j == 0 {
            prop_assert!(f.bracket(&e).is_zero());
        } else {
            prop_assert_eq!(f.bracket(&e), eps_kj(k, j - 1).unwrap().scale(&Q::int((j * (k - 1 - j)) as i64)));
        }
        let c = -(&factorial(j as u64) / &factorial((k - 2 - j) as u64));
        prop_assert_eq!(e.switched(), eps_kj(k, k - 2 - j).unwrap().scale(&c));
        prop_assert!(e.in_der0());
    }
}

proptest! {
    #![proptest_config(config(303, 12))]

    #[test]
    fn tau_a_is_push_invariant(w in prop::sample::select(vec![3usize, 5, 7]), extra in 0usize..=3) {
        let n = w + 1 + 2 * extra;
        let t = tau(w, n).unwrap();
        prop_assert!(zetagen::genusone::tau::is_push_invariant(&t.a_part(n)));
    }
}

#[test]
fn lyndon_counts_match_witt() {
    for n in 1..=16 {
        assert_eq!(lyndon_words(n).len() as u64, witt(2, n), "n={}", n);
    }
}

#[test]
fn h_relations() {
    let (f, hh) = (eps0_vee(), h());
    assert_eq!(hh.bracket(&f), f.scale(&Q::int(-2)));
    assert_eq!(hh.bracket(&eps0()), eps0().scale(&Q::int(2)));
    assert_eq!(eps0().bracket(&f), hh);
    for k in (2..=10).step_by(2) {
        assert!(eps0().bracket(&eps_kj(k, k - 2).unwrap()).is_zero());
        assert!(f.bracket(&epsilon(k).unwrap()).is_zero());
    }
}

#[test]
fn z_switch_symmetry() {
    for w in [3, 5, 7] {
        let z = z_w(w).unwrap();
        assert_eq!(z.b(), -z.a().switch(), "w={}", w);
    }
}
