//! The acceptance checks, one group per criterion, run against the published
//! values in [`crate::reference`].

use std::error::Error;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::falphabet::{coaction, coaction_word, intertwines, rho, FElem, Tensor};
use crate::freealg::lyndon::{lyndon_words, witt};
use crate::freealg::{is_primitive, lyndon_bracket, parse_series, Alphabet, Series, Word};
use crate::genusone::{self, eps0, eps0_vee, eps_kj, epsilon, sigma, EpsExpr};
use crate::genuszero::expr::mzv_expr;
use crate::genuszero::{canonical_gw, gen_coords, ihara_bracket, ihara_derivation, phi_coefficient, Gen};
use crate::moulds::{cross_check_tw, invpal, pal, Frac, Mould, Poly};
use crate::mzvspace::{multiply, weight_basis};
use crate::q::{factorial, Q};
use crate::reference::{self, LyndonTerms};
use crate::sl2recursion::{hw_from_sigma, n_commutator_defect, recurse, sigma3_exact, z3_bracket_depth3, zw_bracket_depth2};

type R<T> = Result<T, Box<dyn Error>>;

/// Checks whose literal form is known to fail because the published value
/// contradicts other published values; the consistent value is checked
/// alongside. Listed as (criterion, check name).
pub const KNOWN_DISCREPANCIES: &[(usize, &str)] = &[
    (7, "σ3(b) degree 5 displayed sign"),
    (9, "[z3,ε6] depth 3 displayed value"),
];

#[derive(Clone, Debug)]
pub struct Options {
    /// include weights 10 and 11 in criteria 1 to 3
    pub slow: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { slow: false, seed: 2024 }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {} {} ({} checks, {:.1}s)", self.id, status, self.title, self.checks.len(), self.seconds)?;
        for c in self.failures() {
            let known = KNOWN_DISCREPANCIES.iter().any(|&(i, n)| i == self.id && n == c.name);
            write!(f, "\n    failed: {}{}", c.name, if known { " [known discrepancy]" } else { "" })?;
            if !c.note.is_empty() {
                write!(f, ": {}", c.note)?;
            }
        }
        Ok(())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn add(&mut self, name: impl Into<String>, r: R<bool>) {
        let (passed, note) = match r {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "values differ".to_string()),
            Err(e) => (false, e.to_string()),
        };
        self.0.push(Check { name: name.into(), passed, note });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, got: R<T>, want: R<T>) {
        let (passed, note) = match (got, want) {
            (Ok(g), Ok(w)) if g == w => (true, String::new()),
            (Ok(g), Ok(w)) => (false, format!("got {}, expected {}", clip(&g.to_string()), clip(&w.to_string()))),
            (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
        };
        self.0.push(Check { name: name.into(), passed, note });
    }
}

fn clip(s: &str) -> String {
    match s.char_indices().nth(120) {
        Some((i, _)) => format!("{}…", &s[..i]),
        None => s.to_string(),
    }
}

pub const TITLES: [&str; 12] = [
    "dimensions of FZ_w",
    "canonical generators g_w and Z(g_w)",
    "g_w equals the associator coefficient",
    "semi-canonical irreducible Z35",
    "Goncharov-Brown coaction",
    "f-alphabet map rho",
    "genus-one golden values",
    "N commutes with sigma_w",
    "closed formulas for [z_w, e_k]",
    "Pollack relations",
    "moulds",
    "property suites",
];

/// Run one criterion (1 to 12).
pub fn criterion(id: usize, opts: &Options) -> Criterion {
    let start = Instant::now();
    let mut c = Checks::new();
    let body = AssertUnwindSafe(|| match id {
        1 => dimensions(&mut c, opts),
        2 => generators(&mut c, opts),
        3 => cross_method(&mut c, opts),
        4 => irreducibles(&mut c, opts),
        5 => coactions(&mut c),
        6 => f_alphabet(&mut c),
        7 => golden(&mut c),
        8 => n_commutation(&mut c),
        9 => closed_formulas(&mut c),
        10 => pollack(&mut c),
        11 => moulds(&mut c, opts),
        12 => properties(&mut c, opts),
        _ => panic!("no criterion {}", id),
    });
    if let Err(p) = catch_unwind(body) {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        c.0.push(Check { name: "panic".into(), passed: false, note: msg });
    }
    Criterion { id, title: TITLES[id - 1], checks: c.0, seconds: start.elapsed().as_secs_f64() }
}

/// Run all criteria in order, reporting each as it finishes.
pub fn run(opts: &Options, mut report: impl FnMut(&Criterion)) -> Vec<Criterion> {
    (1..=12)
        .map(|id| {
            let c = criterion(id, opts);
            report(&c);
            c
        })
        .collect()
}

fn max_weight(opts: &Options) -> usize {
    if opts.slow {
        11
    } else {
        9
    }
}

pub fn lyndon_series(terms: LyndonTerms) -> R<Series> {
    let mut s = Series::zero(Alphabet::AB);
    for &(n, d, w) in terms {
        let (word, _) = Word::parse(w).ok_or_else(|| format!("bad word {}", w))?;
        s.add_scaled(&lyndon_bracket(word)?, &Q::new(n, d));
    }
    Ok(s)
}

fn dimensions(c: &mut Checks, opts: &Options) {
    for &(w, d) in reference::DIMENSIONS.iter().filter(|(w, _)| *w <= max_weight(opts)) {
        c.eq(format!("dim FZ_{}", w), weight_basis(w).map(|b| b.dim()).map_err(Into::into), Ok(d));
    }
}

fn generators(c: &mut Checks, opts: &Options) {
    for &(w, text) in reference::GW_POLY.iter().filter(|(w, _)| [2, 3, 5, 7].contains(w)) {
        let got = canonical_gw(w).map(|g| g.poly.clone()).map_err(Into::into);
        c.eq(format!("g{}", w), got, parse_series(text, Alphabet::XY).map_err(Into::into));
    }
    for w in 2..=max_weight(opts) {
        let got = canonical_gw(w).map(|g| g.z_coords.clone()).map_err(Into::into);
        let want = mzv_expr(reference::z_gw(w).unwrap()).map(|(_, z)| z).map_err(Into::into);
        c.add(format!("Z(g{})", w), got.and_then(|g| want.map(|w| g == w)));
    }
}

fn cross_method(c: &mut Checks, opts: &Options) {
    for w in 2..=max_weight(opts) {
        let got = canonical_gw(w).map(|g| g.poly.clone()).map_err(Into::into);
        c.eq(format!("g{} by both routes", w), got, phi_coefficient(w).map_err(Into::into));
    }
}

fn irreducibles(c: &mut Checks, opts: &Options) {
    let rel = |g: Vec<usize>, text: &str| -> R<bool> {
        let lhs = gen_coords(&Gen::Irr(g))?;
        let (_, rhs) = mzv_expr(text)?;
        Ok(*lhs == rhs)
    };
    c.add("Z35 relation", rel(vec![3, 5], reference::Z35_RELATION));
    if opts.slow {
        c.add("Z37 relation", rel(vec![3, 7], reference::Z37_RELATION));
    }
}

fn tensor(terms: &[(&str, &str, Q)]) -> R<Tensor> {
    let mut t = Tensor::default();
    for (a, b, q) in terms {
        let (wa, va) = if *a == "1" { (0, vec![Q::one()]) } else { mzv_expr(a)? };
        let (wb, vb) = if *b == "1" { (0, vec![Q::one()]) } else { mzv_expr(b)? };
        t.add_basis_outer(wa, &va, wb, &vb, q)?;
    }
    Ok(t.normalized())
}

fn coactions(c: &mut Checks) {
    let xxyxy = || -> R<bool> {
        let w = Word::parse("xxyxy").ok_or("bad word")?.0;
        let want = tensor(&[("1", "z(2,3)", Q::one()), ("z(2,3)", "1", Q::one()), ("z2", "z3", Q::int(3))])?;
        Ok(coaction_word(w)? == want)
    };
    c.add("coaction of xxyxy", xxyxy());
    let z35 = || -> R<bool> {
        let (_, v) = mzv_expr("z(3,5)")?;
        let want = tensor(&[("1", "z(3,5)", Q::one()), ("z(3,5)", "1", Q::one()), ("z3", "z5", Q::int(-5))])?;
        Ok(coaction(8, &v)? == want)
    };
    c.add("coaction of z(3,5)", z35());
}

fn f_alphabet(c: &mut Checks) {
    for &(x, want) in reference::RHO_VALUES.iter().filter(|(x, _)| ["Z35", "z(3,5)", "z3^2"].contains(x)) {
        let got = || -> R<FElem> {
            let (w, v) = mzv_expr(x)?;
            Ok(rho(w, &v)?)
        };
        c.eq(format!("rho({})", x), got(), want.parse::<FElem>().map_err(Into::into));
    }
    let shuffle_map = || -> R<bool> {
        for w1 in 2..=5 {
            for w2 in w1..=(10 - w1) {
                let (d1, d2) = (weight_basis(w1)?.dim(), weight_basis(w2)?.dim());
                for i in 0..d1 {
                    for j in 0..d2 {
                        let (a, b) = (unit(d1, i), unit(d2, j));
                        let ab = multiply(w1, &a, w2, &b)?;
                        if rho(w1 + w2, &ab)? != rho(w1, &a)?.shuffle(&rho(w2, &b)?) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    };
    c.add("rho respects products up to weight 10", shuffle_map());
    let intertwiner = || -> R<bool> {
        for w in 2..=10 {
            let d = weight_basis(w)?.dim();
            for i in 0..d {
                if !intertwines(w, &unit(d, i))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    c.add("rho intertwines the coactions up to weight 10", intertwiner());
}

fn unit(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

/// σ_w up to `max`: coefficients below degree 14, derivations from 14 on.
fn expansion_checks(c: &mut Checks, w: usize, max: usize) {
    let run = || -> R<Vec<(String, bool)>> {
        let displayed: EpsExpr = reference::sigma_expansion(w).ok_or("no display")?.parse()?;
        let ex = genusone::expansion(w, max)?;
        let s = sigma(w, max)?;
        let mut out = Vec::new();
        for n in (w + 1..=max).step_by(2) {
            let want = displayed.degree_part(n);
            if n < 14 {
                let got = ex.parts.get(&n).cloned().unwrap_or_default();
                out.push((format!("σ{} degree {} coefficients", w, n), got == want));
            } else if displayed.degrees().contains(&n) {
                let mut d = want.eval()?.truncate(max);
                if n == 2 * w {
                    d.add_scaled(&ex.zw, &Q::one());
                }
                out.push((format!("σ{} degree {} as a derivation", w, n), d.agrees_with(&s.part(n))));
            } else {
                // beyond the display: the computed ε-expansion against σ_w itself,
                // and for σ3 also against the closed formula
                let got = ex.parts.get(&n).cloned().unwrap_or_default();
                let mut ok = got.eval()?.truncate(max).agrees_with(&s.part(n));
                if w == 3 {
                    ok &= sigma3_exact(max).degree_part(n).eval()?.truncate(max).agrees_with(&s.part(n));
                }
                out.push((format!("σ{} degree {} expansion as a derivation", w, n), ok));
            }
        }
        Ok(out)
    };
    match run() {
        Ok(v) => {
            for (name, ok) in v {
                c.add(name, Ok(ok));
            }
        }
        Err(e) => c.add(format!("σ{} expansion", w), Err(e)),
    }
}

fn golden(c: &mut Checks) {
    let s3 = sigma(3, 6);
    let part = |f: &dyn Fn(&genusone::Derivation) -> Series| -> R<Series> {
        match &s3 {
            Ok(s) => Ok(f(s)),
            Err(e) => Err(e.to_string().into()),
        }
    };
    c.eq("σ3(a) degree 5", part(&|s| s.a_part(4)), lyndon_series(reference::SIGMA3_A5));
    c.eq("σ3(b) degree 5 displayed sign", part(&|s| s.b_part(4)), lyndon_series(reference::SIGMA3_B5).map(|x| -&x));
    c.eq("σ3(b) degree 5 forced by the a-image", part(&|s| s.b_part(4)), lyndon_series(reference::SIGMA3_B5));
    c.eq("σ3(a) degree 7", part(&|s| s.a_part(6)), lyndon_series(reference::Z3_A));
    // the display gives −[aababbb]…; the b-image at degree 7 equals z3(b)
    c.eq("σ3(b) degree 7", part(&|s| s.b_part(6)), lyndon_series(reference::Z3_B));
    let z = |w| genusone::z_w(w).map_err(Into::into);
    c.eq("z3(a)", z(3).map(|z| z.a()), lyndon_series(reference::Z3_A));
    c.eq("z3(b)", z(3).map(|z| z.b()), lyndon_series(reference::Z3_B));
    c.eq("z5(a)", z(5).map(|z| z.a()), lyndon_series(reference::Z5_A));
    for w in [3, 5, 7] {
        expansion_checks(c, w, 16);
    }
}

fn n_commutation(c: &mut Checks) {
    let exact = || -> R<bool> {
        let max = 17;
        let mut s = sigma3_exact(max).eval()?.truncate(max);
        s.add_scaled(&genusone::z_w(3)?, &Q::one());
        Ok(n_commutator_defect(&s, max).is_empty() && s.agrees_with(&*sigma(3, 16)?))
    };
    c.add("[N, σ3] = 0 through degree 17", exact());
    for (w, max) in [(3, 16), (5, 16)] {
        let rec = || -> R<bool> {
            let r = recurse(w, max, &hw_from_sigma(w)?)?;
            let d = r.sigma_derivation(max)?;
            Ok(n_commutator_defect(&d, max).is_empty() && d.agrees_with(&*sigma(w, max)?))
        };
        c.add(format!("recursion for σ{} commutes with N", w), rec());
    }
}

fn closed_formulas(c: &mut Checks) {
    for w in [3, 5, 7] {
        let r = hw_from_sigma(w).and_then(|hw| recurse(w, 2 * w + 8, &hw));
        for k in [4, 6, 8] {
            let got = match &r {
                Ok(r) => Ok(r.zbr.get(&(k, 2)).cloned().unwrap_or_default()),
                Err(e) => Err(e.to_string().into()),
            };
            c.eq(format!("[z{},ε{}] depth 2", w, k), got, Ok(zw_bracket_depth2(w, k)));
        }
    }
    let r = hw_from_sigma(3).and_then(|hw| recurse(3, 14, &hw));
    let depth3 = |k: usize| -> R<genusone::Derivation> {
        let r = r.as_ref().map_err(|e| e.to_string())?;
        Ok(r.zbr.get(&(k, 3)).cloned().unwrap_or_default().eval()?)
    };
    for k in [4, 8] {
        let want = z3_bracket_depth3(k).eval().map_err(Into::into);
        c.eq(format!("[z3,ε{}] depth 3", k), depth3(k), want);
    }
    let want = z3_bracket_depth3(6).eval().map_err(Into::into);
    c.eq("[z3,ε6] depth 3 displayed value", depth3(6), want);
    // the value forced by the bracket of derivations minus its depth-two part
    let forced = || -> R<genusone::Derivation> {
        let mut d = genusone::z_w(3)?.bracket(&epsilon(6)?);
        d.add_scaled(&zw_bracket_depth2(3, 6).eval()?, &Q::int(-1));
        Ok(d)
    };
    c.eq("[z3,ε6] depth 3 forced by [z3,ε6]", depth3(6), forced());
}

fn pollack(c: &mut Checks) {
    for (name, text) in [("degree 14", reference::POLLACK_14), ("degree 16", reference::POLLACK_16)] {
        let r = || -> R<bool> { Ok(text.parse::<EpsExpr>()?.eval()?.is_zero()) };
        c.add(format!("Pollack relation in {}", name), r());
    }
}

fn frac(num: Poly, den: &[&[i64]]) -> Frac {
    den.iter().fold(Frac::poly(num), |f, l| f.div_linear(l))
}

fn random_lie(rng: &mut ChaCha8Rng) -> Series {
    let mut out = Series::zero(Alphabet::XY);
    while out.is_zero() {
        for _ in 0..rng.gen_range(1..4) {
            let n = rng.gen_range(2..=5);
            let ws = lyndon_words(n);
            let w = ws[rng.gen_range(0..ws.len())];
            out.add_scaled(&lyndon_bracket(w).unwrap(), &Q::int(rng.gen_range(-3..=3)));
        }
        if rng.gen_bool(0.3) {
            out.add_scaled(&Series::letter(Alphabet::XY, 1), &Q::one());
        }
    }
    out
}

fn moulds(c: &mut Checks, opts: &Options) {
    let p = pal(2);
    c.eq("pal depth 1", Ok(p.part(1).clone()), Ok(frac(Poly::constant(Q::new(-1, 2)), &[&[1]])));
    let want = frac(Poly::linear(&[1, 2]).scale(&Q::new(1, 12)), &[&[1], &[0, 1], &[1, 1]]);
    c.eq("pal depth 2", Ok(p.part(2).clone()), Ok(want));
    let inv = invpal(2);
    c.eq("invpal depth 0", Ok(inv.part(0).clone()), Ok(Frac::constant(Q::one())));
    c.eq("invpal depth 1", Ok(inv.part(1).clone()), Ok(frac(Poly::constant(Q::new(1, 2)), &[&[1]])));
    let want = frac(Poly::linear(&[-1, 4]).scale(&Q::new(1, 12)), &[&[1], &[0, 1], &[1, 1]]);
    c.eq("invpal depth 2", Ok(inv.part(2).clone()), Ok(want));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut arit = || -> R<bool> {
        for _ in 0..50 {
            let (g, h) = (random_lie(&mut rng), random_lie(&mut rng));
            let (mg, mh) = (Mould::ma(&g, 8)?, Mould::ma(&h, 8)?);
            let want = Mould::ma(&ihara_derivation(&g, &h), 8)?.scale(&Q::int(-1));
            if mg.arit(&mh) != want || mg.ari(&mh) != Mould::ma(&ihara_bracket(&g, &h), 8)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    c.add("arit against the Ihara derivation on 50 random Lie pairs", arit());
    for w in [3, 5] {
        match cross_check_tw(w, 3) {
            Ok(r) => {
                let note = r.mismatch.as_ref().map(|(d, s)| format!("depth {}: {}", d, s)).unwrap_or_default();
                c.0.push(Check { name: format!("T{} key equality to depth 3", w), passed: r.mismatch.is_none(), note });
                c.add(format!("T{} bialternal and push-invariant", w), Ok(r.bialternal && r.push_invariant && r.even_parity));
                c.add(format!("T{} vanishes in depth 2", w), Ok(r.t.part(2).is_zero()));
                c.add(format!("T{}(u1) = u1^{}", w, w + 1), Ok(r.depth_one));
            }
            Err(e) => c.add(format!("T{} cross-check", w), Err(e.into())),
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::from_letters(&(0..n).map(|_| rng.gen_range(0..2u8)).collect::<Vec<_>>())
}

fn random_y_word(rng: &mut ChaCha8Rng, max: usize) -> Word {
    random_word(rng, max - 1).append(1)
}

fn properties(c: &mut Checks, opts: &Options) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let alpha = Alphabet::XY;
    let mut sh = true;
    let mut st = true;
    for _ in 0..40 {
        let (u, v, w) = (random_word(&mut rng, 4), random_word(&mut rng, 4), random_word(&mut rng, 3));
        let (su, sv, sw) = (Series::word(alpha, u), Series::word(alpha, v), Series::word(alpha, w));
        sh &= su.shuffle(&sv) == sv.shuffle(&su);
        sh &= su.shuffle(&sv).shuffle(&sw) == su.shuffle(&sv.shuffle(&sw));
        let (u, v, w) = (random_y_word(&mut rng, 4), random_y_word(&mut rng, 4), random_y_word(&mut rng, 3));
        let (su, sv, sw) = (Series::word(alpha, u), Series::word(alpha, v), Series::word(alpha, w));
        st &= su.stuffle(&sv) == sv.stuffle(&su);
        st &= su.stuffle(&sv).stuffle(&sw) == su.stuffle(&sv.stuffle(&sw));
    }
    c.add("shuffle commutative and associative", Ok(sh));
    c.add("stuffle commutative and associative", Ok(st));
    let lie = || -> R<bool> {
        for n in 1..=12 {
            if lyndon_words(n).len() as u64 != witt(2, n) {
                return Ok(false);
            }
        }
        for w in lyndon_words(7) {
            if !is_primitive(&lyndon_bracket(w)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    c.add("Lyndon words counted by Witt's formula", lie());
    let sl2 = || -> R<bool> {
        let (e0, f, h) = (eps0(), eps0_vee(), genusone::h());
        let mut ok = h.bracket(&f) == f.scale(&Q::int(-2));
        for k in (2..=10).step_by(2) {
            let ek = epsilon(k)?;
            ok &= f.bracket(&ek).is_zero();
            ok &= h.bracket(&ek) == ek.scale(&Q::int(2 - k as i64));
            ok &= e0.bracket(&*eps_kj(k, k - 2)?).is_zero();
            for j in 0..=k - 2 {
                let e = eps_kj(k, j)?;
                ok &= e.a().words().all(|u| u.count(0) == k - j && u.count(1) == j + 1);
                ok &= h.bracket(&e) == e.scale(&Q::int(2 + 2 * j as i64 - k as i64));
                if j > 0 {
                    ok &= f.bracket(&e) == eps_kj(k, j - 1)?.scale(&Q::int((j * (k - 1 - j)) as i64));
                }
                let c = -(&factorial(j as u64) / &factorial((k - 2 - j) as u64));
                ok &= e.switched() == eps_kj(k, k - 2 - j)?.scale(&c);
            }
        }
        Ok(ok)
    };
    c.add("sl2 relations for k ≤ 10", sl2());
    for w in [3, 5, 7] {
        let push = || -> R<bool> {
            let t = genusone::tau(w, 2 * w + 2)?;
            Ok(t.degrees().into_iter().all(|n| genusone::tau::is_push_invariant(&t.a_part(n))))
        };
        c.add(format!("τ{}(a) push-invariant in each degree", w), push());
        let switch = || -> R<bool> {
            let z = genusone::z_w(w)?;
            Ok(z.b() == -z.a().switch())
        };
        c.add(format!("z{}(b) = −θ z{}(a)", w, w), switch());
    }
}
