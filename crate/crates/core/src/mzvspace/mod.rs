//! The formal MZV quotient FZ_w, built weight by weight from the regularized
//! double shuffle relations and products of lower-weight relations.

pub mod cache;
pub mod regularize;

use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;
use sha2::{Digest, Sha256};

pub use regularize::{shuffle_regularize, stuffle_regularize};

use crate::freealg::word::{all_words, convergent_index, convergent_words};
use crate::freealg::{stuffle, Alphabet, Series, Word, Y};
use crate::linalg::{self, Rref, SparseRow};
use crate::q::Q;

const A: Alphabet = Alphabet::XY;

/// Which stuffle relations generate the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Family {
    /// all pairs of y-terminated words
    #[serde(rename = "full")]
    Full,
    /// convergent pairs plus (y, convergent)
    #[serde(rename = "hoffman")]
    Hoffman,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::Hoffman => "hoffman",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MzvError {
    #[error("weight {0} exceeds the configured cap {1}")]
    Cap(usize, usize),
    #[error("weight must be at least 2")]
    Small,
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error("cache: {0}")]
    Cache(String),
}

/// Reduction data of FZ_w.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightBasis {
    pub weight: usize,
    pub family: Family,
    /// basis words (convergent), increasing
    pub basis: Vec<Word>,
    /// coordinates of every convergent word, indexed by `convergent_index`
    coords: Vec<Vec<Q>>,
    /// sha256 of the generator rows
    pub relation_hash: String,
}

impl WeightBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.coords.len() - self.basis.len()
    }

    pub fn coords_of_convergent(&self, w: Word) -> &[Q] {
        &self.coords[convergent_index(w)]
    }

    /// Coordinates of a combination of convergent words.
    pub fn reduce_convergent(&self, f: &Series) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (w, q) in f.iter() {
            debug_assert_eq!(w.len(), self.weight);
            for (x, c) in v.iter_mut().zip(self.coords_of_convergent(*w)) {
                if !c.is_zero() {
                    *x += &(q * c);
                }
            }
        }
        v
    }

    /// Coordinates of Z(w) for any word of this weight.
    pub fn reduce_word(&self, w: Word) -> Vec<Q> {
        self.reduce_convergent(&shuffle_regularize(w))
    }

    /// Z-map followed by reduction (the homogeneous part of weight w is used).
    pub fn reduce(&self, f: &Series) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (w, q) in f.iter() {
            if w.len() != self.weight {
                continue;
            }
            let r = if w.is_convergent() { self.coords_of_convergent(*w).to_vec() } else { self.reduce_word(*w) };
            for (x, c) in v.iter_mut().zip(&r) {
                *x += &(q * c);
            }
        }
        v
    }

    /// Echelonized relation rows: c − Σ_j coords(c)_j b_j for every non-basis convergent word c.
    pub fn relations(&self) -> Vec<Series> {
        convergent_words(self.weight)
            .filter(|c| self.basis.binary_search(c).is_err())
            .map(|c| {
                let mut s = Series::word(A, c);
                for (b, q) in self.basis.iter().zip(self.coords_of_convergent(c)) {
                    s.add_term(*b, -q);
                }
                s
            })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// A linear form on FZ_w as the dual polynomial Σ_u φ(Z(u)) u.
    pub fn dual_polynomial(&self, phi: &[Q]) -> Series {
        let mut out = Series::zero(A);
        for u in all_words(self.weight) {
            let r = self.reduce_word(u);
            let c: Q = r.iter().zip(phi).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum();
            out.add_term(u, c);
        }
        out
    }

    /// Polynomials P with ⟨ξ,P⟩ = 0 for every relation and every ξ in `span`.
    pub fn annihilator(&self, span: &[Vec<Q>]) -> Vec<Series> {
        let forms = if span.is_empty() {
            (0..self.dim()).map(|i| self.basis_vector(i)).collect()
        } else {
            linalg::nullspace(span, self.dim())
        };
        forms.iter().map(|phi| self.dual_polynomial(phi)).collect()
    }
}

fn series_row(f: &Series) -> SparseRow {
    let mut r: SparseRow = f.iter().map(|(w, q)| (convergent_index(*w), q.clone())).collect();
    r.sort_by_key(|e| e.0);
    r
}

fn y_terminated(n: usize) -> Vec<Word> {
    all_words(n).filter(|w| w.last() == Some(Y)).collect()
}

/// Regularized stuffle relations Z_*(u) Z_*(v) − Z_*(u ∗ v) of weight w.
pub fn stuffle_generators(w: usize, family: Family) -> Vec<Series> {
    let mut out = Vec::new();
    for i in 1..=w / 2 {
        let us = y_terminated(i);
        let vs = y_terminated(w - i);
        for u in &us {
            let u_ok = u.is_convergent() || *u == Word::letter(Y);
            if family == Family::Hoffman && !u_ok {
                continue;
            }
            for v in &vs {
                if i == w - i && v < u {
                    continue;
                }
                if family == Family::Hoffman && !v.is_convergent() {
                    continue;
                }
                let zu = stuffle_regularize(*u).unwrap();
                let zv = stuffle_regularize(*v).unwrap();
                let mut rel = zu.shuffle(&zv);
                let st = stuffle(A, *u, *v).unwrap();
                for (x, q) in st.iter() {
                    rel.add_scaled(&stuffle_regularize(*x).unwrap(), &-q);
                }
                if !rel.is_zero() {
                    out.push(rel);
                }
            }
        }
    }
    out
}

/// Lower-weight relations multiplied by convergent words.
pub fn product_generators(w: usize, family: Family) -> Result<Vec<Series>, MzvError> {
    let mut out = Vec::new();
    for wl in 2..=w.saturating_sub(2) {
        let low = weight_basis_with(wl, family)?;
        let rels = low.relations();
        for c in convergent_words(w - wl) {
            let cs = Series::word(A, c);
            for r in &rels {
                let p = r.shuffle(&cs);
                if !p.is_zero() {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

/// All generators of the weight-w slice of the ideal, as combinations of
/// convergent words (divergent symbols are eliminated by regularization).
pub fn ideal_generators(w: usize, family: Family) -> Result<Vec<Series>, MzvError> {
    let mut g = stuffle_generators(w, family);
    g.extend(product_generators(w, family)?);
    Ok(g)
}

fn hash_rows(rows: &[SparseRow]) -> String {
    let mut h = Sha256::new();
    for r in rows {
        for (c, q) in r {
            h.update(format!("{}:{};", c, q).as_bytes());
        }
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

fn from_rref(w: usize, family: Family, rref: &Rref, hash: String) -> WeightBasis {
    let ncols = 1usize << (w - 2);
    let free = rref.free_columns();
    let basis: Vec<Word> = free.iter().map(|&i| Word::from_bits(((i as u64) << 1) | 1, w)).collect();
    let pos: FxHashMap<usize, usize> = free.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    let mut coords = vec![vec![Q::zero(); basis.len()]; ncols];
    for (j, &c) in free.iter().enumerate() {
        coords[c][j] = Q::one();
    }
    for (i, &pc) in rref.pivots.iter().enumerate() {
        for (c, q) in &rref.rows[i] {
            if *c != pc {
                coords[pc][pos[c]] = -q;
            }
        }
    }
    WeightBasis { weight: w, family, basis, coords, relation_hash: hash }
}

/// Build FZ_w by multi-modular elimination with exact verification.
pub fn build_weight_basis(w: usize, family: Family) -> Result<WeightBasis, MzvError> {
    if w < 2 {
        return Err(MzvError::Small);
    }
    let rows: Vec<SparseRow> = ideal_generators(w, family)?.iter().map(series_row).collect();
    let hash = hash_rows(&rows);
    let rref = linalg::rref_multimodular(&rows, 1 << (w - 2))?;
    Ok(from_rref(w, family, &rref, hash))
}

/// Same quotient through rational Gauss-Jordan elimination; small weights only.
pub fn build_weight_basis_exact(w: usize, family: Family) -> Result<WeightBasis, MzvError> {
    if w < 2 {
        return Err(MzvError::Small);
    }
    let rows: Vec<SparseRow> = ideal_generators(w, family)?.iter().map(series_row).collect();
    let hash = hash_rows(&rows);
    let rref = linalg::rref_exact(&rows, 1 << (w - 2));
    Ok(from_rref(w, family, &rref, hash))
}

struct Settings {
    cap: usize,
    cache_dir: Option<PathBuf>,
}

fn settings() -> &'static Mutex<Settings> {
    static S: OnceLock<Mutex<Settings>> = OnceLock::new();
    S.get_or_init(|| {
        let cache_dir = std::env::var_os("ZETAGEN_CACHE_DIR").map(PathBuf::from);
        Mutex::new(Settings { cap: 12, cache_dir })
    })
}

pub fn set_weight_cap(cap: usize) {
    settings().lock().unwrap().cap = cap;
}

pub fn weight_cap() -> usize {
    settings().lock().unwrap().cap
}

pub fn set_cache_dir(dir: Option<PathBuf>) {
    settings().lock().unwrap().cache_dir = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    settings().lock().unwrap().cache_dir.clone()
}

type Cell = Arc<OnceLock<Result<Arc<WeightBasis>, String>>>;

fn registry() -> &'static Mutex<FxHashMap<(usize, Family), Cell>> {
    static R: OnceLock<Mutex<FxHashMap<(usize, Family), Cell>>> = OnceLock::new();
    R.get_or_init(|| Mutex::new(FxHashMap::default()))
}

/// Memoized (and optionally disk-cached) weight basis.
pub fn weight_basis_with(w: usize, family: Family) -> Result<Arc<WeightBasis>, MzvError> {
    if w < 2 {
        return Err(MzvError::Small);
    }
    let cap = weight_cap();
    if w > cap {
        return Err(MzvError::Cap(w, cap));
    }
    let cell = registry().lock().unwrap().entry((w, family)).or_default().clone();
    let r = cell.get_or_init(|| {
        if let Some(dir) = cache_dir() {
            if let Ok(b) = cache::load(&dir, w, family) {
                return Ok(Arc::new(b));
            }
        }
        let b = build_weight_basis(w, family).map_err(|e| e.to_string())?;
        if let Some(dir) = cache_dir() {
            let _ = cache::store(&dir, &b);
        }
        Ok(Arc::new(b))
    });
    r.clone().map_err(MzvError::Cache)
}

pub fn weight_basis(w: usize) -> Result<Arc<WeightBasis>, MzvError> {
    weight_basis_with(w, Family::Full)
}

/// Coordinates of a Z-map image in the weight basis of its degree.
pub fn zmap_reduce(f: &Series) -> Result<Vec<Q>, MzvError> {
    let w = f.homogeneous_degree().ok_or(MzvError::Small)?;
    Ok(weight_basis(w)?.reduce(f))
}

/// Span of reduced products of lower-weight basis elements (hat-R_w), as an
/// echelonized list of coordinate vectors.
pub fn reducible_span(w: usize) -> Result<Vec<Vec<Q>>, MzvError> {
    let b = weight_basis(w)?;
    let mut rows: Vec<SparseRow> = Vec::new();
    for w1 in 2..=w / 2 {
        let w2 = w - w1;
        if w2 < 2 {
            continue;
        }
        let b1 = weight_basis(w1)?;
        let b2 = weight_basis(w2)?;
        for u in &b1.basis {
            for v in &b2.basis {
                let p = crate::freealg::shuffle(A, *u, *v);
                let c = b.reduce_convergent(&p);
                rows.push(c.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect());
            }
        }
    }
    let rref = linalg::rref_exact(&rows, b.dim());
    Ok(rref
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![Q::zero(); b.dim()];
            for (c, q) in r {
                v[*c] = q.clone();
            }
            v
        })
        .collect())
}

type ProductTable = Arc<Vec<Vec<Vec<Q>>>>;

fn product_table(w1: usize, w2: usize) -> Result<ProductTable, MzvError> {
    static M: OnceLock<crate::memo::Memo<(usize, usize), Result<ProductTable, String>>> = OnceLock::new();
    let memo = M.get_or_init(crate::memo::Memo::new);
    memo.get_or_init(&(w1, w2), || {
        let run = || -> Result<ProductTable, MzvError> {
            let b1 = weight_basis(w1)?;
            let b2 = weight_basis(w2)?;
            let b = weight_basis(w1 + w2)?;
            Ok(Arc::new(
                b1.basis
                    .iter()
                    .map(|u| b2.basis.iter().map(|v| b.reduce_convergent(&crate::freealg::shuffle(A, *u, *v))).collect())
                    .collect(),
            ))
        };
        run().map_err(|e| e.to_string())
    })
    .map_err(MzvError::Cache)
}

/// Product of two elements given by weight-basis coordinates.
pub fn multiply(w1: usize, a: &[Q], w2: usize, b: &[Q]) -> Result<Vec<Q>, MzvError> {
    let t = product_table(w1, w2)?;
    let d = weight_basis(w1 + w2)?.dim();
    let mut out = vec![Q::zero(); d];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let c = x * y;
            for (o, r) in out.iter_mut().zip(&t[i][j]) {
                if !r.is_zero() {
                    *o += &(&c * r);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_series;

    #[test]
    fn small_dimensions() {
        let dims: Vec<usize> = (2..=8).map(|w| weight_basis(w).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn weight_three_basis_and_yxy() {
        let b = weight_basis(3).unwrap();
        assert_eq!(b.basis, vec![Word::parse("xyy").unwrap().0]);
        assert_eq!(b.reduce_word(Word::parse("yxy").unwrap().0), vec![Q::int(-2)]);
        assert_eq!(b.reduce_word(Word::parse("xxy").unwrap().0), vec![Q::int(1)]);
    }

    #[test]
    fn exact_route_agrees() {
        for w in 2..=7 {
            let a = build_weight_basis(w, Family::Full).unwrap();
            let b = build_weight_basis_exact(w, Family::Full).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn generators_vanish() {
        for w in 2..=7 {
            let b = weight_basis(w).unwrap();
            for g in ideal_generators(w, Family::Full).unwrap() {
                assert!(b.reduce_convergent(&g).iter().all(|q| q.is_zero()));
            }
        }
    }

    #[test]
    fn stuffle_pair_example() {
        // (u,v) = (xy,xy) contributes 4xxyy + 2xyxy − 2xyxy − xxxy
        let g = stuffle_generators(4, Family::Full);
        let want = parse_series("4 xxyy - xxxy", A).unwrap();
        assert!(g.contains(&want));
    }

    #[test]
    fn annihilator_weight_two() {
        let b = weight_basis(2).unwrap();
        let p = b.annihilator(&[]);
        assert_eq!(p.len(), 1);
        let want = parse_series("xy - yx", A).unwrap();
        assert_eq!(p[0], want);
    }
}
