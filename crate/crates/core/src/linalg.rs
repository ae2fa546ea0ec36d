//! Exact linear algebra over Q.
//!
//! Large systems are echelonized modulo word-size primes, lifted by CRT and
//! rational reconstruction, and then checked exactly over Q. Small systems use
//! plain rational Gauss-Jordan elimination, which also serves as an
//! independent route in tests.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::q::Q;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Q)>;

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut nt) = (0i64, 1i64);
    let (mut r, mut nr) = (p as i64, (a % p) as i64);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i64) as u64
}

/// Primes just below 2^26, descending. Products of two residues stay below
/// 2^52, so thousands of row updates can be accumulated before reducing.
pub fn primes() -> &'static [u64] {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| {
        let mut v = Vec::new();
        let mut n = (1u64 << 26) - 1;
        while v.len() < 400 {
            if is_prime(n) {
                v.push(n);
            }
            n -= 2;
        }
        v
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

const LAZY: u32 = 2000;

/// Row echelon form over F_p built incrementally; pivot = first nonzero column.
pub struct ModEchelon {
    pub p: u64,
    pub ncols: usize,
    rows: Vec<Vec<u64>>,
    pivot_col: Vec<usize>,
    pivot_of: Vec<Option<usize>>,
}

impl ModEchelon {
    pub fn new(p: u64, ncols: usize) -> Self {
        ModEchelon { p, ncols, rows: Vec::new(), pivot_col: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce and insert; returns whether the row was independent.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let p = self.p;
        let n = self.ncols;
        let mut pending = 0u32;
        let mut col = 0;
        while col < n {
            let v = row[col] % p;
            row[col] = v;
            if v != 0 {
                match self.pivot_of[col] {
                    Some(ri) => {
                        let c = p - v;
                        let pr = &self.rows[ri];
                        for k in col..n {
                            row[k] += c * pr[k];
                        }
                        pending += 1;
                        if pending == LAZY {
                            for x in row[col..].iter_mut() {
                                *x %= p;
                            }
                            pending = 0;
                        }
                    }
                    None => {
                        for x in row[col..].iter_mut() {
                            *x %= p;
                        }
                        let inv = inv_mod(v, p);
                        for x in row[col..].iter_mut() {
                            *x = *x * inv % p;
                        }
                        self.pivot_of[col] = Some(self.rows.len());
                        self.pivot_col.push(col);
                        self.rows.push(row);
                        return true;
                    }
                }
            }
            col += 1;
        }
        false
    }

    /// Reduced row echelon form: (pivot column, dense row) sorted by pivot.
    /// Only free columns are kept up to date; pivot entries other than the
    /// row's own are implicitly zero.
    pub fn into_rref(mut self) -> Vec<(usize, Vec<u64>)> {
        let p = self.p;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivot_col[i]);
        let free: Vec<usize> = (0..self.ncols).filter(|&c| self.pivot_of[c].is_none()).collect();
        for oi in (0..order.len()).rev() {
            let i = order[oi];
            let c = self.pivot_col[i];
            let start = free.partition_point(|&f| f < c);
            let src: Vec<(usize, u64)> =
                free[start..].iter().map(|&f| (f, self.rows[i][f])).filter(|e| e.1 != 0).collect();
            for &j in &order[..oi] {
                let r = &mut self.rows[j];
                let v = r[c] % p;
                r[c] = 0;
                if v != 0 {
                    let f = p - v;
                    for &(k, s) in &src {
                        r[k] = (r[k] + f * s) % p;
                    }
                }
            }
        }
        order.into_iter().map(|i| (self.pivot_col[i], std::mem::take(&mut self.rows[i]))).collect()
    }
}

fn dense_mod(row: &SparseRow, ncols: usize, p: u64) -> Option<Vec<u64>> {
    let mut d = vec![0u64; ncols];
    for (c, q) in row {
        d[*c] = q.mod_p(p)?;
    }
    Some(d)
}

/// Rational reconstruction of `a mod m` with |num|, den ≤ sqrt(m/2).
pub fn rat_recon(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !(r1.clone().gcd(&t1)).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Incremental CRT accumulator for a vector of residues.
struct Crt {
    m: BigInt,
    vals: Vec<BigInt>,
}

impl Crt {
    fn new(n: usize) -> Self {
        Crt { m: BigInt::one(), vals: vec![BigInt::zero(); n] }
    }

    fn add(&mut self, p: u64, res: &[u64]) {
        let pb = BigInt::from(p);
        let minv = {
            let mm: u64 = (&self.m % &pb).try_into().unwrap();
            inv_mod(mm, p)
        };
        for (v, &r) in self.vals.iter_mut().zip(res) {
            let vm: u64 = (&*v % &pb).try_into().unwrap();
            let delta = ((r + p - vm) % p) * minv % p;
            if delta != 0 {
                *v += &self.m * BigInt::from(delta);
            }
        }
        self.m *= pb;
    }

    fn reconstruct(&self) -> Option<Vec<Q>> {
        self.vals.iter().map(|v| rat_recon(v, &self.m).map(Q::from_big)).collect()
    }
}

/// Exact reduced row echelon form of a row space.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    /// rows[i] has 1 at pivots[i] and its remaining entries only on free columns
    pub rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ncols];
        for &c in &self.pivots {
            is_piv[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_piv[c]).collect()
    }

    /// Remainder of `row` after subtracting its pivot components.
    pub fn reduce(&self, row: &SparseRow) -> SparseRow {
        let mut dense: Vec<Q> = vec![Q::zero(); self.ncols];
        for (c, q) in row {
            dense[*c] += q;
        }
        for (i, &pc) in self.pivots.iter().enumerate() {
            if dense[pc].is_zero() {
                continue;
            }
            let f = dense[pc].clone();
            for (c, q) in &self.rows[i] {
                dense[*c] -= &(&f * q);
            }
        }
        dense.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect()
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("ran out of primes during reconstruction")]
    NoPrimes,
    #[error("inconsistent linear system")]
    Inconsistent,
}

/// Row space RREF via multi-modular elimination, proven exactly.
///
/// Correctness: the rank mod p never exceeds the rank over Q, and every input
/// row is checked to lie in the span of the reconstructed rows.
pub fn rref_multimodular(rows: &[SparseRow], ncols: usize) -> Result<Rref, LinalgError> {
    let ps = primes();
    let mut pi = 0;
    // first prime: all rows, record independent ones
    let (indep, pivots, first) = loop {
        let p = *ps.get(pi).ok_or(LinalgError::NoPrimes)?;
        pi += 1;
        let mut ech = ModEchelon::new(p, ncols);
        let mut indep = Vec::new();
        let mut ok = true;
        for (i, r) in rows.iter().enumerate() {
            match dense_mod(r, ncols, p) {
                Some(d) => {
                    if ech.insert(d) {
                        indep.push(i);
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let rref = ech.into_rref();
        let pivots: Vec<usize> = rref.iter().map(|(c, _)| *c).collect();
        break (indep, pivots, (p, rref));
    };
    if pivots.is_empty() {
        return Ok(Rref { ncols, pivots, rows: Vec::new() });
    }
    let mut is_piv = vec![false; ncols];
    for &c in &pivots {
        is_piv[c] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_piv[c]).collect();
    let nent = pivots.len() * free.len();
    let extract = |rr: &[(usize, Vec<u64>)]| -> Vec<u64> {
        let mut v = Vec::with_capacity(nent);
        for (_, r) in rr {
            for &f in &free {
                v.push(r[f]);
            }
        }
        v
    };
    let mut crt = Crt::new(nent);
    crt.add(first.0, &extract(&first.1));
    let mut last: Option<Vec<Q>> = None;
    loop {
        if let Some(vals) = crt.reconstruct() {
            if last.as_ref() == Some(&vals) {
                let out = assemble(ncols, &pivots, &free, &vals);
                if rows.iter().all(|r| out.contains(r)) {
                    return Ok(out);
                }
            }
            last = Some(vals);
        }
        let p = *ps.get(pi).ok_or(LinalgError::NoPrimes)?;
        pi += 1;
        let mut ech = ModEchelon::new(p, ncols);
        let mut good = true;
        for &i in &indep {
            match dense_mod(&rows[i], ncols, p) {
                Some(d) => {
                    if !ech.insert(d) {
                        good = false;
                        break;
                    }
                }
                None => {
                    good = false;
                    break;
                }
            }
        }
        if !good {
            continue;
        }
        let rr = ech.into_rref();
        if rr.iter().map(|(c, _)| *c).ne(pivots.iter().copied()) {
            continue;
        }
        crt.add(p, &extract(&rr));
    }
}

fn assemble(ncols: usize, pivots: &[usize], free: &[usize], vals: &[Q]) -> Rref {
    let nf = free.len();
    let rows = pivots
        .iter()
        .enumerate()
        .map(|(i, &pc)| {
            let mut r: SparseRow = vec![(pc, Q::one())];
            for (j, &f) in free.iter().enumerate() {
                let v = &vals[i * nf + j];
                if !v.is_zero() {
                    r.push((f, v.clone()));
                }
            }
            r.sort_by_key(|e| e.0);
            r
        })
        .collect();
    Rref { ncols, pivots: pivots.to_vec(), rows }
}

/// Rational Gauss-Jordan on dense rows.
pub fn rref_exact(rows: &[SparseRow], ncols: usize) -> Rref {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![Q::zero(); ncols];
            for (c, q) in r {
                d[*c] += q;
            }
            d
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for x in m[rank][col..].iter_mut() {
            *x = &*x * &inv;
        }
        let piv = m[rank].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == rank || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for k in col..ncols {
                if !piv[k].is_zero() {
                    r[k] -= &(&f * &piv[k]);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    let rows = m.into_iter().map(|d| d.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect()).collect();
    Rref { ncols, pivots, rows }
}

/// Solve `Σ_j c_j col_j = rhs`; free unknowns (those not leftmost-independent)
/// are set to zero. Columns are sparse vectors over `nrows` equations.
pub fn solve_columns(cols: &[SparseRow], rhs: &SparseRow, nrows: usize) -> Result<Vec<Q>, LinalgError> {
    let m = cols.len();
    let mut eq: Vec<SparseRow> = vec![Vec::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for (i, q) in c {
            eq[*i].push((j, q.clone()));
        }
    }
    for (i, q) in rhs {
        eq[*i].push((m, q.clone()));
    }
    let eq: Vec<SparseRow> = eq.into_iter().filter(|r| !r.is_empty()).collect();
    let rref = if m <= 40 && eq.len() <= 400 { rref_exact(&eq, m + 1) } else { rref_multimodular(&eq, m + 1)? };
    if rref.pivots.last() == Some(&m) {
        return Err(LinalgError::Inconsistent);
    }
    let mut sol = vec![Q::zero(); m];
    for (i, &pc) in rref.pivots.iter().enumerate() {
        if let Some((_, q)) = rref.rows[i].iter().find(|e| e.0 == m) {
            sol[pc] = q.clone();
        }
    }
    // independent exact check
    let mut acc = vec![Q::zero(); nrows];
    for (j, c) in cols.iter().enumerate() {
        if sol[j].is_zero() {
            continue;
        }
        for (i, q) in c {
            acc[*i] += &(&sol[j] * q);
        }
    }
    for (i, q) in rhs {
        acc[*i] -= q;
    }
    if acc.iter().any(|q| !q.is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    Ok(sol)
}

/// Rank of a dense matrix.
pub fn rank(a: &[Vec<Q>]) -> usize {
    let ncols = a.iter().map(|r| r.len()).max().unwrap_or(0);
    let rows: Vec<SparseRow> =
        a.iter().map(|r| r.iter().cloned().enumerate().filter(|(_, q)| !q.is_zero()).collect()).collect();
    rref_exact(&rows, ncols).rank()
}

/// Basis of the right null space of a dense matrix.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let rows: Vec<SparseRow> =
        a.iter().map(|r| r.iter().cloned().enumerate().filter(|(_, q)| !q.is_zero()).collect()).collect();
    let rref = rref_exact(&rows, ncols);
    let free = rref.free_columns();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (i, &pc) in rref.pivots.iter().enumerate() {
                if let Some((_, q)) = rref.rows[i].iter().find(|e| e.0 == f) {
                    v[pc] = -q;
                }
            }
            v
        })
        .collect()
}

/// Inverse of a square dense matrix, or `None` when singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let rows: Vec<SparseRow> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut s: SparseRow = r.iter().cloned().enumerate().filter(|(_, q)| !q.is_zero()).collect();
            s.push((n + i, Q::one()));
            s
        })
        .collect();
    let rref = rref_exact(&rows, 2 * n);
    if rref.rank() < n || rref.pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = vec![vec![Q::zero(); n]; n];
    for (i, row) in rref.rows.iter().enumerate() {
        for (c, q) in row {
            if *c >= n {
                inv[i][c - n] = q.clone();
            }
        }
    }
    Some(inv)
}

/// Solve a square nonsingular system exactly.
pub fn solve_square(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(a)?;
    Some(inv.iter().map(|r| r.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter().map(|r| r.iter().zip(v).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_rows(seed: u64, n: usize, m: usize, rank: usize) -> Vec<SparseRow> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis: Vec<Vec<Q>> =
            (0..rank).map(|_| (0..m).map(|_| Q::new(rng.gen_range(-5..6), rng.gen_range(1..4))).collect()).collect();
        (0..n)
            .map(|_| {
                let mut v = vec![Q::zero(); m];
                for b in &basis {
                    let c = Q::new(rng.gen_range(-3..4), rng.gen_range(1..3));
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += &(&c * y);
                    }
                }
                v.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect()
            })
            .collect()
    }

    #[test]
    fn modular_matches_exact() {
        for seed in 0..8 {
            let rows = random_rows(seed, 12, 9, 5);
            let a = rref_exact(&rows, 9);
            let b = rref_multimodular(&rows, 9).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn recon_roundtrip() {
        let m = BigInt::from(primes()[0]) * BigInt::from(primes()[1]);
        let x = BigRational::new(BigInt::from(-1234), BigInt::from(977));
        let dinv = {
            let d = BigInt::from(977);
            let e = d.extended_gcd(&m);
            e.x.mod_floor(&m)
        };
        let r = (x.numer() * dinv).mod_floor(&m);
        assert_eq!(rat_recon(&r, &m), Some(x));
    }

    #[test]
    fn solve_and_inverse() {
        let a = vec![vec![Q::int(2), Q::int(1)], vec![Q::int(1), Q::int(3)]];
        let x = solve_square(&a, &[Q::int(1), Q::int(2)]).unwrap();
        assert_eq!(x, vec![Q::new(1, 5), Q::new(3, 5)]);
        let ns = nullspace(&[vec![Q::int(1), Q::int(1)]], 2);
        assert_eq!(ns, vec![vec![Q::int(-1), Q::int(1)]]);
    }
}
