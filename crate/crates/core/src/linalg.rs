//! Dense linear algebra over `Z/n` (for arbitrary `n`) and over prime fields.
//!
//! The workhorse is [`snf_mod`], a Smith-style diagonalization of a matrix
//! over `Z/n` by invertible row and column operations, with optional transform
//! matrices. `Z/n` is not a domain, so elimination works on integer
//! representatives in `[0, n)` with extended-gcd 2x2 combinations; the ideal
//! generated by an entry in `Z/n` is `(gcd(entry, n))`, which is what the
//! reported invariant factors are.

use crate::numutil::{addmod, egcd, gcd, invmod, mulmod, submod};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl ModMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ModMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ModMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &ModMat, n: u64) -> ModMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = ModMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = addmod(out.get(i, j), mulmod(a, rhs.get(k, j), n), n);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64], n: u64) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = addmod(acc, mulmod(self.get(i, j), v[j], n), n);
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SnfFlags {
    pub p: bool,
    pub pinv: bool,
    pub q: bool,
    pub qinv: bool,
}

impl SnfFlags {
    pub fn all() -> Self {
        SnfFlags { p: true, pinv: true, q: true, qinv: true }
    }
}

/// `P * M * Q = D` over `Z/n` with `P`, `Q` invertible mod `n` and `D`
/// diagonal. `diag` holds the raw diagonal representatives; the canonical
/// invariant factor of slot `i` is [`SnfMod::factor_at`].
#[derive(Debug, Clone)]
pub struct SnfMod {
    pub modulus: u64,
    pub rows: usize,
    pub cols: usize,
    pub diag: Vec<u64>,
    pub p: Option<ModMat>,
    pub pinv: Option<ModMat>,
    pub q: Option<ModMat>,
    pub qinv: Option<ModMat>,
    pub carry: Option<Vec<u64>>,
}

impl SnfMod {
    /// `gcd(diag[i], n)`, extended with `n` past the stored diagonal
    /// (a slot with no pivot constrains nothing).
    pub fn factor_at(&self, i: usize) -> u64 {
        if i < self.diag.len() {
            let d = self.diag[i];
            if d == 0 {
                self.modulus
            } else {
                gcd(d, self.modulus)
            }
        } else {
            self.modulus
        }
    }

    /// Nontrivial invariant factors of the cokernel `(Z/n)^rows / im`.
    pub fn cokernel_factors(&self) -> Vec<u64> {
        (0..self.rows).map(|i| self.factor_at(i)).filter(|&f| f > 1).collect()
    }
}

struct SnfCalc {
    n: u64,
    w: ModMat,
    p: Option<ModMat>,
    pinv: Option<ModMat>,
    q: Option<ModMat>,
    qinv: Option<ModMat>,
    carry: Option<Vec<u64>>,
}

impl SnfCalc {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.w.cols {
            let (a, b) = (self.w.get(i, c), self.w.get(j, c));
            self.w.set(i, c, b);
            self.w.set(j, c, a);
        }
        if let Some(p) = &mut self.p {
            for c in 0..p.cols {
                let (a, b) = (p.get(i, c), p.get(j, c));
                p.set(i, c, b);
                p.set(j, c, a);
            }
        }
        if let Some(pi) = &mut self.pinv {
            for r in 0..pi.rows {
                let (a, b) = (pi.get(r, i), pi.get(r, j));
                pi.set(r, i, b);
                pi.set(r, j, a);
            }
        }
        if let Some(cv) = &mut self.carry {
            cv.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.w.rows {
            let (a, b) = (self.w.get(r, i), self.w.get(r, j));
            self.w.set(r, i, b);
            self.w.set(r, j, a);
        }
        if let Some(q) = &mut self.q {
            for r in 0..q.rows {
                let (a, b) = (q.get(r, i), q.get(r, j));
                q.set(r, i, b);
                q.set(r, j, a);
            }
        }
        if let Some(qi) = &mut self.qinv {
            for c in 0..qi.cols {
                let (a, b) = (qi.get(i, c), qi.get(j, c));
                qi.set(i, c, b);
                qi.set(j, c, a);
            }
        }
    }

    /// Rows `(i, j) <- (a*ri + b*rj, c*ri + d*rj)` where `[[a,b],[c,d]]` has
    /// determinant 1, with inverse `[[d,-b],[-c,a]]`.
    fn combine_rows(&mut self, i: usize, j: usize, a: u64, b: u64, c: u64, d: u64) {
        let n = self.n;
        for col in 0..self.w.cols {
            let (x, y) = (self.w.get(i, col), self.w.get(j, col));
            self.w.set(i, col, addmod(mulmod(a, x, n), mulmod(b, y, n), n));
            self.w.set(j, col, addmod(mulmod(c, x, n), mulmod(d, y, n), n));
        }
        if let Some(p) = &mut self.p {
            for col in 0..p.cols {
                let (x, y) = (p.get(i, col), p.get(j, col));
                p.set(i, col, addmod(mulmod(a, x, n), mulmod(b, y, n), n));
                p.set(j, col, addmod(mulmod(c, x, n), mulmod(d, y, n), n));
            }
        }
        if let Some(pi) = &mut self.pinv {
            // P' = E P  =>  Pinv' = Pinv E^{-1}; columns (i, j) of Pinv
            // become (d*ci - c*cj, -b*ci + a*cj).
            for r in 0..pi.rows {
                let (x, y) = (pi.get(r, i), pi.get(r, j));
                pi.set(r, i, submod(mulmod(d, x, n), mulmod(c, y, n), n));
                pi.set(r, j, submod(mulmod(a, y, n), mulmod(b, x, n), n));
            }
        }
        if let Some(cv) = &mut self.carry {
            let (x, y) = (cv[i], cv[j]);
            cv[i] = addmod(mulmod(a, x, n), mulmod(b, y, n), n);
            cv[j] = addmod(mulmod(c, x, n), mulmod(d, y, n), n);
        }
    }

    /// Columns `(i, j) <- (a*ci + b*cj, c*ci + d*cj)`, determinant 1.
    fn combine_cols(&mut self, i: usize, j: usize, a: u64, b: u64, c: u64, d: u64) {
        let n = self.n;
        for r in 0..self.w.rows {
            let (x, y) = (self.w.get(r, i), self.w.get(r, j));
            self.w.set(r, i, addmod(mulmod(a, x, n), mulmod(b, y, n), n));
            self.w.set(r, j, addmod(mulmod(c, x, n), mulmod(d, y, n), n));
        }
        if let Some(q) = &mut self.q {
            for r in 0..q.rows {
                let (x, y) = (q.get(r, i), q.get(r, j));
                q.set(r, i, addmod(mulmod(a, x, n), mulmod(b, y, n), n));
                q.set(r, j, addmod(mulmod(c, x, n), mulmod(d, y, n), n));
            }
        }
        if let Some(qi) = &mut self.qinv {
            // Q' = Q F  =>  Qinv' = F^{-1} Qinv; rows (i, j) of Qinv
            // become (d*ri - c*rj, -b*ri + a*rj).
            for col in 0..qi.cols {
                let (x, y) = (qi.get(i, col), qi.get(j, col));
                qi.set(i, col, submod(mulmod(d, x, n), mulmod(c, y, n), n));
                qi.set(j, col, submod(mulmod(a, y, n), mulmod(b, x, n), n));
            }
        }
    }

    fn row_submul(&mut self, i: usize, t: usize, c: u64) {
        // row_i -= c * row_t, as a det-1 combine on (t, i).
        let n = self.n;
        self.combine_rows(t, i, 1, 0, submod(0, c, n), 1);
    }

    fn col_submul(&mut self, j: usize, t: usize, c: u64) {
        let n = self.n;
        self.combine_cols(t, j, 1, 0, submod(0, c, n), 1);
    }

    /// Make `w[t][t] = gcd` and `w[i][t] = 0` via a Bezout combination.
    fn bezout_rows(&mut self, t: usize, i: usize) {
        let (a, b) = (self.w.get(t, t), self.w.get(i, t));
        let (g, x, y) = egcd(a as i128, b as i128);
        let g = g as u64;
        let n = self.n as i128;
        let xm = x.rem_euclid(n) as u64;
        let ym = y.rem_euclid(n) as u64;
        let c = ((-((b / g) as i128)).rem_euclid(n)) as u64;
        let d = (a / g) % self.n;
        self.combine_rows(t, i, xm, ym, c, d);
    }

    fn bezout_cols(&mut self, t: usize, j: usize) {
        let (a, b) = (self.w.get(t, t), self.w.get(t, j));
        let (g, x, y) = egcd(a as i128, b as i128);
        let g = g as u64;
        let n = self.n as i128;
        let xm = x.rem_euclid(n) as u64;
        let ym = y.rem_euclid(n) as u64;
        let c = ((-((b / g) as i128)).rem_euclid(n)) as u64;
        let d = (a / g) % self.n;
        self.combine_cols(t, j, xm, ym, c, d);
    }
}

pub fn snf_mod(m: &ModMat, n: u64, flags: SnfFlags, carry: Option<&[u64]>) -> SnfMod {
    assert!(n >= 1);
    if let Some(cv) = carry {
        assert_eq!(cv.len(), m.rows);
    }
    let mut w = m.clone();
    if n == 1 {
        w.data.iter_mut().for_each(|v| *v = 0);
    } else {
        w.data.iter_mut().for_each(|v| *v %= n);
    }
    let mut calc = SnfCalc {
        n: n.max(1),
        w,
        p: flags.p.then(|| ModMat::identity(m.rows)),
        pinv: flags.pinv.then(|| ModMat::identity(m.rows)),
        q: flags.q.then(|| ModMat::identity(m.cols)),
        qinv: flags.qinv.then(|| ModMat::identity(m.cols)),
        carry: carry.map(|c| c.iter().map(|&v| if n == 1 { 0 } else { v % n }).collect()),
    };

    let rank_bound = m.rows.min(m.cols);
    let mut t = 0;
    'outer: while t < rank_bound {
        // Smallest nonzero representative in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                let v = calc.w.get(i, j);
                if v != 0 && pivot.map_or(true, |(pi, pj)| v < calc.w.get(pi, pj)) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        calc.swap_rows(t, pi);
        calc.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot.
            for i in t + 1..m.rows {
                let b = calc.w.get(i, t);
                if b == 0 {
                    continue;
                }
                let a = calc.w.get(t, t);
                if b % a == 0 {
                    calc.row_submul(i, t, b / a);
                } else {
                    calc.bezout_rows(t, i);
                }
            }
            // Clear row t right of the pivot; Bezout column steps can dirty
            // column t again, in which case we go around once more.
            let mut dirtied = false;
            for j in t + 1..m.cols {
                let b = calc.w.get(t, j);
                if b == 0 {
                    continue;
                }
                let a = calc.w.get(t, t);
                if b % a == 0 {
                    calc.col_submul(j, t, b / a);
                } else {
                    calc.bezout_cols(t, j);
                    dirtied = true;
                }
            }
            if !dirtied {
                break;
            }
        }

        // The pivot must divide every entry of the trailing submatrix (at the
        // representative level) before we recurse, so the normalized factors
        // come out in a divisibility chain.
        let piv = calc.w.get(t, t);
        let mut offender = None;
        'scan: for i in t + 1..m.rows {
            for j in t + 1..m.cols {
                if calc.w.get(i, j) % piv != 0 {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            calc.combine_rows(t, i, 1, 1, 0, 1);
            continue 'outer;
        }
        t += 1;
    }

    let diag = (0..rank_bound).map(|i| calc.w.get(i, i)).collect();
    SnfMod {
        modulus: n.max(1),
        rows: m.rows,
        cols: m.cols,
        diag,
        p: calc.p,
        pinv: calc.pinv,
        q: calc.q,
        qinv: calc.qinv,
        carry: calc.carry,
    }
}

/// One solution of `A x = b` over `Z/n`, or `None` when the system is
/// inconsistent. Tries plain Gaussian elimination with unit pivots first and
/// falls back to the Smith form when no unit pivot is available.
pub fn solve_mod(a: &ModMat, b: &[u64], n: u64) -> Option<Vec<u64>> {
    assert_eq!(a.rows, b.len());
    if n == 1 {
        return Some(vec![0; a.cols]);
    }
    match gauss_solve_mod(a, b, n) {
        GaussOutcome::Solved(x) => return Some(x),
        GaussOutcome::NoSolution => return None,
        GaussOutcome::Stuck => {}
    }
    let res = snf_mod(a, n, SnfFlags { q: true, ..Default::default() }, Some(b));
    let c = res.carry.as_ref().unwrap();
    let mut y = vec![0u64; a.cols];
    for i in 0..a.rows {
        let ci = c[i];
        if i < res.diag.len() && res.diag[i] != 0 {
            let raw = res.diag[i];
            let g = gcd(raw, n);
            if ci % g != 0 {
                return None;
            }
            // raw * y = ci (mod n): y = (ci/g) * inv(raw/g) (mod n/g).
            let inv = invmod(raw / g, n / g).expect("raw/g is a unit mod n/g");
            y[i] = mulmod(ci / g, inv, n / g);
        } else if ci != 0 {
            return None;
        }
    }
    Some(res.q.as_ref().unwrap().mul_vec(&y, n))
}

pub enum GaussOutcome {
    Solved(Vec<u64>),
    NoSolution,
    /// No unit pivot left while nonzero non-unit coefficients remain; the
    /// caller must use the Smith-form path.
    Stuck,
}

pub fn gauss_solve_mod(a: &ModMat, b: &[u64], n: u64) -> GaussOutcome {
    let mut w = a.clone();
    w.data.iter_mut().for_each(|v| *v %= n);
    let mut c: Vec<u64> = b.iter().map(|&v| v % n).collect();
    let mut pivot_of_row: Vec<(usize, usize)> = Vec::new();
    let mut used_rows = vec![false; a.rows];
    let mut used_cols = vec![false; a.cols];

    loop {
        let mut found = None;
        'search: for i in 0..a.rows {
            if used_rows[i] {
                continue;
            }
            for j in 0..a.cols {
                if !used_cols[j] && gcd(w.get(i, j), n) == 1 {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        let inv = invmod(w.get(pi, pj), n).unwrap();
        for j in 0..a.cols {
            w.set(pi, j, mulmod(w.get(pi, j), inv, n));
        }
        c[pi] = mulmod(c[pi], inv, n);
        for i in 0..a.rows {
            if i == pi {
                continue;
            }
            let f = w.get(i, pj);
            if f == 0 {
                continue;
            }
            for j in 0..a.cols {
                let v = submod(w.get(i, j), mulmod(f, w.get(pi, j), n), n);
                w.set(i, j, v);
            }
            c[i] = submod(c[i], mulmod(f, c[pi], n), n);
        }
        used_rows[pi] = true;
        used_cols[pj] = true;
        pivot_of_row.push((pi, pj));
    }

    for i in 0..a.rows {
        if used_rows[i] {
            continue;
        }
        if (0..a.cols).any(|j| w.get(i, j) != 0) {
            return GaussOutcome::Stuck;
        }
        if c[i] != 0 {
            return GaussOutcome::NoSolution;
        }
    }
    let mut x = vec![0u64; a.cols];
    for (i, j) in pivot_of_row {
        x[j] = c[i];
    }
    GaussOutcome::Solved(x)
}

/// Reduced row echelon basis of a subspace of `F_p^dim`, kept in canonical
/// form so two equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RrefBasis {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RrefBasis {
    pub fn new(p: u64, dim: usize) -> Self {
        RrefBasis { p, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = v[piv] % self.p;
            if f != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = submod(*x, mulmod(f, *y, self.p), self.p);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x % self.p == 0)
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        v.iter_mut().for_each(|x| *x %= self.p);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = invmod(v[piv], self.p).expect("p prime");
        v.iter_mut().for_each(|x| *x = mulmod(*x, inv, self.p));
        // Back-substitute into the existing rows, then keep rows ordered by
        // pivot column: canonical RREF.
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            let _ = rp;
            let f = row[piv];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = submod(*x, mulmod(f, *y, self.p), self.p);
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > piv).unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        self.pivots.insert(pos, piv);
        true
    }

    /// Enumerates every vector of the subspace (all `p^rank` combinations).
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total = (self.p as u128).pow(self.rank() as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![0u64; self.dim];
            for row in &self.rows {
                let c = (idx % self.p as u128) as u64;
                idx /= self.p as u128;
                if c != 0 {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = addmod(*x, mulmod(c, *y, self.p), self.p);
                    }
                }
            }
            v
        })
    }
}

/// Rank of a matrix over the prime field `F_p`.
pub fn rank_mod_prime(rows: &[Vec<u64>], p: u64) -> usize {
    let dim = rows.first().map_or(0, Vec::len);
    let mut basis = RrefBasis::new(p, dim);
    for r in rows {
        basis.insert(r.clone());
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(rows: Vec<Vec<u64>>, n: u64) -> SnfMod {
        let m = ModMat::from_rows(rows);
        let res = snf_mod(&m, n, SnfFlags::all(), None);
        let p = res.p.as_ref().unwrap();
        let q = res.q.as_ref().unwrap();
        let d = p.mul(&m, n).mul(q, n);
        for i in 0..m.rows {
            for j in 0..m.cols {
                let want = if i == j && i < res.diag.len() { res.diag[i] % n.max(1) } else { 0 };
                assert_eq!(d.get(i, j), want, "PMQ not diagonal at ({i},{j})");
            }
        }
        if n > 1 {
            assert!(p.mul(res.pinv.as_ref().unwrap(), n).is_identity());
            assert!(q.mul(res.qinv.as_ref().unwrap(), n).is_identity());
        }
        // Normalized factors must form a divisibility chain.
        let fs: Vec<u64> = (0..res.diag.len()).map(|i| res.factor_at(i)).collect();
        for w in fs.windows(2) {
            assert_eq!(w[1] % w[0], 0, "chain broken: {fs:?}");
        }
        res
    }

    #[test]
    fn snf_small_examples() {
        let res = check_snf(vec![vec![4, 0], vec![0, 6]], 12);
        let fs: Vec<u64> = (0..2).map(|i| res.factor_at(i)).collect();
        assert_eq!(fs, vec![2, 12]);

        let res = check_snf(vec![vec![2, 4, 4], vec![6, 6, 12], vec![10, 4, 16]], 0x10000);
        assert!(res.diag[0] >= 1);

        check_snf(vec![vec![3, 1], vec![1, 3]], 8);
        check_snf(vec![vec![0, 0], vec![0, 0]], 6);
        check_snf(vec![vec![5]], 1);
    }

    #[test]
    fn snf_pseudorandom_transform_identities() {
        // Deterministic LCG; moduli mix primes and composites.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for &n in &[2u64, 4, 6, 8, 12, 30, 624] {
            for _ in 0..8 {
                let rows = 1 + (next() as usize % 5);
                let cols = 1 + (next() as usize % 5);
                let m: Vec<Vec<u64>> =
                    (0..rows).map(|_| (0..cols).map(|_| next() % n).collect()).collect();
                check_snf(m, n);
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        // 2x = 1 (mod 4) has no solution; 2x = 2 (mod 4) does.
        let a = ModMat::from_rows(vec![vec![2]]);
        assert_eq!(solve_mod(&a, &[1], 4), None);
        let x = solve_mod(&a, &[2], 4).unwrap();
        assert_eq!(mulmod(2, x[0], 4), 2);

        // Unit-pivot path over a prime modulus.
        let a = ModMat::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let x = solve_mod(&a, &[5, 6], 7).unwrap();
        assert_eq!(a.mul_vec(&x, 7), vec![5, 6]);

        // Composite modulus with no unit entries anywhere: forces the SNF
        // fallback. 2x + 3y... use all-even matrix mod 6.
        let a = ModMat::from_rows(vec![vec![2, 4], vec![4, 2]]);
        let b = vec![0, 0];
        let x = solve_mod(&a, &b, 6).unwrap();
        assert_eq!(a.mul_vec(&x, 6), b);
        let x = solve_mod(&a, &[2, 4], 6).unwrap();
        assert_eq!(a.mul_vec(&x, 6), vec![2, 4]);
        assert_eq!(solve_mod(&a, &[1, 0], 6), None);
    }

    #[test]
    fn solve_brute_force_agreement() {
        // Exhaustive cross-check on tiny systems: solve_mod finds a solution
        // exactly when scanning all x does.
        for &n in &[2u64, 4, 6] {
            for code in 0..(n.pow(4)) {
                let e = |k: u32| (code / n.pow(k)) % n;
                let a = ModMat::from_rows(vec![vec![e(0), e(1)], vec![e(2), e(3)]]);
                for bcode in 0..n.pow(2) {
                    let b = vec![bcode % n, (bcode / n) % n];
                    let found = solve_mod(&a, &b, n);
                    let exists = (0..n.pow(2)).any(|xc| {
                        let x = vec![xc % n, (xc / n) % n];
                        a.mul_vec(&x, n) == b
                    });
                    assert_eq!(found.is_some(), exists, "n={n} a={a:?} b={b:?}");
                    if let Some(x) = found {
                        assert_eq!(a.mul_vec(&x, n), b);
                    }
                }
            }
        }
    }

    #[test]
    fn rref_basis_canonical() {
        let mut b1 = RrefBasis::new(2, 3);
        b1.insert(vec![1, 1, 0]);
        b1.insert(vec![0, 1, 1]);
        let mut b2 = RrefBasis::new(2, 3);
        b2.insert(vec![1, 0, 1]);
        b2.insert(vec![1, 1, 0]);
        assert_eq!(b1, b2);
        assert_eq!(b1.rank(), 2);
        assert!(b1.contains(&[1, 0, 1]));
        assert!(!b1.contains(&[1, 1, 1]));
        assert_eq!(b1.elements().count(), 4);
        assert!(!b1.clone().insert(vec![1, 0, 1]));
        assert_eq!(rank_mod_prime(&[vec![1, 2], vec![2, 4]], 5), 1);
    }
}
