//! Integer Smith normal form via sparse unit-pivot elimination with a
//! dense fallback for the non-unit core, plus a prime-field rank fast path.

use num::bigint::Sign;
use num::{BigInt, Integer, Signed, Zero};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Triplet integer matrix.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(u32, u32, i64)>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, r: usize, c: usize, v: i64) {
        if v != 0 {
            self.entries.push((r as u32, c as u32, v));
        }
    }
}

/// Result of a Smith normal form computation: invariant factors
/// d1 | d2 | ... (all positive) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl Snf {
    /// Invariant factors different from 1 (the torsion part when the matrix
    /// is a boundary matrix).
    pub fn nonunit_factors(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|f| **f != BigInt::from(1))
            .cloned()
            .collect()
    }
}

trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// self - q * w; None on overflow.
    fn sub_mul(&self, q: &Self, w: &Self) -> Option<Self>;
    /// Product with a unit (±1).
    fn times_unit(&self, u: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, q: &Self, w: &Self) -> Option<Self> {
        q.checked_mul(*w).and_then(|p| self.checked_sub(p))
    }
    fn times_unit(&self, u: &Self) -> Self {
        self * u
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        *self.magnitude() == num::BigUint::from(1u32)
    }
    fn sub_mul(&self, q: &Self, w: &Self) -> Option<Self> {
        Some(self - q * w)
    }
    fn times_unit(&self, u: &Self) -> Self {
        self * u
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct SparseWork<S> {
    row_data: Vec<HashMap<u32, S>>,
    col_rows: Vec<HashSet<u32>>,
    col_units: Vec<u32>,
    /// (nnz, col) for live columns that contain at least one unit entry.
    unit_cols: BTreeSet<(u32, u32)>,
    row_live: Vec<bool>,
    col_live: Vec<bool>,
}

impl<S: Scalar> SparseWork<S> {
    fn build(m: &IntMatrix) -> Self {
        let mut row_data: Vec<HashMap<u32, S>> = vec![HashMap::new(); m.rows];
        let mut col_rows: Vec<HashSet<u32>> = vec![HashSet::new(); m.cols];
        for &(r, c, v) in &m.entries {
            let e = row_data[r as usize]
                .entry(c)
                .or_insert_with(|| S::from_i64(0));
            *e = e.sub_mul(&S::from_i64(-1), &S::from_i64(v)).unwrap();
        }
        for (r, row) in row_data.iter_mut().enumerate() {
            row.retain(|_, v| !v.is_zero());
            for &c in row.keys() {
                col_rows[c as usize].insert(r as u32);
            }
        }
        let mut col_units = vec![0u32; m.cols];
        for (r, row) in row_data.iter().enumerate() {
            let _ = r;
            for (&c, v) in row {
                if v.is_unit() {
                    col_units[c as usize] += 1;
                }
            }
        }
        let mut unit_cols = BTreeSet::new();
        for c in 0..m.cols {
            if col_units[c] > 0 {
                unit_cols.insert((col_rows[c].len() as u32, c as u32));
            }
        }
        SparseWork {
            row_data,
            col_rows,
            col_units,
            unit_cols,
            row_live: vec![true; m.rows],
            col_live: vec![true; m.cols],
        }
    }

    fn col_nnz(&self, c: u32) -> u32 {
        self.col_rows[c as usize].len() as u32
    }

    /// Applies a single entry change, keeping the column indices coherent.
    fn set_entry(&mut self, r: u32, c: u32, new: Option<S>) {
        let row = &mut self.row_data[r as usize];
        let old = row.remove(&c);
        let old_unit = old.as_ref().map(|v| v.is_unit()).unwrap_or(false);
        let (had, new_unit, keep) = match new {
            Some(v) if !v.is_zero() => {
                let u = v.is_unit();
                row.insert(c, v);
                (old.is_some(), u, true)
            }
            _ => (old.is_some(), false, false),
        };
        let pre_nnz = self.col_nnz(c);
        let pre_units = self.col_units[c as usize];
        let mut nnz = pre_nnz;
        let mut units = pre_units;
        if had && !keep {
            self.col_rows[c as usize].remove(&r);
            nnz -= 1;
        } else if !had && keep {
            self.col_rows[c as usize].insert(r);
            nnz += 1;
        }
        if old_unit {
            units -= 1;
        }
        if new_unit {
            units += 1;
        }
        self.col_units[c as usize] = units;
        if self.col_live[c as usize] {
            if pre_units > 0 {
                self.unit_cols.remove(&(pre_nnz, c));
            }
            if units > 0 {
                self.unit_cols.insert((nnz, c));
            }
        }
    }

    fn retire_col(&mut self, c: u32) {
        if self.col_units[c as usize] > 0 {
            self.unit_cols.remove(&(self.col_nnz(c), c));
        }
        self.col_live[c as usize] = false;
    }

    /// Eliminates unit pivots until none remain. Returns the number of unit
    /// pivots taken, or Err on scalar overflow.
    fn eliminate_units(&mut self) -> std::result::Result<usize, ()> {
        let mut pivots = 0usize;
        while let Some(&(_, c)) = self.unit_cols.iter().next() {
            // pick the unit entry in column c whose row is sparsest
            let mut best: Option<(usize, u32)> = None;
            for &r in &self.col_rows[c as usize] {
                let v = &self.row_data[r as usize][&c];
                if v.is_unit() {
                    let key = (self.row_data[r as usize].len(), r);
                    if best.map(|b| key < b).unwrap_or(true) {
                        best = Some(key);
                    }
                }
            }
            let (_, r) = best.expect("unit_cols tracked a column without units");
            self.pivot_unit(r, c)?;
            pivots += 1;
        }
        Ok(pivots)
    }

    /// Row-eliminates on a ±1 pivot at (r, c), then retires row r and
    /// column c.
    fn pivot_unit(&mut self, r: u32, c: u32) -> std::result::Result<(), ()> {
        let pivot_row: Vec<(u32, S)> = self.row_data[r as usize]
            .iter()
            .map(|(&cc, v)| (cc, v.clone()))
            .collect();
        let pivot_val = self.row_data[r as usize][&c].clone();
        debug_assert!(pivot_val.is_unit());
        let others: Vec<u32> = self.col_rows[c as usize]
            .iter()
            .copied()
            .filter(|&r2| r2 != r)
            .collect();
        for r2 in others {
            // q = entry / pivot = entry * pivot (pivot is ±1)
            let q = self.row_data[r2 as usize][&c].times_unit(&pivot_val);
            for (c2, w) in &pivot_row {
                if *c2 == c {
                    continue;
                }
                let cur = self.row_data[r2 as usize]
                    .get(c2)
                    .cloned()
                    .unwrap_or_else(|| S::from_i64(0));
                let new = cur.sub_mul(&q, w).ok_or(())?;
                self.set_entry(r2, *c2, Some(new));
            }
            self.set_entry(r2, c, None);
        }
        // retire pivot row and column
        self.retire_col(c);
        for (c2, _) in &pivot_row {
            if *c2 != c {
                let pre_nnz = self.col_nnz(*c2);
                let pre_units = self.col_units[*c2 as usize];
                self.col_rows[*c2 as usize].remove(&r);
                let v_unit = self.row_data[r as usize][c2].is_unit();
                if v_unit {
                    self.col_units[*c2 as usize] -= 1;
                }
                if self.col_live[*c2 as usize] && pre_units > 0 {
                    self.unit_cols.remove(&(pre_nnz, *c2));
                    if self.col_units[*c2 as usize] > 0 {
                        self.unit_cols.insert((self.col_nnz(*c2), *c2));
                    }
                }
            }
        }
        self.row_data[r as usize].clear();
        self.row_live[r as usize] = false;
        Ok(())
    }

    /// Dumps the live remainder as a dense matrix.
    fn remainder(&self) -> Vec<Vec<BigInt>> {
        let live_rows: Vec<u32> = (0..self.row_data.len() as u32)
            .filter(|&r| self.row_live[r as usize] && !self.row_data[r as usize].is_empty())
            .collect();
        let mut live_cols: BTreeSet<u32> = BTreeSet::new();
        for &r in &live_rows {
            for &c in self.row_data[r as usize].keys() {
                live_cols.insert(c);
            }
        }
        let col_index: HashMap<u32, usize> = live_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
        for (i, &r) in live_rows.iter().enumerate() {
            for (&c, v) in &self.row_data[r as usize] {
                dense[i][col_index[&c]] = v.to_bigint();
            }
        }
        dense
    }
}

/// Dense Smith normal form over BigInt. Returns the diagonal (unsorted,
/// not yet divisibility-normalized).
fn dense_snf(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // find minimal |nonzero| pivot in the active submatrix
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let (pi, pj) = match best {
            Some(p) => p,
            None => break,
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        // clear row and column t
        loop {
            let mut done = true;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = div_nearest(&m[i][t], &m[t][t]);
                    for j in t..cols {
                        let sub = &q * &m[t][j];
                        m[i][j] -= sub;
                    }
                    if !m[i][t].is_zero() {
                        // remainder became the smaller pivot
                        m.swap(t, i);
                        done = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = div_nearest(&m[t][j], &m[t][t]);
                    for i in t..rows {
                        let sub = &q * &m[i][t];
                        m[i][j] -= sub;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        done = false;
                    }
                }
            }
            if !done {
                continue;
            }
            // enforce divisibility: pivot must divide the whole remainder
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        for jj in t..cols {
                            let add = m[i][jj].clone();
                            m[t][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Quotient rounded to nearest (ties toward zero), so remainders satisfy
/// |r| <= |b|/2.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.sign() == Sign::Minus) == (b.sign() == Sign::Minus) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Normalizes a diagonal to the invariant-factor chain d1 | d2 | ...
fn normalize_chain(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    diag.retain(|d| !d.is_zero());
    let n = diag.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if !(&diag[j] % &diag[i]).is_zero() {
                    let g = diag[i].gcd(&diag[j]);
                    let l = (&diag[i] * &diag[j]) / &g;
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    diag.sort();
    diag
}

fn smith_generic<S: Scalar>(m: &IntMatrix) -> std::result::Result<Snf, ()> {
    let mut work: SparseWork<S> = SparseWork::build(m);
    let units = work.eliminate_units()?;
    let remainder = work.remainder();
    let mut diag: Vec<BigInt> = vec![BigInt::from(1); units];
    diag.extend(dense_snf(remainder));
    let factors = normalize_chain(diag);
    let rank = factors.len();
    Ok(Snf { factors, rank })
}

/// Smith normal form of an integer matrix: invariant factors d1 | d2 | ...
/// and rank, computed in exact arithmetic.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    match smith_generic::<i128>(m) {
        Ok(snf) => snf,
        // i128 overflow: redo with arbitrary precision
        Err(()) => smith_generic::<BigInt>(m).expect("BigInt elimination cannot overflow"),
    }
}

/// Rank over the prime field F_p (p an odd word-size prime).
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    assert!(p >= 2 && p < (1 << 31));
    let norm = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut row_data: Vec<HashMap<u32, u64>> = vec![HashMap::new(); m.rows];
    let mut col_rows: Vec<HashSet<u32>> = vec![HashSet::new(); m.cols];
    for &(r, c, v) in &m.entries {
        let e = row_data[r as usize].entry(c).or_insert(0);
        *e = (*e + norm(v)) % p;
    }
    for (r, row) in row_data.iter_mut().enumerate() {
        row.retain(|_, v| *v != 0);
        for &c in row.keys() {
            col_rows[c as usize].insert(r as u32);
        }
    }
    // key under which each live column currently sits in the queue
    let mut col_key: Vec<Option<u32>> = vec![None; m.cols];
    let mut live: BTreeSet<(u32, u32)> = BTreeSet::new();
    for c in 0..m.cols {
        let nnz = col_rows[c].len() as u32;
        if nnz > 0 {
            live.insert((nnz, c as u32));
            col_key[c] = Some(nnz);
        }
    }
    let rekey = |c: u32,
                 col_rows: &Vec<HashSet<u32>>,
                 col_key: &mut Vec<Option<u32>>,
                 live: &mut BTreeSet<(u32, u32)>,
                 keep: bool| {
        if let Some(k) = col_key[c as usize].take() {
            live.remove(&(k, c));
        }
        let nnz = col_rows[c as usize].len() as u32;
        if keep && nnz > 0 {
            live.insert((nnz, c));
            col_key[c as usize] = Some(nnz);
        }
    };
    let inv_mod = |a: u64| -> u64 {
        // Fermat inverse
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0usize;
    while let Some(&(_, c)) = live.iter().next() {
        let mut best: Option<(usize, u32)> = None;
        for &r in &col_rows[c as usize] {
            let key = (row_data[r as usize].len(), r);
            if best.map(|b| key < b).unwrap_or(true) {
                best = Some(key);
            }
        }
        let (_, r) = best.expect("live column with empty support");
        rank += 1;
        let pivot_row: Vec<(u32, u64)> = row_data[r as usize]
            .iter()
            .map(|(&cc, &v)| (cc, v))
            .collect();
        let pinv = inv_mod(row_data[r as usize][&c]);
        let others: Vec<u32> = col_rows[c as usize]
            .iter()
            .copied()
            .filter(|&r2| r2 != r)
            .collect();
        let mut touched: HashSet<u32> = HashSet::new();
        for r2 in others {
            let q = row_data[r2 as usize][&c] * pinv % p;
            for &(c2, w) in &pivot_row {
                if c2 == c {
                    continue;
                }
                let cur = row_data[r2 as usize].get(&c2).copied().unwrap_or(0);
                let new = (cur + p - q * w % p) % p;
                if new == 0 {
                    if row_data[r2 as usize].remove(&c2).is_some() {
                        col_rows[c2 as usize].remove(&r2);
                        touched.insert(c2);
                    }
                } else if row_data[r2 as usize].insert(c2, new).is_none() {
                    col_rows[c2 as usize].insert(r2);
                    touched.insert(c2);
                }
            }
            row_data[r2 as usize].remove(&c);
            col_rows[c as usize].remove(&r2);
        }
        // retire pivot row and column
        for &(c2, _) in &pivot_row {
            if c2 != c {
                col_rows[c2 as usize].remove(&r);
                touched.insert(c2);
            }
        }
        col_rows[c as usize].clear();
        row_data[r as usize].clear();
        rekey(c, &col_rows, &mut col_key, &mut live, false);
        for c2 in touched {
            rekey(c2, &col_rows, &mut col_key, &mut live, true);
        }
    }
    rank
}
