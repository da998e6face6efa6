//! Integer matrices and their Smith normal form.
//!
//! Boundary matrices are sparse with unit entries, so elimination runs in two
//! phases: unit pivots are eliminated directly on a sparse row store, and the
//! (usually tiny) remainder is handed to a dense Smith normal form that always
//! pivots on the entry of smallest absolute value.

use std::collections::{BTreeMap, BTreeSet};

/// Column-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    /// Builds a matrix from explicit columns. Entries with value zero are dropped
    /// and repeated row indices within a column are summed.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < nrows, "row index {r} out of range ({nrows} rows)");
                    *acc.entry(r).or_insert(0) += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| (0..nrows).filter(|&r| rows[r][c] != 0).map(|r| (r, rows[r][c])).collect())
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols()]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// Leading `nrows × ncols` block. Used for prefix subcomplexes whose cells
    /// come first in every dimension.
    pub fn leading_block(&self, nrows: usize, ncols: usize) -> SparseMatrix {
        let cols = self.cols[..ncols]
            .iter()
            .map(|col| col.iter().copied().filter(|&(r, _)| r < nrows).collect())
            .collect();
        SparseMatrix { nrows, cols }
    }

    /// Appends columns (which must use the same row space).
    pub fn hstack(&self, extra: &[Vec<(usize, i64)>]) -> SparseMatrix {
        let mut cols = self.cols.clone();
        cols.extend(extra.iter().cloned());
        SparseMatrix::from_columns(self.nrows, cols)
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in product");
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(r, a) in &self.cols[k] {
                        *acc.entry(r).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Nonzero invariant factors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<u64> {
        invariant_factors(self)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Rank over `F_p` by sparse column echelon reduction; `p` must be prime
    /// and below `2^32`. Never exceeds the rational rank.
    pub fn rank_mod(&self, p: u64) -> usize {
        assert!(p > 1 && p < 1 << 32);
        let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
        // Pivot columns keyed by their largest row index, normalized to 1 there.
        let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for col in &self.cols {
            let mut v: BTreeMap<usize, u64> = col.iter().map(|&(r, x)| (r, reduce(x))).filter(|&(_, x)| x != 0).collect();
            while let Some((&lead, &x)) = v.iter().next_back() {
                let Some(piv) = pivots.get(&lead) else {
                    let inv = pow_mod(x, p - 2, p);
                    for e in v.values_mut() {
                        *e = *e * inv % p;
                    }
                    pivots.insert(lead, v);
                    break;
                };
                for (&r, &y) in piv {
                    let e = v.entry(r).or_insert(0);
                    *e = (*e + p - x * y % p) % p;
                    if *e == 0 {
                        v.remove(&r);
                    }
                }
            }
        }
        pivots.len()
    }

    /// Rational rank, taken as the largest of two prime-field ranks. Each is a
    /// lower bound and they agree with the rational rank unless both primes
    /// divide the relevant minors.
    pub fn rational_rank(&self) -> usize {
        self.rank_mod(2_147_483_647).max(self.rank_mod(1_000_000_007))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow during Smith normal form elimination")
}

/// Nonzero invariant factors `d_1 | d_2 | … | d_r` of an integer matrix.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<u64> {
    // Row store for the sparse phase.
    let mut rows: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); m.nrows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols()];
    for (c, col) in m.cols.iter().enumerate() {
        for &(r, v) in col {
            rows[r].insert(c, v);
            col_rows[c].insert(r);
        }
    }

    let mut factors = Vec::new();
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..col_rows.len() {
            // Among rows holding a unit in column c, take the sparsest.
            let pivot_row = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| rows[r][&c].abs() == 1)
                .min_by_key(|&r| (rows[r].len(), r));
            let Some(p) = pivot_row else { continue };
            let pivot_val = rows[p][&c];
            let pivot_entries: Vec<(usize, i64)> = rows[p].iter().map(|(&k, &v)| (k, v)).collect();
            let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
            for r in others {
                // pivot_val is ±1, so it is its own inverse.
                let factor = checked(rows[r][&c].checked_mul(pivot_val));
                for &(k, v) in &pivot_entries {
                    let delta = checked(factor.checked_mul(v));
                    let entry = rows[r].entry(k).or_insert(0);
                    *entry = checked(entry.checked_sub(delta));
                    if *entry == 0 {
                        rows[r].remove(&k);
                        col_rows[k].remove(&r);
                    } else {
                        col_rows[k].insert(r);
                    }
                }
            }
            // Column c now meets only row p; column operations clear the rest of
            // row p without touching any other row.
            for &(k, _) in &pivot_entries {
                col_rows[k].remove(&p);
            }
            rows[p].clear();
            factors.push(1);
            progress = true;
        }
    }

    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    if !live_rows.is_empty() {
        let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&c| !col_rows[c].is_empty()).collect();
        let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut dense = vec![vec![0i64; live_cols.len()]; live_rows.len()];
        for (i, &r) in live_rows.iter().enumerate() {
            for (&c, &v) in &rows[r] {
                dense[i][col_pos[&c]] = v;
            }
        }
        factors.extend(dense_invariant_factors(dense));
    }
    factors
}

/// Dense Smith normal form; returns the nonzero diagonal in divisibility order.
pub fn dense_invariant_factors(mut a: Vec<Vec<i64>>) -> Vec<u64> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let p = a[t][t];
            let mut clean = true;
            // Column t.
            for i in t + 1..nrows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..ncols {
                        a[i][j] = checked(a[i][j].checked_sub(checked(q.checked_mul(a[t][j]))));
                    }
                    if a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            // Row t.
            for j in t + 1..ncols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    for i in t..nrows {
                        a[i][j] = checked(a[i][j].checked_sub(checked(q.checked_mul(a[i][t]))));
                    }
                    if a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                // Enforce divisibility: fold an offending row into row t.
                let offender = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
                match offender {
                    None => break,
                    Some(i) => {
                        for j in t..ncols {
                            a[t][j] = checked(a[t][j].checked_add(a[i][j]));
                        }
                    }
                }
            }
            // Move the smallest nonzero of row/column t onto the diagonal.
            let mut best = (t, t);
            for i in t..nrows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(a[t][t].unsigned_abs());
        t += 1;
    }
    out.sort_unstable();
    out
}
