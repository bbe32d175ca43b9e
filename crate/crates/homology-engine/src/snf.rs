//! Smith normal form over the integers.
//!
//! Two paths share the dense reduction core:
//! - without transforms, a sparse phase first eliminates with unit (+-1)
//!   pivots chosen by Markowitz fill cost; each such pivot contributes an
//!   invariant factor 1 and shrinks the matrix.  The (usually tiny)
//!   remainder goes through the dense big-integer reduction.
//! - with transforms, the whole matrix is reduced densely over big integers
//!   while the unimodular factors U, V are tracked, so U * M * V = diag(d).

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::matrix::IntegerMatrix;

/// Unimodular transforms with `u * m * v` diagonal.
#[derive(Debug, Clone)]
pub struct Transforms {
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub transforms: Option<Transforms>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The factors > 1, i.e. the torsion coefficients of the cokernel.
    pub fn torsion_factors(&self) -> Vec<u128> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .map(|d| {
                let (_, digits) = d.to_u64_digits();
                match digits.len() {
                    0 => 0,
                    1 => digits[0] as u128,
                    2 => (digits[1] as u128) << 64 | digits[0] as u128,
                    _ => panic!("torsion coefficient exceeds u128"),
                }
            })
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix, want_transforms: bool) -> SmithForm {
    if want_transforms {
        let mut a = m.to_dense_bigint();
        let mut u = identity(m.rows);
        let mut v = identity(m.cols);
        let factors = dense_snf(&mut a, Some(&mut u), Some(&mut v));
        return SmithForm {
            invariant_factors: factors,
            transforms: Some(Transforms { u, v }),
        };
    }
    let (ones, remainder) = unit_pivot_phase(m);
    let mut factors = vec![BigInt::from(1); ones];
    if !remainder.is_empty() {
        let mut a = compact_dense(&remainder);
        factors.extend(dense_snf(&mut a, None, None));
    }
    SmithForm {
        invariant_factors: factors,
        transforms: None,
    }
}

/// Bail out of the sparse phase before entries could overflow i128 products.
const SPARSE_LIMIT: i128 = 1 << 62;

/// Eliminate with unit pivots while any exist, returning the number of
/// eliminated pivots and the surviving entries.
fn unit_pivot_phase(m: &IntegerMatrix) -> (usize, Vec<(usize, usize, i128)>) {
    let mut rows: Vec<HashMap<usize, i128>> = vec![HashMap::new(); m.rows];
    let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); m.cols];
    for &(r, c, v) in &m.entries {
        rows[r].insert(c, v);
        col_rows[c].insert(r);
    }
    let mut alive: Vec<bool> = (0..m.rows).map(|r| !rows[r].is_empty()).collect();
    let mut ones = 0usize;
    let mut grown = false;

    while !grown {
        // cheapest unit pivot by Markowitz fill bound
        let mut best: Option<(usize, usize, i128, usize)> = None;
        for r in 0..m.rows {
            if !alive[r] {
                continue;
            }
            for (&c, &v) in &rows[r] {
                if v == 1 || v == -1 {
                    let cost = (rows[r].len() - 1) * (col_rows[c].len() - 1);
                    if best.as_ref().map_or(true, |b| cost < b.3) {
                        best = Some((r, c, v, cost));
                    }
                }
            }
        }
        let Some((pr, pc, pv, _)) = best else { break };

        let pivot_row: Vec<(usize, i128)> = rows[pr].iter().map(|(&c, &v)| (c, v)).collect();
        let targets: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in targets {
            // row_r -= (a / pv) * row_pr, and pv is a unit so a / pv = a * pv
            let mult = rows[r][&pc] * pv;
            for &(c, w) in &pivot_row {
                let e = rows[r].entry(c).or_insert(0);
                *e -= mult * w;
                if *e == 0 {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    if e.unsigned_abs() > SPARSE_LIMIT as u128 {
                        grown = true;
                    }
                    col_rows[c].insert(r);
                }
            }
            if rows[r].is_empty() {
                alive[r] = false;
            }
        }
        for &(c, _) in &pivot_row {
            col_rows[c].remove(&pr);
        }
        rows[pr].clear();
        alive[pr] = false;
        ones += 1;
    }

    let mut remainder = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (&c, &v) in row {
            remainder.push((r, c, v));
        }
    }
    (ones, remainder)
}

/// Re-index the surviving entries onto a dense matrix without zero rows/cols.
fn compact_dense(entries: &[(usize, usize, i128)]) -> Vec<Vec<BigInt>> {
    let row_ids: BTreeSet<usize> = entries.iter().map(|&(r, _, _)| r).collect();
    let col_ids: BTreeSet<usize> = entries.iter().map(|&(_, c, _)| c).collect();
    let row_map: HashMap<usize, usize> = row_ids.iter().copied().zip(0..).collect();
    let col_map: HashMap<usize, usize> = col_ids.iter().copied().zip(0..).collect();
    let mut a = vec![vec![BigInt::from(0); col_ids.len()]; row_ids.len()];
    for &(r, c, v) in entries {
        a[row_map[&r]][col_map[&c]] = BigInt::from(v);
    }
    a
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(u8::from(i == j)))
                .collect()
        })
        .collect()
}

fn swap_rows(a: &mut [Vec<BigInt>], u: Option<&mut Vec<Vec<BigInt>>>, i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
        if let Some(u) = u {
            u.swap(i, j);
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], v: Option<&mut Vec<Vec<BigInt>>>, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }
}

/// row_i -= q * row_k
fn row_sub(a: &mut [Vec<BigInt>], u: Option<&mut Vec<Vec<BigInt>>>, i: usize, k: usize, q: &BigInt) {
    let src = a[k].clone();
    for (e, s) in a[i].iter_mut().zip(&src) {
        *e -= q * s;
    }
    if let Some(u) = u {
        let src = u[k].clone();
        for (e, s) in u[i].iter_mut().zip(&src) {
            *e -= q * s;
        }
    }
}

/// col_j -= q * col_k
fn col_sub(a: &mut [Vec<BigInt>], v: Option<&mut Vec<Vec<BigInt>>>, j: usize, k: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[k].clone();
        row[j] -= q * s;
    }
    if let Some(v) = v {
        for row in v.iter_mut() {
            let s = row[k].clone();
            row[j] -= q * s;
        }
    }
}

/// row_k += row_i
fn row_add(a: &mut [Vec<BigInt>], u: Option<&mut Vec<Vec<BigInt>>>, k: usize, i: usize) {
    let src = a[i].clone();
    for (e, s) in a[k].iter_mut().zip(&src) {
        *e += s;
    }
    if let Some(u) = u {
        let src = u[i].clone();
        for (e, s) in u[k].iter_mut().zip(&src) {
            *e += s;
        }
    }
}

fn negate_row(a: &mut [Vec<BigInt>], u: Option<&mut Vec<Vec<BigInt>>>, k: usize) {
    for e in a[k].iter_mut() {
        *e = -&*e;
    }
    if let Some(u) = u {
        for e in u[k].iter_mut() {
            *e = -&*e;
        }
    }
}

fn pivot_position(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, e) in row.iter().enumerate().skip(k) {
            if !e.is_zero()
                && best.map_or(true, |(bi, bj)| e.abs() < a[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Classic Smith reduction on a dense big-integer matrix, optionally
/// tracking the row transform `u` and column transform `v`.
fn dense_snf(
    a: &mut Vec<Vec<BigInt>>,
    mut u: Option<&mut Vec<Vec<BigInt>>>,
    mut v: Option<&mut Vec<Vec<BigInt>>>,
) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut k = 0;
    while k < m.min(n) {
        let Some((pi, pj)) = pivot_position(a, k) else { break };
        swap_rows(a, u.as_deref_mut(), k, pi);
        swap_cols(a, v.as_deref_mut(), k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..m {
                if !a[i][k].is_zero() {
                    let q = &a[i][k] / &a[k][k];
                    row_sub(a, u.as_deref_mut(), i, k, &q);
                    if !a[i][k].is_zero() {
                        // remainder is smaller than the pivot: promote it
                        swap_rows(a, u.as_deref_mut(), i, k);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    let q = &a[k][j] / &a[k][k];
                    col_sub(a, v.as_deref_mut(), j, k, &q);
                    if !a[k][j].is_zero() {
                        swap_cols(a, v.as_deref_mut(), j, k);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the submatrix
            let piv = a[k][k].clone();
            let mut bad = None;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !(&a[i][j] % &piv).is_zero() {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => row_add(a, u.as_deref_mut(), k, i),
                None => break,
            }
        }
        if a[k][k].is_negative() {
            negate_row(a, u.as_deref_mut(), k);
        }
        k += 1;
    }
    (0..k).map(|i| a[i][i].clone()).collect()
}

/// Rank over the rationals via fraction-free (Bareiss) elimination;
/// independent of the Smith reduction, used for cross-checks.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let mut a = m.to_dense_bigint();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::from(0);
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over the prime field F_p by Gaussian elimination.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    assert!(p >= 2 && p < 1 << 31, "modulus out of range");
    let red = |v: i128| -> u64 { v.rem_euclid(p as i128) as u64 };
    let mut a = vec![vec![0u64; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        a[r][c] = red(v);
    }
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][col], p);
        for r in rank + 1..m.rows {
            if a[r][col] != 0 {
                let factor = a[r][col] * inv % p;
                for c in col..m.cols {
                    a[r][c] = (a[r][c] + p - factor * a[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // Fermat: p is prime
    let mut result = 1u64;
    let mut base = x % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors_of(data: &[Vec<i128>]) -> Vec<i128> {
        let m = IntegerMatrix::from_dense(data);
        smith_normal_form(&m, false)
            .invariant_factors
            .iter()
            .map(|d| i128::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn textbook_examples() {
        assert_eq!(factors_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(factors_of(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(factors_of(&[vec![0, 0], vec![0, 0]]), Vec::<i128>::new());
        assert_eq!(
            factors_of(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]),
            vec![1, 2, 12]
        );
        assert_eq!(factors_of(&[vec![6, 10], vec![15, 25]]), vec![1]);
    }

    #[test]
    fn divisibility_chain_and_positivity() {
        let m = IntegerMatrix::from_dense(&[
            vec![-6, 4, 2, 7],
            vec![3, -9, 5, 0],
            vec![12, 8, -1, 3],
        ]);
        let s = smith_normal_form(&m, false);
        for w in s.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert!(s.invariant_factors.iter().all(|d| d > &BigInt::from(0)));
    }

    fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let n = b[0].len();
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum())
                    .collect()
            })
            .collect()
    }

    fn determinant(a: &[Vec<BigInt>]) -> BigInt {
        // Bareiss: the last pivot is the determinant, up to swap signs
        let n = a.len();
        let mut a: Vec<Vec<BigInt>> = a.to_vec();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::from(0);
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = &a[k][k] * &a[r][c] - &a[r][k] * &a[k][c];
                    a[r][c] = num / &prev;
                }
                a[r][k] = BigInt::from(0);
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    #[test]
    fn transforms_diagonalize() {
        let m = IntegerMatrix::from_dense(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, 4, 16],
        ]);
        let s = smith_normal_form(&m, true);
        let t = s.transforms.as_ref().unwrap();
        let product = matmul(&matmul(&t.u, &m.to_dense_bigint()), &t.v);
        for (i, row) in product.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let expected = if i == j && i < s.rank() {
                    s.invariant_factors[i].clone()
                } else {
                    BigInt::from(0)
                };
                assert_eq!(*e, expected, "at ({i},{j})");
            }
        }
        assert_eq!(determinant(&t.u).abs(), BigInt::from(1));
        assert_eq!(determinant(&t.v).abs(), BigInt::from(1));
    }

    #[test]
    fn transform_path_agrees_with_sparse_path() {
        let m = IntegerMatrix::from_dense(&[
            vec![1, 2, 3, 4],
            vec![5, 6, 7, 8],
            vec![9, 10, 11, 12],
        ]);
        let plain = smith_normal_form(&m, false);
        let tracked = smith_normal_form(&m, true);
        assert_eq!(plain.invariant_factors, tracked.invariant_factors);
    }

    #[test]
    fn ranks_agree_across_methods() {
        let m = IntegerMatrix::from_dense(&[
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![8, 10, 6, 7],
            vec![0, 0, 0, 0],
        ]);
        let r = smith_normal_form(&m, false).rank();
        assert_eq!(r, rational_rank(&m));
        // 53 is coprime to every invariant factor of this small matrix
        assert_eq!(r, rank_mod_p(&m, 53));
    }
}
