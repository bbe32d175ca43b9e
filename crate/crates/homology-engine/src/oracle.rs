//! Naive reference computation of invariant factors from determinantal
//! divisors (gcd of k x k minors). Exponential in the matrix size; only
//! meant as an independent oracle for testing the Smith reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::matrix::IntegerMatrix;

fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    // fraction-free (Bareiss) elimination
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
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

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// gcd of all k x k minors, zero if all vanish.
fn minor_gcd(a: &[Vec<BigInt>], k: usize) -> BigInt {
    let mut g = BigInt::from(0);
    for rsel in combinations(a.len(), k) {
        for csel in combinations(a[0].len(), k) {
            let sub: Vec<Vec<BigInt>> = rsel
                .iter()
                .map(|&r| csel.iter().map(|&c| a[r][c].clone()).collect())
                .collect();
            g = g.gcd(&determinant(&sub));
        }
    }
    g
}

/// Invariant factors from the quotients of successive determinantal divisors.
pub fn minor_gcd_invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let a = m.to_dense_bigint();
    let mut factors = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=m.rows.min(m.cols) {
        let g = minor_gcd(&a, k);
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}
