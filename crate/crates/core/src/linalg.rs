//! Small exact linear algebra: rational Gaussian elimination and saturated
//! integer kernels via unimodular column reduction.

use crate::rings::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Solve an n x n system given as n rows of length n+1 (augmented).
/// Returns None when the matrix is singular.
pub fn solve_square(mut aug: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = aug.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for entry in aug[col].iter_mut() {
            *entry /= p.clone();
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = aug[col][c].clone();
                    aug[r][c] -= f.clone() * v;
                }
            }
        }
    }
    Some((0..n).map(|r| aug[r][n].clone()).collect())
}

/// Solve a possibly singular system (rows of length n+1). Free variables are
/// set to zero; returns None when inconsistent.
pub fn solve_consistent(mut aug: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0usize;
    for col in 0..n {
        let pivot = (rank..rows).find(|&r| !aug[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        aug.swap(rank, pivot);
        let p = aug[rank][col].clone();
        for entry in aug[rank].iter_mut() {
            *entry /= p.clone();
        }
        for r in 0..rows {
            if r != rank && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=n {
                    let v = aug[rank][c].clone();
                    aug[r][c] -= f.clone() * v;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // inconsistency: a zero row with nonzero rhs
    for r in rank..rows {
        if aug[r][..n].iter().all(|v| v.is_zero()) && !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for col in 0..n {
        if let Some(r) = pivot_of_col[col] {
            x[col] = aug[r][n].clone();
        }
    }
    Some(x)
}

/// Rank of a rational matrix.
pub fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for entry in m[rank].iter_mut() {
            *entry /= p.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let v = m[rank][c].clone();
                    m[r][c] -= f.clone() * v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Saturated integer kernel of a rational matrix: a Z-basis of
/// { x in Z^n : A x = 0 }.
///
/// Rows are cleared of denominators (does not change the kernel), then the
/// matrix is column-reduced by unimodular operations while mirroring them on
/// an identity block; columns that end up zero in the reduced matrix give the
/// kernel basis. Unimodularity guarantees the basis generates the full
/// integer kernel, not a finite-index sublattice.
pub fn kernel_integer(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<BigInt>> {
    // clear denominators row by row
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            debug_assert_eq!(row.len(), n);
            let mut l = BigInt::one();
            for v in row {
                l = l.lcm(v.denom());
            }
            row.iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect()
        })
        .collect();
    let m = a.len();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // column elimination
    let mut pivot_col = 0usize;
    for row in 0..m {
        if pivot_col >= n {
            break;
        }
        // gcd-eliminate within columns pivot_col..n on this row
        loop {
            // find column with smallest nonzero |entry|
            let mut best: Option<usize> = None;
            for col in pivot_col..n {
                if !a[row][col].is_zero() {
                    best = match best {
                        None => Some(col),
                        Some(b) => {
                            if a[row][col].abs() < a[row][b].abs() {
                                Some(col)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let b = match best {
                None => break, // row is zero on the remaining columns
                Some(b) => b,
            };
            // reduce all other columns by the pivot column
            let mut done = true;
            for col in pivot_col..n {
                if col == b || a[row][col].is_zero() {
                    continue;
                }
                let q = div_round(&a[row][col], &a[row][b]);
                if !q.is_zero() {
                    for r in 0..m {
                        let t = &a[r][b] * &q;
                        a[r][col] -= t;
                    }
                    for r in 0..n {
                        let t = &u[r][b] * &q;
                        u[r][col] -= t;
                    }
                }
                if !a[row][col].is_zero() {
                    done = false;
                }
            }
            if done {
                // move pivot column into position
                for r in 0..m {
                    a[r].swap(pivot_col, b);
                }
                for r in 0..n {
                    u[r].swap(pivot_col, b);
                }
                pivot_col += 1;
                break;
            }
        }
    }
    // kernel = columns of U where the corresponding column of A is entirely zero
    let mut basis = Vec::new();
    for col in 0..n {
        if (0..m).all(|r| a[r][col].is_zero()) {
            let mut v: Vec<BigInt> = (0..n).map(|r| u[r][col].clone()).collect();
            // normalize sign: first nonzero entry positive
            if let Some(first) = v.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    for x in v.iter_mut() {
                        *x = -x.clone();
                    }
                }
            }
            basis.push(v);
        }
    }
    basis
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest-integer division, ties toward zero; keeps entries small
    let two = BigInt::from(2);
    let (q, r) = a.div_rem(b);
    if (&r * &two).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
