//! Exact integer matrix helpers: Hermite normal form, kernels, linear
//! solves and rank. Row-major `Vec<Vec<BigInt>>` throughout; sizes stay at
//! desk scale so no effort is spent on sparsity or pivoting heuristics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Matrix = Vec<Vec<BigInt>>;

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        debug_assert_eq!(a[i].len(), inner);
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let term = &a[i][k] * &b[k][j];
                out[i][j] += term;
            }
        }
    }
    out
}

pub(crate) fn mat_apply(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), v.len());
            let mut acc = BigInt::zero();
            for (a, b) in row.iter().zip(v) {
                acc += a * b;
            }
            acc
        })
        .collect()
}

pub(crate) fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Row-style Hermite normal form of the row lattice of `m` (zero rows
/// dropped): pivots positive, entries above each pivot reduced into
/// `[0, pivot)`. Canonical for a given row lattice.
pub(crate) fn hnf(m: &Matrix) -> Matrix {
    let mut rows = m.clone();
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        // Euclidean elimination below row r in this column.
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][col].abs() < rows[b][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut any_left = false;
            for i in (r + 1)..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = floor_div(&rows[i][col], &rows[r][col]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let sub = &q * &rows[r][j];
                        rows[i][j] -= sub;
                    }
                }
                if !rows[i][col].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = floor_div(&rows[i][col], &rows[r][col]);
            if q.is_zero() {
                continue;
            }
            for j in 0..ncols {
                let sub = &q * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Canonical basis (HNF rows) of `{x ∈ Z^n : row · x = 0 for every row}`.
/// The result is a saturated lattice: any integer vector in the rational
/// kernel is an integer combination of the basis.
pub(crate) fn integer_kernel(rows: &Matrix, n: usize) -> Matrix {
    for row in rows {
        debug_assert_eq!(row.len(), n);
    }
    // Row-reduce the n×m transpose while tracking u with u * mᵀ = h;
    // rows of u matching zero rows of h span the kernel.
    let mut mt: Matrix = if rows.is_empty() {
        vec![Vec::new(); n]
    } else {
        transpose(rows)
    };
    let mut u = identity(n);
    let r = hnf_with_transform(&mut mt, &mut u);
    let kernel_rows: Matrix = u.into_iter().skip(r).collect();
    hnf(&kernel_rows)
}

/// One integer solution `x` of `m · x = b`, or `None` when no integral
/// solution exists. Deterministic.
pub(crate) fn integer_solve(m: &Matrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let nrows = m.len();
    debug_assert_eq!(nrows, b.len());
    let ncols = m.first().map_or(0, Vec::len);
    // Solve via the row HNF of the transpose: u * mᵀ = h gives
    // m · uᵀ = hᵀ, so solving hᵀ z = b by pivots yields x = uᵀ z.
    let mut rows = transpose(m);
    let mut u = identity(ncols);
    let rank = hnf_with_transform(&mut rows, &mut u);
    let mut residual = b.to_vec();
    let mut z = vec![BigInt::zero(); ncols];
    for i in 0..rank {
        let pivot_col = rows[i].iter().position(|x| !x.is_zero())?;
        let p = &rows[i][pivot_col];
        let (q, rem) = residual[pivot_col].div_rem(p);
        if !rem.is_zero() {
            return None;
        }
        z[i] = q.clone();
        if !q.is_zero() {
            for col in 0..nrows {
                let sub = &q * &rows[i][col];
                residual[col] -= sub;
            }
        }
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let ut = transpose(&u);
    Some(mat_apply(&ut, &z))
}

/// In-place row echelon over Z (no above-pivot reduction), tracking the
/// unimodular transform. Returns the number of nonzero rows; the trailing
/// transform rows span the kernel of the original row map.
fn hnf_with_transform(rows: &mut Matrix, transform: &mut Matrix) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][col].abs() < rows[b][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            transform.swap(r, b);
            let mut any_left = false;
            for i in (r + 1)..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = floor_div(&rows[i][col], &rows[r][col]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let sub = &q * &rows[r][j];
                        rows[i][j] -= sub;
                    }
                    for j in 0..transform[r].len() {
                        let sub = &q * &transform[r][j];
                        transform[i][j] -= sub;
                    }
                }
                if !rows[i][col].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if !rows[r][col].is_zero() {
            r += 1;
        }
    }
    r
}

/// Rank over the rationals, by exact Gaussian elimination.
pub(crate) fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in (r + 1)..nrows {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &pivot;
            for j in col..ncols {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}
