//! Smith normal form of integer matrices, with unimodular transforms, and the
//! modular linear solver built on top of it.
//!
//! All arithmetic is arbitrary precision; the decomposition satisfies
//! `U * M * V = D` exactly, where `U`, `V` have determinant `±1` and `D` is
//! diagonal with invariant factors `d_1 | d_2 | ...` followed by zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Result of a Smith decomposition `U * M * V = diag`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub rows: usize,
    pub cols: usize,
    /// Row transform, `rows x rows`, determinant `±1`.
    pub u: IntMatrix,
    /// Column transform, `cols x cols`, determinant `±1`.
    pub v: IntMatrix,
    /// The full diagonal, length `min(rows, cols)`: nonnegative invariant
    /// factors in divisibility order, with trailing zeros for rank deficiency.
    pub diag: Vec<BigInt>,
}

impl SmithNormalForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero invariant factors greater than 1, in divisibility order.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let prod = &a[i][k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

pub fn mat_vec(a: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, xi)| r * xi).sum())
        .collect()
}

/// Smith normal form by alternating row/column reduction on the pivot
/// minor, then a divisibility-fixing pass.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let k = rows.min(cols);
    for t in 0..k {
        if !move_pivot(&mut a, &mut u, &mut v, t) {
            break; // remaining minor is zero
        }
        loop {
            // Clear column t below the pivot.
            let mut again = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]);
                row_axpy(&mut a, &mut u, i, t, &-q);
                if !r.is_zero() {
                    swap_rows(&mut a, &mut u, i, t);
                    again = true;
                }
            }
            if again {
                continue;
            }
            // Clear row t to the right of the pivot.
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]);
                col_axpy(&mut a, &mut v, j, t, &-q);
                if !r.is_zero() {
                    swap_cols(&mut a, &mut v, j, t);
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        if a[t][t].is_negative() {
            negate_row(&mut a, &mut u, t);
        }
    }

    // Enforce the divisibility chain d_t | d_{t+1}.
    loop {
        let mut fixed = true;
        for t in 0..k.saturating_sub(1) {
            if a[t][t].is_zero() || a[t + 1][t + 1].is_zero() {
                continue;
            }
            if (&a[t + 1][t + 1] % &a[t][t]).is_zero() {
                continue;
            }
            fixed = false;
            // Fold entry (t+1, t+1) into the pivot minor at t and re-reduce.
            col_axpy(&mut a, &mut v, t, t + 1, &BigInt::one());
            rediagonalize_pair(&mut a, &mut u, &mut v, t);
        }
        if fixed {
            break;
        }
    }

    // Zero invariant factors must trail; pivoting already guarantees it.
    let diag = (0..k).map(|t| a[t][t].clone()).collect();
    SmithNormalForm { rows, cols, u, v, diag }
}

/// Local 2x2 re-reduction after a divisibility fix at pivot `t`.
fn rediagonalize_pair(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    loop {
        if !a[t + 1][t].is_zero() {
            let (q, r) = a[t + 1][t].div_rem(&a[t][t]);
            row_axpy(a, u, t + 1, t, &-q);
            if !r.is_zero() {
                swap_rows(a, u, t + 1, t);
            }
            continue;
        }
        if !a[t][t + 1].is_zero() {
            let (q, r) = a[t][t + 1].div_rem(&a[t][t]);
            col_axpy(a, v, t + 1, t, &-q);
            if !r.is_zero() {
                swap_cols(a, v, t + 1, t);
            }
            continue;
        }
        break;
    }
    if a[t][t].is_negative() {
        negate_row(a, u, t);
    }
    if a[t + 1][t + 1].is_negative() {
        negate_row(a, u, t + 1);
    }
}

/// Bring a smallest-magnitude nonzero entry of the trailing minor to `(t, t)`.
/// Returns false when the minor is entirely zero.
fn move_pivot(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let rows = a.len();
    let cols = a[0].len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..rows {
        for j in t..cols {
            if a[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    let Some((i, j)) = best else {
        return false;
    };
    if i != t {
        swap_rows(a, u, i, t);
    }
    if j != t {
        swap_cols(a, v, j, t);
    }
    true
}

fn swap_rows(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize) {
    a.swap(i, j);
    u.swap(i, j);
}

fn swap_cols(a: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    for row in v.iter_mut() {
        row.swap(i, j);
    }
}

/// `row_i += c * row_j` on the working matrix, mirrored on `u`.
fn row_axpy(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    for col in 0..a[0].len() {
        let add = c * &a[j][col];
        a[i][col] += add;
    }
    for col in 0..u[0].len() {
        let add = c * &u[j][col];
        u[i][col] += add;
    }
}

/// `col_i += c * col_j` on the working matrix, mirrored on `v`.
fn col_axpy(a: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let add = c * &row[j];
        row[i] += add;
    }
    for row in v.iter_mut() {
        let add = c * &row[j];
        row[i] += add;
    }
}

fn negate_row(a: &mut IntMatrix, u: &mut IntMatrix, i: usize) {
    for x in a[i].iter_mut() {
        *x = -&*x;
    }
    for x in u[i].iter_mut() {
        *x = -&*x;
    }
}

/// One solution of `M x ≡ b (mod modulus)` over `Z/modulus`, or `None` when
/// the system is unsolvable. Entries of the result lie in `0..modulus`.
pub fn solve_mod(m: &IntMatrix, b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    assert!(modulus > &BigInt::one(), "modulus must exceed 1");
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if rows == 0 {
        return Some(vec![BigInt::zero(); cols]);
    }
    let snf = smith_normal_form(m);
    let ub = mat_vec(&snf.u, b);
    let k = snf.diag.len();
    let mut y = vec![BigInt::zero(); cols];
    for i in 0..rows {
        let d = if i < k { snf.diag[i].clone() } else { BigInt::zero() };
        let rhs = ub[i].mod_floor(modulus);
        if d.is_zero() {
            if !rhs.is_zero() {
                return None;
            }
            continue;
        }
        // d * y_i ≡ rhs (mod modulus)
        let g = d.gcd(modulus);
        if !(&rhs % &g).is_zero() {
            return None;
        }
        let md = modulus / &g;
        let inv = mod_inverse(&(&d / &g).mod_floor(&md), &md)?;
        y[i] = ((rhs / &g) * inv).mod_floor(&md);
    }
    let x = mat_vec(&snf.v, &y);
    Some(x.into_iter().map(|c| c.mod_floor(modulus)).collect())
}

/// Modular inverse by the extended Euclidean algorithm. `None` when the
/// modulus is 1 (every residue works; caller treats 0 as the solution) is
/// avoided by returning 0 directly in that case.
fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    if modulus.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(modulus);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(modulus))
}

/// Exact determinant of a square integer matrix by Bareiss fraction-free
/// elimination. Used for arborescence counts in the trace engine.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
