//! Exact rational linear algebra for small dense systems.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::free::Coeff;

pub type Matrix = Vec<Vec<Coeff>>;

fn transpose(a: &Matrix, cols: usize) -> Matrix {
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

fn mat_vec(a: &Matrix, x: &[Coeff]) -> Vec<Coeff> {
    a.iter().map(|row| row.iter().zip(x).map(|(r, v)| r * v).fold(Coeff::zero(), |acc, t| acc + t)).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).fold(Coeff::zero(), |acc, t| acc + t))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (pivot_row, target) = if r < row {
                    let (lo, hi) = m.split_at_mut(row);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[row], &mut hi[0])
                };
                for (t, p) in target.iter_mut().zip(pivot_row) {
                    *t -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Minimal-norm exact solution of `a x = b` (`a` is `rows x cols`), or
/// `None` when the system is inconsistent. With full column rank this is
/// the unique solution.
pub fn solve_min_norm(a: &Matrix, b: &[Coeff], cols: usize) -> Option<Vec<Coeff>> {
    let mut aug: Matrix = a.iter().zip(b).map(|(row, v)| row.iter().cloned().chain([v.clone()]).collect()).collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    // particular solution with free variables at zero
    let mut particular = alloc::vec![Coeff::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Some(particular);
    }
    // null space basis, one vector per free column
    let null: Vec<Vec<Coeff>> = free
        .iter()
        .map(|&f| {
            let mut v = alloc::vec![Coeff::zero(); cols];
            v[f] = Coeff::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -aug[r][f].clone();
            }
            v
        })
        .collect();
    // minimize |x_p + N t|: (N^T N) t = -N^T x_p
    let k = null.len();
    let gram: Matrix = (0..k)
        .map(|i| (0..k).map(|j| dot(&null[i], &null[j])).collect())
        .collect();
    let rhs: Vec<Coeff> = null.iter().map(|v| -dot(v, &particular)).collect();
    let t = solve_min_norm(&gram, &rhs, k)?;
    let mut x = particular;
    for (ti, v) in t.iter().zip(&null) {
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += ti * vi;
        }
    }
    Some(x)
}

/// Minimal-norm least-squares solution; always exists.
pub fn least_squares(a: &Matrix, b: &[Coeff], cols: usize) -> Vec<Coeff> {
    let at = transpose(a, cols);
    let ata = mat_mul(&at, a, a.len(), cols);
    let atb = mat_vec(&at, b);
    solve_min_norm(&ata, &atb, cols).expect("normal equations are consistent")
}

pub fn dot(x: &[Coeff], y: &[Coeff]) -> Coeff {
    x.iter().zip(y).map(|(a, b)| a * b).fold(Coeff::zero(), |acc, t| acc + t)
}

pub fn apply(a: &Matrix, x: &[Coeff]) -> Vec<Coeff> {
    mat_vec(a, x)
}
