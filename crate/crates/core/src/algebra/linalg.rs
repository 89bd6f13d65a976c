//! Small exact linear algebra over the rationals: Gaussian elimination for
//! solving systems and computing kernels of desk-scale matrices.

use num_traits::Zero;

use super::rational::Rational;

/// Reduced row echelon form; returns pivot column per row.
fn rref(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let pivot_row = (r..rows).find(|&i| !mat[i][c].is_zero());
        let Some(p) = pivot_row else { continue };
        mat.swap(r, p);
        let inv = mat[r][c].clone().recip();
        for j in c..cols {
            let v = mat[r][j].clone() * &inv;
            mat[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let v = mat[i][j].clone() - mat[r][j].clone() * &f;
                    mat[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Solves `A x = b` exactly; `None` when inconsistent. When the solution is
/// not unique, free variables are set to zero.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { return Some(Vec::new()) } else { a[0].len() };
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent when a pivot lands in the rhs column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Basis of the null space of `A` (vectors `v` with `A v = 0`).
pub fn kernel_basis(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Rational::zero(); cols];
        v[fc] = Rational::from_integer(1.into());
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][fc].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn solve_and_kernel() {
        // x + y = 3, x - y = 1 -> (2, 1)
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let b = vec![rat(3, 1), rat(1, 1)];
        assert_eq!(solve_linear(&a, &b).unwrap(), vec![rat(2, 1), rat(1, 1)]);

        // Inconsistent system.
        let b2 = vec![rat(1, 1), rat(1, 1)];
        let a2 = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        assert!(solve_linear(&a2, &b2).is_none());

        // Kernel of (1, 1): spanned by (-1, 1).
        let k = kernel_basis(&[vec![rat(1, 1), rat(1, 1)]]);
        assert_eq!(k, vec![vec![rat(-1, 1), rat(1, 1)]]);
    }
}
