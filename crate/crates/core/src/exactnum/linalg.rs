use super::ExactField;
use crate::error::{Error, Result};

/// Reduced row echelon form in place; returns pivot columns.
fn rref<F: ExactField>(a: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = F::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..a[i].len() {
                    let v = a[i][j].clone() - factor.clone() * a[r][j].clone();
                    a[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a x = b` exactly for square invertible `a`.
pub fn solve_linear<F: ExactField>(a: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(format!(
            "system must be square with matching right-hand side (got {} rows, rhs {})",
            n,
            b.len()
        )));
    }
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Err(Error::Singular { rank: pivots.len(), size: n });
    }
    Ok(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Determinant by exact Gaussian elimination over a field.
pub fn determinant<F: ExactField>(a: &[Vec<F>]) -> Result<F> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let mut work = a.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !work[i][c].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            work.swap(p, c);
            det = -det;
        }
        let pivot = work[c][c].clone();
        det = det * pivot.clone();
        for i in c + 1..n {
            if !work[i][c].is_zero() {
                let factor = work[i][c].clone() / pivot.clone();
                let (upper, lower) = work.split_at_mut(i);
                for (x, p) in lower[0][c..].iter_mut().zip(&upper[c][c..]) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
    }
    Ok(det)
}

pub fn rank<F: ExactField>(a: &[Vec<F>]) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut work = a.to_vec();
    rref(&mut work, cols).len()
}

/// Basis of the right nullspace `{x : a x = 0}`.
pub fn nullspace<F: ExactField>(a: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut work = a.to_vec();
    let pivots = rref(&mut work, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![F::zero(); cols];
            x[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -work[row][f].clone();
            }
            x
        })
        .collect()
}
