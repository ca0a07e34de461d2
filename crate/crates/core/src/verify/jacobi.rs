//! Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// Sweep cap; convergence is quadratic, so this is never reached in practice.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm at which iteration stops, relative to
/// `max(1, ‖M‖_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigenvalues of the symmetric matrix `m`, sorted non-increasingly.
///
/// Only the lower triangle's mirror is assumed; a non-square input is a
/// parameter error.
pub fn symmetric_eigenvalues(m: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Parameter("matrix is not square".into()));
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let frob = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = OFF_DIAGONAL_TOL * frob.max(1.0);
    let off = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) >= target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] != 0.0 {
                    rotate(&mut a, p, q);
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

/// One Jacobi rotation zeroing `a[p][q]`.
fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let n = a.len();
    let apq = a[p][q];
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    // smaller root of t² + 2θt − 1 = 0, for stability
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let ev = symmetric_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((ev[0] - 3.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_and_empty() {
        let ev = symmetric_eigenvalues(&[vec![1.0, 0.0], vec![0.0, 5.0]]).unwrap();
        assert_eq!(ev, vec![5.0, 1.0]);
        assert!(symmetric_eigenvalues(&[]).unwrap().is_empty());
        assert!(symmetric_eigenvalues(&[vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn trace_is_preserved() {
        let m: Vec<Vec<f64>> = (0..6)
            .map(|i| (0..6).map(|j| ((i * 7 + j * 7 + i * j) % 5) as f64 - 2.0).collect())
            .collect();
        let ev = symmetric_eigenvalues(&m).unwrap();
        let tr: f64 = (0..6).map(|i| m[i][i]).sum();
        assert!((ev.iter().sum::<f64>() - tr).abs() < 1e-10);
        assert!(ev.windows(2).all(|w| w[0] >= w[1]));
    }
}
