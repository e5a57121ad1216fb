//! Cyclic Jacobi diagonalization of symmetric matrices, used as the
//! singular-value oracle through `M·Mᵀ`.

use crate::error::{Error, Result};
use crate::linalg::{IntSquare, RealMatrix};

/// Sweep limit before reporting non-convergence.
pub const MAX_SWEEPS: usize = 100;

/// Iteration stops once the squared off-diagonal Frobenius mass is at most
/// this fraction of `‖A‖_F²`.
pub const OFF_DIAGONAL_RATIO: f64 = 1e-24;

/// Eigenvalues of a symmetric matrix, unsorted, by cyclic Jacobi rotations
/// in fixed row-major pivot order.
pub fn symmetric_eigenvalues(a: &RealMatrix) -> Result<Vec<f64>> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch {
            op: "jacobi",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let n = a.rows();
    let mut w = a.data().to_vec();
    for i in 0..n {
        for j in 0..i {
            if w[i * n + j] != w[j * n + i] {
                return Err(Error::InvalidArgument(
                    "jacobi input is not symmetric".into(),
                ));
            }
        }
    }

    let total: f64 = w.iter().map(|x| x * x).sum();
    let threshold = OFF_DIAGONAL_RATIO * total;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&w, n) <= threshold {
            return Ok((0..n).map(|i| w[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut w, n, p, q);
            }
        }
    }
    if off_diagonal_mass(&w, n) <= threshold {
        return Ok((0..n).map(|i| w[i * n + i]).collect());
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

/// `n·ε·‖A‖_F`: eigenvalues of a PSD matrix below this are roundoff.
pub fn rank_floor(a: &RealMatrix) -> f64 {
    a.rows() as f64 * f64::EPSILON * a.frobenius_norm()
}

fn off_diagonal_mass(w: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += w[i * n + j] * w[i * n + j];
            }
        }
    }
    s
}

/// One Jacobi rotation annihilating `w[p][q]`.
fn rotate(w: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = w[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = w[p * n + p];
    let aqq = w[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        let akp = w[k * n + p];
        let akq = w[k * n + q];
        w[k * n + p] = c * akp - s * akq;
        w[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = w[p * n + k];
        let aqk = w[q * n + k];
        w[p * n + k] = c * apk - s * aqk;
        w[q * n + k] = s * apk + c * aqk;
    }
    w[p * n + q] = 0.0;
    w[q * n + p] = 0.0;
}

/// Singular values of `M`, largest first.
///
/// `M·Mᵀ` is formed exactly in integers and diagonalized by Jacobi.
/// Eigenvalues at or below [`rank_floor`] are set to zero before the square
/// root; the rest are clamped at zero.
pub fn jacobi_singular_values(m: &IntSquare) -> Result<Vec<f64>> {
    let gram = m.mul(&m.transpose())?.to_real();
    let floor = rank_floor(&gram);
    let mut values: Vec<f64> = symmetric_eigenvalues(&gram)?
        .into_iter()
        .map(|x| if x <= floor { 0.0 } else { x.sqrt() })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn two_by_two_closed_form() {
        // eigenvalues of [[2,1],[1,2]] are 3 and 1
        let a = RealMatrix::from_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        let mut ev = symmetric_eigenvalues(&a).unwrap();
        ev.sort_by(f64::total_cmp);
        assert!(close(ev[0], 1.0, 1e-14) && close(ev[1], 3.0, 1e-14));
    }

    #[test]
    fn trace_is_preserved() {
        let a = RealMatrix::from_rows(&[
            [4.0, 1.0, -2.0, 2.0],
            [1.0, 2.0, 0.0, 1.0],
            [-2.0, 0.0, 3.0, -2.0],
            [2.0, 1.0, -2.0, -1.0],
        ])
        .unwrap();
        let ev = symmetric_eigenvalues(&a).unwrap();
        assert!(close(ev.iter().sum::<f64>(), a.trace(), 1e-12));
        let sq: f64 = ev.iter().map(|x| x * x).sum();
        assert!(close(sq, a.frobenius_norm().powi(2), 1e-10));
    }

    #[test]
    fn rejects_asymmetric() {
        let a = RealMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert!(symmetric_eigenvalues(&a).is_err());
    }

    #[test]
    fn ones_matrix_singular_values() {
        let sv = jacobi_singular_values(&IntSquare::ones(3)).unwrap();
        assert!(close(sv[0], 3.0, 1e-12));
        assert_eq!(&sv[1..], &[0.0, 0.0]);
    }

    #[test]
    fn lo_shu_singular_values() {
        let m = IntSquare::from_array(&[[3, 8, 1], [2, 4, 6], [7, 0, 5]]);
        let sv = jacobi_singular_values(&m).unwrap();
        let expected = [12.0, 4.0 * 3f64.sqrt(), 2.0 * 3f64.sqrt()];
        for (a, b) in sv.iter().zip(expected) {
            assert!(close(*a, b, 1e-9 * b), "{a} vs {b}");
        }
    }

    #[test]
    fn diagonal_input_needs_no_sweeps() {
        let a = RealMatrix::from_diagonal(&[5.0, -1.0, 0.0]);
        assert_eq!(symmetric_eigenvalues(&a).unwrap(), vec![5.0, -1.0, 0.0]);
    }
}
