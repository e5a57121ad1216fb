//! Closed-form Jordan and singular value decompositions of the two seed
//! squares (Lo-Shu and the regular order-4 square), evaluated in `f64`.

use num_complex::Complex64;

use crate::linalg::{ComplexMatrix, RealMatrix};
use crate::spectral::{EigenSystem, SvdSystem};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

/// Eigenvector matrix `S₃` of the Lo-Shu square. All eigenvectors simple.
pub fn s3() -> ComplexMatrix {
    let r6 = sqrt(6.0);
    ComplexMatrix::from_rows(&[
        [c(1.0, 0.0), c(8.0, r6), c(8.0, -r6)],
        [c(1.0, 0.0), c(-4.0, 2.0 * r6), c(-4.0, -2.0 * r6)],
        [c(1.0, 0.0), c(-4.0, -3.0 * r6), c(-4.0, 3.0 * r6)],
    ])
    .expect("finite constant")
}

/// `diag[12, 2i√6, −2i√6]`.
pub fn d_m3() -> ComplexMatrix {
    let r6 = sqrt(6.0);
    ComplexMatrix::from_diagonal(&[c(12.0, 0.0), c(0.0, 2.0 * r6), c(0.0, -2.0 * r6)])
}

/// Eigenvector matrix `S₄` of the regular order-4 seed; the last three
/// columns form a Jordan chain for the eigenvalue 0.
pub fn s4() -> ComplexMatrix {
    RealMatrix::from_rows(&[
        [1.0, 48.0, -14.0, 3.0],
        [1.0, -16.0, 10.0, -1.0],
        [1.0, 16.0, 6.0, -1.0],
        [1.0, -48.0, -2.0, -1.0],
    ])
    .expect("finite constant")
    .to_complex()
}

/// `J₄`: eigenvalue 30 plus a nilpotent block of size 3.
pub fn j4() -> ComplexMatrix {
    RealMatrix::from_rows(&[
        [30.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0],
    ])
    .expect("finite constant")
    .to_complex()
}

pub fn u3() -> RealMatrix {
    let (r2, r3, r6) = (sqrt(2.0), sqrt(3.0), sqrt(6.0));
    RealMatrix::from_rows(&[
        [r3 / 3.0, r2 / 2.0, r6 / 6.0],
        [r3 / 3.0, 0.0, -r6 / 3.0],
        [r3 / 3.0, -r2 / 2.0, r6 / 6.0],
    ])
    .expect("finite constant")
}

pub fn v3() -> RealMatrix {
    let (r2, r3, r6) = (sqrt(2.0), sqrt(3.0), sqrt(6.0));
    RealMatrix::from_rows(&[
        [r3 / 3.0, -r6 / 6.0, r2 / 2.0],
        [r3 / 3.0, r6 / 3.0, 0.0],
        [r3 / 3.0, -r6 / 6.0, -r2 / 2.0],
    ])
    .expect("finite constant")
}

/// `[12, 4√3, 2√3]`
pub fn sigma_m3() -> Vec<f64> {
    let r3 = sqrt(3.0);
    vec![12.0, 4.0 * r3, 2.0 * r3]
}

pub fn u4() -> RealMatrix {
    let r5 = sqrt(5.0);
    RealMatrix::from_rows(&[
        [5.0, -5.0, 3.0 * r5, r5],
        [5.0, 5.0, -r5, 3.0 * r5],
        [5.0, 5.0, r5, -3.0 * r5],
        [5.0, -5.0, -3.0 * r5, -r5],
    ])
    .expect("finite constant")
    .scale(0.1)
}

pub fn v4() -> RealMatrix {
    let r5 = sqrt(5.0);
    RealMatrix::from_rows(&[
        [5.0, r5, -5.0, -3.0 * r5],
        [5.0, 3.0 * r5, 5.0, r5],
        [5.0, -3.0 * r5, 5.0, -r5],
        [5.0, -r5, -5.0, 3.0 * r5],
    ])
    .expect("finite constant")
    .scale(0.1)
}

/// `[30, 8√5, 2√5, 0]`
pub fn sigma_4() -> Vec<f64> {
    let r5 = sqrt(5.0);
    vec![30.0, 8.0 * r5, 2.0 * r5, 0.0]
}

pub fn lo_shu_eigen() -> EigenSystem {
    EigenSystem::new(s3(), d_m3()).expect("valid seed decomposition")
}

pub fn regular4_eigen() -> EigenSystem {
    EigenSystem::new(s4(), j4()).expect("valid seed decomposition")
}

pub fn lo_shu_svd() -> SvdSystem {
    SvdSystem::new(u3(), sigma_m3(), v3()).expect("valid seed decomposition")
}

pub fn regular4_svd() -> SvdSystem {
    SvdSystem::new(u4(), sigma_4(), v4()).expect("valid seed decomposition")
}
