//! Compounded Jordan forms and singular value decompositions.
//!
//! Decompositions of a compound are never computed from scratch. They are
//! assembled from seed decompositions by Kronecker products and then checked
//! against their defining identities `M·S = S·J` and `M = U·Σ·Vᵀ`.

pub mod claim;
mod jacobi;
pub mod seeds;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, IntSquare, RealMatrix};

pub use claim::{parse_claim, spectrum_claim_check, ClaimParseError, SpectrumFactor};
pub use jacobi::{
    jacobi_singular_values, rank_floor, symmetric_eigenvalues, MAX_SWEEPS, OFF_DIAGONAL_RATIO,
};

/// Relative Frobenius tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Hadamard ratio below which an eigenvector matrix counts as singular.
pub const MIN_HADAMARD_RATIO: f64 = 1e-12;

/// Eigenvector matrix `s` and upper-triangular eigenvalue matrix `j`.
///
/// `j` need not be in standard Jordan layout: compounded systems carry
/// scaled chain entries off the superdiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    s: ComplexMatrix,
    j: ComplexMatrix,
}

impl EigenSystem {
    pub fn new(s: ComplexMatrix, j: ComplexMatrix) -> Result<Self> {
        if !s.is_square() || s.shape() != j.shape() {
            return Err(Error::ShapeMismatch {
                op: "eigen system",
                left: s.shape(),
                right: j.shape(),
            });
        }
        if !j.is_upper_triangular() {
            return Err(Error::InvalidArgument(
                "eigenvalue matrix is not upper triangular".into(),
            ));
        }
        let ratio = s.hadamard_ratio()?;
        if ratio <= MIN_HADAMARD_RATIO {
            return Err(Error::InvalidArgument(format!(
                "eigenvector matrix is numerically singular (Hadamard ratio {ratio:.3e})"
            )));
        }
        Ok(Self { s, j })
    }

    pub fn s(&self) -> &ComplexMatrix {
        &self.s
    }

    pub fn j(&self) -> &ComplexMatrix {
        &self.j
    }

    pub fn order(&self) -> usize {
        self.s.rows()
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.j.diagonal()
    }

    /// True iff every entry above the diagonal is zero except superdiagonal
    /// ones joining equal eigenvalues.
    pub fn is_standard_jordan(&self) -> bool {
        let n = self.order();
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        for i in 0..n {
            for k in i + 1..n {
                let x = self.j.get(i, k);
                if x == zero {
                    continue;
                }
                let chain = k == i + 1 && x == one && self.j.get(i, i) == self.j.get(k, k);
                if !chain {
                    return false;
                }
            }
        }
        true
    }
}

/// Orthogonal `u`, `v` and the diagonal of `Σ` in stored order.
#[derive(Debug, Clone, PartialEq)]
pub struct SvdSystem {
    u: RealMatrix,
    sigma: Vec<f64>,
    v: RealMatrix,
}

impl SvdSystem {
    /// Checks shapes and finiteness only; orthogonality and sign are the
    /// business of [`verify_svd`].
    pub fn new(u: RealMatrix, sigma: Vec<f64>, v: RealMatrix) -> Result<Self> {
        let n = sigma.len();
        if u.shape() != (n, n) || v.shape() != (n, n) {
            return Err(Error::ShapeMismatch {
                op: "svd system",
                left: u.shape(),
                right: v.shape(),
            });
        }
        if let Some(k) = sigma.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { row: k, col: k });
        }
        Ok(Self { u, sigma, v })
    }

    pub fn u(&self) -> &RealMatrix {
        &self.u
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn v(&self) -> &RealMatrix {
        &self.v
    }

    pub fn order(&self) -> usize {
        self.sigma.len()
    }

    /// Singular values, largest first.
    pub fn sorted_sigma(&self) -> Vec<f64> {
        let mut s = self.sigma.clone();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }

    pub fn reconstruct(&self) -> RealMatrix {
        let n = self.order();
        let us = RealMatrix::from_fn(n, n, |i, k| self.u.get(i, k) * self.sigma[k]);
        us.mul(&self.v.transpose())
            .expect("square factors of equal order")
    }
}

/// `D_E = diag[n, 0, …, 0]`, the eigenvalue matrix of `E_n` in any basis
/// whose first column is the all-ones vector.
pub fn ones_eigen(n: usize) -> ComplexMatrix {
    let diag: Vec<Complex64> = ones_svd(n)
        .into_iter()
        .map(|x| Complex64::new(x, 0.0))
        .collect();
    ComplexMatrix::from_diagonal(&diag)
}

/// `Σ_E = [n, 0, …, 0]`.
pub fn ones_svd(n: usize) -> Vec<f64> {
    let mut d = vec![0.0; n];
    if n > 0 {
        d[0] = n as f64;
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenVerdict {
    pub passes: bool,
    /// `‖M·S − S·J‖_F / max(1, ‖M‖_F)`.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SvdVerdict {
    pub passes: bool,
    /// `‖UᵀU − I‖_F`.
    pub u_orthogonality: f64,
    /// `‖VᵀV − I‖_F`.
    pub v_orthogonality: f64,
    /// `‖M − U·Σ·Vᵀ‖_F / max(1, ‖M‖_F)`.
    pub reconstruction: f64,
    pub sigma_nonnegative: bool,
}

fn require_positive(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn require_order(m: &IntSquare, n: usize, op: &'static str) -> Result<()> {
    if m.order() != n {
        return Err(Error::ShapeMismatch {
            op,
            left: (m.order(), m.order()),
            right: (n, n),
        });
    }
    Ok(())
}

fn scale_of(m: &IntSquare) -> f64 {
    m.frobenius_norm().max(1.0)
}

/// Relative residual of `M·S = S·J`.
pub fn eigen_residual(m: &ComplexMatrix, e: &EigenSystem) -> Result<f64> {
    let lhs = m.mul(&e.s)?;
    let rhs = e.s.mul(&e.j)?;
    Ok(lhs.sub(&rhs)?.frobenius_norm() / m.frobenius_norm().max(1.0))
}

pub fn verify_eigen(m: &IntSquare, e: &EigenSystem, tol: f64) -> Result<EigenVerdict> {
    require_positive(tol)?;
    require_order(m, e.order(), "verify_eigen")?;
    let residual = eigen_residual(&m.to_complex(), e)?;
    Ok(EigenVerdict {
        passes: residual <= tol,
        residual,
    })
}

fn orthogonality_defect(q: &RealMatrix) -> f64 {
    let n = q.rows();
    q.transpose()
        .mul(q)
        .and_then(|g| g.sub(&RealMatrix::identity(n)))
        .expect("square matrix")
        .frobenius_norm()
}

pub fn verify_svd(m: &IntSquare, s: &SvdSystem, tol: f64) -> Result<SvdVerdict> {
    require_positive(tol)?;
    require_order(m, s.order(), "verify_svd")?;
    let u_orthogonality = orthogonality_defect(&s.u);
    let v_orthogonality = orthogonality_defect(&s.v);
    let reconstruction = m.to_real().sub(&s.reconstruct())?.frobenius_norm() / scale_of(m);
    let sigma_nonnegative = s.sigma.iter().all(|&x| x >= 0.0);
    Ok(SvdVerdict {
        passes: u_orthogonality <= tol
            && v_orthogonality <= tol
            && reconstruction <= tol
            && sigma_nonnegative,
        u_orthogonality,
        v_orthogonality,
        reconstruction,
        sigma_nonnegative,
    })
}

fn checked(what: &str, passes: bool, residual: f64) -> Result<()> {
    if passes {
        Ok(())
    } else {
        Err(Error::Unverified {
            what: what.into(),
            residual,
        })
    }
}

/// Shared eigenvector matrix and the two eigenvalue matrices of a compound
/// pair `A = E_m ⊗ M_n`, `B = M_m ⊗ E_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundEigen {
    pub s: ComplexMatrix,
    pub j_a: ComplexMatrix,
    pub j_b: ComplexMatrix,
    pub m: usize,
    pub n: usize,
}

impl CompoundEigen {
    pub fn system_a(&self) -> Result<EigenSystem> {
        EigenSystem::new(self.s.clone(), self.j_a.clone())
    }

    pub fn system_b(&self) -> Result<EigenSystem> {
        EigenSystem::new(self.s.clone(), self.j_b.clone())
    }

    /// Eigen systems of the Euler-composed pair `(Mᴬ, Mᴮ)`.
    pub fn composed(&self) -> Result<(EigenSystem, EigenSystem)> {
        let (ja, jb) = compose_eigen_m(&self.j_a, &self.j_b, self.m, self.n)?;
        Ok((
            EigenSystem::new(self.s.clone(), ja)?,
            EigenSystem::new(self.s.clone(), jb)?,
        ))
    }
}

/// Verifies both seed systems, including `E·S = S·D_E`, then returns
/// `S_m ⊗ S_n`, `D_Em ⊗ J_n` and `J_m ⊗ D_En`.
pub fn compound_eigen(
    seed_m: &IntSquare,
    eig_m: &EigenSystem,
    seed_n: &IntSquare,
    eig_n: &EigenSystem,
    tol: f64,
) -> Result<CompoundEigen> {
    let (m, n) = (seed_m.order(), seed_n.order());
    for (seed, eig, label) in [
        (seed_m, eig_m, "order-m seed"),
        (seed_n, eig_n, "order-n seed"),
    ] {
        let v = verify_eigen(seed, eig, tol)?;
        checked(&format!("{label} eigen system"), v.passes, v.residual)?;
        let shared = EigenSystem::new(eig.s.clone(), ones_eigen(seed.order()))?;
        let v = verify_eigen(&IntSquare::ones(seed.order()), &shared, tol)?;
        checked(
            &format!("{label} shared ones eigenvectors"),
            v.passes,
            v.residual,
        )?;
    }
    Ok(CompoundEigen {
        s: eig_m.s.kron(&eig_n.s),
        j_a: ones_eigen(m).kron(&eig_n.j),
        j_b: eig_m.j.kron(&ones_eigen(n)),
        m,
        n,
    })
}

/// `J_MA = J_A + n²·J_B`, `J_MB = J_B + m²·J_A`.
pub fn compose_eigen_m(
    j_a: &ComplexMatrix,
    j_b: &ComplexMatrix,
    m: usize,
    n: usize,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let n2 = Complex64::new((n * n) as f64, 0.0);
    let m2 = Complex64::new((m * m) as f64, 0.0);
    Ok((j_a.add(&j_b.scale(n2))?, j_b.add(&j_a.scale(m2))?))
}

/// Shared `U`, `V` and the two singular value diagonals of a compound pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundSvd {
    pub u: RealMatrix,
    pub v: RealMatrix,
    pub sigma_a: Vec<f64>,
    pub sigma_b: Vec<f64>,
    pub m: usize,
    pub n: usize,
}

impl CompoundSvd {
    pub fn system_a(&self) -> Result<SvdSystem> {
        SvdSystem::new(self.u.clone(), self.sigma_a.clone(), self.v.clone())
    }

    pub fn system_b(&self) -> Result<SvdSystem> {
        SvdSystem::new(self.u.clone(), self.sigma_b.clone(), self.v.clone())
    }

    pub fn composed(&self) -> Result<(SvdSystem, SvdSystem)> {
        let (sa, sb) = compose_svd_m(&self.sigma_a, &self.sigma_b, self.m, self.n)?;
        Ok((
            SvdSystem::new(self.u.clone(), sa, self.v.clone())?,
            SvdSystem::new(self.u.clone(), sb, self.v.clone())?,
        ))
    }
}

/// Kronecker product of two diagonals.
pub fn kron_diagonal(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| a * b))
        .collect()
}

/// Verifies both seed SVDs, including `E = U·Σ_E·Vᵀ`, then returns
/// `U_m ⊗ U_n`, `V_m ⊗ V_n`, `Σ_Em ⊗ Σ_n` and `Σ_m ⊗ Σ_En`.
pub fn compound_svd(
    seed_m: &IntSquare,
    svd_m: &SvdSystem,
    seed_n: &IntSquare,
    svd_n: &SvdSystem,
    tol: f64,
) -> Result<CompoundSvd> {
    let (m, n) = (seed_m.order(), seed_n.order());
    for (seed, svd, label) in [
        (seed_m, svd_m, "order-m seed"),
        (seed_n, svd_n, "order-n seed"),
    ] {
        let v = verify_svd(seed, svd, tol)?;
        checked(&format!("{label} svd"), v.passes, v.reconstruction)?;
        let shared = SvdSystem::new(svd.u.clone(), ones_svd(seed.order()), svd.v.clone())?;
        let v = verify_svd(&IntSquare::ones(seed.order()), &shared, tol)?;
        checked(
            &format!("{label} shared ones svd"),
            v.passes,
            v.reconstruction,
        )?;
    }
    Ok(CompoundSvd {
        u: svd_m.u.kron(&svd_n.u),
        v: svd_m.v.kron(&svd_n.v),
        sigma_a: kron_diagonal(&ones_svd(m), &svd_n.sigma),
        sigma_b: kron_diagonal(&svd_m.sigma, &ones_svd(n)),
        m,
        n,
    })
}

/// `Σ_MA = Σ_A + n²·Σ_B`, `Σ_MB = Σ_B + m²·Σ_A`, the same coefficients as the
/// Euler composition itself.
pub fn compose_svd_m(
    sigma_a: &[f64],
    sigma_b: &[f64],
    m: usize,
    n: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if sigma_a.len() != sigma_b.len() {
        return Err(Error::ShapeMismatch {
            op: "compose_svd_m",
            left: (sigma_a.len(), sigma_a.len()),
            right: (sigma_b.len(), sigma_b.len()),
        });
    }
    let (n2, m2) = ((n * n) as f64, (m * m) as f64);
    let ma = sigma_a
        .iter()
        .zip(sigma_b)
        .map(|(a, b)| a + n2 * b)
        .collect();
    let mb = sigma_a
        .iter()
        .zip(sigma_b)
        .map(|(a, b)| b + m2 * a)
        .collect();
    Ok((ma, mb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lo_shu() -> IntSquare {
        IntSquare::from_array(&[[3, 8, 1], [2, 4, 6], [7, 0, 5]])
    }

    fn regular4() -> IntSquare {
        IntSquare::from_array(&[[4, 3, 15, 8], [10, 13, 1, 6], [9, 14, 2, 5], [7, 0, 12, 11]])
    }

    #[test]
    fn ones_diagonals() {
        assert_eq!(ones_svd(3), vec![3.0, 0.0, 0.0]);
        assert_eq!(ones_svd(1), vec![1.0]);
        assert_eq!(ones_eigen(4).diagonal()[0], Complex64::new(4.0, 0.0));
    }

    #[test]
    fn perturbed_eigenvalue_fails() {
        let good = seeds::lo_shu_eigen();
        assert!(
            verify_eigen(&lo_shu(), &good, DEFAULT_TOLERANCE)
                .unwrap()
                .passes
        );
        let mut d = good.j().diagonal();
        d[0] = Complex64::new(13.0, 0.0);
        let bad = EigenSystem::new(good.s().clone(), ComplexMatrix::from_diagonal(&d)).unwrap();
        assert!(
            !verify_eigen(&lo_shu(), &bad, DEFAULT_TOLERANCE)
                .unwrap()
                .passes
        );
    }

    #[test]
    fn negated_sigma_fails() {
        let good = seeds::lo_shu_svd();
        let mut sigma = good.sigma().to_vec();
        sigma[2] = -sigma[2];
        let bad = SvdSystem::new(good.u().clone(), sigma, good.v().clone()).unwrap();
        let v = verify_svd(&lo_shu(), &bad, DEFAULT_TOLERANCE).unwrap();
        assert!(!v.passes && !v.sigma_nonnegative);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(verify_eigen(&lo_shu(), &seeds::lo_shu_eigen(), 0.0).is_err());
        assert!(verify_svd(&lo_shu(), &seeds::lo_shu_svd(), -1.0).is_err());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert!(verify_eigen(&regular4(), &seeds::lo_shu_eigen(), 1e-9).is_err());
    }

    #[test]
    fn singular_eigenvectors_rejected() {
        let s = ComplexMatrix::zeros(2, 2);
        assert!(EigenSystem::new(s, ComplexMatrix::zeros(2, 2)).is_err());
        let lower = RealMatrix::from_rows(&[[1.0, 0.0], [1.0, 1.0]])
            .unwrap()
            .to_complex();
        assert!(EigenSystem::new(ComplexMatrix::identity(2), lower).is_err());
    }

    #[test]
    fn jordan_layout_detection() {
        assert!(seeds::regular4_eigen().is_standard_jordan());
        assert!(seeds::lo_shu_eigen().is_standard_jordan());
        let c = compound_eigen(
            &regular4(),
            &seeds::regular4_eigen(),
            &lo_shu(),
            &seeds::lo_shu_eigen(),
            DEFAULT_TOLERANCE,
        )
        .unwrap();
        assert!(!c.system_b().unwrap().is_standard_jordan());
    }

    #[test]
    fn compose_svd_coefficients() {
        let (ma, mb) = compose_svd_m(&[1.0, 0.0], &[0.0, 1.0], 2, 3).unwrap();
        assert_eq!(ma, vec![1.0, 9.0]);
        assert_eq!(mb, vec![4.0, 1.0]);
        let (ma, _) = compose_svd_m(&[5.0, 2.0], &[0.0, 0.0], 3, 3).unwrap();
        assert_eq!(ma, vec![5.0, 2.0]);
        assert!(compose_svd_m(&[1.0], &[1.0, 2.0], 1, 1).is_err());
    }

    #[test]
    fn kron_diagonal_layout() {
        assert_eq!(
            kron_diagonal(&[1.0, 2.0], &[3.0, 5.0]),
            vec![3.0, 5.0, 6.0, 10.0]
        );
    }

    #[test]
    fn reconstruct_seed() {
        let r = seeds::regular4_svd().reconstruct();
        let diff = regular4().to_real().sub(&r).unwrap().frobenius_norm();
        assert!(diff < 1e-12);
    }
}
