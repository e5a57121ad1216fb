use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::linalg::int_square::IntSquare;
use crate::linalg::poly::BigPoly;

/// Exact characteristic polynomial `det(λI − M)` by the Faddeev-LeVerrier
/// recurrence, carried out entirely in big integers.
///
/// With `N₁ = I`, each step forms `A_k = M·N_k`, sets
/// `c_{n−k} = −tr(A_k)/k` and `N_{k+1} = A_k + c_{n−k}·I`. The division by `k`
/// is always exact for integer matrices; a nonzero remainder would mean the
/// arithmetic is broken, so it panics.
pub fn charpoly_exact(m: &IntSquare) -> BigPoly {
    let n = m.order();
    let a: Vec<BigInt> = m.entries().iter().map(|&x| BigInt::from(x)).collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();

    let mut nk = identity(n);
    for k in 1..=n {
        let mut ak = matmul(&a, &nk, n);
        let trace: BigInt = (0..n).map(|i| &ak[i * n + i]).sum();
        let (quot, rem) = trace.div_rem(&BigInt::from(k));
        assert!(
            rem.is_zero(),
            "Faddeev-LeVerrier: trace {trace} not divisible by {k}"
        );
        let c = -quot;
        for i in 0..n {
            ak[i * n + i] += &c;
        }
        coeffs[n - k] = c;
        nk = ak;
    }
    // After n steps nk = M·N_n + c_0·I, which Cayley-Hamilton forces to zero.
    debug_assert!(nk.iter().all(Zero::is_zero));
    BigPoly::new(coeffs)
}

fn identity(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        out[i * n + i] = BigInt::one();
    }
    out
}

fn matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: Leibniz expansion of `det(λI − M)` over all
    /// permutations with polynomial entries.
    fn charpoly_by_permutations(m: &IntSquare) -> BigPoly {
        let n = m.order();
        let entry = |i: usize, j: usize| {
            let c = BigPoly::from_i64(&[-m.get(i, j)]);
            if i == j {
                c.add(&BigPoly::monomial(1))
            } else {
                c
            }
        };
        let mut total = BigPoly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut term = BigPoly::one();
            for (i, &j) in p.iter().enumerate() {
                term = term.mul(&entry(i, j));
            }
            if parity(p) {
                total = total.sub(&term);
            } else {
                total = total.add(&term);
            }
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    /// True for odd permutations.
    fn parity(p: &[usize]) -> bool {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    #[test]
    fn lo_shu_matches_oracle_and_frozen_value() {
        let m = IntSquare::from_array(&[[3, 8, 1], [2, 4, 6], [7, 0, 5]]);
        let oracle = charpoly_by_permutations(&m);
        // frozen from the permutation oracle
        assert_eq!(oracle, BigPoly::from_i64(&[-288, 24, -12, 1]));
        assert_eq!(charpoly_exact(&m), oracle);
        assert_eq!(oracle, BigPoly::linear(12).mul(&BigPoly::quadratic(24)));
    }

    #[test]
    fn ones_and_zero() {
        assert_eq!(
            charpoly_exact(&IntSquare::ones(3)),
            BigPoly::monomial(2).mul(&BigPoly::linear(3))
        );
        assert_eq!(charpoly_exact(&IntSquare::zeros(2)), BigPoly::monomial(2));
        assert_eq!(
            charpoly_exact(&IntSquare::from_array(&[[7]])),
            BigPoly::linear(7)
        );
    }

    #[test]
    fn order_four_and_five_agree_with_oracle() {
        let m4 =
            IntSquare::from_array(&[[4, 3, 15, 8], [10, 13, 1, 6], [9, 14, 2, 5], [7, 0, 12, 11]]);
        assert_eq!(charpoly_exact(&m4), charpoly_by_permutations(&m4));
        let m5 = IntSquare::from_array(&[
            [1, -2, 0, 5, 3],
            [4, 0, -7, 1, 1],
            [2, 2, 2, -9, 0],
            [0, 6, 1, 1, -4],
            [-3, 1, 8, 0, 2],
        ]);
        assert_eq!(charpoly_exact(&m5), charpoly_by_permutations(&m5));
    }

    #[test]
    fn triangular_eigenvalues_are_roots() {
        let m = IntSquare::from_array(&[[2, 5, -1], [0, -3, 4], [0, 0, 7]]);
        let p = charpoly_exact(&m);
        for root in [2, -3, 7] {
            assert!(p.eval(&BigInt::from(root)).is_zero());
        }
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.leading_coefficient(), Some(&BigInt::one()));
    }
}
