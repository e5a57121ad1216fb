//! Structural predicates on integer squares.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntSquare;

/// Summation index `n(n²−1)/2` of a natural square with entries `0..n²`.
pub fn magic_sum(n: usize) -> i128 {
    let n = n as i128;
    n * (n * n - 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MagicVerdict {
    pub is_semi_magic: bool,
    pub is_magic: bool,
    /// Common line sum; present whenever the square is semi-magic.
    pub summation_index: Option<i128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularVerdict {
    pub is_regular: bool,
    /// The constant `c` with `M + R·M·R = c·E`, present when regular.
    pub constant: Option<i128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Commutation {
    pub commutes: bool,
    /// `c` when `A·B = c·E`.
    pub product_scalar: Option<i64>,
}

/// Full property profile of one square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub summation_index: Option<i128>,
    pub is_semi_magic: bool,
    pub is_magic: bool,
    pub is_natural: bool,
    pub is_regular: bool,
    pub is_pandiagonal: bool,
    pub regular_constant: Option<i128>,
}

impl PropertyReport {
    pub fn of(m: &IntSquare) -> Self {
        let magic = check_magic(m);
        let regular = check_regular(m);
        Self {
            order: m.order(),
            summation_index: magic.summation_index,
            is_semi_magic: magic.is_semi_magic,
            is_magic: magic.is_magic,
            is_natural: check_natural(m),
            is_regular: regular.is_regular,
            is_pandiagonal: check_pandiagonal(m),
            regular_constant: regular.constant,
        }
    }
}

fn row_sums(m: &IntSquare) -> impl Iterator<Item = i128> + '_ {
    m.rows().map(|r| r.iter().map(|&x| i128::from(x)).sum())
}

fn col_sums(m: &IntSquare) -> impl Iterator<Item = i128> + '_ {
    let n = m.order();
    (0..n).map(move |j| (0..n).map(|i| i128::from(m.get(i, j))).sum())
}

/// Rows and columns share one sum (semi-magic); magic additionally needs both
/// main diagonals to hit it.
pub fn check_magic(m: &IntSquare) -> MagicVerdict {
    let target = row_sums(m).next().expect("order >= 1");
    let semi = row_sums(m).all(|s| s == target) && col_sums(m).all(|s| s == target);
    if !semi {
        return MagicVerdict {
            is_semi_magic: false,
            is_magic: false,
            summation_index: None,
        };
    }
    MagicVerdict {
        is_semi_magic: true,
        is_magic: m.trace() == target && m.cross_trace() == target,
        summation_index: Some(target),
    }
}

pub fn is_magic(m: &IntSquare) -> bool {
    check_magic(m).is_magic
}

/// Entries are exactly `0, 1, …, n²−1`.
pub fn check_natural(m: &IntSquare) -> bool {
    let len = m.entries().len();
    let mut seen = vec![false; len];
    for &x in m.entries() {
        let Ok(idx) = usize::try_from(x) else {
            return false;
        };
        if idx >= len || seen[idx] {
            return false;
        }
        seen[idx] = true;
    }
    true
}

/// `M + R·M·R = (2μ/n)·E`. Non-magic input is simply not regular.
pub fn check_regular(m: &IntSquare) -> RegularVerdict {
    let not = RegularVerdict {
        is_regular: false,
        constant: None,
    };
    let Some(mu) = check_magic(m).summation_index.filter(|_| is_magic(m)) else {
        return not;
    };
    let n = m.order();
    let c = i128::from(m.get(0, 0)) + i128::from(m.get(n - 1, n - 1));
    let symmetric = (0..n).all(|i| {
        (0..n).all(|j| i128::from(m.get(i, j)) + i128::from(m.get(n - 1 - i, n - 1 - j)) == c)
    });
    if symmetric && c * n as i128 == 2 * mu {
        RegularVerdict {
            is_regular: true,
            constant: Some(c),
        }
    } else {
        not
    }
}

/// Magic, and every broken diagonal in both directions sums to the
/// summation index: `Σᵢ M(i, (i+k) mod n)` and `Σᵢ M(i, (k−i) mod n)`.
pub fn check_pandiagonal(m: &IntSquare) -> bool {
    let verdict = check_magic(m);
    let Some(mu) = verdict.summation_index.filter(|_| verdict.is_magic) else {
        return false;
    };
    let n = m.order();
    (0..n).all(|k| {
        let down: i128 = (0..n).map(|i| i128::from(m.get(i, (i + k) % n))).sum();
        let up: i128 = (0..n).map(|i| i128::from(m.get(i, (k + n - i) % n))).sum();
        down == mu && up == mu
    })
}

fn same_order(a: &IntSquare, b: &IntSquare, op: &'static str) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::ShapeMismatch {
            op,
            left: (a.order(), a.order()),
            right: (b.order(), b.order()),
        });
    }
    Ok(())
}

/// Every pair `(A(i,j), B(i,j))` occurs at most once.
pub fn check_orthogonal_pair(a: &IntSquare, b: &IntSquare) -> Result<bool> {
    same_order(a, b, "orthogonal pair")?;
    let mut seen = HashSet::with_capacity(a.entries().len());
    Ok(a.entries()
        .iter()
        .zip(b.entries())
        .all(|pair| seen.insert(pair)))
}

pub fn check_commute(a: &IntSquare, b: &IntSquare) -> Result<Commutation> {
    same_order(a, b, "commute")?;
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    Ok(Commutation {
        commutes: ab == ba,
        product_scalar: ab.constant_value(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lo_shu() -> IntSquare {
        IntSquare::from_array(&[[3, 8, 1], [2, 4, 6], [7, 0, 5]])
    }

    #[test]
    fn magic_sums() {
        assert_eq!(magic_sum(1), 0);
        assert_eq!(magic_sum(3), 12);
        assert_eq!(magic_sum(4), 30);
        assert_eq!(magic_sum(81), 265_680);
    }

    #[test]
    fn semi_magic_without_diagonals() {
        let r2 = IntSquare::flip(2);
        let v = check_magic(&r2);
        assert!(v.is_semi_magic);
        assert!(!v.is_magic);
        assert_eq!(v.summation_index, Some(1));
    }

    #[test]
    fn not_semi_magic() {
        let m = IntSquare::from_array(&[[1, 2], [3, 4]]);
        let v = check_magic(&m);
        assert!(!v.is_semi_magic && !v.is_magic);
        assert_eq!(v.summation_index, None);
    }

    #[test]
    fn lo_shu_profile() {
        let r = PropertyReport::of(&lo_shu());
        assert!(r.is_magic && r.is_natural && r.is_regular);
        assert!(!r.is_pandiagonal);
        assert_eq!(r.summation_index, Some(12));
        assert_eq!(r.regular_constant, Some(8));
    }

    #[test]
    fn lo_shu_broken_diagonals_enumerated() {
        // Oracle: list the six broken diagonals by hand-written coordinates.
        let m = lo_shu();
        let down = [
            [(0, 0), (1, 1), (2, 2)],
            [(0, 1), (1, 2), (2, 0)],
            [(0, 2), (1, 0), (2, 1)],
        ];
        let up = [
            [(0, 0), (1, 2), (2, 1)],
            [(0, 1), (1, 0), (2, 2)],
            [(0, 2), (1, 1), (2, 0)],
        ];
        let sums: Vec<i64> = down
            .iter()
            .chain(up.iter())
            .map(|d| d.iter().map(|&(i, j)| m.get(i, j)).sum())
            .collect();
        assert_eq!(sums, vec![12, 21, 3, 9, 15, 12]);
        assert!(!check_pandiagonal(&m));
    }

    #[test]
    fn single_cell_is_natural() {
        let m = IntSquare::from_array(&[[0]]);
        assert!(check_natural(&m));
        assert!(!check_natural(&IntSquare::from_array(&[[1]])));
        assert!(!check_natural(&IntSquare::from_array(&[[0, -1], [2, 3]])));
    }

    #[test]
    fn regular_requires_magic() {
        let m = IntSquare::from_array(&[[1, 2], [3, 4]]);
        // symmetric pairs sum to 5 everywhere, but it is not magic
        assert!(!check_regular(&m).is_regular);
    }

    #[test]
    fn orthogonal_and_commute_errors() {
        let a = IntSquare::ones(2);
        let b = IntSquare::ones(3);
        assert!(check_orthogonal_pair(&a, &b).is_err());
        assert!(check_commute(&a, &b).is_err());
        // distinct entries pair uniquely with anything; repeated ones cannot
        assert!(check_orthogonal_pair(&lo_shu(), &lo_shu()).unwrap());
        let e = IntSquare::ones(3);
        assert!(!check_orthogonal_pair(&e, &e).unwrap());
    }

    #[test]
    fn rotation_pair_commutes() {
        let m = lo_shu();
        let c = check_commute(&m, &m.rotate_half_turn()).unwrap();
        assert!(c.commutes);
        assert_eq!(c.product_scalar, None);
    }
}
