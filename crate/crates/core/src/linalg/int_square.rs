use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::dense::{ComplexMatrix, RealMatrix};
use num_complex::Complex64;

/// Square matrix of `i64` entries stored row-major.
///
/// All arithmetic is checked: a result that does not fit in `i64` is
/// reported as [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSquare {
    order: usize,
    entries: Vec<i64>,
}

impl IntSquare {
    pub fn new(order: usize, entries: Vec<i64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidDimensions("order must be at least 1".into()));
        }
        if entries.len() != order * order {
            return Err(Error::InvalidDimensions(format!(
                "order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::InvalidDimensions(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(order, entries)
    }

    /// Builds a square from a fixed-size array constant.
    pub fn from_array<const N: usize>(rows: &[[i64; N]; N]) -> Self {
        Self::from_rows(rows).expect("array constants are square")
    }

    pub(crate) fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        assert!(order > 0, "order must be at least 1");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| 0)
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix `E_n`.
    pub fn ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    /// The cross-diagonal exchange matrix `R_n`.
    pub fn flip(order: usize) -> Self {
        Self::from_fn(order, |i, j| i64::from(i + j + 1 == order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.order)
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    fn check_same_order(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.order != other.order {
            return Err(Error::ShapeMismatch {
                op,
                left: (self.order, self.order),
                right: (other.order, other.order),
            });
        }
        Ok(())
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        let p = other.order;
        let order = self
            .order
            .checked_mul(p)
            .ok_or(Error::Overflow { op: "kron" })?;
        let mut entries = vec![0i64; order * order];
        for i in 0..self.order {
            for j in 0..self.order {
                let a = self.get(i, j);
                for k in 0..p {
                    let row = (i * p + k) * order + j * p;
                    for l in 0..p {
                        entries[row + l] = a
                            .checked_mul(other.get(k, l))
                            .ok_or(Error::Overflow { op: "kron" })?;
                    }
                }
            }
        }
        Ok(Self { order, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other, "multiply")?;
        let n = self.order;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a
                        .checked_mul(other.get(k, j))
                        .ok_or(Error::Overflow { op: "multiply" })?;
                    let slot = &mut entries[i * n + j];
                    *slot = slot
                        .checked_add(prod)
                        .ok_or(Error::Overflow { op: "multiply" })?;
                }
            }
        }
        Ok(Self { order: n, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "subtract", i64::checked_sub)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<Self> {
        self.check_same_order(other, op)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow { op }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            order: self.order,
            entries,
        })
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|&x| x.checked_mul(c).ok_or(Error::Overflow { op: "scale" }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            order: self.order,
            entries,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i))
    }

    /// Trace, widened so that it never overflows for `i64` entries.
    pub fn trace(&self) -> i128 {
        (0..self.order).map(|i| i128::from(self.get(i, i))).sum()
    }

    /// Sum of the cross diagonal, `tr[R_n M]`.
    pub fn cross_trace(&self) -> i128 {
        let n = self.order;
        (0..n).map(|i| i128::from(self.get(i, n - 1 - i))).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|&x| {
                let x = x as f64;
                x * x
            })
            .sum::<f64>()
            .sqrt()
    }

    /// `R M R`, the 180° rotation, computed by index reversal.
    pub fn rotate_half_turn(&self) -> Self {
        let n = self.order;
        Self::from_fn(n, |i, j| self.get(n - 1 - i, n - 1 - j))
    }

    /// Returns `Some(c)` when every entry equals `c`.
    pub fn constant_value(&self) -> Option<i64> {
        let first = self.entries[0];
        self.entries.iter().all(|&x| x == first).then_some(first)
    }

    pub fn to_real(&self) -> RealMatrix {
        RealMatrix::from_fn(self.order, self.order, |i, j| self.get(i, j) as f64)
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.order, self.order, |i, j| {
            Complex64::new(self.get(i, j) as f64, 0.0)
        })
    }
}

impl fmt::Display for IntSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `E_n`, every entry one.
pub fn ones_matrix(n: usize) -> IntSquare {
    IntSquare::ones(n)
}

/// `R_n`, ones on the cross diagonal.
pub fn flip_matrix(n: usize) -> IntSquare {
    IntSquare::flip(n)
}
