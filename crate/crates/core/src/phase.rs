use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::linalg::IntSquare;

/// The eight dihedral images of a square.
///
/// Rotations are clockwise. `FlipHorizontal` mirrors left to right (reverses
/// each row); `FlipVertical` mirrors top to bottom (reverses the row order).
/// `AntiTranspose` reflects across the cross diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    Transpose,
    AntiTranspose,
    FlipHorizontal,
    FlipVertical,
}

impl Phase {
    pub const ALL: [Phase; 8] = [
        Phase::Identity,
        Phase::Rot90,
        Phase::Rot180,
        Phase::Rot270,
        Phase::Transpose,
        Phase::AntiTranspose,
        Phase::FlipHorizontal,
        Phase::FlipVertical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Identity => "identity",
            Phase::Rot90 => "rot90",
            Phase::Rot180 => "rot180",
            Phase::Rot270 => "rot270",
            Phase::Transpose => "transpose",
            Phase::AntiTranspose => "anti-transpose",
            Phase::FlipHorizontal => "flip-horizontal",
            Phase::FlipVertical => "flip-vertical",
        }
    }

    /// Source cell read by output cell `(i, j)` in an order-`n` square.
    fn source(self, n: usize, i: usize, j: usize) -> (usize, usize) {
        let last = n - 1;
        match self {
            Phase::Identity => (i, j),
            Phase::Rot90 => (last - j, i),
            Phase::Rot180 => (last - i, last - j),
            Phase::Rot270 => (j, last - i),
            Phase::Transpose => (j, i),
            Phase::AntiTranspose => (last - j, last - i),
            Phase::FlipHorizontal => (i, last - j),
            Phase::FlipVertical => (last - i, j),
        }
    }

    pub fn apply(self, m: &IntSquare) -> IntSquare {
        let n = m.order();
        IntSquare::from_fn(n, |i, j| {
            let (si, sj) = self.source(n, i, j);
            m.get(si, sj)
        })
    }

    /// The phase equal to applying `self` first, then `then`.
    pub fn then(self, then: Phase) -> Phase {
        // Compose on a probe whose entries encode their own coordinates.
        let probe = IntSquare::from_fn(3, |i, j| (i * 3 + j) as i64);
        let target = then.apply(&self.apply(&probe));
        Phase::ALL
            .into_iter()
            .find(|p| p.apply(&probe) == target)
            .expect("dihedral group is closed")
    }

    pub fn inverse(self) -> Phase {
        match self {
            Phase::Rot90 => Phase::Rot270,
            Phase::Rot270 => Phase::Rot90,
            other => other,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPhase(pub String);

impl fmt::Display for UnknownPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown phase {:?}", self.0)
    }
}

impl std::error::Error for UnknownPhase {}

impl FromStr for Phase {
    type Err = UnknownPhase;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Phase::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownPhase(s.to_string()))
    }
}

/// Applies a dihedral transform to `m`.
pub fn apply_phase(m: &IntSquare, p: Phase) -> IntSquare {
    p.apply(m)
}
