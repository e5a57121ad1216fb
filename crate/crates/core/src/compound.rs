//! Kronecker compounding of magic squares, Euler composition, generalized
//! subsquare grids, rotation duos and the block shuffle permutation.

use crate::error::{Error, Result};
use crate::linalg::IntSquare;
use crate::props::{check_commute, check_magic, check_orthogonal_pair, check_regular, is_magic};

fn require_magic(m: &IntSquare, what: &str) -> Result<()> {
    if is_magic(m) {
        Ok(())
    } else {
        Err(Error::NotMagic { what: what.into() })
    }
}

/// `E_m ⊗ seed_n`: `m²` copies of the seed. Magic with index `m·μ_n`.
pub fn compound_a(seed_n: &IntSquare, m: usize) -> Result<IntSquare> {
    require_magic(seed_n, "seed")?;
    check_seed_multiplier(m)?;
    IntSquare::ones(m).kron(seed_n)
}

/// `seed_m ⊗ E_n`: each seed entry blown up to an `n×n` constant block.
/// Magic with index `n·μ_m`.
pub fn compound_b(seed_m: &IntSquare, n: usize) -> Result<IntSquare> {
    require_magic(seed_m, "seed")?;
    check_seed_multiplier(n)?;
    seed_m.kron(&IntSquare::ones(n))
}

fn check_seed_multiplier(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidDimensions(
            "compound multiplier must be at least 1".into(),
        ));
    }
    Ok(())
}

/// An orthogonal, commuting pair of order `m·n`.
///
/// `a` is the square whose `n×n` blocks are magic squares of order `n`, `b`
/// is built from an order-`m` seed. For the plain construction
/// `a = E_m ⊗ M_n` and `b = M_m ⊗ E_n`; [`CompoundPair::generalized`] admits
/// any grid of order-`n` magic blocks in place of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundPair {
    a: IntSquare,
    b: IntSquare,
    m: usize,
    n: usize,
}

impl CompoundPair {
    /// Compounds `seed_m` (order `m`, drives `b`) with `seed_n` (order `n`,
    /// drives `a`).
    pub fn from_seeds(seed_m: &IntSquare, seed_n: &IntSquare) -> Result<Self> {
        let m = seed_m.order();
        let n = seed_n.order();
        Ok(Self {
            a: compound_a(seed_n, m)?,
            b: compound_b(seed_m, n)?,
            m,
            n,
        })
    }

    /// Pairs a generalized `Ã` with `seed_m ⊗ E_n`, checking orthogonality
    /// and commutation.
    pub fn generalized(grid: &SubsquareGrid, seed_m: &IntSquare) -> Result<Self> {
        if seed_m.order() != grid.side() {
            return Err(Error::InconsistentGrid(format!(
                "grid side {} does not match seed order {}",
                grid.side(),
                seed_m.order()
            )));
        }
        let a = generalized_a(grid);
        let b = compound_b(seed_m, grid.cell_order())?;
        if !check_orthogonal_pair(&a, &b)? {
            return Err(Error::InconsistentGrid(
                "blocks do not form an orthogonal pair".into(),
            ));
        }
        if !check_commute(&a, &b)?.commutes {
            return Err(Error::InconsistentGrid(
                "generalized square does not commute".into(),
            ));
        }
        Ok(Self {
            a,
            b,
            m: grid.side(),
            n: grid.cell_order(),
        })
    }

    pub fn a(&self) -> &IntSquare {
        &self.a
    }

    pub fn b(&self) -> &IntSquare {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }
}

/// Euler composition `(A + n²B, B + m²A)`. Natural when both seeds are.
pub fn euler_compose(pair: &CompoundPair) -> Result<(IntSquare, IntSquare)> {
    let n2 = square_factor(pair.n)?;
    let m2 = square_factor(pair.m)?;
    let ma = pair.a.add(&pair.b.scale(n2)?)?;
    let mb = pair.b.add(&pair.a.scale(m2)?)?;
    Ok((ma, mb))
}

fn square_factor(k: usize) -> Result<i64> {
    i64::try_from(k)
        .ok()
        .and_then(|k| k.checked_mul(k))
        .ok_or(Error::Overflow {
            op: "euler compose",
        })
}

/// `m × m` arrangement of order-`n` magic squares sharing one summation index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsquareGrid {
    side: usize,
    cells: Vec<IntSquare>,
}

impl SubsquareGrid {
    /// `cells` is row-major with `side²` entries.
    pub fn new(side: usize, cells: Vec<IntSquare>) -> Result<Self> {
        if side == 0 || cells.len() != side * side {
            return Err(Error::InconsistentGrid(format!(
                "side {side} needs {} cells, got {}",
                side * side,
                cells.len()
            )));
        }
        let n = cells[0].order();
        let mut index = None;
        for (k, cell) in cells.iter().enumerate() {
            if cell.order() != n {
                return Err(Error::InconsistentGrid(format!(
                    "cell {k} has order {}, expected {n}",
                    cell.order()
                )));
            }
            let verdict = check_magic(cell);
            if !verdict.is_magic {
                return Err(Error::InconsistentGrid(format!("cell {k} is not magic")));
            }
            match index {
                None => index = verdict.summation_index,
                Some(mu) if verdict.summation_index != Some(mu) => {
                    return Err(Error::InconsistentGrid(format!(
                        "cell {k} has summation index {:?}, expected {mu}",
                        verdict.summation_index
                    )));
                }
                Some(_) => {}
            }
        }
        Ok(Self { side, cells })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn cell_order(&self) -> usize {
        self.cells[0].order()
    }

    pub fn cell(&self, i: usize, j: usize) -> &IntSquare {
        &self.cells[i * self.side + j]
    }
}

/// Assembles the grid into one square whose `(i, j)` block is `cell(i, j)`.
pub fn generalized_a(grid: &SubsquareGrid) -> IntSquare {
    let n = grid.cell_order();
    IntSquare::from_fn(grid.side * n, |r, c| {
        grid.cell(r / n, c / n).get(r % n, c % n)
    })
}

/// A regular magic square and its 180° rotation `R·M·R`, which commute.
pub fn rotation_duo(m: &IntSquare) -> Result<(IntSquare, IntSquare)> {
    if !check_regular(m).is_regular {
        return Err(Error::NotRegular {
            what: "rotation duo input".into(),
        });
    }
    Ok((m.clone(), m.rotate_half_turn()))
}

/// The symmetric, self-inverse permutation `P_nn` of order `n²` whose
/// `(i, j)` block has its single one at `(j, i)`.
pub fn shuffle_permutation(n: usize) -> IntSquare {
    IntSquare::from_fn(n * n, |r, c| {
        let (i, a) = (r / n, r % n);
        let (j, b) = (c / n, c % n);
        i64::from(a == j && b == i)
    })
}

/// Row/column shuffle of [`shuffle_permutation`] as an index map:
/// `(P·X·P)(r, c) = X(perm[r], perm[c])`.
pub fn shuffle_indices(n: usize) -> Vec<usize> {
    (0..n * n).map(|r| (r % n) * n + r / n).collect()
}

/// `P·M·P`.
pub fn apply_shuffle(p: &IntSquare, m: &IntSquare) -> Result<IntSquare> {
    p.mul(m)?.mul(p)
}

/// Which composed square seeds the next stage of [`compound_chain`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ChainFeed {
    #[default]
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStage {
    pub pair: CompoundPair,
    pub ma: IntSquare,
    pub mb: IntSquare,
}

/// Repeated self-compounding: stage `k` compounds the previous stage's
/// selected composed square with itself, so orders go `n, n², n⁴, …`.
pub fn compound_chain(seed: &IntSquare, depth: usize, feed: ChainFeed) -> Result<Vec<ChainStage>> {
    require_magic(seed, "chain seed")?;
    let mut stages: Vec<ChainStage> = Vec::with_capacity(depth);
    let mut current = seed.clone();
    for _ in 0..depth {
        let pair = CompoundPair::from_seeds(&current, &current)?;
        let (ma, mb) = euler_compose(&pair)?;
        current = match feed {
            ChainFeed::A => ma.clone(),
            ChainFeed::B => mb.clone(),
        };
        stages.push(ChainStage { pair, ma, mb });
    }
    Ok(stages)
}
