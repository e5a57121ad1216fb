//! Commuting magic squares by Kronecker compounding.
//!
//! Two magic seeds `M_m` and `M_n` give an orthogonal, commuting pair
//! `A = E_m ⊗ M_n`, `B = M_m ⊗ E_n`; Euler composition `A + n²B` turns it
//! into a natural magic square of order `mn`. Every structural claim is
//! checked exactly over the integers, every spectral claim either exactly
//! through characteristic polynomials or numerically against seed
//! decompositions.

pub mod compound;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod phase;
pub mod props;
pub mod spectral;

pub use compound::{
    apply_shuffle, compound_a, compound_b, compound_chain, euler_compose, generalized_a,
    rotation_duo, shuffle_indices, shuffle_permutation, ChainFeed, ChainStage, CompoundPair,
    SubsquareGrid,
};
pub use error::{Error, Result};
pub use fixtures::{fixture, fixture_square, Fixture, FIXTURE_NAMES};
pub use linalg::{
    charpoly_exact, exact_factor_check, flip_matrix, ones_matrix, BigPoly, ComplexMatrix,
    IntSquare, RealMatrix,
};
pub use phase::{apply_phase, Phase};
pub use props::{
    check_commute, check_magic, check_natural, check_orthogonal_pair, check_pandiagonal,
    check_regular, is_magic, magic_sum, PropertyReport,
};
pub use spectral::{
    compose_eigen_m, compose_svd_m, compound_eigen, compound_svd, jacobi_singular_values,
    ones_eigen, ones_svd, parse_claim, spectrum_claim_check, verify_eigen, verify_svd, EigenSystem,
    SpectrumFactor, SvdSystem, DEFAULT_TOLERANCE,
};
