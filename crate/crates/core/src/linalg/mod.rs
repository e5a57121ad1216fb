//! Exact integer, floating-point, and complex matrix kernels plus exact
//! characteristic polynomials.

mod charpoly;
mod dense;
mod int_square;
mod poly;

pub use charpoly::charpoly_exact;
pub use dense::{ComplexMatrix, Matrix, RealMatrix, Scalar};
pub use int_square::{flip_matrix, ones_matrix, IntSquare};
pub use poly::{exact_factor_check, BigPoly};
