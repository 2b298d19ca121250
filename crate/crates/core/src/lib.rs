//! Filtered de la Vallée Poussin (VP) interpolation at the zeros of the
//! Chebyshev polynomials of the first, second, third and fourth kind.
//!
//! The interpolant `V_n^m f` uses `n` node samples and lies between the
//! polynomials of degree `n - m` (reproduced exactly) and `n + m - 1`.

pub mod analysis;
pub mod basis;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod interp1d;
pub mod interp2d;
pub mod matrix;
pub mod simultaneous;
pub mod testfn;
pub mod transforms;

pub use basis::DegreePair;
pub use chebyshev::{nodes, ChebyshevKind, NodeSet};
pub use error::{Result, VpError};
pub use interp1d::VpInterpolant;
pub use matrix::BlockMatrix;
