//! Exact-arithmetic toolkit for the computable layer of unitary Borcherds
//! products: local Weil indices, Eisenstein series at the cusps of X_0(D),
//! the modularity-criterion principal-part solver, hermitian lattice theta
//! series, Jacobi theta blocks, leading Fourier-Jacobi coefficients, and
//! floating-point Kudla Green functions.
//!
//! Everything algebraic is exact: rationals are arbitrary precision, roots of
//! unity live in the group algebra Q[X]/(X^{4D}-1), and q-series carry
//! certified truncation bounds. Floating point appears only in explicitly
//! numeric cross-check operations and in the `greens` module.

pub mod arith;
pub mod borcherds;
pub mod error;
pub mod greens;
pub mod hermlat;
pub mod jacobi;
pub mod linalg;
pub mod modforms;
pub mod qseries;
pub mod rings;
pub mod verify;
pub mod weakforms;

pub use error::{Error, Result};
pub use rings::{CycElem, FourthRoot, GroupAlgebraElem, Rational};
