//! Schubert polynomials, k-Bruhat order intervals and the skew
//! Littlewood-Richardson coefficients attached to them.
//!
//! Permutations are elements of S_∞ stored in trimmed one-line form. The
//! product is composition, `(z * u)(i) = z(u(i))`, so right multiplication by
//! a transposition swaps positions and left multiplication swaps values.

pub mod error;
pub mod orders;
pub mod par;
pub mod perm;
pub mod polyring;
pub mod schubert;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use polyring::{Alphabet, IntPolynomial};
pub use tableaux::{Partition, SkewShape, Tableau};
