//! Exact construction of integer lattice squares, cubes and hypercubes in
//! dimensions 2 to 4, closed-form Ehrhart polynomials for each family, and
//! an independent brute-force counting oracle to verify every formula.

pub mod arith;
pub mod cubes;
pub mod error;
pub mod forms;
pub mod gaussian;
pub mod linalg;
pub mod oracle;
pub mod planes;
pub mod poly;
pub mod quaternion;
pub mod sequences;
pub mod squares;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, IntVector};
pub use poly::EhrhartPolynomial;
pub use quaternion::{Quaternion, UnitSymbol};
pub use squares::{TwinPair, validate_twin};
