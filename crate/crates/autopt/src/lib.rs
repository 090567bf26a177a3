//! Search and optimisation of SWAP-transversal logical Clifford operators for
//! small stabiliser codes.
//!
//! A stabiliser code on `n` qubits is handled as a GF(4) additive code: Pauli
//! operators map to GF(4) vectors via X -> 1, Z -> omega, Y -> omega^2, and
//! commutation becomes the trace inner product.  Monomial symmetries of the
//! additive code (qubit permutations combined with the six single-qubit
//! Cliffords that permute the Pauli axes) are exactly the SWAP-transversal
//! circuit symmetries of the code.  This crate finds that symmetry group,
//! classifies the logical Clifford action of each element by conjugacy class
//! in Sp(2k, 2), and minimises physical circuit cost per class.

pub mod autgroup;
pub mod cli;
pub mod codes;
pub mod error;
pub mod gf4;
pub mod logical;
pub mod monomial;
pub mod optimizer;
pub mod symplectic;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
