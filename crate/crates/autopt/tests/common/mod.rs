//! Shared helpers for the integration tests.
#![allow(dead_code)]

use autopt::codes::StabCode;
use autopt::gf4::{BinMat, Gf4, Gf4Mat};
use autopt::monomial::{LocalClifford, MonomialOp, LOCALS};
use rand::seq::SliceRandom;
use rand::Rng;

/// Binary matrix from whitespace-separated 0/1 token rows.
pub fn bmat(rows: &[&str]) -> BinMat {
    let cols = rows[0].split_whitespace().count();
    let owned: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    BinMat::from_token_rows(&owned, cols).unwrap()
}

/// GF(4) matrix from whitespace-separated `0 1 w W` token rows.
pub fn gmat(rows: &[&str]) -> Gf4Mat {
    let entries: Vec<Vec<Gf4>> = rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|t| Gf4::from_token(t.chars().next().unwrap()).unwrap())
                .collect()
        })
        .collect();
    Gf4Mat::from_entries(&entries)
}

/// Monomial operator from its canonical text form.
pub fn op(text: &str) -> MonomialOp {
    MonomialOp::from_text(text).unwrap()
}

/// The built-in `[[4,2,2]]` code used by the worked example.
pub fn code_422() -> StabCode {
    StabCode::builtin("4_2_2").unwrap()
}

/// The worked example's automorphism `pi^46`: cycle all qubits, HSH everywhere.
pub fn pi46() -> MonomialOp {
    op("perm=[2,3,4,1] locals=[HSH,HSH,HSH,HSH]")
}

/// The worked example's cheaper class-6 automorphism `pi^30`.
pub fn pi30() -> MonomialOp {
    op("perm=[2,1,3,4] locals=[HSH,HSH,HSH,HSH]")
}

/// The worked example's transversal element `tau` (HSH on qubit 1).
pub fn tau_example() -> MonomialOp {
    op("perm=[1,2,3,4] locals=[HSH,I,I,I]")
}

/// The worked example's logical operation `L = L(pi^46, B)`.
pub fn script_l() -> BinMat {
    bmat(&["1 1 0 0", "0 1 0 0", "0 1 1 0", "1 1 1 1"])
}

/// A uniformly random monomial operator on `n` qubits.
pub fn random_op<R: Rng>(rng: &mut R, n: usize) -> MonomialOp {
    let mut sigma: Vec<u8> = (0..n as u8).collect();
    sigma.shuffle(rng);
    let rho: Vec<LocalClifford> = (0..n).map(|_| LOCALS[rng.gen_range(0..6)]).collect();
    MonomialOp::new(sigma, rho).unwrap()
}

/// A random GF(4) matrix.
pub fn random_gf4_mat<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Gf4Mat {
    let entries: Vec<Vec<Gf4>> = (0..rows)
        .map(|_| (0..cols).map(|_| Gf4::from_code(rng.gen_range(0..4))).collect())
        .collect();
    Gf4Mat::from_entries(&entries)
}

/// Builtin fixture names with `n <= max_n`.
pub fn builtins_up_to(max_n: usize) -> Vec<&'static str> {
    StabCode::builtin_names()
        .into_iter()
        .filter(|name| StabCode::builtin(name).unwrap().n() <= max_n)
        .collect()
}
