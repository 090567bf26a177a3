//! Logical actions of code automorphisms, basis changes, and code
//! equivalence transformations.

use crate::autgroup::is_automorphism;
use crate::codes::StabCode;
use crate::gf4::{BinMat, Gf4Mat};
use crate::monomial::MonomialOp;
use crate::symplectic::is_symplectic;
use crate::{Error, Result};

/// The symplectic matrix describing how `op` acts on the logical operators
/// spanned by the basis `b` (rows `X_L^(1..k), Z_L^(1..k)`):
/// `L = D_B (.) op(B)^T` with `D_B = Omega . B`.
///
/// This is the raw basis-level computation; it does not check that `op`
/// stabilises any particular code.
pub fn logical_action_of_basis(op: &MonomialOp, b: &Gf4Mat) -> Result<BinMat> {
    if b.nrows() % 2 != 0 {
        return Err(Error::Shape("logical basis must have 2k rows".into()));
    }
    let k = b.nrows() / 2;
    let mut dual = Gf4Mat::zero(2 * k, b.ncols());
    for i in 0..k {
        dual.add_row_from(i, b, k + i);
        dual.add_row_from(k + i, b, i);
    }
    dual.trace_product(&op.apply(b)?)
}

/// The logical action `L(op, B)` of an automorphism of `code`.
///
/// Errors with [`Error::NotAutomorphism`] if `op` does not preserve the
/// stabiliser span; the result is always symplectic.
pub fn logical_action(op: &MonomialOp, code: &StabCode) -> Result<BinMat> {
    if !is_automorphism(op, code)? {
        return Err(Error::NotAutomorphism);
    }
    let l = logical_action_of_basis(op, code.basis())?;
    if !is_symplectic(&l) {
        return Err(Error::Verification(
            "logical action of an automorphism is not symplectic".into(),
        ));
    }
    Ok(l)
}

/// Replace the logical basis by `A . B`: row `i` of the new basis is the
/// GF(4) sum of the rows `j` of `B` with `A[i][j] = 1`.  `A` must be a
/// symplectic `2k x 2k` matrix for the result to be a valid code.
pub fn basis_change(code: &StabCode, a: &BinMat) -> Result<StabCode> {
    let k = code.k();
    if a.nrows() != 2 * k || a.ncols() != 2 * k {
        return Err(Error::Shape(format!(
            "basis change matrix must be {0}x{0}",
            2 * k
        )));
    }
    if !is_symplectic(a) {
        return Err(Error::NotSymplectic);
    }
    let b = code.basis();
    let mut nb = Gf4Mat::zero(2 * k, code.n());
    for i in 0..2 * k {
        for j in 0..2 * k {
            if a.get(i, j) == 1 {
                nb.add_row_from(i, b, j);
            }
        }
    }
    StabCode::new(code.n(), k, code.generators().clone(), nb)
}

/// The equivalent code `tau(C)`: apply a monomial operator to both the
/// generator matrix and the logical basis.
pub fn transform_code(code: &StabCode, tau: &MonomialOp) -> Result<StabCode> {
    StabCode::new(
        code.n(),
        code.k(),
        tau.apply(code.generators())?,
        tau.apply(code.basis())?,
    )
}

/// Conjugate an automorphism of `C` into an automorphism of `tau(C)`:
/// returns `tau . pi . tau^{-1}` (in application order: undo `tau`, apply
/// `pi`, re-apply `tau`), which satisfies
/// `is_automorphism(result, transform_code(code, tau))` and implements the
/// same logical action on the transported basis.
pub fn conjugate_automorphism(tau: &MonomialOp, pi: &MonomialOp) -> Result<MonomialOp> {
    tau.compose(&pi.compose(&tau.inverse())?)
}
