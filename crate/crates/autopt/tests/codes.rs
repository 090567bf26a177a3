//! Stabiliser code construction, validation, file format, and fixtures.

mod common;

use autopt::codes::StabCode;
use autopt::gf4::{BinMat, Gf4Mat};
use common::gmat;

#[test]
fn all_builtin_fixtures_validate() {
    let names = StabCode::builtin_names();
    assert!(names.len() >= 20);
    for name in names {
        let code = StabCode::builtin(name).unwrap();
        // Name prefix n_k_d encodes the dimensions.
        let mut parts = name.split(['_', '.']);
        let n: usize = parts.next().unwrap().parse().unwrap();
        let k: usize = parts.next().unwrap().parse().unwrap();
        assert_eq!(code.n(), n, "{name}");
        assert_eq!(code.k(), k, "{name}");
    }
}

#[test]
fn builtin_aliases_resolve() {
    assert_eq!(
        StabCode::builtin("4_1_2.m1c2").unwrap(),
        StabCode::builtin("4_1_2").unwrap()
    );
    assert_eq!(
        StabCode::builtin("5_1_3.m1c3").unwrap(),
        StabCode::builtin("5_1_3").unwrap()
    );
    assert!(StabCode::builtin("9_1_3").is_err());
}

#[test]
fn the_worked_example_code_is_the_4_2_2_fixture() {
    let code = StabCode::builtin("4_2_2").unwrap();
    assert_eq!(code.generators(), &gmat(&["1 1 1 1", "w w w w"]));
    assert_eq!(
        code.basis(),
        &gmat(&["1 1 0 0", "w w 0 0", "w 0 w 0", "1 0 1 0"])
    );
}

#[test]
fn dual_basis_pairing() {
    for name in StabCode::builtin_names() {
        let code = StabCode::builtin(name).unwrap();
        let k = code.k();
        // D_B (.) B^T = I.
        let pairing = code.dual_basis().trace_product(code.basis()).unwrap();
        assert_eq!(pairing, BinMat::identity(2 * k), "{name}");
        // The dual swaps the X and Z row blocks, so dualising twice
        // recovers the basis.
        let d = code.dual_basis();
        let mut dd = Gf4Mat::zero(2 * k, code.n());
        for i in 0..k {
            dd.add_row_from(i, &d, k + i);
            dd.add_row_from(k + i, &d, i);
        }
        assert_eq!(&dd, code.basis(), "{name}");
    }
}

#[test]
fn canonical_key_is_a_span_invariant() {
    let code = StabCode::builtin("5_1_3").unwrap();
    // Mix generator rows (GF(2) row operation): same span, same key.
    let mut g = code.generators().clone();
    let orig = code.generators().clone();
    g.add_row_from(1, &orig, 0);
    let mixed = StabCode::new(code.n(), code.k(), g, code.basis().clone()).unwrap();
    assert_eq!(mixed.canonical_key(), code.canonical_key());
    assert_ne!(
        StabCode::builtin("5_1_3").unwrap().canonical_key(),
        StabCode::builtin("5_1_2").unwrap().canonical_key()
    );
}

#[test]
fn file_round_trip() {
    for name in StabCode::builtin_names() {
        let code = StabCode::builtin(name).unwrap();
        let text = code.to_file_string();
        assert_eq!(StabCode::from_file_string(&text).unwrap(), code, "{name}");
    }
}

#[test]
fn parser_accepts_comments_and_blank_lines() {
    let text = "# the smallest stabiliser code with k = 2\n\n4 2\n1 1 1 1\nw w w w  # generators end here\n\n1 1 0 0\nw w 0 0\nw 0 w 0\n1 0 1 0\n";
    let code = StabCode::from_file_string(text).unwrap();
    assert_eq!(code, StabCode::builtin("4_2_2").unwrap());
}

#[test]
fn parser_rejects_malformed_files() {
    // Empty input.
    assert!(StabCode::from_file_string("").is_err());
    // Bad header.
    assert!(StabCode::from_file_string("four two\n").is_err());
    // Wrong number of rows.
    assert!(StabCode::from_file_string("4 2\n1 1 1 1\n").is_err());
    // Bad token.
    assert!(StabCode::from_file_string("2 1\n1 x\n\n1 0\nw 0\n").is_err());
    // Row of the wrong width.
    assert!(StabCode::from_file_string("2 1\n1 1 1\n\n1 0\nw 0\n").is_err());
}

#[test]
fn validation_rejects_inconsistent_codes() {
    // Generators that do not commute: X1 and Z1 anticommute.
    let g = gmat(&["1 0", "w 0"]);
    assert!(StabCode::new(2, 0, g, Gf4Mat::zero(0, 2)).is_err());

    // GF(2)-dependent generator rows.
    let g = gmat(&["1 1", "1 1"]);
    assert!(StabCode::new(2, 0, g, Gf4Mat::zero(0, 2)).is_err());

    // Logical operators that fail the symplectic pairing (X and Z swapped
    // pairing broken: two commuting rows).
    let g = gmat(&["1 1 1 1", "w w w w"]);
    let b = gmat(&["1 1 0 0", "1 1 0 0", "w 0 w 0", "1 0 1 0"]);
    assert!(StabCode::new(4, 2, g, b).is_err());

    // Logicals that anticommute with the stabiliser.
    let b = gmat(&["1 0 0 0", "w w 0 0", "w 0 w 0", "1 0 1 0"]);
    assert!(StabCode::new(4, 2, g2(), b).is_err());
}

fn g2() -> Gf4Mat {
    gmat(&["1 1 1 1", "w w w w"])
}

#[test]
fn trivial_code_with_no_logical_qubits() {
    let code = StabCode::from_file_string("1 0\n1\n").unwrap();
    assert_eq!(code.n(), 1);
    assert_eq!(code.k(), 0);
    assert_eq!(code.basis().nrows(), 0);
    let text = code.to_file_string();
    assert_eq!(StabCode::from_file_string(&text).unwrap(), code);
}
