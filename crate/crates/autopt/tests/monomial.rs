//! Monomial operators, their S_3n encoding, and the binary symplectic lift.

mod common;

use autopt::gf4::{BinMat, Gf4, Gf4Mat};
use autopt::monomial::{LocalClifford, MonomialOp, LOCALS};
use autopt::symplectic::is_symplectic;
use common::{bmat, gmat, op, pi46, random_gf4_mat, random_op};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ELEMS: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

#[test]
fn local_action_agrees_with_symplectic2() {
    // phi(l.act(e)) = phi(e) . F^T for the 2x2 symplectic matrix of each local.
    for l in LOCALS {
        let [[a, b], [c, d]] = l.symplectic2();
        for e in ELEMS {
            let (x, z) = (e.x_bit(), e.z_bit());
            let expect = Gf4::from_bits((a & x) ^ (b & z), (c & x) ^ (d & z));
            assert_eq!(l.act(e), expect, "local {l} on {e:?}");
        }
    }
}

#[test]
fn local_group_structure() {
    // The six locals act as the six permutations of the axes {X, Z, Y},
    // i.e. faithfully as S_3: distinct actions, closed composition.
    for a in LOCALS {
        assert_eq!(a.compose(a.inverse()), LocalClifford::I);
        assert_eq!(a.inverse().compose(a), LocalClifford::I);
        for b in LOCALS {
            for e in ELEMS {
                assert_eq!(a.compose(b).act(e), a.act(b.act(e)));
            }
        }
    }
    // Specific identities: H and HSH are involutions, S^... (axis swaps),
    // HS and SH are the two 3-cycles and are mutually inverse.
    use LocalClifford::*;
    assert_eq!(H.compose(H), I);
    assert_eq!(S.compose(S), I);
    assert_eq!(Hsh.compose(Hsh), I);
    assert_eq!(Hs.compose(Sh), I);
    assert_eq!(Hs.compose(Hs), Sh);
    // Name round trip.
    for l in LOCALS {
        assert_eq!(LocalClifford::from_name(l.name()), Some(l));
        assert_eq!(LocalClifford::from_index(l.index()), l);
    }
    assert_eq!(LocalClifford::from_name("X"), None);
}

#[test]
fn s3n_encoding_of_the_worked_automorphism() {
    // pi^46 in one-line S_12 notation, as printed.
    let one_line = [4usize, 6, 5, 7, 9, 8, 10, 12, 11, 1, 3, 2];
    let pi = MonomialOp::from_s3n(&one_line).unwrap();
    assert_eq!(pi, pi46());
    assert_eq!(pi.to_s3n(), one_line);
}

#[test]
fn s3n_cycle_notation() {
    // Swapping blocks 3 and 4 with trivial internal order is the bare
    // transposition of qubits 3 and 4.
    let swap34 = MonomialOp::from_s3n_cycles("(7,10)(8,11)(9,12)", 4).unwrap();
    assert_eq!(swap34, op("perm=[1,2,4,3] locals=[I,I,I,I]"));

    // The uniform-scaling qubit swap used by the [[4,2,2]] generator listing.
    let g = MonomialOp::from_s3n_cycles("(1,5,3,4,2,6)(7,8,9)(10,11,12)", 4).unwrap();
    assert_eq!(g, op("perm=[2,1,3,4] locals=[SH,SH,SH,SH]"));

    // Identity when no cycles are given.
    assert_eq!(
        MonomialOp::from_s3n_cycles("", 3).unwrap(),
        MonomialOp::identity(3)
    );
}

#[test]
fn s3n_rejects_malformed_input() {
    // Wrong length.
    assert!(MonomialOp::from_s3n(&[1, 2]).is_err());
    // Not a permutation.
    assert!(MonomialOp::from_s3n(&[1, 1, 2]).is_err());
    // A block split across destination blocks.
    assert!(MonomialOp::from_s3n(&[1, 2, 4, 3, 5, 6]).is_err());
    // A residue pattern that is not one of the six local Cliffords
    // (an even permutation of a block mixed with... here (1,3,2) would be
    // fine, but (2,3,1)->(2,0,1) is SH; use a genuinely impossible pattern).
    assert!(MonomialOp::from_s3n_cycles("(1,2)(4,5)", 2).is_ok());
    assert!(MonomialOp::from_s3n_cycles("(13,14)", 4).is_err());
}

#[test]
fn lift_of_the_worked_automorphism_is_the_printed_matrix() {
    let f = pi46().lift_symplectic();
    let printed = bmat(&[
        "0 0 0 1 0 0 0 1",
        "1 0 0 0 1 0 0 0",
        "0 1 0 0 0 1 0 0",
        "0 0 1 0 0 0 1 0",
        "0 0 0 0 0 0 0 1",
        "0 0 0 0 1 0 0 0",
        "0 0 0 0 0 1 0 0",
        "0 0 0 0 0 0 1 0",
    ]);
    assert_eq!(f, printed);
    assert!(is_symplectic(&f));

    // Acting on the [[4,2,2]] logical basis reproduces the printed image.
    let b = common::code_422().basis().clone();
    let image_bits = b.phi().mul(&f.transpose()).unwrap();
    let expected_bits = bmat(&[
        "0 1 1 0 0 0 0 0",
        "0 1 1 0 0 1 1 0",
        "0 1 0 1 0 1 0 1",
        "0 1 0 1 0 0 0 0",
    ]);
    assert_eq!(image_bits, expected_bits);
    let image = Gf4Mat::phi_inv(&image_bits).unwrap();
    assert_eq!(image, gmat(&["0 1 1 0", "0 W W 0", "0 W 0 W", "0 1 0 1"]));
    // And it is exactly apply().
    assert_eq!(pi46().apply(&b).unwrap(), image);
}

#[test]
fn counts_and_cycles() {
    let pi = pi46();
    assert_eq!(pi.swap_count(), 3);
    assert_eq!(pi.clifford_count(), 4);
    assert_eq!(pi.cycles(), vec![vec![0, 1, 2, 3]]);

    let id = MonomialOp::identity(5);
    assert_eq!(id.swap_count(), 0);
    assert_eq!(id.clifford_count(), 0);
    assert_eq!(id.cycles().len(), 5);

    let two = op("perm=[2,1,4,3,5] locals=[I,H,I,I,S]");
    assert_eq!(two.swap_count(), 2);
    assert_eq!(two.clifford_count(), 2);
    assert_eq!(two.cycles(), vec![vec![0, 1], vec![2, 3], vec![4]]);
}

#[test]
fn text_form_round_trip_and_order() {
    let t = "perm=[2,1,3,4] locals=[I,I,HSH,HSH]";
    assert_eq!(op(t).to_text(), t);
    assert!(MonomialOp::from_text("perm=[1,1] locals=[I,I]").is_err());
    assert!(MonomialOp::from_text("perm=[1,2] locals=[I,Q]").is_err());
    assert!(MonomialOp::from_text("perm=[1,2] locals=[I]").is_err());

    // Ord: permutation first, then locals in declaration order.
    assert!(op("perm=[1,2] locals=[I,I]") < op("perm=[1,2] locals=[I,H]"));
    assert!(op("perm=[1,2] locals=[HSH,HSH]") < op("perm=[2,1] locals=[I,I]"));
}

fn op_exact(n: usize) -> impl Strategy<Value = MonomialOp> {
    (
        Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle(),
        prop::collection::vec(0usize..6, n),
    )
        .prop_map(|(sigma, locals)| {
            let rho = locals.into_iter().map(LocalClifford::from_index).collect();
            MonomialOp::new(sigma, rho).unwrap()
        })
}

fn op_strategy(max_n: usize) -> impl Strategy<Value = MonomialOp> {
    (1..=max_n).prop_flat_map(op_exact)
}

fn op_pair(max_n: usize) -> impl Strategy<Value = (MonomialOp, MonomialOp)> {
    (1..=max_n).prop_flat_map(|n| (op_exact(n), op_exact(n)))
}

proptest! {
    #[test]
    fn compose_apply_contract((a, b) in op_pair(6), seed in any::<u64>()) {
        let n = a.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_gf4_mat(&mut rng, 3, n);
        let c = a.compose(&b).unwrap();
        prop_assert_eq!(c.apply(&m).unwrap(), a.apply(&b.apply(&m).unwrap()).unwrap());
        // Inverse really inverts.
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), MonomialOp::identity(n));
        prop_assert_eq!(a.inverse().compose(&a).unwrap(), MonomialOp::identity(n));
        prop_assert_eq!(a.inverse().apply(&a.apply(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn s3n_round_trip(o in op_strategy(6)) {
        prop_assert_eq!(MonomialOp::from_s3n(&o.to_s3n()).unwrap(), o.clone());
        prop_assert_eq!(MonomialOp::from_text(&o.to_text()).unwrap(), o);
    }

    #[test]
    fn lift_is_a_symplectic_homomorphism((a, b) in op_pair(6)) {
        let fa = a.lift_symplectic();
        let fb = b.lift_symplectic();
        prop_assert!(is_symplectic(&fa));
        prop_assert_eq!(
            a.compose(&b).unwrap().lift_symplectic(),
            fa.mul(&fb).unwrap()
        );
    }

    #[test]
    fn lift_matches_apply(o in op_strategy(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_gf4_mat(&mut rng, 4, o.n());
        let lhs = o.apply(&m).unwrap().phi();
        let rhs = m.phi().mul(&o.lift_symplectic().transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn random_ops_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=7 {
        for _ in 0..50 {
            let o = random_op(&mut rng, n);
            let f = o.lift_symplectic();
            assert!(is_symplectic(&f));
            assert_eq!(
                f.mul(&o.inverse().lift_symplectic()).unwrap(),
                BinMat::identity(2 * n)
            );
        }
    }
}
