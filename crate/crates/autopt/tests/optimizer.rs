//! Cost metrics, conjugation-invariant minimisation, and the optimiser
//! fast path against its brute-force oracle.

mod common;

use autopt::autgroup::{monomial_ops_iter, SearchBudget};
use autopt::codes::StabCode;
use autopt::logical::conjugate_automorphism;
use autopt::optimizer::{
    brute_oracle, clifford_minimising_conjugator, full_table, min_cliffords_over_conjugation,
    optimize, Analysis, Metric, MetricKind,
};
use common::{code_422, op, pi30, pi46, random_op};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn metric_costs_of_the_worked_circuits() {
    let m1 = Metric::metric1();
    let m2 = Metric::metric2();
    assert_eq!(m1.kind, MetricKind::ControlClifford);
    assert_eq!(m1.swap_weight, 7);
    assert_eq!(m2.kind, MetricKind::LocalClifford);
    assert_eq!(m2.swap_weight, 0);

    assert_eq!(m1.cost(&pi46()), 25); // 7 * 3 swaps + 4 locals
    assert_eq!(m1.cost(&pi30()), 11); // 7 * 1 swap + 4 locals
    let pi30p = op("perm=[2,1,3,4] locals=[I,I,HSH,HSH]");
    assert_eq!(m1.cost(&pi30p), 9); // 7 * 1 swap + 2 locals
    assert_eq!(m2.cost(&pi46()), 4);
    assert_eq!(m2.cost(&pi30p), 2);

    // Custom swap weight.
    let mut heavy = Metric::metric1();
    heavy.swap_weight = 10;
    assert_eq!(heavy.cost(&pi30p), 12);
}

#[test]
fn conjugation_minimum_examples() {
    // pi^46 is a single 4-cycle whose ordered local product HSH^4 = I:
    // all locals can be conjugated away.
    assert_eq!(min_cliffords_over_conjugation(&pi46()), 0);
    // pi^30 has cycles (1 2)(3)(4); the 2-cycle product HSH.HSH = I but the
    // two fixed points keep their HSH.
    assert_eq!(min_cliffords_over_conjugation(&pi30()), 2);
    // Identity-like cases.
    assert_eq!(
        min_cliffords_over_conjugation(&autopt::monomial::MonomialOp::identity(4)),
        0
    );
    assert_eq!(
        min_cliffords_over_conjugation(&op("perm=[1,2] locals=[S,I]")),
        1
    );
}

#[test]
fn conjugator_achieves_the_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=7 {
        for _ in 0..60 {
            let pi = random_op(&mut rng, n);
            let bound = min_cliffords_over_conjugation(&pi);
            let tau = clifford_minimising_conjugator(&pi);
            // The conjugator is purely local.
            assert_eq!(tau.swap_count(), 0);
            let conj = conjugate_automorphism(&tau, &pi).unwrap();
            assert_eq!(conj.clifford_count(), bound);
            // Conjugation preserves the cycle type.
            assert_eq!(conj.swap_count(), pi.swap_count());
        }
    }
}

#[test]
fn conjugation_minimum_matches_brute_force_exhaustively_n3() {
    // Every operator on 3 qubits, against every conjugator.
    let all: Vec<_> = monomial_ops_iter(3).collect();
    for pi in &all {
        let bound = min_cliffords_over_conjugation(pi);
        let mut best = usize::MAX;
        for g in &all {
            let conj = g.compose(&pi.compose(&g.inverse()).unwrap()).unwrap();
            best = best.min(conj.clifford_count());
            if best == bound {
                break;
            }
        }
        assert_eq!(best, bound, "{}", pi.to_text());
    }
}

#[test]
fn optimizer_reproduces_the_worked_example() {
    let code = code_422();
    let result = optimize(&code, 6, &Metric::metric1(), &SearchBudget::default()).unwrap();
    assert_eq!(result.cost, 9);
    assert_eq!(result.class, 6);
    assert!(result.exhaustive);
    // The witness checks out end to end.
    let realized = autopt::logical::logical_action(&result.circuit, &result.code_out).unwrap();
    assert_eq!(realized, result.logical);
    let sp = autopt::symplectic::SpGroup::new(2).unwrap();
    assert_eq!(&result.logical, sp.class_rep(6).unwrap());
    let rebuilt = autopt::logical::transform_code(
        &autopt::logical::basis_change(&code, &result.a).unwrap(),
        &result.tau,
    )
    .unwrap();
    assert_eq!(rebuilt, result.code_out);
}

#[test]
fn optimizer_rejects_unrealised_classes() {
    // [[4,2,2]] realises classes {1,2,4,5,6,9} only.
    let code = code_422();
    assert!(matches!(
        optimize(&code, 3, &Metric::metric1(), &SearchBudget::default()),
        Err(autopt::Error::BadClass(3, _))
    ));
    assert!(optimize(&code, 12, &Metric::metric1(), &SearchBudget::default()).is_err());
}

#[test]
fn full_table_shape_and_identity_class() {
    let code = code_422();
    let rows = full_table(&code, &Metric::metric1(), &SearchBudget::default(), false).unwrap();
    let classes: Vec<usize> = rows.iter().map(|r| r.class).collect();
    assert_eq!(classes, vec![2, 4, 5, 6, 9]);

    let with_id = full_table(&code, &Metric::metric1(), &SearchBudget::default(), true).unwrap();
    assert_eq!(with_id.len(), 6);
    assert_eq!(with_id[0].class, 1);
    assert_eq!(with_id[0].cost, 0);
}

#[test]
fn fast_path_equals_brute_oracle_on_the_4_2_2_family() {
    let budget = SearchBudget::default();
    for name in ["4_1_2", "4_2_2"] {
        let code = StabCode::builtin(name).unwrap();
        let analysis = Analysis::new(&code, &budget).unwrap();
        for metric in [Metric::metric1(), Metric::metric2()] {
            for &class in analysis.by_class().keys() {
                let fast = analysis.optimize(class, &metric).unwrap().cost;
                let brute = brute_oracle(&code, class, &metric, &budget).unwrap();
                assert_eq!(fast, brute, "{name} class {class} {:?}", metric.kind);
            }
        }
    }
}

#[test]
fn analysis_class_partition_counts_for_4_2_2() {
    let analysis = Analysis::new(&code_422(), &SearchBudget::default()).unwrap();
    assert_eq!(analysis.aut().order(), 144);
    let counts: Vec<(usize, usize)> = analysis
        .by_class()
        .iter()
        .map(|(&c, v)| (c, v.len()))
        .collect();
    // 144 automorphisms split 4-per-logical over 36 logicals.
    assert_eq!(counts.iter().map(|&(_, v)| v).sum::<usize>(), 144);
    assert_eq!(
        counts.iter().map(|&(c, _)| c).collect::<Vec<_>>(),
        vec![1, 2, 4, 5, 6, 9]
    );
}
