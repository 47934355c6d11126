use rbx_core::algebra::{Algebra, RotaBaxter, SamplePlan, Sampled, UnitalAlgebra};
use rbx_core::arith::{rat, series_exp, series_mismatch, LambdaSeries};
use rbx_core::identities::trees::FreePreLie;
use rbx_core::identities::{
    bs_lhs, bs_rhs, check_atkinson, check_atkinson_lemma, check_bogoliubov, check_bohnenblust_spitzer,
    check_flows_bch, check_flows_product_law, check_magnus_terms, check_nc_spitzer,
    check_spitzer_commutative, magnus_reference_terms, solve_fixed_point, spitzer_closed_form, BsForm,
    Side,
};
use rbx_core::models::{IntegrationAlgebra, Laurent, LaurentAlgebra, MatrixAlgebra, SequenceAlgebra};

#[test]
fn fixed_point_matches_spitzer_closed_form() {
    let alg = SequenceAlgebra::standard_commutative(6, 5, 5);
    let x = alg.generator();
    let f = solve_fixed_point(&alg, &x, Side::LeftR, 5);
    let omega = spitzer_closed_form(&alg, &x, 5);
    let exp = series_exp(&alg, &omega.map(|c| alg.operator(c))).unwrap();
    assert_eq!(series_mismatch(&alg, "f = exp(R(Ω'))", &f, &exp), None);
}

#[test]
fn spitzer_in_commutative_models() {
    let alg = SequenceAlgebra::standard_commutative(6, 5, 5);
    assert!(check_spitzer_commutative(&alg, &alg.generator(), 5).unwrap().passed());
    let int = IntegrationAlgebra::new(12);
    let x = int.power(1);
    assert!(check_spitzer_commutative(&int, &x, 5).unwrap().passed());
    assert!(check_spitzer_commutative(&MatrixAlgebra::new(2), &MatrixAlgebra::new(2).one(), 3).is_err());
}

#[test]
fn nc_spitzer_in_matrices() {
    let alg = MatrixAlgebra::new(2);
    let x = alg.add(&alg.unit(1, 2), &alg.unit(2, 1));
    assert!(check_nc_spitzer(&alg, &x, 4).unwrap().passed());
    let mut rng = SamplePlan::random(1, 9).rng();
    for _ in 0..5 {
        let x = MatrixAlgebra::new(3).random_element(&mut rng);
        assert!(check_nc_spitzer(&MatrixAlgebra::new(3), &x, 3).unwrap().passed());
    }
}

#[test]
fn magnus_grades_in_free_prelie_algebra() {
    let p = FreePreLie;
    let x = p.generator();
    for grade in 1..=4 {
        let r = check_magnus_terms(&p, "trees", &x, grade, &magnus_reference_terms(grade));
        assert!(r.passed(), "{:?}", r.counterexample);
    }
}

#[test]
fn atkinson_in_four_models() {
    let plan = SamplePlan::random(20, 4);
    let m = MatrixAlgebra::new(2);
    assert!(check_atkinson(&m, &m.add(&m.unit(1, 2), &m.unit(2, 1)), 4).unwrap().passed());
    assert!(check_atkinson_lemma(&m, &SamplePlan::exhaustive()).passed());
    let s = SequenceAlgebra::standard_noncommutative(5, 4, 4);
    assert!(check_atkinson(&s, &s.generator(), 4).unwrap().passed());
    let l = LaurentAlgebra::default();
    let lx = Laurent::from_terms([(-1, rat(1, 1)), (1, rat(2, 1))]);
    assert!(check_atkinson(&l, &lx, 4).unwrap().passed());
    assert!(check_atkinson_lemma(&l, &plan).passed());
    let i = IntegrationAlgebra::new(10);
    assert!(check_atkinson(&i, &i.power(1), 4).unwrap().passed());
}

#[test]
fn bohnenblust_spitzer_forms() {
    let comm = SequenceAlgebra::standard_commutative(6, 4, 4);
    let ops: Vec<_> = (1..=4).map(|k| comm.delta(k, comm.base().monomial(&[k as u32]))).collect();
    for n in 2..=4 {
        let r = check_bohnenblust_spitzer(&comm, &ops[..n], BsForm::CommutativePartitions).unwrap();
        assert!(r.passed(), "{:?}", r.counterexample);
    }
    let m = MatrixAlgebra::new(2);
    let ops = vec![m.unit(1, 2), m.unit(2, 1), m.one()];
    assert!(check_bohnenblust_spitzer(&m, &ops, BsForm::CyclesPrelie).unwrap().passed());
    let i = IntegrationAlgebra::new(12);
    let ops = vec![i.power(0), i.power(1), i.power(2)];
    assert!(check_bohnenblust_spitzer(&i, &ops, BsForm::WeightZero).unwrap().passed());
    assert_eq!(bs_lhs(&i, &ops).unwrap(), bs_rhs(&i, &ops, BsForm::WeightZero).unwrap());
}

#[test]
fn bogoliubov_on_a_pole_input() {
    let alg = LaurentAlgebra::default();
    let x = LambdaSeries::from_coeffs(vec![
        Laurent::zero(),
        Laurent::from_terms([(-1, rat(1, 1)), (0, rat(1, 2))]),
        Laurent::from_terms([(-2, rat(-1, 3)), (1, rat(1, 1))]),
    ]);
    assert!(check_bogoliubov(&alg, &x).unwrap().passed());
}

#[test]
fn flows_on_matrix_units() {
    let alg = MatrixAlgebra::new(2);
    let basis = alg.basis();
    for x in &basis {
        for y in &basis {
            assert!(check_flows_product_law(&alg, x, y, 3).unwrap().passed());
            assert!(check_flows_bch(&alg, x, y, 3).unwrap().passed());
        }
    }
    assert_eq!(alg.weight(), rat(-1, 1));
}
