use rbx_core::algebra::laws::check_rb_law;
use rbx_core::algebra::{Rescaled, SamplePlan};
use rbx_core::arith::rat;
use rbx_core::models::{IntegrationAlgebra, LaurentAlgebra, MatrixAlgebra, RatMatrix, SequenceAlgebra};
use rbx_core::yang_baxter::{
    aybe_check, check_dendriform, check_modified_ybe, check_operator_ybe, rb_from_tensor, AybeMode, TensorR,
};

/// Every tensor `±E_ab ⊗ E_cd ± E_ef ⊗ E_gh` over 2×2 matrix units.
fn small_tensors() -> Vec<TensorR> {
    let units: Vec<RatMatrix> = (1..=2)
        .flat_map(|i| (1..=2).map(move |j| RatMatrix::unit(2, i, j)))
        .collect();
    let simple: Vec<(RatMatrix, RatMatrix)> = units
        .iter()
        .flat_map(|u| units.iter().map(move |v| (u.clone(), v.clone())))
        .collect();
    let mut out = Vec::new();
    for a in 0..simple.len() {
        out.push(TensorR::new(2, vec![simple[a].clone()]).unwrap());
        for b in a + 1..simple.len() {
            for sign in [1, -1] {
                let second = (simple[b].0.scale(&rat(sign, 1)), simple[b].1.clone());
                out.push(TensorR::new(2, vec![simple[a].clone(), second]).unwrap());
            }
        }
    }
    out
}

#[test]
fn standard_solutions_give_weight_zero_operators() {
    let mut solutions = 0;
    for r in small_tensors() {
        if let Ok(alg) = rb_from_tensor(r, AybeMode::Standard) {
            solutions += 1;
            let law = check_rb_law(&alg, &SamplePlan::exhaustive());
            assert!(law.passed(), "{:?}", law.counterexample);
        }
    }
    assert!(solutions > 1);
}

#[test]
fn printed_form_admits_a_non_rota_baxter_solution() {
    let r = TensorR::new(
        2,
        vec![
            (RatMatrix::unit(2, 1, 1), RatMatrix::unit(2, 2, 1)),
            (RatMatrix::unit(2, 2, 1), RatMatrix::unit(2, 2, 2)),
        ],
    )
    .unwrap();
    assert!(aybe_check(&r, AybeMode::Printed).passed());
    assert!(!aybe_check(&r, AybeMode::Standard).passed());
    let alg = rb_from_tensor(r, AybeMode::Printed).unwrap();
    assert!(!check_rb_law(&alg, &SamplePlan::exhaustive()).passed());
}

#[test]
fn nilpotent_tensor_in_three_dimensions() {
    let r = TensorR::new(3, vec![(RatMatrix::unit(3, 1, 3), RatMatrix::unit(3, 1, 3))]).unwrap();
    let alg = rb_from_tensor(r, AybeMode::Printed).unwrap();
    assert!(check_rb_law(&alg, &SamplePlan::exhaustive()).passed());
    assert!(check_operator_ybe(&alg, &SamplePlan::random(30, 8)).unwrap().passed());
    assert!(check_dendriform(&alg, &SamplePlan::random(30, 8)).unwrap().passed());
}

#[test]
fn modified_relations_on_every_model() {
    let plan = SamplePlan::random(25, 42);
    assert!(check_modified_ybe(&MatrixAlgebra::new(2), &SamplePlan::exhaustive()).passed());
    assert!(check_modified_ybe(&MatrixAlgebra::new(3), &plan).passed());
    assert!(check_modified_ybe(&LaurentAlgebra::default(), &plan).passed());
    assert!(check_modified_ybe(&SequenceAlgebra::summation(6), &plan).passed());
    assert!(check_modified_ybe(&SequenceAlgebra::standard_noncommutative(4, 3, 2), &plan).passed());
    assert!(check_modified_ybe(&IntegrationAlgebra::new(10), &plan).passed());
    assert!(check_modified_ybe(&Rescaled::new(MatrixAlgebra::new(3), rat(2, 3)), &plan).passed());
}

#[test]
fn weight_zero_models_are_dendriform() {
    let plan = SamplePlan::random(25, 42);
    assert!(check_dendriform(&IntegrationAlgebra::new(10), &plan).unwrap().passed());
    let zeroed = Rescaled::new(MatrixAlgebra::new(2), rat(0, 1));
    assert!(check_dendriform(&zeroed, &SamplePlan::exhaustive()).unwrap().passed());
}
