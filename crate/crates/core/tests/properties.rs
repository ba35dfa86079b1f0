//! Runs every named property of the suite as its own test.

use bgbc_core::verify::{property_names, run_property, SuiteConfig};

fn check(name: &str) {
    let r = run_property(name, &SuiteConfig::default()).expect("known property");
    assert!(r.passed, "{r}");
}

macro_rules! properties {
    ($($test:ident => $name:literal,)*) => {
        $(
            #[test]
            fn $test() {
                check($name);
            }
        )*

        #[test]
        fn every_property_has_a_test() {
            let mut covered = vec![$($name),*];
            let mut all = property_names();
            covered.sort();
            all.sort();
            assert_eq!(covered, all);
        }
    };
}

properties! {
    fock_character => "fock.character",
    fock_mode_brackets => "fock.mode_brackets",
    fock_grade_shift => "fock.grade_shift",
    fock_translate_grade => "fock.translate_grade",
    vertex_creation_identity => "vertex.creation_identity",
    vertex_commutator_formula => "vertex.commutator_formula",
    vertex_derivative => "vertex.derivative",
    vertex_energy_charge => "vertex.energy_charge",
    vecfields_jacobi => "vecfields.jacobi",
    vecfields_closure => "vecfields.closure",
    vecfields_dimensions => "vecfields.dimensions",
    vecfields_generation => "vecfields.generation",
    action_grade_preservation => "action.grade_preservation",
    action_homomorphism => "action.homomorphism",
    action_gamma_expansion => "action.gamma_expansion",
    action_degree_zero => "action.degree_zero",
    action_k_operators => "action.k_operators",
    action_top_degree => "action.top_degree",
    hermitian_positive_definite => "hermitian.positive_definite",
    hermitian_single_modes => "hermitian.single_modes",
    hermitian_adjoint_q => "hermitian.adjoint.Q",
    hermitian_adjoint_j => "hermitian.adjoint.J",
    hermitian_adjoint_l => "hermitian.adjoint.L",
    hermitian_adjoint_d => "hermitian.adjoint.D",
    hermitian_adjoint_dp => "hermitian.adjoint.Dp",
    invariants_reduction => "invariants.reduction",
    invariants_generated_algebra => "invariants.generated_algebra",
    invariants_generators_annihilated => "invariants.generators_annihilated",
    invariants_evidence_containment => "invariants.evidence_containment",
}
