use atlas_freealg::Mode;
use atlas_nichols::suites::*;

fn assert_pass(v: atlas_nichols::Verdict) {
    println!("{v}");
    assert!(v.passed(), "{v}");
}

#[test]
fn identities_hold_on_random_triples() {
    assert_pass(identity_suite(100, 11, Mode::OneParameter).unwrap());
}

#[test]
fn identities_hold_multiparameter() {
    assert_pass(identity_suite(30, 12, Mode::Multiparameter).unwrap());
}

#[test]
fn omega_kills_serre_and_is_multiplicative() {
    assert_pass(omega_suite(4, 50, 3, Mode::OneParameter).unwrap());
    assert_pass(omega_suite(4, 20, 4, Mode::Multiparameter).unwrap());
}

#[test]
fn derivative_formulas_one_parameter() {
    assert_pass(derivative_suite(4, Mode::OneParameter).unwrap());
}

#[test]
fn derivative_formulas_multiparameter() {
    assert_pass(derivative_suite(3, Mode::Multiparameter).unwrap());
}

#[test]
fn bracket_structure_laws() {
    assert_pass(structure_suite(4, Mode::OneParameter).unwrap());
}

#[test]
fn bracket_structure_laws_multiparameter() {
    assert_pass(structure_suite(3, Mode::Multiparameter).unwrap());
}

#[test]
fn pbw_basis_at_rank_three() {
    assert_pass(pbw_suite(3, 6, Mode::OneParameter).unwrap());
}

#[test]
fn derivative_span_equality_at_rank_three() {
    for n in 1..=3 {
        assert_pass(theorem26_suite(n, Mode::OneParameter).unwrap());
    }
}

#[test]
fn every_rank_three_coideal_passes() {
    assert_pass(coideal_suite(3, 6, Mode::OneParameter).unwrap());
}
