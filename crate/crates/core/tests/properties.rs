mod support;

use support::*;

fn assert_suite(rep: SuiteReport) {
    assert!(
        rep.passed(),
        "{} failed after {} cases: {:#?}",
        rep.name,
        rep.cases,
        rep.failures
    );
}

#[test]
fn round_trip_roots() {
    assert_suite(round_trip(300, 1));
}

#[test]
fn exact_and_modular_routes_agree() {
    assert_suite(route_agreement(200, 2));
}

#[test]
fn canonical_roots_unique_and_injective() {
    assert_suite(canonical_roots(150, 3));
}

#[test]
fn lcm_witness_reproduces_series() {
    assert_suite(lcm_witness(100, 4));
}

#[test]
fn powers_of_one_plus_multiple() {
    assert_suite(power_congruence(200, 5));
}

#[test]
fn square_test_agrees_with_membership() {
    assert_suite(square_agreement(300, 6));
}

#[test]
fn pth_powers_pass_necessary_conditions() {
    assert_suite(pth_power_conditions(100, 7));
}
