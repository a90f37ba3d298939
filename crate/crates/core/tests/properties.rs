mod common;

use common::*;

const CASES: u32 = 256;

#[test]
fn field_axioms() {
    run_property(
        CASES,
        (ratfunc(2), ratfunc(2), ratfunc(2)),
        check_field_axioms,
    )
    .unwrap();
}

#[test]
fn reduction_is_canonical() {
    run_property(CASES, reduction_inputs(), check_reduction).unwrap();
}

#[test]
fn determinant_matches_leibniz() {
    run_property(CASES, small_matrix(), check_det_oracle).unwrap();
}

#[test]
fn fox_calculus_identities() {
    run_property(CASES, fox_inputs(), check_fox).unwrap();
}

#[test]
fn cylinder_monoid_laws() {
    run_property(64, cylinder_pair(), check_monoid).unwrap();
}
