mod common;

use common::check::oracle_agrees;
use common::{ideal, qq, sub};
use gpfkit_core::{Exec, GpfError, Oracle, Submodule};

#[test]
fn fixtures_agree_with_exact_computation() {
    let r = qq(&["x", "y"]);
    let zero = Submodule::zero(&r, 1);
    let fixtures = [
        (ideal(&r, &["1"]), ideal(&r, &["x", "y"])),
        (ideal(&r, &["1"]), ideal(&r, &["x^2", "x*y"])),
        (ideal(&r, &["x", "y"]), ideal(&r, &["x^2", "x*y", "y^2"])),
        (ideal(&r, &["x"]), ideal(&r, &["x^2", "x*y"])),
        (ideal(&r, &["1"]), ideal(&r, &["x^2", "y^3"])),
    ];
    for (top, bottom) in &fixtures {
        oracle_agrees(top.as_submodule(), bottom.as_submodule(), Exec::Sequential).unwrap();
    }
    oracle_agrees(&Submodule::free(&r, 1), &zero, Exec::Parallel).unwrap();
}

#[test]
fn rank_two_fixtures_agree() {
    let r = qq(&["x", "y"]);
    let free = Submodule::free(&r, 2);
    oracle_agrees(&free, &sub(&r, 2, &[&["x", "0"], &["0", "x"]]), Exec::Parallel).unwrap();
    oracle_agrees(&free, &sub(&r, 2, &[&["x^2", "0"], &["0", "y"], &["x*y", "0"]]), Exec::Sequential).unwrap();
}

#[test]
fn ass_of_residue_field_module() {
    let r = qq(&["x", "y"]);
    let m = ideal(&r, &["x", "y"]);
    let o = Oracle::for_fixture(&[m.as_submodule()], 2, 4096).unwrap();
    let top = o.span(&[(0, vec![0, 0])]);
    let bottom = o.load(m.as_submodule()).unwrap();
    assert_eq!(o.ass_bruteforce(&bottom, &top, Exec::Sequential), vec![vec![0, 1]]);
    let p = o.prime_ideal(&r, &[0, 1]);
    assert_eq!(p.attestation().to_string(), "finite-verified");
}

#[test]
fn budget_and_shape_errors() {
    let r = qq(&["x", "y", "z"]);
    let big = ideal(&r, &["x^5", "y^5", "z^5"]);
    assert!(matches!(Oracle::for_fixture(&[big.as_submodule()], 8, 4096), Err(GpfError::Budget(_))));
    let bent = ideal(&r, &["x + y"]);
    assert!(matches!(Oracle::for_fixture(&[bent.as_submodule()], 2, 4096), Err(GpfError::NotMonomial(_))));
}
