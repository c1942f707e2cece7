mod common;

use common::*;
use gpfkit_core::{
    ass_contains, ass_enumerate, is_maximal_in, supp_contains, AssSource, Attestation, CandidateRegistry, Config, Exec,
    GpfError, PrimeIdeal, PrimeSet, QuotientModule, SubquotientView,
};

#[test]
fn attestations() {
    let r = qq(&["x", "y"]);
    assert_eq!(prime(&r, &["x", "y"]).attestation(), Attestation::MonomialVerified);
    assert_eq!(prime(&r, &["x - y^2"]).attestation(), Attestation::Assumed);
    let c = cone_ring();
    assert_eq!(prime(&c, &["x", "z"]).attestation(), Attestation::MonomialVerified);
    assert_eq!(prime(&c, &["x", "y", "z"]).attestation(), Attestation::MonomialVerified);
    assert_eq!(prime(&c, &["x - y"]).attestation(), Attestation::Assumed);
    // R/(y) = k[x,z]/(x^2, z^2) is not a domain
    assert!(matches!(PrimeIdeal::new(ideal(&c, &["y"])), Err(GpfError::NotPrime(_))));
    assert!(matches!(PrimeIdeal::new(ideal(&r, &["x^2"])), Err(GpfError::NotPrime(_))));
}

#[test]
fn support_examples() {
    let r = qq(&["x", "y"]);
    let q = QuotientModule::ring_quotient(&ideal(&r, &["x^2", "x*y"]));
    assert!(supp_contains(&prime(&r, &["x", "y"]), &q).unwrap());

    let m = doubled_line(&r);
    let p2m = gpfkit_core::modops::module_scale(&ideal(&r, &["x"]), &m).unwrap();
    let view = SubquotientView::new(p2m, m.bottom().clone()).unwrap();
    assert!(!supp_contains(&prime(&r, &["x", "y"]), &view).unwrap());

    let unit = QuotientModule::ring_quotient(&gpfkit_core::Ideal::unit(&r));
    assert!(!supp_contains(&prime(&r, &["x"]), &unit).unwrap());
}

#[test]
fn ass_membership_on_the_cone() {
    let c = cone_ring();
    let p = prime(&c, &["x", "z"]);
    let m = prime(&c, &["x", "y", "z"]);
    let q = QuotientModule::new(p.ideal().as_submodule().clone(), p.ideal().power(2).as_submodule().clone()).unwrap();
    assert!(!ass_contains(&p, &q).unwrap());
    assert!(ass_contains(&m, &q).unwrap());
}

#[test]
fn ass_of_square_of_maximal_ideal() {
    let r = qq(&["x", "y"]);
    let p = prime(&r, &["x", "y"]);
    let q = QuotientModule::new(p.ideal().as_submodule().clone(), p.ideal().power(2).as_submodule().clone()).unwrap();
    assert!(ass_contains(&p, &q).unwrap());
}

#[test]
fn monomial_enumeration() {
    let r = qq(&["x", "y"]);
    let q = QuotientModule::ring_quotient(&ideal(&r, &["x^2", "x*y"]));
    for exec in [Exec::Sequential, Exec::Parallel] {
        let cfg = Config::default().with_exec(exec);
        let ass = ass_enumerate(&q, &AssSource::Monomial, &cfg).unwrap();
        assert!(ass.complete);
        assert_eq!(ass.primes, PrimeSet::from_primes([prime(&r, &["x"]), prime(&r, &["x", "y"])]));
    }
    let zero = QuotientModule::new(whole(&r).top().clone(), whole(&r).top().clone()).unwrap();
    assert!(ass_enumerate(&zero, &AssSource::Monomial, &Config::default()).unwrap().primes.is_empty());
}

#[test]
fn ass_of_free_module_is_zero_ideal() {
    let r = qq(&["x", "y"]);
    let ass = ass_enumerate(&whole(&r), &AssSource::Monomial, &Config::default()).unwrap();
    assert_eq!(ass.primes.len(), 1);
    assert!(ass.primes.as_slice()[0].ideal().is_zero());
}

#[test]
fn monomial_mode_rejects_other_input() {
    let c = cone_ring();
    let q = QuotientModule::ring_quotient(&ideal(&c, &["x"]));
    assert!(matches!(ass_enumerate(&q, &AssSource::Monomial, &Config::default()), Err(GpfError::NotMonomial(_))));
    let r = qq(&["x", "y"]);
    let q = QuotientModule::ring_quotient(&ideal(&r, &["x - y^2"]));
    assert!(matches!(ass_enumerate(&q, &AssSource::Monomial, &Config::default()), Err(GpfError::NotMonomial(_))));
}

#[test]
fn registry_enumeration_on_the_cone() {
    let c = cone_ring();
    let p = prime(&c, &["x", "z"]);
    let m = prime(&c, &["x", "y", "z"]);
    let reg = CandidateRegistry::new(&c, [p.clone(), m.clone()]).unwrap();
    let q = QuotientModule::ring_quotient(&p.ideal().power(2));
    let ass = ass_enumerate(&q, &AssSource::Registry(reg), &Config::default()).unwrap();
    assert!(!ass.complete);
    assert!(ass.primes.contains(&m));
    assert!(ass.primes.contains(&p));
}

#[test]
fn maximality() {
    let r = qq(&["x", "y"]);
    let s = PrimeSet::from_primes([prime(&r, &["x"]), prime(&r, &["x", "y"])]);
    assert!(is_maximal_in(&prime(&r, &["x", "y"]), &s).unwrap());
    assert!(!is_maximal_in(&prime(&r, &["x"]), &s).unwrap());
    assert!(is_maximal_in(&prime(&r, &["y"]), &PrimeSet::from_primes([prime(&r, &["y"])])).unwrap());
    assert!(is_maximal_in(&prime(&r, &["y"]), &s).is_err());
}
