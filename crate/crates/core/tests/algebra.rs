mod common;

use common::*;
use gpfkit_core::modops::{colon_ideal, colon_module, ideal_product, module_scale, partial_products, saturate};
use gpfkit_core::{Ideal, QuotientModule};

#[test]
fn polynomial_arithmetic() {
    let r = qq(&["x", "y"]);
    let f = r.parse("x^2 + y").unwrap().add(&r.parse("x*y - y").unwrap()).unwrap();
    assert_eq!(f, r.parse("x^2 + x*y").unwrap());
    let g = r.parse("x + y").unwrap().mul(&r.parse("x - y").unwrap()).unwrap();
    assert_eq!(g, r.parse("x^2 - y^2").unwrap());
    assert!(r.parse("x").unwrap().add(&r.parse("-x").unwrap()).unwrap().is_zero());
}

#[test]
fn groebner_examples() {
    let r = qq(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    assert_eq!(i.canonical_generators().len(), 2);
    assert!(i.contains_poly(&r.parse("x^3").unwrap()));
    assert!(!i.contains_poly(&r.parse("y").unwrap()));
    assert!(!i.contains_poly(&r.parse("y^2").unwrap()));
    let lin = ideal(&r, &["x - y", "y"]);
    assert!(same(&lin, &ideal(&r, &["x", "y"])));
    assert!(Ideal::new(&r, vec![]).unwrap().is_zero());
}

#[test]
fn quotient_ring_membership() {
    let r = cone_ring();
    let xy = ideal(&r, &["x*y"]);
    assert!(xy.contains_poly(&r.parse("z^2").unwrap()));
    assert!(Ideal::zero(&r).contains_poly(&r.parse("x*y - z^2").unwrap()));
}

#[test]
fn products_and_partials() {
    let r = qq(&["x", "y"]);
    let p = ideal_product(&ideal(&r, &["x"]), &ideal(&r, &["x", "y"])).unwrap();
    assert!(same(&p, &ideal(&r, &["x^2", "x*y"])));
    let parts = partial_products(&[ideal(&r, &["x", "y"]), ideal(&r, &["x"])]).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts[0].is_unit());
    assert!(same(&parts[2], &ideal(&r, &["x^2", "x*y"])));

    let c = cone_ring();
    let pc = ideal(&c, &["x", "z"]);
    assert!(same(&pc.power(2), &ideal(&c, &["x^2", "x*z", "z^2"])));
}

#[test]
fn scaling_kills_annihilated_modules() {
    let r = qq(&["x", "y"]);
    let m = doubled_line(&r);
    let s = module_scale(&ideal(&r, &["x"]), &m).unwrap();
    assert!(s.equals(m.bottom()).unwrap());
}

#[test]
fn colon_examples() {
    let r = qq(&["x", "y"]);
    let n = ideal(&r, &["x^2", "x*y"]);
    let c = colon_module(n.as_submodule(), &ideal(&r, &["x", "y"]), &whole(&r)).unwrap();
    assert!(c.equals(ideal(&r, &["x"]).as_submodule()).unwrap());

    let ci = colon_ideal(n.as_submodule(), ideal(&r, &["x"]).as_submodule()).unwrap();
    assert!(same(&ci, &ideal(&r, &["x", "y"])));
    assert!(colon_ideal(n.as_submodule(), n.as_submodule()).unwrap().is_unit());

    let m = doubled_line(&r);
    let ann = colon_ideal(m.bottom(), m.top()).unwrap();
    assert!(same(&ann, &ideal(&r, &["x"])));

    let cone = cone_ring();
    let p = ideal(&cone, &["x", "z"]);
    let c = colon_module(p.power(2).as_submodule(), &p, &whole(&cone)).unwrap();
    assert!(c.equals(ideal(&cone, &["x", "y", "z"]).as_submodule()).unwrap());
}

#[test]
fn colon_by_unit_and_zero() {
    let r = qq(&["x", "y"]);
    let n = ideal(&r, &["x^2", "y"]);
    let c = colon_module(n.as_submodule(), &Ideal::unit(&r), &whole(&r)).unwrap();
    assert!(c.equals(n.as_submodule()).unwrap());
    let (c, note) =
        gpfkit_core::modops::colon_module_with_note(n.as_submodule(), &Ideal::zero(&r), &whole(&r)).unwrap();
    assert!(c.is_free());
    assert!(note.is_some());
}

#[test]
fn saturation_examples() {
    let r = qq(&["x", "y"]);
    let y = r.parse("y").unwrap();
    let s = saturate(ideal(&r, &["x^2*y"]).as_submodule(), &y, &whole(&r)).unwrap();
    assert!(s.equals(ideal(&r, &["x^2"]).as_submodule()).unwrap());
    let s = saturate(ideal(&r, &["x^2", "x*y"]).as_submodule(), &y, &whole(&r)).unwrap();
    assert!(s.equals(ideal(&r, &["x"]).as_submodule()).unwrap());
}

#[test]
fn lattice_operations() {
    let r = qq(&["x", "y"]);
    let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
    assert!(same(&i, &ideal(&r, &["x*y"])));
    let n = sub(&r, 2, &[&["x", "y"], &["0", "y^2"]]);
    let z = gpfkit_core::Submodule::zero(&r, 2);
    assert!(n.sum(&z).unwrap().equals(&n).unwrap());
    assert!(ideal(&r, &["x"]).contains(&ideal(&r, &["x^2", "x*y"])).unwrap());
}

#[test]
fn module_intersection_in_rank_two() {
    let r = qq(&["x", "y"]);
    let a = sub(&r, 2, &[&["x", "0"], &["0", "1"]]);
    let b = sub(&r, 2, &[&["y", "y"]]);
    let i = a.intersect(&b).unwrap();
    assert!(i.equals(&sub(&r, 2, &[&["x*y", "x*y"]])).unwrap());
}

#[test]
fn quotient_module_rejects_non_submodules() {
    let r = qq(&["x", "y"]);
    let top = ideal(&r, &["x"]).as_submodule().clone();
    let bottom = ideal(&r, &["y"]).as_submodule().clone();
    assert!(QuotientModule::new(top, bottom).is_err());
}
