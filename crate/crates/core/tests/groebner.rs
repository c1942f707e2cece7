mod common;

use common::{cone_ring, ideal, qq, sub};
use gpfkit_core::{Ideal, MonomialOrder, Submodule};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn reduced_bases() {
    let r = qq(&["x", "y"]);
    let basis = ideal(&r, &["x^2", "x*y"]).as_submodule().basis_in(MonomialOrder::Grevlex);
    let text: Vec<String> = basis.iter().map(|v| v[0].to_string()).collect();
    assert_eq!(text, ["x^2", "x*y"]);
    let basis = ideal(&r, &["x - y", "y"]).as_submodule().basis_in(MonomialOrder::Lex);
    let text: Vec<String> = basis.iter().map(|v| v[0].to_string()).collect();
    assert_eq!(text, ["x", "y"]);
    assert!(Submodule::zero(&r, 1).basis_in(MonomialOrder::Grevlex).is_empty());
}

#[test]
fn normal_forms_and_membership() {
    let r = qq(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    assert!(i.contains_poly(&r.parse("x^3").unwrap()));
    assert!(!i.contains_poly(&r.parse("y").unwrap()));
    assert!(!i.contains_poly(&r.parse("y^2").unwrap()));
    let nf = |i: &Ideal, f: &str| i.as_submodule().normal_form(&[r.parse(f).unwrap()]).unwrap()[0].to_string();
    assert_eq!(nf(&i, "x^3"), "0");
    assert_eq!(nf(&i, "y^2"), "y^2");
    assert_eq!(nf(&ideal(&r, &["x"]), "x + y"), "y");
    assert!(ideal(&r, &["x"]).contains_poly(&r.parse("x*y").unwrap()));
    let cone = cone_ring();
    let xy = ideal(&cone, &["x"]).product(&ideal(&cone, &["y"])).unwrap();
    assert!(xy.contains_poly(&cone.parse("z^2").unwrap()));
    assert!(Ideal::zero(&cone).contains_poly(&cone.parse("x*y - z^2").unwrap()));
}

#[test]
fn elimination() {
    let r = qq(&["t", "x", "y"]);
    let tagged = ideal(&r, &["t*x", "(1 - t)*y"]);
    let e = tagged.as_submodule().eliminate(&[1, 2]).unwrap();
    assert!(e.equals(ideal(&r, &["x*y"]).as_submodule()).unwrap());
    let r = qq(&["x", "y"]);
    let x = ideal(&r, &["x"]);
    assert!(x.as_submodule().eliminate(&[0, 1]).unwrap().equals(x.as_submodule()).unwrap());
    assert!(ideal(&r, &["x - y^2"]).as_submodule().eliminate(&[1]).unwrap().is_zero());
    let e = ideal(&r, &["x - y^2", "y^3"]).as_submodule().eliminate(&[0]).unwrap();
    assert!(e.equals(ideal(&r, &["x^2"]).as_submodule()).unwrap());
}

#[test]
fn bases_ignore_generator_order() {
    let r = qq(&["x", "y", "z"]);
    let mut gens = vec!["x^2 - y*z", "x*y*z - z^3", "y^2 + x", "z^2*x - y"];
    let reference = ideal(&r, &gens).as_submodule().basis_in(MonomialOrder::Grevlex);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        gens.shuffle(&mut rng);
        assert_eq!(ideal(&r, &gens).as_submodule().basis_in(MonomialOrder::Grevlex), reference);
    }
    let m = sub(&r, 2, &[&["x", "y"], &["y", "z"], &["z", "x"]]);
    let n = sub(&r, 2, &[&["z", "x"], &["x", "y"], &["y", "z"]]);
    assert_eq!(m.basis_in(MonomialOrder::Lex), n.basis_in(MonomialOrder::Lex));
}
