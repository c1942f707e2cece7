#![allow(dead_code)]

use std::sync::Arc;

use gpfkit_core::{Field, Ideal, PolyRing, PrimeIdeal, QuotientModule, Submodule};

pub fn qq(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(Field::Rational, vars).unwrap()
}

/// `ℚ[x,y,z]/(xy − z², x² − yz)`.
pub fn cone_ring() -> Arc<PolyRing> {
    let s = qq(&["x", "y", "z"]);
    s.quotient(&[s.parse("x*y - z^2").unwrap(), s.parse("x^2 - y*z").unwrap()]).unwrap()
}

pub fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
}

pub fn prime(r: &Arc<PolyRing>, gens: &[&str]) -> PrimeIdeal {
    PrimeIdeal::new(ideal(r, gens)).unwrap()
}

pub fn sub(r: &Arc<PolyRing>, rank: usize, vecs: &[&[&str]]) -> Submodule {
    let vs: Vec<Vec<_>> = vecs.iter().map(|v| v.iter().map(|g| r.parse(g).unwrap()).collect()).collect();
    Submodule::new(r, rank, &vs).unwrap()
}

pub fn whole(r: &Arc<PolyRing>) -> QuotientModule {
    QuotientModule::free(r, 1)
}

/// `(R/(x))²` over `ℚ[x,y]`.
pub fn doubled_line(r: &Arc<PolyRing>) -> QuotientModule {
    QuotientModule::free_quotient(sub(r, 2, &[&["x", "0"], &["0", "x"]]))
}

pub fn same(a: &Ideal, b: &Ideal) -> bool {
    a.equals(b).unwrap()
}

pub mod check {
    use gpfkit_core::modops::colon_module;
    use gpfkit_core::{
        ass_enumerate, gpf, AssSource, Config, Exec, Monomial, Oracle, Polynomial, QuotientModule, Submodule, TieBreak,
    };

    fn basis_vector(s: &Submodule, c: usize, e: &[u32]) -> Vec<Polynomial> {
        let ring = s.ring();
        let mut v = vec![Polynomial::zero(ring); s.rank()];
        v[c] = Polynomial::monomial(ring, Monomial::from_exponents(e), ring.field().one());
        v
    }

    /// Compares membership, Ass, colons by the primes found and the RPE
    /// prime sequence between the symbolic engine and the oracle.
    pub fn oracle_agrees(top: &Submodule, bottom: &Submodule, exec: Exec) -> Result<(), String> {
        let err = |e: gpfkit_core::GpfError| e.to_string();
        let oracle = Oracle::for_fixture(&[top, bottom], 12, 1 << 14).map_err(err)?;
        let ft = oracle.load(top).map_err(err)?;
        let fb = oracle.load(bottom).map_err(err)?;
        let ring = top.ring().clone();
        for (c, e) in oracle.comparison_window() {
            if bottom.contains_vector(&basis_vector(bottom, c, &e)).unwrap() != oracle.member(&fb, c, &e) {
                return Err(format!("membership of {e:?}e{c} in {bottom}"));
            }
        }
        let q = QuotientModule::new(top.clone(), bottom.clone()).map_err(err)?;
        let cfg = Config::default().with_exec(exec);
        let sym = ass_enumerate(&q, &AssSource::Monomial, &cfg).map_err(err)?;
        let fin = oracle.ass_bruteforce(&fb, &ft, exec);
        let mut sym_keys: Vec<String> = sym.primes.iter().map(|p| p.key().to_string()).collect();
        let mut fin_keys: Vec<String> = fin.iter().map(|s| oracle.key(s)).collect();
        sym_keys.sort();
        fin_keys.sort();
        if sym_keys != fin_keys {
            return Err(format!("Ass of {top} / {bottom}: symbolic {sym_keys:?}, oracle {fin_keys:?}"));
        }
        for vars in fin.iter().filter(|s| !s.is_empty()) {
            let p = oracle.prime_ideal(&ring, vars);
            let sym_colon = colon_module(bottom, p.ideal(), &q).map_err(err)?;
            let gens: Vec<Vec<u32>> =
                vars.iter().map(|&i| (0..ring.nvars()).map(|j| u32::from(i == j)).collect()).collect();
            let fin_colon = oracle.colon_bruteforce(&fb, &gens, &ft);
            for (c, e) in oracle.comparison_window() {
                if sym_colon.contains_vector(&basis_vector(top, c, &e)).unwrap() != oracle.member(&fin_colon, c, &e) {
                    return Err(format!("colon by {} at {e:?}e{c}", p.key()));
                }
            }
        }
        if !bottom.equals(top).unwrap() {
            for tb in [TieBreak::Lex, TieBreak::Revlex] {
                let f = gpf(bottom, &q, &AssSource::Monomial, &cfg.with_tie_break(tb)).map_err(err)?;
                let sym_seq: Vec<String> = f.filtration.primes().iter().map(|p| p.key().to_string()).collect();
                let fin_seq: Vec<String> =
                    oracle.rpe_bruteforce(&fb, &ft, tb, exec).map_err(err)?.iter().map(|s| oracle.key(s)).collect();
                if sym_seq != fin_seq {
                    return Err(format!("RPE primes of {bottom} in {top}: symbolic {sym_seq:?}, oracle {fin_seq:?}"));
                }
            }
        }
        Ok(())
    }
}

pub mod gen {
    use std::sync::Arc;

    use gpfkit_core::{Ideal, Monomial, PolyRing, Polynomial, PrimeIdeal, QuotientModule, Submodule};
    use rand::Rng;

    pub fn monomial<R: Rng>(rng: &mut R, ring: &Arc<PolyRing>, max_exp: u32) -> Polynomial {
        let exps: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..=max_exp)).collect();
        Polynomial::monomial(ring, Monomial::from_exponents(&exps), ring.field().one())
    }

    /// A proper nonzero monomial ideal.
    pub fn monomial_ideal<R: Rng>(rng: &mut R, ring: &Arc<PolyRing>, max_gens: usize, max_exp: u32) -> Ideal {
        loop {
            let k = rng.gen_range(1..=max_gens);
            let gens = (0..k).map(|_| monomial(rng, ring, max_exp)).collect();
            let i = Ideal::new(ring, gens).unwrap();
            if !i.is_unit() {
                return i;
            }
        }
    }

    pub fn monomial_prime<R: Rng>(rng: &mut R, ring: &Arc<PolyRing>) -> PrimeIdeal {
        let n = ring.nvars();
        loop {
            let vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if !vars.is_empty() {
                return PrimeIdeal::monomial(ring, &vars).unwrap();
            }
        }
    }

    /// `I_1 e_1 + ... + I_r e_r` with each `I_i` a monomial ideal or all of `R`.
    pub fn monomial_submodule<R: Rng>(rng: &mut R, ring: &Arc<PolyRing>, rank: usize, max_exp: u32) -> Submodule {
        let mut vecs = Vec::new();
        for c in 0..rank {
            let comp = if rng.gen_bool(0.25) { Ideal::unit(ring) } else { monomial_ideal(rng, ring, 3, max_exp) };
            for g in comp.canonical_generators() {
                let mut v = vec![Polynomial::zero(ring); rank];
                v[c] = g;
                vecs.push(v);
            }
        }
        Submodule::new(ring, rank, &vecs).unwrap()
    }

    /// A proper monomial pair `N ⊊ M ⊆ R^r` over `ℚ[x,y]` or `ℚ[x,y,z]`.
    pub fn fixture<R: Rng>(rng: &mut R, max_exp: u32) -> (Submodule, QuotientModule) {
        let vars: &[&str] = if rng.gen_bool(0.5) { &["x", "y"] } else { &["x", "y", "z"] };
        let ring = super::qq(vars);
        let rank = if rng.gen_bool(0.7) { 1 } else { 2 };
        loop {
            let top =
                if rng.gen_bool(0.6) { Submodule::free(&ring, rank) } else { monomial_submodule(rng, &ring, rank, 1) };
            let n = monomial_submodule(rng, &ring, rank, max_exp).intersect(&top).unwrap();
            if !n.equals(&top).unwrap() {
                return (n, QuotientModule::new(top, Submodule::zero(&ring, rank)).unwrap());
            }
        }
    }
}
