//! Brute-force ground truth on truncated monomial models.
//!
//! A fixture `M/N` with `M, N` generated by monomial vectors in `k[x]^r` is
//! modelled inside `F_q[x]/(x_1^d, ..., x_m^d)`. Submodules are explicit sets
//! of standard basis vectors `m * e_i`, obtained by closing the generators
//! under multiplication by variables. Everything is multigraded, so
//! annihilators of basis vectors are monomial ideals and associated primes
//! are found among them.
//!
//! With `g` the largest exponent in any generator, elements are probed in
//! exponents `<= g` by monomials of exponent `<= g`; products stay below
//! `2g + 1`. Each colon step can corrupt one more layer at the truncation
//! edge, so `d = 2g + slack + 1` keeps `slack` steps exact.

use std::sync::Arc;

use crate::arith::Field;
use crate::config::TieBreak;
use crate::error::{GpfError, Result};
use crate::modops::{Ideal, Submodule};
use crate::par::Exec;
use crate::primes::{Attestation, PrimeIdeal};
use crate::ring::PolyRing;

/// `F_q[x_1..x_m] / (x_1^d, ..., x_m^d)` with its standard monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    pub field: Field,
    pub nvars: usize,
    pub trunc: u32,
}

impl FiniteRing {
    /// Number of standard monomials, `d^m`.
    pub fn dimension(&self) -> usize {
        (self.trunc as usize).pow(self.nvars as u32)
    }

    fn index(&self, exps: &[u32]) -> Option<usize> {
        let mut idx = 0usize;
        for &e in exps.iter().rev() {
            if e >= self.trunc {
                return None;
            }
            idx = idx * self.trunc as usize + e as usize;
        }
        Some(idx)
    }

    fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let d = self.trunc as usize;
        (0..self.nvars)
            .map(|_| {
                let e = idx % d;
                idx /= d;
                e as u32
            })
            .collect()
    }

    /// All exponent vectors with every entry `<= bound`.
    fn box_monomials(&self, bound: u32) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.nvars {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=bound).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// A submodule of the truncated free module, as the set of standard basis
/// vectors it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    members: Vec<bool>,
}

impl FiniteModule {
    pub fn len(&self) -> usize {
        self.members.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A basis vector `x^exps * e_comp`.
pub type BasisVector = (usize, Vec<u32>);

/// The finite model of one fixture.
#[derive(Debug, Clone)]
pub struct Oracle {
    ring: FiniteRing,
    rank: usize,
    window: u32,
    slack: u32,
    vars: Vec<String>,
}

fn monomial_generators(s: &Submodule) -> Result<Vec<BasisVector>> {
    let mut out = Vec::new();
    for v in s.generators() {
        let nonzero: Vec<(usize, &crate::Polynomial)> = v.iter().enumerate().filter(|(_, p)| !p.is_zero()).collect();
        match nonzero.as_slice() {
            [(comp, p)] if p.is_monomial() => out.push((*comp, p.terms()[0].0.exponents().to_vec())),
            _ => return Err(GpfError::NotMonomial(format!("{s}"))),
        }
    }
    Ok(out)
}

impl Oracle {
    /// Sizes the model for the submodules `modules` over a polynomial ring,
    /// leaving room for `slack` colon steps. The first module fixes the rank;
    /// the others only widen the window.
    pub fn for_fixture(modules: &[&Submodule], slack: u32, budget: usize) -> Result<Oracle> {
        let first = modules.first().ok_or_else(|| GpfError::Parse("empty fixture".into()))?;
        let ring = first.ring();
        if ring.is_quotient() {
            return Err(GpfError::NotMonomial("the oracle models polynomial rings only".into()));
        }
        let mut g = 1;
        for s in modules {
            if **s.ring() != **ring {
                return Err(GpfError::RingMismatch);
            }
            for (_, e) in monomial_generators(s)? {
                g = g.max(e.iter().copied().max().unwrap_or(0));
            }
        }
        let trunc = 2 * g + slack + 1;
        let fr = FiniteRing { field: Field::Prime(2), nvars: ring.nvars(), trunc };
        let size = fr.dimension().saturating_mul(first.rank());
        if size > budget {
            return Err(GpfError::Budget(format!("{size} basis vectors exceed the budget {budget}")));
        }
        Ok(Oracle { ring: fr, rank: first.rank(), window: g, slack, vars: ring.vars().to_vec() })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Largest exponent in which elements are probed.
    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn slack(&self) -> u32 {
        self.slack
    }

    fn slot(&self, comp: usize, exps: &[u32]) -> Option<usize> {
        self.ring.index(exps).map(|i| comp * self.ring.dimension() + i)
    }

    /// Closure of the generators under multiplication by variables.
    pub fn span(&self, gens: &[BasisVector]) -> FiniteModule {
        let mut members = vec![false; self.rank * self.ring.dimension()];
        let mut queue: Vec<BasisVector> = Vec::new();
        for (c, e) in gens {
            if let Some(s) = self.slot(*c, e) {
                if !members[s] {
                    members[s] = true;
                    queue.push((*c, e.clone()));
                }
            }
        }
        while let Some((c, e)) = queue.pop() {
            for i in 0..self.ring.nvars {
                let mut f = e.clone();
                f[i] += 1;
                if let Some(s) = self.slot(c, &f) {
                    if !members[s] {
                        members[s] = true;
                        queue.push((c, f));
                    }
                }
            }
        }
        FiniteModule { members }
    }

    /// The model of a monomial submodule, from its given generators.
    pub fn load(&self, s: &Submodule) -> Result<FiniteModule> {
        if s.rank() != self.rank {
            return Err(GpfError::AmbientMismatch);
        }
        Ok(self.span(&monomial_generators(s)?))
    }

    /// Membership; basis vectors past the truncation are zero.
    pub fn member(&self, n: &FiniteModule, comp: usize, exps: &[u32]) -> bool {
        self.slot(comp, exps).is_none_or(|s| n.members[s])
    }

    /// Closed under multiplication by every variable.
    pub fn is_closed(&self, n: &FiniteModule) -> bool {
        let dim = self.ring.dimension();
        (0..n.members.len()).filter(|&s| n.members[s]).all(|s| {
            let (c, e) = (s / dim, self.ring.exponents(s % dim));
            (0..self.ring.nvars).all(|i| {
                let mut f = e.clone();
                f[i] += 1;
                self.member(n, c, &f)
            })
        })
    }

    /// Basis vectors with every exponent `<= bound`.
    pub fn basis_up_to(&self, bound: u32) -> Vec<BasisVector> {
        let mons = self.ring.box_monomials(bound.min(self.ring.trunc - 1));
        (0..self.rank).flat_map(|c| mons.iter().map(move |e| (c, e.clone()))).collect()
    }

    /// Basis vectors on which comparisons with exact computations are sound.
    pub fn comparison_window(&self) -> Vec<BasisVector> {
        self.basis_up_to(2 * self.window)
    }

    /// `{x in m : u x in n for every u in ideal}` by scanning, for a monomial
    /// ideal given by exponent vectors.
    pub fn colon_bruteforce(&self, n: &FiniteModule, ideal: &[Vec<u32>], m: &FiniteModule) -> FiniteModule {
        let dim = self.ring.dimension();
        let members = (0..m.members.len())
            .map(|s| {
                m.members[s] && {
                    let (c, e) = (s / dim, self.ring.exponents(s % dim));
                    ideal.iter().all(|u| {
                        let f: Vec<u32> = e.iter().zip(u).map(|(a, b)| a + b).collect();
                        self.member(n, c, &f)
                    })
                }
            })
            .collect();
        FiniteModule { members }
    }

    /// Monomials `u` with exponents `<= window` and `u x in n`.
    fn annihilator(&self, n: &FiniteModule, x: &BasisVector, probes: &[Vec<u32>]) -> Vec<bool> {
        probes
            .iter()
            .map(|u| {
                let f: Vec<u32> = x.1.iter().zip(u).map(|(a, b)| a + b).collect();
                self.member(n, x.0, &f)
            })
            .collect()
    }

    /// Variable set of the ideal if `ab in I` implies `a in I` or `b in I`
    /// for all probe monomials with `ab` a probe.
    fn prime_variables(&self, ann: &[bool], probes: &[Vec<u32>]) -> Option<Vec<usize>> {
        let h = self.window;
        let idx = |e: &[u32]| e.iter().fold(0usize, |acc, &v| acc * (h as usize + 1) + v as usize);
        for (ia, a) in probes.iter().enumerate() {
            for (ib, b) in probes.iter().enumerate().skip(ia) {
                let ab: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if ab.iter().any(|&e| e > h) {
                    continue;
                }
                if ann[idx(&ab)] && !ann[ia] && !ann[ib] {
                    return None;
                }
            }
        }
        let m = self.ring.nvars;
        Some(
            (0..m)
                .filter(|&i| {
                    let mut e = vec![0; m];
                    e[i] = 1;
                    ann[idx(&e)]
                })
                .collect(),
        )
    }

    /// `{(n : x) : x in m \ n, (n : x) prime}` as variable sets, sorted.
    pub fn ass_bruteforce(&self, n: &FiniteModule, m: &FiniteModule, exec: Exec) -> Vec<Vec<usize>> {
        let probes = self.ring.box_monomials(self.window);
        let candidates: Vec<BasisVector> = self
            .basis_up_to(self.window)
            .into_iter()
            .filter(|(c, e)| self.member(m, *c, e) && !self.member(n, *c, e))
            .collect();
        let found = exec.map(&candidates, |x| {
            let ann = self.annihilator(n, x, &probes);
            self.prime_variables(&ann, &probes)
        });
        let mut out: Vec<Vec<usize>> = found.into_iter().flatten().collect();
        out.sort();
        out.dedup();
        out
    }

    /// Canonical text of `(x_S)`, matching the symbolic engine's keys.
    pub fn key(&self, vars: &[usize]) -> String {
        if vars.is_empty() {
            return "(0)".into();
        }
        let names: Vec<&str> = vars.iter().map(|&i| self.vars[i].as_str()).collect();
        format!("({})", names.join(", "))
    }

    /// Prime sequence of an RPE filtration of `m` over `n`, by repeatedly
    /// taking a maximal prime from `ass_bruteforce` and the colon by scanning.
    pub fn rpe_bruteforce(
        &self,
        n: &FiniteModule,
        m: &FiniteModule,
        tie_break: TieBreak,
        exec: Exec,
    ) -> Result<Vec<Vec<usize>>> {
        let window = self.basis_up_to(self.window);
        let done = |cur: &FiniteModule| window.iter().all(|(c, e)| !self.member(m, *c, e) || self.member(cur, *c, e));
        let mut cur = n.clone();
        let mut primes = Vec::new();
        while !done(&cur) {
            if primes.len() as u32 >= self.slack {
                return Err(GpfError::Budget(format!("more than {} steps; enlarge the slack", self.slack)));
            }
            let ass = self.ass_bruteforce(&cur, m, exec);
            let maximal: Vec<&Vec<usize>> = ass
                .iter()
                .filter(|s| !ass.iter().any(|t| t.len() > s.len() && s.iter().all(|i| t.contains(i))))
                .collect();
            let pick = match tie_break {
                TieBreak::Lex => maximal.into_iter().min_by_key(|s| self.key(s)),
                TieBreak::Revlex => maximal.into_iter().max_by_key(|s| self.key(s)),
            }
            .ok_or_else(|| GpfError::VerificationFailed("empty Ass before reaching M".into()))?
            .clone();
            let gens: Vec<Vec<u32>> = pick
                .iter()
                .map(|&i| {
                    let mut e = vec![0; self.ring.nvars];
                    e[i] = 1;
                    e
                })
                .collect();
            let next = if gens.is_empty() { m.clone() } else { self.colon_bruteforce(&cur, &gens, m) };
            cur = next;
            primes.push(pick);
        }
        Ok(primes)
    }

    /// Turns an oracle prime into a prime ideal attested by the finite check.
    pub fn prime_ideal(&self, ring: &Arc<PolyRing>, vars: &[usize]) -> PrimeIdeal {
        PrimeIdeal::new(Ideal::of_variables(ring, vars))
            .expect("variable ideals are proper")
            .with_attestation(Attestation::FiniteVerified)
    }
}
