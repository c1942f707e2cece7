//! Submodules of free modules over `R = k[x]/J` and the ideal/submodule
//! algebra built on them: products, powers, colon modules, transporter
//! ideals, saturation, intersections and sums.
//!
//! Every submodule is stored by generators in the free module `k[x]^r`;
//! `J * k[x]^r` is adjoined implicitly whenever a Gröbner basis is needed.
//! Submodules of a quotient module `M = A/K` are submodules of the ambient
//! free module with `K` added before each computation.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{Coeff, Field, Monomial, MonomialOrder, Polynomial};
use crate::error::{GpfError, Result};
use crate::groebner::{GroebnerBasis, ModVec, ModuleOrder, Term, VecArith};
use crate::ring::PolyRing;

/// A finitely generated submodule of `R^rank`.
#[derive(Clone)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<ModVec>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

fn poly_to_vec(p: &Polynomial, pos: u32) -> ModVec {
    ModVec { terms: p.terms().iter().map(|(m, c)| (Term::new(pos, m.clone()), c.clone())).collect() }
}

/// Component polynomials of a position-over-term sorted vector.
fn components(ring: &Arc<PolyRing>, v: &ModVec, rank: usize) -> Vec<Polynomial> {
    let mut comps: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for (t, c) in &v.terms {
        comps[t.pos as usize].push((t.mon.clone(), c.clone()));
    }
    comps.into_iter().map(|terms| Polynomial::from_sorted_terms(ring, terms)).collect()
}

fn from_components(comps: &[Polynomial]) -> ModVec {
    let mut terms = Vec::new();
    for (pos, p) in comps.iter().enumerate() {
        terms.extend(p.terms().iter().map(|(m, c)| (Term::new(pos as u32, m.clone()), c.clone())));
    }
    ModVec { terms }
}

fn lift_with_tag(v: &ModVec, tag_exp: u32) -> Vec<(Term, Coeff)> {
    v.terms
        .iter()
        .map(|(t, c)| {
            let mut m = t.mon.with_leading_vars(1);
            m.set_exponent(0, tag_exp);
            (Term::new(t.pos, m), c.clone())
        })
        .collect()
}

/// Reduced POT-grevlex Gröbner basis of `A ∩ B` in `k[x]^r`, by eliminating
/// a tag variable from `t*A + (1-t)*B`.
pub(crate) fn intersect_raw(field: Field, a: &[ModVec], b: &[ModVec]) -> GroebnerBasis {
    let order = ModuleOrder::elimination(1);
    let arith = VecArith::new(field, order);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(arith.normalize(lift_with_tag(g, 1)));
    }
    for g in b {
        let mut terms = lift_with_tag(g, 0);
        terms.extend(lift_with_tag(g, 1).into_iter().map(|(t, c)| (t, field.neg(&c))));
        gens.push(arith.normalize(terms));
    }
    GroebnerBasis::compute(field, order, &gens).eliminate_leading_block(1)
}

impl Submodule {
    /// Submodule of `R^rank` generated by the given vectors.
    pub fn new(ring: &Arc<PolyRing>, rank: usize, vectors: &[Vec<Polynomial>]) -> Result<Submodule> {
        let mut gens = Vec::new();
        for v in vectors {
            if v.len() != rank {
                return Err(GpfError::Arity { expected: rank, found: v.len() });
            }
            for p in v {
                if !Arc::ptr_eq(p.ring(), ring) && **p.ring() != **ring {
                    return Err(GpfError::RingMismatch);
                }
            }
            gens.push(from_components(v));
        }
        Ok(Self::from_modvecs(ring, rank, gens))
    }

    pub(crate) fn from_modvecs(ring: &Arc<PolyRing>, rank: usize, gens: Vec<ModVec>) -> Submodule {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Submodule { ring: ring.clone(), rank, gens, gb: Arc::new(OnceLock::new()) }
    }

    fn from_basis(ring: &Arc<PolyRing>, rank: usize, gb: GroebnerBasis) -> Submodule {
        let gens = gb.elements().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Submodule { ring: ring.clone(), rank, gens, gb: Arc::new(cell) }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Submodule {
        Self::from_modvecs(ring, rank, Vec::new())
    }

    /// All of `R^rank`.
    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> Submodule {
        let gens = (0..rank as u32)
            .map(|pos| ModVec { terms: vec![(Term::new(pos, Monomial::one(ring.nvars())), ring.field().one())] })
            .collect();
        Self::from_modvecs(ring, rank, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Generators as given (zero vectors dropped).
    pub fn generators(&self) -> Vec<Vec<Polynomial>> {
        self.gens.iter().map(|g| components(&self.ring, g, self.rank)).collect()
    }

    /// Reduced Gröbner basis of the submodule plus `J^rank`.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| GroebnerBasis::compute(self.ring.field(), ModuleOrder::POT_GREVLEX, &self.with_relations()))
    }

    /// The reduced basis without elements lying in `J^rank`; canonical for the
    /// submodule of `R^rank`.
    pub(crate) fn canonical_modvecs(&self) -> Vec<ModVec> {
        let rel = self.ring.relation_basis();
        self.groebner()
            .elements()
            .iter()
            .filter(|g| {
                if !self.ring.is_quotient() {
                    return true;
                }
                // J^r is generated componentwise, so reduce each component
                self.split(g).iter().any(|p| !rel.normal_form(&poly_to_vec(p, 0)).is_zero())
            })
            .cloned()
            .collect()
    }

    fn split(&self, v: &ModVec) -> Vec<Polynomial> {
        components(&self.ring, v, self.rank)
    }

    pub fn canonical_generators(&self) -> Vec<Vec<Polynomial>> {
        self.canonical_modvecs().iter().map(|g| self.split(g)).collect()
    }

    fn check_compatible(&self, other: &Submodule) -> Result<()> {
        if !Arc::ptr_eq(&self.ring, &other.ring) && *self.ring != *other.ring {
            return Err(GpfError::RingMismatch);
        }
        if self.rank != other.rank {
            return Err(GpfError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Polynomial]) -> Result<bool> {
        if v.len() != self.rank {
            return Err(GpfError::Arity { expected: self.rank, found: v.len() });
        }
        Ok(self.groebner().contains(&from_components(v)))
    }

    /// Remainder of `v` modulo the reduced basis; zero exactly on members.
    pub fn normal_form(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rank {
            return Err(GpfError::Arity { expected: self.rank, found: v.len() });
        }
        Ok(self.split(&self.groebner().normal_form(&from_components(v))))
    }

    pub(crate) fn contains_modvec(&self, v: &ModVec) -> bool {
        self.groebner().contains(v)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.gens.iter().all(|g| self.contains_modvec(g)))
    }

    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.groebner().elements() == other.groebner().elements())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty() || self.canonical_modvecs().is_empty()
    }

    pub fn is_free(&self) -> bool {
        (0..self.rank as u32).all(|p| self.groebner().contains_unit_vector(p))
    }

    /// Every canonical generator is a single term `m * e_i`.
    pub fn is_monomial(&self) -> bool {
        self.canonical_modvecs().iter().all(|g| g.is_monomial())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_modvecs(&self.ring, self.rank, gens))
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        if self.contains(other)? {
            return Ok(other.clone());
        }
        if other.contains(self)? {
            return Ok(self.clone());
        }
        let gb = intersect_raw(self.ring.field(), &self.with_relations(), &other.with_relations());
        Ok(Self::from_basis(&self.ring, self.rank, gb))
    }

    /// `I * self`.
    pub fn scale(&self, ideal: &Ideal) -> Result<Submodule> {
        if !Arc::ptr_eq(&self.ring, ideal.ring()) && *self.ring != **ideal.ring() {
            return Err(GpfError::RingMismatch);
        }
        let arith = VecArith::new(self.ring.field(), ModuleOrder::POT_GREVLEX);
        let mut gens = Vec::new();
        for f in ideal.raw_polys() {
            for g in &self.gens {
                gens.push(arith.mul_poly(f.terms(), g));
            }
        }
        Ok(Self::from_modvecs(&self.ring, self.rank, gens))
    }

    /// Reduced Gröbner basis (relations included) for an arbitrary monomial
    /// order, as component vectors.
    pub fn basis_in(&self, order: MonomialOrder) -> Vec<Vec<Polynomial>> {
        let arith = VecArith::new(self.ring.field(), ModuleOrder::new(order));
        let gens: Vec<ModVec> = self.with_relations().into_iter().map(|g| arith.normalize(g.terms)).collect();
        let gb = GroebnerBasis::compute(self.ring.field(), arith.order, &gens);
        let pot = VecArith::new(self.ring.field(), ModuleOrder::POT_GREVLEX);
        gb.elements().iter().map(|g| self.split(&pot.normalize(g.terms.clone()))).collect()
    }

    /// Elements of the submodule involving only the `keep` variables, by a
    /// block order with the other variables eliminated first.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Submodule> {
        let n = self.ring.nvars();
        if let Some(&bad) = keep.iter().find(|&&i| i >= n) {
            return Err(GpfError::Arity { expected: n, found: bad + 1 });
        }
        let mut perm: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        let block = perm.len();
        perm.extend((0..n).filter(|i| keep.contains(i)));
        let permute = |v: &ModVec, forward: bool| -> Vec<(Term, Coeff)> {
            v.terms
                .iter()
                .map(|(t, c)| {
                    let e = t.mon.exponents();
                    let mut out = vec![0; n];
                    for (j, &p) in perm.iter().enumerate() {
                        if forward {
                            out[j] = e[p];
                        } else {
                            out[p] = e[j];
                        }
                    }
                    (Term::new(t.pos, Monomial::from_exponents(&out)), c.clone())
                })
                .collect()
        };
        let order = ModuleOrder::elimination(block);
        let arith = VecArith::new(self.ring.field(), order);
        let gens: Vec<ModVec> = self.with_relations().iter().map(|g| arith.normalize(permute(g, true))).collect();
        let gb = GroebnerBasis::compute(self.ring.field(), order, &gens);
        let pot = VecArith::new(self.ring.field(), ModuleOrder::POT_GREVLEX);
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.terms.iter().all(|(t, _)| t.mon.exponents()[..block].iter().all(|&e| e == 0)))
            .map(|g| pot.normalize(permute(g, false)))
            .collect();
        Ok(Self::from_modvecs(&self.ring, self.rank, kept))
    }

    /// Generators plus `J^r`.
    fn with_relations(&self) -> Vec<ModVec> {
        let mut gens = self.gens.clone();
        gens.extend(self.ring.relation_vectors(self.rank));
        gens
    }

    /// `{x in R^r : f x in self}`.
    fn colon_poly_free(&self, f: &Polynomial) -> Submodule {
        if f.reduced().is_zero() {
            return Submodule::free(&self.ring, self.rank);
        }
        if f.is_constant() {
            return self.clone();
        }
        let multiples: Vec<ModVec> = (0..self.rank as u32).map(|pos| poly_to_vec(f, pos)).collect();
        let gb = intersect_raw(self.ring.field(), &self.with_relations(), &multiples);
        let gens = gb
            .elements()
            .iter()
            .map(|v| {
                let comps: Vec<Polynomial> =
                    self.split(v).iter().map(|c| c.exact_div(f).expect("element of f*F is divisible by f")).collect();
                from_components(&comps)
            })
            .collect();
        Self::from_modvecs(&self.ring, self.rank, gens)
    }

    /// `{r in R : r v in self}` for a single vector `v`.
    fn transporter_of(&self, v: &ModVec) -> Ideal {
        if self.contains_modvec(v) {
            return Ideal::unit(&self.ring);
        }
        let gb = intersect_raw(self.ring.field(), &self.with_relations(), std::slice::from_ref(v));
        let vc = self.split(v);
        let lead = vc.iter().position(|p| !p.is_zero()).expect("nonzero vector");
        let gens: Vec<Polynomial> = gb
            .elements()
            .iter()
            .map(|w| self.split(w)[lead].exact_div(&vc[lead]).expect("element of R v is a multiple of v"))
            .collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.canonical_generators();
        write!(f, "(")?;
        for (i, v) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if self.rank == 1 {
                write!(f, "{}", v[0])?;
            } else {
                write!(f, "(")?;
                for (j, p) in v.iter().enumerate() {
                    if j > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")?;
            }
        }
        if gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{self}")
    }
}

/// An ideal of `R`: a submodule of `R^1`.
#[derive(Clone)]
pub struct Ideal {
    inner: Submodule,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let vectors: Vec<Vec<Polynomial>> = gens.into_iter().map(|p| vec![p]).collect();
        Ok(Ideal { inner: Submodule::new(ring, 1, &vectors)? })
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { inner: Submodule::free(ring, 1) }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { inner: Submodule::zero(ring, 1) }
    }

    /// The ideal generated by the given variables.
    pub fn of_variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect()).expect("same ring")
    }

    pub fn from_submodule(m: Submodule) -> Result<Ideal> {
        if m.rank != 1 {
            return Err(GpfError::Arity { expected: 1, found: m.rank });
        }
        Ok(Ideal { inner: m })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.inner.ring
    }

    pub fn as_submodule(&self) -> &Submodule {
        &self.inner
    }

    fn raw_polys(&self) -> Vec<Polynomial> {
        self.inner.gens.iter().map(|g| components(&self.inner.ring, g, 1).remove(0)).collect()
    }

    /// Generators as given.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.raw_polys()
    }

    /// Reduced Gröbner basis generators, relations of the ring dropped.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        self.inner.canonical_generators().into_iter().map(|mut v| v.remove(0)).collect()
    }

    /// Stable textual key; equal ideals have equal keys.
    pub fn canonical_key(&self) -> String {
        self.to_string()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.inner.groebner()
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.inner.contains_modvec(&poly_to_vec(p, 0))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.inner.contains(&other.inner)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.inner.equals(&other.inner)
    }

    pub fn is_unit(&self) -> bool {
        self.inner.groebner().contains_unit_vector(0)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal { inner: self.inner.sum(&other.inner)? })
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Ideal { inner: self.inner.intersect(&other.inner)? })
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        ideal_product(self, other)
    }

    pub fn power(&self, e: u32) -> Ideal {
        let mut acc = Ideal::unit(self.ring());
        for _ in 0..e {
            acc = ideal_product(&acc, self).expect("same ring");
        }
        acc
    }

    /// The monomial prime `(x_S)` this ideal equals, if any: its canonical
    /// generators are exactly distinct variables.
    pub fn variable_set(&self) -> Option<Vec<usize>> {
        let mut vars = Vec::new();
        for g in self.canonical_generators() {
            if !g.is_monomial() {
                return None;
            }
            let (m, c) = &g.terms()[0];
            if !self.ring().field().is_one(c) || m.degree() != 1 {
                return None;
            }
            vars.push(m.exponents().iter().position(|&e| e == 1).unwrap());
        }
        vars.sort_unstable();
        Some(vars)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// A quotient `top / bottom` of submodules of a free module, `bottom ⊆ top`.
/// Ideals viewed as modules have rank one; `R` itself is `R^1 / 0`.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    top: Submodule,
    bottom: Submodule,
}

/// A subquotient `A / B` of a free module; same representation as a
/// quotient module.
pub type SubquotientView = QuotientModule;

impl QuotientModule {
    pub fn new(top: Submodule, bottom: Submodule) -> Result<QuotientModule> {
        if !top.contains(&bottom)? {
            return Err(GpfError::NotContained(format!("{bottom} is not contained in {top}")));
        }
        Ok(QuotientModule { top, bottom })
    }

    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> QuotientModule {
        QuotientModule { top: Submodule::free(ring, rank), bottom: Submodule::zero(ring, rank) }
    }

    /// `R^rank / K`.
    pub fn free_quotient(bottom: Submodule) -> QuotientModule {
        QuotientModule { top: Submodule::free(&bottom.ring, bottom.rank), bottom }
    }

    /// `R / I`.
    pub fn ring_quotient(ideal: &Ideal) -> QuotientModule {
        Self::free_quotient(ideal.inner.clone())
    }

    pub fn top(&self) -> &Submodule {
        &self.top
    }

    pub fn bottom(&self) -> &Submodule {
        &self.bottom
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.top.ring
    }

    pub fn rank(&self) -> usize {
        self.top.rank
    }

    pub fn is_zero(&self) -> bool {
        self.bottom.contains(&self.top).unwrap_or(false)
    }

    /// `N + bottom`: the submodule of `M` that `N` stands for.
    pub fn lift(&self, n: &Submodule) -> Result<Submodule> {
        n.sum(&self.bottom)
    }

    /// Checks `N + bottom ⊆ top` and returns `N + bottom`.
    pub fn submodule(&self, n: &Submodule) -> Result<Submodule> {
        let lifted = self.lift(n)?;
        if !self.top.contains(&lifted)? {
            return Err(GpfError::NotContained(format!("{n} is not a submodule of {self}")));
        }
        Ok(lifted)
    }

    /// `M / N` for a submodule `N` of `M`.
    pub fn quotient_by(&self, n: &Submodule) -> Result<QuotientModule> {
        let lifted = self.submodule(n)?;
        Ok(QuotientModule { top: self.top.clone(), bottom: lifted })
    }

    /// `N / bottom` viewed as a module in its own right.
    pub fn restrict_to(&self, n: &Submodule) -> Result<QuotientModule> {
        let lifted = self.submodule(n)?;
        Ok(QuotientModule { top: lifted, bottom: self.bottom.clone() })
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

/// Ideal generated by the pairwise products of generators.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let mut gens = Vec::new();
    for f in a.raw_polys() {
        for g in b.raw_polys() {
            gens.push(f.mul(&g)?);
        }
    }
    Ideal::new(a.ring(), gens)
}

/// `[(1), p_1, p_1 p_2, ..., p_1...p_n]`.
pub fn partial_products(primes: &[Ideal]) -> Result<Vec<Ideal>> {
    let first = primes.first().ok_or_else(|| GpfError::Parse("empty prime list".into()))?;
    let mut out = vec![Ideal::unit(first.ring())];
    for p in primes {
        let next = ideal_product(out.last().unwrap(), p)?;
        out.push(next);
    }
    Ok(out)
}

/// `I * M`, as a submodule of the ambient free module (bottom adjoined).
pub fn module_scale(ideal: &Ideal, m: &QuotientModule) -> Result<Submodule> {
    m.top.scale(ideal)?.sum(&m.bottom)
}

/// `(N :_M I) = {x in M : I x ⊆ N}`, plus a note when `I = (0)`.
pub fn colon_module_with_note(
    n: &Submodule,
    ideal: &Ideal,
    m: &QuotientModule,
) -> Result<(Submodule, Option<&'static str>)> {
    let n = m.submodule(n)?;
    if ideal.is_zero() {
        return Ok((m.top.clone(), Some("colon by the zero ideal is the whole module")));
    }
    let mut acc: Option<Submodule> = None;
    for f in ideal.raw_polys() {
        let part = n.colon_poly_free(&f);
        acc = Some(match acc {
            None => part,
            Some(prev) => prev.intersect(&part)?,
        });
    }
    let free_colon = acc.expect("nonzero ideal has a generator");
    Ok((m.top.intersect(&free_colon)?, None))
}

pub fn colon_module(n: &Submodule, ideal: &Ideal, m: &QuotientModule) -> Result<Submodule> {
    colon_module_with_note(n, ideal, m).map(|(s, _)| s)
}

/// `(B :_R A) = {r in R : r A ⊆ B} = Ann(A / B)`.
pub fn colon_ideal(b: &Submodule, a: &Submodule) -> Result<Ideal> {
    b.check_compatible(a)?;
    let mut acc = Ideal::unit(&b.ring);
    for g in &a.gens {
        let t = b.transporter_of(g);
        acc = acc.intersect(&t)?;
    }
    Ok(acc)
}

/// `(N :_M f^∞)`: iterate `(N :_M f)` until it stabilizes.
pub fn saturate(n: &Submodule, f: &Polynomial, m: &QuotientModule) -> Result<Submodule> {
    if f.reduced().is_zero() {
        return Err(GpfError::ZeroPolynomial);
    }
    let principal = Ideal::new(m.ring(), vec![f.clone()])?;
    let mut cur = m.submodule(n)?;
    loop {
        let next = colon_module(&cur, &principal, m)?;
        if next.equals(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}
