//! Prime ideals with attestations, Supp/Ass membership and Ass enumeration.

use std::fmt;
use std::sync::Arc;

use crate::config::Config;
use crate::error::{GpfError, Result};
use crate::modops::{colon_ideal, colon_module, Ideal, QuotientModule, SubquotientView};
use crate::ring::PolyRing;

/// How the primality of an ideal is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Attestation {
    /// Generated by variables and containing the ring's relations.
    MonomialVerified,
    /// Checked exhaustively in a finite model.
    FiniteVerified,
    /// Declared by the caller; results depending on it are conditional.
    Assumed,
}

impl fmt::Display for Attestation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Attestation::MonomialVerified => "monomial-verified",
            Attestation::FiniteVerified => "finite-verified",
            Attestation::Assumed => "assumed",
        })
    }
}

#[derive(Clone)]
pub struct PrimeIdeal {
    ideal: Ideal,
    attestation: Attestation,
    key: String,
}

impl PrimeIdeal {
    /// Attests the ideal automatically: monomial primes are verified,
    /// anything else is assumed. The unit ideal and monomial ideals not
    /// generated by variables are rejected.
    pub fn new(ideal: Ideal) -> Result<PrimeIdeal> {
        if ideal.is_unit() {
            return Err(GpfError::NotPrime("the unit ideal".into()));
        }
        let attestation = if ideal.variable_set().is_some() {
            Attestation::MonomialVerified
        } else if ideal.groebner().elements().iter().all(|g| g.is_monomial()) {
            return Err(GpfError::NotPrime(format!("{ideal} is monomial but not generated by variables")));
        } else {
            Attestation::Assumed
        };
        let key = ideal.canonical_key();
        Ok(PrimeIdeal { ideal, attestation, key })
    }

    /// `(x_i : i in vars)`; fails if the ring relations are not contained in it.
    pub fn monomial(ring: &Arc<PolyRing>, vars: &[usize]) -> Result<PrimeIdeal> {
        let p = PrimeIdeal::new(Ideal::of_variables(ring, vars))?;
        if p.attestation != Attestation::MonomialVerified {
            return Err(GpfError::NotPrime(format!("{p} does not contain the ring relations")));
        }
        Ok(p)
    }

    pub fn with_attestation(mut self, attestation: Attestation) -> PrimeIdeal {
        self.attestation = attestation;
        self
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }

    pub fn attestation(&self) -> Attestation {
        self.attestation
    }

    /// Canonical generator string; equal primes have equal keys.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &PrimeIdeal) -> bool {
        self.ideal.contains(&other.ideal).unwrap_or(false)
    }

    /// `other ⊊ self`.
    pub fn strictly_contains(&self, other: &PrimeIdeal) -> bool {
        self.key != other.key && self.contains(other)
    }

    pub fn comparable(&self, other: &PrimeIdeal) -> bool {
        self.contains(other) || other.contains(self)
    }
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for PrimeIdeal {}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeIdeal{} [{}]", self.key, self.attestation)
    }
}

/// Primes deduplicated by canonical form, kept sorted by key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeSet {
    elements: Vec<PrimeIdeal>,
}

impl PrimeSet {
    pub fn new() -> PrimeSet {
        PrimeSet::default()
    }

    pub fn from_primes(primes: impl IntoIterator<Item = PrimeIdeal>) -> PrimeSet {
        let mut s = PrimeSet::new();
        for p in primes {
            s.insert(p);
        }
        s
    }

    /// Returns false if an equal prime is already present.
    pub fn insert(&mut self, p: PrimeIdeal) -> bool {
        match self.elements.binary_search_by(|q| q.key.cmp(&p.key)) {
            Ok(_) => false,
            Err(i) => {
                self.elements.insert(i, p);
                true
            }
        }
    }

    pub fn contains(&self, p: &PrimeIdeal) -> bool {
        self.elements.binary_search_by(|q| q.key.cmp(&p.key)).is_ok()
    }

    pub fn get(&self, p: &PrimeIdeal) -> Option<&PrimeIdeal> {
        self.elements.binary_search_by(|q| q.key.cmp(&p.key)).ok().map(|i| &self.elements[i])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PrimeIdeal> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[PrimeIdeal] {
        &self.elements
    }

    /// Elements not strictly contained in another element.
    pub fn maximal_elements(&self) -> Vec<PrimeIdeal> {
        self.elements.iter().filter(|p| !self.elements.iter().any(|q| q.strictly_contains(p))).cloned().collect()
    }

    /// Elements strictly containing no other element.
    pub fn minimal_elements(&self) -> Vec<PrimeIdeal> {
        self.elements.iter().filter(|p| !self.elements.iter().any(|q| p.strictly_contains(q))).cloned().collect()
    }

    /// Whether every pair of distinct elements is incomparable.
    pub fn is_antichain(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, p)| self.elements[i + 1..].iter().all(|q| !p.comparable(q)))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl<'a> IntoIterator for &'a PrimeSet {
    type Item = &'a PrimeIdeal;
    type IntoIter = std::slice::Iter<'a, PrimeIdeal>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Candidate primes searched when Ass cannot be enumerated exactly.
#[derive(Clone, Debug)]
pub struct CandidateRegistry {
    ring: Arc<PolyRing>,
    candidates: PrimeSet,
}

impl CandidateRegistry {
    pub fn new(ring: &Arc<PolyRing>, candidates: impl IntoIterator<Item = PrimeIdeal>) -> Result<Self> {
        let candidates = PrimeSet::from_primes(candidates);
        for p in &candidates {
            if **p.ring() != **ring {
                return Err(GpfError::RingMismatch);
            }
        }
        Ok(CandidateRegistry { ring: ring.clone(), candidates })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn candidates(&self) -> &PrimeSet {
        &self.candidates
    }
}

/// Where associated primes come from.
#[derive(Clone, Debug)]
pub enum AssSource {
    /// Exhaustive search over variable-subset primes; exact for monomial data
    /// over a polynomial ring.
    Monomial,
    Registry(CandidateRegistry),
}

/// Result of an Ass enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssResult {
    pub primes: PrimeSet,
    /// False when the set is only relative to a candidate registry.
    pub complete: bool,
}

fn check_ring(p: &PrimeIdeal, ring: &Arc<PolyRing>) -> Result<()> {
    if !Arc::ptr_eq(p.ring(), ring) && **p.ring() != **ring {
        return Err(GpfError::RingMismatch);
    }
    Ok(())
}

/// `p ∈ Supp(A/B)`, i.e. `Ann(A/B) ⊆ p`.
pub fn supp_contains(p: &PrimeIdeal, q: &SubquotientView) -> Result<bool> {
    check_ring(p, q.ring())?;
    let ann = colon_ideal(q.bottom(), q.top())?;
    p.ideal().contains(&ann)
}

/// `p ∈ Ass(M/N)` for `q = M/N`: with `K = (N :_M p)`, tests `Ann(K/N) ⊆ p`.
pub fn ass_contains(p: &PrimeIdeal, q: &QuotientModule) -> Result<bool> {
    check_ring(p, q.ring())?;
    let k = colon_module(q.bottom(), p.ideal(), q)?;
    if k.equals(q.bottom())? {
        return Ok(false);
    }
    supp_contains(p, &SubquotientView::new(k, q.bottom().clone())?)
}

fn is_monomial_input(q: &QuotientModule) -> bool {
    !q.ring().is_quotient() && q.top().is_monomial() && q.bottom().is_monomial()
}

/// Associated primes of `q = M/N`.
pub fn ass_enumerate(q: &QuotientModule, source: &AssSource, cfg: &Config) -> Result<AssResult> {
    match source {
        AssSource::Monomial => ass_monomial(q, cfg),
        AssSource::Registry(reg) => {
            if **reg.ring() != **q.ring() {
                return Err(GpfError::RingMismatch);
            }
            if q.is_zero() {
                return Ok(AssResult { primes: PrimeSet::new(), complete: false });
            }
            let cands = reg.candidates().as_slice();
            let hits = cfg.exec.map(cands, |p| ass_contains(p, q));
            let mut primes = PrimeSet::new();
            for (p, hit) in cands.iter().zip(hits) {
                if hit? {
                    primes.insert(p.clone());
                }
            }
            Ok(AssResult { primes, complete: false })
        }
    }
}

fn ass_monomial(q: &QuotientModule, cfg: &Config) -> Result<AssResult> {
    if !is_monomial_input(q) {
        return Err(GpfError::NotMonomial(format!("{q}")));
    }
    let ring = q.ring();
    let m = ring.nvars();
    if m > cfg.monomial_bound {
        return Err(GpfError::TooManyVariables { nvars: m, bound: cfg.monomial_bound });
    }
    if q.is_zero() {
        return Ok(AssResult { primes: PrimeSet::new(), complete: true });
    }
    let ann = colon_ideal(q.bottom(), q.top())?;
    let ann_masks: Vec<u32> = ann
        .canonical_generators()
        .iter()
        .map(|g| {
            let exps = g.terms()[0].0.exponents();
            (0..m).filter(|&i| exps[i] > 0).fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    // (x_S) contains a monomial iff S meets its support
    let subsets: Vec<u32> = (0..(1u32 << m)).filter(|s| ann_masks.iter().all(|g| g & s != 0)).collect();
    let hits = cfg.exec.map(&subsets, |&s| -> Result<Option<PrimeIdeal>> {
        let vars: Vec<usize> = (0..m).filter(|i| s & (1 << i) != 0).collect();
        let p = PrimeIdeal::monomial(ring, &vars)?;
        Ok(ass_contains(&p, q)?.then_some(p))
    });
    let mut primes = PrimeSet::new();
    for h in hits {
        if let Some(p) = h? {
            primes.insert(p);
        }
    }
    Ok(AssResult { primes, complete: true })
}

/// No element of `set` strictly contains `p`.
pub fn is_maximal_in(p: &PrimeIdeal, set: &PrimeSet) -> Result<bool> {
    if !set.contains(p) {
        return Err(GpfError::PrimeNotInSet(p.to_string()));
    }
    Ok(!set.iter().any(|q| q.strictly_contains(p)))
}
