//! Generalized prime ideal factorizations `P_M(N)`: computation, existence
//! criteria and constructions of submodules with a prescribed factorization.

use std::fmt;

use crate::config::Config;
use crate::error::{GpfError, Result};
use crate::filtration::{filtration_from_chain, interchange, rpe_filtration, Filtration};
use crate::modops::{
    colon_module, ideal_product, module_scale, partial_products, saturate, Ideal, QuotientModule, Submodule,
};
use crate::primes::{ass_contains, ass_enumerate, supp_contains, AssSource, PrimeIdeal, PrimeSet};
use crate::Polynomial;

/// Primes with multiplicities, in order of first occurrence. Equality
/// ignores the order.
#[derive(Clone, Debug, Default)]
pub struct PrimeMultiset {
    entries: Vec<(PrimeIdeal, usize)>,
}

impl PrimeMultiset {
    pub fn from_primes<'a>(primes: impl IntoIterator<Item = &'a PrimeIdeal>) -> PrimeMultiset {
        let mut entries: Vec<(PrimeIdeal, usize)> = Vec::new();
        for p in primes {
            match entries.iter_mut().find(|(q, _)| q == p) {
                Some((_, r)) => *r += 1,
                None => entries.push((p.clone(), 1)),
            }
        }
        PrimeMultiset { entries }
    }

    pub fn entries(&self) -> &[(PrimeIdeal, usize)] {
        &self.entries
    }

    pub fn multiplicity(&self, p: &PrimeIdeal) -> usize {
        self.entries.iter().find(|(q, _)| q == p).map_or(0, |(_, r)| *r)
    }

    /// Sum of multiplicities: the filtration length.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, r)| r).sum()
    }

    pub fn distinct(&self) -> PrimeSet {
        PrimeSet::from_primes(self.entries.iter().map(|(p, _)| p.clone()))
    }

    fn sorted_keys(&self) -> Vec<(&str, usize)> {
        let mut v: Vec<_> = self.entries.iter().map(|(p, r)| (p.key(), *r)).collect();
        v.sort_unstable();
        v
    }
}

impl PartialEq for PrimeMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.sorted_keys() == other.sorted_keys()
    }
}

impl Eq for PrimeMultiset {}

impl fmt::Display for PrimeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(1)");
        }
        for (i, (p, r)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{p}")?;
            if *r > 1 {
                write!(f, "^{r}")?;
            }
        }
        Ok(())
    }
}

/// How the primes of a target are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingMode {
    /// Pairwise incomparable.
    Incomparable,
    /// Distinct, with `p_i ⊄ p_j` for `i < j`.
    Descending,
    /// `p_i` maximal among `p_i, ..., p_n` (repeats allowed).
    TailMaximal,
}

/// An ordered product `p_1^{r_1} ... p_n^{r_n}`.
#[derive(Clone, Debug)]
pub struct FactorizationTarget {
    factors: Vec<(PrimeIdeal, u32)>,
    mode: OrderingMode,
}

fn distinct(primes: &[&PrimeIdeal]) -> bool {
    primes.iter().enumerate().all(|(i, p)| primes[i + 1..].iter().all(|q| p != q))
}

impl FactorizationTarget {
    pub fn new(factors: Vec<(PrimeIdeal, u32)>, mode: OrderingMode) -> Result<FactorizationTarget> {
        if factors.is_empty() {
            return Err(GpfError::Ordering("empty product".into()));
        }
        if factors.iter().any(|(_, r)| *r == 0) {
            return Err(GpfError::Ordering("exponents must be at least 1".into()));
        }
        let t = FactorizationTarget { factors, mode };
        let ok = match mode {
            OrderingMode::Incomparable => t.is_incomparable(),
            OrderingMode::Descending => t.is_descending(),
            OrderingMode::TailMaximal => t.is_tail_maximal(),
        };
        if !ok {
            return Err(GpfError::Ordering(format!("{t} is not {mode:?}")));
        }
        Ok(t)
    }

    pub fn factors(&self) -> &[(PrimeIdeal, u32)] {
        &self.factors
    }

    pub fn mode(&self) -> OrderingMode {
        self.mode
    }

    fn bases(&self) -> Vec<&PrimeIdeal> {
        self.factors.iter().map(|(p, _)| p).collect()
    }

    pub fn is_incomparable(&self) -> bool {
        let ps = self.bases();
        distinct(&ps) && ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| !p.comparable(q)))
    }

    pub fn is_descending(&self) -> bool {
        let ps = self.bases();
        distinct(&ps) && ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| !q.strictly_contains(p)))
    }

    pub fn is_tail_maximal(&self) -> bool {
        let ps = self.expanded();
        ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| !q.strictly_contains(p)))
    }

    /// `p_1, ..., p_1, p_2, ...` with each prime repeated by its exponent.
    pub fn expanded(&self) -> Vec<PrimeIdeal> {
        self.factors.iter().flat_map(|(p, r)| std::iter::repeat_n(p.clone(), *r as usize)).collect()
    }

    pub fn multiset(&self) -> PrimeMultiset {
        PrimeMultiset::from_primes(&self.expanded())
    }

    /// The ideal `p_1^{r_1} ... p_n^{r_n}`.
    pub fn product(&self) -> Ideal {
        let ps = self.expanded();
        let mut acc = ps[0].ideal().clone();
        for p in &ps[1..] {
            acc = ideal_product(&acc, p.ideal()).expect("same ring");
        }
        acc
    }
}

impl fmt::Display for FactorizationTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, r)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{p}")?;
            if *r > 1 {
                write!(f, "^{r}")?;
            }
        }
        Ok(())
    }
}

/// `P_M(N)` together with the RPE filtration it was read from.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub multiset: PrimeMultiset,
    pub filtration: Filtration,
}

pub fn gpf(n: &Submodule, m: &QuotientModule, source: &AssSource, cfg: &Config) -> Result<Factorization> {
    let filtration = rpe_filtration(n, m, source, cfg)?;
    let multiset = PrimeMultiset::from_primes(&filtration.primes());
    Ok(Factorization { multiset, filtration })
}

fn expect_factorization(
    n: &Submodule,
    m: &QuotientModule,
    want: &PrimeMultiset,
    source: &AssSource,
    cfg: &Config,
) -> Result<()> {
    let got = gpf(n, m, source, cfg)?.multiset;
    if got != *want {
        return Err(GpfError::VerificationFailed(format!("constructed {n} has P = {got}, expected {want}")));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ExistsReport {
    /// `p_i ∈ Supp(M)` for each `i`.
    pub in_support: Vec<bool>,
    pub holds: bool,
    pub witness: Option<Submodule>,
    pub factorization: Option<PrimeMultiset>,
}

/// For pairwise incomparable primes: a submodule with `P_M(N) = p_1...p_n`
/// exists iff every `p_i` lies in `Supp(M)`. When it does, a witness is
/// constructed and checked.
pub fn exists_incomparable(
    primes: &[PrimeIdeal],
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<ExistsReport> {
    let target = FactorizationTarget::new(primes.iter().map(|p| (p.clone(), 1)).collect(), OrderingMode::Incomparable)?;
    let in_support = cfg.exec.map(primes, |p| supp_contains(p, m)).into_iter().collect::<Result<Vec<_>>>()?;
    if !in_support.iter().all(|b| *b) {
        return Ok(ExistsReport { in_support, holds: false, witness: None, factorization: None });
    }
    let n0 = module_scale(&target.product(), m)?;
    let witness = construct_incomparable(primes, &n0, m, source, cfg)?;
    Ok(ExistsReport { in_support, holds: true, witness: Some(witness), factorization: Some(target.multiset()) })
}

/// Given primes minimal in `Ass(M/N_0)`, moves them to the top of an RPE
/// filtration of `M` over `N_0` by interchanges and returns the module
/// `K ⊇ N_0` where they start, so `P_M(K) = p_1...p_r`.
pub fn construct_incomparable(
    primes: &[PrimeIdeal],
    n0: &Submodule,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<Submodule> {
    let mut f = rpe_filtration(n0, m, source, cfg)?;
    let ass = PrimeSet::from_primes(f.primes());
    let minimal = PrimeSet::from_primes(ass.minimal_elements());
    for p in primes {
        if !minimal.contains(p) {
            return Err(GpfError::NotMinimal { prime: p.to_string() });
        }
    }
    let (n, r) = (f.len(), primes.len());
    for (t, p) in primes.iter().enumerate().rev() {
        let dest = n - r + t;
        let mut j = (0..=dest).rev().find(|&j| f.steps[j].prime == *p).expect("target occurs in the filtration");
        while j < dest {
            f = interchange(&f, j, source, cfg)?;
            j += 1;
        }
    }
    let k = f.steps[n - r].from.clone();
    expect_factorization(&k, m, &PrimeMultiset::from_primes(primes), source, cfg)?;
    Ok(k)
}

fn hypothesis_evidence(q: &QuotientModule, source: &AssSource, cfg: &Config) -> String {
    match ass_enumerate(q, source, cfg) {
        Ok(a) if a.complete => format!("Ass = {}", a.primes),
        Ok(a) => format!("Ass = {} (relative to candidates)", a.primes),
        Err(e) => format!("Ass unavailable: {e}"),
    }
}

/// A submodule `N` with `P_M(N) = p^r`, namely the kernel of
/// `M → (M/p^r M)_p`, computed by saturating `p^r M` at an element lying in
/// every other associated prime but outside `p`. Requires
/// `p ∈ Ass(p^{r-1}M / p^r M)`.
pub fn construct_prime_power(
    p: &PrimeIdeal,
    r: u32,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<Submodule> {
    if r == 0 {
        return Err(GpfError::Ordering("exponents must be at least 1".into()));
    }
    let pr_m = module_scale(&p.ideal().power(r), m)?;
    let pr1_m = module_scale(&p.ideal().power(r - 1), m)?;
    let layer = QuotientModule::new(pr1_m, pr_m.clone())?;
    if !ass_contains(p, &layer)? {
        return Err(GpfError::HypothesisFailed {
            index: None,
            detail: format!("{p} ∉ Ass(p^{}M/p^{r}M); {}", r - 1, hypothesis_evidence(&layer, source, cfg)),
        });
    }
    let ass = ass_enumerate(&QuotientModule::new(m.top().clone(), pr_m.clone())?, source, cfg)?;
    let ring = m.ring();
    let mut f = Polynomial::one(ring);
    let mut others = false;
    for q in ass.primes.iter().filter(|q| *q != p) {
        let g = q
            .ideal()
            .canonical_generators()
            .into_iter()
            .find(|g| !p.ideal().contains_poly(g))
            .ok_or_else(|| GpfError::NoWitness(format!("every generator of {q} lies in {p}")))?;
        f = f.mul(&g)?;
        others = true;
    }
    let n = if others { saturate(&pr_m, &f, m)? } else { pr_m };
    expect_factorization(&n, m, &PrimeMultiset::from_primes(&vec![p.clone(); r as usize]), source, cfg)?;
    Ok(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppEntry {
    /// 1-based position in the target.
    pub index: usize,
    pub prime: String,
    pub holds: bool,
    /// The scaled module tested was zero.
    pub module_is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppReport {
    pub entries: Vec<SuppEntry>,
}

impl SuppReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn first_failure(&self) -> Option<&SuppEntry> {
        self.entries.iter().find(|e| !e.holds)
    }
}

fn supp_entry(index: usize, p: &PrimeIdeal, ideal: &Ideal, m: &QuotientModule) -> Result<SuppEntry> {
    let scaled = module_scale(ideal, m)?;
    let view = QuotientModule::new(scaled.clone(), m.bottom().clone())?;
    Ok(SuppEntry {
        index,
        prime: p.to_string(),
        holds: supp_contains(p, &view)?,
        module_is_zero: scaled.equals(m.bottom())?,
    })
}

fn power_product(factors: &[(PrimeIdeal, u32)], ring: &std::sync::Arc<crate::PolyRing>) -> Ideal {
    let mut acc = Ideal::unit(ring);
    for (p, r) in factors {
        acc = ideal_product(&acc, &p.ideal().power(*r)).expect("same ring");
    }
    acc
}

/// For each `i`: `p_i ∈ Supp(p_i^{r_i-1} p_{i+1}^{r_{i+1}} ... p_n^{r_n} M)`.
pub fn check_supp_conditions(target: &FactorizationTarget, m: &QuotientModule, cfg: &Config) -> Result<SuppReport> {
    if !target.is_descending() {
        return Err(GpfError::Ordering(format!("{target} is not descending")));
    }
    let fs = target.factors();
    let idx: Vec<usize> = (0..fs.len()).collect();
    let entries = cfg.exec.map(&idx, |&i| {
        let (p, r) = &fs[i];
        let mut parts = vec![(p.clone(), r - 1)];
        parts.extend(fs[i + 1..].iter().cloned());
        supp_entry(i + 1, p, &power_product(&parts, m.ring()), m)
    });
    Ok(SuppReport { entries: entries.into_iter().collect::<Result<_>>()? })
}

/// Builds `N` with `P_M(N) = p_1^{r_1}...p_n^{r_n}` from the tail: `L` runs
/// through prime-power constructions inside the previous `L`. The result is
/// re-checked by an independent factorization in `M`.
pub fn construct_general(
    target: &FactorizationTarget,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<Submodule> {
    let report = check_supp_conditions(target, m, cfg)?;
    if let Some(e) = report.first_failure() {
        let zero = if e.module_is_zero { " (the scaled module is zero)" } else { "" };
        return Err(GpfError::HypothesisFailed {
            index: Some(e.index),
            detail: format!("{} ∉ Supp of the scaled module{zero}", e.prime),
        });
    }
    let mut l = m.top().clone();
    for (i, (p, r)) in target.factors().iter().enumerate().rev() {
        let sub = QuotientModule::new(l, m.bottom().clone())?;
        l = construct_prime_power(p, *r, &sub, source, cfg).map_err(|e| match e {
            GpfError::HypothesisFailed { detail, .. } => GpfError::HypothesisFailed { index: Some(i + 1), detail },
            other => other,
        })?;
    }
    expect_factorization(&l, m, &target.multiset(), source, cfg)?;
    Ok(l)
}

#[derive(Clone, Debug)]
pub struct NecessaryReport {
    pub factorization: PrimeMultiset,
    /// False when `Ass(M/N)` has comparable primes.
    pub applicable: bool,
    pub entries: Vec<SuppEntry>,
}

impl NecessaryReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// When all of `Ass(M/N)` is minimal, checks for each `i` that
/// `p_i ∈ Supp(p_1^{r_1}...p_i^{r_i-1}...p_n^{r_n} M)`. The product is the
/// same for every reordering that puts `p_i` first.
pub fn check_necessary_conditions(
    n: &Submodule,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<NecessaryReport> {
    let factorization = gpf(n, m, source, cfg)?.multiset;
    let ass = factorization.distinct();
    if !ass.is_antichain() {
        return Ok(NecessaryReport { factorization, applicable: false, entries: Vec::new() });
    }
    let fs: Vec<(PrimeIdeal, u32)> = factorization.entries().iter().map(|(p, r)| (p.clone(), *r as u32)).collect();
    let idx: Vec<usize> = (0..fs.len()).collect();
    let entries = cfg.exec.map(&idx, |&i| {
        let mut parts = fs.clone();
        parts[i].1 -= 1;
        supp_entry(i + 1, &fs[i].0, &power_product(&parts, m.ring()), m)
    });
    let entries = entries.into_iter().collect::<Result<_>>()?;
    Ok(NecessaryReport { factorization, applicable: true, entries })
}

#[derive(Clone, Debug)]
pub struct IffEntry {
    /// 1-based position in the expanded product.
    pub index: usize,
    pub prime: PrimeIdeal,
    /// `Ass((aM : a_i) / (aM : a_{i-1}))`.
    pub ass: PrimeSet,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct IffReport {
    pub holds: bool,
    pub entries: Vec<IffEntry>,
    /// `aM = (aM : a_0) ⊆ (aM : a_1) ⊆ ... ⊆ (aM : a_n) = M`.
    pub chain: Vec<Submodule>,
    /// The chain as a verified RPE filtration when the criterion holds.
    pub filtration: Option<Filtration>,
    pub ass_complete: bool,
}

/// Decides `P_M(aM) = a` for a tail-maximal product `a = p_1...p_n` by
/// testing `Ass((aM : a_i)/(aM : a_{i-1})) = {p_i}` along the colon chain.
pub fn check_iff_criterion(
    target: &FactorizationTarget,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<IffReport> {
    if !target.is_tail_maximal() {
        return Err(GpfError::Ordering(format!("{target} is not tail-maximal")));
    }
    let primes = target.expanded();
    let ideals: Vec<Ideal> = primes.iter().map(|p| p.ideal().clone()).collect();
    let parts = partial_products(&ideals)?;
    let am = module_scale(&parts[parts.len() - 1], m)?;
    let chain: Vec<Submodule> = cfg.exec.map(&parts, |a| colon_module(&am, a, m)).into_iter().collect::<Result<_>>()?;
    let idx: Vec<usize> = (1..chain.len()).collect();
    let asses = cfg
        .exec
        .map(&idx, |&i| ass_enumerate(&QuotientModule::new(chain[i].clone(), chain[i - 1].clone())?, source, cfg));
    let mut entries = Vec::new();
    let mut complete = true;
    for (i, a) in idx.iter().zip(asses) {
        let a = a?;
        complete &= a.complete;
        let p = &primes[i - 1];
        let holds = a.primes.len() == 1 && a.primes.contains(p);
        entries.push(IffEntry { index: *i, prime: p.clone(), ass: a.primes, holds });
    }
    let holds = entries.iter().all(|e| e.holds);
    let filtration = if holds {
        let f = filtration_from_chain(m, &chain, &primes, source, cfg)?;
        if f.kind != crate::filtration::FiltrationKind::Rpe {
            return Err(GpfError::VerificationFailed(format!("colon chain of {target} is not RPE")));
        }
        Some(f)
    } else {
        None
    };
    Ok(IffReport { holds, entries, chain, filtration, ass_complete: complete })
}
