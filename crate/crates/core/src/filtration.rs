//! Prime extensions and maximal/regular prime extension filtrations.

use std::fmt;

use crate::config::{Config, TieBreak};
use crate::error::{GpfError, Result};
use crate::modops::{colon_ideal, colon_module, partial_products, QuotientModule, Submodule};
use crate::primes::{ass_enumerate, AssSource, PrimeIdeal, PrimeSet};

/// What was checked about one step `from ⊂ to` labelled `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepFlags {
    /// `(from : to) = p` and `Ass(to/from) = {p}`.
    pub prime_extension: bool,
    /// `to = (from :_M p)`.
    pub maximal: bool,
    /// `p` is maximal in `Ass(M/from)`.
    pub regular: bool,
}

impl StepFlags {
    pub fn all(&self) -> bool {
        self.prime_extension && self.maximal && self.regular
    }
}

#[derive(Clone, Debug)]
pub struct PrimeExtensionStep {
    pub from: Submodule,
    pub to: Submodule,
    pub prime: PrimeIdeal,
    pub flags: StepFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationKind {
    Chain,
    Mpe,
    Rpe,
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationKind::Chain => "chain",
            FiltrationKind::Mpe => "MPE",
            FiltrationKind::Rpe => "RPE",
        })
    }
}

/// `N = M_0 ⊂ M_1 ⊂ ... ⊂ M_n = M`; submodules are stored with the
/// denominator of `M` adjoined.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub ambient: QuotientModule,
    pub steps: Vec<PrimeExtensionStep>,
    pub kind: FiltrationKind,
    /// Every Ass set used was exact rather than relative to candidates.
    pub ass_complete: bool,
}

fn kind_of<'a>(flags: impl Iterator<Item = &'a StepFlags> + Clone) -> FiltrationKind {
    if flags.clone().all(|f| f.all()) {
        FiltrationKind::Rpe
    } else if flags.clone().all(|f| f.prime_extension && f.maximal) {
        FiltrationKind::Mpe
    } else {
        FiltrationKind::Chain
    }
}

impl Filtration {
    /// Wraps an explicit chain; flags are taken as given.
    pub fn from_steps(ambient: QuotientModule, steps: Vec<PrimeExtensionStep>, ass_complete: bool) -> Result<Self> {
        for w in steps.windows(2) {
            if !w[0].to.equals(&w[1].from)? {
                return Err(GpfError::VerificationFailed("filtration endpoints do not chain".into()));
            }
        }
        if let Some(last) = steps.last() {
            if !last.to.equals(ambient.top())? {
                return Err(GpfError::VerificationFailed("filtration does not end at M".into()));
            }
        }
        let kind = kind_of(steps.iter().map(|s| &s.flags));
        Ok(Filtration { ambient, steps, kind, ass_complete })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn primes(&self) -> Vec<PrimeIdeal> {
        self.steps.iter().map(|s| s.prime.clone()).collect()
    }

    pub fn base(&self) -> Option<&Submodule> {
        self.steps.first().map(|s| &s.from)
    }

    /// `M_0, M_1, ..., M_n`.
    pub fn modules(&self) -> Vec<Submodule> {
        let mut out: Vec<Submodule> = self.steps.iter().map(|s| s.from.clone()).collect();
        if let Some(last) = self.steps.last() {
            out.push(last.to.clone());
        }
        out
    }

    /// Whether `M_i = (N :_M p_1...p_i)` for every `i`.
    pub fn matches_colon_chain(&self) -> Result<bool> {
        let Some(n) = self.base() else { return Ok(true) };
        let ideals: Vec<_> = self.steps.iter().map(|s| s.prime.ideal().clone()).collect();
        let parts = partial_products(&ideals)?;
        for (i, s) in self.steps.iter().enumerate() {
            let c = colon_module(n, &parts[i + 1], &self.ambient)?;
            if !c.equals(&s.to)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.base() {
            write!(f, "{n}")?;
        }
        for s in &self.steps {
            write!(f, " ⊂[{}] {}", s.prime, s.to)?;
        }
        Ok(())
    }
}

fn quotient(top: &Submodule, bottom: &Submodule) -> Result<QuotientModule> {
    QuotientModule::new(top.clone(), bottom.clone())
}

/// Picks one maximal element of `ass` by the tie-break order on keys.
pub fn choose_maximal(ass: &PrimeSet, tie_break: TieBreak) -> Option<PrimeIdeal> {
    let maxes = ass.maximal_elements();
    match tie_break {
        TieBreak::Lex => maxes.into_iter().min_by(|a, b| a.key().cmp(b.key())),
        TieBreak::Revlex => maxes.into_iter().max_by(|a, b| a.key().cmp(b.key())),
    }
}

/// Checks `from ⊂ to` as a `p`-prime extension in `m`. `ass_from` is
/// `Ass(M/from)` when already known. Returns the flags and whether the Ass
/// sets involved were exact.
fn check_step(
    from: &Submodule,
    to: &Submodule,
    p: &PrimeIdeal,
    m: &QuotientModule,
    ass_from: Option<&PrimeSet>,
    source: &AssSource,
    cfg: &Config,
) -> Result<(StepFlags, bool)> {
    let mut complete = true;
    let prime_extension = if from.equals(to)? || !to.contains(from)? {
        false
    } else {
        let ann = colon_ideal(from, to)?;
        if ann.equals(p.ideal())? {
            let ass = ass_enumerate(&quotient(to, from)?, source, cfg)?;
            complete &= ass.complete;
            ass.primes.len() == 1 && ass.primes.contains(p)
        } else {
            false
        }
    };
    let maximal = colon_module(from, p.ideal(), m)?.equals(to)?;
    let regular = match ass_from {
        Some(s) => s.contains(p) && !s.iter().any(|q| q.strictly_contains(p)),
        None => {
            let ass = ass_enumerate(&quotient(m.top(), from)?, source, cfg)?;
            complete &= ass.complete;
            ass.primes.contains(p) && !ass.primes.iter().any(|q| q.strictly_contains(p))
        }
    };
    Ok((StepFlags { prime_extension, maximal, regular }, complete))
}

/// The maximal `p`-prime extension `(N :_M p)` of `N` in `M`, with flags.
pub fn max_prime_extension(
    n: &Submodule,
    m: &QuotientModule,
    p: &PrimeIdeal,
    source: &AssSource,
    cfg: &Config,
) -> Result<PrimeExtensionStep> {
    let from = m.submodule(n)?;
    let to = colon_module(&from, p.ideal(), m)?;
    if to.equals(&from)? {
        return Err(GpfError::NotAssociated { prime: p.to_string() });
    }
    let (flags, _) = check_step(&from, &to, p, m, None, source, cfg)?;
    Ok(PrimeExtensionStep { from, to, prime: p.clone(), flags })
}

/// Flags of an arbitrary step `from ⊂ to` labelled `p` inside `m`.
pub fn verify_step(
    from: &Submodule,
    to: &Submodule,
    p: &PrimeIdeal,
    m: &QuotientModule,
    source: &AssSource,
    cfg: &Config,
) -> Result<StepFlags> {
    let (from, to) = (m.submodule(from)?, m.submodule(to)?);
    check_step(&from, &to, p, m, None, source, cfg).map(|(flags, _)| flags)
}

/// Builds an RPE filtration of `M` over `N` by repeatedly extending along a
/// maximal associated prime.
pub fn rpe_filtration(n: &Submodule, m: &QuotientModule, source: &AssSource, cfg: &Config) -> Result<Filtration> {
    let mut cur = m.submodule(n)?;
    if cur.equals(m.top())? {
        return Err(GpfError::NotProper(format!("{n} equals the whole module")));
    }
    let mut steps = Vec::new();
    let mut complete = true;
    while !cur.equals(m.top())? {
        if steps.len() >= cfg.max_steps {
            return Err(GpfError::MaxStepsExceeded(cfg.max_steps));
        }
        let ass = ass_enumerate(&quotient(m.top(), &cur)?, source, cfg)?;
        complete &= ass.complete;
        let p = choose_maximal(&ass.primes, cfg.tie_break)
            .ok_or_else(|| GpfError::RegistryIncomplete(format!("no candidate is associated to M/{cur}")))?;
        let to = colon_module(&cur, p.ideal(), m)?;
        if to.equals(&cur)? {
            return Err(GpfError::VerificationFailed(format!("{p} is listed in Ass but (N : p) = N")));
        }
        let (flags, c) = check_step(&cur, &to, &p, m, Some(&ass.primes), source, cfg)?;
        complete &= c;
        if !flags.all() {
            return Err(GpfError::VerificationFailed(format!(
                "step {} over {} is not a regular {}-prime extension ({:?})",
                steps.len() + 1,
                cur,
                p,
                flags
            )));
        }
        steps.push(PrimeExtensionStep { from: cur, to: to.clone(), prime: p, flags });
        cur = to;
    }
    Ok(Filtration { ambient: m.clone(), steps, kind: FiltrationKind::Rpe, ass_complete: complete })
}

/// Swaps steps `i` and `i + 1` (0-based) of an RPE filtration. Requires
/// `p_{i+1} ⊄ p_i`; the new middle module is `(M_{i-1} :_{M_{i+1}} p_{i+1})`.
pub fn interchange(f: &Filtration, i: usize, source: &AssSource, cfg: &Config) -> Result<Filtration> {
    if f.kind != FiltrationKind::Rpe {
        return Err(GpfError::InterchangeForbidden("filtration is not RPE".into()));
    }
    if i + 1 >= f.steps.len() {
        return Err(GpfError::InterchangeForbidden(format!("no steps {i} and {}", i + 1)));
    }
    let (lo, hi) = (&f.steps[i], &f.steps[i + 1]);
    if lo.prime.contains(&hi.prime) {
        return Err(GpfError::InterchangeForbidden(format!("{} ⊆ {}", hi.prime, lo.prime)));
    }
    let m = &f.ambient;
    let inner = QuotientModule::new(hi.to.clone(), m.bottom().clone())?;
    let k = colon_module(&lo.from, hi.prime.ideal(), &inner)?;
    let (a, ca) = check_step(&lo.from, &k, &hi.prime, m, None, source, cfg)?;
    let (b, cb) = check_step(&k, &hi.to, &lo.prime, m, None, source, cfg)?;
    if !a.all() || !b.all() {
        return Err(GpfError::VerificationFailed(format!(
            "interchange at {i}: new steps do not verify ({a:?}, {b:?})"
        )));
    }
    let mut steps = f.steps.clone();
    steps[i] = PrimeExtensionStep { from: lo.from.clone(), to: k.clone(), prime: hi.prime.clone(), flags: a };
    steps[i + 1] = PrimeExtensionStep { from: k, to: hi.to.clone(), prime: lo.prime.clone(), flags: b };
    Ok(Filtration { ambient: m.clone(), steps, kind: FiltrationKind::Rpe, ass_complete: f.ass_complete && ca && cb })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub index: usize,
    pub prime: String,
    pub flags: StepFlags,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub steps: Vec<StepReport>,
    pub kind: FiltrationKind,
    pub ass_complete: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.flags.all())
    }
}

/// Re-checks every step of `f` independently.
pub fn verify_rpe(f: &Filtration, source: &AssSource, cfg: &Config) -> Result<VerifyReport> {
    let idx: Vec<usize> = (0..f.steps.len()).collect();
    let checks = cfg.exec.map(&idx, |&i| {
        let s = &f.steps[i];
        check_step(&s.from, &s.to, &s.prime, &f.ambient, None, source, cfg)
    });
    let mut steps = Vec::with_capacity(checks.len());
    let mut complete = true;
    for (i, c) in checks.into_iter().enumerate() {
        let (flags, c) = c?;
        complete &= c;
        steps.push(StepReport { index: i, prime: f.steps[i].prime.to_string(), flags });
    }
    let kind = kind_of(steps.iter().map(|s| &s.flags));
    Ok(VerifyReport { steps, kind, ass_complete: complete })
}

/// Rebuilds a filtration from an explicit chain `M_0 ⊂ ... ⊂ M_n` with
/// labels, computing every flag.
pub fn filtration_from_chain(
    m: &QuotientModule,
    modules: &[Submodule],
    primes: &[PrimeIdeal],
    source: &AssSource,
    cfg: &Config,
) -> Result<Filtration> {
    if modules.len() != primes.len() + 1 {
        return Err(GpfError::Arity { expected: primes.len() + 1, found: modules.len() });
    }
    let lifted: Vec<Submodule> = modules.iter().map(|s| m.submodule(s)).collect::<Result<_>>()?;
    let mut steps = Vec::new();
    let mut complete = true;
    for (i, p) in primes.iter().enumerate() {
        let (flags, c) = check_step(&lifted[i], &lifted[i + 1], p, m, None, source, cfg)?;
        complete &= c;
        steps.push(PrimeExtensionStep { from: lifted[i].clone(), to: lifted[i + 1].clone(), prime: p.clone(), flags });
    }
    Filtration::from_steps(m.clone(), steps, complete)
}
