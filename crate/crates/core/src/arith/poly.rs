use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{Coeff, Field, Monomial, MonomialOrder};
use crate::error::{GpfError, Result};
use crate::ring::PolyRing;

/// A polynomial over a [`PolyRing`].
///
/// Terms are kept sorted by descending grevlex with no zero coefficients.
/// Polynomials are representatives in `k[x]`; reduction modulo the ring's
/// quotient relations happens only when asked for (`reduced`) or inside
/// membership and Gröbner computations.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

pub(crate) fn merge_terms(
    field: &Field,
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    negate_b: bool,
) -> Vec<(Monomial, Coeff)> {
    let ord = MonomialOrder::Grevlex;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &Coeff| if negate_b { field.neg(c) } else { c.clone() };
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), fix(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &fix(&b[j].1));
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    out
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        let mut p = Self::zero(ring);
        if !ring.field().is_zero(&c) {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let mut p = Self::zero(ring);
        if !ring.field().is_zero(&c) {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Result<Self> {
        let field = ring.field();
        let mut terms = terms;
        for (m, _) in &terms {
            if m.nvars() != ring.nvars() {
                return Err(GpfError::Arity { expected: ring.nvars(), found: m.nvars() });
            }
        }
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Ok(Polynomial { ring: ring.clone(), terms: out })
    }

    /// Terms already sorted by descending grevlex, nonzero, without repeats.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| MonomialOrder::Grevlex.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single term with nonzero coefficient.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if !Arc::ptr_eq(&self.ring, &other.ring) && *self.ring != *other.ring {
            return Err(GpfError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let terms = merge_terms(&self.ring.field(), &self.terms, &other.terms, false);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let terms = merge_terms(&self.ring.field(), &self.terms, &other.terms, true);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// Multiplies by `c * m`. Grevlex is multiplicative so the order of terms
    /// is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &small.terms {
            let part = big.mul_term(m, c);
            acc = merge_terms(&field, &acc, &part.terms, false);
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: acc })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// The greatest term of `self` under `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, Coeff)> {
        let best = match ord {
            MonomialOrder::Grevlex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)),
        };
        best.cloned().ok_or(GpfError::ZeroPolynomial)
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `k[x]`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let field = self.ring.field();
        let (dm, dc) = divisor.terms.first()?;
        let mut rem = self.terms.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rem.first() {
            let q = dm.quotient_of(m)?;
            let qc = field.div(c, dc);
            let part = divisor.mul_term(&q, &qc);
            rem = merge_terms(&field, &rem, &part.terms, true);
            quot.push((q, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    /// Normal form modulo the ring's quotient relations.
    pub fn reduced(&self) -> Polynomial {
        self.ring.reduce(self)
    }

    /// Re-homes the polynomial into another ring with the same field and
    /// variables (e.g. from `k[x]` into a quotient `k[x]/J`).
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.field() != self.ring.field() || ring.vars() != self.ring.vars() {
            return Err(GpfError::RingMismatch);
        }
        Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, vars: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

pub(crate) fn write_terms(
    f: &mut impl fmt::Write,
    terms: &[(Monomial, Coeff)],
    field: &Field,
    vars: &[String],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if m.is_one() {
            write!(f, "{a}")?;
        } else {
            if !field.is_one(&a) {
                write!(f, "{a}*")?;
            }
            write_monomial(f, m, vars)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, &self.ring.field(), self.ring.vars())
    }
}
