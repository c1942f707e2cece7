use std::cmp::Ordering;

use crate::arith::{grevlex, Coeff, Field, Monomial, MonomialOrder};

/// A term `m * e_pos` of a free module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: u32,
    pub mon: Monomial,
}

impl Term {
    pub fn new(pos: u32, mon: Monomial) -> Self {
        Term { pos, mon }
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.pos == other.pos && self.mon.divides(&other.mon)
    }
}

/// Order on free-module terms.
///
/// Plain orders are position-over-term with lower component index first
/// (`e_0 > e_1 > ...`). With an elimination order the eliminated block is
/// compared before the position so that a vector whose leading term is free
/// of the eliminated variables is entirely free of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
}

impl ModuleOrder {
    pub const POT_GREVLEX: ModuleOrder = ModuleOrder { mono: MonomialOrder::Grevlex };

    pub fn new(mono: MonomialOrder) -> Self {
        ModuleOrder { mono }
    }

    pub fn elimination(block: usize) -> Self {
        ModuleOrder { mono: MonomialOrder::Elim { block } }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match self.mono {
            MonomialOrder::Elim { block } => {
                let (ea, eb) = (a.mon.exponents(), b.mon.exponents());
                grevlex(&ea[..block], &eb[..block])
                    .then_with(|| b.pos.cmp(&a.pos))
                    .then_with(|| grevlex(&ea[block..], &eb[block..]))
            }
            mono => b.pos.cmp(&a.pos).then_with(|| mono.cmp(&a.mon, &b.mon)),
        }
    }
}

/// A sparse vector of a free module, terms sorted descending for the order
/// it was built with. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ModVec {
    pub terms: Vec<(Term, Coeff)>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Term, Coeff)> {
        self.terms.first()
    }

    pub fn lt(&self) -> &Term {
        &self.terms[0].0
    }

    /// A single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn max_pos(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.pos).max()
    }
}

/// Field plus module order: everything needed to do arithmetic on sorted
/// vectors.
#[derive(Debug, Clone, Copy)]
pub struct VecArith {
    pub field: Field,
    pub order: ModuleOrder,
}

impl VecArith {
    pub fn new(field: Field, order: ModuleOrder) -> Self {
        VecArith { field, order }
    }

    /// Sorts and combines arbitrary terms.
    pub fn normalize(&self, mut terms: Vec<(Term, Coeff)>) -> ModVec {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Term, Coeff)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc = self.field.add(lc, &c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        ModVec { terms: out }
    }

    /// `a - c * m * b` where `a` and `b` are sorted.
    pub fn sub_mul(&self, a: &[(Term, Coeff)], c: &Coeff, m: &Monomial, b: &[(Term, Coeff)]) -> Vec<(Term, Coeff)> {
        let f = &self.field;
        let negc = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |k: usize| -> (Term, Coeff) {
            let (t, bc) = &b[k];
            (Term::new(t.pos, t.mon.mul(m)), f.mul(bc, &negc))
        };
        let mut pending: Option<(Term, Coeff)> = None;
        loop {
            if pending.is_none() && j < b.len() {
                pending = Some(shifted(j));
                j += 1;
            }
            match (i < a.len(), pending.as_ref()) {
                (false, None) => break,
                (true, None) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (false, Some(_)) => {
                    out.push(pending.take().unwrap());
                }
                (true, Some((pt, pc))) => match self.order.cmp(&a[i].0, pt) {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(pending.take().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(&a[i].1, pc);
                        if !f.is_zero(&s) {
                            out.push((a[i].0.clone(), s));
                        }
                        i += 1;
                        pending = None;
                    }
                },
            }
        }
        out
    }

    pub fn add(&self, a: &ModVec, b: &ModVec) -> ModVec {
        let minus_one = self.field.neg(&self.field.one());
        let nv = a.lead().or(b.lead()).map(|(t, _)| t.mon.nvars()).unwrap_or(0);
        ModVec { terms: self.sub_mul(&a.terms, &minus_one, &Monomial::one(nv), &b.terms) }
    }

    pub fn sub(&self, a: &ModVec, b: &ModVec) -> ModVec {
        let nv = a.lead().or(b.lead()).map(|(t, _)| t.mon.nvars()).unwrap_or(0);
        ModVec { terms: self.sub_mul(&a.terms, &self.field.one(), &Monomial::one(nv), &b.terms) }
    }

    pub fn scale(&self, v: &ModVec, c: &Coeff) -> ModVec {
        if self.field.is_zero(c) {
            return ModVec::zero();
        }
        ModVec { terms: v.terms.iter().map(|(t, a)| (t.clone(), self.field.mul(a, c))).collect() }
    }

    pub fn monic(&self, v: &ModVec) -> ModVec {
        match v.lead() {
            None => ModVec::zero(),
            Some((_, c)) if self.field.is_one(c) => v.clone(),
            Some((_, c)) => self.scale(v, &self.field.inv(c)),
        }
    }

    /// `poly * v` for a polynomial given by its terms (any order).
    pub fn mul_poly(&self, poly: &[(Monomial, Coeff)], v: &ModVec) -> ModVec {
        let mut acc: Vec<(Term, Coeff)> = Vec::new();
        for (m, c) in poly {
            let negc = self.field.neg(c);
            acc = self.sub_mul(&acc, &negc, m, &v.terms);
        }
        ModVec { terms: acc }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pos: u32, e: &[u32]) -> Term {
        Term::new(pos, Monomial::from_exponents(e))
    }

    #[test]
    fn position_over_term() {
        let o = ModuleOrder::POT_GREVLEX;
        assert_eq!(o.cmp(&t(0, &[0, 0]), &t(1, &[5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&t(1, &[2, 0]), &t(1, &[1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_before_position() {
        let o = ModuleOrder::elimination(1);
        assert_eq!(o.cmp(&t(1, &[1, 0]), &t(0, &[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&t(0, &[0, 1]), &t(1, &[0, 9])), Ordering::Greater);
    }

    #[test]
    fn sub_mul_cancels() {
        let a = VecArith::new(Field::Rational, ModuleOrder::POT_GREVLEX);
        let one = Field::Rational.one();
        let v = a.normalize(vec![(t(0, &[1, 0]), one.clone()), (t(0, &[0, 1]), one.clone())]);
        let r = a.sub_mul(&v.terms, &one, &Monomial::one(2), &v.terms);
        assert!(r.is_empty());
    }
}
