use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector of a monomial. Its length is the arity of the ring it
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// Inserts `count` zero exponents in front (used for tag variables).
    pub fn with_leading_vars(&self, count: usize) -> Monomial {
        let mut v: SmallVec<[u32; 6]> = SmallVec::from_elem(0, count);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Drops the first `count` exponents, which must all be zero.
    pub fn without_leading_vars(&self, count: usize) -> Option<Monomial> {
        if self.0[..count].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial(SmallVec::from_slice(&self.0[count..])))
    }

    pub fn set_exponent(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }
}

/// Term orders on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. The first block is eliminated.
    Elim {
        block: usize,
    },
}

pub(crate) fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable is larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Elim { block } => {
                grevlex(&a.0[..*block], &b.0[..*block]).then_with(|| grevlex(&a.0[*block..], &b.0[*block..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_and_grevlex_disagree_on_degree() {
        // x^2 vs x*y^3
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[2, 0]), &m(&[1, 3])), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[2, 0]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_tiebreak_on_last_variable() {
        // degree 2 in x,y,z: x^2 > xy > y^2 > xz > yz > z^2
        let seq = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in seq.windows(2) {
            assert_eq!(MonomialOrder::Grevlex.cmp(&m(&w[0]), &m(&w[1])), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elim { block: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[1, 2]);
        let b = m(&[3, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[2, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 4])), m(&[1, 4]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 3])));
    }

    #[test]
    fn tag_variable_round_trip() {
        let a = m(&[1, 2]);
        let t = a.with_leading_vars(1);
        assert_eq!(t.exponents(), &[0, 1, 2]);
        assert_eq!(t.without_leading_vars(1), Some(a));
        assert_eq!(m(&[1, 0, 0]).without_leading_vars(1), None);
    }
}
