use std::collections::HashSet;

use super::vector::{ModVec, ModuleOrder, Term, VecArith};
use crate::arith::{Field, Monomial};

/// A Gröbner basis of a submodule of a free module `k[x]^r` (rank 1 for
/// ideals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub(crate) field: Field,
    pub(crate) order: ModuleOrder,
    pub(crate) elems: Vec<ModVec>,
    pub(crate) reduced: bool,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

/// Full normal form of `v` with respect to `basis` (every term reduced).
pub fn normal_form(arith: &VecArith, v: &ModVec, basis: &[ModVec]) -> ModVec {
    let mut rem: Vec<_> = Vec::new();
    let mut p = v.terms.clone();
    let mut start = 0;
    while start < p.len() {
        let (lt, lc) = &p[start];
        let divisor = basis.iter().find(|g| !g.is_zero() && g.lt().divides(lt));
        match divisor {
            Some(g) => {
                let (glt, glc) = g.lead().unwrap();
                let q = glt.mon.quotient_of(&lt.mon).unwrap();
                let c = arith.field.div(lc, glc);
                p = arith.sub_mul(&p[start..], &c, &q, &g.terms);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    ModVec { terms: rem }
}

fn s_vector(arith: &VecArith, f: &ModVec, g: &ModVec, lcm: &Term) -> ModVec {
    // both inputs are monic
    let qf = f.lt().mon.quotient_of(&lcm.mon).unwrap();
    let qg = g.lt().mon.quotient_of(&lcm.mon).unwrap();
    let one = arith.field.one();
    let zero_vec: Vec<_> = Vec::new();
    let minus_one = arith.field.neg(&one);
    let lhs = arith.sub_mul(&zero_vec, &minus_one, &qf, &f.terms);
    ModVec { terms: arith.sub_mul(&lhs, &one, &qg, &g.terms) }
}

struct Builder {
    arith: VecArith,
    basis: Vec<ModVec>,
    pairs: Vec<Pair>,
    pending: HashSet<(usize, usize)>,
    ideal_case: bool,
}

impl Builder {
    fn add(&mut self, v: ModVec) {
        let v = self.arith.monic(&v);
        let k = self.basis.len();
        for i in 0..k {
            let g = &self.basis[i];
            if g.lt().pos != v.lt().pos {
                continue;
            }
            // Product criterion: only sound for ideals, where the S-vector of
            // coprime leading terms reduces to zero via the syzygy f*g - g*f.
            if self.ideal_case && g.lt().mon.coprime(&v.lt().mon) {
                continue;
            }
            let lcm = Term::new(v.lt().pos, g.lt().mon.lcm(&v.lt().mon));
            self.pairs.push(Pair { i, j: k, lcm });
            self.pending.insert((i, k));
        }
        self.basis.push(v);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.arith.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            if order.cmp(&self.pairs[k].lcm, &self.pairs[best].lcm).is_lt() {
                best = k;
            }
        }
        let p = self.pairs.swap_remove(best);
        self.pending.remove(&(p.i, p.j));
        Some(p)
    }

    fn chain_criterion(&self, p: &Pair) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.basis.iter().enumerate().any(|(k, g)| {
            k != p.i
                && k != p.j
                && g.lt().divides(&p.lcm)
                && !self.pending.contains(&key(p.i, k))
                && !self.pending.contains(&key(p.j, k))
        })
    }

    fn run(&mut self) {
        while let Some(p) = self.select() {
            if self.chain_criterion(&p) {
                continue;
            }
            let s = s_vector(&self.arith, &self.basis[p.i], &self.basis[p.j], &p.lcm);
            let r = normal_form(&self.arith, &s, &self.basis);
            if !r.is_zero() {
                self.add(r);
            }
        }
    }
}

/// Minimizes and inter-reduces a Gröbner basis; the result is the unique
/// reduced basis for the order, sorted by descending leading term.
fn reduce_basis(arith: &VecArith, basis: Vec<ModVec>) -> Vec<ModVec> {
    let mut minimal: Vec<ModVec> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant =
            basis.iter().enumerate().any(|(j, h)| j != i && h.lt().divides(g.lt()) && (h.lt() != g.lt() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<ModVec> = (0..minimal.len())
        .map(|i| {
            let others: Vec<ModVec> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            let head = ModVec { terms: minimal[i].terms[..1].to_vec() };
            let tail = ModVec { terms: minimal[i].terms[1..].to_vec() };
            let tail = normal_form(arith, &tail, &others);
            arith.monic(&arith.add(&head, &tail))
        })
        .collect();
    out.sort_by(|a, b| arith.order.cmp(b.lt(), a.lt()));
    out
}

impl GroebnerBasis {
    /// Buchberger's algorithm with the product criterion (rank one only),
    /// the chain criterion and the normal selection strategy. Generators
    /// must be sorted for `order`.
    pub fn compute(field: Field, order: ModuleOrder, gens: &[ModVec]) -> GroebnerBasis {
        let arith = VecArith::new(field, order);
        let ideal_case = gens.iter().all(|g| g.terms.iter().all(|(t, _)| t.pos == 0));
        let mut b = Builder { arith, basis: Vec::new(), pairs: Vec::new(), pending: HashSet::new(), ideal_case };
        for g in gens {
            let r = normal_form(&arith, g, &b.basis);
            if !r.is_zero() {
                b.add(r);
            }
        }
        b.run();
        let elems = reduce_basis(&arith, b.basis);
        GroebnerBasis { field, order, elems, reduced: true }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elems
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero_module(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn arith(&self) -> VecArith {
        VecArith::new(self.field, self.order)
    }

    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        normal_form(&self.arith(), v, &self.elems)
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Whether some element has a unit leading term in component `pos`, i.e.
    /// the basis contains `e_pos` (for rank one: the unit ideal).
    pub fn contains_unit_vector(&self, pos: u32) -> bool {
        self.elems.iter().any(|g| g.lt().pos == pos && g.lt().mon.is_one())
    }

    /// Keeps the elements free of the first `block` variables and drops those
    /// variables. For a basis computed with `ModuleOrder::elimination(block)`
    /// this is a reduced basis of the intersection with the subring, ordered
    /// position-over-term grevlex.
    pub fn eliminate_leading_block(&self, block: usize) -> GroebnerBasis {
        let elems = self
            .elems
            .iter()
            .filter_map(|g| {
                let terms: Option<Vec<_>> = g
                    .terms
                    .iter()
                    .map(|(t, c)| t.mon.without_leading_vars(block).map(|m| (Term::new(t.pos, m), c.clone())))
                    .collect();
                terms.map(|terms| ModVec { terms })
            })
            .collect();
        GroebnerBasis { field: self.field, order: ModuleOrder::POT_GREVLEX, elems, reduced: self.reduced }
    }
}

/// Multiplies `v` by the monomial `m` (keeps sortedness; orders are
/// multiplicative).
pub fn mul_monomial(v: &ModVec, m: &Monomial) -> ModVec {
    ModVec { terms: v.terms.iter().map(|(t, c)| (Term::new(t.pos, t.mon.mul(m)), c.clone())).collect() }
}
