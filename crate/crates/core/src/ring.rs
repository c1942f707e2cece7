use std::fmt;
use std::sync::Arc;

use crate::arith::{Coeff, Field, Monomial, Polynomial};
use crate::error::{GpfError, Result};
use crate::groebner::{GroebnerBasis, ModVec, ModuleOrder, Term, VecArith};

/// The ambient ring `R = k[x_1..x_m] / J`.
///
/// `J` is given by its generators and stored together with its reduced
/// grevlex Gröbner basis, which every computation in `R` adjoins.
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    relations: Vec<Vec<(Monomial, Coeff)>>,
    relation_gb: GroebnerBasis,
}

impl PolyRing {
    pub fn new(field: Field, vars: &[&str]) -> Result<Arc<PolyRing>> {
        Self::with_relations(field, vars.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    fn with_relations(
        field: Field,
        vars: Vec<String>,
        relations: Vec<Vec<(Monomial, Coeff)>>,
    ) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(GpfError::Parse(format!("variable `{v}` declared twice")));
            }
        }
        let arith = VecArith::new(field, ModuleOrder::POT_GREVLEX);
        let gens: Vec<ModVec> = relations
            .iter()
            .map(|p| arith.normalize(p.iter().map(|(m, c)| (Term::new(0, m.clone()), c.clone())).collect()))
            .filter(|v| !v.is_zero())
            .collect();
        let relation_gb = GroebnerBasis::compute(field, ModuleOrder::POT_GREVLEX, &gens);
        if relation_gb.contains_unit_vector(0) {
            return Err(GpfError::Parse("quotient relations generate the unit ideal".into()));
        }
        Ok(Arc::new(PolyRing { field, vars, relations, relation_gb }))
    }

    /// `self / (relations)`. The relations must live in a ring with the same
    /// field and variables; relations already present are kept.
    pub fn quotient(self: &Arc<Self>, relations: &[Polynomial]) -> Result<Arc<PolyRing>> {
        let mut rels = self.relations.clone();
        for r in relations {
            if r.ring().field() != self.field || r.ring().vars() != self.vars.as_slice() {
                return Err(GpfError::RingMismatch);
            }
            rels.push(r.terms().to_vec());
        }
        Self::with_relations(self.field, self.vars.clone(), rels)
    }

    /// Same variables and relations over another field; used to reinterpret a
    /// ring under a different coefficient field.
    pub fn with_field(&self, field: Field) -> Result<Arc<PolyRing>> {
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for (m, c) in r {
                let c = match c {
                    Coeff::Q(q) => field.from_rational(q)?,
                    Coeff::P(v) => field.from_i64(*v as i64),
                };
                terms.push((m.clone(), c));
            }
            rels.push(terms);
        }
        Self::with_relations(field, self.vars.clone(), rels)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_quotient(&self) -> bool {
        !self.relation_gb.is_zero_module()
    }

    /// Reduced Gröbner basis of `J` (grevlex).
    pub fn relation_basis(&self) -> &GroebnerBasis {
        &self.relation_gb
    }

    pub fn relations(self: &Arc<Self>) -> Vec<Polynomial> {
        self.relations.iter().map(|t| Polynomial::from_terms(self, t.clone()).expect("stored relation")).collect()
    }

    /// Generators of `J * R^rank`: every basis element of `J` in every
    /// component.
    pub fn relation_vectors(&self, rank: usize) -> Vec<ModVec> {
        let mut out = Vec::new();
        for pos in 0..rank as u32 {
            for g in self.relation_gb.elements() {
                out.push(ModVec {
                    terms: g.terms.iter().map(|(t, c)| (Term::new(pos, t.mon.clone()), c.clone())).collect(),
                });
            }
        }
        out
    }

    /// Parses a polynomial over this ring.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        crate::arith::parse_polynomial(self, text)
    }

    /// Canonical representative modulo `J`.
    pub fn reduce(self: &Arc<Self>, p: &Polynomial) -> Polynomial {
        if !self.is_quotient() {
            return p.clone();
        }
        let v = ModVec { terms: p.terms().iter().map(|(m, c)| (Term::new(0, m.clone()), c.clone())).collect() };
        let r = self.relation_gb.normal_form(&v);
        Polynomial::from_sorted_terms(p.ring(), r.terms.into_iter().map(|(t, c)| (t.mon, c)).collect())
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.relation_gb.elements() == other.relation_gb.elements()
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({self})")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if self.is_quotient() {
            write!(f, " / (")?;
            for (i, g) in self.relation_gb.elements().iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                let terms: Vec<_> = g.terms.iter().map(|(t, c)| (t.mon.clone(), c.clone())).collect();
                crate::arith::write_terms(f, &terms, &self.field, &self.vars)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
