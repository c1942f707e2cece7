//! Turns parsed declarations and expressions into core objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use gpfkit_core::modops::module_scale;
use gpfkit_core::{
    AssSource, CandidateRegistry, Field, GpfError, Ideal, PolyRing, Polynomial, PrimeIdeal, QuotientModule, Submodule,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::syntax::{Expr, FieldSpec, Gen, PolyExpr, Pos, Stmt};

#[derive(Debug, Clone, Error)]
pub enum EvalError {
    #[error("{pos}: {message}")]
    Usage { pos: Pos, message: String },
    #[error("{pos}: {source}")]
    Core { pos: Pos, source: GpfError },
}

impl EvalError {
    pub fn usage(pos: Pos, message: impl Into<String>) -> Self {
        EvalError::Usage { pos, message: message.into() }
    }

    pub fn pos(&self) -> Pos {
        match self {
            EvalError::Usage { pos, .. } | EvalError::Core { pos, .. } => *pos,
        }
    }
}

pub type EvalResult<T> = Result<T, EvalError>;

/// Attaches a source position to core errors.
pub trait At<T> {
    fn at(self, pos: Pos) -> EvalResult<T>;
}

impl<T> At<T> for Result<T, GpfError> {
    fn at(self, pos: Pos) -> EvalResult<T> {
        self.map_err(|source| EvalError::Core { pos, source })
    }
}

#[derive(Clone)]
enum Binding {
    Prime(PrimeIdeal),
    Ideal { value: Ideal, expr: Expr },
    Module(QuotientModule),
    Submodule(Submodule),
}

/// A value of an expression.
#[derive(Clone)]
pub enum Value {
    Ideal(Ideal),
    Sub(Submodule),
    Quot(QuotientModule),
}

pub struct Scope {
    pub ring: Arc<PolyRing>,
    pub ring_name: String,
    names: BTreeMap<String, Binding>,
    candidates: Option<Vec<PrimeIdeal>>,
}

#[derive(Default)]
pub struct Env {
    field_override: Option<Field>,
    scope: Option<Scope>,
}

fn ideal_of(v: Value, pos: Pos) -> EvalResult<Ideal> {
    match v {
        Value::Ideal(i) => Ok(i),
        Value::Sub(s) if s.rank() == 1 => Ideal::from_submodule(s).at(pos),
        _ => Err(EvalError::usage(pos, "expected an ideal")),
    }
}

/// Views a value as a submodule of `R^rank`.
fn submodule_of(v: Value, rank: usize, pos: Pos) -> EvalResult<Submodule> {
    let s = match v {
        Value::Ideal(i) if rank > 1 && i.is_zero() => return Ok(Submodule::zero(i.ring(), rank)),
        Value::Ideal(i) => i.as_submodule().clone(),
        Value::Sub(s) => s,
        Value::Quot(q) => q.top().clone(),
    };
    if s.rank() != rank {
        return Err(EvalError::Core { pos, source: GpfError::Arity { expected: rank, found: s.rank() } });
    }
    Ok(s)
}

impl Env {
    pub fn new(field_override: Option<Field>) -> Self {
        Env { field_override, scope: None }
    }

    pub fn scope(&self, pos: Pos) -> EvalResult<&Scope> {
        self.scope.as_ref().ok_or_else(|| EvalError::usage(pos, "no ring declared"))
    }

    /// Applies a declaration and returns its canonical form.
    pub fn declare(&mut self, stmt: &Stmt, pos: Pos) -> EvalResult<String> {
        if let Stmt::Ring { name, field, vars, relations } = stmt {
            let field = match (self.field_override, field) {
                (Some(f), _) => f,
                (None, FieldSpec::Rational) => Field::Rational,
                (None, FieldSpec::Prime(q)) => Field::prime(*q).at(pos)?,
            };
            let names: Vec<&str> = vars.iter().map(String::as_str).collect();
            let base = PolyRing::new(field, &names).at(pos)?;
            let rels = relations.iter().map(|r| poly(&base, r)).collect::<EvalResult<Vec<_>>>()?;
            let ring = if rels.is_empty() { base } else { base.quotient(&rels).at(pos)? };
            let echo = format!("ring {name} = {ring};");
            self.scope = Some(Scope { ring, ring_name: name.clone(), names: BTreeMap::new(), candidates: None });
            return Ok(echo);
        }
        let scope = self.scope.as_ref().ok_or_else(|| EvalError::usage(pos, "declare a ring first"))?;
        let (name, binding, echo) = match stmt {
            Stmt::Prime { name, expr } => {
                let p = PrimeIdeal::new(ideal_of(scope.eval(expr)?, expr.pos())?).at(expr.pos())?;
                let echo = format!("prime {name} = {p};  # {}", p.attestation());
                (name, Binding::Prime(p), echo)
            }
            Stmt::Ideal { name, expr } => {
                let value = ideal_of(scope.eval(expr)?, expr.pos())?;
                let echo = format!("ideal {name} = {value};");
                (name, Binding::Ideal { value, expr: expr.clone() }, echo)
            }
            Stmt::Module { name, expr } => {
                let m = scope.module(expr)?;
                let echo = format!("module {name} = {m};");
                (name, Binding::Module(m), echo)
            }
            Stmt::Submodule { name, module, expr } => {
                let m = match scope.names.get(module) {
                    Some(Binding::Module(m)) => m.clone(),
                    _ if *module == scope.ring_name => QuotientModule::free(&scope.ring, 1),
                    _ => return Err(EvalError::usage(pos, format!("'{module}' is not a module"))),
                };
                let value = submodule_of(scope.eval(expr)?, m.rank(), expr.pos())?;
                m.submodule(&value).at(expr.pos())?;
                let echo = format!("submodule {name} in {module} = {value};");
                (name, Binding::Submodule(value), echo)
            }
            Stmt::Candidates(items) => {
                let primes = items
                    .iter()
                    .map(|e| PrimeIdeal::new(ideal_of(scope.eval(e)?, e.pos())?).at(e.pos()))
                    .collect::<EvalResult<Vec<_>>>()?;
                let shown: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                let echo = format!("candidates = {{{}}};", shown.join(", "));
                CandidateRegistry::new(&scope.ring, primes.clone()).at(pos)?;
                self.scope.as_mut().expect("checked above").candidates = Some(primes);
                return Ok(echo);
            }
            Stmt::Ring { .. } | Stmt::Command(_) => unreachable!("handled by the caller"),
        };
        if scope.ring.var_index(name).is_some() || *name == scope.ring_name || name == "free" {
            return Err(EvalError::usage(pos, format!("'{name}' is already a variable or reserved name")));
        }
        self.scope.as_mut().expect("checked above").names.insert(name.clone(), binding);
        Ok(echo)
    }
}

impl Scope {
    pub fn source(&self) -> AssSource {
        match &self.candidates {
            Some(c) => {
                AssSource::Registry(CandidateRegistry::new(&self.ring, c.clone()).expect("validated on declaration"))
            }
            None => AssSource::Monomial,
        }
    }

    pub fn has_candidates(&self) -> bool {
        self.candidates.is_some()
    }

    pub fn eval(&self, e: &Expr) -> EvalResult<Value> {
        match e {
            Expr::Name(n, pos) => {
                if *n == self.ring_name {
                    return Ok(Value::Sub(Submodule::free(&self.ring, 1)));
                }
                match self.names.get(n) {
                    Some(Binding::Prime(p)) => Ok(Value::Ideal(p.ideal().clone())),
                    Some(Binding::Ideal { value, .. }) => Ok(Value::Ideal(value.clone())),
                    Some(Binding::Module(m)) => Ok(Value::Quot(m.clone())),
                    Some(Binding::Submodule(value)) => Ok(Value::Sub(value.clone())),
                    None if self.ring.var_index(n).is_some() => {
                        Err(EvalError::usage(*pos, format!("write the ideal generated by '{n}' as ({n})")))
                    }
                    None => Err(EvalError::usage(*pos, format!("unknown identifier '{n}'"))),
                }
            }
            Expr::Free(k, _) => Ok(Value::Sub(Submodule::free(&self.ring, *k))),
            Expr::Gens(gens, pos) => self.gens(gens, *pos),
            Expr::Sum(a, b) => {
                let (va, vb) = (self.eval(a)?, self.eval(b)?);
                match (va, vb) {
                    (Value::Ideal(x), Value::Ideal(y)) => Ok(Value::Ideal(x.sum(&y).at(a.pos())?)),
                    (x, y) => {
                        let x = submodule_of(x, self.rank_of_value(&y), a.pos())?;
                        let y = submodule_of(y, x.rank(), b.pos())?;
                        Ok(Value::Sub(x.sum(&y).at(a.pos())?))
                    }
                }
            }
            Expr::Prod(a, b) => {
                let (va, vb) = (self.eval(a)?, self.eval(b)?);
                match (va, vb) {
                    (Value::Ideal(x), Value::Ideal(y)) => Ok(Value::Ideal(x.product(&y).at(a.pos())?)),
                    (Value::Ideal(i), Value::Quot(m)) | (Value::Quot(m), Value::Ideal(i)) => {
                        Ok(Value::Sub(module_scale(&i, &m).at(a.pos())?))
                    }
                    (Value::Ideal(i), Value::Sub(s)) | (Value::Sub(s), Value::Ideal(i)) => {
                        Ok(Value::Sub(s.scale(&i).at(a.pos())?))
                    }
                    _ => Err(EvalError::usage(a.pos(), "a product needs an ideal factor")),
                }
            }
            Expr::Pow(base, k, pos) => Ok(Value::Ideal(ideal_of(self.eval(base)?, *pos)?.power(*k))),
            Expr::Quot(top, bottom, pos) => {
                let t = submodule_of(self.eval(top)?, self.rank_hint(top)?, top.pos())?;
                let b = match self.eval(bottom)? {
                    Value::Ideal(i) if t.rank() > 1 => t.scale(&i).at(bottom.pos())?,
                    v => submodule_of(v, t.rank(), bottom.pos())?,
                };
                Ok(Value::Quot(QuotientModule::new(t, b).at(*pos)?))
            }
        }
    }

    fn rank_of_value(&self, v: &Value) -> usize {
        match v {
            Value::Ideal(_) => 1,
            Value::Sub(s) => s.rank(),
            Value::Quot(q) => q.rank(),
        }
    }

    fn rank_hint(&self, e: &Expr) -> EvalResult<usize> {
        Ok(self.rank_of_value(&self.eval(e)?))
    }

    fn gens(&self, gens: &[Gen], pos: Pos) -> EvalResult<Value> {
        if gens.iter().all(|g| matches!(g, Gen::Poly(_))) {
            let polys = gens
                .iter()
                .map(|g| match g {
                    Gen::Poly(p) => poly(&self.ring, p),
                    Gen::Vector(..) => unreachable!(),
                })
                .collect::<EvalResult<Vec<_>>>()?;
            return Ok(Value::Ideal(Ideal::new(&self.ring, polys).at(pos)?));
        }
        let rank = match &gens[0] {
            Gen::Vector(v, _) => v.len(),
            Gen::Poly(_) => 1,
        };
        let mut vecs = Vec::new();
        for g in gens {
            match g {
                Gen::Vector(v, _) if v.len() == rank => {
                    vecs.push(v.iter().map(|p| poly(&self.ring, p)).collect::<EvalResult<Vec<_>>>()?);
                }
                Gen::Vector(v, vpos) => {
                    return Err(EvalError::Core {
                        pos: *vpos,
                        source: GpfError::Arity { expected: rank, found: v.len() },
                    })
                }
                Gen::Poly(_) => {
                    return Err(EvalError::Core { pos, source: GpfError::Arity { expected: rank, found: 1 } })
                }
            }
        }
        Ok(Value::Sub(Submodule::new(&self.ring, rank, &vecs).at(pos)?))
    }

    /// The module an `in M` clause refers to.
    pub fn module(&self, e: &Expr) -> EvalResult<QuotientModule> {
        Ok(match self.eval(e)? {
            Value::Quot(q) => q,
            Value::Ideal(i) => {
                QuotientModule::new(i.as_submodule().clone(), Submodule::zero(&self.ring, 1)).at(e.pos())?
            }
            Value::Sub(s) => {
                let rank = s.rank();
                QuotientModule::new(s, Submodule::zero(&self.ring, rank)).at(e.pos())?
            }
        })
    }

    /// A submodule of `m` (not yet lifted by its denominator).
    pub fn submodule_in(&self, e: &Expr, m: &QuotientModule) -> EvalResult<Submodule> {
        submodule_of(self.eval(e)?, m.rank(), e.pos())
    }

    pub fn ideal(&self, e: &Expr) -> EvalResult<Ideal> {
        ideal_of(self.eval(e)?, e.pos())
    }

    pub fn prime(&self, e: &Expr) -> EvalResult<PrimeIdeal> {
        if let Expr::Name(n, _) = e {
            if let Some(Binding::Prime(p)) = self.names.get(n) {
                return Ok(p.clone());
            }
        }
        PrimeIdeal::new(self.ideal(e)?).at(e.pos())
    }

    /// A product of prime powers, keeping the factor structure of declared
    /// ideals.
    pub fn factors(&self, e: &Expr) -> EvalResult<Vec<(PrimeIdeal, u32)>> {
        let mut out: Vec<(PrimeIdeal, u32)> = match e {
            Expr::Name(n, pos) => match self.names.get(n) {
                Some(Binding::Prime(p)) => vec![(p.clone(), 1)],
                Some(Binding::Ideal { expr, .. }) => self.factors(expr)?,
                _ => return Err(EvalError::usage(*pos, format!("'{n}' is not a prime or a product of primes"))),
            },
            Expr::Gens(..) => vec![(self.prime(e)?, 1)],
            Expr::Prod(a, b) => {
                let mut f = self.factors(a)?;
                f.extend(self.factors(b)?);
                f
            }
            Expr::Pow(base, k, _) => self.factors(base)?.into_iter().map(|(p, r)| (p, r * k)).collect(),
            other => return Err(EvalError::usage(other.pos(), "expected a product of primes")),
        };
        let mut merged: Vec<(PrimeIdeal, u32)> = Vec::new();
        for (p, r) in out.drain(..) {
            match merged.last_mut() {
                Some((q, s)) if *q == p => *s += r,
                _ => merged.push((p, r)),
            }
        }
        Ok(merged)
    }
}

fn poly(ring: &Arc<PolyRing>, e: &PolyExpr) -> EvalResult<Polynomial> {
    let field = ring.field();
    let p0 = Pos::default();
    Ok(match e {
        PolyExpr::Num(n) => Polynomial::constant(ring, field.from_bigint(n)),
        PolyExpr::Var(v, pos) => match ring.var_index(v) {
            Some(i) => Polynomial::var(ring, i),
            None => return Err(EvalError::usage(*pos, format!("unknown variable '{v}'"))),
        },
        PolyExpr::Neg(a) => poly(ring, a)?.neg(),
        PolyExpr::Add(a, b) => poly(ring, a)?.add(&poly(ring, b)?).at(p0)?,
        PolyExpr::Sub(a, b) => poly(ring, a)?.sub(&poly(ring, b)?).at(p0)?,
        PolyExpr::Mul(a, b) => poly(ring, a)?.mul(&poly(ring, b)?).at(p0)?,
        PolyExpr::Div(a, d, pos) => {
            if d.is_zero() {
                return Err(EvalError::usage(*pos, "division by zero"));
            }
            let c = field.from_rational(&BigRational::new(BigInt::from(1), d.clone())).at(*pos)?;
            poly(ring, a)?.scale(&c)
        }
        PolyExpr::Pow(a, k) => poly(ring, a)?.pow(*k),
    })
}
