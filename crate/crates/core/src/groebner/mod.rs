//! Gröbner bases of submodules of free modules over `k[x]`.

mod buchberger;
mod vector;

pub use buchberger::{mul_monomial, normal_form, GroebnerBasis};
pub use vector::{ModVec, ModuleOrder, Term, VecArith};
