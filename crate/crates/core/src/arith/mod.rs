//! Exact coefficients, monomials, monomial orders and polynomials.

mod coeff;
mod monomial;
mod parse;
mod poly;

pub use coeff::{Coeff, Field};
pub(crate) use monomial::grevlex;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub(crate) use poly::write_terms;
pub use poly::Polynomial;
