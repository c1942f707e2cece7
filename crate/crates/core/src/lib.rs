//! Generalized prime ideal factorizations of submodules over polynomial
//! rings and their quotients.
//!
//! Given a finitely generated module `M` over `R = k[x]/J` and a proper
//! submodule `N`, the crate computes reduced prime extension filtrations
//! `N = M_0 ⊂ M_1 ⊂ ... ⊂ M_n = M` with `M_i = (M_{i-1} :_M p_i)`, reads off
//! the prime multiset `P_M(N)`, and decides or constructs submodules with a
//! prescribed factorization.

pub mod arith;
pub mod config;
pub mod error;
pub mod filtration;
pub mod gpf;
pub mod groebner;
pub mod modops;
pub mod oracle;
pub mod par;
pub mod primes;
pub mod ring;

pub use arith::{Coeff, Field, Monomial, MonomialOrder, Polynomial};
pub use config::{Config, TieBreak};
pub use error::{GpfError, Result};
pub use filtration::{
    interchange, max_prime_extension, rpe_filtration, verify_rpe, verify_step, Filtration, FiltrationKind,
    PrimeExtensionStep, StepFlags, VerifyReport,
};
pub use gpf::{
    check_iff_criterion, check_necessary_conditions, check_supp_conditions, construct_general, construct_incomparable,
    construct_prime_power, exists_incomparable, gpf, Factorization, FactorizationTarget, OrderingMode, PrimeMultiset,
};
pub use modops::{Ideal, QuotientModule, Submodule, SubquotientView};
pub use oracle::{FiniteModule, FiniteRing, Oracle};
pub use par::Exec;
pub use primes::{
    ass_contains, ass_enumerate, is_maximal_in, supp_contains, AssResult, AssSource, Attestation, CandidateRegistry,
    PrimeIdeal, PrimeSet,
};
pub use ring::PolyRing;
