//! Drinfeld-module torsion extensions of `F_q(T)`, Gassmann triples in
//! `GL_n(F_q)` and split-type comparison of the resulting function fields.
//!
//! The pipeline: build a Drinfeld module `rho` over `F_q[T]`
//! ([`twisted`]), take the torsion polynomial of `rho_a`, construct a
//! non-conjugate pair of subgroups with equal permutation characters
//! ([`gassmann`]) and compare how two defining polynomials factor modulo
//! many primes of `F_q[T]` ([`splitting`]).

pub mod cli;
pub mod error;
pub mod expr_parser;
pub mod finite_field;
pub mod gassmann;
pub mod poly_arith;
pub mod splitting;
pub mod twisted;

pub use error::{Error, Result};
pub use finite_field::{FieldDesc, FieldElement};
pub use poly_arith::{Factorization, Poly, TPoly};
pub use twisted::{DrinfeldModule, TwistedPoly, YPoly};
