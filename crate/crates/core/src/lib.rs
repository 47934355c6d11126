//! Exact computer algebra for weighted Rota–Baxter algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact rationals, Bernoulli numbers and truncated power
//!   series in a formal parameter λ over any unital algebra.
//! * [`algebra`]: the Rota–Baxter contract, derived products (double
//!   product, pre-Lie products, half-shuffles, the `B` operator) and the
//!   generic law checkers.
//! * [`models`]: concrete Rota–Baxter algebras: Rota's standard algebra,
//!   the summation operator, Laurent polynomials with pole projection,
//!   triangular projection on matrices, polynomial integration and the free
//!   commutative word model.
//! * [`combinatorics`]: words, shuffles, quasi-shuffles, permutations and
//!   set partitions.
//! * [`identities`]: fixed points, Spitzer, pre-Lie Magnus,
//!   Bohnenblust–Spitzer, Atkinson, Bogoliubov and the flows/BCH engines.
//! * [`yang_baxter`]: dendriform axioms and the Yang–Baxter variants.
//!
//! Every check returns a [`CheckResult`]; a failed check carries a rendered
//! counterexample.

pub mod algebra;
pub mod arith;
pub mod check;
pub mod combinatorics;
pub mod error;
pub mod identities;
pub mod models;
pub mod yang_baxter;

pub use arith::Rational;
pub use check::{CheckResult, Status};
pub use error::{Error, Result};
