//! Exact-arithmetic toolkit for linear recurrences with polynomial coefficients.
//!
//! The library is organized around one idea: if `L = sum a_i(n) sigma^i`
//! annihilates a sequence `F(n)`, then for every polynomial `p(n)` the
//! weighted sum `sum L*(p)(k) F(k)` telescopes, where `L*` is the adjoint
//! operator.  Everything else is built on top of that:
//!
//! - [`poly`]: exact rationals, dense univariate polynomials, the expression
//!   parser, gcd / integer roots / dispersion.
//! - [`operator`]: recurrence operators, adjoints, telescoping certificates,
//!   degree and degeneracy analysis, geometric scaling.
//! - [`reduction`]: the polynomial reduction process and telescoped closed
//!   forms of partial sums.
//! - [`identity`]: generation of new pi-series identities from seed
//!   identities by exact nullspace computation.
//! - [`congruence`]: divisibility and supercongruence checking over ranges
//!   of integers and primes.
//! - [`sequences`]: the sequence catalog (Domb, Franel, Franel order 4,
//!   central Delannoy), exact term generation and recurrence guessing.
//! - [`verify`]: high-precision numeric verification of series constants.
//! - [`goldens`]: the named golden checks used by `polyred selftest`.

pub mod congruence;
pub mod goldens;
pub mod identity;
pub mod linalg;
pub mod operator;
pub mod poly;
pub mod reduction;
pub mod sequences;
pub mod verify;

pub use congruence::{check_claim, derive_family, known_fact_checks, legendre, CongruenceClaim};
pub use identity::{generate, normalize_identity, ConstantKind, NewIdentity, SeedIdentity};
pub use operator::{Certificate, DegreeData, RecOperator};
pub use poly::{poly_parse, Degree, Rational, UniPoly};
pub use reduction::{normalize_window, reduce, telescoped_sum, ReductionResult, SumClosedForm};
pub use sequences::{binomial, guess_recurrence, seq_terms, seq_terms_rec, SequenceDef};
pub use verify::{verify_series, PrecisionContext};
