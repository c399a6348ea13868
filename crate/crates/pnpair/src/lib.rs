//! Existence machinery for primitive normal pairs (α, f(α)) over finite
//! fields of even characteristic, where f(x) = (ax²+bx+c)/(dx+e) ranges over
//! the rank-2 quadratic rational maps.
//!
//! The crate provides:
//!
//! - [`gf2`] — arithmetic in F_{q^m}, q = 2^k, as F_2[x]/(p), with the
//!   q-power Frobenius and deterministic primitive-element discovery;
//! - [`factorize`] — complete integer factorization (trial division,
//!   Miller–Rabin, Brent rho, cyclotomic pre-splitting of 2^j − 1) plus the
//!   counting functions ω, W = 2^ω, φ and W-bound sweeps;
//! - [`xm1`] — the factor structure of x^m − 1 over F_q from q-cyclotomic
//!   cosets, the exact rational σ(q,m), explicit factors on demand, and
//!   polynomial arithmetic over the extension;
//! - [`freeness`] — multiplicative order, primitivity and e-freeness; the
//!   F_q-order, normality and g-freeness; rational-map evaluation; and the
//!   exhaustive pair counter;
//! - [`sieve`] — the exact-arithmetic sufficient conditions (plain bound,
//!   prime/polynomial sieve with θ and 𝔖, closed forms and estimates);
//! - [`tables`] — shipped reference tables with full recomputation and
//!   discrepancy flagging;
//! - [`search`] — exhaustive and sampled quintuple searches with sharding,
//!   checkpointing and counter-example re-verification;
//! - [`cli`] — the `pnpair` command-line front end.
//!
//! Runnable walkthroughs for each capability live under `examples/`.

pub mod cli;
pub mod error;
pub mod factorize;
pub mod freeness;
pub mod gf2;
pub mod gf2x;
pub mod report;
pub mod search;
pub mod sieve;
pub mod tables;
pub mod xm1;

pub use error::{Error, Result};
pub use gf2::{make_ctx, FieldCtx, FieldElement};
