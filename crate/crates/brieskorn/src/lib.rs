//! Exact computation of the Ozsváth–Szabó d-invariant for Brieskorn homology
//! 3-spheres Σ(p,q,r) whose surgery diagram is an almost simple linear graph,
//! i.e. whose parameters satisfy
//!
//! ```text
//! 1 < p < q < r,   gcd(p,q) = gcd(q,r) = gcd(r,p) = 1,   pq + pr - qr = 1.
//! ```
//!
//! For such a triple `r` is determined by `(p, q)`: `r = (pq-1)/(q-p)`.
//!
//! Everything in this crate is exact integer (or rational) arithmetic on
//! 128-bit values with explicit overflow detection; no floating point is used
//! anywhere. The crate is `no_std` (it only needs `alloc`).
//!
//! Module map:
//!
//! * [`arith`] — gcd, extended gcd, exact rationals, Hirzebruch–Jung
//!   (negative) continued fractions, Fibonacci numbers.
//! * [`triples`] — validated triples, enumeration, and the decomposition
//!   data `(n_p, l, t, α, s)` for odd `p`.
//! * [`dinv`] — the quadratic form `F`, the lattice regions, the brute-force
//!   maximization, the refined maximization, closed forms, the semigroup
//!   surgery formulas, and the per-triple classifier.
//! * [`families`] — parametric infinite families, verification suites over
//!   parameter grids and enumeration ranges, Fibonacci cases, homology
//!   cobordism comparison, pretzel helpers.
//! * [`plumbing`] — Seifert invariants, star-shaped and almost simple linear
//!   plumbing graphs, exact tree determinants, DOT/JSON export.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod dinv;
pub mod error;
pub mod families;
pub mod plumbing;
pub mod triples;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
