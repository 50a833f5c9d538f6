//! Error values shared across the crate.

use alloc::string::String;
use core::fmt;

/// Structured error type; the CLI maps variants onto exit codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `p < 2` or `q` outside `[p+1, 2p-1]`.
    QOutOfRange { p: i64, q: i64 },
    /// `q - p` does not divide `p^2 - 1`, so `r = (pq-1)/(q-p)` is not an integer.
    NonIntegralR { p: i64, q: i64 },
    /// Two parameters share a common factor.
    NotCoprime { a: i64, b: i64 },
    /// Operation is defined only for odd `p`.
    EvenP { p: i64 },
    /// Operation is defined only for even `p`.
    OddP { p: i64 },
    /// `(a, m)` is not a lattice point: need `a` odd, `|a| <= p`, `0 <= m <= n_p`.
    OutOfLattice { a: i64, m: i64 },
    /// The pretzel-knot interpretation needs `p`, `q`, `r` all odd.
    EvenEntry { value: i64 },
    /// Family parameters violate the family's domain constraint.
    OutOfFamilyDomain {
        family: &'static str,
        constraint: &'static str,
    },
    /// No family or verification suite with this name.
    UnknownName(String),
    /// A closed-form evaluation was requested but none applies.
    NoClosedForm { p: i64, q: i64 },
    /// The requested computation exceeds the configured budget.
    BudgetExceeded { detail: &'static str },
    /// A 128-bit intermediate would overflow.
    Overflow,
    /// Invalid argument outside triple validation (e.g. a zero denominator).
    InvalidArgument(&'static str),
    /// An internal consistency check failed; indicates a bug or corrupt data.
    Integrity(&'static str),
    /// Plumbing graphs must be nonempty trees.
    MalformedGraph(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::QOutOfRange { p, q } => {
                write!(
                    f,
                    "q={q} out of range for p={p}: need p >= 2 and p+1 <= q <= 2p-1"
                )
            }
            Error::NonIntegralR { p, q } => {
                write!(
                    f,
                    "q-p = {} does not divide p^2-1 = {}: r is not an integer",
                    q - p,
                    p * p - 1
                )
            }
            Error::NotCoprime { a, b } => write!(f, "{a} and {b} are not coprime"),
            Error::EvenP { p } => write!(f, "p = {p} is even; this operation needs odd p"),
            Error::OddP { p } => write!(f, "p = {p} is odd; this operation needs even p"),
            Error::OutOfLattice { a, m } => {
                write!(
                    f,
                    "({a}, {m}) is outside the lattice (need a odd, |a| <= p, 0 <= m <= n_p)"
                )
            }
            Error::EvenEntry { value } => {
                write!(
                    f,
                    "{value} is even; the pretzel interpretation needs all-odd parameters"
                )
            }
            Error::OutOfFamilyDomain { family, constraint } => {
                write!(
                    f,
                    "parameters outside the domain of family '{family}': {constraint}"
                )
            }
            Error::UnknownName(name) => write!(f, "unknown name '{name}'"),
            Error::NoClosedForm { p, q } => {
                write!(f, "no closed form applies to (p, q) = ({p}, {q})")
            }
            Error::BudgetExceeded { detail } => write!(f, "budget exceeded: {detail}"),
            Error::Overflow => write!(f, "128-bit integer overflow"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Integrity(msg) => write!(f, "integrity check failed: {msg}"),
            Error::MalformedGraph(msg) => write!(f, "malformed graph: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
