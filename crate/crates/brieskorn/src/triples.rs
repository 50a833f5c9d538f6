//! Validated Brieskorn triples `(p, q, r)` with `pq + pr - qr = 1`, their
//! enumeration, and the decomposition data used by every closed form.
//!
//! For a valid triple, `q` lies in `[p+1, 2p-1]` and
//! `r = (pq-1)/(q-p) = p + (p^2-1)/(q-p)`, so candidates for `q` are exactly
//! `p + l` where `l` runs over the divisors of `p^2 - 1` up to `p - 1`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::arith::{gcd, Rational};
use crate::error::Error;
use crate::Result;

/// A validated triple. Construction enforces all invariants, so a `Triple`
/// always satisfies `pq + pr - qr = 1` with pairwise coprime `1 < p < q < r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Triple {
    p: i64,
    q: i64,
    r: i64,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sigma({},{},{})", self.p, self.q, self.r)
    }
}

/// Quantities attached to an odd-`p` triple: `n_p = (p-1)/2`, `l = q - p`,
/// the Euclidean division `n_p = t*l + alpha` with `0 <= alpha < l`, and the
/// slope `s = l/n_p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub n_p: i64,
    pub l: i64,
    pub t: i64,
    pub alpha: i64,
}

impl Decomposition {
    /// `s = l/n_p` in lowest terms. Always in `(0, 2]`; the value 2 is
    /// attained exactly at `q = 2p - 1`.
    pub fn s(&self) -> Rational {
        Rational::new(self.l as i128, self.n_p as i128).expect("n_p > 0")
    }

    /// `s` as the raw pair `(l, n_p)` without reduction.
    pub fn s_raw(&self) -> (i64, i64) {
        (self.l, self.n_p)
    }
}

impl Triple {
    /// Builds the triple determined by `(p, q)`, validating every invariant.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 || q < p + 1 || q > 2 * p - 1 {
            return Err(Error::QOutOfRange { p, q });
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        let l = q - p;
        let disc = (p as i128) * (p as i128) - 1;
        if disc % (l as i128) != 0 {
            return Err(Error::NonIntegralR { p, q });
        }
        let r128 = p as i128 + disc / (l as i128);
        let r = i64::try_from(r128).map_err(|_| Error::Overflow)?;
        for (a, b) in [(q, r), (r, p)] {
            if gcd(a, b) != 1 {
                return Err(Error::NotCoprime { a, b });
            }
        }
        debug_assert_eq!(
            (p as i128) * (q as i128) + (p as i128) * r128 - (q as i128) * r128,
            1
        );
        Ok(Triple { p, q, r })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn has_odd_p(&self) -> bool {
        self.p % 2 != 0
    }

    /// The `(n_p, l, t, alpha)` data. Errors on even `p`, where `n_p` is
    /// undefined and the even closed form applies instead.
    pub fn decompose(&self) -> Result<Decomposition> {
        if !self.has_odd_p() {
            return Err(Error::EvenP { p: self.p });
        }
        let n_p = (self.p - 1) / 2;
        let l = self.q - self.p;
        Ok(Decomposition {
            n_p,
            l,
            t: n_p / l,
            alpha: n_p % l,
        })
    }
}

/// All divisors of `n1 * n2` up to `cap`, via the merged prime factorization
/// of the two factors. Sorted ascending.
fn divisors_of_product_leq(n1: i64, n2: i64, cap: i64) -> Vec<i64> {
    let mut factors: Vec<(i64, u32)> = Vec::new();
    for mut n in [n1, n2] {
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                let mut e = 0;
                while n % d == 0 {
                    n /= d;
                    e += 1;
                }
                match factors.iter_mut().find(|(p, _)| *p == d) {
                    Some((_, exp)) => *exp += e,
                    None => factors.push((d, e)),
                }
            }
            d += 1;
        }
        if n > 1 {
            match factors.iter_mut().find(|(p, _)| *p == n) {
                Some((_, exp)) => *exp += 1,
                None => factors.push((n, 1)),
            }
        }
    }
    let mut divs = alloc::vec![1i64];
    for (prime, exp) in factors {
        let prev = divs.clone();
        let mut pw = 1i64;
        for _ in 0..exp {
            pw = match pw.checked_mul(prime) {
                Some(v) if v <= cap => v,
                _ => break,
            };
            for &d in &prev {
                if let Some(v) = d.checked_mul(pw) {
                    if v <= cap {
                        divs.push(v);
                    }
                }
            }
        }
    }
    divs.sort_unstable();
    divs.dedup();
    divs
}

/// Enumerates every valid triple with `p <= p_max`, ordered by `(p, q)`.
/// `l_range` optionally restricts `l = q - p`.
pub fn enumerate(p_max: i64, l_range: Option<RangeInclusive<i64>>) -> Vec<Triple> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        // l must divide p^2 - 1 = (p-1)(p+1) and lie in [1, p-1]
        for l in divisors_of_product_leq(p - 1, p + 1, p - 1) {
            if let Some(range) = &l_range {
                if !range.contains(&l) {
                    continue;
                }
            }
            if let Ok(t) = Triple::new(p, p + l) {
                out.push(t);
            }
        }
    }
    out
}
