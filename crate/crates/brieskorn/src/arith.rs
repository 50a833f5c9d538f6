//! Exact integer utilities: gcd, extended gcd, exact rationals,
//! Hirzebruch–Jung (negative) continued fractions, Fibonacci numbers.
//!
//! All arithmetic is 128-bit with explicit overflow detection. Intermediates
//! of the quadratic form grow like `p^4`, so 128 bits cover `p` well beyond
//! desk scale; anything larger reports [`Error::Overflow`] instead of
//! wrapping.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// Greatest common divisor of two nonnegative integers, not both zero.
pub fn gcd(a: i64, b: i64) -> i64 {
    debug_assert!(a >= 0 && b >= 0 && (a, b) != (0, 0));
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if a == 0 {
        return (b, 0, 1);
    }
    let (g, x, y) = ext_gcd(b.rem_euclid(a), a);
    (g, y - (b.div_euclid(a)) * x, x)
}

/// Modular inverse of `a` modulo `m > 1`, in `[1, m)`; `None` when not coprime.
pub fn mod_inv(a: i128, m: i128) -> Option<i128> {
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m))
}

pub(crate) fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn csub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// An exact rational on 128-bit integers, kept in lowest terms with a
/// positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    /// Builds `num/den` reduced to lowest terms. Errors on `den == 0`.
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator"));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num, den);
        if g == 0 {
            return Ok(Rational { num: 0, den: 1 });
        }
        Ok(Rational {
            num: sign * (num / g),
            den: (den / g).abs(),
        })
    }

    pub const fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn is_even_integer(&self) -> bool {
        self.den == 1 && self.num % 2 == 0
    }

    pub fn checked_add(&self, other: &Rational) -> Result<Rational> {
        let num = cadd(cmul(self.num, other.den)?, cmul(other.num, self.den)?)?;
        Rational::new(num, cmul(self.den, other.den)?)
    }

    pub fn checked_sub(&self, other: &Rational) -> Result<Rational> {
        let num = csub(cmul(self.num, other.den)?, cmul(other.num, self.den)?)?;
        Rational::new(num, cmul(self.den, other.den)?)
    }

    pub fn checked_mul(&self, other: &Rational) -> Result<Rational> {
        Rational::new(cmul(self.num, other.num)?, cmul(self.den, other.den)?)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn checked_recip(&self) -> Result<Rational> {
        Rational::new(self.den, self.num)
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num.checked_mul(other.den);
        let rhs = other.num.checked_mul(self.den);
        match (lhs, rhs) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => panic!("rational comparison overflow"),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Canonical Hirzebruch–Jung expansion of a negative rational `-num/den`:
///
/// ```text
/// -num/den = t_1 - 1/(t_2 - 1/(... - 1/t_m)),   t_i <= -2.
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegContFrac {
    coeffs: Vec<i64>,
}

impl NegContFrac {
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates the expansion back to an exact rational.
    pub fn eval(&self) -> Result<Rational> {
        let mut acc = Rational::from_int(*self.coeffs.last().expect("nonempty expansion") as i128);
        for &t in self.coeffs.iter().rev().skip(1) {
            acc = Rational::from_int(t as i128).checked_sub(&acc.checked_recip()?)?;
        }
        Ok(acc)
    }
}

/// Expands `-num/den` (with `0 < den <= num`, coprime) into its canonical HJ
/// continued fraction by repeated ceiling division. Every coefficient comes
/// out `<= -2`, so the expansion is the unique one with no trailing `-1`.
pub fn neg_cont_frac(num: i64, den: i64) -> Result<NegContFrac> {
    if num <= 0 || den <= 0 || den >= num {
        return Err(Error::InvalidArgument("need 0 < den < num"));
    }
    if gcd(num, den) != 1 {
        return Err(Error::NotCoprime { a: num, b: den });
    }
    let mut coeffs = Vec::new();
    let (mut num, mut den) = (num as i128, den as i128);
    while den != 0 {
        let a = (num + den - 1) / den; // ceil(num/den); a >= 2 since num > den
        coeffs.push(-(a as i64));
        (num, den) = (den, a * den - num);
    }
    Ok(NegContFrac { coeffs })
}

/// The `m`-th Fibonacci number with `F_1 = F_2 = 1`.
///
/// This indexing makes `F_m` even exactly when `3 | m`. Errors on 128-bit
/// overflow (first at `m = 185`).
pub fn fibonacci(m: u32) -> Result<i128> {
    if m == 0 {
        return Err(Error::InvalidArgument("Fibonacci index starts at 1"));
    }
    let (mut a, mut b) = (1i128, 1i128); // F_1, F_2
    for _ in 2..m {
        (a, b) = (b, cadd(a, b)?);
    }
    Ok(if m == 1 { a } else { b })
}
