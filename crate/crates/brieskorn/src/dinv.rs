//! The d-invariant machinery: the quadratic form, the lattice regions, the
//! brute-force and refined maximizations, closed forms, the semigroup
//! surgery formulas, and the per-triple classifier.
//!
//! Conventions for odd `p` (with `n_p = (p-1)/2`, `l = q - p`):
//!
//! ```text
//! f(x,y)  = -(q+r)x^2 + 4qxy - 4(q-p)y^2 - 4y
//! F(x,y)  = (f(x,y) + q + r) / 4
//!         = -((2(q-p)m - aq + 1)^2 - (q-a)^2) / (4(q-p))    at (x,y) = (a,m)
//! ```
//!
//! The lattice is `L_p = {(a,m) : a odd, |a| <= p, 0 <= m <= n_p}` and
//! `R = {(a,m) in L_p : F(a,m) >= F(1,1)}`; the d-invariant is the maximum
//! of `F` over `R`, which is already attained on the positive quadrant
//! `1 <= a`, `1 <= m` and, more sharply, on the refined set
//! `M = {(1, t+1)} ∪ {(a,m) : a odd >= 3, a < m <= n_p, F(a,m) >= F(1,1)}`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{cadd, cmul, csub, gcd, Rational};
use crate::error::Error;
use crate::triples::{Decomposition, Triple};
use crate::Result;

/// Largest `p` for which the unchecked sweep kernels are overflow-safe:
/// every intermediate is bounded by `17 p^4 < 2^127`.
const SWEEP_MAX_P: i64 = 1_500_000_000;

fn sweep_guard(t: &Triple) -> Result<()> {
    if t.p() > SWEEP_MAX_P {
        return Err(Error::Overflow);
    }
    Ok(())
}

/// How a d-invariant value was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MethodTag {
    EvenClosedForm,
    Refined,
    FullOracle,
    FamilyClosedForm(&'static str),
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodTag::EvenClosedForm => write!(f, "even-closed-form"),
            MethodTag::Refined => write!(f, "refined"),
            MethodTag::FullOracle => write!(f, "full-oracle"),
            MethodTag::FamilyClosedForm(name) => write!(f, "family-closed-form:{name}"),
        }
    }
}

/// A computed d-invariant: the even value, a witness lattice point where the
/// maximum is attained (absent for the even-`p` closed form), and the method.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DResult {
    pub value: i128,
    pub witness: Option<(i64, i64)>,
    pub method: MethodTag,
}

/// Method selector for [`d`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Auto,
    Full,
    Refined,
    ClosedForm,
}

/// `f(x,y) = -(q+r)x^2 + 4qxy - 4(q-p)y^2 - 4y`, exactly.
pub fn f_eval(t: &Triple, x: i64, y: i64) -> Result<i128> {
    let (p, q, r) = (t.p() as i128, t.q() as i128, t.r() as i128);
    let (x, y) = (x as i128, y as i128);
    let t1 = cmul(cadd(q, r)?, cmul(x, x)?)?;
    let t2 = cmul(4, cmul(q, cmul(x, y)?)?)?;
    let t3 = cmul(4, cmul(q - p, cmul(y, y)?)?)?;
    csub(csub(cadd(csub(0, t1)?, t2)?, t3)?, 4 * y)
}

/// `F(x,y) = (f(x,y) + q + r)/4` as an exact rational.
pub fn big_f_eval(t: &Triple, x: i64, y: i64) -> Result<Rational> {
    let shifted = cadd(f_eval(t, x, y)?, (t.q() + t.r()) as i128)?;
    Rational::new(shifted, 4)
}

/// Sweep kernel: `4(q-p) * F(a,m) = (q-a)^2 - (2(q-p)m - aq + 1)^2`.
///
/// This is the factored form of `F`; agreement with [`big_f_eval`] on every
/// lattice point is asserted by the test suite. Callers must hold
/// `p <= SWEEP_MAX_P` so that plain `i128` arithmetic cannot overflow.
#[inline]
fn scaled_f(q: i128, l: i128, a: i128, m: i128) -> i128 {
    let u = 2 * l * m - a * q + 1;
    (q - a) * (q - a) - u * u
}

fn finalize(
    t: &Triple,
    scaled_max: i128,
    l: i128,
    witness: (i64, i64),
    method: MethodTag,
) -> Result<DResult> {
    if scaled_max % (4 * l) != 0 {
        return Err(Error::Integrity("maximum of F is not an integer"));
    }
    let value = scaled_max / (4 * l);
    if value < 0 || value % 2 != 0 {
        return Err(Error::Integrity(
            "d-invariant must be a nonnegative even integer",
        ));
    }
    debug_assert_eq!(
        big_f_eval(t, witness.0, witness.1)?.as_integer(),
        Some(value)
    );
    Ok(DResult {
        value,
        witness: Some(witness),
        method,
    })
}

/// Membership of a lattice point `(a, m)` in the region `R`, i.e. whether
/// `F(a,m) >= F(1,1)`. Errors when `(a, m)` is not a lattice point or `p`
/// is even.
pub fn lattice_r_member(t: &Triple, a: i64, m: i64) -> Result<bool> {
    let dec = t.decompose()?;
    if a % 2 == 0 || a.abs() > t.p() || m < 0 || m > dec.n_p {
        return Err(Error::OutOfLattice { a, m });
    }
    sweep_guard(t)?;
    let (q, l) = (t.q() as i128, dec.l as i128);
    Ok(scaled_f(q, l, a as i128, m as i128) >= 4 * l * (t.p() as i128 - 1))
}

/// Brute-force maximization of `F` over the positive odd quadrant of the
/// lattice intersected with `R` (which carries the full maximum). Returns
/// the lexicographically smallest witness.
pub fn d_full(t: &Triple) -> Result<DResult> {
    let dec = t.decompose()?;
    sweep_guard(t)?;
    let (p, q, l) = (t.p(), t.q() as i128, dec.l as i128);
    let threshold = 4 * l * (p as i128 - 1); // scaled F(1,1)
    let mut best = i128::MIN;
    let mut witness = (0i64, 0i64);
    let mut a = 1i64;
    while a <= p {
        let qa = (q - a as i128) * (q - a as i128);
        let base = -(a as i128) * q + 1;
        for m in 1..=dec.n_p {
            let u = 2 * l * m as i128 + base;
            let nv = qa - u * u;
            if nv >= threshold && nv > best {
                best = nv;
                witness = (a, m);
            }
        }
        a += 2;
    }
    debug_assert!(best >= threshold, "(1,1) always qualifies");
    finalize(t, best, l, witness, MethodTag::FullOracle)
}

/// The refined candidate set
/// `M = {(1, t+1)} ∪ {(a,m) : a odd >= 3, a < m <= n_p, F(a,m) >= F(1,1)}`,
/// sorted lexicographically. The seed `(1, t+1)` may lie above the lattice
/// (when `l = 1`); `F` is still evaluated there as a polynomial.
pub fn refined_set(t: &Triple) -> Result<Vec<(i64, i64)>> {
    let dec = t.decompose()?;
    sweep_guard(t)?;
    let (q, l) = (t.q() as i128, dec.l as i128);
    let threshold = 4 * l * (t.p() as i128 - 1);
    let mut out = alloc::vec![(1, dec.t + 1)];
    let mut a = 3i64;
    while a < dec.n_p {
        for m in (a + 1)..=dec.n_p {
            if scaled_f(q, l, a as i128, m as i128) >= threshold {
                out.push((a, m));
            }
        }
        a += 2;
    }
    Ok(out)
}

/// Maximization of `F` over the refined set `M`; provably equal to
/// [`d_full`] and quadratically smaller to sweep.
pub fn d_refined(t: &Triple) -> Result<DResult> {
    let dec = t.decompose()?;
    sweep_guard(t)?;
    let (q, l) = (t.q() as i128, dec.l as i128);
    let threshold = 4 * l * (t.p() as i128 - 1);
    let seed = (1i64, dec.t + 1);
    let mut best = scaled_f(q, l, 1, seed.1 as i128);
    let mut witness = seed;
    debug_assert_eq!(
        best,
        4 * l * (dec.t as i128 + 1) * (dec.n_p as i128 + dec.alpha as i128),
        "F(1,t+1) = (t+1)(n_p + alpha)"
    );
    let mut a = 3i64;
    while a < dec.n_p {
        let qa = (q - a as i128) * (q - a as i128);
        let base = -(a as i128) * q + 1;
        for m in (a + 1)..=dec.n_p {
            let u = 2 * l * m as i128 + base;
            let nv = qa - u * u;
            if nv >= threshold && nv > best {
                best = nv;
                witness = (a, m);
            }
        }
        a += 2;
    }
    finalize(t, best, l, witness, MethodTag::Refined)
}

/// Even-`p` closed form `d = (q+r)/4`, cross-checked against the two
/// equivalent expressions `(r^2-1)/(4(r-p))` and `(q^2-1)/(4(q-p))`.
pub fn d_even(t: &Triple) -> Result<DResult> {
    if t.has_odd_p() {
        return Err(Error::OddP { p: t.p() });
    }
    let (p, q, r) = (t.p() as i128, t.q() as i128, t.r() as i128);
    if (q + r) % 4 != 0 {
        return Err(Error::Integrity(
            "q + r not divisible by 4 on an even-p triple",
        ));
    }
    let value = (q + r) / 4;
    let via_r = (cmul(r, r)? - 1) / (4 * (r - p));
    let via_q = (cmul(q, q)? - 1) / (4 * (q - p));
    if (cmul(r, r)? - 1) % (4 * (r - p)) != 0 || via_r != value || via_q != value {
        return Err(Error::Integrity("even-p closed-form identities disagree"));
    }
    if value % 2 != 0 {
        return Err(Error::Integrity("d-invariant must be even"));
    }
    Ok(DResult {
        value,
        witness: None,
        method: MethodTag::EvenClosedForm,
    })
}

/// The complexity index `D(p,q,r)`: `(t+1)(n_p + alpha)` for odd `p` (a
/// lower bound for `d`, equal to `F(1, t+1)`), and `d` itself for even `p`.
pub fn big_d(t: &Triple) -> Result<i128> {
    if !t.has_odd_p() {
        return Ok(d_even(t)?.value);
    }
    let dec = t.decompose()?;
    cmul(dec.t as i128 + 1, dec.n_p as i128 + dec.alpha as i128)
}

/// `chi(l, alpha) = l^2/4 - (alpha+1) l + alpha^2 + 2`, exactly (denominator
/// divides 4). Symmetric under `alpha -> l - alpha`.
pub fn chi(l: i64, alpha: i64) -> Rational {
    debug_assert!(l >= 1 && alpha >= 0);
    let (l, alpha) = (l as i128, alpha as i128);
    let num = l * l - 4 * (alpha + 1) * l + 4 * alpha * alpha + 8;
    Rational::new(num, 4).expect("nonzero denominator")
}

/// The numerical semigroup `S(p,q) = {ap + bq : a, b >= 0}` together with
/// its genus `g = (p-1)(q-1)/2`. Every integer `>= 2g` is a member.
pub struct SemigroupData {
    genus: i64,
    /// membership bitset over `[0, 2g)`
    bits: Vec<u64>,
}

impl SemigroupData {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if !(1 < p && p < q) {
            return Err(Error::InvalidArgument("need 1 < p < q"));
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        let genus = (p - 1)
            .checked_mul(q - 1)
            .map(|v| v / 2)
            .ok_or(Error::Overflow)?;
        if genus > 200_000_000 {
            return Err(Error::BudgetExceeded {
                detail: "semigroup sieve bound exceeds 2e8",
            });
        }
        let bound = (2 * genus) as usize;
        let mut bits = alloc::vec![0u64; bound / 64 + 1];
        let set = |bits: &mut Vec<u64>, i: usize| bits[i / 64] |= 1 << (i % 64);
        let get = |bits: &Vec<u64>, i: usize| bits[i / 64] >> (i % 64) & 1 == 1;
        set(&mut bits, 0);
        for s in p as usize..bound {
            if get(&bits, s - p as usize) {
                set(&mut bits, s);
            }
        }
        for s in q as usize..bound {
            if get(&bits, s - q as usize) {
                set(&mut bits, s);
            }
        }
        Ok(SemigroupData { genus, bits })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        if s >= 2 * self.genus {
            return true;
        }
        let i = s as usize;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of gaps (non-members) that are `>= g`.
    pub fn gaps_at_least_genus(&self) -> i64 {
        (self.genus..2 * self.genus)
            .filter(|&s| !self.contains(s))
            .count() as i64
    }
}

/// `d(Sigma(p, q, pqn - 1)) = 2 |{s not in S(p,q) : s >= g(p,q)}|` — the
/// surgery formula for `-1/n`-surgery on the negative torus knot. The value
/// does not depend on `n`.
pub fn d_semigroup_minus(p: i64, q: i64, n: i64) -> Result<i128> {
    if n < 1 {
        return Err(Error::InvalidArgument("need n >= 1"));
    }
    Ok(2 * SemigroupData::new(p, q)?.gaps_at_least_genus() as i128)
}

/// `d(Sigma(p, q, pqn + 1)) = 0` — the positive torus knot counterpart.
pub fn d_semigroup_plus(p: i64, q: i64, n: i64) -> Result<i128> {
    if n < 1 {
        return Err(Error::InvalidArgument("need n >= 1"));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    Ok(0)
}

/// Diagnostics for the arithmetic membership conditions of a lattice point
/// `(a, m)` in `R`:
///
/// ```text
/// Delta(m) = 4(2m - (q+r))^2 - 16(q+r)(p-1)
/// c(m)     = 2qm/(q+r)
/// dist(m)  = min over odd a' of |c(m) - a'|
/// ```
///
/// Conditions: (1) `m >= 2`; (2) `Delta >= 0`; (3) `dist <= t(m)` where
/// `t(m) = sqrt(Delta)/(2(q+r))` — evaluated exactly by squaring, and only
/// ever reported, never asserted, because the threshold's definition is
/// conventional; (4) `|c - a| = dist`. The point `(1,1)` is a member by
/// special case. `in_region` is the ground truth `F(a,m) >= F(1,1)`.
#[derive(Clone, Debug)]
pub struct RegionDiagnostics {
    pub point: (i64, i64),
    pub is_seed_point: bool,
    pub cond_m_at_least_2: bool,
    pub delta: i128,
    pub cond_delta_nonneg: bool,
    pub cond_dist_within_threshold: Option<bool>,
    pub cond_nearest_odd_attained: bool,
    pub c: Rational,
    pub nearest_odd_dist: Rational,
    pub threshold_squared: Option<Rational>,
    pub in_region: bool,
}

/// Evaluates the membership diagnostics at a lattice point.
pub fn region_diagnostics(t: &Triple, a: i64, m: i64) -> Result<RegionDiagnostics> {
    let dec = t.decompose()?;
    if a % 2 == 0 || a.abs() > t.p() || m < 0 || m > dec.n_p {
        return Err(Error::OutOfLattice { a, m });
    }
    let (p, q, r) = (t.p() as i128, t.q() as i128, t.r() as i128);
    let qr = q + r;
    let m128 = m as i128;
    let delta = cmul(4, cmul(2 * m128 - qr, 2 * m128 - qr)?)? - 16 * qr * (p - 1);
    let c = Rational::new(2 * q * m128, qr)?;
    // nearest odd integers bracket (c - 1)/2
    let j0 = (2 * q * m128 - qr).div_euclid(2 * qr);
    let lo = Rational::from_int(2 * j0 + 1);
    let hi = Rational::from_int(2 * j0 + 3);
    let dist_lo = c.checked_sub(&lo)?.abs();
    let dist_hi = c.checked_sub(&hi)?.abs();
    let nearest = dist_lo.min(dist_hi);
    let dist_a = c.checked_sub(&Rational::from_int(a as i128))?.abs();

    let threshold_squared = (delta >= 0)
        .then(|| Rational::new(delta, 4 * qr * qr))
        .transpose()?;
    let cond3 = threshold_squared
        .map(|t2| Ok::<_, Error>(nearest.checked_mul(&nearest)? <= t2))
        .transpose()?;
    Ok(RegionDiagnostics {
        point: (a, m),
        is_seed_point: (a, m) == (1, 1),
        cond_m_at_least_2: m >= 2,
        delta,
        cond_delta_nonneg: delta >= 0,
        cond_dist_within_threshold: cond3,
        cond_nearest_odd_attained: dist_a == nearest,
        c,
        nearest_odd_dist: nearest,
        threshold_squared,
        in_region: lattice_r_member(t, a, m)?,
    })
}

/// Slope regime of an odd-`p` triple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SRegime {
    /// even `p`: no slope data
    EvenP,
    /// `s < 1`
    Below1,
    /// `s = 1` (`l = n_p`)
    One,
    /// `s = 2u/(u+1)` for an integer `u >= 2` (strictly between 1 and 2)
    Regular { u: i64 },
    /// `s` in `(1, 2)` but not of the form `2u/(u+1)`
    Irregular,
    /// `s = 2` (`q = 2p - 1`)
    Two,
}

impl fmt::Display for SRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SRegime::EvenP => write!(f, "even-p"),
            SRegime::Below1 => write!(f, "s<1"),
            SRegime::One => write!(f, "s=1"),
            SRegime::Regular { u } => write!(f, "s=2u/(u+1),u={u}"),
            SRegime::Irregular => write!(f, "irregular"),
            SRegime::Two => write!(f, "s=2"),
        }
    }
}

pub(crate) fn regime(dec: &Decomposition) -> SRegime {
    let (l, n_p) = (dec.l, dec.n_p);
    if l < n_p {
        SRegime::Below1
    } else if l == n_p {
        SRegime::One
    } else if l == 2 * n_p {
        SRegime::Two
    } else {
        // s = 2u/(u+1) solves to u = l/(2 n_p - l)
        let den = 2 * n_p - l;
        if den > 0 && l % den == 0 {
            SRegime::Regular { u: l / den }
        } else {
            SRegime::Irregular
        }
    }
}

/// One closed-form statement that applies to a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremMatch {
    pub name: &'static str,
    /// Predicted d-invariant, when the statement pins the value.
    pub predicted_d: Option<i128>,
    /// Whether the statement guarantees `d = D`.
    pub guarantees_equality: bool,
}

/// Everything the classifier can say about a triple without running a sweep.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub triple: Triple,
    pub decomposition: Option<Decomposition>,
    pub regime: SRegime,
    pub big_d: i128,
    pub matches: Vec<TheoremMatch>,
    pub d_equals_big_d_guaranteed: bool,
}

/// Lists every applicable closed-form statement, the predicted value, the
/// computed `D`, and the slope regime. Never sweeps the lattice.
pub fn classify(t: &Triple) -> Result<ClassificationReport> {
    if !t.has_odd_p() {
        let value = d_even(t)?.value;
        return Ok(ClassificationReport {
            triple: *t,
            decomposition: None,
            regime: SRegime::EvenP,
            big_d: value,
            matches: alloc::vec![TheoremMatch {
                name: "evencase",
                predicted_d: Some(value),
                guarantees_equality: true,
            }],
            d_equals_big_d_guaranteed: true,
        });
    }
    let dec = t.decompose()?;
    let (p, l, n_p, tq, alpha) = (t.p(), dec.l, dec.n_p, dec.t, dec.alpha);
    let dval = big_d(t)?;
    let mut matches = Vec::new();
    let mut push = |name: &'static str, applies: bool| {
        if applies {
            matches.push(TheoremMatch {
                name,
                predicted_d: Some(dval),
                guarantees_equality: true,
            });
        }
    };
    push("thm-1-19", (1..=19).contains(&l));
    push("alpha0", alpha == 0);
    push("ks20-1", l == 2 * n_p);
    push("ks20-2", l == n_p + 1);
    push("ks20-3", l == n_p);
    push("ks20-4", p % 4 == 3 && p >= 7 && n_p == 2 * l - 1);
    push("ks20-5", l == 1);
    push(
        "su",
        matches!(regime(&dec), SRegime::One | SRegime::Regular { .. }),
    );
    push("p-le-23", p <= 23 && l >= n_p);
    push("d-eq-p-plus-1", (tq, alpha) == (1, 1));
    if p % 4 == 1 {
        let k = (p - 1) / 4;
        push(
            "p4k1",
            k >= 3 && [1, 2, 4, 8, k, 2 * k, 2 * k + 1, 4 * k].contains(&l),
        );
    } else {
        let k = (p + 1) / 4;
        push(
            "p4k3",
            k >= 3 && [1, 2, 4, 8, k, 2 * k - 1, 2 * k, 4 * k - 2].contains(&l),
        );
    }
    // p >= chi(l, alpha), compared exactly as 4p >= 4*chi
    let chi4 = {
        let (l, a) = (l as i128, alpha as i128);
        l * l - 4 * (a + 1) * l + 4 * a * a + 8
    };
    push("chi-suff", 4 * (p as i128) >= chi4);
    // t = 0 branch: p <= l + 3 + 2 sqrt(2(l+2)), squared exactly
    push(
        "chi-suff-2",
        l > n_p && (p - l - 3 <= 0 || ((p - l - 3) as i128).pow(2) <= 8 * (l as i128 + 2)),
    );
    let guaranteed = !matches.is_empty();
    // informational: D = p-1 exactly when l >= n_p
    if l >= n_p {
        matches.push(TheoremMatch {
            name: "D-eq-p-minus-1",
            predicted_d: None,
            guarantees_equality: false,
        });
    }
    Ok(ClassificationReport {
        triple: *t,
        decomposition: Some(dec),
        regime: regime(&dec),
        big_d: dval,
        matches,
        d_equals_big_d_guaranteed: guaranteed,
    })
}

/// Closed-form evaluation for odd `p`, when some guaranteeing statement
/// applies. The witness `(1, t+1)` always attains the maximum in that case.
fn closed_form_odd(t: &Triple) -> Result<Option<DResult>> {
    let report = classify(t)?;
    let Some(m) = report.matches.iter().find(|m| m.guarantees_equality) else {
        return Ok(None);
    };
    let dec = t.decompose()?;
    Ok(Some(DResult {
        value: report.big_d,
        witness: Some((1, dec.t + 1)),
        method: MethodTag::FamilyClosedForm(m.name),
    }))
}

/// Computes the d-invariant by the requested method. `Auto` dispatches to
/// the even closed form, then an applicable odd closed form, then the
/// refined maximization; all paths agree wherever more than one is defined.
pub fn d(t: &Triple, method: Method) -> Result<DResult> {
    match method {
        Method::Full => d_full(t),
        Method::Refined => d_refined(t),
        Method::ClosedForm => {
            if !t.has_odd_p() {
                return d_even(t);
            }
            closed_form_odd(t)?.ok_or(Error::NoClosedForm { p: t.p(), q: t.q() })
        }
        Method::Auto => {
            if !t.has_odd_p() {
                return d_even(t);
            }
            match closed_form_odd(t)? {
                Some(res) => Ok(res),
                None => d_refined(t),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(p: i64, q: i64) -> Triple {
        Triple::new(p, q).unwrap()
    }

    #[test]
    fn f_eval_examples() {
        assert_eq!(f_eval(&tr(2, 3), 1, 1).unwrap(), -4);
        assert_eq!(f_eval(&tr(2, 3), 0, 0).unwrap(), 0);
        // (f + q + r)/4 = 90 at (3,4) on the Fibonacci triple
        assert_eq!(f_eval(&tr(89, 144), 3, 4).unwrap(), -17);
    }

    #[test]
    fn big_f_examples() {
        // F(1,1) = p - 1 always
        for (p, q) in [(2, 3), (3, 4), (5, 8), (89, 144)] {
            assert_eq!(
                big_f_eval(&tr(p, q), 1, 1).unwrap(),
                Rational::from_int(p as i128 - 1)
            );
        }
        assert_eq!(
            big_f_eval(&tr(89, 144), 3, 4).unwrap(),
            Rational::from_int(90)
        );
        assert_eq!(big_f_eval(&tr(3, 4), 1, 2).unwrap(), Rational::from_int(2));
    }

    #[test]
    fn two_forms_agree_on_small_triples() {
        for t in crate::triples::enumerate(60, None) {
            let Ok(dec) = t.decompose() else { continue };
            let (q, l) = (t.q() as i128, dec.l as i128);
            for a in (-t.p()..=t.p()).step_by(2) {
                for m in 0..=dec.n_p {
                    let lhs = big_f_eval(&t, a, m).unwrap();
                    let rhs = Rational::new(scaled_f(q, l, a as i128, m as i128), 4 * l).unwrap();
                    assert_eq!(lhs, rhs, "{t} at ({a},{m})");
                }
            }
        }
    }

    #[test]
    fn r_membership() {
        assert!(lattice_r_member(&tr(89, 144), 1, 1).unwrap());
        assert!(lattice_r_member(&tr(89, 144), 3, 4).unwrap());
        assert!(!lattice_r_member(&tr(3, 4), -1, 1).unwrap());
        assert_eq!(
            lattice_r_member(&tr(3, 4), 2, 1),
            Err(Error::OutOfLattice { a: 2, m: 1 })
        );
        assert_eq!(
            lattice_r_member(&tr(3, 4), 1, 5),
            Err(Error::OutOfLattice { a: 1, m: 5 })
        );
        assert_eq!(
            lattice_r_member(&tr(2, 3), 1, 1),
            Err(Error::EvenP { p: 2 })
        );
    }

    #[test]
    fn full_oracle_golden_values() {
        let cases = [
            (3, 4, 2),
            (3, 5, 2),
            (5, 8, 4),
            (5, 6, 6),
            (7, 9, 8),
            (13, 21, 12),
            (49, 79, 48),
            (41, 65, 40),
            (43, 67, 42),
        ];
        for (p, q, want) in cases {
            assert_eq!(d_full(&tr(p, q)).unwrap().value, want, "({p},{q})");
        }
        let res = d_full(&tr(89, 144)).unwrap();
        assert_eq!(res.value, 90);
        assert_eq!(res.witness, Some((3, 4)));
        assert_eq!(res.method, MethodTag::FullOracle);
    }

    #[test]
    fn full_oracle_rejects_even_p() {
        assert_eq!(d_full(&tr(2, 3)), Err(Error::EvenP { p: 2 }));
    }

    #[test]
    fn refined_set_examples() {
        assert_eq!(refined_set(&tr(3, 4)).unwrap(), [(1, 2)]);
        assert_eq!(refined_set(&tr(5, 8)).unwrap(), [(1, 1)]);
        assert!(refined_set(&tr(89, 144)).unwrap().contains(&(3, 4)));
    }

    #[test]
    fn refined_matches_full_golden() {
        for (p, q, want, wit) in [
            (89, 144, 90, (3, 4)),
            (49, 79, 48, (1, 1)),
            (13, 21, 12, (1, 1)),
        ] {
            let res = d_refined(&tr(p, q)).unwrap();
            assert_eq!(res.value, want);
            assert_eq!(res.witness, Some(wit));
            assert_eq!(res.method, MethodTag::Refined);
        }
    }

    #[test]
    fn even_closed_form() {
        assert_eq!(d_even(&tr(2, 3)).unwrap().value, 2);
        assert_eq!(d_even(&tr(4, 5)).unwrap().value, 6);
        assert_eq!(d_even(&tr(2, 3)).unwrap().witness, None);
        assert_eq!(d_even(&tr(3, 4)), Err(Error::OddP { p: 3 }));
        // second form of the same value
        let t = tr(2, 3);
        assert_eq!(((t.r() * t.r() - 1) / (4 * (t.r() - t.p()))), 2);
    }

    #[test]
    fn big_d_examples() {
        assert_eq!(big_d(&tr(89, 144)).unwrap(), 88);
        assert_eq!(big_d(&tr(2, 3)).unwrap(), 2);
        // q = 2p - 1 has D = p - 1
        for p in [5i64, 7, 9, 11, 21] {
            assert_eq!(big_d(&tr(p, 2 * p - 1)).unwrap(), p as i128 - 1);
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(1, 0), Rational::new(5, 4).unwrap());
        for l in 1..=30 {
            for alpha in 1..l {
                assert_eq!(chi(l, alpha), chi(l, l - alpha));
                assert!(chi(l, 1) >= chi(l, alpha));
            }
        }
    }

    #[test]
    fn semigroup_values() {
        assert_eq!(d_semigroup_minus(2, 3, 1).unwrap(), 2);
        for n in 1..=10 {
            assert_eq!(d_semigroup_minus(2, 3, n).unwrap(), 2);
        }
        assert_eq!(d_semigroup_minus(3, 4, 1).unwrap(), 2);
        assert_eq!(d_semigroup_plus(2, 3, 1).unwrap(), 0);
        assert_eq!(d_semigroup_plus(3, 5, 2).unwrap(), 0);
        assert_eq!(d_semigroup_plus(2, 5, 1).unwrap(), 0);
        assert!(matches!(
            d_semigroup_minus(4, 6, 1),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn semigroup_structure() {
        let s = SemigroupData::new(3, 4).unwrap();
        assert_eq!(s.genus(), 3);
        for v in [0, 3, 4, 6, 7, 8, 9, 10, 100] {
            assert!(s.contains(v), "{v}");
        }
        for v in [1, 2, 5] {
            assert!(!s.contains(v), "{v}");
        }
        assert!(!s.contains(-1));
        assert_eq!(s.gaps_at_least_genus(), 1);
    }

    #[test]
    fn region_diagnostics_examples() {
        let d = region_diagnostics(&tr(89, 144), 3, 4).unwrap();
        assert!(d.cond_m_at_least_2 && d.cond_delta_nonneg && d.cond_nearest_odd_attained);
        assert!(d.in_region);

        let d = region_diagnostics(&tr(3, 4), 3, 1).unwrap();
        assert!(!d.cond_m_at_least_2);

        let d = region_diagnostics(&tr(3, 4), 1, 1).unwrap();
        assert!(d.is_seed_point && d.in_region);

        assert!(region_diagnostics(&tr(3, 4), 0, 1).is_err());
    }

    #[test]
    fn classify_examples() {
        let rep = classify(&tr(3, 4)).unwrap();
        let names: Vec<_> = rep.matches.iter().map(|m| m.name).collect();
        for needed in ["ks20-5", "alpha0", "thm-1-19"] {
            assert!(names.contains(&needed), "{names:?}");
        }
        assert!(rep.d_equals_big_d_guaranteed);
        assert_eq!(rep.big_d, 2);

        let rep = classify(&tr(89, 144)).unwrap();
        assert!(!rep.d_equals_big_d_guaranteed);
        assert_eq!(rep.regime, SRegime::Irregular);
        assert_eq!(rep.big_d, 88);

        let rep = classify(&tr(2, 3)).unwrap();
        assert_eq!(rep.regime, SRegime::EvenP);
        assert_eq!(rep.big_d, 2);
        assert!(rep.d_equals_big_d_guaranteed);
    }

    #[test]
    fn regime_examples() {
        let reg = |p, q| regime(&tr(p, q).decompose().unwrap());
        assert_eq!(reg(3, 5), SRegime::Two);
        assert_eq!(reg(13, 21), SRegime::Regular { u: 2 }); // s = 8/6 = 4/3
        assert_eq!(reg(89, 144), SRegime::Irregular); // s = 5/4
        assert_eq!(reg(9, 10), SRegime::Below1);
        assert_eq!(reg(7, 10), SRegime::One);
        assert_eq!(reg(5, 7), SRegime::One); // l = n_p = 2
    }

    #[test]
    fn dispatch_examples() {
        let res = d(&tr(2, 3), Method::Auto).unwrap();
        assert_eq!((res.value, res.method), (2, MethodTag::EvenClosedForm));

        let res = d(&tr(5, 8), Method::Auto).unwrap();
        assert_eq!(res.value, 4);
        assert_eq!(res.method, MethodTag::FamilyClosedForm("thm-1-19"));

        let res = d(&tr(89, 144), Method::Auto).unwrap();
        assert_eq!((res.value, res.method), (90, MethodTag::Refined));

        assert!(matches!(
            d(&tr(89, 144), Method::ClosedForm),
            Err(Error::NoClosedForm { .. })
        ));
        assert_eq!(d(&tr(2, 3), Method::ClosedForm).unwrap().value, 2);
    }

    #[test]
    fn dispatch_paths_agree() {
        for t in crate::triples::enumerate(120, None) {
            if !t.has_odd_p() {
                continue;
            }
            let full = d_full(&t).unwrap().value;
            let auto = d(&t, Method::Auto).unwrap().value;
            assert_eq!(full, auto, "{t}");
        }
    }
}
