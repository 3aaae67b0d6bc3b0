//! High-precision numeric verification of series constants.
//!
//! Partial sums are exact rationals; the only approximation is the final
//! conversion to a fixed-point decimal, with error below one unit in the
//! last of `digits` places.  The pi constant is computed at startup from a
//! Machin-style arctangent formula in scaled-integer arithmetic and cross
//! validated against a second formula; square roots come from integer
//! Newton iteration (floor square root of `alpha * 10^(2 digits)`).
//!
//! For alternating series the Chebyshev-weighted acceleration scheme of
//! Cohen, Rodriguez Villegas and Zagier is available, again in exact
//! rational arithmetic, so slowly converging alternating sums can still be
//! checked to useful tolerances.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::identity::{render_constant, ConstantKind, NewIdentity, SeedIdentity};
use crate::poly::{Rational, UniPoly};
use crate::sequences::{seq_terms, SequenceDef, SequenceError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("precision must be at least 10 digits, got {0}")]
    TooFewDigits(usize),
    #[error("pi self-check failed: two formulas disagree at the requested precision")]
    PiSelfCheck,
    #[error("bad tolerance literal {0:?}")]
    BadTolerance(String),
    #[error("series must have at least one term")]
    EmptySeries,
    #[error("sequence error: {0}")]
    Sequence(#[from] SequenceError),
}

/// Fixed-precision context: `digits` decimal digits, pi and square roots as
/// floor-scaled integers `value * 10^digits`.
#[derive(Debug)]
pub struct PrecisionContext {
    digits: usize,
    pi_scaled: BigInt,
    sqrt_cache: Mutex<HashMap<u64, BigInt>>,
}

impl PrecisionContext {
    /// Build a context; computes pi twice (Machin and Euler arctangent
    /// formulas) and fails if the two disagree beyond the last digit.
    pub fn new(digits: usize) -> Result<Self, VerifyError> {
        if digits < 10 {
            return Err(VerifyError::TooFewDigits(digits));
        }
        const GUARD: usize = 10;
        let scale = pow10(digits + GUARD);
        // pi = 16 arctan(1/5) - 4 arctan(1/239)
        let machin = 16 * arctan_recip_scaled(5, &scale) - 4 * arctan_recip_scaled(239, &scale);
        // pi = 4 (arctan(1/2) + arctan(1/3))
        let euler = 4 * (arctan_recip_scaled(2, &scale) + arctan_recip_scaled(3, &scale));
        let guard_unit = pow10(GUARD);
        let diff: BigInt = &machin - &euler;
        if diff.abs() > pow10(GUARD / 2) {
            return Err(VerifyError::PiSelfCheck);
        }
        Ok(PrecisionContext {
            digits,
            pi_scaled: machin / guard_unit,
            sqrt_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// `floor(pi * 10^digits)`.
    pub fn pi_scaled(&self) -> BigInt {
        self.pi_scaled.clone()
    }

    /// Decimal rendering of pi to `digits` places.
    pub fn pi_decimal(&self) -> String {
        scaled_to_decimal(&self.pi_scaled, self.digits)
    }

    /// `floor(sqrt(alpha) * 10^digits)`, cached, with the defining
    /// inequality re-checked on every computation.
    pub fn sqrt_scaled(&self, alpha: u64) -> BigInt {
        if let Some(hit) = self.sqrt_cache.lock().unwrap().get(&alpha) {
            return hit.clone();
        }
        let target = BigInt::from(alpha) * pow10(2 * self.digits);
        let s = target.sqrt();
        debug_assert!(&s * &s <= target && (&s + 1) * (&s + 1) > target);
        self.sqrt_cache.lock().unwrap().insert(alpha, s.clone());
        s
    }

    /// `floor(r * 10^digits)` (toward minus infinity).
    pub fn rational_scaled(&self, r: &Rational) -> BigInt {
        (r.numer() * pow10(self.digits)).div_floor(r.denom())
    }
}

fn pow10(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), k)
}

/// `floor(arctan(1/x) * scale)` up to truncation of each series term.
fn arctan_recip_scaled(x: i64, scale: &BigInt) -> BigInt {
    let xx = BigInt::from(x) * x;
    let mut power = scale / x;
    let mut sum = power.clone();
    let mut k = 1i64;
    loop {
        power = &power / &xx;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

fn scaled_to_decimal(v: &BigInt, digits: usize) -> String {
    let sign = if v.is_negative() { "-" } else { "" };
    let mag = v.abs().to_string();
    if mag.len() > digits {
        let (int, frac) = mag.split_at(mag.len() - digits);
        format!("{sign}{int}.{frac}")
    } else {
        format!("{sign}0.{}{}", "0".repeat(digits - mag.len()), mag)
    }
}

/// Tolerance given as `1e-30` or `2.5e-8`, held exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tolerance(pub Rational);

impl Tolerance {
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let bad = || VerifyError::BadTolerance(text.to_string());
        let lower = text.trim().to_ascii_lowercase();
        let (mant, exp) = match lower.split_once('e') {
            Some((m, e)) => (m.to_string(), e.parse::<i64>().map_err(|_| bad())?),
            None => (lower.clone(), 0),
        };
        let (int_part, frac_part) = match mant.split_once('.') {
            Some((i, f)) => (i.to_string(), f.to_string()),
            None => (mant.clone(), String::new()),
        };
        let all: String = format!("{int_part}{frac_part}");
        if all.is_empty() || !all.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = all.parse().map_err(|_| bad())?;
        let shift = exp - frac_part.len() as i64;
        let value = if shift >= 0 {
            Rational::from_integer(num * pow10(shift as usize))
        } else {
            Rational::new(num, pow10((-shift) as usize))
        };
        if value.is_negative() || value.is_zero() {
            return Err(bad());
        }
        Ok(Tolerance(value))
    }
}

/// What a series claims to sum to: `lambda * kappa` with `kappa` one of
/// `1/pi`, `sqrt(alpha)/pi`, `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTarget {
    pub weight: UniPoly,
    pub lambda: Rational,
    pub alpha: u64,
    pub kind: ConstantKind,
}

impl From<&SeedIdentity> for SeriesTarget {
    fn from(seed: &SeedIdentity) -> Self {
        SeriesTarget {
            weight: seed.weight.clone(),
            lambda: seed.lambda.clone(),
            alpha: seed.alpha,
            kind: seed.kind,
        }
    }
}

impl From<&NewIdentity> for SeriesTarget {
    fn from(id: &NewIdentity) -> Self {
        SeriesTarget {
            weight: id.weight.clone(),
            lambda: &id.c_weight * &id.seed.lambda,
            alpha: id.seed.alpha,
            kind: id.seed.kind,
        }
    }
}

impl SeriesTarget {
    pub fn constant_text(&self) -> String {
        render_constant(&self.lambda, self.alpha, self.kind)
    }

    /// `floor(lambda * kappa * 10^digits)` up to one unit in the last place.
    pub fn scaled(&self, ctx: &PrecisionContext) -> BigInt {
        match self.kind {
            ConstantKind::RationalConstant => ctx.rational_scaled(&self.lambda),
            ConstantKind::RationalOverPi | ConstantKind::SqrtAlphaOverPi => {
                let sqrt = ctx.sqrt_scaled(self.alpha); // 10^d for alpha = 1
                let num = self.lambda.numer() * &sqrt * pow10(ctx.digits);
                let den = self.lambda.denom() * ctx.pi_scaled();
                num.div_floor(&den)
            }
        }
    }
}

/// Verification report; `abs_residual` is `|S - target|` in units of
/// `10^-digits`, also rendered in scientific notation.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub target: String,
    pub partial_terms: usize,
    pub digits: usize,
    pub residual_scaled: BigInt,
    pub abs_residual: String,
    pub pass: bool,
    pub accelerated: bool,
    /// Set when the plain partial sum cannot have reached the tolerance yet
    /// (last term larger than the tolerance): the verdict is about term
    /// count, not about the identity.
    pub note: Option<String>,
}

/// Compare the series `sum weight(n) seq(n)` against its claimed constant.
///
/// With `accelerate` unset this sums terms `0..=n_terms` exactly; with it
/// set, the alternating-series acceleration scheme is applied to the same
/// terms.  The residual is exact up to the decimal conversion floor of
/// `10^-digits`.
pub fn verify_series(
    target: &SeriesTarget,
    seq: &SequenceDef,
    n_terms: usize,
    ctx: &PrecisionContext,
    accelerate: bool,
    tolerance: &Tolerance,
) -> Result<VerifyReport, VerifyError> {
    if n_terms == 0 {
        return Err(VerifyError::EmptySeries);
    }
    let values = seq_terms(seq, n_terms)?;
    let terms: Vec<Rational> = values
        .iter()
        .enumerate()
        .map(|(n, v)| target.weight.eval_int(n as i64) * v)
        .collect();
    let estimate = if accelerate {
        cvz_accelerate(&terms)
    } else {
        let mut s = Rational::zero();
        for t in &terms {
            s += t;
        }
        s
    };
    let estimate_scaled = ctx.rational_scaled(&estimate);
    let target_scaled = target.scaled(ctx);
    let residual_scaled = (estimate_scaled - target_scaled).abs();
    let tol_scaled = (tolerance.0.numer() * pow10(ctx.digits)).div_floor(tolerance.0.denom());
    let pass = residual_scaled <= tol_scaled;
    let note = if !accelerate && !pass {
        let last = terms.last().unwrap().abs();
        if Rational::from_integer(residual_scaled.clone())
            < Rational::from_integer(pow10(ctx.digits)) * &last
        {
            Some(format!(
                "partial sum has not converged at {n_terms} terms; increase the term count"
            ))
        } else {
            None
        }
    } else {
        None
    };
    Ok(VerifyReport {
        target: target.constant_text(),
        partial_terms: n_terms,
        digits: ctx.digits,
        abs_residual: sci_string(&residual_scaled, ctx.digits),
        residual_scaled,
        pass,
        accelerated: accelerate,
        note,
    })
}

/// Alternating-series acceleration (Chebyshev weights): estimate
/// `sum_k t_k` for `t_k = (-1)^k a_k` from the first `N` terms.
///
/// `d_N = ((3+sqrt 8)^N + (3-sqrt 8)^N)/2` is computed exactly by its
/// integer recurrence; the weights follow the usual three-term update, all
/// in rational arithmetic.
pub fn cvz_accelerate(terms: &[Rational]) -> Rational {
    let n = terms.len();
    if n == 0 {
        return Rational::zero();
    }
    let mut d_prev = BigInt::one(); // d_0
    let mut d_cur = BigInt::from(3); // d_1
    if n == 1 {
        d_cur = d_prev.clone();
    } else {
        for _ in 2..=n {
            let next = 6 * &d_cur - &d_prev;
            d_prev = d_cur;
            d_cur = next;
        }
    }
    let d = Rational::from_integer(d_cur);
    let mut b = -Rational::one();
    let mut c = -d.clone();
    let mut s = Rational::zero();
    for (k, t) in terms.iter().enumerate() {
        c = &b - &c;
        let a_k = if k % 2 == 0 { t.clone() } else { -t.clone() };
        s += &c * a_k;
        let num = 2 * (k as i64 + n as i64) * (k as i64 - n as i64);
        let den = (2 * k as i64 + 1) * (k as i64 + 1);
        b *= Rational::new(BigInt::from(num), BigInt::from(den));
    }
    s / d
}

fn sci_string(residual: &BigInt, digits: usize) -> String {
    if residual.is_zero() {
        return "0".to_string();
    }
    let s = residual.to_string();
    let exp = s.len() as i64 - 1 - digits as i64;
    let mantissa = if s.len() == 1 {
        s.clone()
    } else {
        format!("{}.{}", &s[..1], &s[1..2.min(s.len() - 1) + 1])
    };
    format!("{mantissa}e{exp}")
}
