//! Congruence and divisibility checking for weighted partial sums.
//!
//! A claim states that `S(x) = sum_k weight(k) F(k)` (summed up to `x-1` or
//! `x`) is congruent to a closed-world right-hand side modulo either
//! `const * poly(x)` or `x^e` with `x` prime.  Everything is evaluated in
//! exact big-integer arithmetic; rational values are reduced modulo `m`
//! through modular inverses of their denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::operator::{OperatorError, RecOperator};
use crate::poly::{poly_gcd, poly_parse, rat_parse, PolyError, Rational, UniPoly};
use crate::reduction::{normalize_window, telescoped_sum, ReductionError, SumClosedForm};
use crate::sequences::{seq_terms, SequenceDef, SequenceError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus vanishes at tested point {0}")]
    ZeroModulus(u64),
    #[error("modulus is not an integer at tested point {0}")]
    NonIntegerModulus(u64),
    #[error("right-hand side not evaluable at {point}: denominator {denom} shares a factor with the modulus")]
    RhsNotEvaluable { point: u64, denom: BigInt },
    #[error("sequence terms are not integers; congruence claims need integer sequences")]
    NonIntegerTerms,
    #[error("window normalization is required and failed: {0}")]
    Normalization(ReductionError),
    #[error("operator does not annihilate the sequence (fails at n = {0})")]
    NotAnAnnihilator(usize),
    #[error("telescoped constant term is nonzero; no divisibility family follows")]
    ConstantTermNonzero,
    #[error("sequence error: {0}")]
    Sequence(#[from] SequenceError),
    #[error("operator error: {0}")]
    Operator(#[from] OperatorError),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("bad claim file: {0}")]
    BadFile(String),
}

/// Legendre symbol `(a/p)` by Euler's criterion; `p` must be an odd prime.
pub fn legendre(a: &BigInt, p: u64) -> Result<i8, CongruenceError> {
    if p < 3 || !is_prime(p) {
        return Err(CongruenceError::NotOddPrime(p));
    }
    let pb = BigInt::from(p);
    let r = a.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_zero() {
        Ok(0)
    } else if r.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Deterministic trial-division primality; the ranges here stay tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in the inclusive range.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Modulus of a claim at a tested point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModulusSpec {
    /// `constant * poly(n)` with a positive integer constant.
    PolyTimesConst { constant: BigInt, poly: UniPoly },
    /// `p^exponent` with `p` the tested prime.
    PrimePower { exponent: u32 },
}

impl ModulusSpec {
    fn eval(&self, point: u64) -> Result<BigInt, CongruenceError> {
        let m = match self {
            ModulusSpec::PolyTimesConst { constant, poly } => {
                let v = poly.eval_int(point as i64);
                if !v.denom().is_one() {
                    return Err(CongruenceError::NonIntegerModulus(point));
                }
                constant * v.numer()
            }
            ModulusSpec::PrimePower { exponent } => {
                num_traits::Pow::pow(BigInt::from(point), *exponent)
            }
        };
        if m.is_zero() {
            return Err(CongruenceError::ZeroModulus(point));
        }
        Ok(m.abs())
    }
}

/// One monomial of the closed-world right-hand side language:
/// `coeff * (p/3)^[0|1] * (2^p - 1)^mersenne_pow * p^p_pow`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub coeff: Rational,
    pub legendre3: bool,
    pub mersenne_pow: u32,
    pub p_pow: u32,
}

impl RhsTerm {
    pub fn constant(coeff: Rational) -> Self {
        RhsTerm {
            coeff,
            legendre3: false,
            mersenne_pow: 0,
            p_pow: 0,
        }
    }
}

/// A congruence claim over a catalog sequence.
#[derive(Clone, Debug)]
pub struct CongruenceClaim {
    pub sequence: SequenceDef,
    pub weight: UniPoly,
    pub modulus: ModulusSpec,
    /// Sum of [`RhsTerm`]s; empty means 0.
    pub rhs: Vec<RhsTerm>,
    /// `true`: `sum_{k=0}^{x}`;  `false`: `sum_{k=0}^{x-1}`.
    pub upper_inclusive: bool,
}

/// Result for one tested point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    pub n: u64,
    pub lhs_mod: String,
    pub rhs_mod: String,
    pub pass: bool,
}

/// Full report for one claim over a range.
#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub points: Vec<PointRecord>,
    pub pass: bool,
    pub first_failure: Option<u64>,
}

/// Check a claim at every point of `lo..=hi` (primes only when asked).
///
/// Stops at the first failing point unless `exhaustive` is set.  The report
/// lists every tested point with both residues normalized to `0..m-1`.
pub fn check_claim(
    claim: &CongruenceClaim,
    lo: u64,
    hi: u64,
    primes_only: bool,
    exhaustive: bool,
) -> Result<ClaimReport, CongruenceError> {
    let points: Vec<u64> = if primes_only {
        primes_in(lo, hi)
    } else {
        (lo.max(1)..=hi).collect()
    };
    let top = points.last().copied().unwrap_or(0) as usize;
    let terms = seq_terms(&claim.sequence, top + 1)?;
    if terms.iter().any(|t| !t.denom().is_one()) {
        return Err(CongruenceError::NonIntegerTerms);
    }
    // Prefix sums: prefix[m] = sum_{k=0}^{m-1} weight(k) F(k), exact.
    let weight_int = claim.weight.clone();
    let mut prefix: Vec<Rational> = Vec::with_capacity(top + 2);
    prefix.push(Rational::zero());
    for (k, t) in terms.iter().enumerate().take(top + 1) {
        let v = prefix.last().unwrap() + weight_int.eval_int(k as i64) * t;
        prefix.push(v);
    }
    let mut records = Vec::with_capacity(points.len());
    let mut first_failure = None;
    for &x in &points {
        let upper = if claim.upper_inclusive { x + 1 } else { x };
        let s = &prefix[upper as usize];
        let m = claim.modulus.eval(x)?;
        let lhs = mod_rational(s, &m, x)?;
        let rhs = eval_rhs(&claim.rhs, x, &m)?;
        let pass = lhs == rhs;
        records.push(PointRecord {
            n: x,
            lhs_mod: lhs.to_string(),
            rhs_mod: rhs.to_string(),
            pass,
        });
        if !pass {
            if first_failure.is_none() {
                first_failure = Some(x);
            }
            if !exhaustive {
                break;
            }
        }
    }
    Ok(ClaimReport {
        pass: first_failure.is_none(),
        points: records,
        first_failure,
    })
}

/// Reduce an exact rational modulo `m`, inverting the denominator.
fn mod_rational(v: &Rational, m: &BigInt, point: u64) -> Result<BigInt, CongruenceError> {
    let den = v.denom().mod_floor(m);
    let inv = mod_inverse(&den, m).ok_or_else(|| CongruenceError::RhsNotEvaluable {
        point,
        denom: v.denom().clone(),
    })?;
    Ok((v.numer().mod_floor(m) * inv).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn eval_rhs(rhs: &[RhsTerm], point: u64, m: &BigInt) -> Result<BigInt, CongruenceError> {
    let mut acc = BigInt::zero();
    for term in rhs {
        let mut v = mod_rational(&term.coeff, m, point)?;
        if term.legendre3 {
            let sym = legendre(&BigInt::from(point), 3)?;
            v = (v * BigInt::from(sym)).mod_floor(m);
        }
        if term.mersenne_pow > 0 {
            let mers = (BigInt::from(2).modpow(&BigInt::from(point), m) - 1u32).mod_floor(m);
            v = (v * mers.modpow(&BigInt::from(term.mersenne_pow), m)).mod_floor(m);
        }
        if term.p_pow > 0 {
            v = (v * BigInt::from(point).modpow(&BigInt::from(term.p_pow), m)).mod_floor(m);
        }
        acc = (acc + v).mod_floor(m);
    }
    Ok(acc)
}

/// Derive the divisibility family `sum_{k<n} L*(p)(k) F(k) = 0 (mod c*g(n))`
/// from the telescoped closed form of an order-2 operator.
///
/// The closed form is window-normalized to `A(n) F(n-1) + B(n) F(n)` with
/// `A(n) = a_0(n-1) p(n-1)` and `B(n) = -a_2(n-2) p(n-2)`; the modulus
/// polynomial is the primitive integer form of `gcd(a_0(n-1), a_2(n-2))`,
/// and the constant is 2 when the sequence is even from index 1 on (checked
/// numerically over a probe range), else 1.
pub fn derive_family(
    op: &RecOperator,
    seq: &SequenceDef,
    p: &UniPoly,
) -> Result<(SumClosedForm, CongruenceClaim), CongruenceError> {
    let probe = seq_terms(seq, op.order() + 12)?;
    for n in 0..probe.len() - op.order() {
        if !op.apply_at(&probe, n).is_zero() {
            return Err(CongruenceError::NotAnAnnihilator(n));
        }
    }
    let initial = seq_terms(seq, op.order().max(1))?;
    let form = telescoped_sum(op, p, &initial).map_err(CongruenceError::Normalization)?;
    let norm = normalize_window(&form, op).map_err(CongruenceError::Normalization)?;
    if !norm.constant.is_zero() {
        return Err(CongruenceError::ConstantTermNonzero);
    }
    let g = poly_gcd(&op.coeff(0).shift(-1), &op.coeff(2).shift(-2))?;
    let (gpoly, _) = g.primitive_integer();

    const PARITY_PROBE: usize = 60;
    let probe = seq_terms(seq, PARITY_PROBE)?;
    if probe.iter().any(|t| !t.denom().is_one()) {
        return Err(CongruenceError::NonIntegerTerms);
    }
    let all_even = probe[1..]
        .iter()
        .all(|t| t.numer().mod_floor(&BigInt::from(2)).is_zero());
    let constant = if all_even {
        BigInt::from(2)
    } else {
        BigInt::one()
    };

    let claim = CongruenceClaim {
        sequence: seq.clone(),
        weight: op.adjoint_apply(p),
        modulus: ModulusSpec::PolyTimesConst {
            constant,
            poly: gpoly,
        },
        rhs: vec![],
        upper_inclusive: false,
    };
    Ok((norm, claim))
}

/// One record of [`known_fact_checks`].
#[derive(Clone, Debug)]
pub struct FactRecord {
    pub prime: u64,
    pub fact: &'static str,
    pub pass: bool,
}

/// Numeric verification of the two Franel facts used as inputs by the
/// prime-power congruence: `f_p = 2 (mod p^3)` and
/// `f_{p-1} = 1 + 3(2^{p-1}-1) + 3(2^{p-1}-1)^2 (mod p^3)`, primes 5..=97.
/// These are checked, not proved.
pub fn known_fact_checks() -> Result<Vec<FactRecord>, CongruenceError> {
    let franel = crate::sequences::by_name("franel")?;
    let terms = crate::sequences::seq_terms_int(franel, 97)?;
    let mut out = Vec::new();
    for p in primes_in(5, 97) {
        let m = num_traits::Pow::pow(BigInt::from(p), 3u32);
        let fp = terms[p as usize].mod_floor(&m);
        out.push(FactRecord {
            prime: p,
            fact: "f_p = 2 (mod p^3)",
            pass: fp == BigInt::from(2),
        });
        let t = (BigInt::from(2).modpow(&BigInt::from(p - 1), &m) - 1u32).mod_floor(&m);
        let rhs = (BigInt::one() + 3u32 * &t + 3u32 * (&t * &t)).mod_floor(&m);
        let fp1 = terms[(p - 1) as usize].mod_floor(&m);
        out.push(FactRecord {
            prime: p,
            fact: "f_{p-1} = 1 + 3(2^{p-1}-1) + 3(2^{p-1}-1)^2 (mod p^3)",
            pass: fp1 == rhs,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// claim files
// ---------------------------------------------------------------------------

/// Point iteration declared by a claim file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointsKind {
    Integers,
    Primes,
}

/// A claim plus the iteration defaults shipped with it.
#[derive(Clone, Debug)]
pub struct ClaimFile {
    pub claim: CongruenceClaim,
    pub points: PointsKind,
    pub default_range: (u64, u64),
}

#[derive(Serialize, Deserialize)]
struct ClaimWire {
    sequence: String,
    sum_var: String,
    weight: String,
    upper: String,
    points: String,
    modulus: ModulusWire,
    rhs: Vec<RhsWire>,
    default_range: (u64, u64),
}

#[derive(Serialize, Deserialize)]
struct ModulusWire {
    #[serde(skip_serializing_if = "Option::is_none")]
    constant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prime_power: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct RhsWire {
    coeff: String,
    #[serde(default)]
    legendre3: bool,
    #[serde(default)]
    mersenne_pow: u32,
    #[serde(default)]
    p_pow: u32,
}

impl ClaimFile {
    pub fn from_json(text: &str) -> Result<Self, CongruenceError> {
        let wire: ClaimWire =
            serde_json::from_str(text).map_err(|e| CongruenceError::BadFile(e.to_string()))?;
        let sequence = crate::sequences::by_name(&wire.sequence)?.clone();
        let weight = poly_parse(&wire.weight, &wire.sum_var)?;
        let upper_inclusive = match wire.upper.as_str() {
            "inclusive" => true,
            "exclusive" => false,
            other => {
                return Err(CongruenceError::BadFile(format!(
                    "upper must be inclusive or exclusive, got {other:?}"
                )))
            }
        };
        let points = match wire.points.as_str() {
            "integers" => PointsKind::Integers,
            "primes" => PointsKind::Primes,
            other => {
                return Err(CongruenceError::BadFile(format!(
                    "points must be integers or primes, got {other:?}"
                )))
            }
        };
        let modulus = match (&wire.modulus.prime_power, &wire.modulus.poly) {
            (Some(e), None) => ModulusSpec::PrimePower { exponent: *e },
            (None, Some(p)) => {
                let constant = wire
                    .modulus
                    .constant
                    .as_deref()
                    .unwrap_or("1")
                    .parse::<BigInt>()
                    .map_err(|e| CongruenceError::BadFile(e.to_string()))?;
                if !constant.is_positive() {
                    return Err(CongruenceError::BadFile(
                        "modulus constant must be positive".to_string(),
                    ));
                }
                ModulusSpec::PolyTimesConst {
                    constant,
                    poly: poly_parse(p, "n")?,
                }
            }
            _ => {
                return Err(CongruenceError::BadFile(
                    "modulus needs exactly one of poly or prime_power".to_string(),
                ))
            }
        };
        let rhs = wire
            .rhs
            .iter()
            .map(|t| {
                Ok(RhsTerm {
                    coeff: rat_parse(&t.coeff)?,
                    legendre3: t.legendre3,
                    mersenne_pow: t.mersenne_pow,
                    p_pow: t.p_pow,
                })
            })
            .collect::<Result<Vec<_>, CongruenceError>>()?;
        Ok(ClaimFile {
            claim: CongruenceClaim {
                sequence,
                weight,
                modulus,
                rhs,
                upper_inclusive,
            },
            points,
            default_range: wire.default_range,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::sequences::by_name;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&BigInt::from(3), 3).unwrap(), 0);
        assert_eq!(legendre(&BigInt::from(5), 3).unwrap(), -1);
        assert_eq!(legendre(&BigInt::from(7), 3).unwrap(), 1);
        assert_eq!(
            legendre(&BigInt::from(2), 4),
            Err(CongruenceError::NotOddPrime(4))
        );
        assert_eq!(
            legendre(&BigInt::from(2), 2),
            Err(CongruenceError::NotOddPrime(2))
        );
    }

    #[test]
    fn legendre_matches_brute_force_residues() {
        for p in primes_in(3, 97) {
            let residues: std::collections::BTreeSet<u64> = (1..p).map(|x| (x * x) % p).collect();
            for a in 0..p {
                let expect = if a == 0 {
                    0
                } else if residues.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(&BigInt::from(a), p).unwrap(), expect, "({a}/{p})");
            }
        }
    }

    fn franel_claim_3k2() -> CongruenceClaim {
        CongruenceClaim {
            sequence: by_name("franel_signed").unwrap().clone(),
            weight: poly_parse("3*k+2", "k").unwrap(),
            modulus: ModulusSpec::PolyTimesConst {
                constant: BigInt::from(2),
                poly: poly_parse("n^2", "n").unwrap(),
            },
            rhs: vec![],
            upper_inclusive: false,
        }
    }

    #[test]
    fn franel_3k2_holds_to_50() {
        let report = check_claim(&franel_claim_3k2(), 1, 50, false, false).unwrap();
        assert!(report.pass);
        assert_eq!(report.points.len(), 50);
    }

    #[test]
    fn franel_mod_p5_small_primes() {
        let claim = CongruenceClaim {
            sequence: by_name("franel_signed").unwrap().clone(),
            weight: poly_parse("3*k+2", "k").unwrap(),
            modulus: ModulusSpec::PrimePower { exponent: 5 },
            rhs: vec![RhsTerm {
                coeff: rat(2, 1),
                legendre3: false,
                mersenne_pow: 2,
                p_pow: 2,
            }],
            upper_inclusive: false,
        };
        let report = check_claim(&claim, 5, 31, true, false).unwrap();
        assert!(report.pass);
        // p = 5: S = 4300 and 2 p^2 (2^p - 1)^2 = 48050 agree mod 3125.
        assert_eq!(report.points[0].lhs_mod, "1175");
        assert_eq!(report.points[0].rhs_mod, "1175");
    }

    #[test]
    fn franel_legendre_rhs_families() {
        // (p/3) mod p^2 family with rational coefficients -2/3 and 10/27.
        for (weight, coeff) in [("1", rat(1, 1)), ("k", rat(-2, 3)), ("k^2", rat(10, 27))] {
            let claim = CongruenceClaim {
                sequence: by_name("franel_signed").unwrap().clone(),
                weight: poly_parse(weight, "k").unwrap(),
                modulus: ModulusSpec::PrimePower { exponent: 2 },
                rhs: vec![RhsTerm {
                    coeff,
                    legendre3: true,
                    mersenne_pow: 0,
                    p_pow: 0,
                }],
                upper_inclusive: false,
            };
            let report = check_claim(&claim, 5, 37, true, false).unwrap();
            assert!(report.pass, "weight {weight}");
        }
    }

    #[test]
    fn detects_counterexamples_and_completes_exhaustively() {
        // A wrong modulus 3n^2 fails quickly for the 3k+2 family.
        let mut claim = franel_claim_3k2();
        claim.modulus = ModulusSpec::PolyTimesConst {
            constant: BigInt::from(3),
            poly: poly_parse("n^2", "n").unwrap(),
        };
        let report = check_claim(&claim, 1, 30, false, false).unwrap();
        assert!(!report.pass);
        let stop_at = report.points.len() as u64;
        assert_eq!(report.first_failure, Some(stop_at));
        let full = check_claim(&claim, 1, 30, false, true).unwrap();
        assert!(!full.pass);
        assert_eq!(full.points.len(), 30);
        assert_eq!(full.first_failure, Some(stop_at));
    }

    #[test]
    fn modulus_zero_is_reported() {
        let mut claim = franel_claim_3k2();
        claim.modulus = ModulusSpec::PolyTimesConst {
            constant: BigInt::one(),
            poly: poly_parse("n-5", "n").unwrap(),
        };
        // Exhaustive mode runs past the early failing points and must stop
        // hard at the vanishing modulus.
        let err = check_claim(&claim, 1, 10, false, true).unwrap_err();
        assert_eq!(err, CongruenceError::ZeroModulus(5));
    }

    #[test]
    fn rhs_with_noninvertible_denominator_is_reported() {
        let mut claim = franel_claim_3k2();
        claim.modulus = ModulusSpec::PrimePower { exponent: 2 };
        claim.rhs = vec![RhsTerm::constant(rat(1, 5))];
        let err = check_claim(&claim, 5, 5, true, false).unwrap_err();
        assert_eq!(
            err,
            CongruenceError::RhsNotEvaluable {
                point: 5,
                denom: BigInt::from(5)
            }
        );
    }

    #[test]
    fn derive_family_franel_and_delannoy() {
        let fr = by_name("franel_signed").unwrap();
        let op = fr.known_operator.clone().unwrap();
        let (form, claim) = derive_family(&op, fr, &UniPoly::one()).unwrap();
        // weight -3(3k+2), closed form -n^2 (F(n) + 8 F(n-1)), modulus 2n^2.
        assert_eq!(claim.weight, poly_parse("-9*k-6", "k").unwrap());
        assert_eq!(form.boundary[0].1, poly_parse("-8*n^2", "n").unwrap());
        assert_eq!(form.boundary[1].1, poly_parse("-n^2", "n").unwrap());
        match &claim.modulus {
            ModulusSpec::PolyTimesConst { constant, poly } => {
                assert_eq!(constant, &BigInt::from(2));
                assert_eq!(poly, &poly_parse("n^2", "n").unwrap());
            }
            other => panic!("unexpected modulus {other:?}"),
        }
        let report = check_claim(&claim, 1, 60, false, false).unwrap();
        assert!(report.pass);

        let de = by_name("delannoy").unwrap();
        let op = de.known_operator.clone().unwrap();
        let (form, claim) = derive_family(&op, de, &UniPoly::one()).unwrap();
        assert_eq!(claim.weight, poly_parse("-4*k-2", "k").unwrap());
        assert_eq!(form.boundary[0].1, poly_parse("n", "n").unwrap());
        assert_eq!(form.boundary[1].1, poly_parse("-n", "n").unwrap());
        match &claim.modulus {
            ModulusSpec::PolyTimesConst { constant, poly } => {
                assert_eq!(constant, &BigInt::one());
                assert_eq!(poly, &poly_parse("n", "n").unwrap());
            }
            other => panic!("unexpected modulus {other:?}"),
        }
        let report = check_claim(&claim, 1, 60, false, false).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn derive_family_rejects_wrong_operator() {
        let fr = by_name("franel_signed").unwrap();
        let wrong = by_name("delannoy").unwrap().known_operator.clone().unwrap();
        assert!(matches!(
            derive_family(&wrong, fr, &UniPoly::one()),
            Err(CongruenceError::NotAnAnnihilator(_))
        ));
    }

    #[test]
    fn known_facts_pass() {
        let records = known_fact_checks().unwrap();
        assert_eq!(records.len(), 2 * primes_in(5, 97).len());
        assert!(records.iter().all(|r| r.pass));
    }

    #[test]
    fn point_record_json_shape() {
        let rec = PointRecord {
            n: 17,
            lhs_mod: "0".to_string(),
            rhs_mod: "0".to_string(),
            pass: true,
        };
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            "{\"n\":17,\"lhs_mod\":\"0\",\"rhs_mod\":\"0\",\"pass\":true}"
        );
    }
}
