//! The sequence catalog, exact term generation and recurrence guessing.
//!
//! Every catalog entry carries a structured binomial-sum term rule
//! `A(n) = sum_{k=0}^{n} prod_j C(a n + b k + c, d n + e k + f)^pow`,
//! an optional `(-1)^n` sign factor and an optional geometric factor `r`,
//! so the stored value is `F(n) = A(n) (+-1)^n r^n`.  Term rules are the
//! oracle; recurrence-based generation must agree with them, and
//! [`guess_recurrence`] recovers annihilators from raw terms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::linalg::{nullspace, QMatrix};
use crate::operator::{OperatorError, RecOperator};
use crate::poly::{rat_bits, rat_pow, Rational, UniPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("binomial coefficient requires n >= 0, got {0}")]
    NegativeBinomial(i64),
    #[error("unknown catalog sequence {0:?}")]
    UnknownSequence(String),
    #[error("recurrence cannot advance: leading coefficient vanishes at n = {0}")]
    LeadingCoefficientZero(usize),
    #[error("need {needed} initial values, got {got}")]
    BadInitialLength { needed: usize, got: usize },
    #[error("recurrence guessing needs at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("operator error: {0}")]
    Operator(#[from] OperatorError),
}

/// Exact binomial coefficient by the multiplicative formula.
///
/// Returns 0 for `k < 0` or `k > n`; errors for `n < 0`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt, SequenceError> {
    if n < 0 {
        return Err(SequenceError::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Ok(out)
}

/// One factor `C(a n + b k + c, d n + e k + f)^pow` of a term rule.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct BinomialFactor {
    pub top: [i64; 3],
    pub bottom: [i64; 3],
    pub pow: u32,
}

impl BinomialFactor {
    fn eval(&self, n: i64, k: i64) -> Result<BigInt, SequenceError> {
        let top = self.top[0] * n + self.top[1] * k + self.top[2];
        let bot = self.bottom[0] * n + self.bottom[1] * k + self.bottom[2];
        let b = binomial(top, bot)?;
        Ok(num_traits::Pow::pow(b, self.pow))
    }
}

/// A catalog sequence: binomial-sum term rule plus optional sign, geometric
/// factor and known annihilator.
#[derive(Clone, Debug)]
pub struct SequenceDef {
    pub name: String,
    /// Base name used in human renderings, e.g. `Domb`.
    pub display: String,
    pub var: String,
    pub factors: Vec<BinomialFactor>,
    pub sign: bool,
    pub geom: Rational,
    pub known_operator: Option<RecOperator>,
}

impl SequenceDef {
    /// The underlying integer sequence value `A(n)` (no sign, no geometric
    /// factor).
    pub fn base_term(&self, n: i64) -> Result<BigInt, SequenceError> {
        let mut acc = BigInt::zero();
        for k in 0..=n {
            let mut prod = BigInt::one();
            for f in &self.factors {
                prod *= f.eval(n, k)?;
                if prod.is_zero() {
                    break;
                }
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// Weighted variant `F(n) = self(n) * r^n`; the known operator, when
    /// present, is rescaled along.
    pub fn with_geom(&self, r: &Rational) -> Result<SequenceDef, SequenceError> {
        let mut out = self.clone();
        out.geom = &self.geom * r;
        if let Some(op) = &self.known_operator {
            out.known_operator = Some(op.scale(r)?);
        }
        Ok(out)
    }

    /// Human rendering of one term of a series in this sequence, e.g.
    /// `Domb(n)/(-32)^n` or `(-1)^k*franel(k)`.
    pub fn render_term(&self) -> String {
        let mut out = format!("{}({})", self.display, self.var);
        if self.sign {
            out = format!("(-1)^{}*{}", self.var, out);
        }
        if !self.geom.is_one() {
            let recip = self.geom.recip();
            if recip.denom().is_one() {
                // F(n) = A(n)/m^n, parenthesizing a negative m
                let m = recip.numer();
                if m.is_negative() {
                    out = format!("{}/({})^{}", out, m, self.var);
                } else {
                    out = format!("{}/{}^{}", out, m, self.var);
                }
            } else {
                out = format!("{}*({})^{}", out, self.geom, self.var);
            }
        }
        out
    }
}

/// Exact values `F(0..=n_max)` from the term rule, including sign and
/// geometric factors.  Tables are memoized per definition within a run.
pub fn seq_terms(def: &SequenceDef, n_max: usize) -> Result<Vec<Rational>, SequenceError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Vec<Rational>>>>> = OnceLock::new();
    let key = format!("{}|{:?}|{}|{}", def.name, def.factors, def.sign, def.geom);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(hit) = guard.get(&key) {
            if hit.len() > n_max {
                return Ok(hit[..=n_max].to_vec());
            }
        }
    }
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max as i64 {
        let base = Rational::from_integer(def.base_term(n)?);
        let mut v = base * rat_pow(&def.geom, n);
        if def.sign && n % 2 == 1 {
            v = -v;
        }
        values.push(v);
    }
    if !def.sign && def.geom.is_one() {
        debug_assert!(values.iter().all(|v| v.denom().is_one()));
    }
    let arc = Arc::new(values);
    cache.lock().unwrap().insert(key, arc.clone());
    Ok(arc.as_ref().clone())
}

/// Integer values of a sequence whose terms are integral (sign factor
/// allowed, geometric factor must keep denominators trivial).
pub fn seq_terms_int(def: &SequenceDef, n_max: usize) -> Result<Vec<BigInt>, SequenceError> {
    let terms = seq_terms(def, n_max)?;
    debug_assert!(terms.iter().all(|v| v.denom().is_one()));
    Ok(terms.into_iter().map(|v| v.numer().clone()).collect())
}

/// Extend `initial` (length exactly `J`) to `F(0..=n_max)` by the
/// recurrence `sum a_i(n) F(n+i) = 0`, dividing exactly by `a_J(n)`.
pub fn seq_terms_rec(
    op: &RecOperator,
    initial: &[Rational],
    n_max: usize,
) -> Result<Vec<Rational>, SequenceError> {
    let j_ord = op.order();
    if initial.len() != j_ord {
        return Err(SequenceError::BadInitialLength {
            needed: j_ord,
            got: initial.len(),
        });
    }
    let mut f: Vec<Rational> = initial.to_vec();
    while f.len() <= n_max {
        let n = f.len() - j_ord;
        let lead = op.coeff(j_ord).eval_int(n as i64);
        if lead.is_zero() {
            return Err(SequenceError::LeadingCoefficientZero(n));
        }
        let mut acc = Rational::zero();
        for i in 0..j_ord {
            acc += op.coeff(i).eval_int(n as i64) * &f[n + i];
        }
        f.push(-acc / lead);
    }
    f.truncate(n_max + 1);
    Ok(f)
}

/// Guess an annihilator `sum_{i=0}^{J} a_i(n) t_{n+i} = 0` with
/// `deg a_i <= D` from raw terms.
///
/// The homogeneous system is fitted on all but the last 8 windows and every
/// candidate from the exact nullspace is validated on the full term list;
/// spurious fits are rejected there.  Among surviving candidates the one
/// with the smallest total coefficient bit size is returned, normalized.
pub fn guess_recurrence(
    terms: &[Rational],
    j_ord: usize,
    deg: usize,
) -> Result<Option<RecOperator>, SequenceError> {
    guess_recurrence_var(terms, j_ord, deg, "n")
}

/// [`guess_recurrence`] with an explicit variable name for the result.
pub fn guess_recurrence_var(
    terms: &[Rational],
    j_ord: usize,
    deg: usize,
    var: &str,
) -> Result<Option<RecOperator>, SequenceError> {
    let unknowns = (j_ord + 1) * (deg + 1);
    let needed = unknowns + j_ord + 8;
    if terms.len() < needed {
        return Err(SequenceError::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    let fit_rows = terms.len() - j_ord - 8;
    let mut rows = Vec::with_capacity(fit_rows);
    for n in 0..fit_rows {
        let mut row = Vec::with_capacity(unknowns);
        for i in 0..=j_ord {
            let mut pw = Rational::one();
            for _e in 0..=deg {
                row.push(&pw * &terms[n + i]);
                pw *= Rational::from_integer(BigInt::from(n));
            }
        }
        rows.push(row);
    }
    let basis = nullspace(&QMatrix::from_rows(rows));

    let mut best: Option<(u64, RecOperator)> = None;
    for v in basis {
        let coeffs: Vec<UniPoly> = (0..=j_ord)
            .map(|i| UniPoly::new(v[i * (deg + 1)..(i + 1) * (deg + 1)].to_vec()))
            .collect();
        let Ok(op) = RecOperator::new(var, coeffs) else {
            continue;
        };
        if !validates(&op, terms) {
            continue;
        }
        let bits: u64 = op
            .coeffs()
            .iter()
            .flat_map(|p| p.coeffs().iter().map(rat_bits))
            .sum();
        if best.as_ref().is_none_or(|(b, _)| bits < *b) {
            best = Some((bits, op));
        }
    }
    Ok(best.map(|(_, op)| op))
}

fn validates(op: &RecOperator, terms: &[Rational]) -> bool {
    let j_ord = op.order();
    if terms.len() <= j_ord {
        return false;
    }
    (0..terms.len() - j_ord).all(|n| op.apply_at(terms, n).is_zero())
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct CatalogWire {
    sequences: Vec<SeqWire>,
}

#[derive(Deserialize)]
struct SeqWire {
    name: String,
    display: String,
    var: String,
    factors: Vec<BinomialFactor>,
    sign: bool,
    operator: Option<OpWire>,
}

#[derive(Deserialize)]
struct OpWire {
    var: String,
    coeffs: Vec<String>,
}

/// The built-in sequence catalog, loaded once from the shipped data file.
pub fn catalog() -> &'static [SequenceDef] {
    static CATALOG: OnceLock<Vec<SequenceDef>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let wire: CatalogWire = serde_json::from_str(include_str!("../data/catalog.json"))
            .expect("shipped catalog parses");
        wire.sequences
            .into_iter()
            .map(|s| SequenceDef {
                name: s.name,
                display: s.display,
                var: s.var,
                factors: s.factors,
                sign: s.sign,
                geom: Rational::one(),
                known_operator: s.operator.map(|o| {
                    RecOperator::parse_coeffs(&o.var, &o.coeffs)
                        .expect("shipped catalog operators parse")
                }),
            })
            .collect()
    })
}

/// Catalog lookup by name.
pub fn by_name(name: &str) -> Result<&'static SequenceDef, SequenceError> {
    catalog()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| SequenceError::UnknownSequence(name.to_string()))
}
