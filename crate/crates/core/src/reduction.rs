//! The polynomial reduction process and telescoped closed forms.
//!
//! For a nondegenerated operator the adjoint images `q_s = L*(n^s)` have the
//! pairwise distinct degrees `d + s`, so any polynomial `Q` can be written by
//! the division algorithm as
//!
//! ```text
//! Q = sum_s c_s q_s + residual,       deg residual < d.
//! ```
//!
//! For a degenerated operator the degrees `d + s` with `s` in `R_L` are
//! missing from the span; those monomials are kept verbatim instead.
//! Multiplying the decomposition by a sequence annihilated by `L` and
//! summing telescopes every `q_s F` term away, which is what turns the
//! reduction into pi-series and congruence machinery.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::operator::{OperatorError, RecOperator};
use crate::poly::{Rational, UniPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("operator error: {0}")]
    Operator(#[from] OperatorError),
    #[error("need at least {needed} initial values, got {got}")]
    InsufficientInitialValues { needed: usize, got: usize },
    #[error("window normalization is implemented for order 2 only, operator has order {0}")]
    UnsupportedOrder(usize),
    #[error("window normalization produced a non-polynomial coefficient")]
    NonPolynomialBoundary,
    #[error("closed form evaluated outside its validity range (n >= {valid_from})")]
    OutsideValidity { valid_from: i64 },
}

/// Result of reducing `Q` against `{L*(n^s)}`.
///
/// Reconstruction identity:
/// `Q = sum cs[s] L*(n^s) + sum kept[s] n^(d+s) + residual`, exactly.
/// Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub cs: BTreeMap<usize, Rational>,
    pub kept: BTreeMap<usize, Rational>,
    pub residual: UniPoly,
}

/// JSON wire form: `{"cs": {"1": "1/3"}, "kept": {}, "residual": "2*n+2/3"}`.
#[derive(Serialize, Deserialize)]
struct ReductionWire {
    cs: BTreeMap<String, String>,
    kept: BTreeMap<String, String>,
    residual: String,
}

impl ReductionResult {
    /// Rebuild `Q` from the decomposition; used by tests and callers that
    /// want an independent consistency check.
    pub fn reconstruct(&self, op: &RecOperator, d: i64) -> UniPoly {
        let mut out = self.residual.clone();
        for (s, c) in &self.cs {
            let qs = op.adjoint_apply(&UniPoly::monomial(num_traits::One::one(), *s));
            out = out.add(&qs.scale(c));
        }
        for (s, c) in &self.kept {
            let k = d + *s as i64;
            debug_assert!(k >= 0);
            out = out.add(&UniPoly::monomial(c.clone(), k as usize));
        }
        out
    }

    pub fn to_json(&self, var: &str) -> String {
        let wire = ReductionWire {
            cs: self
                .cs
                .iter()
                .map(|(s, c)| (s.to_string(), c.to_string()))
                .collect(),
            kept: self
                .kept
                .iter()
                .map(|(s, c)| (s.to_string(), c.to_string()))
                .collect(),
            residual: self.residual.to_text(var),
        };
        serde_json::to_string(&wire).expect("reduction serialization cannot fail")
    }
}

/// Polynomial reduction of `Q` with respect to `L`.
///
/// Works top-down by leading-coefficient elimination.  For `s` outside
/// `R_L` the eliminator is `q_s = L*(n^s)` of degree exactly `d + s`; for
/// `s` in `R_L` the monomial `n^(d+s)` is moved to `kept`.  The residual
/// has degree below `d` and is zero whenever `d <= 0`.
pub fn reduce(op: &RecOperator, q: &UniPoly) -> Result<ReductionResult, ReductionError> {
    let dd = op.degree_data()?;
    let d = dd.d;
    let mut cs = BTreeMap::new();
    let mut kept = BTreeMap::new();
    let mut rem = q.clone();
    while let Some(deg) = rem.degree().finite() {
        if deg < d {
            break;
        }
        let s = (deg - d) as usize;
        let lead = rem.leading_coeff();
        if dd.r_set.contains(&(s as u64)) {
            kept.insert(s, lead.clone());
            rem = rem.sub(&UniPoly::monomial(lead, deg as usize));
        } else {
            let qs = op.adjoint_apply(&UniPoly::monomial(num_traits::One::one(), s));
            debug_assert_eq!(
                qs.degree().finite(),
                Some(deg),
                "degree lemma: deg L*(n^s) = d + s off R_L"
            );
            let c = lead / qs.leading_coeff();
            rem = rem.sub(&qs.scale(&c));
            cs.insert(s, c);
        }
        debug_assert!(rem.degree() < q.degree().max(crate::poly::Degree::Finite(deg)));
    }
    Ok(ReductionResult {
        cs,
        kept,
        residual: rem,
    })
}

/// A telescoped partial-sum identity
///
/// ```text
/// sum_{k=0}^{n-1} weight(k) F(k) = constant + sum_j coeff_j(n) F(n + offset_j)
/// ```
///
/// valid for integer `n >= valid_from`.  Fresh from [`telescoped_sum`] the
/// boundary uses offsets `0..J-1` with coefficients `-u_i(n)`; after
/// [`normalize_window`] it uses offsets `-1, 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumClosedForm {
    pub weight: UniPoly,
    pub constant: Rational,
    /// `(offset, coefficient polynomial in n)` pairs, sorted by offset.
    pub boundary: Vec<(i64, UniPoly)>,
    pub valid_from: i64,
}

impl SumClosedForm {
    /// Evaluate the right-hand side at `n` against concrete sequence values
    /// `f[0..]`.
    pub fn eval_rhs(&self, f: &[Rational], n: i64) -> Result<Rational, ReductionError> {
        if n < self.valid_from {
            return Err(ReductionError::OutsideValidity {
                valid_from: self.valid_from,
            });
        }
        let mut acc = self.constant.clone();
        for (offset, coeff) in &self.boundary {
            let idx = n + offset;
            debug_assert!(idx >= 0);
            acc += coeff.eval_int(n) * &f[idx as usize];
        }
        Ok(acc)
    }

    /// Evaluate the left-hand side `sum_{k<n} weight(k) f[k]`.
    pub fn eval_lhs(&self, f: &[Rational], n: i64) -> Rational {
        let mut acc = Rational::zero();
        for k in 0..n {
            acc += self.weight.eval_int(k) * &f[k as usize];
        }
        acc
    }
}

/// Telescoped form of `sum_{k=0}^{n-1} L*(p)(k) F(k)`.
///
/// The constant is `C_0 = sum_i u_i(0) F(i)`, evaluated from the supplied
/// initial values `F(0..J-1)`; the boundary is `-sum_i u_i(n) F(n+i)`.
pub fn telescoped_sum(
    op: &RecOperator,
    p: &UniPoly,
    initial: &[Rational],
) -> Result<SumClosedForm, ReductionError> {
    let j_ord = op.order();
    if j_ord == 0 {
        return Err(OperatorError::OrderZero.into());
    }
    if initial.len() < j_ord {
        return Err(ReductionError::InsufficientInitialValues {
            needed: j_ord,
            got: initial.len(),
        });
    }
    let cert = op.certificate(p)?;
    let mut constant = Rational::zero();
    for (i, ui) in cert.u.iter().enumerate() {
        constant += ui.eval_int(0) * &initial[i];
    }
    let boundary = cert
        .u
        .iter()
        .enumerate()
        .map(|(i, ui)| (i as i64, ui.neg()))
        .collect();
    Ok(SumClosedForm {
        weight: op.adjoint_apply(p),
        constant,
        boundary,
        valid_from: 0,
    })
}

/// Rewrite the boundary of an order-2 closed form from `F(n), F(n+1)` into
/// `F(n-1), F(n)` by substituting `F(n+1)` from the recurrence at `n-1`:
///
/// ```text
/// a_2(n-1) F(n+1) = -a_0(n-1) F(n-1) - a_1(n-1) F(n).
/// ```
///
/// The divisions are performed as rational-function simplifications and the
/// results are required to be polynomials; a nonzero remainder is reported
/// as an error and the caller keeps the unnormalized identity.
pub fn normalize_window(
    form: &SumClosedForm,
    op: &RecOperator,
) -> Result<SumClosedForm, ReductionError> {
    if op.order() != 2 {
        return Err(ReductionError::UnsupportedOrder(op.order()));
    }
    let offsets: Vec<i64> = form.boundary.iter().map(|(o, _)| *o).collect();
    if offsets != [0, 1] {
        return Err(ReductionError::UnsupportedOrder(op.order()));
    }
    let c0 = &form.boundary[0].1; // coefficient of F(n)
    let c1 = &form.boundary[1].1; // coefficient of F(n+1)
    let a0_prev = op.coeff(0).shift(-1);
    let a1_prev = op.coeff(1).shift(-1);
    let a2_prev = op.coeff(2).shift(-1);
    // c1(n) F(n+1) = -(c1/a2(n-1)) (a0(n-1) F(n-1) + a1(n-1) F(n))
    let (ratio, rem) = c1
        .mul(&UniPoly::one())
        .divrem(&a2_prev)
        .map_err(OperatorError::from)?;
    if !rem.is_zero() {
        return Err(ReductionError::NonPolynomialBoundary);
    }
    let new_prev = ratio.mul(&a0_prev).neg();
    let new_curr = c0.sub(&ratio.mul(&a1_prev));
    Ok(SumClosedForm {
        weight: form.weight.clone(),
        constant: form.constant.clone(),
        boundary: vec![(-1, new_prev), (0, new_curr)],
        valid_from: form.valid_from.max(1),
    })
}
