//! Recurrence operators `L = sum_{i=0}^{J} a_i(n) sigma^i`, their adjoints,
//! telescoping certificates, degree/degeneracy analysis and geometric
//! scaling.
//!
//! The adjoint acts on polynomials as `L*(p)(n) = sum a_i(n-i) p(n-i)`.
//! When `L` annihilates `F`, the product `L*(p)(n) F(n)` telescopes with the
//! certificate `u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) p(n-j)`:
//!
//! ```text
//! sum_{k=0}^{n-1} L*(p)(k) F(k)
//!     = sum_i u_i(0) F(i) - sum_i u_i(n) F(n+i).
//! ```

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{dispersion, integer_roots, poly_parse, PolyError, Rational, UniPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperatorError {
    #[error("operator must have a nonzero coefficient")]
    ZeroOperator,
    #[error("operation requires order J >= 1, operator has order 0")]
    OrderZero,
    #[error("shift-coprimality check is inapplicable: a_0 = 0")]
    TrailingCoefficientZero,
    #[error("cannot scale an operator by zero")]
    ZeroScale,
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("bad operator file: {0}")]
    BadFile(String),
}

/// `L = a_0 + a_1 sigma + ... + a_J sigma^J` with `a_J != 0`.
///
/// Operators are normalized on construction: coefficients are scaled to
/// coprime integer polynomials jointly, and the leading coefficient of
/// `a_J` is made positive.  Guessed and derived operators therefore compare
/// equal to quoted ones by plain `==`.
#[derive(Clone, PartialEq, Eq)]
pub struct RecOperator {
    var: String,
    coeffs: Vec<UniPoly>,
}

/// Degree analysis of an operator.
///
/// `b_k(n) = sum_{j=k}^{J} C(j,k) a_{J-j}(n+j-J)` and
/// `d = max_k (deg b_k - k)`.  The indicial polynomial
/// `f(s) = sum_k [n^{d+k}](b_k) s(s-1)...(s-k+1)` is nonzero; its
/// nonnegative integer roots form `r_set`, and the operator is degenerated
/// exactly when `r_set` is nonempty.  For every nonzero `p` of degree `s`,
/// `deg L*(p) = d + s` unless `s` lies in `r_set`, in which case the degree
/// drops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub b: Vec<UniPoly>,
    pub d: i64,
    pub f_poly: UniPoly,
    pub r_set: BTreeSet<u64>,
    pub degenerated: bool,
}

/// Telescoping certificate `u_0..u_{J-1}` for a fixed polynomial `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub u: Vec<UniPoly>,
}

/// Outcome of the shift-coprimality hypothesis `gcd(a_0(n), a_J(n+i)) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeCheck {
    pub coprime: bool,
    /// Shifts `i >= 0` at which the gcd is nonconstant.
    pub violations: BTreeSet<u64>,
}

/// Wire format: `{"var": "n", "coeffs": ["(n+1)^3", ...]}`, index = power of
/// sigma, coefficients in expression syntax.
#[derive(Serialize, Deserialize)]
struct OperatorWire {
    var: String,
    coeffs: Vec<String>,
}

impl RecOperator {
    /// Build from `a_0..a_J`, trimming trailing zero coefficients and
    /// normalizing.  `a_0 = 0` is allowed for storage; analysis operations
    /// that need it reject it individually.
    pub fn new(var: &str, mut coeffs: Vec<UniPoly>) -> Result<Self, OperatorError> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(OperatorError::ZeroOperator);
        }
        let mut op = RecOperator {
            var: var.to_string(),
            coeffs,
        };
        op.normalize();
        Ok(op)
    }

    /// Joint integer-primitive scaling plus a positive leading coefficient
    /// on `a_J`.
    fn normalize(&mut self) {
        let mut den_lcm = BigInt::one();
        for p in &self.coeffs {
            for c in p.coeffs() {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let mut num_gcd = BigInt::zero();
        for p in &self.coeffs {
            for c in p.coeffs() {
                num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
            }
        }
        let mut t = Rational::new(den_lcm, num_gcd);
        if self.coeffs.last().unwrap().leading_coeff().is_negative() {
            t = -t;
        }
        for p in &mut self.coeffs {
            *p = p.scale(&t);
        }
    }

    /// Order `J`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// `a_i`, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// `L*(p)(n) = sum_{i=0}^{J} a_i(n-i) p(n-i)`, expanded.
    pub fn adjoint_apply(&self, p: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            let sh = -(i as i64);
            out = out.add(&a.shift(sh).mul(&p.shift(sh)));
        }
        out
    }

    /// Certificate polynomials `u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) p(n-j)`
    /// for `i = 0..J-1`.
    pub fn certificate(&self, p: &UniPoly) -> Result<Certificate, OperatorError> {
        let j_ord = self.order();
        if j_ord == 0 {
            return Err(OperatorError::OrderZero);
        }
        let mut u = Vec::with_capacity(j_ord);
        for i in 0..j_ord {
            let mut ui = UniPoly::zero();
            for j in 1..=(j_ord - i) {
                let sh = -(j as i64);
                ui = ui.add(&self.coeffs[i + j].shift(sh).mul(&p.shift(sh)));
            }
            u.push(ui);
        }
        Ok(Certificate { u })
    }

    /// The `b_k`/`d`/`f(s)`/`R_L` analysis.
    pub fn degree_data(&self) -> Result<DegreeData, OperatorError> {
        let j_ord = self.order();
        if j_ord == 0 {
            return Err(OperatorError::OrderZero);
        }
        let mut b = Vec::with_capacity(j_ord + 1);
        for k in 0..=j_ord {
            let mut bk = UniPoly::zero();
            for j in k..=j_ord {
                let bin = Rational::from_integer(binom_usize(j, k));
                let term = self.coeffs[j_ord - j].shift(j as i64 - j_ord as i64);
                bk = bk.add(&term.scale(&bin));
            }
            b.push(bk);
        }
        let d = b
            .iter()
            .enumerate()
            .filter_map(|(k, bk)| bk.degree().finite().map(|deg| deg - k as i64))
            .max()
            .ok_or(OperatorError::ZeroOperator)?;
        // f(s) = sum_k [n^{d+k}](b_k) * s(s-1)...(s-k+1)
        let mut f_poly = UniPoly::zero();
        for (k, bk) in b.iter().enumerate() {
            let c = bk.coeff(d + k as i64);
            if c.is_zero() {
                continue;
            }
            f_poly = f_poly.add(&falling_factorial(k).scale(&c));
        }
        debug_assert!(!f_poly.is_zero(), "the indicial polynomial is nonzero");
        let mut r_set = BTreeSet::new();
        for root in integer_roots(&f_poly)? {
            if !root.is_negative() {
                r_set.insert(root.to_string().parse::<u64>().unwrap());
            }
        }
        let degenerated = !r_set.is_empty();
        Ok(DegreeData {
            b,
            d,
            f_poly,
            r_set,
            degenerated,
        })
    }

    /// Check `gcd(a_0(n), a_J(n+i)) = 1` for all `i >= 0`; the witness set
    /// holds the violating shifts.
    pub fn shift_coprime_check(&self) -> Result<CoprimeCheck, OperatorError> {
        if self.order() == 0 {
            return Err(OperatorError::OrderZero);
        }
        if self.coeffs[0].is_zero() {
            return Err(OperatorError::TrailingCoefficientZero);
        }
        let violations = dispersion(&self.coeffs[0], self.coeffs.last().unwrap())?;
        Ok(CoprimeCheck {
            coprime: violations.is_empty(),
            violations,
        })
    }

    /// Annihilator of `A(n) r^n` given that `self` annihilates `A(n)`:
    /// `a_i <- a_i * den(r)^i * num(r)^{J-i}`, then content-normalized.
    pub fn scale(&self, r: &Rational) -> Result<RecOperator, OperatorError> {
        if r.is_zero() {
            return Err(OperatorError::ZeroScale);
        }
        let j_ord = self.order() as i64;
        let num = Rational::from_integer(r.numer().clone());
        let den = Rational::from_integer(r.denom().clone());
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let factor = crate::poly::rat_pow(&den, i as i64)
                    * crate::poly::rat_pow(&num, j_ord - i as i64);
                a.scale(&factor)
            })
            .collect();
        RecOperator::new(&self.var, coeffs)
    }

    /// Apply `L` to a window of sequence values: `sum_i a_i(n) f[n+i]`,
    /// with `f` indexed from 0.
    pub fn apply_at(&self, f: &[Rational], n: usize) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            acc += a.eval_int(n as i64) * &f[n + i];
        }
        acc
    }

    pub fn to_json(&self) -> String {
        let wire = OperatorWire {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.to_text(&self.var)).collect(),
        };
        serde_json::to_string(&wire).expect("operator serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, OperatorError> {
        let wire: OperatorWire =
            serde_json::from_str(text).map_err(|e| OperatorError::BadFile(e.to_string()))?;
        Self::parse_coeffs(&wire.var, &wire.coeffs)
    }

    /// Build from coefficient expressions in the wire syntax.
    pub fn parse_coeffs<S: AsRef<str>>(var: &str, coeffs: &[S]) -> Result<Self, OperatorError> {
        let coeffs = coeffs
            .iter()
            .map(|c| poly_parse(c.as_ref(), var))
            .collect::<Result<Vec<_>, _>>()?;
        RecOperator::new(var, coeffs)
    }
}

impl fmt::Debug for RecOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i < self.coeffs.len() - 1 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c.to_text(&self.var))?;
            if i > 0 {
                write!(f, "*sigma^{i}")?;
            }
        }
        Ok(())
    }
}

fn binom_usize(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    out
}

/// `s(s-1)...(s-k+1)` as a polynomial in `s`; the empty product is 1.
fn falling_factorial(k: usize) -> UniPoly {
    let mut out = UniPoly::one();
    for t in 0..k {
        out = out.mul(&UniPoly::new(vec![
            Rational::from_integer(BigInt::from(-(t as i64))),
            Rational::one(),
        ]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn pn(text: &str) -> UniPoly {
        poly_parse(text, "n").unwrap()
    }

    fn pk(text: &str) -> UniPoly {
        poly_parse(text, "k").unwrap()
    }

    fn domb_m32() -> RecOperator {
        RecOperator::new(
            "n",
            vec![
                pn("(n+1)^3"),
                pn("(2*n+3)*(5*n^2+15*n+12)"),
                pn("16*(n+2)^3"),
            ],
        )
        .unwrap()
    }

    fn franel() -> RecOperator {
        RecOperator::new(
            "k",
            vec![pk("-8*(k+1)^2"), pk("7*k^2+21*k+16"), pk("(k+2)^2")],
        )
        .unwrap()
    }

    fn delannoy() -> RecOperator {
        RecOperator::new("k", vec![pk("k+1"), pk("-6*k-9"), pk("k+2")]).unwrap()
    }

    #[test]
    fn adjoint_golden_values() {
        let q = domb_m32().adjoint_apply(&pn("n"));
        assert_eq!(q, pn("27*n^4-24*n^3-3*n^2-6*n-2"));

        let q = franel().adjoint_apply(&UniPoly::one());
        assert_eq!(q, pk("-9*k-6"));

        assert!(domb_m32().adjoint_apply(&UniPoly::zero()).is_zero());

        let q = delannoy().adjoint_apply(&UniPoly::one());
        assert_eq!(q, pk("-4*k-2"));
    }

    #[test]
    fn certificate_golden_values() {
        // Franel with p = k.
        let cert = franel().certificate(&pk("k")).unwrap();
        let u0 = pn("n^2").mul(&pn("n-2")).add(&pn("(7*n^2+7*n+2)*(n-1)"));
        let u1 = pn("(n+1)^2*(n-1)");
        assert_eq!(cert.u, vec![u0, u1]);

        // sigma - 1 with p = 1 telescopes with u_0 = 1.
        let delta = RecOperator::new("n", vec![pn("-1"), pn("1")]).unwrap();
        let cert = delta.certificate(&UniPoly::one()).unwrap();
        assert_eq!(cert.u, vec![UniPoly::one()]);

        // Domb(-32) with p = 1; u_1(n) = a_2(n-1) = 16(n+1)^3.
        let cert = domb_m32().certificate(&UniPoly::one()).unwrap();
        let u0 = pn("(2*n+1)*(5*n^2+5*n+2)+16*n^3");
        let u1 = pn("16*(n+1)^3");
        assert_eq!(cert.u, vec![u0, u1]);
    }

    #[test]
    fn degree_data_franel() {
        let dd = franel().degree_data().unwrap();
        assert_eq!(dd.b[0], pn("-9*n-6"));
        assert_eq!(dd.b[1], pn("-9*n^2-25*n-14"));
        assert_eq!(dd.b[2], pn("-8*(n+1)^2"));
        assert_eq!(dd.d, 1);
        assert_eq!(dd.f_poly, poly_parse("-9*(s+1)", "s").unwrap());
        assert!(dd.r_set.is_empty());
        assert!(!dd.degenerated);
    }

    #[test]
    fn degree_data_shift_minus_one() {
        let delta = RecOperator::new("n", vec![pn("-1"), pn("1")]).unwrap();
        let dd = delta.degree_data().unwrap();
        assert!(dd.b[0].is_zero());
        assert_eq!(dd.b[1], pn("-1"));
        assert_eq!(dd.d, -1);
        assert_eq!(dd.f_poly, poly_parse("-s", "s").unwrap());
        assert_eq!(dd.r_set, [0u64].into_iter().collect());
        assert!(dd.degenerated);
    }

    #[test]
    fn shift_coprime_examples() {
        assert!(domb_m32().shift_coprime_check().unwrap().coprime);
        assert!(franel().shift_coprime_check().unwrap().coprime);

        let bad = RecOperator::new("n", vec![pn("n"), pn("1"), pn("n-2")]).unwrap();
        let check = bad.shift_coprime_check().unwrap();
        assert!(!check.coprime);
        assert_eq!(check.violations, [2u64].into_iter().collect());

        let degenerate_a0 = RecOperator::new("n", vec![UniPoly::zero(), pn("1")]).unwrap();
        assert_eq!(
            degenerate_a0.shift_coprime_check(),
            Err(OperatorError::TrailingCoefficientZero)
        );
    }

    #[test]
    fn scale_reproduces_quoted_operators() {
        // Raw annihilator of Domb(n): the m-family at m = 1.
        let raw = RecOperator::new(
            "n",
            vec![
                pn("64*(n+1)^3"),
                pn("-2*(2*n+3)*(5*n^2+15*n+12)"),
                pn("(n+2)^3"),
            ],
        )
        .unwrap();
        assert_eq!(raw.scale(&rat(-1, 32)).unwrap(), domb_m32());

        // Scaling by 1 only removes content.
        assert_eq!(raw.scale(&rat(1, 1)).unwrap(), raw);

        // Raw annihilator of the order-4 Franel numbers, scaled to m = 5776.
        let raw4 = RecOperator::new(
            "n",
            vec![
                pn("-4*(n+1)*(4*n+3)*(4*n+5)"),
                pn("-2*(2*n+3)*(3*n^2+9*n+7)"),
                pn("(n+2)^3"),
            ],
        )
        .unwrap();
        let scaled = raw4.scale(&rat(1, 5776)).unwrap();
        let expect = RecOperator::new(
            "n",
            vec![
                pn("-(n+1)*(4*n+3)*(4*n+5)"),
                pn("-2888*(2*n+3)*(3*n^2+9*n+7)"),
                pn("8340544*(n+2)^3"),
            ],
        )
        .unwrap();
        assert_eq!(scaled, expect);

        assert_eq!(raw.scale(&rat(0, 1)), Err(OperatorError::ZeroScale));
    }

    #[test]
    fn construction_normalizes_and_validates() {
        // Content and sign are normalized away.
        let a = RecOperator::new("n", vec![pn("-2*n"), pn("-4"), pn("-6*n^2")]).unwrap();
        let b = RecOperator::new("n", vec![pn("n"), pn("2"), pn("3*n^2")]).unwrap();
        assert_eq!(a, b);

        // Trailing zeros trim; an all-zero operator is rejected.
        let t = RecOperator::new("n", vec![pn("n"), UniPoly::zero()]).unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(
            RecOperator::new("n", vec![UniPoly::zero()]),
            Err(OperatorError::ZeroOperator)
        );
        assert_eq!(t.degree_data(), Err(OperatorError::OrderZero));
    }

    #[test]
    fn json_round_trip() {
        let op = domb_m32();
        let json = op.to_json();
        let back = RecOperator::from_json(&json).unwrap();
        assert_eq!(op, back);
        assert!(RecOperator::from_json("{\"var\": \"n\"}").is_err());
        assert!(RecOperator::from_json("{\"var\": \"n\", \"coeffs\": [\"m+1\"]}").is_err());
    }
}
