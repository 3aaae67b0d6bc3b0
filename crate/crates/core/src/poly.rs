//! Exact rational scalars, dense univariate polynomials and the expression
//! parser used by every other module.
//!
//! Polynomials are dense vectors of [`Rational`] coefficients, index `i`
//! holding the coefficient of `n^i`, with the invariant that the last stored
//! coefficient is nonzero (the zero polynomial stores nothing).  The degree
//! of the zero polynomial is a distinguished [`Degree::MinusInfinity`] value
//! ordered below every integer, so degree bookkeeping in the reduction
//! process needs no special cases.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar: arbitrary-precision, always reduced, denominator
/// positive.  `num_rational::BigRational` maintains exactly these invariants.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from `p` or `p/q` text with canonical sign on the numerator.
pub fn rat_parse(text: &str) -> Result<Rational, PolyError> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| PolyError::BadRational(text.to_string()))
}

/// Total bit size of numerator and denominator, used as a pivoting and
/// tie-breaking metric in exact linear algebra.
pub fn rat_bits(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// `r^k` for signed integer exponents (`r != 0` when `k < 0`).
pub fn rat_pow(r: &Rational, k: i64) -> Rational {
    let mut out = Rational::one();
    let base = if k < 0 { r.recip() } else { r.clone() };
    for _ in 0..k.unsigned_abs() {
        out *= &base;
    }
    out
}

/// Degree of a polynomial; the zero polynomial has degree
/// [`Degree::MinusInfinity`], ordered below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(i64),
}

impl Degree {
    /// Finite value, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Errors from polynomial operations and the expression parser.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("not a rational literal: {0:?}")]
    BadRational(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("integer roots of the zero polynomial are undefined")]
    RootsOfZero,
    #[error("dispersion requires both polynomials nonzero")]
    DispersionOfZero,
}

/// Dense univariate polynomial over the rationals.
///
/// The variable is not stored; parsing and printing take the variable name
/// as a parameter, so a polynomial in `n` and one in `k` are the same value.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// Build from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable itself, `n`.
    pub fn var() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    /// `c * n^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// Convenience: polynomial with small integer coefficients, low to high.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::MinusInfinity
        } else {
            Degree::Finite(self.coeffs.len() as i64 - 1)
        }
    }

    /// Degree as `usize`; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `n^k`; zero outside the stored range.  Accepts a signed
    /// index so callers may ask for the coefficient of a negative power,
    /// which is always zero.
    pub fn coeff(&self, k: i64) -> Rational {
        if k < 0 {
            return Rational::zero();
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k as i64) + other.coeff(k as i64));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `p(n + a)`, expanded; Horner in the shifted variable.
    pub fn shift(&self, a: i64) -> UniPoly {
        let x_plus_a = UniPoly::new(vec![rat(a, 1), Rational::one()]);
        let mut out = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul(&x_plus_a);
            out = out.add(&UniPoly::constant(c.clone()));
        }
        out
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut out = Rational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * x + c;
        }
        out
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x, 1))
    }

    /// Quotient and remainder of division by `d`.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                let delta = &q * dc;
                rem[idx] -= delta;
            }
            quot[k - dd] = q;
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Division that must be exact; the remainder is asserted zero.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly, PolyError> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(q)
    }

    /// Scale to the monic representative (leading coefficient 1).
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Smallest positive rational `t` such that `t * self` has coprime
    /// integer coefficients; `(t * self, t)`.  The sign of the leading
    /// coefficient is preserved.
    pub fn primitive_integer(&self) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (UniPoly::zero(), Rational::one());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let t = Rational::new(den_lcm, num_gcd);
        (self.scale(&t), t)
    }

    /// True if every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Parseable rendering, e.g. `9*n^4-8*n^3-n^2` or `2*n+2/3`.
    pub fn to_text(&self, var: &str) -> String {
        self.render(var, true)
    }

    /// Compact human rendering without explicit `*`, e.g. `9n^4-8n^3-n^2`.
    pub fn to_compact(&self, var: &str) -> String {
        self.render(var, false)
    }

    fn render(&self, var: &str, machine: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let star = if machine { "*" } else { "" };
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let coeff_txt = if mag.is_one() && k > 0 {
                String::new()
            } else if machine || mag.denom().is_one() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            out.push_str(&coeff_txt);
            if k > 0 {
                if !coeff_txt.is_empty() {
                    out.push_str(star);
                }
                out.push_str(var);
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_text("n"))
    }
}

// ---------------------------------------------------------------------------
// gcd, integer roots, dispersion
// ---------------------------------------------------------------------------

/// Monic greatest common divisor; errors when both arguments are zero.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::GcdOfZeros);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        // Monic remainders keep the coefficient growth in check.
        let (_, r) = a.divrem(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

/// All integer roots of a nonzero polynomial, multiplicity ignored.
///
/// Denominators are cleared, the power of `n` dividing the polynomial is
/// stripped (contributing the root 0), and the remaining candidates are the
/// divisors of the trailing coefficient, scanned up to a root bound.
pub fn integer_roots(p: &UniPoly) -> Result<BTreeSet<BigInt>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::RootsOfZero);
    }
    let mut roots = BTreeSet::new();
    let (prim, _) = p.primitive_integer();
    let mut coeffs: Vec<BigInt> = prim.coeffs().iter().map(|c| c.numer().clone()).collect();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.insert(BigInt::zero());
        coeffs.drain(..low);
    }
    if coeffs.len() <= 1 {
        return Ok(roots);
    }
    let trailing = coeffs[0].magnitude().clone();
    let bound = root_bound(&coeffs);
    let eval = |x: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut cand = BigInt::one();
    while cand.magnitude() <= &bound {
        if (trailing.clone() % cand.magnitude()).is_zero() {
            if eval(&cand).is_zero() {
                roots.insert(cand.clone());
            }
            let neg = -&cand;
            if eval(&neg).is_zero() {
                roots.insert(neg);
            }
        }
        cand += 1;
    }
    Ok(roots)
}

/// Fujiwara-style bound on the magnitude of any root of an integer
/// polynomial: `2 * max_j |a_{m-j}/a_m|^{1/j}`, rounded up.
fn root_bound(coeffs: &[BigInt]) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let m = coeffs.len() - 1;
    let lead = coeffs[m].magnitude();
    let mut best = BigUint::one();
    for j in 1..=m {
        let a = coeffs[m - j].magnitude();
        if a.is_zero() {
            continue;
        }
        // ceil(|a / lead|) then integer j-th root, rounded up.
        let ratio = (a + lead - 1u32) / lead;
        let root = num_integer::Roots::nth_root(&ratio, j as u32);
        let root = if num_traits::Pow::pow(&root, j as u32) < ratio {
            root + 1u32
        } else {
            root
        };
        if root > best {
            best = root;
        }
    }
    best * 2u32 + 1u32
}

/// All `i >= 0` with `gcd(a(n), b(n+i))` nonconstant.
///
/// Candidates come from the integer roots of the resultant
/// `R(i) = Res_n(a(n), b(n+i))`, computed by fraction-free Bareiss
/// elimination of the Sylvester matrix over polynomials in `i`; each
/// candidate is confirmed by an actual gcd computation.
pub fn dispersion(a: &UniPoly, b: &UniPoly) -> Result<BTreeSet<u64>, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::DispersionOfZero);
    }
    let mut out = BTreeSet::new();
    let da = a.deg().unwrap();
    let db = b.deg().unwrap();
    if da == 0 || db == 0 {
        return Ok(out);
    }
    let res = resultant_in_shift(a, b);
    if res.is_zero() {
        // Cannot happen for nonzero a, b: R(i) has the finitely many roots
        // beta - alpha over the root pairs.  Guard anyway.
        return Err(PolyError::DispersionOfZero);
    }
    for root in integer_roots(&res)? {
        if root.is_negative() {
            continue;
        }
        let i: u64 = root.to_string().parse().unwrap_or(u64::MAX);
        let g = poly_gcd(a, &b.shift(i as i64))?;
        if g.deg().unwrap_or(0) >= 1 {
            out.insert(i);
        }
    }
    Ok(out)
}

/// `Res_n(a(n), b(n+i))` as a polynomial in `i`.
fn resultant_in_shift(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let da = a.deg().unwrap();
    let db = b.deg().unwrap();
    // Coefficients of b(n+i) as polynomials in i:
    // [n^t] b(n+i) = sum_{j>=t} b_j C(j,t) i^{j-t}.
    let mut b_shift: Vec<UniPoly> = vec![UniPoly::zero(); db + 1];
    for (t, slot) in b_shift.iter_mut().enumerate() {
        let mut cs = vec![Rational::zero(); db - t + 1];
        for j in t..=db {
            let bin = binom_small(j, t);
            cs[j - t] = b.coeff(j as i64) * Rational::from_integer(bin);
        }
        *slot = UniPoly::new(cs);
    }
    // Sylvester matrix: db rows of a's (constant) coefficients, then da rows
    // of b(n+i)'s coefficients, highest degree first.
    let n = da + db;
    let mut m = vec![vec![UniPoly::zero(); n]; n];
    for r in 0..db {
        for (k, _) in a.coeffs().iter().enumerate() {
            m[r][r + da - k] = UniPoly::constant(a.coeff(k as i64));
        }
    }
    for r in 0..da {
        for k in 0..=db {
            m[db + r][r + db - k] = b_shift[k].clone();
        }
    }
    bareiss_det(m)
}

fn binom_small(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    out
}

/// Fraction-free determinant over the polynomial ring; every division is
/// exact by the Bareiss identity.
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = 1i32;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

/// Parse polynomial text over the named variable.
///
/// Grammar: integers, rational literals `c/d`, the variable, `+ - * ^` and
/// parentheses; `^` takes a nonnegative integer exponent.  A leading `-` is
/// allowed at the start of any (sub)expression.
pub fn poly_parse(text: &str, var: &str) -> Result<UniPoly, PolyError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        var,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    var: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<UniPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UniPoly, PolyError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return Err(self.err("exponent must be a nonnegative integer"));
            }
            let e = self.integer()?;
            let e: u32 = e
                .to_string()
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<UniPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                // unary minus directly inside a factor position, e.g. "-(n+1)*..."
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den_pos = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(PolyError::Parse {
                            pos: den_pos,
                            message: "zero denominator".to_string(),
                        });
                    }
                    Ok(UniPoly::constant(Rational::new(num, den)))
                } else {
                    Ok(UniPoly::constant(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                if name != self.var {
                    return Err(PolyError::Parse {
                        pos: start,
                        message: format!("unknown variable '{}' (expected '{}')", name, self.var),
                    });
                }
                Ok(UniPoly::var())
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}
