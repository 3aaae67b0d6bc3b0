//! Generation of new summation identities from seed identities.
//!
//! Given a seed `sum W(n) F(n) = lambda * kappa` whose summand is
//! annihilated by a nondegenerated operator `L`, and any nonconstant
//! polynomial `P`, the homogeneous linear system obtained by comparing
//! coefficients in
//!
//! ```text
//! P(n) Q(n) = c W(n) + sum_{s=0}^{deg P} c_s L*(n^s)
//! ```
//!
//! is underdetermined by one, so it has a nonzero exact solution.  Summing
//! the relation against `F` kills every `L*(n^s)` term and produces the new
//! identity `sum P(n) Q(n) F(n) = c * lambda * kappa`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::linalg::{nullspace, QMatrix};
use crate::operator::{OperatorError, RecOperator};
use crate::poly::{poly_parse, rat_bits, rat_parse, PolyError, Rational, UniPoly};
use crate::reduction::ReductionError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("P must be nonconstant")]
    ConstantP,
    #[error("seed weight must be nonzero")]
    ZeroWeight,
    #[error("alpha must be >= 1 and equal to 1 unless the constant carries sqrt(alpha)")]
    BadAlpha,
    #[error("operator is degenerated (R_L nonempty); generation is not supported")]
    DegenerateOperator,
    #[error("no default Q degree: operator has d = {0}; pass an explicit qdeg")]
    NoDefaultQdeg(i64),
    #[error("nullspace contains no vector with nonzero Q")]
    NoNonzeroQ,
    #[error("operator error: {0}")]
    Operator(#[from] OperatorError),
    #[error("reduction error: {0}")]
    Reduction(#[from] ReductionError),
    #[error("polynomial error: {0}")]
    Poly(#[from] PolyError),
    #[error("bad seed file: {0}")]
    BadFile(String),
}

/// Shape of the constant `kappa` a series evaluates to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantKind {
    /// `kappa = 1/pi`
    RationalOverPi,
    /// `kappa = sqrt(alpha)/pi`
    SqrtAlphaOverPi,
    /// `kappa = 1` (a plain rational constant)
    RationalConstant,
}

impl ConstantKind {
    pub fn parse(text: &str) -> Result<Self, IdentityError> {
        match text {
            "rational_over_pi" => Ok(ConstantKind::RationalOverPi),
            "sqrt_alpha_over_pi" => Ok(ConstantKind::SqrtAlphaOverPi),
            "rational_constant" => Ok(ConstantKind::RationalConstant),
            other => Err(IdentityError::BadFile(format!(
                "unknown constant kind {other:?}"
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ConstantKind::RationalOverPi => "rational_over_pi",
            ConstantKind::SqrtAlphaOverPi => "sqrt_alpha_over_pi",
            ConstantKind::RationalConstant => "rational_constant",
        }
    }
}

/// A known evaluation `sum_{n>=0} W(n) F(n) = lambda * kappa`, together with
/// the annihilator of `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedIdentity {
    pub operator: RecOperator,
    pub weight: UniPoly,
    pub lambda: Rational,
    pub alpha: u64,
    pub kind: ConstantKind,
}

impl SeedIdentity {
    pub fn new(
        operator: RecOperator,
        weight: UniPoly,
        lambda: Rational,
        alpha: u64,
        kind: ConstantKind,
    ) -> Result<Self, IdentityError> {
        if weight.is_zero() {
            return Err(IdentityError::ZeroWeight);
        }
        let alpha_ok = match kind {
            ConstantKind::SqrtAlphaOverPi => alpha >= 1,
            _ => alpha == 1,
        };
        if !alpha_ok {
            return Err(IdentityError::BadAlpha);
        }
        Ok(SeedIdentity {
            operator,
            weight,
            lambda,
            alpha,
            kind,
        })
    }

    /// `lambda * kappa` rendered for humans, e.g. `4/(3*pi)` or
    /// `1444*sqrt(95)/(95*pi)`.
    pub fn constant_text(&self) -> String {
        render_constant(&self.lambda, self.alpha, self.kind)
    }
}

/// A generated identity `sum weight(n) F(n) = c_weight * lambda * kappa`.
///
/// `p`, `q`, `c` and `cs` record the raw solved relation
/// `p q = c W + sum cs[s] L*(n^s)`; `weight` is `p q` rescaled to coprime
/// integer coefficients with positive leading coefficient and `c_weight`
/// is `c` rescaled to match.
#[derive(Clone, Debug, PartialEq)]
pub struct NewIdentity {
    pub p: UniPoly,
    pub q: UniPoly,
    pub c: Rational,
    pub cs: BTreeMap<usize, Rational>,
    pub seed: SeedIdentity,
    pub weight: UniPoly,
    pub c_weight: Rational,
}

impl NewIdentity {
    /// Constant the normalized series evaluates to, e.g. `-100/(3*pi)`.
    pub fn constant_text(&self) -> String {
        render_constant(
            &(&self.c_weight * &self.seed.lambda),
            self.seed.alpha,
            self.seed.kind,
        )
    }
}

/// Render `lambda * kappa`.
pub fn render_constant(lambda: &Rational, alpha: u64, kind: ConstantKind) -> String {
    if lambda.is_zero() {
        return "0".to_string();
    }
    let num = lambda.numer();
    let den = lambda.denom();
    match kind {
        ConstantKind::RationalConstant => lambda.to_string(),
        ConstantKind::RationalOverPi => {
            if den.is_one() {
                format!("{num}/pi")
            } else {
                format!("{num}/({den}*pi)")
            }
        }
        ConstantKind::SqrtAlphaOverPi => {
            let lead = if num.magnitude().is_one() {
                if num.is_negative() {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else {
                format!("{num}*")
            };
            if den.is_one() {
                format!("{lead}sqrt({alpha})/pi")
            } else {
                format!("{lead}sqrt({alpha})/({den}*pi)")
            }
        }
    }
}

/// Human rendering of a full series identity.
pub fn render_identity(weight: &UniPoly, seq_term: &str, var: &str, constant: &str) -> String {
    format!(
        "sum_{{{var}>=0}} ({}) * {} = {}",
        weight.to_compact(var),
        seq_term,
        constant
    )
}

/// Generate a new identity from `seed` and a nonconstant `P`.
///
/// `qdeg` bounds `deg Q` and defaults to `d - 1`, which leaves the system
/// underdetermined by exactly one.  The returned solution is the nullspace
/// basis vector with nonzero `Q`, preferring `c != 0` and then the smallest
/// total bit size after normalization.
pub fn generate(
    seed: &SeedIdentity,
    p: &UniPoly,
    qdeg: Option<usize>,
) -> Result<NewIdentity, IdentityError> {
    let ell = match p.deg() {
        Some(d) if d >= 1 => d,
        _ => return Err(IdentityError::ConstantP),
    };
    let dd = seed.operator.degree_data()?;
    if dd.degenerated {
        return Err(IdentityError::DegenerateOperator);
    }
    let qdeg = match qdeg {
        Some(q) => q,
        None => {
            if dd.d < 1 {
                return Err(IdentityError::NoDefaultQdeg(dd.d));
            }
            (dd.d - 1) as usize
        }
    };

    // Columns: e_0..e_qdeg, c, c_0..c_ell.
    let adjoint_images: Vec<UniPoly> = (0..=ell)
        .map(|s| {
            seed.operator
                .adjoint_apply(&UniPoly::monomial(Rational::one(), s))
        })
        .collect();
    let mut top = (ell + qdeg) as i64;
    top = top.max(seed.weight.degree().finite().unwrap_or(0));
    for img in &adjoint_images {
        top = top.max(img.degree().finite().unwrap_or(0));
    }
    let cols = qdeg + 1 + 1 + ell + 1;
    let mut m = QMatrix::zero(top as usize + 1, cols);
    for t in 0..=top {
        for j in 0..=qdeg {
            // coefficient of n^t in P * n^j
            m.set(t as usize, j, p.coeff(t - j as i64));
        }
        m.set(t as usize, qdeg + 1, -seed.weight.coeff(t));
        for (s, img) in adjoint_images.iter().enumerate() {
            m.set(t as usize, qdeg + 2 + s, -img.coeff(t));
        }
    }

    let basis = nullspace(&m);
    let mut best: Option<(bool, u64, NewIdentity)> = None;
    for v in &basis {
        let q = UniPoly::new(v[..=qdeg].to_vec());
        if q.is_zero() {
            continue;
        }
        let c = v[qdeg + 1].clone();
        let mut cs = BTreeMap::new();
        for s in 0..=ell {
            let val = v[qdeg + 2 + s].clone();
            if !val.is_zero() {
                cs.insert(s, val);
            }
        }
        let id = normalize_parts(seed.clone(), p.clone(), q, c, cs);
        let c_zero = id.c.is_zero();
        let bits: u64 =
            id.weight.coeffs().iter().map(rat_bits).sum::<u64>() + rat_bits(&id.c_weight);
        let better = match &best {
            None => true,
            Some((best_czero, best_bits, _)) => {
                (!c_zero && *best_czero) || (c_zero == *best_czero && bits < *best_bits)
            }
        };
        if better {
            best = Some((c_zero, bits, id));
        }
    }
    best.map(|(_, _, id)| id).ok_or(IdentityError::NoNonzeroQ)
}

fn normalize_parts(
    seed: SeedIdentity,
    p: UniPoly,
    q: UniPoly,
    c: Rational,
    cs: BTreeMap<usize, Rational>,
) -> NewIdentity {
    let raw = p.mul(&q);
    let (mut weight, mut t) = raw.primitive_integer();
    if weight.leading_coeff().is_negative() {
        weight = weight.neg();
        t = -t;
    }
    let c_weight = &t * &c;
    NewIdentity {
        p,
        q,
        c,
        cs,
        seed,
        weight,
        c_weight,
    }
}

/// Rescale so the presented weight `P*Q` has coprime integer coefficients
/// and a positive leading coefficient, with the constant adjusted to match.
/// Idempotent.
pub fn normalize_identity(id: &NewIdentity) -> NewIdentity {
    normalize_parts(
        id.seed.clone(),
        id.p.clone(),
        id.q.clone(),
        id.c.clone(),
        id.cs.clone(),
    )
}

// ---------------------------------------------------------------------------
// seed files
// ---------------------------------------------------------------------------

/// Seed file: the identity plus an optional pointer into the sequence
/// catalog used by numeric verification.
#[derive(Clone, Debug)]
pub struct SeedFile {
    pub identity: SeedIdentity,
    pub sequence: Option<String>,
    pub geom: Option<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SeedWire {
    operator: OpWire,
    weight: String,
    lambda: String,
    alpha: u64,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sequence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    geom: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct OpWire {
    var: String,
    coeffs: Vec<String>,
}

impl SeedFile {
    pub fn from_json(text: &str) -> Result<Self, IdentityError> {
        let wire: SeedWire =
            serde_json::from_str(text).map_err(|e| IdentityError::BadFile(e.to_string()))?;
        let operator = RecOperator::parse_coeffs(&wire.operator.var, &wire.operator.coeffs)?;
        let weight = poly_parse(&wire.weight, operator.var())?;
        let lambda = rat_parse(&wire.lambda)?;
        let kind = ConstantKind::parse(&wire.kind)?;
        let identity = SeedIdentity::new(operator, weight, lambda, wire.alpha, kind)?;
        let geom = wire.geom.as_deref().map(rat_parse).transpose()?;
        Ok(SeedFile {
            identity,
            sequence: wire.sequence,
            geom,
        })
    }

    pub fn to_json(&self) -> String {
        let id = &self.identity;
        let wire = SeedWire {
            operator: OpWire {
                var: id.operator.var().to_string(),
                coeffs: id
                    .operator
                    .coeffs()
                    .iter()
                    .map(|c| c.to_text(id.operator.var()))
                    .collect(),
            },
            weight: id.weight.to_text(id.operator.var()),
            lambda: id.lambda.to_string(),
            alpha: id.alpha,
            kind: id.kind.as_str().to_string(),
            sequence: self.sequence.clone(),
            geom: self.geom.as_ref().map(|g| g.to_string()),
        };
        serde_json::to_string_pretty(&wire).expect("seed serialization cannot fail")
    }
}
