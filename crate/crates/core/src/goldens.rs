//! The golden suite: every quoted identity, operator, decomposition,
//! congruence and series constant, each checked exactly once.
//!
//! `polyred selftest` prints one line per check; the acceptance tests embed
//! the same checks with assertions.  All inputs live in the shipped data
//! files under `data/`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::congruence::{check_claim, known_fact_checks, ClaimFile, PointsKind};
use crate::identity::{generate, SeedFile};
use crate::operator::RecOperator;
use crate::poly::{poly_parse, rat, Rational, UniPoly};
use crate::reduction::{normalize_window, reduce, telescoped_sum};
use crate::sequences::{by_name, guess_recurrence_var, seq_terms};
use crate::verify::{verify_series, PrecisionContext, SeriesTarget, Tolerance};

/// One named golden check.
#[derive(Clone, Debug)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Embedded copies of the data files shipped in `data/`.
pub mod data {
    pub const OPERATORS: &[(&str, &str)] = &[
        ("domb_raw", include_str!("../data/operators/domb_raw.json")),
        (
            "domb_m-32",
            include_str!("../data/operators/domb_m-32.json"),
        ),
        ("domb_m64", include_str!("../data/operators/domb_m64.json")),
        ("franel", include_str!("../data/operators/franel.json")),
        (
            "franel4_raw",
            include_str!("../data/operators/franel4_raw.json"),
        ),
        (
            "franel4_m5776",
            include_str!("../data/operators/franel4_m5776.json"),
        ),
        ("delannoy", include_str!("../data/operators/delannoy.json")),
    ];

    pub const SEEDS: &[(&str, &str)] = &[
        ("domb_m-32", include_str!("../data/seeds/domb_m-32.json")),
        ("domb_m64", include_str!("../data/seeds/domb_m64.json")),
        (
            "franel4_m5776",
            include_str!("../data/seeds/franel4_m5776.json"),
        ),
    ];

    pub const CLAIMS: &[(&str, &str)] = &[
        ("franel_3k2", include_str!("../data/claims/franel_3k2.json")),
        (
            "franel_3k2_mod_p5",
            include_str!("../data/claims/franel_3k2_mod_p5.json"),
        ),
        ("franel_0", include_str!("../data/claims/franel_0.json")),
        ("franel_1", include_str!("../data/claims/franel_1.json")),
        ("franel_2", include_str!("../data/claims/franel_2.json")),
        ("franel_3_1", include_str!("../data/claims/franel_3_1.json")),
        ("franel_3_2", include_str!("../data/claims/franel_3_2.json")),
        (
            "delannoy_mod_n",
            include_str!("../data/claims/delannoy_mod_n.json"),
        ),
    ];
}

/// Built-in operator by name.
pub fn builtin_operator(name: &str) -> Option<RecOperator> {
    data::OPERATORS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, json)| RecOperator::from_json(json).expect("shipped operator parses"))
}

/// Built-in seed by name.
pub fn builtin_seed(name: &str) -> Option<SeedFile> {
    data::SEEDS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, json)| SeedFile::from_json(json).expect("shipped seed parses"))
}

/// Built-in claim by name.
pub fn builtin_claim(name: &str) -> Option<ClaimFile> {
    data::CLAIMS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, json)| ClaimFile::from_json(json).expect("shipped claim parses"))
}

/// All built-in operators, for property sweeps.
pub fn builtin_operators() -> Vec<(&'static str, RecOperator)> {
    data::OPERATORS
        .iter()
        .map(|(n, json)| {
            (
                *n,
                RecOperator::from_json(json).expect("shipped operator parses"),
            )
        })
        .collect()
}

fn pn(t: &str) -> UniPoly {
    poly_parse(t, "n").unwrap()
}

fn pk(t: &str) -> UniPoly {
    poly_parse(t, "k").unwrap()
}

/// Run the full golden suite.
pub fn run_all() -> Vec<GoldenCheck> {
    let mut out = Vec::new();
    adjoint_goldens(&mut out);
    reduction_goldens(&mut out);
    degree_goldens(&mut out);
    generate_goldens(&mut out);
    closed_form_goldens(&mut out);
    congruence_goldens(&mut out);
    guess_and_scale_goldens(&mut out);
    series_goldens(&mut out);
    out
}

fn push(out: &mut Vec<GoldenCheck>, name: &'static str, pass: bool, detail: String) {
    out.push(GoldenCheck { name, pass, detail });
}

fn adjoint_goldens(out: &mut Vec<GoldenCheck>) {
    let franel = builtin_operator("franel").unwrap();
    let got = franel.adjoint_apply(&UniPoly::one());
    push(
        out,
        "adjoint/franel-unit",
        got == pk("-3*(3*k+2)"),
        format!("L*(1) = {}", got.to_text("k")),
    );

    let domb = builtin_operator("domb_m-32").unwrap();
    let ln = domb.adjoint_apply(&pn("n"));
    let expanded_ok = ln == pn("27*n^4-24*n^3-3*n^2-6*n-2");
    let identity_ok = pn("n^2*(n-1)*(9*n+1)") == pn("2/3*(3*n+1)").add(&ln.scale(&rat(1, 3)));
    push(
        out,
        "adjoint/domb-reduction-identity",
        expanded_ok && identity_ok,
        format!("L*(n) = {}", ln.to_text("n")),
    );
}

fn reduction_goldens(out: &mut Vec<GoldenCheck>) {
    let domb = builtin_operator("domb_m-32").unwrap();
    let r = reduce(&domb, &pn("n^2*(n-1)*(9*n+1)")).unwrap();
    push(
        out,
        "reduce/domb-weight",
        r.cs == [(1usize, rat(1, 3))].into_iter().collect()
            && r.kept.is_empty()
            && r.residual == pn("2*n+2/3"),
        r.to_json("n").to_string(),
    );

    let franel = builtin_operator("franel").unwrap();
    type ReduceCase = (&'static str, &'static str, Vec<(usize, Rational)>, UniPoly);
    let cases: [ReduceCase; 4] = [
        (
            "reduce/franel-k",
            "k",
            vec![(0, rat(-1, 9))],
            UniPoly::constant(rat(-2, 3)),
        ),
        (
            "reduce/franel-k^2",
            "k^2",
            vec![(0, rat(13, 162)), (1, rat(-1, 18))],
            UniPoly::constant(rat(10, 27)),
        ),
        (
            "reduce/franel-27k^2(3k+1)",
            "27*k^2*(3*k+1)",
            vec![(0, rat(-1, 1)), (2, rat(-3, 1))],
            UniPoly::zero(),
        ),
        (
            "reduce/franel-9(9k^3-15k^2-10k)",
            "9*(9*k^3-15*k^2-10*k)",
            vec![(0, rat(-4, 1)), (1, rat(9, 1)), (2, rat(-3, 1))],
            UniPoly::zero(),
        ),
    ];
    for (name, q, cs, residual) in cases {
        let r = reduce(&franel, &pk(q)).unwrap();
        push(
            out,
            name,
            r.cs == cs.into_iter().collect() && r.residual == residual && r.kept.is_empty(),
            r.to_json("k"),
        );
    }
}

fn degree_goldens(out: &mut Vec<GoldenCheck>) {
    let raw = builtin_operator("domb_raw").unwrap();
    let mut family_ok = true;
    let mut detail = String::new();
    for m in [-32i64, 64, 1, 7, 100, 5776, 4, 16] {
        let op = raw.scale(&rat(1, m)).unwrap();
        let dd = op.degree_data().unwrap();
        let want_d = if m == 4 || m == 16 { 2 } else { 3 };
        let ok = dd.d == want_d && dd.r_set.is_empty();
        family_ok &= ok;
        detail.push_str(&format!("m={m}: d={} R_L={:?}; ", dd.d, dd.r_set));
    }
    push(out, "degree/domb-family", family_ok, detail);

    let franel = builtin_operator("franel").unwrap();
    let dd = franel.degree_data().unwrap();
    push(
        out,
        "degree/franel",
        dd.d == 1 && dd.r_set.is_empty() && dd.f_poly == poly_parse("-9*(s+1)", "s").unwrap(),
        format!(
            "d={} f(s)={} R_L={:?}",
            dd.d,
            dd.f_poly.to_text("s"),
            dd.r_set
        ),
    );

    let delannoy = builtin_operator("delannoy").unwrap();
    let dd = delannoy.degree_data().unwrap();
    push(
        out,
        "degree/delannoy",
        dd.d == 1 && dd.r_set.is_empty(),
        format!(
            "d={} f(s)={} R_L={:?}",
            dd.d,
            dd.f_poly.to_text("s"),
            dd.r_set
        ),
    );

    let delta = RecOperator::parse_coeffs("n", &["-1", "1"]).unwrap();
    let dd = delta.degree_data().unwrap();
    push(
        out,
        "degree/sigma-minus-1",
        dd.d == -1
            && dd.degenerated
            && dd.r_set == [0u64].into_iter().collect()
            && dd.f_poly == poly_parse("-s", "s").unwrap(),
        format!(
            "d={} f(s)={} R_L={:?}",
            dd.d,
            dd.f_poly.to_text("s"),
            dd.r_set
        ),
    );

    for (name, label) in [
        ("domb_m-32", "coprime/domb-m-32"),
        ("franel", "coprime/franel"),
    ] {
        let check = builtin_operator(name)
            .unwrap()
            .shift_coprime_check()
            .unwrap();
        push(
            out,
            label,
            check.coprime,
            format!("violations {:?}", check.violations),
        );
    }
}

fn generate_goldens(out: &mut Vec<GoldenCheck>) {
    let seed = builtin_seed("domb_m-32").unwrap().identity;
    let id = generate(&seed, &pn("n^2"), None).unwrap();
    push(
        out,
        "generate/domb-P=n^2",
        id.weight == pn("9*n^4-8*n^3-n^2") && id.constant_text() == "4/(3*pi)",
        format!(
            "weight {} constant {}",
            id.weight.to_text("n"),
            id.constant_text()
        ),
    );

    let id = generate(&seed, &pn("n^2+n+1"), None).unwrap();
    push(
        out,
        "generate/domb-P=n^2+n+1",
        id.weight == pn("(n^2+n+1)*(126*n^2+41*n+5)") && id.constant_text() == "-100/(3*pi)",
        format!(
            "weight {} constant {}",
            id.weight.to_text("n"),
            id.constant_text()
        ),
    );

    let seed = builtin_seed("franel4_m5776").unwrap().identity;
    let id = generate(&seed, &pn("n^3"), None).unwrap();
    push(
        out,
        "generate/franel4-P=n^3",
        id.weight == pn("47808294003072*n^5-102482715691400*n^4+52422407372915*n^3")
            && id.constant_text() == "-122626206796*sqrt(95)/(625*pi)",
        format!(
            "weight {} constant {}",
            id.weight.to_text("n"),
            id.constant_text()
        ),
    );
}

fn closed_form_goldens(out: &mut Vec<GoldenCheck>) {
    // Franel: sum_{k<n} L*(p)(k) (-1)^k f_k = -n^2 (p(n-2) F(n) + 8 p(n-1) F(n-1)).
    let franel_seq = by_name("franel_signed").unwrap();
    let franel_op = franel_seq.known_operator.clone().unwrap();
    let f = seq_terms(franel_seq, 205).unwrap();
    let mut ok = true;
    for p in [pk("1"), pk("k"), pk("k^2"), pk("k^4-3*k^3+2*k-7")] {
        let form = telescoped_sum(&franel_op, &p, &f[..2]).unwrap();
        let norm = normalize_window(&form, &franel_op).unwrap();
        ok &= norm.boundary[0].1 == pn("-8*n^2").mul(&p.shift(-1));
        ok &= norm.boundary[1].1 == pn("-n^2").mul(&p.shift(-2));
        ok &= norm.constant.is_zero();
        for n in 1..=200 {
            ok &= norm.eval_lhs(&f, n) == norm.eval_rhs(&f, n).unwrap();
        }
    }
    push(
        out,
        "closedform/franel",
        ok,
        "-n^2(p(n-2)F(n)+8p(n-1)F(n-1)) for p in {1, k, k^2, quartic}, n <= 200".to_string(),
    );

    // Delannoy: sum = n (p(n-1) D_{n-1} - p(n-2) D_n).
    let del_seq = by_name("delannoy").unwrap();
    let del_op = del_seq.known_operator.clone().unwrap();
    let d = seq_terms(del_seq, 205).unwrap();
    let mut ok = true;
    for p in [pk("1"), pk("k"), pk("k^2"), pk("k^4-3*k^3+2*k-7")] {
        let form = telescoped_sum(&del_op, &p, &d[..2]).unwrap();
        let norm = normalize_window(&form, &del_op).unwrap();
        ok &= norm.boundary[0].1 == pn("n").mul(&p.shift(-1));
        ok &= norm.boundary[1].1 == pn("-n").mul(&p.shift(-2));
        ok &= norm.constant.is_zero();
        for n in 1..=200 {
            ok &= norm.eval_lhs(&d, n) == norm.eval_rhs(&d, n).unwrap();
        }
    }
    push(
        out,
        "closedform/delannoy",
        ok,
        "n(p(n-1)D_{n-1}-p(n-2)D_n) for p in {1, k, k^2, quartic}, n <= 200".to_string(),
    );

    // p = 1: sum_{k<n} (4k+2) D_k = n (D_n - D_{n-1}).
    let mut ok = true;
    for n in 1..=200i64 {
        let mut lhs = Rational::from_integer(BigInt::from(0));
        for k in 0..n {
            lhs += pk("4*k+2").eval_int(k) * &d[k as usize];
        }
        let rhs = rat(n, 1) * (&d[n as usize] - &d[(n - 1) as usize]);
        ok &= lhs == rhs;
    }
    push(
        out,
        "closedform/delannoy-p1",
        ok,
        "sum (4k+2) D_k = n(D_n - D_{n-1}), n <= 200".to_string(),
    );
}

fn congruence_goldens(out: &mut Vec<GoldenCheck>) {
    let labels: [(&str, &'static str); 8] = [
        ("franel_3k2", "congruence/franel-3k+2-mod-2n^2"),
        ("franel_3k2_mod_p5", "congruence/franel-3k+2-mod-p^5"),
        ("franel_0", "congruence/franel-legendre-0"),
        ("franel_1", "congruence/franel-legendre-1"),
        ("franel_2", "congruence/franel-legendre-2"),
        ("franel_3_1", "congruence/franel-k^2(3k+1)"),
        ("franel_3_2", "congruence/franel-9k^3-15k^2-10k"),
        ("delannoy_mod_n", "congruence/delannoy-mod-n"),
    ];
    for (file, label) in labels {
        let cf = builtin_claim(file).unwrap();
        let (lo, hi) = cf.default_range;
        let primes = cf.points == PointsKind::Primes;
        match check_claim(&cf.claim, lo, hi, primes, false) {
            Ok(report) => push(
                out,
                label,
                report.pass,
                format!(
                    "{} points over {lo}..={hi}{}",
                    report.points.len(),
                    report
                        .first_failure
                        .map(|n| format!(", first failure at {n}"))
                        .unwrap_or_default()
                ),
            ),
            Err(e) => push(out, label, false, format!("error: {e}")),
        }
    }

    match known_fact_checks() {
        Ok(records) => {
            let pass = records.iter().all(|r| r.pass);
            push(
                out,
                "congruence/known-facts",
                pass,
                format!("{} prime facts checked", records.len()),
            );
        }
        Err(e) => push(out, "congruence/known-facts", false, format!("error: {e}")),
    }
}

fn guess_and_scale_goldens(out: &mut Vec<GoldenCheck>) {
    for (seq_name, j, deg, op_name, label) in [
        ("franel_signed", 2usize, 2usize, "franel", "guess/franel"),
        ("delannoy", 2, 1, "delannoy", "guess/delannoy"),
        ("domb", 2, 3, "domb_raw", "guess/domb"),
    ] {
        let def = by_name(seq_name).unwrap();
        let terms = seq_terms(def, 40).unwrap();
        let guessed = guess_recurrence_var(&terms, j, deg, &def.var).unwrap();
        let expect = builtin_operator(op_name).unwrap();
        let pass = guessed.as_ref() == Some(&expect);
        push(
            out,
            label,
            pass,
            guessed
                .map(|g| format!("{g:?}"))
                .unwrap_or_else(|| "no operator found".to_string()),
        );
    }

    let raw = builtin_operator("domb_raw").unwrap();
    let scaled = raw.scale(&rat(-1, 32)).unwrap();
    push(
        out,
        "scale/domb-to-m-32",
        scaled == builtin_operator("domb_m-32").unwrap(),
        format!("{scaled:?}"),
    );
    let raw4 = builtin_operator("franel4_raw").unwrap();
    let scaled4 = raw4.scale(&rat(1, 5776)).unwrap();
    push(
        out,
        "scale/franel4-to-m5776",
        scaled4 == builtin_operator("franel4_m5776").unwrap(),
        format!("{scaled4:?}"),
    );
}

fn series_goldens(out: &mut Vec<GoldenCheck>) {
    let ctx = match PrecisionContext::new(100) {
        Ok(ctx) => ctx,
        Err(e) => {
            push(
                out,
                "series/precision-context",
                false,
                format!("error: {e}"),
            );
            return;
        }
    };
    push(
        out,
        "series/pi-self-check",
        true,
        format!("pi = {:.40}...", ctx.pi_decimal()),
    );

    let cases: [(&str, &str, usize, &str, bool, &'static str); 3] = [
        (
            "domb_m64",
            "1e-30",
            200,
            "series/domb-m64",
            false,
            "sum (5n+1) Domb(n)/64^n = 8*sqrt(3)/(3*pi)",
        ),
        (
            "franel4_m5776",
            "1e-30",
            60,
            "series/franel4-m5776",
            false,
            "sum (408n+47) franel4(n)/5776^n = 1444*sqrt(95)/(95*pi)",
        ),
        (
            "domb_m-32",
            "1e-8",
            200,
            "series/domb-m-32-accelerated",
            true,
            "accelerated sum n^2(n-1)(9n+1) Domb(n)/(-32)^n = 4/(3*pi)",
        ),
    ];
    for (seed_name, tol, n, label, accelerate, what) in cases {
        let seed_file = builtin_seed(seed_name).unwrap();
        let seq = by_name(seed_file.sequence.as_deref().unwrap())
            .unwrap()
            .with_geom(seed_file.geom.as_ref().unwrap())
            .unwrap();
        let target = if accelerate {
            // The generated Domb weight over (-32)^n rather than the seed.
            let id = generate(&seed_file.identity, &pn("n^2"), None).unwrap();
            SeriesTarget::from(&id)
        } else {
            SeriesTarget::from(&seed_file.identity)
        };
        let tol = Tolerance::parse(tol).unwrap();
        match verify_series(&target, &seq, n, &ctx, accelerate, &tol) {
            Ok(report) => push(
                out,
                label,
                report.pass,
                format!("{what}: residual {}", report.abs_residual),
            ),
            Err(e) => push(out, label, false, format!("error: {e}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_goldens_pass() {
        let checks = run_all();
        assert!(checks.len() >= 25);
        for c in &checks {
            assert!(c.pass, "golden {} failed: {}", c.name, c.detail);
        }
    }

    #[test]
    fn builtin_lookup_misses_are_none() {
        assert!(builtin_operator("nope").is_none());
        assert!(builtin_seed("nope").is_none());
        assert!(builtin_claim("nope").is_none());
    }
}
