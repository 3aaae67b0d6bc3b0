//! Command-line surface over the polyred library.
//!
//! Subcommands: adjoint, analyze, reduce, telescope, generate, guess, seq,
//! verify-series, verify-congruence, selftest.  Exit codes: 0 success or
//! all checks passing, 1 mathematical failure (counterexample, failed
//! verification, nothing found), 2 usage error (bad flags or inputs).
//!
//! Machine output (`--json`) is line-delimited JSON with keys in fixed
//! order, so identical inputs give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;

use polyred::congruence::{check_claim, ClaimFile, PointsKind};
use polyred::goldens;
use polyred::identity::{generate, render_identity, SeedFile};
use polyred::operator::RecOperator;
use polyred::poly::{poly_parse, rat_parse, Rational};
use polyred::reduction::{normalize_window, reduce, telescoped_sum, SumClosedForm};
use polyred::sequences::{by_name, guess_recurrence_var, seq_terms};
use polyred::verify::{verify_series, PrecisionContext, SeriesTarget, Tolerance};

enum CliError {
    Usage(String),
    Math(String),
}

impl CliError {
    fn usage(msg: impl Display) -> Self {
        CliError::Usage(msg.to_string())
    }
}

// Input-side failures are usage errors; they carry position information
// from the parsers where available.
macro_rules! input_err {
    ($e:expr) => {
        CliError::Usage($e.to_string())
    };
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match dispatch(&args) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `polyred help` for usage");
            2
        }
        Err(CliError::Math(msg)) => {
            eprintln!("{msg}");
            1
        }
    };
    std::process::exit(code);
}

const USAGE: &str = "polyred <command> [flags]

commands:
  adjoint           --operator FILE --poly EXPR
  analyze           --operator FILE
  reduce            --operator FILE --poly EXPR
  telescope         --operator FILE --p EXPR --initial V[,V...] [--normalize]
  generate          --seed FILE --p EXPR [--qdeg N]
  guess             --seq NAME [-N TERMS] -J ORDER -D DEGREE
  seq               --name NAME -N COUNT [--geom R]
  verify-series     --seed FILE [--p EXPR] -N TERMS [--digits D]
                    [--tolerance T] [--accelerate]
  verify-congruence --claim FILE [--from N] [--to N] [--exhaustive]
  selftest
  help

common flags: --json (line-delimited JSON output)
environment:  POLYRED_DIGITS sets the default precision (>= 20, default 100)";

fn dispatch(args: &[String]) -> Result<i32, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::usage("missing command"));
    };
    let parsed = Flags::parse(&args[1..])?;
    match command.as_str() {
        "adjoint" => cmd_adjoint(&parsed),
        "analyze" => cmd_analyze(&parsed),
        "reduce" => cmd_reduce(&parsed),
        "telescope" => cmd_telescope(&parsed),
        "generate" => cmd_generate(&parsed),
        "guess" => cmd_guess(&parsed),
        "seq" => cmd_seq(&parsed),
        "verify-series" => cmd_verify_series(&parsed),
        "verify-congruence" => cmd_verify_congruence(&parsed),
        "selftest" => cmd_selftest(&parsed),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => Err(CliError::usage(format!("unknown command {other:?}"))),
    }
}

/// Minimal flag parser: `--key value` pairs plus boolean switches.
struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

const SWITCHES: &[&str] = &["--json", "--accelerate", "--exhaustive", "--normalize"];

impl Flags {
    fn parse(args: &[String]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            if SWITCHES.contains(&arg.as_str()) {
                switches.push(arg.clone());
                continue;
            }
            if !arg.starts_with('-') {
                return Err(CliError::usage(format!("unexpected argument {arg:?}")));
            }
            let value = it
                .next()
                .ok_or_else(|| CliError::usage(format!("flag {arg} needs a value")))?;
            values.insert(arg.trim_start_matches('-').to_string(), value.clone());
        }
        Ok(Flags { values, switches })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    fn require(&self, key: &str) -> Result<&str, CliError> {
        self.get(key)
            .ok_or_else(|| CliError::usage(format!("missing required flag --{key}")))
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn json(&self) -> bool {
        self.switch("--json")
    }

    fn parse_num<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| CliError::usage(format!("--{key} expects a number, got {v:?}"))),
        }
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))
}

fn load_operator(flags: &Flags) -> Result<RecOperator, CliError> {
    let path = flags.require("operator")?;
    RecOperator::from_json(&read_file(path)?).map_err(|e| input_err!(e))
}

fn default_digits(flags: &Flags) -> Result<usize, CliError> {
    let fallback = match std::env::var("POLYRED_DIGITS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| CliError::usage("POLYRED_DIGITS must be an integer"))?,
        Err(_) => 100,
    };
    let digits: usize = flags.parse_num("digits", fallback)?;
    if digits < 20 {
        return Err(CliError::usage("precision must be at least 20 digits"));
    }
    Ok(digits)
}

fn cmd_adjoint(flags: &Flags) -> Result<i32, CliError> {
    let op = load_operator(flags)?;
    let p = poly_parse(flags.require("poly")?, op.var()).map_err(|e| input_err!(e))?;
    let adj = op.adjoint_apply(&p);
    if flags.json() {
        println!(
            "{}",
            serde_json::json!({ "adjoint": adj.to_text(op.var()) })
        );
    } else {
        println!("L*({}) = {}", p.to_text(op.var()), adj.to_text(op.var()));
    }
    Ok(0)
}

fn cmd_analyze(flags: &Flags) -> Result<i32, CliError> {
    let op = load_operator(flags)?;
    let dd = op.degree_data().map_err(|e| input_err!(e))?;
    let coprime = op.shift_coprime_check().map_err(|e| input_err!(e))?;
    let r_set: Vec<u64> = dd.r_set.iter().copied().collect();
    let violations: Vec<u64> = coprime.violations.iter().copied().collect();
    let note = "operator order is assumed minimal; minimality is not certified";
    if flags.json() {
        println!(
            "{}",
            serde_json::json!({
                "order": op.order(),
                "d": dd.d,
                "f": dd.f_poly.to_text("s"),
                "r_set": r_set,
                "degenerated": dd.degenerated,
                "coprime": coprime.coprime,
                "violations": violations,
                "note": note,
            })
        );
    } else {
        println!("order J = {}", op.order());
        println!("d = {}", dd.d);
        println!("f(s) = {}", dd.f_poly.to_text("s"));
        println!("R_L = {r_set:?}");
        println!("degenerated: {}", dd.degenerated);
        if coprime.coprime {
            println!("shift-coprimality gcd(a_0(n), a_J(n+i)) = 1: pass");
        } else {
            println!("shift-coprimality: FAIL at shifts {violations:?}");
        }
        println!("note: {note}");
    }
    Ok(if coprime.coprime { 0 } else { 1 })
}

fn cmd_reduce(flags: &Flags) -> Result<i32, CliError> {
    let op = load_operator(flags)?;
    let q = poly_parse(flags.require("poly")?, op.var()).map_err(|e| input_err!(e))?;
    let r = reduce(&op, &q).map_err(|e| input_err!(e))?;
    if flags.json() {
        println!("{}", r.to_json(op.var()));
    } else {
        for (s, c) in &r.cs {
            println!("c[{s}] = {c}   (coefficient of L*({}^{s}))", op.var());
        }
        for (s, c) in &r.kept {
            println!("kept[{s}] = {c}   (degenerate monomial)");
        }
        println!("residual = {}", r.residual.to_text(op.var()));
    }
    Ok(0)
}

fn render_form(form: &SumClosedForm, var: &str) -> String {
    let mut rhs = String::new();
    if !num_traits::Zero::is_zero(&form.constant) {
        rhs.push_str(&form.constant.to_string());
    }
    for (offset, coeff) in &form.boundary {
        if coeff.is_zero() {
            continue;
        }
        let idx = match *offset {
            0 => "n".to_string(),
            o if o > 0 => format!("n+{o}"),
            o => format!("n-{}", -o),
        };
        if !rhs.is_empty() {
            rhs.push_str(" + ");
        }
        rhs.push_str(&format!("({}) * F({idx})", coeff.to_text("n")));
    }
    if rhs.is_empty() {
        rhs.push('0');
    }
    format!(
        "sum_{{{var}=0}}^{{n-1}} ({}) * F({var}) = {rhs}   [n >= {}]",
        form.weight.to_text(var),
        form.valid_from.max(1)
    )
}

fn form_json(form: &SumClosedForm, var: &str) -> String {
    let boundary: Vec<serde_json::Value> = form
        .boundary
        .iter()
        .map(|(o, c)| serde_json::json!({ "offset": o, "coeff": c.to_text("n") }))
        .collect();
    serde_json::json!({
        "weight": form.weight.to_text(var),
        "constant": form.constant.to_string(),
        "boundary": boundary,
        "valid_from": form.valid_from,
    })
    .to_string()
}

fn cmd_telescope(flags: &Flags) -> Result<i32, CliError> {
    let op = load_operator(flags)?;
    let p = poly_parse(flags.require("p")?, op.var()).map_err(|e| input_err!(e))?;
    let initial: Vec<Rational> = flags
        .require("initial")?
        .split(',')
        .map(|v| rat_parse(v).map_err(|e| input_err!(e)))
        .collect::<Result<_, _>>()?;
    let mut form = telescoped_sum(&op, &p, &initial).map_err(|e| input_err!(e))?;
    if flags.switch("--normalize") {
        use polyred::reduction::ReductionError;
        match normalize_window(&form, &op) {
            Ok(norm) => form = norm,
            // A non-polynomial boundary is reported and the identity is
            // printed unnormalized; an unsupported order is a usage error.
            Err(ReductionError::NonPolynomialBoundary) => {
                eprintln!("normalization failed (non-polynomial boundary); printing the unnormalized identity")
            }
            Err(e) => return Err(input_err!(e)),
        }
    }
    if flags.json() {
        println!("{}", form_json(&form, op.var()));
    } else {
        println!("{}", render_form(&form, op.var()));
    }
    Ok(0)
}

fn cmd_generate(flags: &Flags) -> Result<i32, CliError> {
    let seed_file =
        SeedFile::from_json(&read_file(flags.require("seed")?)?).map_err(|e| input_err!(e))?;
    let seed = &seed_file.identity;
    let var = seed.operator.var().to_string();
    let p = poly_parse(flags.require("p")?, &var).map_err(|e| input_err!(e))?;
    let qdeg = match flags.get("qdeg") {
        None => None,
        Some(v) => Some(
            v.parse::<usize>()
                .map_err(|_| CliError::usage("--qdeg expects a nonnegative integer"))?,
        ),
    };
    let id = generate(seed, &p, qdeg).map_err(|e| CliError::Math(format!("no identity: {e}")))?;
    let seq_term = match &seed_file.sequence {
        Some(name) => {
            let def = by_name(name).map_err(|e| input_err!(e))?;
            let weighted = match &seed_file.geom {
                Some(g) => def.with_geom(g).map_err(|e| input_err!(e))?,
                None => def.clone(),
            };
            weighted.render_term()
        }
        None => format!("F({var})"),
    };
    let human = render_identity(&id.weight, &seq_term, &var, &id.constant_text());
    // The finite-n relation is exact; the series value additionally needs
    // the telescoped boundary to vanish, which is checked numerically.
    let note = "finite-n relation is exact; the infinite-sum value assumes a vanishing \
boundary term, checked numerically by verify-series";
    if flags.json() {
        let cs: BTreeMap<String, String> = id
            .cs
            .iter()
            .map(|(s, c)| (s.to_string(), c.to_string()))
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "p": id.p.to_text(&var),
                "q": id.q.to_text(&var),
                "c": id.c.to_string(),
                "cs": cs,
                "weight": id.weight.to_text(&var),
                "constant": id.constant_text(),
                "human": human,
                "note": note,
            })
        );
    } else {
        println!("{human}");
        println!("  P = {}", id.p.to_text(&var));
        println!("  Q = {}", id.q.to_text(&var));
        println!("  c = {}", id.c);
        for (s, c) in &id.cs {
            println!("  c[{s}] = {c}");
        }
        println!("  note: {note}");
    }
    Ok(0)
}

fn cmd_guess(flags: &Flags) -> Result<i32, CliError> {
    let name = flags.require("seq")?;
    let def = by_name(name).map_err(|e| input_err!(e))?;
    let j: usize = flags.parse_num("J", 2)?;
    let d: usize = flags.parse_num("D", 2)?;
    let n: usize = flags.parse_num("N", 40)?;
    let terms = seq_terms(def, n).map_err(|e| input_err!(e))?;
    match guess_recurrence_var(&terms, j, d, &def.var).map_err(|e| input_err!(e))? {
        Some(op) => {
            if flags.json() {
                println!("{}", op.to_json());
            } else {
                println!("{op:?}");
            }
            Ok(0)
        }
        None => Err(CliError::Math(format!(
            "no order-{j} operator with coefficient degree <= {d} annihilates {name}"
        ))),
    }
}

fn cmd_seq(flags: &Flags) -> Result<i32, CliError> {
    let name = flags.require("name")?;
    let count: usize = flags.parse_num("N", 10)?;
    let mut def = by_name(name).map_err(|e| input_err!(e))?.clone();
    if let Some(g) = flags.get("geom") {
        let r = rat_parse(g).map_err(|e| input_err!(e))?;
        def = def.with_geom(&r).map_err(|e| input_err!(e))?;
    }
    let terms = seq_terms(&def, count).map_err(|e| input_err!(e))?;
    for (n, v) in terms.iter().enumerate() {
        if flags.json() {
            println!("{}", serde_json::json!({ "n": n, "value": v.to_string() }));
        } else {
            println!("{v}");
        }
    }
    Ok(0)
}

fn cmd_verify_series(flags: &Flags) -> Result<i32, CliError> {
    let seed_file =
        SeedFile::from_json(&read_file(flags.require("seed")?)?).map_err(|e| input_err!(e))?;
    let seed = &seed_file.identity;
    let n: usize = flags.parse_num("N", 200)?;
    let digits = default_digits(flags)?;
    let tolerance =
        Tolerance::parse(flags.get("tolerance").unwrap_or("1e-30")).map_err(|e| input_err!(e))?;
    let accelerate = flags.switch("--accelerate");

    let seq_name = seed_file
        .sequence
        .as_deref()
        .ok_or_else(|| CliError::usage("seed file has no \"sequence\" entry"))?;
    let def = by_name(seq_name).map_err(|e| input_err!(e))?;
    let seq = match &seed_file.geom {
        Some(g) => def.with_geom(g).map_err(|e| input_err!(e))?,
        None => def.clone(),
    };

    let target = match flags.get("p") {
        Some(expr) => {
            let p = poly_parse(expr, seed.operator.var()).map_err(|e| input_err!(e))?;
            let id = generate(seed, &p, None)
                .map_err(|e| CliError::Math(format!("no identity: {e}")))?;
            SeriesTarget::from(&id)
        }
        None => SeriesTarget::from(seed),
    };

    let ctx = PrecisionContext::new(digits).map_err(|e| input_err!(e))?;
    let report =
        verify_series(&target, &seq, n, &ctx, accelerate, &tolerance).map_err(|e| input_err!(e))?;
    if flags.json() {
        println!(
            "{}",
            serde_json::json!({
                "target": report.target,
                "partial_terms": report.partial_terms,
                "abs_residual": report.abs_residual,
                "pass": report.pass,
                "accelerated": report.accelerated,
                "note": report.note,
            })
        );
    } else {
        println!(
            "target {} with {} terms{}: |residual| = {} -> {}",
            report.target,
            report.partial_terms,
            if report.accelerated {
                " (accelerated)"
            } else {
                ""
            },
            report.abs_residual,
            if report.pass { "pass" } else { "FAIL" }
        );
        if let Some(note) = &report.note {
            println!("note: {note}");
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_verify_congruence(flags: &Flags) -> Result<i32, CliError> {
    let cf =
        ClaimFile::from_json(&read_file(flags.require("claim")?)?).map_err(|e| input_err!(e))?;
    let lo: u64 = flags.parse_num("from", cf.default_range.0)?;
    let hi: u64 = flags.parse_num("to", cf.default_range.1)?;
    if lo > hi {
        return Err(CliError::usage("empty range"));
    }
    let primes = cf.points == PointsKind::Primes;
    let exhaustive = flags.switch("--exhaustive");
    let report = check_claim(&cf.claim, lo, hi, primes, exhaustive).map_err(|e| input_err!(e))?;
    if flags.json() {
        for p in &report.points {
            println!("{}", serde_json::to_string(p).unwrap());
        }
    } else {
        println!(
            "checked {} point(s) over {lo}..={hi}{}",
            report.points.len(),
            if primes { " (primes)" } else { "" }
        );
        match report.first_failure {
            None => println!("all points pass"),
            Some(n) => {
                let rec = report.points.iter().find(|p| p.n == n).unwrap();
                println!(
                    "counterexample at n = {n}: lhs = {} rhs = {}",
                    rec.lhs_mod, rec.rhs_mod
                );
            }
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_selftest(flags: &Flags) -> Result<i32, CliError> {
    let checks = goldens::run_all();
    let mut failed = 0;
    for c in &checks {
        if flags.json() {
            println!(
                "{}",
                serde_json::json!({ "name": c.name, "pass": c.pass, "detail": c.detail })
            );
        } else {
            println!(
                "{} {} - {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        if !c.pass {
            failed += 1;
        }
    }
    if !flags.json() {
        println!("{} checks, {} failed", checks.len(), failed);
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
