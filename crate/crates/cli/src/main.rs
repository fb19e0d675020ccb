//! `dedekind`: prime and prime-power tests for ideals of orders, plus the
//! normal forms and finite-ring predicates they are built from.
//!
//! Exit status is 0 for success or a true answer, 1 for a false answer or
//! an invalid input structure, and 2 for errors.

use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dedekind_core::format::{
    certificate_to_json, ideal_from_json, int_to_json, ints_to_json, matrix_from_json, matrix_to_json, order_from_json,
    presentation_from_json, presentation_to_json, verdict_to_json,
};
use dedekind_core::oracle::{
    enumerate_presentation, enumerate_quotient, oracle_is_field, oracle_is_local, DEFAULT_CAP,
};
use dedekind_core::primality::set_backend;
use dedekind_core::ring::field_test;
use dedekind_core::{
    decide, det_modular, fixtures, hnf_with_transform, ideal_hnf_basis, is_local, output_basis, snf_with_transforms,
    FiniteRingPresentation, IntMatrix, OrderElement, OrderPresentation, PrimalityBackend, Question, QuotientBasis,
    TwoGenIdeal, Verdict,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dedekind", version, about = "Prime and prime-power tests for ideals of orders")]
struct Cli {
    /// Print JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Primality backend for integers above the fixed-witness bound.
    #[arg(long, global = true, value_enum, default_value_t = Backend::MillerRabin)]
    primality: Backend,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    MillerRabin,
    Aks,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an order table or a finite-ring presentation.
    Validate {
        #[arg(long, conflicts_with = "presentation", required_unless_present = "presentation")]
        ring: Option<String>,
        #[arg(long)]
        presentation: Option<String>,
    },
    /// Norm of an ideal and its Hermite basis.
    Norm(IdealArgs),
    /// Hermite normal form of an integer matrix, with the unimodular transform.
    Hnf {
        #[arg(long)]
        matrix: String,
        /// Multiple of the lattice determinant; defaults to |det| for square input.
        #[arg(long)]
        h: Option<BigInt>,
    },
    /// Smith normal form of a nonsingular square matrix, with transforms.
    Snf {
        #[arg(long)]
        matrix: String,
        /// Multiple of |det|; defaults to |det|.
        #[arg(long)]
        h: Option<BigInt>,
    },
    /// Basis representation of the quotient ring O/I.
    Quotient(IdealArgs),
    /// Is the ideal prime?
    IsPrime {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Is the ideal a power of a prime ideal?
    IsPrimePower {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Is a finite-ring presentation a field?
    IsField {
        #[arg(long)]
        presentation: String,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Is a finite-ring presentation a local ring?
    IsLocal {
        #[arg(long)]
        presentation: String,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// List the built-in rings usable as `--ring NAME`.
    Fixtures,
}

#[derive(Args)]
struct IdealArgs {
    /// Order table as a JSON file, `-` for stdin, or a built-in ring name.
    #[arg(long)]
    ring: String,
    /// Ideal as a JSON file with `alpha`, `beta` and optionally `h`.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    ideal: Option<String>,
    /// First generator as comma-separated coordinates.
    #[arg(long, requires = "beta", allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Second generator as comma-separated coordinates.
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    beta: Option<String>,
    /// Common multiple of both generator norms; overrides any `h` in the ideal file.
    #[arg(long)]
    h: Option<BigInt>,
}

#[derive(Args)]
struct CheckArgs {
    /// Cross-check the answer by enumerating the ring.
    #[arg(long)]
    verify: bool,
    /// Largest ring `--verify` will enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

/// What a command produced: text for humans, JSON for machines, and the
/// exit status.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_backend(match cli.primality {
        Backend::MillerRabin => PrimalityBackend::MillerRabin,
        Backend::Aks => PrimalityBackend::Aks,
    });
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text.trim_end());
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Validate { ring, presentation } => match (ring, presentation) {
            (Some(ring), _) => validate_order(&load_order(&ring)?),
            (None, Some(p)) => validate_presentation(&load_presentation(&p)?),
            (None, None) => bail!("one of --ring or --presentation is required"),
        },
        Command::Norm(args) => norm(&args),
        Command::Hnf { matrix, h } => hnf(&load_matrix(&matrix)?, h),
        Command::Snf { matrix, h } => snf(&load_matrix(&matrix)?, h),
        Command::Quotient(args) => quotient(&args),
        Command::IsPrime { ideal, check } => ideal_question(&ideal, &check, Question::Prime),
        Command::IsPrimePower { ideal, check } => ideal_question(&ideal, &check, Question::PrimePower),
        Command::IsField { presentation, check } => ring_question(&load_presentation(&presentation)?, &check, true),
        Command::IsLocal { presentation, check } => ring_question(&load_presentation(&presentation)?, &check, false),
        Command::Fixtures => {
            let names: Vec<_> = fixtures::all().into_iter().map(|(name, o)| (name, o.rank())).collect();
            Ok(Output {
                text: names.iter().map(|(n, r)| format!("{n}\trank {r}\n")).collect(),
                json: json!(names.iter().map(|(n, r)| json!({"name": n, "rank": r})).collect::<Vec<_>>()),
                ok: true,
            })
        }
    }
}

fn read_json(path: &str) -> Result<Value> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {path} as JSON"))
}

/// A path wins over a built-in name of the same spelling.
fn load_order(source: &str) -> Result<OrderPresentation> {
    if source != "-" && !Path::new(source).exists() {
        return fixtures::by_name(source)
            .ok_or_else(|| anyhow!("{source} is neither a file nor a built-in ring (see `dedekind fixtures`)"));
    }
    Ok(order_from_json(&read_json(source)?)?)
}

fn load_presentation(path: &str) -> Result<FiniteRingPresentation> {
    Ok(presentation_from_json(&read_json(path)?)?)
}

fn load_matrix(path: &str) -> Result<IntMatrix> {
    Ok(matrix_from_json(&read_json(path)?)?)
}

fn parse_coords(s: &str, rank: usize, name: &str) -> Result<OrderElement> {
    let coords = s
        .split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| anyhow!("{name}: {t:?} is not an integer")))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        bail!("{name} has {} coordinates, the ring has rank {rank}", coords.len());
    }
    Ok(OrderElement::new(coords))
}

fn load_ideal(args: &IdealArgs) -> Result<(OrderPresentation, TwoGenIdeal, Option<BigInt>)> {
    let order = load_order(&args.ring)?;
    let (ideal, file_h) = match (&args.ideal, &args.alpha, &args.beta) {
        (Some(path), _, _) => ideal_from_json(&read_json(path)?, order.rank())?,
        (None, Some(a), Some(b)) => {
            let alpha = parse_coords(a, order.rank(), "alpha")?;
            let beta = parse_coords(b, order.rank(), "beta")?;
            (TwoGenIdeal::new(alpha, beta)?, None)
        }
        _ => bail!("give the ideal with --ideal FILE or --alpha and --beta"),
    };
    let h = args.h.clone().or(file_h);
    Ok((order, ideal, h))
}

fn validate_order(order: &OrderPresentation) -> Result<Output> {
    let report = order.validate();
    let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    Ok(Output {
        text: if lines.is_empty() { "ok".into() } else { lines.join("\n") },
        json: json!({"valid": report.is_valid(), "violations": lines}),
        ok: report.is_valid(),
    })
}

fn validate_presentation(ring: &FiniteRingPresentation) -> Result<Output> {
    let lines: Vec<String> = ring.validate().iter().map(|d| d.to_string()).collect();
    let valid = lines.is_empty();
    Ok(Output {
        text: if valid { "ok".into() } else { lines.join("\n") },
        json: json!({"valid": valid, "violations": lines}),
        ok: valid,
    })
}

fn norm(args: &IdealArgs) -> Result<Output> {
    let (order, ideal, h) = load_ideal(args)?;
    let h = dedekind_core::decide::resolve_h(&order, &ideal, h.as_ref())?;
    let basis = ideal_hnf_basis(&order, &ideal, &h)?;
    Ok(Output {
        text: format!("norm: {}\nh: {}\nhnf:\n{}", basis.norm, h, show(&basis.hnf)),
        json: json!({
            "norm": int_to_json(&basis.norm),
            "h": int_to_json(&h),
            "hnf": matrix_to_json(&basis.hnf),
        }),
        ok: true,
    })
}

fn show(m: &IntMatrix) -> String {
    m.to_string().trim_end().to_string()
}

fn default_h(a: &IntMatrix, h: Option<BigInt>) -> Result<BigInt> {
    if let Some(h) = h {
        return Ok(h);
    }
    if !a.is_square() {
        bail!("--h is required for a {}x{} matrix", a.rows(), a.cols());
    }
    let d = det_modular(a)?;
    if d == BigInt::from(0) {
        bail!("matrix is singular");
    }
    Ok(if d < BigInt::from(0) { -d } else { d })
}

fn hnf(a: &IntMatrix, h: Option<BigInt>) -> Result<Output> {
    let h = default_h(a, h)?;
    let r = hnf_with_transform(a, &h)?;
    Ok(Output {
        text: format!("H:\n{}\nU:\n{}", show(&r.h), show(&r.u)),
        json: json!({"h": int_to_json(&h), "H": matrix_to_json(&r.h), "U": matrix_to_json(&r.u)}),
        ok: true,
    })
}

fn snf(b: &IntMatrix, h: Option<BigInt>) -> Result<Output> {
    let h = default_h(b, h)?;
    let r = snf_with_transforms(b, &h)?;
    let d = r.divisors();
    let list = |xs: &[BigInt]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    Ok(Output {
        text: format!("diagonal: {}\nS:\n{}\nU:\n{}\nV:\n{}", list(&d), show(&r.s), show(&r.u), show(&r.v)),
        json: json!({
            "diagonal": ints_to_json(&d),
            "S": matrix_to_json(&r.s),
            "U": matrix_to_json(&r.u),
            "V": matrix_to_json(&r.v),
        }),
        ok: true,
    })
}

fn describe_presentation(ring: &FiniteRingPresentation) -> String {
    let m = ring.m();
    let d: Vec<String> = ring.moduli().iter().map(ToString::to_string).collect();
    let mut text = format!("m: {m}\nd: {}\n", d.join(" "));
    for i in 0..m {
        for j in i..m {
            let l: Vec<String> = ring.generator_product(i, j).coords.iter().map(ToString::to_string).collect();
            text.push_str(&format!("u{}*u{} = ({})\n", i + 1, j + 1, l.join(", ")));
        }
    }
    text
}

fn quotient(args: &IdealArgs) -> Result<Output> {
    let (order, ideal, h) = load_ideal(args)?;
    let h = dedekind_core::decide::resolve_h(&order, &ideal, h.as_ref())?;
    Ok(match output_basis(&order, &ideal, &h)? {
        QuotientBasis::UnitIdeal => Output {
            text: "unit ideal: the quotient is the zero ring".into(),
            json: json!({"unit_ideal": true, "ring": null, "certificate": null}),
            ok: true,
        },
        QuotientBasis::Quotient { ring, certificate } => Output {
            text: format!("norm: {}\n{}", certificate.norm, describe_presentation(&ring)),
            json: json!({
                "unit_ideal": false,
                "ring": presentation_to_json(&ring),
                "certificate": certificate_to_json(&certificate),
            }),
            ok: true,
        },
    })
}

/// Runs the oracle on `f` when the ring fits in `cap`; a disagreement is an
/// error, an oversized ring is reported as skipped.
fn oracle_check(
    check: &CheckArgs,
    answer: bool,
    f: impl FnOnce(usize) -> dedekind_core::Result<bool>,
) -> Result<Option<Value>> {
    if !check.verify {
        return Ok(None);
    }
    match f(check.cap) {
        Ok(expected) if expected == answer => Ok(Some(json!("agree"))),
        Ok(expected) => bail!("oracle disagrees: enumeration says {expected}, the algorithm says {answer}"),
        Err(dedekind_core::Error::CapExceeded { size, cap }) => {
            eprintln!("note: oracle skipped, ring has {size} elements (cap {cap})");
            Ok(Some(json!("skipped")))
        }
        Err(e) => Err(e.into()),
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut text = format!("{}\nkind: {}\nnorm: {}\nh: {}\n", v.answer(), v.kind.as_str(), v.norm, v.h);
    if let Some(c) = &v.certificate {
        let d: Vec<String> = c.divisors.iter().map(ToString::to_string).collect();
        text.push_str(&format!("d: {}\n", d.join(" ")));
        if let Some(p) = &c.characteristic {
            text.push_str(&format!("characteristic: {p}\n"));
        }
        if !c.tower_degrees.is_empty() {
            let t: Vec<String> = c.tower_degrees.iter().map(ToString::to_string).collect();
            text.push_str(&format!("tower degrees: {}\n", t.join(" ")));
        }
    }
    text
}

fn ideal_question(args: &IdealArgs, check: &CheckArgs, question: Question) -> Result<Output> {
    let (order, ideal, h) = load_ideal(args)?;
    let verdict = decide(&order, &ideal, h.as_ref(), question)?;
    let answer = verdict.answer();
    let oracle = oracle_check(check, answer, |cap| {
        let e = enumerate_quotient(&order, &ideal, cap)?;
        Ok(match question {
            Question::Prime => oracle_is_field(&e),
            Question::PrimePower => oracle_is_local(&e),
        })
    })?;
    let mut json = verdict_to_json(&verdict);
    let mut text = verdict_text(&verdict);
    if let Some(o) = oracle {
        text.push_str(&format!("oracle: {}\n", o.as_str().unwrap_or_default()));
        json["oracle"] = o;
    }
    Ok(Output { text, json, ok: answer })
}

fn ring_question(ring: &FiniteRingPresentation, check: &CheckArgs, field: bool) -> Result<Output> {
    let defects = ring.validate();
    if !defects.is_empty() {
        let lines: Vec<String> = defects.iter().map(|d| d.to_string()).collect();
        bail!("invalid presentation: {}", lines.join("; "));
    }
    let (answer, mut json, mut text) = if field {
        let report = field_test(ring);
        let json = json!({
            "question": "is-field",
            "answer": report.is_field(),
            "outcome": format!("{:?}", report.outcome),
            "characteristic": report.characteristic.as_ref().map_or(Value::Null, int_to_json),
            "tower_degrees": report.degrees,
        });
        (report.is_field(), json, format!("{}\noutcome: {:?}\n", report.is_field(), report.outcome))
    } else {
        let answer = is_local(ring);
        (answer, json!({"question": "is-local", "answer": answer}), format!("{answer}\n"))
    };
    let oracle = oracle_check(check, answer, |cap| {
        let e = enumerate_presentation(ring, cap)?;
        Ok(if field { oracle_is_field(&e) } else { oracle_is_local(&e) })
    })?;
    if let Some(o) = oracle {
        text.push_str(&format!("oracle: {}\n", o.as_str().unwrap_or_default()));
        json["oracle"] = o;
    }
    Ok(Output { text, json, ok: answer })
}
