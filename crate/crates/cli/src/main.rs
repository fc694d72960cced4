//! `qform`: strict-positivity checks, invariant dumps, identity
//! verification, equivalence fuzzing and basis-change experiments for
//! binary quartic forms, in exact rational arithmetic.
//!
//! Coefficients are the five independent tensor components
//! `A1111 A1112 A1122 A1222 A2222`; the raw `x^3 y` monomial coefficient is
//! `4*A1112` (pass `--monomial` to enter raw monomial coefficients
//! instead). Exit status: 0 for positive / success, 1 for not positive (or
//! a failed verification), 2 for parse or usage errors.

use clap::{Parser, Subcommand};
use quartic_forms::algebra::{parse_rational, render_rational, Rational};
use quartic_forms::invariants::{compute_invariants, FormCoefficients, InvariantSet};
use quartic_forms::oracle::Profile;
use quartic_forms::positivity::{decide, Verdict};
use quartic_forms::tensor::{diagram_table, transform_form, BasisChange};
use quartic_forms::verify::{criterion_equivalence_fuzz, run_identity_suite, IdentityStatus};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "qform",
    version,
    about = "Exact positivity testing for binary quartic forms"
)]
struct Cli {
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strict positivity of one form (or a batch file of forms)
    Check {
        /// Five coefficients: A1111 A1112 A1122 A1222 A2222
        #[arg(allow_hyphen_values = true)]
        coeffs: Vec<String>,
        /// Batch input: one form per line, '#' comments allowed
        #[arg(long)]
        file: Option<PathBuf>,
        /// Interpret inputs as raw monomial coefficients of x^4 .. y^4
        #[arg(long)]
        monomial: bool,
        /// Also print the full invariant set
        #[arg(long)]
        invariants: bool,
    },
    /// Print every named invariant of a form
    Invariants {
        #[arg(allow_hyphen_values = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        monomial: bool,
    },
    /// Prove the polynomial identity suite and print the report
    Verify,
    /// Fuzz the two positivity criteria against the exact root-counting oracle
    Fuzz {
        /// Number of forms to test (>= 1)
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// uniform | sos | indefinite | boundary
        #[arg(long, default_value = "uniform")]
        profile: String,
        /// Where to write disagreeing forms (default fuzz-disagreements.txt)
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Apply a basis change and compare the invariants before and after
    Transform {
        /// Direct transition matrix, row-major: a,b,c,d
        #[arg(long)]
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        monomial: bool,
    },
    /// Dump the contraction-diagram table
    Diagrams,
}

/// Usage/parse failure carrying the message for exit status 2.
struct UsageError(String);

fn parse_coefficients(tokens: &[String], monomial: bool) -> Result<FormCoefficients, UsageError> {
    if tokens.len() != 5 {
        return Err(UsageError(format!(
            "expected 5 coefficients, got {}",
            tokens.len()
        )));
    }
    let mut values = Vec::with_capacity(5);
    for (i, tok) in tokens.iter().enumerate() {
        match parse_rational(tok) {
            Ok(v) => values.push(v),
            Err(_) => {
                return Err(UsageError(format!(
                    "cannot parse coefficient {} ('{tok}')",
                    i + 1
                )))
            }
        }
    }
    let array: [Rational; 5] = values.try_into().expect("exactly five");
    Ok(if monomial {
        FormCoefficients::from_monomial_coeffs(array)
    } else {
        FormCoefficients::from_array(array)
    })
}

fn read_batch(path: &Path, monomial: bool) -> Result<Vec<FormCoefficients>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let mut forms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        match FormCoefficients::parse_line(line) {
            Ok(None) => {}
            Ok(Some(c)) => forms.push(if monomial {
                FormCoefficients::from_monomial_coeffs(c.to_array())
            } else {
                c
            }),
            Err(e) => {
                return Err(UsageError(format!(
                    "{}:{}: {e}",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    if forms.is_empty() {
        return Err(UsageError(format!("{}: no forms found", path.display())));
    }
    Ok(forms)
}

fn gather_forms(
    coeffs: &[String],
    file: &Option<PathBuf>,
    monomial: bool,
) -> Result<Vec<FormCoefficients>, UsageError> {
    match (coeffs.is_empty(), file) {
        (false, None) => Ok(vec![parse_coefficients(coeffs, monomial)?]),
        (true, Some(path)) => read_batch(path, monomial),
        (false, Some(_)) => Err(UsageError(
            "give either inline coefficients or --file, not both".into(),
        )),
        (true, None) => Err(UsageError(
            "no input: give five coefficients or --file PATH".into(),
        )),
    }
}

fn invariants_json(inv: &InvariantSet) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in inv.key_values() {
        map.insert(k.to_string(), Value::String(v));
    }
    Value::Object(map)
}

fn verdict_json(form: &FormCoefficients, v: &Verdict) -> Value {
    json!({
        "version": VERSION,
        "form": form.format_line(),
        "positive": v.positive,
        "path": v.path.as_str(),
        "theorems_agree": v.theorems_agree,
        "invariants": invariants_json(&v.invariants),
    })
}

fn cmd_check(
    forms: &[FormCoefficients],
    json: bool,
    with_invariants: bool,
) -> Result<ExitCode, UsageError> {
    let mut any_not_positive = false;
    for form in forms {
        let verdict = decide(form).map_err(|d| UsageError(format!("internal: {d}")))?;
        if !verdict.positive {
            any_not_positive = true;
        }
        if json {
            println!("{}", verdict_json(form, &verdict));
        } else {
            println!(
                "{}: {} (path {})",
                form,
                if verdict.positive {
                    "positive"
                } else {
                    "not positive"
                },
                verdict.path
            );
            if with_invariants {
                for (k, v) in verdict.invariants.key_values() {
                    println!("  {k} = {v}");
                }
            }
        }
    }
    Ok(ExitCode::from(u8::from(any_not_positive)))
}

fn cmd_invariants(forms: &[FormCoefficients], json: bool) -> ExitCode {
    for form in forms {
        let inv = compute_invariants(form);
        if json {
            println!(
                "{}",
                json!({
                    "version": VERSION,
                    "form": form.format_line(),
                    "invariants": invariants_json(&inv),
                })
            );
        } else {
            println!("{form}:");
            for (k, v) in inv.key_values() {
                println!("  {k} = {v}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(json: bool) -> ExitCode {
    let report = run_identity_suite();
    if json {
        let entries: Vec<Value> = report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "label": e.label,
                    "status": e.status.as_str(),
                    "difference": e.difference_text(),
                    "millis": e.millis as u64,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "version": VERSION,
                "all_asserted_proved": report.all_asserted_proved(),
                "entries": entries,
            })
        );
    } else {
        print!("{}", report.render_text());
        let (proved, reported): (usize, usize) =
            report
                .entries
                .iter()
                .fold((0, 0), |(p, r), e| match e.status {
                    IdentityStatus::Proved => (p + 1, r),
                    IdentityStatus::ReportedOnly => (p, r + 1),
                    IdentityStatus::Failed => (p, r),
                });
        println!(
            "{proved} proved, {reported} reported-only, {} failed",
            report.entries.len() - proved - reported
        );
    }
    ExitCode::from(u8::from(!report.all_asserted_proved()))
}

fn cmd_fuzz(
    count: u64,
    seed: u64,
    profile: &str,
    fixtures: Option<PathBuf>,
    json: bool,
) -> Result<ExitCode, UsageError> {
    if count == 0 {
        return Err(UsageError("--count must be at least 1".into()));
    }
    let profile: Profile = profile.parse().map_err(UsageError)?;
    let report = criterion_equivalence_fuzz(count, seed, profile);
    let fixture_path = fixtures.unwrap_or_else(|| PathBuf::from("fuzz-disagreements.txt"));
    if !report.passed() {
        let mut text = format!("# equivalence disagreements: profile {profile}, seed {seed}\n");
        for form in &report.disagreements {
            text.push_str(&form.format_line());
            text.push('\n');
        }
        std::fs::write(&fixture_path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", fixture_path.display())))?;
    }
    if json {
        println!(
            "{}",
            json!({
                "version": VERSION,
                "profile": profile.as_str(),
                "seed": seed,
                "tested": report.tested,
                "disagreements": report.disagreements.iter()
                    .map(|f| f.format_line()).collect::<Vec<_>>(),
                "forms_per_second": report.throughput(),
                "fixtures": if report.passed() { Value::Null }
                            else { Value::String(fixture_path.display().to_string()) },
            })
        );
    } else {
        if profile == Profile::Boundary {
            // the boundary profile is a short curated cycle: list verdicts
            let source = quartic_forms::oracle::FormGenerator::new(seed, profile);
            for i in 0..count.min(32) {
                let form = source.form_at(i);
                let verdict = decide(&form).map_err(|d| UsageError(format!("internal: {d}")))?;
                println!(
                    "{}: {} (path {})",
                    form,
                    if verdict.positive {
                        "positive"
                    } else {
                        "not positive"
                    },
                    verdict.path
                );
            }
        }
        println!(
            "{} tested, {} disagreements ({:.0} forms/s, profile {profile}, seed {seed})",
            report.tested,
            report.disagreements.len(),
            report.throughput()
        );
        if !report.passed() {
            println!("disagreeing forms written to {}", fixture_path.display());
        }
    }
    Ok(ExitCode::from(u8::from(!report.passed())))
}

fn cmd_transform(
    matrix: &str,
    form: &FormCoefficients,
    json: bool,
) -> Result<ExitCode, UsageError> {
    let entries: Vec<&str> = matrix
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if entries.len() != 4 {
        return Err(UsageError(format!(
            "--matrix needs 4 entries a,b,c,d, got {}",
            entries.len()
        )));
    }
    let mut vals = Vec::with_capacity(4);
    for (i, tok) in entries.iter().enumerate() {
        vals.push(
            parse_rational(tok).map_err(|_| {
                UsageError(format!("cannot parse matrix entry {} ('{tok}')", i + 1))
            })?,
        );
    }
    let basis = BasisChange::from_direct([
        [vals[0].clone(), vals[1].clone()],
        [vals[2].clone(), vals[3].clone()],
    ])
    .map_err(|_| UsageError("singular matrix".into()))?;

    let moved = transform_form(form, &basis);
    let before = compute_invariants(form);
    let after = compute_invariants(&moved);
    let laws = [
        ("beta", 4, &before.beta, &after.beta),
        ("gamma", 6, &before.gamma, &after.gamma),
        ("i0", 12, &before.i0, &after.i0),
    ];
    let mut all_hold = true;
    let mut law_rows = Vec::new();
    for (name, weight, old, new) in laws {
        let factor = basis.det_t_power(weight);
        let holds = *old == factor.clone() * new;
        all_hold &= holds;
        law_rows.push((name, weight, old.clone(), new.clone(), factor, holds));
    }
    if json {
        println!(
            "{}",
            json!({
                "version": VERSION,
                "form": form.format_line(),
                "transformed": moved.format_line(),
                "det_t": render_rational(basis.det_t()),
                "laws": law_rows.iter().map(|(name, weight, old, new, factor, holds)| json!({
                    "invariant": name,
                    "weight": weight,
                    "before": render_rational(old),
                    "after": render_rational(new),
                    "det_t_power": render_rational(factor),
                    "holds": holds,
                })).collect::<Vec<_>>(),
                "all_laws_hold": all_hold,
            })
        );
    } else {
        println!("transformed coefficients: {}", moved.format_line());
        println!("det T = {}", render_rational(basis.det_t()));
        for (name, weight, old, new, factor, holds) in &law_rows {
            println!(
                "  {name}: {} -> {}; (det T)^{weight} = {}, law {}",
                render_rational(old),
                render_rational(new),
                render_rational(factor),
                if *holds { "holds exactly" } else { "VIOLATED" }
            );
        }
    }
    // the laws are theorems; a violation would be an internal defect
    Ok(ExitCode::from(u8::from(!all_hold) * 2))
}

fn cmd_diagrams(json: bool) -> ExitCode {
    let table = diagram_table();
    if json {
        let rows: Vec<Value> = table
            .iter()
            .map(|d| {
                json!({
                    "name": d.name,
                    "nodes": d.nodes,
                    "bonds": d.bonds.iter()
                        .map(|b| format!("{}.{}-{}.{}", b.k.node, b.k.slot, b.j.node, b.j.slot))
                        .collect::<Vec<_>>(),
                    "free": d.free.iter()
                        .map(|s| format!("{}.{}", s.node, s.slot))
                        .collect::<Vec<_>>(),
                    "weight": d.weight,
                })
            })
            .collect();
        println!("{}", json!({ "version": VERSION, "diagrams": rows }));
    } else {
        println!("name        weight nodes                bonds (first endpoint carries the + assignment) | free slots");
        for d in table {
            let bonds: Vec<String> = d
                .bonds
                .iter()
                .map(|b| format!("{}.{}-{}.{}", b.k.node, b.k.slot, b.j.node, b.j.slot))
                .collect();
            let free: Vec<String> = d
                .free
                .iter()
                .map(|s| format!("{}.{}", s.node, s.slot))
                .collect();
            println!(
                "{:<11} {:>5}  {:<20} {} | {}",
                d.name,
                d.weight,
                d.nodes.join(","),
                bonds.join(" "),
                if free.is_empty() {
                    "scalar".to_string()
                } else {
                    free.join(" ")
                }
            );
        }
    }
    ExitCode::SUCCESS
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match &cli.command {
        Command::Check {
            coeffs,
            file,
            monomial,
            invariants,
        } => {
            let forms = gather_forms(coeffs, file, *monomial)?;
            cmd_check(&forms, cli.json, *invariants)
        }
        Command::Invariants {
            coeffs,
            file,
            monomial,
        } => {
            let forms = gather_forms(coeffs, file, *monomial)?;
            Ok(cmd_invariants(&forms, cli.json))
        }
        Command::Verify => Ok(cmd_verify(cli.json)),
        Command::Fuzz {
            count,
            seed,
            profile,
            fixtures,
        } => cmd_fuzz(*count, *seed, profile, fixtures.clone(), cli.json),
        Command::Transform {
            matrix,
            coeffs,
            monomial,
        } => {
            let form = parse_coefficients(coeffs, *monomial)?;
            cmd_transform(matrix, &form, cli.json)
        }
        Command::Diagrams => Ok(cmd_diagrams(cli.json)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
