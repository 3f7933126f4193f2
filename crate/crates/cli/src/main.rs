//! `liemult` — exact weight multiplicities for the rank-two simple Lie
//! algebras A2, C2 (alias B2) and G2.
//!
//! Exit codes: 0 success/agreement, 2 usage error, 3 mathematical
//! disagreement (methods differ or a verification suite fails), 4 internal
//! assertion failure.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use liemult_core::closed::{mu_closed, FormulaError};
use liemult_core::freudenthal::{freudenthal_table, oracle_multiplicity};
use liemult_core::kernel::KernelError;
use liemult_core::lie::{dominant_representative, weyl_dim, weyl_orbit, AlgebraId, Weight};
use liemult_core::multgen::{
    a_series, mult_from_gf, reconstruct_g2, G2_NUMERATOR_Y_DEGREES, G2_T_DEGREE_GUESS,
};
use liemult_core::report::{MultiplicityRecord, SuiteReport};
use liemult_core::verify::{
    suite_cg_g2, suite_characters, suite_checksums, suite_dim_gf, suite_h_reconstruct,
    suite_min_form, suite_pde_g2, suite_three_way,
};

#[derive(Parser)]
#[command(
    name = "liemult",
    version,
    about = "Exact weight multiplicities for the rank-two simple Lie algebras (A2, C2/B2, G2)",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format (defaults from LIEMULT_FORMAT when set).
    #[arg(
        long,
        global = true,
        value_enum,
        env = "LIEMULT_FORMAT",
        default_value_t = Format::Text
    )]
    format: Format,

    /// Write the output to this file instead of stdout.  For
    /// `reconstruct-g2` this names the artifact file (default
    /// g2-numerator.txt; `-` sends the artifact itself to stdout).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Genfun,
    Freudenthal,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    ThreeWay,
    Characters,
    CgG2,
    PdeG2,
    DimGf,
    MinForm,
    HReconstruct,
    Checksums,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiplicity of the weight (m, n) in the irreducible representation
    /// with highest weight (p, q).  Non-dominant (m, n) are reflected to
    /// their dominant representative (reported in the output).
    Mult {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        p: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Which computation to run; `all` cross-checks every applicable one.
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Formal character of the irreducible representation (p, q), as a
    /// Laurent polynomial in x1, x2.
    Character {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        p: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        q: i64,
    },
    /// Dimension of the irreducible representation (p, q).
    Dim {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        p: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        q: i64,
    },
    /// Dominant weights of the irreducible (p, q) with multiplicities,
    /// Weyl-orbit sizes and the dimension checksum.
    Table {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        p: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        q: i64,
    },
    /// Series whose (p, q) coefficient is the multiplicity of the fixed
    /// weight (m, n) in the irreducible (p, q), tabulated for p, q <= order.
    ASeries {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
        order: i64,
    },
    /// Run verification suites and report mismatches.
    Verify {
        /// Suite to run (repeatable).  Omit to run every suite.
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
        /// Restrict algebra-indexed suites to one algebra.
        #[arg(long, value_parser = parse_algebra)]
        alg: Option<AlgebraId>,
        /// Highest-weight bound for three-way and characters.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(0..))]
        pmax: i64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(0..))]
        qmax: i64,
        /// Series order for pde-g2 and dim-gf.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(0..))]
        order: i64,
        /// Domain bound for min-form and checksums.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(i64).range(0..))]
        bound: i64,
    },
    /// Reconstruct the G2 multiplicity-series numerator from the printed
    /// denominator, audit it against the recursion, and write the 24
    /// coefficient slots to a file.
    ReconstructG2 {
        /// Initial t-degree cap for the reconstruction window.
        #[arg(long, default_value_t = G2_T_DEGREE_GUESS, value_parser = clap::value_parser!(i32).range(1..))]
        t_guess: i32,
    },
}

fn parse_algebra(s: &str) -> Result<AlgebraId, String> {
    s.parse()
}

/// Failures past argument parsing: exit 3 for mathematical disagreement,
/// exit 4 for internal errors.
enum Failure {
    Disagreement(String),
    Internal(String),
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// A command's rendered output, where to send it, and the exit code.
struct CmdOutput {
    body: String,
    dest: Dest,
    exit: i32,
}

enum Dest {
    /// Honor `--output`, defaulting to stdout.
    Default,
    Stdout,
}

impl CmdOutput {
    fn ok(body: String) -> Self {
        CmdOutput {
            body,
            dest: Dest::Default,
            exit: 0,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let run = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli)));
    let code = match run {
        Ok(Ok(out)) => {
            let emitted = match out.dest {
                Dest::Default => emit(cli.output.as_deref(), &out.body),
                Dest::Stdout => emit(None, &out.body),
            };
            match emitted {
                Ok(()) => out.exit,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    4
                }
            }
        }
        Ok(Err(Failure::Disagreement(msg))) => {
            eprintln!("disagreement: {msg}");
            3
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            4
        }
        // The default panic hook has already printed the panic message.
        Err(_) => {
            eprintln!("internal assertion failure (exit 4)");
            4
        }
    };
    std::process::exit(code);
}

fn emit(path: Option<&std::path::Path>, body: &str) -> std::io::Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::write(p, text),
        _ => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<CmdOutput, Failure> {
    match &cli.command {
        Cmd::Mult {
            algebra,
            p,
            q,
            m,
            n,
            method,
        } => cmd_mult(*algebra, *p, *q, *m, *n, *method, cli.format),
        Cmd::Character { algebra, p, q } => cmd_character(*algebra, *p, *q, cli.format),
        Cmd::Dim { algebra, p, q } => cmd_dim(*algebra, *p, *q, cli.format),
        Cmd::Table { algebra, p, q } => cmd_table(*algebra, *p, *q, cli.format),
        Cmd::ASeries {
            algebra,
            m,
            n,
            order,
        } => cmd_a_series(*algebra, *m, *n, *order, cli.format),
        Cmd::Verify {
            suites,
            alg,
            pmax,
            qmax,
            order,
            bound,
        } => cmd_verify(suites, *alg, *pmax, *qmax, *order, *bound, cli.format),
        Cmd::ReconstructG2 { t_guess } => {
            cmd_reconstruct_g2(*t_guess, cli.output.as_deref(), cli.format)
        }
    }
}

/// Render any serializable value as canonical JSON: object keys sorted (the
/// value layer uses ordered maps), pretty-printed, so that parsing the
/// output and re-rendering it reproduces the bytes exactly.
fn render_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let v = serde_json::to_value(value).map_err(|e| Failure::Internal(e.to_string()))?;
    serde_json::to_string_pretty(&v).map_err(|e| Failure::Internal(e.to_string()))
}

/// Exact integers in JSON: plain numbers when they fit a machine word,
/// decimal strings beyond that (never floats).
fn int_value(v: i128) -> serde_json::Value {
    if let Ok(n) = i64::try_from(v) {
        json!(n)
    } else if let Ok(n) = u64::try_from(v) {
        json!(n)
    } else {
        json!(v.to_string())
    }
}

const CSV_HEADER: &str = "algebra,p,q,m,n,method,value";

fn csv_row(
    algebra: AlgebraId,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    method: &str,
    value: &str,
) -> String {
    format!("{algebra},{p},{q},{m},{n},{method},{value}")
}

fn weight_str(w: Weight) -> String {
    format!("({}, {})", w[0], w[1])
}

fn cmd_mult(
    algebra: AlgebraId,
    p: i64,
    q: i64,
    m: i64,
    n: i64,
    method: Method,
    format: Format,
) -> Result<CmdOutput, Failure> {
    let dom = dominant_representative(algebra, [m, n]);
    let reflected = dom != [m, n];
    let wants = |which: Method| method == Method::All || method == which;

    let mut records: Vec<MultiplicityRecord> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut push = |name: &str, value: u64| {
        records.push(MultiplicityRecord {
            algebra: algebra.to_string(),
            p,
            q,
            m: dom[0],
            n: dom[1],
            method: name.to_string(),
            value,
        });
    };

    if wants(Method::Formula) {
        match mu_closed(algebra, p, q, dom[0], dom[1]) {
            Ok(v) if v >= 0 => push("formula", v as u64),
            Ok(v) => {
                return Err(Failure::Disagreement(format!(
                    "{algebra} ({p}, {q}) weight {}: formula produced {v}, but multiplicities are nonnegative",
                    weight_str(dom)
                )))
            }
            Err(FormulaError::Unsupported { m, n }) => notes.push(format!(
                "formula: no closed form is tabulated for weight ({m}, {n}); only m + n <= 4 is covered (use genfun or freudenthal)"
            )),
            Err(FormulaError::Domain(msg)) => return Err(Failure::Internal(msg)),
        }
    }
    if wants(Method::Genfun) {
        push("genfun", mult_from_gf(algebra, p, q, dom[0], dom[1])?);
    }
    if wants(Method::Freudenthal) {
        push(
            "freudenthal",
            oracle_multiplicity(algebra, p, q, dom[0], dom[1]),
        );
    }

    let agreed: Option<u64> = match records.split_first() {
        Some((first, rest)) if rest.iter().all(|r| r.value == first.value) => Some(first.value),
        Some(_) => None,
        None => None,
    };
    if !records.is_empty() && agreed.is_none() {
        let diff = records
            .iter()
            .map(|r| format!("{} = {}", r.method, r.value))
            .collect::<Vec<_>>()
            .join(", ");
        let mut body = format!(
            "{algebra} ({p}, {q}) weight {}: methods disagree: {diff}",
            weight_str(dom)
        );
        if format == Format::Json {
            body = render_json(&json!({
                "agree": false,
                "algebra": algebra.to_string(),
                "highest_weight": [p, q],
                "notes": notes,
                "records": serde_json::to_value(&records).map_err(|e| Failure::Internal(e.to_string()))?,
                "weight": [dom[0], dom[1]],
            }))?;
        }
        return Ok(CmdOutput {
            body,
            dest: Dest::Default,
            exit: 3,
        });
    }

    if reflected {
        notes.insert(
            0,
            format!(
                "weight ({m}, {n}) is not dominant; computed its dominant representative {}",
                weight_str(dom)
            ),
        );
    }

    let body = match format {
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            for r in &records {
                lines.push(csv_row(
                    algebra,
                    r.p,
                    r.q,
                    r.m,
                    r.n,
                    &r.method,
                    &r.value.to_string(),
                ));
            }
            lines.join("\n")
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert(
                "agree".into(),
                json!(agreed.is_some() || records.is_empty()),
            );
            obj.insert("algebra".into(), json!(algebra.to_string()));
            obj.insert("highest_weight".into(), json!([p, q]));
            if let Some(v) = agreed {
                obj.insert("multiplicity".into(), json!(v));
            }
            obj.insert("notes".into(), json!(notes));
            obj.insert(
                "records".into(),
                serde_json::to_value(&records).map_err(|e| Failure::Internal(e.to_string()))?,
            );
            if reflected {
                obj.insert("requested_weight".into(), json!([m, n]));
            }
            obj.insert("weight".into(), json!([dom[0], dom[1]]));
            render_json(&serde_json::Value::Object(obj))?
        }
        Format::Text => {
            let mut lines = vec![format!(
                "{algebra}, highest weight ({p}, {q}), weight {}",
                weight_str(dom)
            )];
            for note in &notes {
                lines.push(format!("note: {note}"));
            }
            for r in &records {
                lines.push(format!("  {:<12} {}", r.method, r.value));
            }
            match agreed {
                Some(v) if records.len() > 1 => {
                    lines.push(format!("all methods agree: multiplicity {v}"))
                }
                Some(v) => lines.push(format!("multiplicity {v}")),
                None => {}
            }
            lines.join("\n")
        }
    };
    Ok(CmdOutput::ok(body))
}

fn cmd_character(algebra: AlgebraId, p: i64, q: i64, format: Format) -> Result<CmdOutput, Failure> {
    let table = freudenthal_table(algebra, p, q);
    let character = table.character();
    let dim = weyl_dim(algebra, p, q);
    let body = match format {
        Format::Text => {
            format!("{algebra}, highest weight ({p}, {q})\ndimension {dim}\ncharacter: {character}")
        }
        Format::Json => render_json(&json!({
            "algebra": algebra.to_string(),
            "character": character.to_string(),
            "dimension": int_value(dim),
            "highest_weight": [p, q],
            "terms": character.num_terms(),
        }))?,
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            let mut rows: Vec<(Vec<i32>, String)> = character
                .terms()
                .map(|(e, c)| (e.0.clone(), c.to_string()))
                .collect();
            rows.sort();
            for (e, c) in rows {
                lines.push(csv_row(
                    algebra,
                    p,
                    q,
                    e[0] as i64,
                    e[1] as i64,
                    "character",
                    &c,
                ));
            }
            lines.join("\n")
        }
    };
    Ok(CmdOutput::ok(body))
}

fn cmd_dim(algebra: AlgebraId, p: i64, q: i64, format: Format) -> Result<CmdOutput, Failure> {
    let dim = weyl_dim(algebra, p, q);
    let body = match format {
        Format::Text => format!("{algebra}, highest weight ({p}, {q}): dimension {dim}"),
        Format::Json => render_json(&json!({
            "algebra": algebra.to_string(),
            "dimension": int_value(dim),
            "highest_weight": [p, q],
        }))?,
        Format::Csv => format!("{CSV_HEADER}\n{algebra},{p},{q},,,dimension,{dim}"),
    };
    Ok(CmdOutput::ok(body))
}

fn cmd_table(algebra: AlgebraId, p: i64, q: i64, format: Format) -> Result<CmdOutput, Failure> {
    let table = freudenthal_table(algebra, p, q);
    let mut rows: Vec<(Weight, u64, usize)> = table
        .dominant_entries()
        .map(|(w, mult)| (w, mult, weyl_orbit(algebra, w).len()))
        .collect();
    rows.sort_by_key(|(w, _, _)| (-(w[0] + w[1]), -w[0]));
    let checksum = table.dimension_checksum();
    let dim = weyl_dim(algebra, p, q);

    let body = match format {
        Format::Text => {
            let mut lines = vec![
                format!("{algebra}, highest weight ({p}, {q})"),
                format!("{:<10} {:>12} {:>6}", "weight", "multiplicity", "orbit"),
            ];
            for (w, mult, orbit) in &rows {
                lines.push(format!("{:<10} {:>12} {:>6}", weight_str(*w), mult, orbit));
            }
            lines.push(format!("checksum {checksum} (Weyl dimension {dim})"));
            lines.join("\n")
        }
        Format::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(w, mult, orbit)| {
                    json!({
                        "multiplicity": mult,
                        "orbit": orbit,
                        "weight": [w[0], w[1]],
                    })
                })
                .collect();
            render_json(&json!({
                "algebra": algebra.to_string(),
                "checksum": int_value(checksum),
                "dimension": int_value(dim),
                "highest_weight": [p, q],
                "rows": json_rows,
            }))?
        }
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            for (w, mult, _) in &rows {
                lines.push(csv_row(
                    algebra,
                    p,
                    q,
                    w[0],
                    w[1],
                    "freudenthal",
                    &mult.to_string(),
                ));
            }
            lines.join("\n")
        }
    };
    Ok(CmdOutput::ok(body))
}

fn cmd_a_series(
    algebra: AlgebraId,
    m: i64,
    n: i64,
    order: i64,
    format: Format,
) -> Result<CmdOutput, Failure> {
    let dom = dominant_representative(algebra, [m, n]);
    let series = a_series(algebra, dom[0], dom[1], order)?;
    let coeff = |p: i64, q: i64| -> Result<i128, Failure> {
        let c = series
            .coeff(&[p as i32, q as i32])
            .map_err(|e| Failure::Internal(e.to_string()))?;
        i128::try_from(&c).map_err(|_| Failure::Internal(format!("coefficient {c} out of range")))
    };

    let mut prologue = Vec::new();
    if dom != [m, n] {
        prologue.push(format!(
            "note: weight ({m}, {n}) is not dominant; computed its dominant representative {}",
            weight_str(dom)
        ));
    }

    let body = match format {
        Format::Text => {
            let mut lines = prologue;
            lines.insert(
                0,
                format!(
                    "{algebra}, weight {}: multiplicity in the irreducible (p, q), p, q <= {order}",
                    weight_str(dom)
                ),
            );
            let mut header = format!("{:>4}", "p\\q");
            for q in 0..=order {
                header.push_str(&format!(" {q:>5}"));
            }
            lines.push(header);
            for p in 0..=order {
                let mut line = format!("{p:>4}");
                for q in 0..=order {
                    line.push_str(&format!(" {:>5}", coeff(p, q)?));
                }
                lines.push(line);
            }
            lines.join("\n")
        }
        Format::Json => {
            let mut rows = Vec::new();
            for p in 0..=order {
                for q in 0..=order {
                    rows.push(json!({
                        "p": p,
                        "q": q,
                        "value": int_value(coeff(p, q)?),
                    }));
                }
            }
            render_json(&json!({
                "algebra": algebra.to_string(),
                "coefficients": rows,
                "order": order,
                "weight": [dom[0], dom[1]],
            }))?
        }
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            for p in 0..=order {
                for q in 0..=order {
                    lines.push(csv_row(
                        algebra,
                        p,
                        q,
                        dom[0],
                        dom[1],
                        "a-series",
                        &coeff(p, q)?.to_string(),
                    ));
                }
            }
            lines.join("\n")
        }
    };
    Ok(CmdOutput::ok(body))
}

fn cmd_verify(
    suites: &[Suite],
    alg: Option<AlgebraId>,
    pmax: i64,
    qmax: i64,
    order: i64,
    bound: i64,
    format: Format,
) -> Result<CmdOutput, Failure> {
    const ALL_SUITES: [Suite; 8] = [
        Suite::ThreeWay,
        Suite::Characters,
        Suite::CgG2,
        Suite::PdeG2,
        Suite::DimGf,
        Suite::MinForm,
        Suite::HReconstruct,
        Suite::Checksums,
    ];
    let selected: Vec<Suite> = if suites.is_empty() {
        ALL_SUITES.to_vec()
    } else {
        suites.to_vec()
    };
    let algebras: Vec<AlgebraId> = match alg {
        Some(a) => vec![a],
        None => AlgebraId::ALL.to_vec(),
    };

    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in selected {
        reports.push(match suite {
            Suite::ThreeWay => suite_three_way(&algebras, pmax, qmax),
            Suite::Characters => suite_characters(&algebras, pmax, qmax),
            Suite::CgG2 => suite_cg_g2(),
            Suite::PdeG2 => suite_pde_g2(order),
            Suite::DimGf => suite_dim_gf(order),
            Suite::MinForm => suite_min_form(bound),
            Suite::HReconstruct => suite_h_reconstruct(),
            Suite::Checksums => suite_checksums(&algebras, bound),
        });
    }
    let all_passed = reports.iter().all(|r| r.passed());

    let body = match format {
        Format::Text => {
            let mut lines = Vec::new();
            for r in &reports {
                lines.push(format!(
                    "suite {}: {} ({} cases, {} mismatches, {} identity checks, {} ms)",
                    r.suite,
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.cases,
                    r.mismatches.len(),
                    r.identities.len(),
                    r.elapsed_ms,
                ));
                for mm in &r.mismatches {
                    let values = mm
                        .values
                        .iter()
                        .map(|(k, v)| format!("{k} = {v}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    lines.push(format!(
                        "  mismatch: {} ({}, {}) weight ({}, {}): {values}",
                        mm.algebra, mm.p, mm.q, mm.m, mm.n
                    ));
                }
                for id in &r.identities {
                    if !id.pass {
                        lines.push(format!("  identity {}: FAIL — {}", id.name, id.detail));
                    }
                }
            }
            lines.push(format!(
                "overall: {}",
                if all_passed { "PASS" } else { "FAIL" }
            ));
            lines.join("\n")
        }
        Format::Json => render_json(&json!({
            "overall_pass": all_passed,
            "reports": serde_json::to_value(&reports).map_err(|e| Failure::Internal(e.to_string()))?,
        }))?,
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            for r in &reports {
                for mm in &r.mismatches {
                    for (method, value) in &mm.values {
                        lines.push(format!(
                            "{},{},{},{},{},{method},{value}",
                            mm.algebra, mm.p, mm.q, mm.m, mm.n
                        ));
                    }
                }
                for id in &r.identities {
                    lines.push(format!(
                        ",,,,,identity:{}:{},{}",
                        r.suite,
                        id.name.replace(',', ";"),
                        i32::from(id.pass)
                    ));
                }
            }
            lines.join("\n")
        }
    };
    Ok(CmdOutput {
        body,
        dest: Dest::Default,
        exit: if all_passed { 0 } else { 3 },
    })
}

fn cmd_reconstruct_g2(
    t_guess: i32,
    output: Option<&std::path::Path>,
    format: Format,
) -> Result<CmdOutput, Failure> {
    let rec = reconstruct_g2(t_guess)?;
    let artifact = rec.artifact();
    let numerator = rec.numerator();
    let path: PathBuf =
        output.map_or_else(|| PathBuf::from("g2-numerator.txt"), |p| p.to_path_buf());
    let to_stdout = path.as_os_str() == "-";
    let destination = if to_stdout {
        "stdout".to_string()
    } else {
        std::fs::write(&path, &artifact)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
        path.display().to_string()
    };

    let summary = match format {
        Format::Json => render_json(&json!({
            "checks": serde_json::to_value(&rec.checks).map_err(|e| Failure::Internal(e.to_string()))?,
            "num_terms": numerator.num_terms(),
            "output": destination,
            "passed": rec.passed(),
            "slots": (G2_NUMERATOR_Y_DEGREES[0] + 1) * (G2_NUMERATOR_Y_DEGREES[1] + 1),
            "t_cap": rec.t_cap,
            "t_degrees": rec.t_degrees,
            "y_degree_bounds": G2_NUMERATOR_Y_DEGREES,
        }))?,
        _ => {
            let mut lines = vec![format!(
                "reconstructed G2 numerator: {} terms, t-degrees ({}, {}), y-degrees within ({}, {}), window t-cap {}",
                numerator.num_terms(),
                rec.t_degrees[0],
                rec.t_degrees[1],
                G2_NUMERATOR_Y_DEGREES[0],
                G2_NUMERATOR_Y_DEGREES[1],
                rec.t_cap,
            )];
            for check in &rec.checks {
                lines.push(format!(
                    "  {}: {} — {}",
                    check.name,
                    if check.pass { "pass" } else { "FAIL" },
                    check.detail
                ));
            }
            lines.push(format!(
                "wrote {} coefficient slots to {destination}",
                (G2_NUMERATOR_Y_DEGREES[0] + 1) * (G2_NUMERATOR_Y_DEGREES[1] + 1)
            ));
            lines.join("\n")
        }
    };

    let exit = if rec.passed() { 0 } else { 3 };
    if to_stdout {
        // The artifact owns stdout; the summary moves to stderr.
        eprintln!("{summary}");
        Ok(CmdOutput {
            body: artifact,
            dest: Dest::Stdout,
            exit,
        })
    } else {
        Ok(CmdOutput {
            body: summary,
            dest: Dest::Stdout,
            exit,
        })
    }
}
