//! Command-line surface. Every computation, verification sweep, and figure
//! emitter is reachable from here; outputs are deterministic and (in JSON
//! mode) round-trip byte-identically with counts as decimal strings.

use crate::genfunc::f_closed_coeffs;
use crate::necklaces::{count_freq_dividing, identity_audit};
use crate::numtheory::binomial;
use crate::oracle::{enumerate_necklaces, NECKLACE_LIMIT};
use crate::partitions::{diagram_ascii, diagram_svg, maximizers, q_table};
use crate::verify::{run_suite, Suite, SuiteReport};
use clap::builder::ArgGroup;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Default sweep cap for the oracle suite; CYCPART_MAX_ORACLE_M overrides it,
/// clamped to the enumeration hard limit.
const DEFAULT_ORACLE_CAP: u64 = 16;
const ORACLE_CAP_LIMIT: u64 = 30;
const DFT_SUITE_CAP: u64 = 10;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DataFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Oracle,
    Dft,
    Identities,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Dft => Suite::Dft,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cycpart",
    version,
    about = "Exact counting of cyclic-group subset sums and binary necklaces"
)]
struct Cli {
    /// Write the output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the table of t-subset counts of Z/m by sum residue.
    Qtable {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
    /// Exact distribution of the sum of t draws without replacement mod m.
    Prob {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
    /// Which residues maximize the count, with the witnessing gcd and case.
    Max {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
    /// Count or list binary necklaces by rotation frequency.
    Necklaces(NecklaceArgs),
    /// Totals and excluded classes of the partition/necklace match-up.
    Audit {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
    /// Run the invariant sweeps and report pass/fail per check.
    Verify {
        /// Sweep bound; defaults are per-check.
        #[arg(long = "max-m", value_name = "M",
              value_parser = clap::value_parser!(u64).range(1..))]
        max_m: Option<u64>,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
    /// Draw the count table as a wall of boxes.
    Diagram {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value = "ascii")]
        format: DiagramFormat,
    },
    /// Exact coefficients of the product polynomial at the u-th root of unity.
    Fpoly {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        u: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: DataFormat,
    },
}

#[derive(Args, Debug)]
#[command(group = ArgGroup::new("mode").required(true).multiple(false))]
struct NecklaceArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
    #[arg(allow_negative_numbers = true)]
    t: i64,
    /// Count necklaces whose rotation frequency divides N.
    #[arg(long, value_name = "N", group = "mode",
          value_parser = clap::value_parser!(u64).range(1..))]
    divides: Option<u64>,
    /// List the canonical words with their frequencies (m <= 24).
    #[arg(long, group = "mode")]
    list: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: DataFormat,
}

/// Parse args and execute, writing command output to `out`. Returns the
/// process exit code; clap-level messages (usage errors, --help) go to the
/// standard streams.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run_from_env() -> i32 {
    let stdout = std::io::stdout();
    run(std::env::args_os(), &mut stdout.lock())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let (rendered, code) = match cli.cmd {
        Cmd::Qtable { m, t, format } => (render_qtable(m, t, format), EXIT_OK),
        Cmd::Prob { m, t, format } => (render_prob(m, t, format)?, EXIT_OK),
        Cmd::Max { m, t, format } => (render_max(m, t, format)?, EXIT_OK),
        Cmd::Necklaces(args) => (render_necklaces(&args)?, EXIT_OK),
        Cmd::Audit { m, format } => (render_audit(m, format), EXIT_OK),
        Cmd::Verify { max_m, suite, format } => {
            let report = run_verify(max_m, suite)?;
            let code = if report.all_passed() { EXIT_OK } else { EXIT_VERIFY };
            (render_verify(&report, suite, format), code)
        }
        Cmd::Diagram { m, t, format } => {
            let text = match format {
                DiagramFormat::Ascii => diagram_ascii(m, t),
                DiagramFormat::Svg => diagram_svg(m, t),
            };
            (text, EXIT_OK)
        }
        Cmd::Fpoly { m, u, format } => (render_fpoly(m, u, format), EXIT_OK),
    };
    deliver(&cli.out, out, &rendered)?;
    Ok(code)
}

fn deliver(
    target: &Option<PathBuf>,
    out: &mut dyn Write,
    rendered: &str,
) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => out
            .write_all(rendered.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".to_string(),
                source,
            }),
    }
}

fn require_t_in_range(m: u64, t: i64) -> Result<u64, CliError> {
    if t < 0 || t as u64 > m {
        return Err(CliError::Usage(format!("t must lie in [0, {m}], got {t}")));
    }
    Ok(t as u64)
}

fn envelope(command: &str, params: Value, payload: Value) -> String {
    let v = json!({
        "command": command,
        "format": "json",
        "params": params,
        "payload": payload,
    });
    format!("{v}\n")
}

fn render_qtable(m: u64, t: i64, format: DataFormat) -> String {
    let table = q_table(m, t);
    match format {
        DataFormat::Tsv => {
            let mut s = String::from("n\tcount\n");
            for n in 0..m {
                s.push_str(&format!("{n}\t{}\n", table.at(n as i64)));
            }
            s.push_str(&format!("total\t{}\n", table.total()));
            s
        }
        DataFormat::Json => {
            let rows: Vec<Value> = (0..m)
                .map(|n| json!({"n": n.to_string(), "count": table.at(n as i64).to_string()}))
                .collect();
            envelope(
                "qtable",
                json!({"m": m.to_string(), "t": t.to_string()}),
                json!({"rows": rows, "total": table.total().to_string()}),
            )
        }
    }
}

fn render_prob(m: u64, t: i64, format: DataFormat) -> Result<String, CliError> {
    require_t_in_range(m, t)?;
    let table = q_table(m, t);
    let denom = binomial(m, t);
    let report = maximizers(m, t);
    let best: Vec<String> = report
        .maximizing_residues
        .iter()
        .map(u64::to_string)
        .collect();
    Ok(match format {
        DataFormat::Tsv => {
            let mut s = String::from("n\tprobability\n");
            for n in 0..m {
                s.push_str(&format!("{n}\t{}/{denom}\n", table.at(n as i64)));
            }
            s.push_str(&format!("best_guess\t{}\n", best.join(",")));
            s
        }
        DataFormat::Json => {
            let rows: Vec<Value> = (0..m)
                .map(|n| {
                    json!({
                        "n": n.to_string(),
                        "probability":
                            format!("{}/{denom}", table.at(n as i64)),
                    })
                })
                .collect();
            envelope(
                "prob",
                json!({"m": m.to_string(), "t": t.to_string()}),
                json!({"rows": rows, "denominator": denom.to_string(), "best_guess": best}),
            )
        }
    })
}

fn render_max(m: u64, t: i64, format: DataFormat) -> Result<String, CliError> {
    require_t_in_range(m, t)?;
    let report = maximizers(m, t);
    let residues: Vec<String> = report
        .maximizing_residues
        .iter()
        .map(u64::to_string)
        .collect();
    Ok(match format {
        DataFormat::Tsv => format!(
            "case\t{}\nwitness_gcd\t{}\nresidues\t{}\nmax_value\t{}\n",
            report.case_id,
            report.witness_gcd,
            residues.join(","),
            report.max_value
        ),
        DataFormat::Json => envelope(
            "max",
            json!({"m": m.to_string(), "t": t.to_string()}),
            json!({
                "case": report.case_id.to_string(),
                "witness_gcd": report.witness_gcd.to_string(),
                "residues": residues,
                "max_value": report.max_value.to_string(),
            }),
        ),
    })
}

fn render_necklaces(args: &NecklaceArgs) -> Result<String, CliError> {
    let t = require_t_in_range(args.m, args.t)?;
    if let Some(n) = args.divides {
        let count = count_freq_dividing(args.m, t, n);
        return Ok(match args.format {
            DataFormat::Tsv => format!("count\t{count}\n"),
            DataFormat::Json => envelope(
                "necklaces",
                json!({
                    "m": args.m.to_string(),
                    "t": t.to_string(),
                    "divides": n.to_string(),
                }),
                json!({"count": count.to_string()}),
            ),
        });
    }
    // --list
    if args.m > NECKLACE_LIMIT {
        return Err(CliError::Usage(format!(
            "--list supports m <= {NECKLACE_LIMIT}, got {}",
            args.m
        )));
    }
    let words = enumerate_necklaces(args.m, t as i64);
    Ok(match args.format {
        DataFormat::Tsv => {
            let mut s = String::from("word\tfrequency\n");
            for w in &words {
                s.push_str(&format!("{}\t{}\n", w.word_string(), w.frequency));
            }
            s
        }
        DataFormat::Json => {
            let rows: Vec<Value> = words
                .iter()
                .map(|w| {
                    json!({
                        "word": w.word_string(),
                        "frequency": w.frequency.to_string(),
                    })
                })
                .collect();
            envelope(
                "necklaces",
                json!({"m": args.m.to_string(), "t": t.to_string(), "list": "true"}),
                json!({"rows": rows}),
            )
        }
    })
}

fn render_audit(m: u64, format: DataFormat) -> String {
    let audit = identity_audit(m);
    match format {
        DataFormat::Tsv => {
            let mut s = format!(
                "partition_total\t{}\nnecklace_total\t{}\nexcluded_total\t{}\n",
                audit.partition_total,
                audit.necklace_total,
                audit.excluded_total()
            );
            s.push_str("t\tfrequency\tcount\n");
            for e in &audit.excluded {
                s.push_str(&format!("{}\t{}\t{}\n", e.t, e.frequency, e.count));
            }
            s
        }
        DataFormat::Json => {
            let excluded: Vec<Value> = audit
                .excluded
                .iter()
                .map(|e| {
                    json!({
                        "t": e.t.to_string(),
                        "frequency": e.frequency.to_string(),
                        "count": e.count.to_string(),
                    })
                })
                .collect();
            envelope(
                "audit",
                json!({"m": m.to_string()}),
                json!({
                    "partition_total": audit.partition_total.to_string(),
                    "necklace_total": audit.necklace_total.to_string(),
                    "excluded_total": audit.excluded_total().to_string(),
                    "excluded": excluded,
                }),
            )
        }
    }
}

/// Resolve the oracle sweep cap: CYCPART_MAX_ORACLE_M when set (clamped to
/// the enumeration limit), else the built-in default.
fn resolve_oracle_cap() -> Result<u64, CliError> {
    match std::env::var("CYCPART_MAX_ORACLE_M") {
        Ok(raw) => {
            let v: u64 = raw.trim().parse().map_err(|_| {
                CliError::Usage(format!(
                    "CYCPART_MAX_ORACLE_M must be a positive integer, got {raw:?}"
                ))
            })?;
            Ok(v.clamp(1, ORACLE_CAP_LIMIT))
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_CAP),
        Err(e) => Err(CliError::Usage(format!("CYCPART_MAX_ORACLE_M: {e}"))),
    }
}

fn run_verify(max_m: Option<u64>, suite: SuiteArg) -> Result<SuiteReport, CliError> {
    let oracle_cap = resolve_oracle_cap()?;
    if let Some(m) = max_m {
        match suite {
            SuiteArg::Oracle if m > oracle_cap => {
                return Err(CliError::Usage(format!(
                    "--max-m for the oracle suite is capped at {oracle_cap} \
                     (raise CYCPART_MAX_ORACLE_M up to {ORACLE_CAP_LIMIT})"
                )));
            }
            SuiteArg::Dft if m > DFT_SUITE_CAP => {
                return Err(CliError::Usage(format!(
                    "--max-m for the dft suite is capped at {DFT_SUITE_CAP}"
                )));
            }
            _ => {}
        }
    }
    Ok(run_suite(suite.into(), max_m, oracle_cap))
}

fn render_verify(report: &SuiteReport, suite: SuiteArg, format: DataFormat) -> String {
    match format {
        DataFormat::Tsv => {
            let mut s = String::new();
            for e in &report.entries {
                match &e.result {
                    Ok(cases) => s.push_str(&format!(
                        "ok\t{}\tbound={}\tcases={cases}\n",
                        e.name, e.bound
                    )),
                    Err(cex) => s.push_str(&format!(
                        "FAIL\t{}\tbound={}\t{cex}\n",
                        e.name, e.bound
                    )),
                }
            }
            s.push_str(&format!(
                "result\t{}\n",
                if report.all_passed() { "pass" } else { "fail" }
            ));
            s
        }
        DataFormat::Json => {
            let checks: Vec<Value> = report
                .entries
                .iter()
                .map(|e| match &e.result {
                    Ok(cases) => json!({
                        "name": e.name,
                        "bound": e.bound.to_string(),
                        "status": "ok",
                        "cases": cases.to_string(),
                    }),
                    Err(cex) => json!({
                        "name": e.name,
                        "bound": e.bound.to_string(),
                        "status": "fail",
                        "counterexample": cex.to_string(),
                    }),
                })
                .collect();
            let suite_name = match suite {
                SuiteArg::Oracle => "oracle",
                SuiteArg::Dft => "dft",
                SuiteArg::Identities => "identities",
                SuiteArg::All => "all",
            };
            envelope(
                "verify",
                json!({"suite": suite_name}),
                json!({
                    "checks": checks,
                    "result": if report.all_passed() { "pass" } else { "fail" },
                }),
            )
        }
    }
}

fn render_fpoly(m: u64, u: u64, format: DataFormat) -> String {
    let row = f_closed_coeffs(m, u);
    let coeffs: Vec<String> = row.coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        DataFormat::Tsv => format!("{}\n", coeffs.join(" ")),
        DataFormat::Json => envelope(
            "fpoly",
            json!({"m": m.to_string(), "u": u.to_string()}),
            json!({"coefficients": coeffs}),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{CheckOutcome, Counterexample};

    fn capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(args.iter().copied(), &mut buf);
        (code, String::from_utf8(buf).expect("utf8 output"))
    }

    #[test]
    fn qtable_tsv_golden() {
        let (code, out) = capture(&["cycpart", "qtable", "6", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "n\tcount\n0\t2\n1\t3\n2\t2\n3\t3\n4\t2\n5\t3\ntotal\t15\n"
        );
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let (code, out) = capture(&["cycpart", "qtable", "8", "4", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(out.trim_end()).expect("valid json");
        assert_eq!(format!("{v}\n"), out);
        assert_eq!(v["payload"]["rows"][2]["count"], "10");
        assert_eq!(v["payload"]["total"], "70");
    }

    #[test]
    fn prob_shows_unreduced_fractions_and_best_guess() {
        let (code, out) = capture(&["cycpart", "prob", "6", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("1\t3/15\n"));
        assert!(out.contains("0\t2/15\n"));
        assert!(out.ends_with("best_guess\t1,3,5\n"));
        let (code, out) = capture(&["cycpart", "prob", "1", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("0\t1/1\n"));
    }

    #[test]
    fn max_reports_case_and_residues() {
        let (code, out) = capture(&["cycpart", "max", "6", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("case\t1\n"));
        assert!(out.contains("residues\t0,3\n"));
    }

    #[test]
    fn necklaces_modes() {
        let (code, out) = capture(&["cycpart", "necklaces", "8", "2", "--divides", "1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "count\t3\n");
        let (code, out) = capture(&["cycpart", "necklaces", "4", "2", "--list"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "word\tfrequency\n0011\t1\n0101\t2\n");
        // exactly one of --divides/--list is required
        let (code, _) = capture(&["cycpart", "necklaces", "4", "2"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&[
            "cycpart", "necklaces", "4", "2", "--list", "--divides", "1",
        ]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "necklaces", "25", "2", "--list"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _) = capture(&["cycpart", "qtable", "0", "2"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "prob", "6", "7"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "prob", "6", "-1"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "verify", "--max-m", "0"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "nosuch"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (code, _) = capture(&["cycpart", "--help"]);
        assert_eq!(code, EXIT_OK);
        let (code, _) = capture(&["cycpart", "--version"]);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn fpoly_prints_coefficient_row() {
        let (code, out) = capture(&["cycpart", "fpoly", "6", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1 -1 1 1 -1 1\n");
        let (code, out) = capture(&["cycpart", "fpoly", "5", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1 4 6 4 1\n");
    }

    #[test]
    fn audit_headline() {
        let (code, out) = capture(&["cycpart", "audit", "8"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with(
            "partition_total\t32\nnecklace_total\t36\nexcluded_total\t4\n"
        ));
        assert!(out.contains("2\t2\t1\n"));
        assert!(out.contains("8\t8\t1\n"));
    }

    #[test]
    fn diagram_ascii_wall() {
        let (code, out) = capture(&["cycpart", "diagram", "6", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, ".#.#.#\n######\n######\n");
    }

    #[test]
    fn verify_small_suite_passes() {
        let (code, out) = capture(&["cycpart", "verify", "--max-m", "4", "--suite", "oracle"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.ends_with("result\tpass\n"));
        assert!(out.contains("ok\tsubset-sum-oracle\tbound=4\t"));
    }

    #[test]
    fn verify_suite_caps_are_usage_errors() {
        let (code, _) = capture(&["cycpart", "verify", "--max-m", "17", "--suite", "oracle"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = capture(&["cycpart", "verify", "--max-m", "11", "--suite", "dft"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn failing_report_renders_fail_and_exit_two() {
        let report = SuiteReport {
            entries: vec![CheckOutcome {
                name: "demo-check",
                bound: 8,
                result: Err(Counterexample {
                    check: "demo-check",
                    location: "8,4,2".into(),
                    expected: "10".into(),
                    got: "9".into(),
                }),
            }],
        };
        let rendered = render_verify(&report, SuiteArg::All, DataFormat::Tsv);
        assert!(rendered.contains("FAIL\tdemo-check\tbound=8\t(8,4,2,10,9)\n"));
        assert!(rendered.ends_with("result\tfail\n"));
        assert!(!report.all_passed());
    }

    #[test]
    fn out_flag_writes_file() {
        let dir = tempfile::tempdir().expect("tempdir");
        let path = dir.path().join("table.tsv");
        let path_str = path.to_str().unwrap().to_string();
        let (code, out) = capture(&["cycpart", "qtable", "6", "2", "--out", &path_str]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
        let written = std::fs::read_to_string(&path).expect("file written");
        assert!(written.ends_with("total\t15\n"));
        // unwritable path is an I/O error
        let bad = dir.path().join("no/such/dir/x.tsv");
        let bad_str = bad.to_str().unwrap().to_string();
        let (code, _) = capture(&["cycpart", "qtable", "6", "2", "--out", &bad_str]);
        assert_eq!(code, EXIT_IO);
    }
}
