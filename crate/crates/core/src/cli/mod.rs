//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification identity fails, 2 on
//! usage or input errors.

pub mod render;
pub mod wire;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bch::{self, bch_terms, Family};
use crate::error::Error;
use crate::freealg::{Alphabet, NCPoly, Rational};
use crate::numeric::{
    convergence_scan, exact_exponential, random_assignment, triangular_assignment, triangular_pair,
    zassenhaus_apply, Assignment, AssignmentJson, DenseMatrix, ErrorReport, FIXTURE_SEED,
};
use crate::verify::{self, Suite};
use crate::zassenhaus::{
    expansion_terms, xmp_prime_form, ExpansionConfig, ExpansionTerm, Side, XmpTable,
};
use render::{
    latex_product, latex_script, latex_script_prime, latex_sum, latex_word_poly, text_product,
    text_script_prime, text_sum,
};
use wire::{
    BchJson, BenchJson, BenchRowJson, CheckJson, EvalJson, ExpandJson, PolyJson, RationalJson,
    SuiteJson, TermJson, VerifyJson, XmpJson,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MAX_EXPAND_DEGREE: usize = 24;
pub const MAX_XMP_M: usize = 12;
pub const MAX_BCH_DEGREE: usize = 10;
pub const MAX_NUMERIC_DEGREE: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BchForm {
    X,
    Y,
    Symmetrized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    Random,
    Triangular,
}

#[derive(Debug, Parser)]
#[command(
    name = "zassenhaus",
    version,
    about = "Explicit Zassenhaus and BCH product expansions with exact coefficients"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every composition term of the truncated prefactor of e^A.
    Expand {
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        /// Maximal total weight N.
        #[arg(long)]
        degree: usize,
        /// Maximal number of factors P per product.
        #[arg(long)]
        factors: Option<usize>,
    },
    /// Print X_{m,p} in the word basis and in nested-commutator form.
    Xmp { m: usize, p: usize },
    /// Run an identity suite: golden, xmp, induction, resum, duality, bch,
    /// classical or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Product expansion of e^X e^Y.
    Bch {
        #[arg(long, value_enum, default_value = "symmetrized")]
        form: BchForm,
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate the truncated expansion on matrices read from a JSON file.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        factors: Option<usize>,
    },
    /// Truncation error and wall-clock time per degree on seeded fixtures.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "4")]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long)]
        factors: Option<usize>,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "random")]
        fixture: Fixture,
        #[arg(long, default_value_t = FIXTURE_SEED)]
        seed: u64,
        /// Omit timings so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(format!("error: {e}"))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Expand {
            side,
            degree,
            factors,
        } => cmd_expand((*side).into(), *degree, *factors, cli.format),
        Command::Xmp { m, p } => cmd_xmp(*m, *p, cli.format),
        Command::Verify { suite } => return cmd_verify(suite, cli.format),
        Command::Bch { form, degree } => cmd_bch(*form, *degree, cli.format),
        Command::Eval {
            file,
            side,
            degree,
            factors,
        } => cmd_eval(file, (*side).into(), *degree, *factors, cli.format),
        Command::Bench {
            dims,
            degrees,
            factors,
            side,
            fixture,
            seed,
            no_timing,
        } => cmd_bench(&BenchArgs {
            dims,
            degrees,
            factors: *factors,
            side: (*side).into(),
            fixture: *fixture,
            seed: *seed,
            timing: !no_timing,
            format: cli.format,
        }),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = std::result::Result<Outcome, Outcome>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("wire types serialize");
    s.push('\n');
    s
}

fn check_degree(name: &str, value: usize, max: usize) -> std::result::Result<(), Outcome> {
    if value > max {
        return Err(Outcome::usage(format!(
            "error: {name} = {value} exceeds the limit {max}"
        )));
    }
    Ok(())
}

fn expansion_config(
    degree: usize,
    factors: Option<usize>,
    side: Side,
) -> std::result::Result<ExpansionConfig, Outcome> {
    ExpansionConfig::new(degree, factors, side).map_err(Outcome::from)
}

fn term_names(term: &ExpansionTerm, latex: bool) -> Vec<String> {
    term.factor_order()
        .into_iter()
        .map(|n| {
            if latex {
                latex_script('B', n)
            } else {
                format!("B_{n}")
            }
        })
        .collect()
}

pub fn cmd_expand(side: Side, degree: usize, factors: Option<usize>, format: Format) -> CmdResult {
    check_degree("degree", degree, MAX_EXPAND_DEGREE)?;
    let cfg = expansion_config(degree, factors, side)?;
    let terms = expansion_terms(&cfg);
    let out = match format {
        Format::Json => to_json(&ExpandJson {
            side: side.name().into(),
            degree,
            factors,
            unit: RationalJson::from(&Rational::from_integer(1.into())),
            terms: terms
                .iter()
                .map(|t| TermJson::new(&t.composition, &t.coefficient))
                .collect(),
        }),
        Format::Text => {
            let mut s = String::new();
            let cap = factors.map_or("none".to_string(), |p| p.to_string());
            let _ = writeln!(
                s,
                "# {side} expansion, degree <= {degree}, factor cap {cap}"
            );
            let _ = writeln!(s, "()\t1\t1");
            for t in &terms {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}",
                    t.composition,
                    t.coefficient,
                    term_names(t, false).join(" ")
                );
            }
            s
        }
        Format::Latex => {
            let mut ts = vec![(Rational::from_integer(1.into()), "1".to_string())];
            ts.extend(
                terms
                    .iter()
                    .map(|t| (t.coefficient.clone(), latex_product(&term_names(t, true)))),
            );
            let body = latex_sum(&ts);
            match side {
                Side::Right => format!("e^{{A+B}} = \\Big( {body} + \\ldots \\Big) e^{{A}}\n"),
                Side::Left => format!("e^{{A+B}} = e^{{A}} \\Big( {body} + \\ldots \\Big)\n"),
            }
        }
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_xmp(m: usize, p: usize, format: Format) -> CmdResult {
    if !(1..=MAX_XMP_M).contains(&m) || !(1..=m).contains(&p) {
        return Err(Outcome::usage(format!(
            "error: need 1 <= p <= m <= {MAX_XMP_M}, got m = {m}, p = {p}"
        )));
    }
    let poly = XmpTable::new().get(m, p).map_err(Outcome::from)?.clone();
    let form = xmp_prime_form(m, p).map_err(Outcome::from)?;
    // factor order B'_{n_p} ... B'_{n_1}
    let grouped = |latex: bool| -> Vec<(Rational, String)> {
        form.iter()
            .map(|(c, coeff)| {
                let names: Vec<String> = c
                    .parts()
                    .iter()
                    .rev()
                    .map(|&n| {
                        if latex {
                            latex_script_prime(n)
                        } else {
                            text_script_prime(n)
                        }
                    })
                    .collect();
                let body = if latex {
                    latex_product(&names)
                } else {
                    text_product(&names)
                };
                (coeff.clone(), body)
            })
            .collect()
    };
    let out = match format {
        Format::Json => to_json(&XmpJson {
            m,
            p,
            polynomial: PolyJson::new(&poly, Alphabet::AB),
            commutator_form: form.iter().map(|(c, r)| TermJson::new(c, r)).collect(),
        }),
        Format::Text => format!(
            "X_{{{m},{p}}} = {}\n        = {}\n",
            text_sum(&grouped(false)),
            poly.render(Alphabet::AB)
        ),
        Format::Latex => format!(
            "X_{{{m},{p}}} = {} = {}\n",
            latex_sum(&grouped(true)),
            latex_word_poly(&poly, Alphabet::AB)
        ),
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_verify(suite: &str, format: Format) -> Outcome {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::from(e),
    };
    let reports = verify::run(suite);
    let passed = reports.iter().all(|r| r.passed());
    let stdout = match format {
        Format::Json => to_json(&VerifyJson {
            passed,
            suites: reports
                .iter()
                .map(|r| SuiteJson {
                    suite: r.suite.name().into(),
                    passed: r.passed(),
                    checks: r
                        .checks
                        .iter()
                        .map(|c| CheckJson {
                            name: c.name.clone(),
                            passed: c.passed,
                            counterexample: c.counterexample.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &reports {
                for c in &r.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "[{tag}] {}: {}", r.suite, c.name);
                }
                let ok = r.checks.iter().filter(|c| c.passed).count();
                let _ = writeln!(
                    s,
                    "suite {}: {ok}/{} identities hold",
                    r.suite,
                    r.checks.len()
                );
            }
            s
        }
    };
    if passed {
        return Outcome::ok(stdout);
    }
    let failure = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| (r.suite, c)))
        .expect("some check failed");
    Outcome {
        code: EXIT_VERIFY_FAILED,
        stdout,
        stderr: format!(
            "first failure in suite {}: {}\n  lhs - rhs = {}\n",
            failure.0,
            failure.1.name,
            failure.1.counterexample.as_deref().unwrap_or("?")
        ),
    }
}

pub fn cmd_bch(form: BchForm, degree: usize, format: Format) -> CmdResult {
    check_degree("degree", degree, MAX_BCH_DEGREE)?;
    let (name, poly, family) = match form {
        BchForm::X => ("x", bch::bch_product_x(degree), Some(Family::ScriptX)),
        BchForm::Y => ("y", bch::bch_product_y(degree), Some(Family::ScriptY)),
        BchForm::Symmetrized => ("symmetrized", bch::bch_symmetrized(degree), None),
    };
    let terms = family.map(|f| bch_terms(f, degree));
    let out = match format {
        Format::Json => to_json(&BchJson {
            form: name.into(),
            degree,
            terms: terms.as_ref().map(|ts| {
                ts.iter()
                    .map(|t| TermJson::new(&t.composition, &t.coefficient))
                    .collect()
            }),
            polynomial: PolyJson::new(&poly, Alphabet::XY),
        }),
        Format::Text => {
            let mut s = String::new();
            if let Some(ts) = &terms {
                let letter = if form == BchForm::X { 'X' } else { 'Y' };
                let mut rows = vec![(Rational::from_integer(1.into()), "1".to_string())];
                rows.extend(ts.iter().map(|t| {
                    let names: Vec<String> = t
                        .factor_order()
                        .iter()
                        .map(|n| format!("{letter}_{n}"))
                        .collect();
                    (t.coefficient.clone(), names.join(" "))
                }));
                let _ = writeln!(s, "e^X e^Y = {} + ...", text_sum(&rows));
            }
            let _ = writeln!(s, "        = {} + ...", poly.render(Alphabet::XY));
            s
        }
        Format::Latex => {
            let mut s = String::new();
            if let Some(ts) = &terms {
                let letter = if form == BchForm::X { 'X' } else { 'Y' };
                let mut rows = vec![(Rational::from_integer(1.into()), "1".to_string())];
                rows.extend(ts.iter().map(|t| {
                    let names: Vec<String> = t
                        .factor_order()
                        .iter()
                        .map(|&n| latex_script(letter, n))
                        .collect();
                    (t.coefficient.clone(), latex_product(&names))
                }));
                let _ = writeln!(s, "e^{{X}} e^{{Y}} = {} + \\ldots", latex_sum(&rows));
            }
            let _ = writeln!(
                s,
                "e^{{X}} e^{{Y}} = {} + \\ldots",
                latex_word_poly(&poly, Alphabet::XY)
            );
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn read_assignment(path: &PathBuf) -> std::result::Result<Assignment, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::usage(format!("error: cannot read {}: {e}", path.display())))?;
    let json: AssignmentJson = serde_json::from_str(&text)
        .map_err(|e| Outcome::usage(format!("error: cannot parse {}: {e}", path.display())))?;
    Assignment::from_json(&json).map_err(Outcome::from)
}

fn text_matrix(m: &DenseMatrix) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>24.16e}")).collect();
        let _ = writeln!(s, "{}", cells.join(" "));
    }
    s
}

fn latex_matrix(m: &DenseMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| format!("{x:.16e}"))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        rows.join(" \\\\ ")
    )
}

pub fn cmd_eval(
    file: &PathBuf,
    side: Side,
    degree: usize,
    factors: Option<usize>,
    format: Format,
) -> CmdResult {
    check_degree("degree", degree, MAX_NUMERIC_DEGREE)?;
    let cfg = expansion_config(degree, factors, side)?;
    let a = read_assignment(file)?;
    let result = zassenhaus_apply(&a, &cfg);
    let oracle = exact_exponential(&a);
    let err = (&result - &oracle).frobenius_norm();
    let out = match format {
        Format::Json => to_json(&EvalJson {
            side: side.name().into(),
            degree,
            factors,
            result: result.to_json(),
            oracle: oracle.to_json(),
            frobenius_error: err,
        }),
        Format::Text => format!(
            "# {side} expansion, degree <= {degree}\n{}frobenius_error = {err:.6e}\n",
            text_matrix(&result)
        ),
        Format::Latex => format!(
            "{} \\quad \\|\\cdot - e^{{A+B}}\\|_F = {err:.6e}\n",
            latex_matrix(&result)
        ),
    };
    Ok(Outcome::ok(out))
}

struct BenchArgs<'a> {
    dims: &'a [usize],
    degrees: &'a [usize],
    factors: Option<usize>,
    side: Side,
    fixture: Fixture,
    seed: u64,
    timing: bool,
    format: Format,
}

fn bench_fixture(fixture: Fixture, dim: usize, seed: u64) -> Assignment {
    match (fixture, dim) {
        (Fixture::Random, _) => random_assignment(dim, 0.25, seed),
        (Fixture::Triangular, 2) => triangular_assignment(),
        (Fixture::Triangular, _) => triangular_pair(dim, 1.0, seed),
    }
}

fn cmd_bench(args: &BenchArgs<'_>) -> CmdResult {
    if args.degrees.is_empty() {
        return Err(Outcome::usage("error: --degrees needs at least one value"));
    }
    if args.dims.is_empty() || args.dims.contains(&0) {
        return Err(Outcome::usage("error: --dims needs positive dimensions"));
    }
    for &n in args.degrees {
        check_degree("degree", n, MAX_NUMERIC_DEGREE)?;
    }
    let fixture_name = match args.fixture {
        Fixture::Random => "random",
        Fixture::Triangular => "triangular",
    };
    let mut rows = Vec::new();
    for &dim in args.dims {
        let a = bench_fixture(args.fixture, dim, args.seed);
        let mut seconds = Vec::new();
        let mut report: Option<ErrorReport> = None;
        for (i, &n) in args.degrees.iter().enumerate() {
            let start = Instant::now();
            let one = convergence_scan(&a, &[n], args.side, args.factors).map_err(Outcome::from)?;
            seconds.push(start.elapsed().as_secs_f64());
            if i > 0 && n <= args.degrees[i - 1] {
                return Err(Outcome::from(Error::InvalidDegrees(
                    "degrees must be strictly ascending".into(),
                )));
            }
            match &mut report {
                Some(r) => r.rows.extend(one.rows),
                None => report = Some(one),
            }
        }
        let report = report.expect("at least one degree");
        for (row, secs) in report.rows.into_iter().zip(seconds) {
            rows.push(BenchRowJson {
                dim,
                fixture: fixture_name.into(),
                side: args.side.name().into(),
                total_degree: row.total_degree,
                factor_cap: row.factor_cap,
                frobenius_error: row.frobenius_error,
                terms_evaluated: row.terms_evaluated,
                seconds: args.timing.then_some(secs),
            });
        }
    }
    let out = match args.format {
        Format::Json => to_json(&BenchJson {
            seed: args.seed,
            rows,
        }),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            let _ = writeln!(s, "# seed {}", args.seed);
            let _ = writeln!(
                s,
                "dim\tfixture\tside\tN\tP\tfrobenius_error\tterms\tseconds"
            );
            for r in &rows {
                let cap = r.factor_cap.map_or("-".to_string(), |p| p.to_string());
                let secs = r.seconds.map_or("-".to_string(), |t| format!("{t:.3e}"));
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{cap}\t{:.6e}\t{}\t{secs}",
                    r.dim, r.fixture, r.side, r.total_degree, r.frobenius_error, r.terms_evaluated
                );
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

/// Parses an `expand --format json` document back into terms.
pub fn parse_expand_json(text: &str) -> crate::Result<Vec<ExpansionTerm>> {
    let doc: ExpandJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let side = match doc.side.as_str() {
        "right" => Side::Right,
        "left" => Side::Left,
        other => return Err(Error::Parse(format!("unknown side {other:?}"))),
    };
    doc.terms
        .iter()
        .map(|t| {
            let (composition, coefficient) = t.parse()?;
            Ok(ExpansionTerm {
                composition,
                coefficient,
                side,
            })
        })
        .collect()
}

/// Parses a polynomial document (`xmp` or `bch` JSON) back into an `NCPoly`.
pub fn parse_poly_json(text: &str) -> crate::Result<NCPoly> {
    let doc: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("zassenhaus").chain(args.iter().copied()))
    }

    #[test]
    fn expand_json_right() {
        let o = run_args(&[
            "expand", "--side", "right", "--degree", "2", "--format", "json",
        ]);
        assert_eq!(o.code, 0);
        let terms = parse_expand_json(&o.stdout).unwrap();
        let listed: Vec<(Vec<usize>, String)> = terms
            .iter()
            .map(|t| (t.composition.parts().to_vec(), t.coefficient.to_string()))
            .collect();
        assert_eq!(
            listed,
            vec![
                (vec![1], "1".to_string()),
                (vec![1, 1], "1/2".to_string()),
                (vec![2], "1".to_string())
            ]
        );
    }

    #[test]
    fn expand_json_left_sign() {
        let o = run_args(&[
            "expand", "--side", "left", "--degree", "2", "--format", "json",
        ]);
        let terms = parse_expand_json(&o.stdout).unwrap();
        let two = terms.iter().find(|t| t.composition.parts() == [2]).unwrap();
        assert_eq!(two.coefficient.to_string(), "-1");
    }

    #[test]
    fn expand_degree_zero() {
        let o = run_args(&["expand", "--degree", "0", "--format", "json"]);
        assert_eq!(o.code, 0);
        let doc: ExpandJson = serde_json::from_str(&o.stdout).unwrap();
        assert!(doc.terms.is_empty());
        assert_eq!(
            doc.unit,
            RationalJson {
                num: "1".into(),
                den: "1".into()
            }
        );
    }

    #[test]
    fn expand_rejects_bad_input() {
        assert_eq!(run_args(&["expand", "--degree", "-1"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(&["expand", "--degree", "3", "--factors", "0"]).code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["expand", "--degree", "99"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["expand"]).code, EXIT_USAGE);
    }

    #[test]
    fn expand_latex() {
        let o = run_args(&["expand", "--degree", "2", "--format", "latex"]);
        assert_eq!(
            o.stdout,
            "e^{A+B} = \\Big( 1 + \\mathscr{B}_{1} + \\frac{1}{2} (\\mathscr{B}_{1})^{2} + \\mathscr{B}_{2} + \\ldots \\Big) e^{A}\n"
        );
    }

    #[test]
    fn xmp_outputs() {
        let o = run_args(&["xmp", "4", "3", "--format", "latex"]);
        assert_eq!(o.code, 0);
        assert!(
            o.stdout.starts_with(
                "X_{4,3} = \\mathscr{B}'_{2} B^{2} + 2 B \\mathscr{B}'_{2} B + 3 B^{2} \\mathscr{B}'_{2} ="
            ),
            "{}",
            o.stdout
        );
        let o = run_args(&["xmp", "2", "1", "--format", "text"]);
        assert_eq!(o.stdout, "X_{2,1} = B'2\n        = AB - BA\n");
        let o = run_args(&["xmp", "3", "3", "--format", "json"]);
        let doc: XmpJson = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(doc.polynomial.parse().unwrap(), NCPoly::b().pow(3));
        assert_eq!(run_args(&["xmp", "3", "4"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["xmp", "13", "1"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["xmp", "0", "0"]).code, EXIT_USAGE);
    }

    #[test]
    fn verify_unknown_suite() {
        assert_eq!(run_args(&["verify", "everything"]).code, EXIT_USAGE);
    }

    #[test]
    fn verify_xmp_text() {
        let o = run_args(&["verify", "xmp"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.ends_with("suite xmp: 36/36 identities hold\n"));
    }

    #[test]
    fn bch_json_round_trip() {
        let o = run_args(&["bch", "--form", "y", "--degree", "3", "--format", "json"]);
        assert_eq!(o.code, 0);
        let doc: BchJson = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(doc.polynomial.parse().unwrap(), bch::taylor_product(3));
        assert_eq!(doc.terms.unwrap().len(), 7);
        assert_eq!(run_args(&["bch", "--degree", "11"]).code, EXIT_USAGE);
    }

    #[test]
    fn bench_usage_errors() {
        assert_eq!(run_args(&["bench"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bench", "--degrees", ""]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bench", "--degrees", "4,2"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(&["bench", "--degrees", "2", "--dims", "0"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_exits_zero() {
        let o = run_args(&["--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("expand"));
    }
}
