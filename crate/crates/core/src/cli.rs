//! Command-line front end: `eval`, `tabulate`, `verify`, `truncation-study`.
//!
//! Results go to the `out` writer, diagnostics to `err`. Exit codes are
//! 0 success, 1 failed verification, 2 usage or domain error, 3 non-convergence.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{Cell, OutputFormat, Table};
use crate::legendre::{self, DEFAULT_TOL};
use crate::verify::{self, GridSpec, IdentityReport, Spacing, Tolerances};
use crate::{Argument, Degree, Error, MaclaurinTruncation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGED: i32 = 3;

/// Replacement for a `--z-start` of exactly −1, which lies outside the domain.
pub const Z_START_SHIFT: f64 = -1.0 + 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "legendre-nu",
    version,
    about = "Legendre function P_nu(z), its nu-derivatives at nu = 0, and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one quantity at (nu, z)
    Eval(EvalArgs),
    /// Tabulate quantities over a z grid
    Tabulate(TabulateArgs),
    /// Run the identity verification suite
    Verify(VerifyArgs),
    /// Maximum Maclaurin truncation error per nu and order
    TruncationStudy(TruncationArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum What {
    P,
    D1,
    D2,
    D3,
    Maclaurin,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::P => "p",
            What::D1 => "d1",
            What::D2 => "d2",
            What::D3 => "d3",
            What::Maclaurin => "maclaurin",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Pretty,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Pretty => OutputFormat::Pretty,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpacingArg {
    Uniform,
    Chebyshev,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Self {
        match s {
            SpacingArg::Uniform => Spacing::Uniform,
            SpacingArg::Chebyshev => Spacing::Chebyshev,
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(long, default_value_t = 0.0)]
    nu: f64,
    #[arg(long)]
    z: f64,
    #[arg(long, value_enum)]
    what: What,
    /// Truncation order for `maclaurin`
    #[arg(long, default_value_t = 3)]
    order: u32,
    #[arg(long, value_enum, default_value = "pretty")]
    format: FormatArg,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ZGridArgs {
    #[arg(long = "z-start", default_value_t = -0.9)]
    start: f64,
    #[arg(long = "z-end", default_value_t = 1.0)]
    end: f64,
    #[arg(long, default_value_t = 101)]
    count: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    spacing: SpacingArg,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TabulateArgs {
    #[arg(long, default_value_t = 0.0)]
    nu: f64,
    #[command(flatten)]
    grid: ZGridArgs,
    /// Columns to emit; comma-separated or repeated
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [What::P, What::D1, What::D2, What::D3, What::Maclaurin])]
    what: Vec<What>,
    /// Truncation order for the `maclaurin` column
    #[arg(long, default_value_t = 3)]
    order: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Tolerance override `<identity>=<value>`; repeatable
    #[arg(long = "tol", value_name = "IDENTITY=VALUE")]
    tol: Vec<String>,
    /// Also run the first-integral and unsimplified-antiderivative checks
    #[arg(long)]
    extended: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: FormatArg,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TruncationArgs {
    #[arg(long = "nu-start", default_value_t = 0.0)]
    nu_start: f64,
    #[arg(long = "nu-end", default_value_t = 0.1)]
    nu_end: f64,
    #[arg(long = "nu-count", default_value_t = 5)]
    nu_count: usize,
    #[command(flatten)]
    grid: ZGridArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("write error: {e}"),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a, out, err),
        Command::Tabulate(a) => cmd_tabulate(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::TruncationStudy(a) => cmd_truncation_study(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn z_grid(args: &ZGridArgs, err: &mut dyn Write) -> Result<GridSpec<f64>, Failure> {
    let mut start = args.start;
    if start == -1.0 {
        writeln!(err, "warning: --z-start -1 is excluded from the domain; using {Z_START_SHIFT}")?;
        start = Z_START_SHIFT;
    }
    let grid = GridSpec::new(start, args.end, args.count, args.spacing.into())?;
    grid.require_within(-1.0, 1.0, true, false)?;
    Ok(grid)
}

/// Evaluates `what`; `Ok(None)` means the series did not converge.
fn evaluate(what: What, nu: Degree<f64>, z: Argument<f64>, trunc: MaclaurinTruncation) -> Option<f64> {
    match what {
        What::P => {
            let r = legendre::legendre_p(nu, z, DEFAULT_TOL).expect("static tolerance");
            r.converged.then_some(r.value)
        }
        What::D1 => Some(legendre::dp_dnu0(z)),
        What::D2 => Some(legendre::d2p_dnu2_0(z)),
        What::D3 => Some(legendre::d3p_dnu3_0(z)),
        What::Maclaurin => Some(legendre::maclaurin_p(nu, z, trunc)),
    }
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let z = Argument::new(a.z)?;
    let nu = Degree::new(a.nu)?;
    let trunc = MaclaurinTruncation::new(a.order)?;
    let Some(value) = evaluate(a.what, nu, z, trunc) else {
        writeln!(err, "error: series for P_nu(z) did not converge at nu = {}, z = {}", a.nu, a.z)?;
        return Ok(EXIT_NONCONVERGED);
    };
    match a.format {
        FormatArg::Pretty => writeln!(out, "{}", crate::format::fmt_real(value))?,
        f => {
            let mut t = Table::new(["what", "nu", "z", "order", "value"]);
            t.push(vec![
                Cell::Text(a.what.name().into()),
                Cell::Num(a.nu),
                Cell::Num(a.z),
                Cell::Int(a.order.into()),
                Cell::Num(value),
            ]);
            t.write(f.into(), out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_tabulate(a: TabulateArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let grid = z_grid(&a.grid, err)?;
    let nu = Degree::new(a.nu)?;
    let trunc = MaclaurinTruncation::new(a.order)?;
    let mut what = a.what.clone();
    what.sort();
    what.dedup();

    let columns = std::iter::once("z").chain(what.iter().map(|w| w.name())).chain(["status"]);
    let mut table = Table::new(columns);
    let mut failed = 0;
    for zv in grid.points() {
        let z = Argument::new(zv)?;
        let mut row = vec![Cell::Num(zv)];
        let mut ok = true;
        for &w in &what {
            let v = evaluate(w, nu, z, trunc);
            ok &= v.is_some();
            row.push(Cell::Num(v.unwrap_or(f64::NAN)));
        }
        if !ok {
            failed += 1;
        }
        row.push(Cell::Text(if ok { "ok" } else { "nonconverged" }.into()));
        table.push(row);
    }
    table.write(a.format.into(), out)?;
    if failed == table.rows.len() {
        writeln!(err, "error: no row converged")?;
        return Ok(EXIT_NONCONVERGED);
    }
    Ok(EXIT_OK)
}

fn report_table(reports: &[IdentityReport<f64>]) -> Table {
    let mut t = Table::new([
        "identity_id",
        "samples",
        "max_residual",
        "mean_residual",
        "argmax_location",
        "tolerance",
        "passed",
    ]);
    for r in reports {
        t.push(vec![
            Cell::Text(r.identity_id.as_str().into()),
            Cell::Int(r.samples as u64),
            Cell::Num(r.max_residual),
            Cell::Num(r.mean_residual),
            Cell::Num(r.argmax_location),
            Cell::Num(r.tolerance),
            Cell::Bool(r.passed),
        ]);
    }
    t
}

/// `{"records": [...]}` document for a list of reports.
pub fn reports_to_json(reports: &[IdentityReport<f64>]) -> serde_json::Value {
    serde_json::json!({ "records": reports })
}

/// One JSON object per line.
pub fn reports_to_ndjson(reports: &[IdentityReport<f64>]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut tolerances = Tolerances::new();
    for spec in &a.tol {
        tolerances.apply_override(spec)?;
    }
    let reports = if a.extended {
        verify::run_extended::<f64>(&tolerances)
    } else {
        verify::run_all::<f64>(&tolerances)
    };
    match a.format {
        FormatArg::Pretty => {
            for r in &reports {
                writeln!(
                    out,
                    "{} {:<26} max_residual={:<24} tolerance={:<8} samples={} argmax={}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.identity_id.as_str(),
                    crate::format::fmt_real(r.max_residual),
                    crate::format::fmt_real(r.tolerance),
                    r.samples,
                    crate::format::fmt_real(r.argmax_location),
                )?;
            }
        }
        FormatArg::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports_to_json(&reports)).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        FormatArg::Csv => report_table(&reports).write(OutputFormat::Csv, out)?,
    }
    for r in reports.iter().filter(|r| !r.passed) {
        writeln!(
            err,
            "identity {} failed: max residual {} > tolerance {} at {}",
            r.identity_id,
            crate::format::fmt_real(r.max_residual),
            crate::format::fmt_real(r.tolerance),
            crate::format::fmt_real(r.argmax_location),
        )?;
        if r.excluded > 0 {
            writeln!(err, "  {} points excluded for non-convergence", r.excluded)?;
        }
    }
    Ok(if verify::all_passed(&reports) { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// `max_z |maclaurin_p(ν, z, k) − P_ν(z)|` for `k = 0..=3`, over the points
/// where `P_ν(z)` converged; `None` if no point converged.
pub fn truncation_errors(nu: Degree<f64>, zs: &[f64]) -> Result<Option<[f64; 4]>, Error> {
    let mut errs = [0.0f64; 4];
    let mut any = false;
    for &zv in zs {
        let z = Argument::new(zv)?;
        let p = legendre::legendre_p(nu, z, DEFAULT_TOL)?;
        if !p.converged {
            continue;
        }
        any = true;
        for (k, e) in errs.iter_mut().enumerate() {
            let m = legendre::maclaurin_p(nu, z, MaclaurinTruncation::new(k as u32)?);
            *e = e.max((m - p.value).abs());
        }
    }
    Ok(any.then_some(errs))
}

fn cmd_truncation_study(a: TruncationArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let nu_grid = GridSpec::uniform(a.nu_start, a.nu_end, a.nu_count)?;
    nu_grid.require_within(-0.5, 0.5, false, false)?;
    let zs = z_grid(&a.grid, err)?.points();

    let mut table = Table::new(["nu", "err_order0", "err_order1", "err_order2", "err_order3", "status"]);
    let mut failed = 0;
    for nv in nu_grid.points() {
        let mut row = vec![Cell::Num(nv)];
        match truncation_errors(Degree::new(nv)?, &zs)? {
            Some(errs) => {
                row.extend(errs.iter().map(|&e| Cell::Num(e)));
                row.push(Cell::Text("ok".into()));
            }
            None => {
                failed += 1;
                row.extend((0..4).map(|_| Cell::Num(f64::NAN)));
                row.push(Cell::Text("nonconverged".into()));
            }
        }
        table.push(row);
    }
    table.write(a.format.into(), out)?;
    if failed == table.rows.len() {
        writeln!(err, "error: no row converged")?;
        return Ok(EXIT_NONCONVERGED);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("legendre-nu").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(call(&["eval", "--what", "d2", "--z", "1"]), (0, "0\n".into(), String::new()));
        assert_eq!(call(&["eval", "--what", "d1", "--z", "1"]).1, "0\n");
        assert_eq!(call(&["eval", "--what", "p", "--nu", "1", "--z", "0.25"]).1, "0.25\n");
        let (_, out, _) = call(&["eval", "--what", "d2", "--z", "0"]);
        assert!(out.trim().len() >= 17, "needs ≥ 15 significant digits: {out}");
    }

    #[test]
    fn eval_errors() {
        assert_eq!(call(&["eval", "--what", "d2", "--z", "1.5"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "--what", "d2", "--z", "-1"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "--what", "maclaurin", "--z", "0", "--order", "4"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "--what", "p", "--nu", "7", "--z", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "--z", "0"]).0, EXIT_USAGE);
        let (code, out, err) = call(&["eval", "--what", "p", "--nu", "0.5", "--z", "-0.9999999999"]);
        assert_eq!(code, EXIT_NONCONVERGED);
        assert!(out.is_empty());
        assert!(err.contains("did not converge"));
    }

    #[test]
    fn tabulate_examples() {
        let (code, out, _) = call(&["tabulate", "--z-start", "0", "--z-end", "1", "--count", "3", "--what", "d2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last().unwrap(), "1,0,ok");
        let (_, out, _) = call(&["tabulate", "--nu", "0", "--what", "p", "--count", "7"]);
        assert!(out.lines().skip(1).all(|l| l.split(',').nth(1) == Some("1")));
        let (_, out, _) = call(&["tabulate", "--count", "101"]);
        assert_eq!(out.lines().count(), 102);
        assert_eq!(out.lines().next().unwrap(), "z,p,d1,d2,d3,maclaurin,status");
    }

    #[test]
    fn tabulate_shifts_minus_one() {
        let (code, out, err) = call(&["tabulate", "--z-start", "-1", "--z-end", "0", "--count", "2", "--what", "d1"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"));
        assert!(out.lines().nth(1).unwrap().starts_with("-0.999999999,"));
        assert_eq!(call(&["tabulate", "--z-start", "-1.5"]).0, EXIT_USAGE);
        assert_eq!(call(&["tabulate", "--z-end", "1.01"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(call(&["verify"]).0, EXIT_OK);
        let (code, _, err) = call(&["verify", "--tol", "euler=1e-16"]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(err.contains("euler"));
        assert_eq!(call(&["verify", "--tol", "bogus=1"]).0, EXIT_USAGE);
    }

    #[test]
    fn truncation_study_rows() {
        let (code, out, _) = call(&["truncation-study", "--nu-start", "0", "--nu-end", "0.1", "--nu-count", "3"]);
        assert_eq!(code, 0);
        let rows: Vec<Vec<f64>> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').take(5).map(|c| c.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows[0][1..], [0.0; 4]);
        for r in &rows[1..] {
            assert!(r[1] > r[2] && r[2] > r[3] && r[3] > r[4], "{r:?}");
        }
        assert_eq!(call(&["truncation-study", "--nu-end", "0.6"]).0, EXIT_USAGE);
    }
}
