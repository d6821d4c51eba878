//! Command-line front end: state and bounds evaluation, eta scans,
//! thresholds, crossovers and figure-ready CSV datasets.
//!
//! Exit codes: 0 success, 2 argument error, 3 numerical failure.
//! Data files are deterministic: identical invocations produce
//! byte-identical output.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::channels::{propagate_bell, watched_conditional, BellInput, ChannelKind, DensityMatrix};
use crate::entmeasures::bounds_report;
use crate::error::Error;
use crate::repeater::{
    crossover_gamma, eta, linspace, optimal_sections, scan, scan_yield, threshold_sections,
    Scenario,
};

const EXIT_ARGUMENT: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

/// Output format for tabular commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Destination, format and float precision of a command's output.
#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub format: OutputFormat,
    /// None writes to standard output.
    pub destination: Option<PathBuf>,
    /// Significant digits, in [6, 17].
    pub precision: usize,
}

/// Rounds to `sig` significant decimal digits.
pub fn round_to_significant(x: f64, sig: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", sig.saturating_sub(1), x).parse().unwrap_or(x)
}

/// Shortest decimal representation of `x` rounded to `sig` significant
/// digits; parsing the result recovers the rounded value exactly.
pub fn format_float(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    format!("{}", round_to_significant(x, sig))
}

fn json_num(x: f64, sig: usize) -> Value {
    serde_json::Number::from_f64(round_to_significant(x, sig))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// The figure-preset datasets. Names are stable identifiers for the
/// emitted files; parameters are fixed inside each preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureName {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
    Fig10,
    Fig11,
}

impl FigureName {
    pub const ALL: [FigureName; 9] = [
        FigureName::Fig3,
        FigureName::Fig4,
        FigureName::Fig5,
        FigureName::Fig6,
        FigureName::Fig7,
        FigureName::Fig8,
        FigureName::Fig9,
        FigureName::Fig10,
        FigureName::Fig11,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            FigureName::Fig3 => "fig3",
            FigureName::Fig4 => "fig4",
            FigureName::Fig5 => "fig5",
            FigureName::Fig6 => "fig6",
            FigureName::Fig7 => "fig7",
            FigureName::Fig8 => "fig8",
            FigureName::Fig9 => "fig9",
            FigureName::Fig10 => "fig10",
            FigureName::Fig11 => "fig11",
        }
    }
}

impl fmt::Display for FigureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FigureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FigureName::ALL
            .into_iter()
            .find(|n| n.token() == s)
            .ok_or_else(|| Error::UnknownToken {
                what: "figure",
                token: s.to_string(),
            })
    }
}

fn parse_channel(s: &str) -> Result<ChannelKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bell(s: &str) -> Result<BellInput, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_figure(s: &str) -> Result<FigureName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Bell input used when none is given on the command line.
pub fn default_bell(kind: ChannelKind) -> BellInput {
    match kind {
        ChannelKind::PhaseDamping | ChannelKind::Depolarizing => BellInput::PhiPlus,
        _ => BellInput::PsiPlus,
    }
}

#[derive(Debug, Args)]
struct TargetArgs {
    /// Channel model: amplitude-damping, watched-amplitude-damping,
    /// bit-flip, phase-flip, bit-phase-flip, phase-damping, depolarizing
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelKind,

    /// Bell input: psi-plus or phi-plus. Defaults to phi-plus for
    /// phase-damping and depolarizing, psi-plus otherwise.
    #[arg(long, value_parser = parse_bell)]
    bell: Option<BellInput>,
}

impl TargetArgs {
    fn bell(&self) -> BellInput {
        self.bell.unwrap_or_else(|| default_bell(self.channel))
    }

    fn scenario(&self, gamma: f64) -> Result<Scenario, Error> {
        Scenario::new(self.channel, self.bell(), gamma)
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format for tabular data
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Write output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,

    /// Significant digits for floating-point output
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u8).range(6..=17))]
    precision: u8,
}

impl OutputArgs {
    fn spec(&self) -> OutputSpec {
        OutputSpec {
            format: self.format,
            destination: self.out.clone(),
            precision: self.precision as usize,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "repeaterc",
    about = "Entanglement yields and repeater resource-reduction ratios for qubit noise channels",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the two-qubit state after the channel (JSON)
    State {
        #[command(flatten)]
        target: TargetArgs,
        /// Full-channel length parameter
        #[arg(long)]
        gamma: f64,
        /// Number of equal channel sections
        #[arg(long, default_value_t = 1)]
        sections: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print entanglement bounds for the per-section state (JSON)
    Bounds {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long, default_value_t = 1)]
        sections: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Resource-reduction ratio for every section count up to m-max
    Eta {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma: f64,
        /// Largest section count (default 20 exact / 60 bound-scored)
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Eta over a (gamma, m) grid
    Scan {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma_min: f64,
        #[arg(long)]
        gamma_max: f64,
        /// Number of grid points, endpoints included
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Yield per source over a gamma grid, one column per section count
    Yield {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma_min: f64,
        #[arg(long)]
        gamma_max: f64,
        #[arg(long)]
        steps: usize,
        /// Comma-separated section counts
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2])]
        sections: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Section count with the largest eta
    Optimal {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Smallest section counts with positive lower bound and eta > 1
    Threshold {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        m_max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Channel length where the yields of two section counts coincide
    Crossover {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        m_a: usize,
        #[arg(long)]
        m_b: usize,
        /// Lower end of the search bracket
        #[arg(long, default_value_t = 0.01)]
        gamma_min: f64,
        /// Upper end of the search bracket
        #[arg(long, default_value_t = 10.0)]
        gamma_max: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the dataset behind a named figure preset
    Figure {
        /// fig3..fig11
        #[arg(value_parser = parse_figure)]
        name: FigureName,
        /// Output directory for the CSV files
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

struct CliFailure {
    code: i32,
    message: String,
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        CliFailure {
            code: if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_ARGUMENT },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliFailure {
    fn from(e: std::io::Error) -> Self {
        CliFailure {
            code: EXIT_ARGUMENT,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ARGUMENT } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn emit(destination: Option<&Path>, content: &str) -> Result<(), CliFailure> {
    match destination {
        Some(path) => fs::write(path, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn check_sections_arg(sections: usize) -> Result<(), Error> {
    if sections == 0 {
        return Err(Error::ZeroSections);
    }
    Ok(())
}

fn execute(command: Command) -> Result<(), CliFailure> {
    match command {
        Command::State { target, gamma, sections, output } => {
            check_sections_arg(sections)?;
            let spec = output.spec();
            let value = state_json(&target, gamma, sections, spec.precision)?;
            emit(spec.destination.as_deref(), &(serde_json::to_string_pretty(&value).unwrap() + "\n"))
        }
        Command::Bounds { target, gamma, sections, output } => {
            check_sections_arg(sections)?;
            let spec = output.spec();
            let value = bounds_json(&target, gamma, sections, spec.precision)?;
            emit(spec.destination.as_deref(), &(serde_json::to_string_pretty(&value).unwrap() + "\n"))
        }
        Command::Eta { target, gamma, m_max, output } => {
            let spec = output.spec();
            let s = target.scenario(gamma)?;
            let m_max = m_max.unwrap_or_else(|| s.bound_mode.default_m_max());
            let content = match spec.format {
                OutputFormat::Csv => eta_csv(&s, m_max, spec.precision)?,
                OutputFormat::Json => eta_json(&s, m_max, spec.precision)?,
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Scan { target, gamma_min, gamma_max, steps, m_max, output } => {
            let spec = output.spec();
            let grid = linspace(gamma_min, gamma_max, steps)?;
            let s = target.scenario(gamma_min.max(0.0))?;
            let m_max = m_max.unwrap_or_else(|| s.bound_mode.default_m_max());
            let content = match spec.format {
                OutputFormat::Csv => scan_csv(&target, &grid, m_max, spec.precision)?,
                OutputFormat::Json => scan_json(&target, &grid, m_max, spec.precision)?,
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Yield { target, gamma_min, gamma_max, steps, sections, output } => {
            let spec = output.spec();
            let grid = linspace(gamma_min, gamma_max, steps)?;
            let s = target.scenario(gamma_min.max(0.0))?;
            let table = scan_yield(&s, &sections, &grid)?;
            let content = match spec.format {
                OutputFormat::Csv => yield_csv(&table.sections, &table.rows, spec.precision),
                OutputFormat::Json => yield_json(&table.sections, &table.rows, spec.precision),
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Optimal { target, gamma, m_max, output } => {
            let spec = output.spec();
            let s = target.scenario(gamma)?;
            let m_max = m_max.unwrap_or_else(|| s.bound_mode.default_m_max());
            let (m_star, eta_star) = optimal_sections(&s, m_max)?;
            let content = match spec.format {
                OutputFormat::Csv => format!(
                    "m_star,eta_star\n{},{}\n",
                    m_star,
                    format_float(eta_star, spec.precision)
                ),
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "m_star": m_star,
                        "eta_star": json_num(eta_star, spec.precision),
                    }))
                    .unwrap()
                        + "\n"
                }
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Threshold { target, gamma, m_max, output } => {
            let spec = output.spec();
            let s = target.scenario(gamma)?;
            let m_max = m_max.unwrap_or_else(|| s.bound_mode.default_m_max());
            let (m_ent, m_eta) = threshold_sections(&s, m_max)?;
            let cell = |v: Option<usize>| v.map(|m| m.to_string()).unwrap_or_default();
            let content = match spec.format {
                OutputFormat::Csv => {
                    format!("m_entangled,m_eta_gt_1\n{},{}\n", cell(m_ent), cell(m_eta))
                }
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "m_entangled": m_ent,
                        "m_eta_gt_1": m_eta,
                    }))
                    .unwrap()
                        + "\n"
                }
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Crossover { target, m_a, m_b, gamma_min, gamma_max, output } => {
            let spec = output.spec();
            let s = target.scenario(gamma_min.max(0.0))?;
            let gamma_star = crossover_gamma(&s, m_a, m_b, (gamma_min, gamma_max))?;
            let content = match spec.format {
                OutputFormat::Csv => {
                    format!("gamma_star={}\n", format_float(gamma_star, spec.precision))
                }
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({
                        "gamma_star": json_num(gamma_star, spec.precision),
                    }))
                    .unwrap()
                        + "\n"
                }
            };
            emit(spec.destination.as_deref(), &content)
        }
        Command::Figure { name, out } => {
            fs::create_dir_all(&out)?;
            for (file, content) in figure_files(name)? {
                let path = out.join(&file);
                fs::write(&path, content)?;
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn entries_json(mat: &crate::smallmat::ComplexMatrix, precision: usize) -> Value {
    Value::Array(
        mat.entries()
            .iter()
            .map(|z| Value::Array(vec![json_num(z.re, precision), json_num(z.im, precision)]))
            .collect(),
    )
}

fn state_json(target: &TargetArgs, gamma: f64, sections: usize, precision: usize) -> Result<Value, Error> {
    let s = target.scenario(gamma)?;
    let seg_gamma = gamma / sections as f64;
    let mut value = json!({
        "channel": target.channel.token(),
        "bell": target.bell().token(),
        "gamma": json_num(gamma, precision),
        "sections": sections,
        "gamma_per_section": json_num(seg_gamma, precision),
    });
    let obj = value.as_object_mut().unwrap();
    if s.kind == ChannelKind::WatchedAmplitudeDamping {
        let out = watched_conditional(s.input, seg_gamma)?;
        obj.insert(
            "conditional_state".into(),
            json!({ "amplitudes": entries_json(&out.conditional_state, precision) }),
        );
        obj.insert(
            "survival_probability".into(),
            json_num(out.survival_probability, precision),
        );
    } else {
        let rho = propagate_bell(s.kind, s.input, seg_gamma)?;
        obj.insert(
            "state".into(),
            json!({
                "dim": rho.dim(),
                "entries": entries_json(rho.matrix(), precision),
                "trace": json_num(rho.matrix().trace().re, precision),
                "eigenvalues": Value::Array(
                    rho.eigenvalues().iter().map(|&l| json_num(l, precision)).collect()
                ),
            }),
        );
    }
    Ok(value)
}

fn section_state(s: &Scenario, seg_gamma: f64) -> Result<DensityMatrix, Error> {
    if s.kind == ChannelKind::WatchedAmplitudeDamping {
        let out = watched_conditional(s.input, seg_gamma)?;
        DensityMatrix::from_pure(&out.conditional_state)
    } else {
        propagate_bell(s.kind, s.input, seg_gamma)
    }
}

fn bounds_json(target: &TargetArgs, gamma: f64, sections: usize, precision: usize) -> Result<Value, Error> {
    let s = target.scenario(gamma)?;
    let seg_gamma = gamma / sections as f64;
    let rho = section_state(&s, seg_gamma)?;
    let report = bounds_report(&rho)?;
    Ok(json!({
        "channel": target.channel.token(),
        "bell": target.bell().token(),
        "gamma": json_num(gamma, precision),
        "sections": sections,
        "gamma_per_section": json_num(seg_gamma, precision),
        "e_formation": json_num(report.e_formation, precision),
        "coherent_info_1": json_num(report.coherent_info_1, precision),
        "coherent_info_2": json_num(report.coherent_info_2, precision),
        "lower_bound": json_num(report.lower_bound, precision),
        "exact_distillable": report
            .exact_distillable
            .map(|v| json_num(v, precision))
            .unwrap_or(Value::Null),
        "authoritative": if report.exact_distillable.is_some() { "exact" } else { "lower-bound" },
        "entangled": report.entangled(),
    }))
}

fn eta_csv(s: &Scenario, m_max: usize, precision: usize) -> Result<String, Error> {
    let scan = scan(s, m_max)?;
    let mut out = String::from("m,eta,lower_bound,entangled\n");
    for p in &scan.points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            p.m,
            format_float(p.eta, precision),
            format_float(p.lower_bound_value, precision),
            p.entangled
        ));
    }
    Ok(out)
}

fn eta_json(s: &Scenario, m_max: usize, precision: usize) -> Result<String, Error> {
    let scan = scan(s, m_max)?;
    let rows: Vec<Value> = scan
        .points
        .iter()
        .map(|p| {
            json!({
                "m": p.m,
                "eta": json_num(p.eta, precision),
                "lower_bound": json_num(p.lower_bound_value, precision),
                "entangled": p.entangled,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&Value::Array(rows)).unwrap() + "\n")
}

fn scan_rows(target: &TargetArgs, grid: &[f64], m_max: usize) -> Result<Vec<(f64, crate::repeater::EtaPoint)>, Error> {
    let mut rows = Vec::new();
    for &gamma in grid {
        let s = target.scenario(gamma)?;
        for m in 1..=m_max {
            rows.push((gamma, eta(&s, m)?));
        }
    }
    Ok(rows)
}

fn scan_csv(target: &TargetArgs, grid: &[f64], m_max: usize, precision: usize) -> Result<String, Error> {
    let mut out = String::from("gamma,m,eta,lower_bound,entangled\n");
    for (gamma, p) in scan_rows(target, grid, m_max)? {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_float(gamma, precision),
            p.m,
            format_float(p.eta, precision),
            format_float(p.lower_bound_value, precision),
            p.entangled
        ));
    }
    Ok(out)
}

fn scan_json(target: &TargetArgs, grid: &[f64], m_max: usize, precision: usize) -> Result<String, Error> {
    let rows: Vec<Value> = scan_rows(target, grid, m_max)?
        .into_iter()
        .map(|(gamma, p)| {
            json!({
                "gamma": json_num(gamma, precision),
                "m": p.m,
                "eta": json_num(p.eta, precision),
                "lower_bound": json_num(p.lower_bound_value, precision),
                "entangled": p.entangled,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&Value::Array(rows)).unwrap() + "\n")
}

fn yield_csv(sections: &[usize], rows: &[(f64, Vec<f64>)], precision: usize) -> String {
    let mut out = String::from("gamma");
    for m in sections {
        out.push_str(&format!(",yield_m{m}"));
    }
    out.push('\n');
    for (gamma, yields) in rows {
        out.push_str(&format_float(*gamma, precision));
        for y in yields {
            out.push(',');
            out.push_str(&format_float(*y, precision));
        }
        out.push('\n');
    }
    out
}

fn yield_json(sections: &[usize], rows: &[(f64, Vec<f64>)], precision: usize) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|(gamma, yields)| {
            let mut obj = serde_json::Map::new();
            obj.insert("gamma".into(), json_num(*gamma, precision));
            for (m, y) in sections.iter().zip(yields) {
                obj.insert(format!("yield_m{m}"), json_num(*y, precision));
            }
            Value::Object(obj)
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(rows)).unwrap() + "\n"
}

/// The CSV files behind a figure preset as (file name, content) pairs.
/// Everything inside a preset is pinned, including the 9-digit float
/// precision, so reruns are byte-identical.
pub fn figure_files(name: FigureName) -> Result<Vec<(String, String)>, Error> {
    const P: usize = 9;
    let watched_psi = |gamma| Scenario::new(ChannelKind::WatchedAmplitudeDamping, BellInput::PsiPlus, gamma);
    let watched_phi = |gamma| Scenario::new(ChannelKind::WatchedAmplitudeDamping, BellInput::PhiPlus, gamma);

    let yield_preset = |s: &Scenario| -> Result<String, Error> {
        let grid = linspace(0.0, 3.0, 301)?;
        let table = scan_yield(s, &[1, 2], &grid)?;
        Ok(yield_csv(&table.sections, &table.rows, P))
    };

    let files = match name {
        FigureName::Fig3 => vec![("fig3.csv".to_string(), yield_preset(&watched_psi(0.0)?)?)],
        FigureName::Fig4 => vec![("fig4.csv".to_string(), eta_csv(&watched_psi(1.5)?, 20, P)?)],
        FigureName::Fig5 => {
            let grid = linspace(0.0, 3.0, 61)?;
            let target = TargetArgs {
                channel: ChannelKind::WatchedAmplitudeDamping,
                bell: Some(BellInput::PsiPlus),
            };
            vec![("fig5.csv".to_string(), scan_csv(&target, &grid, 20, P)?)]
        }
        FigureName::Fig6 => vec![("fig6.csv".to_string(), yield_preset(&watched_phi(0.0)?)?)],
        FigureName::Fig7 => vec![("fig7.csv".to_string(), eta_csv(&watched_phi(1.0)?, 20, P)?)],
        FigureName::Fig8 => {
            let s = Scenario::new(ChannelKind::BitFlip, BellInput::PsiPlus, 1.5)?;
            vec![("fig8.csv".to_string(), eta_csv(&s, 20, P)?)]
        }
        FigureName::Fig9 => {
            let s = Scenario::new(ChannelKind::AmplitudeDamping, BellInput::PhiPlus, 1.0)?;
            vec![("fig9.csv".to_string(), eta_csv(&s, 60, P)?)]
        }
        FigureName::Fig10 => {
            let s = Scenario::new(ChannelKind::AmplitudeDamping, BellInput::PsiPlus, 2.0)?;
            vec![("fig10.csv".to_string(), eta_csv(&s, 60, P)?)]
        }
        FigureName::Fig11 => {
            let pd = Scenario::new(ChannelKind::PhaseDamping, BellInput::PhiPlus, 1.0)?;
            let depol = Scenario::new(ChannelKind::Depolarizing, BellInput::PhiPlus, 0.545)?;
            vec![
                ("fig11_phase_damping.csv".to_string(), eta_csv(&pd, 60, P)?),
                ("fig11_depolarizing.csv".to_string(), eta_csv(&depol, 60, P)?),
            ]
        }
    };
    Ok(files)
}
