//! `qcost` — surface-code resource and runtime estimates for Grover-based
//! shift scheduling, with a classical brute-force baseline.

mod output;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcost_core::counts::{parse_counts, qiss_logical_counts, QissInstance};
use qcost_core::estimator::estimate_scenario;
use qcost_core::gas::{crossover_days, estimate_full_gas};
use qcost_core::scenarios::{
    builtin_roadmap, builtin_scenarios, feasibility_year, find_scenario, load_scenario,
    RoadmapEntry, Scenario,
};
use qcost_core::{EstimatorConfig, LogicalCounts, UnitCountRule};

use output::{human_duration, render_estimate, render_sweep_table};
use report::{
    CrossoverReport, EstimateReport, FactoryReport, FeasibilityReport, SweepRow, NS_PER_SEC,
};

#[derive(Parser)]
#[command(
    name = "qcost",
    version,
    about = "Physical-qubit and runtime estimates for Grover-based shift scheduling on a surface-code machine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate one circuit on a hardware scenario
    Estimate(EstimateArgs),
    /// Estimate a range of problem sizes; one row per (scenario, day)
    Sweep(SweepArgs),
    /// Find the smallest problem size with a quantum speedup
    Crossover(CrossoverArgs),
    /// Show the T-state distillation factory for a circuit
    Factory(FactoryArgs),
    /// List the built-in scenario catalog
    Scenarios(ScenariosArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ScenarioArg {
    /// Built-in scenario name (see `qcost scenarios`)
    #[arg(long)]
    scenario: Option<String>,
    /// Scenario JSON file
    #[arg(long)]
    scenario_file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CountsArg {
    /// Model the shift-scheduling oracle at this many days
    #[arg(long)]
    days: Option<u64>,
    /// Read logical counts from a JSON file
    #[arg(long)]
    counts: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    scenario: ScenarioArg,
    #[command(flatten)]
    counts: CountsArg,
    /// Total error budget
    #[arg(long, default_value_t = 0.25)]
    error_budget: f64,
    /// Extrapolate a complete search and compare against brute force
    #[arg(long, requires = "days")]
    full_gas: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Size distillation rounds with the exact binomial tail
    #[arg(long)]
    exact_binomial: bool,
    /// Roadmap CSV replacing the embedded dataset
    #[arg(long)]
    roadmap: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Built-in scenario name (repeatable)
    #[arg(long = "scenario", required_unless_present = "scenario_files")]
    scenarios: Vec<String>,
    /// Scenario JSON file (repeatable)
    #[arg(long = "scenario-file")]
    scenario_files: Vec<PathBuf>,
    #[arg(long)]
    days_from: u64,
    #[arg(long)]
    days_to: u64,
    /// Total error budget
    #[arg(long, default_value_t = 0.25)]
    error_budget: f64,
    /// Extrapolate complete searches and compare against brute force
    #[arg(long)]
    full_gas: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    exact_binomial: bool,
}

#[derive(Args)]
struct CrossoverArgs {
    #[command(flatten)]
    scenario: ScenarioArg,
    /// Largest problem size to scan
    #[arg(long)]
    max_days: u64,
    /// Total error budget
    #[arg(long, default_value_t = 0.25)]
    error_budget: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    exact_binomial: bool,
}

#[derive(Args)]
struct FactoryArgs {
    #[command(flatten)]
    scenario: ScenarioArg,
    #[command(flatten)]
    counts: CountsArg,
    /// Total error budget
    #[arg(long, default_value_t = 0.25)]
    error_budget: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    exact_binomial: bool,
}

#[derive(Args)]
struct ScenariosArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit codes: 2 for malformed input, 3 for configurations that cannot be
/// estimated (above threshold, factory chain, unsupported modality).
struct CliError {
    infeasible: bool,
    source: anyhow::Error,
}

impl CliError {
    fn code(&self) -> u8 {
        if self.infeasible {
            3
        } else {
            2
        }
    }

    fn validation(source: anyhow::Error) -> Self {
        CliError {
            infeasible: false,
            source,
        }
    }
}

impl From<qcost_core::Error> for CliError {
    fn from(e: qcost_core::Error) -> Self {
        CliError {
            infeasible: e.is_infeasible(),
            source: anyhow::Error::new(e),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e.source);
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Estimate(args) => cmd_estimate(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Crossover(args) => cmd_crossover(args),
        Command::Factory(args) => cmd_factory(args),
        Command::Scenarios(args) => cmd_scenarios(args),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::validation)
}

fn resolve_scenario(arg: &ScenarioArg) -> CliResult<Scenario> {
    if let Some(name) = &arg.scenario {
        return find_scenario(name).ok_or_else(|| {
            CliError::validation(anyhow::anyhow!(
                "unknown scenario `{name}`; run `qcost scenarios` for the catalog"
            ))
        });
    }
    let path = arg.scenario_file.as_ref().expect("clap enforces the group");
    let text = read_file(path)?;
    let scenario = load_scenario(&text, &EstimatorConfig::default().qec)?;
    if scenario.t_gate_error_clamped {
        eprintln!(
            "warning: {}: t_gate_error clamped up to {:e}",
            scenario.name,
            qcost_core::scenarios::T_GATE_ERROR_FLOOR
        );
    }
    Ok(scenario)
}

fn resolve_counts(arg: &CountsArg) -> CliResult<(Option<u64>, LogicalCounts)> {
    if let Some(days) = arg.days {
        let inst = QissInstance::new(days)?;
        return Ok((Some(days), qiss_logical_counts(inst)));
    }
    let path = arg.counts.as_ref().expect("clap enforces the group");
    let text = read_file(path)?;
    Ok((None, parse_counts(&text)?))
}

fn estimator_config(exact_binomial: bool) -> EstimatorConfig {
    let mut cfg = EstimatorConfig::default();
    if exact_binomial {
        cfg.factory.unit_count_rule = UnitCountRule::ExactBinomial;
    }
    cfg
}

fn load_roadmap(path: &Option<PathBuf>) -> CliResult<Vec<RoadmapEntry>> {
    match path {
        Some(p) => Ok(qcost_core::scenarios::parse_roadmap_csv(&read_file(p)?)?),
        None => Ok(builtin_roadmap().to_vec()),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(CliError::validation),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)
        .context("serializing output")
        .map_err(CliError::validation)?;
    s.push('\n');
    Ok(s)
}

fn rows_to_csv(rows: &[SweepRow]) -> CliResult<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    for row in rows {
        wtr.serialize(row)
            .context("writing csv")
            .map_err(CliError::validation)?;
    }
    let bytes = wtr
        .into_inner()
        .context("flushing csv")
        .map_err(CliError::validation)?;
    String::from_utf8(bytes)
        .context("csv is not utf-8")
        .map_err(CliError::validation)
}

fn cmd_estimate(args: EstimateArgs) -> CliResult<()> {
    let scenario = resolve_scenario(&args.scenario)?;
    let (n_days, counts) = resolve_counts(&args.counts)?;
    let cfg = estimator_config(args.exact_binomial);
    let roadmap = load_roadmap(&args.roadmap)?;

    let mut report = if args.full_gas {
        let days = n_days.expect("clap: --full-gas requires --days");
        let run = estimate_full_gas(days, &scenario, args.error_budget, &cfg)?;
        EstimateReport::full_gas(&scenario.name, args.error_budget, &run)
    } else {
        let r = estimate_scenario(&scenario, &counts, args.error_budget, &cfg)?;
        EstimateReport::single(&scenario.name, n_days, args.error_budget, &r)
    };
    report.feasibility =
        feasibility_year(report.qubits_total, &roadmap).map(FeasibilityReport::from_entry);

    let content = match args.format {
        Format::Human => render_estimate(&report),
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let row = SweepRow {
                scenario: report.scenario.clone(),
                n_days: report.n_days,
                code_distance: report.code_distance,
                runtime_s: Some(report.runtime_s),
                qubits_total: Some(report.qubits_total),
                qubits_logical: Some(report.qubits_logical),
                qubits_distillation: Some(report.qubits_distillation),
                factories: Some(report.factory_count),
                t_states: Some(report.t_states),
                classical_runtime_s: report.classical_runtime_s,
                speedup: report.speedup,
                reason: String::new(),
            };
            rows_to_csv(&[row])?
        }
    };
    emit(&args.out, &content)
}

fn cmd_sweep(args: SweepArgs) -> CliResult<()> {
    if args.days_from == 0 || args.days_to < args.days_from {
        return Err(CliError::validation(anyhow::anyhow!(
            "invalid day range {}..={}",
            args.days_from,
            args.days_to
        )));
    }
    let mut scenarios = Vec::new();
    for name in &args.scenarios {
        scenarios.push(resolve_scenario(&ScenarioArg {
            scenario: Some(name.clone()),
            scenario_file: None,
        })?);
    }
    for path in &args.scenario_files {
        scenarios.push(resolve_scenario(&ScenarioArg {
            scenario: None,
            scenario_file: Some(path.clone()),
        })?);
    }
    let cfg = estimator_config(args.exact_binomial);

    let mut rows = Vec::new();
    let mut successes = 0usize;
    let mut first_error: Option<CliError> = None;
    for scenario in &scenarios {
        for day in args.days_from..=args.days_to {
            let outcome = if args.full_gas {
                estimate_full_gas(day, scenario, args.error_budget, &cfg)
                    .map(|run| SweepRow::success_full_gas(&scenario.name, &run))
            } else {
                QissInstance::new(day)
                    .map(qiss_logical_counts)
                    .and_then(|counts| {
                        estimate_scenario(scenario, &counts, args.error_budget, &cfg)
                    })
                    .map(|r| SweepRow::success(&scenario.name, Some(day), &r))
            };
            match outcome {
                Ok(row) => {
                    successes += 1;
                    rows.push(row);
                }
                Err(e) => {
                    rows.push(SweepRow::failed(&scenario.name, Some(day), e.to_string()));
                    if first_error.is_none() {
                        first_error = Some(e.into());
                    }
                }
            }
        }
    }

    let content = match args.format {
        Format::Csv => rows_to_csv(&rows)?,
        Format::Json => to_json(&rows)?,
        Format::Human => render_sweep_table(&rows),
    };
    emit(&args.out, &content)?;

    match (successes, first_error) {
        (0, Some(e)) => Err(e),
        _ => Ok(()),
    }
}

fn cmd_crossover(args: CrossoverArgs) -> CliResult<()> {
    let scenario = resolve_scenario(&args.scenario)?;
    let cfg = estimator_config(args.exact_binomial);
    let found = crossover_days(&scenario, args.error_budget, args.max_days, &cfg)?;

    let report = CrossoverReport {
        scenario: scenario.name.clone(),
        max_days: args.max_days,
        error_budget: args.error_budget,
        crossover_day: found.as_ref().map(|r| r.n_days),
        quantum_runtime_s: found.as_ref().map(|r| r.quantum_runtime_ns / NS_PER_SEC),
        classical_runtime_s: found.as_ref().map(|r| r.classical_runtime_ns / NS_PER_SEC),
        quantum_qubits: found.as_ref().map(|r| r.quantum_qubits),
    };

    let content = match args.format {
        Format::Human => match &found {
            Some(run) => format!(
                "{}: crossover at {} days (quantum {} vs classical {}, {} qubits)\n",
                scenario.name,
                run.n_days,
                human_duration(run.quantum_runtime_ns),
                human_duration(run.classical_runtime_ns),
                run.quantum_qubits
            ),
            None => format!(
                "{}: none within range (no speedup through {} days)\n",
                scenario.name, args.max_days
            ),
        },
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.serialize(&report)
                .context("writing csv")
                .map_err(CliError::validation)?;
            let bytes = wtr
                .into_inner()
                .context("flushing csv")
                .map_err(CliError::validation)?;
            String::from_utf8(bytes)
                .context("csv is not utf-8")
                .map_err(CliError::validation)?
        }
    };
    emit(&args.out, &content)
}

fn cmd_factory(args: FactoryArgs) -> CliResult<()> {
    let scenario = resolve_scenario(&args.scenario)?;
    let (_, counts) = resolve_counts(&args.counts)?;
    let cfg = estimator_config(args.exact_binomial);
    let r = estimate_scenario(&scenario, &counts, args.error_budget, &cfg)?;
    let factory = FactoryReport::from_design(&r.factory);

    let content = match args.format {
        Format::Human => {
            let mut out = String::new();
            if factory.rounds.is_empty() {
                out.push_str("no distillation required: physical T states meet the target\n");
            } else {
                out.push_str(&format!(
                    "{:>5} {:>9} {:>34} {:>6} {:>13} {:>13} {:>11}\n",
                    "round",
                    "distance",
                    "unit",
                    "count",
                    "input error",
                    "output error",
                    "acceptance"
                ));
                for x in &factory.rounds {
                    out.push_str(&format!(
                        "{:>5} {:>9} {:>34} {:>6} {:>13.3e} {:>13.3e} {:>11.4}\n",
                        x.round,
                        x.distance,
                        x.unit,
                        x.unit_count,
                        x.input_t_error,
                        x.output_t_error,
                        x.acceptance_prob
                    ));
                }
                out.push_str(&format!(
                    "factory: {} qubits, {} per run, {} output(s); fleet of {} factories\n",
                    factory.qubits,
                    human_duration(factory.total_runtime_s * 1e9),
                    factory.outputs_per_run,
                    r.factory_count
                ));
            }
            out
        }
        Format::Json => to_json(&factory)?,
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            for x in &factory.rounds {
                wtr.serialize(x)
                    .context("writing csv")
                    .map_err(CliError::validation)?;
            }
            let bytes = wtr
                .into_inner()
                .context("flushing csv")
                .map_err(CliError::validation)?;
            String::from_utf8(bytes)
                .context("csv is not utf-8")
                .map_err(CliError::validation)?
        }
    };
    emit(&args.out, &content)
}

fn cmd_scenarios(args: ScenariosArgs) -> CliResult<()> {
    let catalog = builtin_scenarios();
    let content = match args.format {
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:<18} {:<16} {:>9} {:>9} {:>10} {:>10} {:>8}\n",
                "name", "modality", "1q error", "2q error", "t error", "meas (ns)", "perfect"
            ));
            for s in catalog {
                out.push_str(&format!(
                    "{:<18} {:<16} {:>9.0e} {:>9.0e} {:>10.1e} {:>10} {:>8}\n",
                    s.name,
                    s.modality.to_string(),
                    s.params.one_q_gate_error,
                    s.params.two_q_gate_error,
                    s.params.t_gate_error,
                    s.params.meas_time_ns,
                    if s.perfect { "yes" } else { "no" }
                ));
            }
            out
        }
        Format::Json => to_json(&catalog)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                modality: String,
                one_q_gate_error: f64,
                two_q_gate_error: f64,
                idle_error: f64,
                meas_error: f64,
                t_gate_error: f64,
                meas_time_ns: f64,
                one_q_gate_time_ns: f64,
                two_q_gate_time_ns: f64,
                t_gate_time_ns: f64,
                perfect: bool,
            }
            let mut wtr = csv::Writer::from_writer(Vec::new());
            for s in catalog {
                wtr.serialize(Row {
                    name: &s.name,
                    modality: s.modality.to_string(),
                    one_q_gate_error: s.params.one_q_gate_error,
                    two_q_gate_error: s.params.two_q_gate_error,
                    idle_error: s.params.idle_error,
                    meas_error: s.params.meas_error,
                    t_gate_error: s.params.t_gate_error,
                    meas_time_ns: s.params.meas_time_ns,
                    one_q_gate_time_ns: s.params.one_q_gate_time_ns,
                    two_q_gate_time_ns: s.params.two_q_gate_time_ns,
                    t_gate_time_ns: s.params.t_gate_time_ns,
                    perfect: s.perfect,
                })
                .context("writing csv")
                .map_err(CliError::validation)?;
            }
            let bytes = wtr
                .into_inner()
                .context("flushing csv")
                .map_err(CliError::validation)?;
            String::from_utf8(bytes)
                .context("csv is not utf-8")
                .map_err(CliError::validation)?
        }
    };
    emit(&args.out, &content)
}
