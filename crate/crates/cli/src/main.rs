//! `mover-eater`: play games, export value maps and path comparisons, and
//! audit the equilibrium over a window of start positions.

mod config;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use mover_eater::engine::{default_horizon_cap, play, GameState, HalfUnits};
use mover_eater::oracle::{verify_equilibrium, EquilibriumAudit, SearchBounds, Verdict};
use mover_eater::sweep::{
    classify_map, compare_paths, simulate_mismatches, switch_boundary, value_map,
};

use config::ScenarioConfig;

const DEFAULT_CELL_BUDGET: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "mover-eater", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Scenario config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reserved. Every command is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Play one game and write its transcript as JSON lines.
    Play {
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form values for every cell of the window, as CSV.
    ValueMap {
        #[command(flatten)]
        common: Common,
        /// Re-derive every cell by playing both games; fail on any mismatch.
        #[arg(long)]
        simulate: bool,
        /// Render values in bananas instead of half-units.
        #[arg(long)]
        decimal: bool,
        /// Also write the cells where the minimizing game switches (CSV x,y).
        #[arg(long)]
        boundary: Option<PathBuf>,
        /// Maximum number of cells.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cumulative consumption along the equilibrium, explicit-first and
    /// exaggeration paths, as CSV.
    ComparePaths {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        decimal: bool,
    },
    /// Exhaustive no-deviation audit over the window (or the single start).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        slack: Option<u32>,
        /// Maximum number of complete plays per search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Region and step counts for every cell of the window, as CSV.
    ClassifyMap {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Play { common } => cmd_play(&common),
        Command::ValueMap {
            common,
            simulate,
            decimal,
            boundary,
            budget,
        } => cmd_value_map(&common, simulate, decimal, boundary, budget),
        Command::ComparePaths { common, decimal } => cmd_compare_paths(&common, decimal),
        Command::Verify {
            common,
            slack,
            budget,
        } => cmd_verify(&common, slack, budget),
        Command::ClassifyMap { common, budget } => cmd_classify_map(&common, budget),
    }
}

fn output(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Human-readable summaries go to stdout unless stdout carries the artifact.
fn summary(common: &Common) -> Box<dyn Write> {
    if common.out.is_some() {
        Box::new(io::stdout())
    } else {
        Box::new(io::stderr())
    }
}

fn units(v: HalfUnits, decimal: bool) -> String {
    if decimal {
        v.decimal()
    } else {
        v.0.to_string()
    }
}

fn cmd_play(common: &Common) -> Result<ExitCode> {
    let cfg = ScenarioConfig::load(&common.config)?;
    let goals = cfg.goal_pair()?;
    let start = cfg.start()?;
    let true_goal = cfg.true_goal()?;
    let state = GameState::new(start, cfg.initial()?, goals, true_goal)?;
    let mover = cfg.mover()?.build(start, &goals, true_goal)?;
    let eater = cfg.eater()?.build();
    let cap = cfg
        .horizon_cap
        .unwrap_or_else(|| default_horizon_cap(start, &goals));
    let transcript = play(state, &mover, &eater, cap)?;

    let mut out = output(&common.out)?;
    transcript.write_jsonl(&mut out)?;
    out.flush()?;

    let b = transcript.final_consumption();
    let classes: Vec<_> = transcript.move_classes().map(|c| c.label()).collect();
    let mut s = summary(common);
    writeln!(s, "T={}", transcript.terminal_time)?;
    writeln!(s, "consumption=({}, {})", b.b1.decimal(), b.b2.decimal())?;
    writeln!(s, "moves=[{}]", classes.join(","))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_value_map(
    common: &Common,
    simulate: bool,
    decimal: bool,
    boundary: Option<PathBuf>,
    budget: Option<u64>,
) -> Result<ExitCode> {
    let cfg = ScenarioConfig::load(&common.config)?;
    let goals = cfg.goal_pair()?;
    let initial = cfg.initial()?;
    let window = cfg.window()?;
    let budget = budget.or(cfg.budget).unwrap_or(DEFAULT_CELL_BUDGET);
    let rows = value_map(&goals, initial, &window, budget)?;

    if simulate {
        let chunks: Vec<_> = rows
            .par_chunks(64)
            .map(|chunk| simulate_mismatches(chunk, initial, &goals))
            .collect::<Result<_, _>>()?;
        let mismatches: Vec<_> = chunks.into_iter().flatten().collect();
        if let Some(m) = mismatches.first() {
            bail!(
                "{} cells disagree with simulation; first at ({}, {}): closed form {:?}, played {:?}",
                mismatches.len(),
                m.x,
                m.y,
                m.closed_form.map(|v| v.0),
                m.simulated.map(|v| v.0)
            );
        }
    }

    let header = if decimal {
        ["x", "y", "v1", "v2", "ve", "region", "n_a", "n_r1", "n_r2"]
    } else {
        ["x", "y", "v1_half", "v2_half", "ve_half", "region", "n_a", "n_r1", "n_r2"]
    };
    let mut w = csv::Writer::from_writer(output(&common.out)?);
    w.write_record(header)?;
    for r in &rows {
        w.write_record([
            r.x.to_string(),
            r.y.to_string(),
            units(r.v1, decimal),
            units(r.v2, decimal),
            units(r.ve, decimal),
            r.region.to_string(),
            r.n_a.to_string(),
            r.n_r1.to_string(),
            r.n_r2.to_string(),
        ])?;
    }
    w.flush()?;

    let switch = switch_boundary(&rows);
    if let Some(path) = boundary {
        let mut w = csv::Writer::from_path(&path)
            .with_context(|| format!("creating {}", path.display()))?;
        w.write_record(["x", "y"])?;
        for p in &switch {
            w.write_record([p.x.to_string(), p.y.to_string()])?;
        }
        w.flush()?;
    }
    let mut s = summary(common);
    write!(s, "{} cells, {} on the switch boundary", rows.len(), switch.len())?;
    if simulate {
        write!(s, ", simulation agrees everywhere")?;
    }
    writeln!(s)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare_paths(common: &Common, decimal: bool) -> Result<ExitCode> {
    let cfg = ScenarioConfig::load(&common.config)?;
    let goals = cfg.goal_pair()?;
    let eater = cfg.eater()?.build();
    let cmp = compare_paths(
        cfg.start()?,
        cfg.initial()?,
        &goals,
        cfg.true_goal()?,
        cfg.exaggeration_depth,
        &eater,
    )?;

    let columns = [
        Some(&cmp.equilibrium.cumulative),
        Some(&cmp.explicit_first.cumulative),
        cmp.exaggeration.as_ref().ok().map(|r| &r.cumulative),
    ];
    let len = columns.iter().flatten().map(|c| c.len()).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(output(&common.out)?);
    w.write_record(["t", "equilibrium", "explicit_first", "exaggeration"])?;
    for t in 0..len {
        let mut record = vec![t.to_string()];
        for col in columns {
            record.push(
                col.and_then(|c| c.get(t))
                    .map(|&v| units(v, decimal))
                    .unwrap_or_default(),
            );
        }
        w.write_record(&record)?;
    }
    w.flush()?;

    let mut s = summary(common);
    writeln!(s, "equilibrium={}", cmp.equilibrium.total.decimal())?;
    writeln!(s, "explicit_first={}", cmp.explicit_first.total.decimal())?;
    match &cmp.exaggeration {
        Ok(run) => writeln!(s, "exaggeration:{}={}", cmp.exaggeration_depth, run.total.decimal())?,
        Err(e) => writeln!(s, "exaggeration:{} unavailable: {e}", cmp.exaggeration_depth)?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    goals: mover_eater::GoalPair,
    eater: String,
    bounds: SearchBounds,
    cells: usize,
    passed: usize,
    failed: usize,
    inconclusive: usize,
    audits: &'a [EquilibriumAudit],
}

fn cmd_verify(common: &Common, slack: Option<u32>, budget: Option<u64>) -> Result<ExitCode> {
    let cfg = ScenarioConfig::load(&common.config)?;
    let goals = cfg.goal_pair()?;
    let initial = cfg.initial()?;
    let eater_spec = cfg.eater()?;
    let defaults = SearchBounds::default();
    let bounds = SearchBounds {
        slack: slack.or(cfg.slack).unwrap_or(defaults.slack),
        budget: budget.or(cfg.budget).unwrap_or(defaults.budget),
        horizon_cap: cfg.horizon_cap,
    };
    let starts: Vec<_> = match (cfg.window, cfg.start) {
        (Some(_), _) => cfg.window()?.cells().collect(),
        (None, Some(_)) => vec![cfg.start()?],
        (None, None) => bail!("verify needs a window or a start position"),
    };

    let mut audits = starts
        .par_iter()
        .map(|&start| verify_equilibrium(start, initial, &goals, &eater_spec.build(), bounds))
        .collect::<Result<Vec<_>, _>>()?;
    audits.sort_by_key(|a| (a.start.y, a.start.x));

    let count = |v: Verdict| audits.iter().filter(|a| a.verdict == v).count();
    let report = VerifyReport {
        goals,
        eater: eater_spec.to_string(),
        bounds,
        cells: audits.len(),
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        inconclusive: count(Verdict::Inconclusive),
        audits: &audits,
    };
    let mut out = output(&common.out)?;
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    out.flush()?;

    let mut s = summary(common);
    writeln!(
        s,
        "{} cells: {} passed, {} failed, {} inconclusive",
        report.cells, report.passed, report.failed, report.inconclusive
    )?;
    if let Some(audit) = audits.iter().find(|a| a.verdict == Verdict::Fail) {
        writeln!(s, "first failure at {}", audit.start)?;
        if let Some(witness) = audit.first_witness() {
            writeln!(s, "witness: {}", serde_json::to_string(witness)?)?;
        }
        return Ok(ExitCode::from(1));
    }
    if report.inconclusive > 0 {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify_map(common: &Common, budget: Option<u64>) -> Result<ExitCode> {
    let cfg = ScenarioConfig::load(&common.config)?;
    let goals = cfg.goal_pair()?;
    let window = cfg.window()?;
    let budget = budget.or(cfg.budget).unwrap_or(DEFAULT_CELL_BUDGET);
    let mut w = csv::Writer::from_writer(output(&common.out)?);
    for row in classify_map(&goals, &window, budget)? {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}
