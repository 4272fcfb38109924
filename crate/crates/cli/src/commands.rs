use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use thiserror::Error;

use partmono_core::algos::run_multifit;
use partmono_core::harness::{
    check_count_monotone, check_count_monotone_schedule, check_value_monotone, run_trial, Algorithm, Change,
    Condition, HarnessError, MonotoneCheckResult, Perturbation, SearchConfig, Subject, ViolationReport,
};
use partmono_core::oracle::{optimal_partition, Objective, OracleError, DEFAULT_BUDGET};
use partmono_core::precedence::{schedule, DispatchPolicy, PrecedenceInstance};
use partmono_core::{Instance, Partition, SumVector};

use crate::format::{self, instance_fields, join, one_based, parts_field, ParseError};
use crate::{EXIT_OK, EXIT_VIOLATION};

#[derive(Debug, Parser)]
#[command(name = "partmono", version, about = "Number-partitioning heuristics and monotonicity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition an instance file with ls, lpt or multifit.
    Partition {
        algo: String,
        file: PathBuf,
        /// Print one key=value record instead of the text report.
        #[arg(long)]
        machine: bool,
    },
    /// List-schedule a precedence file.
    Schedule {
        file: PathBuf,
        /// `event` or `list-order`.
        #[arg(long, default_value = "event")]
        policy: String,
        #[arg(long)]
        machine: bool,
    },
    /// Check monotonicity for one perturbation (--index/--delta) or a larger
    /// bin count (--m2). `event` and `list-order` take a precedence file and
    /// need --m2.
    Check {
        algo: String,
        file: PathBuf,
        /// 1-based position of the value to raise.
        #[arg(long, requires = "delta", conflicts_with = "m2")]
        index: Option<usize>,
        #[arg(long, requires = "index", conflicts_with = "m2")]
        delta: Option<u64>,
        #[arg(long)]
        m2: Option<usize>,
        #[arg(long)]
        machine: bool,
    },
    /// Random search for value-monotonicity violations.
    Search {
        algo: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Chosen from the clock and printed when omitted.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        m_min: usize,
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        #[arg(long, default_value_t = 1)]
        value_min: u64,
        #[arg(long, default_value_t = 100)]
        value_max: u64,
        #[arg(long, default_value_t = 1)]
        eps_min: u64,
        #[arg(long, default_value_t = 20)]
        eps_max: u64,
    },
    /// Exact optimum by exhaustive enumeration.
    Oracle {
        file: PathBuf,
        /// `minmax` or `maxmin`.
        #[arg(long, default_value = "minmax")]
        objective: String,
        /// Also run ls, lpt or multifit and print the ratio to the optimum.
        #[arg(long)]
        compare: Option<String>,
        /// Maximum number of assignments to evaluate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    format::parse_instance(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn load_precedence(path: &Path) -> Result<PrecedenceInstance, CliError> {
    format::parse_precedence(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn algorithm(name: &str) -> Result<Algorithm, CliError> {
    Ok(name.parse::<Algorithm>()?)
}

fn policy(name: &str) -> Result<DispatchPolicy, CliError> {
    name.parse().map_err(|e: partmono_core::precedence::UnknownPolicy| CliError::Usage(e.to_string()))
}

/// Runs one command, writing its report to `out`. Returns the exit code for
/// successful runs (0 or 1); errors map to exit code 2.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Partition { algo, file, machine } => cmd_partition(&algo, &file, machine, out),
        Command::Schedule { file, policy: p, machine } => cmd_schedule(&file, &p, machine, out),
        Command::Check { algo, file, index, delta, m2, machine } => {
            cmd_check(&algo, &file, index.zip(delta), m2, machine, out)
        }
        Command::Search {
            algo,
            trials,
            seed,
            n_min,
            n_max,
            m_min,
            m_max,
            value_min,
            value_max,
            eps_min,
            eps_max,
        } => {
            let cfg = SearchConfig {
                algorithm: algorithm(&algo)?,
                trials,
                seed: seed.unwrap_or_else(clock_seed),
                n: n_min..=n_max,
                m: m_min..=m_max,
                values: value_min..=value_max,
                epsilon: eps_min..=eps_max,
            };
            cmd_search(&cfg, out)
        }
        Command::Oracle { file, objective, compare, budget, machine } => {
            cmd_oracle(&file, &objective, compare.as_deref(), budget, machine, out)
        }
    }
}

fn clock_seed() -> u64 {
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    nanos ^ (u64::from(std::process::id()) << 32)
}

fn partition_lines(p: &Partition, out: &mut dyn Write) -> io::Result<()> {
    for (j, (part, sum)) in p.parts().iter().zip(p.sums()).enumerate() {
        writeln!(out, "part {}: indices={} sum={}", j + 1, one_based(part), sum)?;
    }
    Ok(())
}

fn cmd_partition(algo: &str, file: &Path, machine: bool, out: &mut dyn Write) -> Result<u8, CliError> {
    let algo = algorithm(algo)?;
    let inst = load_instance(file)?;
    let (p, capacity) = match algo {
        Algorithm::Multifit => {
            let r = run_multifit(&inst);
            (r.partition, Some(r.capacity))
        }
        _ => (algo.run(&inst), None),
    };
    let cap = capacity.map(|c| format!("capacity={c} ")).unwrap_or_default();
    if machine {
        writeln!(
            out,
            "algo={algo} {} parts={} sums={} {cap}max={} min={}",
            instance_fields(&inst),
            parts_field(&p),
            join(p.sums(), ","),
            p.max_sum(),
            p.min_sum()
        )?;
    } else {
        partition_lines(&p, out)?;
        writeln!(out, "{cap}max={} min={}", p.max_sum(), p.min_sum())?;
    }
    Ok(EXIT_OK)
}

fn cmd_schedule(file: &Path, policy_name: &str, machine: bool, out: &mut dyn Write) -> Result<u8, CliError> {
    let policy = policy(policy_name)?;
    let inst = load_precedence(file)?;
    let s = schedule(&inst, policy);
    let finish = s.machine_finish_times();
    for k in 0..s.m {
        let jobs = s.machine_jobs(k);
        if machine {
            for j in jobs {
                let a = s.assignments[j];
                writeln!(out, "job={} machine={} start={} finish={}", inst.jobs()[j].id, k + 1, a.start, a.finish)?;
            }
        } else {
            let seq: Vec<String> = jobs
                .iter()
                .map(|&j| format!("{}[{},{}]", inst.jobs()[j].id, s.assignments[j].start, s.assignments[j].finish))
                .collect();
            writeln!(out, "machine {}: {} finish={}", k + 1, seq.join(" "), finish.entries()[k])?;
        }
    }
    if machine {
        writeln!(out, "policy={policy} m={} finish={} makespan={}", s.m, join(finish.entries(), ","), s.makespan)?;
    } else {
        writeln!(out, "policy={policy} makespan={}", s.makespan)?;
    }
    Ok(EXIT_OK)
}

fn arrow(c: Condition, r: &MonotoneCheckResult) -> String {
    match c {
        Condition::MaxDecreased | Condition::MaxIncreased => {
            format!("{c} {}→{}", r.before.max(), r.after.max())
        }
        Condition::MinDecreased | Condition::MinIncreased => {
            format!("{c} {}→{}", r.before.min(), r.after.min())
        }
        Condition::NoDomination => c.to_string(),
    }
}

fn subject_fields(r: &MonotoneCheckResult) -> String {
    let head = match &r.subject {
        Subject::Partition { algorithm, instance } => format!("algo={algorithm} {}", instance_fields(instance)),
        Subject::Schedule { policy, instance } => format!("algo={policy} m={} jobs={}", instance.m(), instance.n()),
    };
    let change = match &r.change {
        Change::Raise(p) => format!("index={} epsilon={}", p.index, p.epsilon),
        Change::Lower(p) => format!("index={} epsilon=-{}", p.index, p.epsilon),
        Change::Entrywise(v) => format!("raised_values={}", join(v, ",")),
        Change::BinCount(m2) => format!("m2={m2}"),
    };
    format!("{head} {change}")
}

fn domination_field(r: &MonotoneCheckResult) -> String {
    match (&r.change, &r.witness) {
        (Change::BinCount(_), _) => "domination=n/a".into(),
        (_, Some(w)) => {
            let perm: Vec<usize> = w.permutation().iter().map(|p| p + 1).collect();
            format!("domination=yes witness={}", join(&perm, ","))
        }
        (_, None) => "domination=no".into(),
    }
}

/// One-line machine-readable form of a check result.
pub fn check_record(r: &MonotoneCheckResult) -> String {
    let violations = if r.violations.is_empty() {
        "none".to_string()
    } else {
        r.violations.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")
    };
    format!(
        "verdict={} {} before={} after={} {} violations={}",
        r.verdict(),
        subject_fields(r),
        join(r.before.entries(), ","),
        join(r.after.entries(), ","),
        domination_field(r),
        violations
    )
}

fn sums_line(label: &str, v: &SumVector) -> String {
    format!("{label}={v} max={} min={}", v.max(), v.min())
}

fn cmd_check(
    algo: &str,
    file: &Path,
    raise: Option<(usize, u64)>,
    m2: Option<usize>,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let result = match (raise, m2) {
        (Some((index, delta)), None) => {
            let algo = algorithm(algo)?;
            let inst = load_instance(file)?;
            check_value_monotone(algo, &inst, Perturbation { index, epsilon: delta })?
        }
        (None, Some(m2)) => match algo.parse::<DispatchPolicy>() {
            Ok(p) => check_count_monotone_schedule(p, &load_precedence(file)?, m2)?,
            Err(_) => check_count_monotone(algorithm(algo)?, &load_instance(file)?, m2)?,
        },
        _ => return Err(CliError::Usage("give either --index and --delta, or --m2".into())),
    };
    if machine {
        writeln!(out, "{}", check_record(&result))?;
    } else {
        writeln!(out, "{}", subject_fields(&result))?;
        writeln!(out, "{}", sums_line("before", &result.before))?;
        writeln!(out, "{}", sums_line("after", &result.after))?;
        writeln!(out, "{}", domination_field(&result))?;
        if result.is_violation() {
            let parts: Vec<String> = result.violations.iter().map(|&c| arrow(c, &result)).collect();
            writeln!(out, "VIOLATION {}", parts.join(" "))?;
        } else {
            writeln!(out, "PASS")?;
        }
    }
    Ok(if result.is_violation() { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_search(cfg: &SearchConfig, out: &mut dyn Write) -> Result<u8, CliError> {
    cfg.validate()?;
    writeln!(
        out,
        "search algo={} trials={} seed={} n={}..{} m={}..{} values={}..{} epsilon={}..{}",
        cfg.algorithm,
        cfg.trials,
        cfg.seed,
        cfg.n.start(),
        cfg.n.end(),
        cfg.m.start(),
        cfg.m.end(),
        cfg.values.start(),
        cfg.values.end(),
        cfg.epsilon.start(),
        cfg.epsilon.end()
    )?;
    // Indexed parallel collect keeps trial order.
    let reports: Vec<ViolationReport> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|t| {
            let result = run_trial(cfg, t);
            result.is_violation().then_some(ViolationReport { seed: cfg.seed, trial: t, result })
        })
        .collect();
    for r in &reports {
        writeln!(out, "violation trial={} seed={} {}", r.trial, r.seed, check_record(&r.result))?;
    }
    writeln!(out, "algo={} trials={} violations={}", cfg.algorithm, cfg.trials, reports.len())?;
    Ok(if reports.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_oracle(
    file: &Path,
    objective: &str,
    compare: Option<&str>,
    budget: u64,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let objective: Objective = objective.parse().map_err(|e: partmono_core::oracle::UnknownObjective| {
        CliError::Usage(e.to_string())
    })?;
    let compare = compare.map(algorithm).transpose()?;
    let inst = load_instance(file)?;
    let opt = optimal_partition(&inst, objective, budget)?;
    let mut summary = format!("opt={}", opt.value);
    if let Some(algo) = compare {
        let value = objective.value_of(&algo.run(&inst));
        let ratio = if opt.value == 0 {
            "n/a".to_string()
        } else {
            format!("{:.3}", value as f64 / opt.value as f64)
        };
        summary.push_str(&format!(" algo={value} ratio={ratio}"));
    }
    if machine {
        writeln!(
            out,
            "objective={objective} {} parts={} sums={} {summary}",
            instance_fields(&inst),
            parts_field(&opt.witness),
            join(opt.witness.sums(), ",")
        )?;
    } else {
        partition_lines(&opt.witness, out)?;
        writeln!(out, "{summary}")?;
    }
    Ok(EXIT_OK)
}
