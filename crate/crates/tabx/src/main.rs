use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tabx::branching::{self, BranchingReport};
use tabx::io::{parse_tableau, render_tableau, RenderFormat};
use tabx::lr::{self, LrInstance};
use tabx::partition::{even_subpartitions, Partition};
use tabx::{companion, sundaram, Error, SkewTableau};

const DEFAULT_MAX_CELLS: usize = 8;
const DEFAULT_MAX_N: usize = 3;

#[derive(Parser)]
#[command(
    name = "tabx",
    about = "Exact branching combinatorics for GL(2n) restricted to Sp(2n)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckModel {
    Sundaram,
    Symplectic,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Littlewood-Richardson tableaux of a skew shape and weight
    Enumerate {
        #[arg(long, value_parser = parse_partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition_arg)]
        nu: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Compute the left companion of a tableau read from a file
    Companion {
        #[arg(long)]
        input: PathBuf,
        /// Also print the defining chain, one partition per line, top
        /// index first
        #[arg(long)]
        emit_chain: bool,
    },
    /// Check the Sundaram or symplectic property of a tableau
    Check {
        #[arg(long, value_enum)]
        model: CheckModel,
        #[arg(long)]
        input: PathBuf,
        /// Flag bound n; defaults to the n of the input file
        #[arg(long)]
        n: Option<usize>,
    },
    /// Branching coefficient for (lambda, mu) at rank n
    Count {
        #[arg(long, value_parser = parse_partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition_arg)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        /// Print per-weight counts under both models before the total
        #[arg(long)]
        per_nu: bool,
    },
    /// Sweep all instances up to the bounds and verify the violation
    /// mirroring between tableaux and their companions
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_CELLS)]
        max_cells: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Write one JSON report per instance to this file
        #[arg(long)]
        report: Option<PathBuf>,
        /// Acknowledge the combinatorial blowup past the default bounds
        #[arg(long)]
        unsafe_large: bool,
    },
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
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
        Command::Enumerate {
            lambda,
            mu,
            nu,
            n,
            format,
        } => {
            let inst = LrInstance::new(lambda, mu, nu, 2 * n)?;
            let mut stdout = std::io::stdout().lock();
            for (i, t) in lr::enumerate(&inst).iter().enumerate() {
                match format {
                    OutputFormat::Text => {
                        if i > 0 {
                            writeln!(stdout)?;
                        }
                        stdout.write_all(render_tableau(t, RenderFormat::Text).as_bytes())?;
                    }
                    OutputFormat::Json => {
                        stdout.write_all(render_tableau(t, RenderFormat::Record).as_bytes())?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Companion { input, emit_chain } => {
            let t = read_tableau(&input)?;
            let res = companion::left_companion(&t)?;
            let mut out = render_tableau(res.companion(), RenderFormat::Text);
            if emit_chain {
                for member in res.chain().members() {
                    out.push_str(&member.to_string());
                    out.push('\n');
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { model, input, n } => {
            let t = read_tableau(&input)?;
            let violation = match model {
                CheckModel::Sundaram => {
                    let n = n.unwrap_or(t.two_n() / 2);
                    sundaram::minimal_violation(&t, n)?
                }
                CheckModel::Symplectic => {
                    if !t.is_straight() {
                        return Err(Error::SkewInput.into());
                    }
                    companion::minimal_symplectic_violation(&t)
                }
            };
            match violation {
                None => {
                    println!("satisfied");
                    Ok(ExitCode::SUCCESS)
                }
                Some(v) => {
                    println!("violated");
                    println!("{}", serde_json::to_string(&v)?);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Count {
            lambda,
            mu,
            n,
            per_nu,
        } => {
            if per_nu {
                let size = lambda.size() - mu.size();
                for nu in even_subpartitions(&lambda, size) {
                    let inst = LrInstance::new(lambda.clone(), mu.clone(), nu.clone(), 2 * n)?;
                    let ts = lr::enumerate(&inst);
                    let lrs = sundaram::enumerate_lrs(&inst, n)?.len();
                    let mut kwon = 0;
                    for t in &ts {
                        if companion::is_symplectic(companion::left_companion(t)?.companion()) {
                            kwon += 1;
                        }
                    }
                    println!("nu={nu} lr={} lrs={lrs} kwon={kwon}", ts.len());
                }
            }
            println!("{}", branching::sundaram_count(&lambda, &mu, n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_cells,
            max_n,
            report,
            unsafe_large,
        } => {
            if (max_cells > DEFAULT_MAX_CELLS || max_n > DEFAULT_MAX_N) && !unsafe_large {
                bail!(
                    "bounds beyond --max-cells {DEFAULT_MAX_CELLS} --max-n {DEFAULT_MAX_N} \
                     require --unsafe-large"
                );
            }
            let instances = branching::sweep_instances(max_cells, max_n);
            let threads = std::env::var("TABX_THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .unwrap_or(0);
            let reports = run_instances(&instances, threads)?;

            if let Some(path) = report {
                let mut file = fs::File::create(&path)
                    .with_context(|| format!("cannot create {}", path.display()))?;
                for r in &reports {
                    serde_json::to_writer(&mut file, r)?;
                    file.write_all(b"\n")?;
                }
            }
            let tableaux: usize = reports.iter().map(|r| r.tableaux()).sum();
            let all_hold = reports.iter().all(|r| r.theorem_holds);
            for r in reports.iter().filter(|r| !r.theorem_holds) {
                for c in &r.counterexamples {
                    eprintln!(
                        "counterexample at lambda={} mu={} n={} nu={}: {}",
                        r.lambda, r.mu, r.n, c.nu, c.detail
                    );
                }
            }
            println!(
                "instances={} tableaux={tableaux} theorem_holds={all_hold}",
                reports.len()
            );
            Ok(if all_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn read_tableau(path: &PathBuf) -> Result<SkewTableau> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(parse_tableau(&text)?)
}

/// Runs the instance jobs, fanning out over TABX_THREADS workers when at
/// least 2 are requested; results are merged back in instance order.
fn run_instances(
    instances: &[(Partition, Partition, usize)],
    threads: usize,
) -> Result<Vec<BranchingReport>> {
    if threads < 2 {
        return instances
            .iter()
            .map(|(l, m, n)| branching::verify_mirroring(l, m, *n).map_err(Into::into))
            .collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<(usize, Result<BranchingReport, Error>)>> =
        Mutex::new(Vec::with_capacity(instances.len()));
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= instances.len() {
                    break;
                }
                let (l, m, n) = &instances[i];
                let r = branching::verify_mirroring(l, m, *n);
                slots.lock().expect("worker panicked").push((i, r));
            });
        }
    });
    let mut collected = slots.into_inner().expect("worker panicked");
    collected.sort_by_key(|(i, _)| *i);
    collected
        .into_iter()
        .map(|(_, r)| r.map_err(Into::into))
        .collect()
}
