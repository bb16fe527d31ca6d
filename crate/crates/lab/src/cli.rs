//! Command-line front end of `hplab`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use crate::formats::{read_json, CharacterFile, PolynomialFile};
use crate::report::{audit, Report};
use crate::suites::{self, Context as SuiteContext, SUITES};
use crate::ExperimentConfig;
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dirichlet_hp::means::{default_time_steps, estimate_mean};
use dirichlet_hp::poisson::check_pointwise_bound;
use dirichlet_hp::riesz::convergence_study;
use dirichlet_hp::{Complex64, HalfPlanePoint, MeanRoute};

#[derive(Parser)]
#[command(name = "hplab", version, about = "Numerical lab for H^p spaces of Dirichlet series")]
struct Cli {
    /// Experiment config (JSON); built-in defaults when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the config seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the config output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (speed only; results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate f (or f_χ) at s = sigma + i t.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        /// Polynomial file instead of the configured polynomial.
        #[arg(long)]
        poly: Option<PathBuf>,
        /// Character file; evaluates the vertical limit f_χ.
        #[arg(long)]
        chi: Option<PathBuf>,
    },
    /// p-means over the configured p values and sigma grid.
    Means {
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Riesz convergence study at s = sigma + i t.
    Riesz {
        #[arg(long, default_value_t = 3.5)]
        k: f64,
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_delimiter = ',', default_values_t = [100u64, 1_000, 10_000, 100_000])]
        n: Vec<u64>,
    },
    /// Poisson extension and pointwise growth checks.
    Poisson,
    /// Run a suite (or `all`) and write report.csv and summary.json.
    Verify { suite: String },
    /// Re-derive every status in an existing report.csv.
    Report { csv: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    All,
    Exact,
    Time,
    Mc,
}

fn load_config(cli: &Cli) -> anyhow::Result<ExperimentConfig> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(o) = &cli.out {
        cfg.output_path = o.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out`. Exit codes: 0 success, 1 failed checks, 2 usage or input errors.
pub fn main_with<I, T>(args: I, out: &mut (dyn Write + Send)) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .context("building thread pool")
            .and_then(|pool| pool.install(|| run(&cli, out))),
        None => run(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut (dyn Write + Send)) -> anyhow::Result<ExitCode> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Eval { sigma, t, poly, chi } => {
            let ctx = SuiteContext::new(&cfg)?;
            let f = match poly {
                Some(p) => read_json::<PolynomialFile>(p)?.to_polynomial()?,
                None => ctx.f.clone(),
            };
            let f = match chi {
                Some(c) => {
                    let chi = read_json::<CharacterFile>(c)?.to_character()?;
                    ctx.torus.vertical_limit(&f, &chi)?
                }
                None => f,
            };
            let v = f.eval(Complex64::new(*sigma, *t));
            writeln!(out, "{} {}", v.re, v.im)?;
        }
        Command::Means { method } => {
            let ctx = SuiteContext::new(&cfg)?;
            writeln!(out, "method,p,sigma,T_or_samples,value,stderr")?;
            for &p in &cfg.p_values {
                for &sigma in &cfg.sigma_grid {
                    let mut routes = Vec::new();
                    if p == 2.0 && matches!(method, Method::All | Method::Exact) {
                        routes.push(MeanRoute::Exact2);
                    }
                    if matches!(method, Method::All | Method::Time) {
                        routes.push(MeanRoute::TimeAverage {
                            horizon: cfg.horizon,
                            steps: Some(default_time_steps(ctx.f.degree(), cfg.horizon)),
                        });
                    }
                    if matches!(method, Method::All | Method::Mc) {
                        routes.push(MeanRoute::MonteCarlo {
                            samples: cfg.mc_samples as usize,
                            seed: cfg.seed,
                        });
                    }
                    for r in routes {
                        let e = estimate_mean(&ctx.torus, &ctx.f, sigma, p, r)?;
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            e.method.as_str(),
                            p,
                            sigma,
                            e.extent,
                            e.value,
                            e.stderr
                        )?;
                    }
                }
            }
        }
        Command::Riesz { k, sigma, t, n } => {
            let ctx = SuiteContext::new(&cfg)?;
            writeln!(out, "N,k,sigma,t,abs_error,bound")?;
            for pt in convergence_study(&ctx.f, *k, Complex64::new(*sigma, *t), n)? {
                writeln!(out, "{},{},{},{},{},{}", pt.n, pt.k, sigma, t, pt.abs_error, pt.bound)?;
            }
        }
        Command::Poisson => {
            let ctx = SuiteContext::new(&cfg)?;
            writeln!(out, "check,point,measured,bound,margin,pass")?;
            let g = ctx.torus.vertical_limit(&ctx.f, &ctx.chi)?;
            for (sigma, t) in suites::poisson_points() {
                let s = HalfPlanePoint::new(sigma, t)?;
                let (cert, spec) = suites::poisson_window(&ctx, s)?;
                let v = dirichlet_hp::poisson::poisson_extend(&ctx.torus, &ctx.f, &ctx.chi, s, &cert, &spec)?;
                let err = (v.value - g.eval_at(s)).norm();
                let bound = v.bound();
                let status = if err <= bound { "pass" } else { "fail" };
                writeln!(out, "extension,{sigma}{t:+}i,{err},{bound},{},{status}", bound - err)?;
            }
            let cert = ctx.cert(2.0, cfg.horizon)?;
            let points = suites::poisson_sample_points(cfg.seed);
            for r in check_pointwise_bound(&ctx.torus, &ctx.f, &ctx.chi, &cert, &points)? {
                writeln!(
                    out,
                    "pointwise,{}{:+}i,{},{},{},{}",
                    r.point.sigma,
                    r.point.t,
                    r.measured,
                    r.bound,
                    r.margin(),
                    r.status.as_str()
                )?;
            }
        }
        Command::Verify { suite } => {
            let list: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                let s = SUITES
                    .iter()
                    .copied()
                    .find(|s| s == suite)
                    .with_context(|| format!("unknown suite `{suite}`; expected one of {SUITES:?} or all"))?;
                vec![s]
            };
            let start = Instant::now();
            let (report, _) = suites::run(&cfg, &list)?;
            let (csv, json) = report.emit(&cfg.output_path)?;
            eprintln!("wall time: {:.2} s", start.elapsed().as_secs_f64());
            print_summary(out, &report)?;
            writeln!(out, "wrote {} and {}", csv.display(), json.display())?;
            if report.has_failures() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Report { csv } => {
            let file = std::fs::File::open(csv).with_context(|| format!("opening {}", csv.display()))?;
            let a = audit(file)?;
            writeln!(
                out,
                "{} rows: pass {}, fail {}, inconclusive {}",
                a.rows, a.counts.pass, a.counts.fail, a.counts.inconclusive
            )?;
            if !a.mismatches.is_empty() {
                writeln!(out, "status mismatch on rows {:?}", a.mismatches)?;
                return Ok(ExitCode::from(1));
            }
            if a.counts.fail > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_summary(out: &mut (dyn Write + Send), report: &Report) -> anyhow::Result<()> {
    for (suite, c) in report.summary() {
        writeln!(
            out,
            "{suite:<8} pass {:>4}  fail {:>3}  inconclusive {:>3}",
            c.pass, c.fail, c.inconclusive
        )?;
    }
    Ok(())
}
