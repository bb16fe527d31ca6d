//! Verification suites. Each suite runs checks from the core crate against a
//! configured polynomial and a Haar character and returns report rows.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use anyhow::Context as _;
use dirichlet_hp::means::{estimate_cf, max_flow_step};
use dirichlet_hp::{Character, DirichletPolynomial, FlowGrowthCertificate, Torus};

use crate::config::ExperimentConfig;
use crate::generate::generate_polynomial;
use crate::report::{digest, Report, Row};

mod carlson;
mod ergodic;
mod fatou;
mod helson;
mod norms;
mod poisson;
mod riesz;

pub const SUITES: &[&str] = &["carlson", "ergodic", "helson", "riesz", "poisson", "fatou", "norms"];

/// Shared inputs of a run: the polynomial, its torus, one Haar character,
/// and a cache of flow certificates.
pub struct Context<'a> {
    pub cfg: &'a ExperimentConfig,
    pub f: DirichletPolynomial,
    pub torus: Torus,
    pub chi: Character,
    config_json: String,
    ops: RefCell<BTreeSet<&'static str>>,
    certs: RefCell<HashMap<(u64, u64), FlowGrowthCertificate>>,
}

impl<'a> Context<'a> {
    pub fn new(cfg: &'a ExperimentConfig) -> anyhow::Result<Self> {
        cfg.validate()?;
        let f = generate_polynomial(&cfg.polynomial, cfg.seed).context("generating polynomial")?;
        let n = u32::try_from(f.degree()).context("degree")?;
        let torus = Torus::new(n.max(2))?;
        let chi = torus.sample_for(u64::from(n), cfg.seed)?;
        let ctx = Self {
            cfg,
            f,
            torus,
            chi,
            config_json: cfg.inputs_json(),
            ops: RefCell::new(BTreeSet::new()),
            certs: RefCell::new(HashMap::new()),
        };
        ctx.used(&["sample_haar"]);
        Ok(ctx)
    }

    /// Records that the named core operations were invoked.
    pub fn used(&self, names: &[&'static str]) {
        self.ops.borrow_mut().extend(names.iter().copied());
    }

    pub fn operations(&self) -> BTreeSet<&'static str> {
        self.ops.borrow().clone()
    }

    pub fn row(&self, suite: &str, check: String, measured: f64, bound: f64, tolerance: f64) -> Row {
        let d = digest(&[&self.config_json, suite, &check]);
        Row::new(suite, check, d, measured, bound, tolerance)
    }

    /// Flow certificate for `(f, χ, p)` on `[0, t_max]`, at half the maximal grid step.
    pub fn cert(&self, p: f64, t_max: f64) -> anyhow::Result<FlowGrowthCertificate> {
        let key = (p.to_bits(), t_max.to_bits());
        if let Some(c) = self.certs.borrow().get(&key) {
            return Ok(*c);
        }
        self.used(&["estimate_cf"]);
        let step = 0.5 * max_flow_step(self.f.degree()).min(0.2);
        let c = estimate_cf(&self.torus, &self.f, &self.chi, p, t_max.max(1.0), step)?;
        self.certs.borrow_mut().insert(key, c);
        Ok(c)
    }
}

pub fn run_suite(ctx: &Context, name: &str) -> anyhow::Result<Vec<Row>> {
    let rows = match name {
        "carlson" => carlson::run(ctx),
        "ergodic" => ergodic::run(ctx),
        "helson" => helson::run(ctx),
        "riesz" => riesz::run(ctx),
        "poisson" => poisson::run(ctx),
        "fatou" => fatou::run(ctx),
        "norms" => norms::run(ctx),
        other => anyhow::bail!("unknown suite `{other}`"),
    };
    rows.with_context(|| format!("suite {name}"))
}

/// Runs the given suites in canonical order.
pub fn run(cfg: &ExperimentConfig, suites: &[&str]) -> anyhow::Result<(Report, BTreeSet<&'static str>)> {
    let ctx = Context::new(cfg)?;
    let mut report = Report::default();
    for s in SUITES.iter().filter(|s| suites.contains(s)) {
        report.extend(run_suite(&ctx, s)?);
    }
    Ok((report, ctx.operations()))
}

/// Evaluation points of the Poisson suite.
pub fn poisson_points() -> [(f64, f64); 3] {
    poisson::POINTS
}

/// Certificate and window used by the Poisson suite at `s`.
pub fn poisson_window(
    ctx: &Context,
    s: dirichlet_hp::HalfPlanePoint,
) -> anyhow::Result<(FlowGrowthCertificate, dirichlet_hp::PoissonQuadratureSpec)> {
    poisson::window_for(ctx, s, poisson::TAIL_TARGET)
}

/// The seeded sample points of the pointwise growth check.
pub fn poisson_sample_points(seed: u64) -> Vec<dirichlet_hp::HalfPlanePoint> {
    poisson::sample_points(seed, poisson::POINT_COUNT)
}

/// Compact label for a real parameter in a check id.
pub(crate) fn fmt(x: f64) -> String {
    format!("{x}")
}
