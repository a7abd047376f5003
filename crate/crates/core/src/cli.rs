//! Command-line surface: every computation as a table generator.

use std::f64::consts::TAU;

use clap::{Args, Parser, Subcommand};

use crate::circle::{self, CirclePoint};
use crate::comparison;
use crate::error::{Error, Result};
use crate::fock::{algebra_identities, FockTruncation, PhysicalParams};
use crate::magnetic::{self, LevelDistribution, MagneticPoint};
use crate::output::{RowBuilder, Table};
use crate::series::SeriesConfig;

/// Residual threshold for `algebra` rows.
pub const ALGEBRA_THRESHOLD: f64 = 1e-10;
/// Interior margin used by `algebra`.
pub const ALGEBRA_MARGIN: usize = 1;

#[derive(Debug, Parser)]
#[command(name = "lcs", version, about = "Coherent states of a charged particle in a uniform magnetic field")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Relative tolerance for series truncation
    #[arg(long, global = true, env = "LC_TOL")]
    pub tol: Option<f64>,

    /// Term cap for series evaluation
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,

    /// Emit one JSON object per row instead of CSV
    #[arg(long, global = true)]
    pub json: bool,
}

impl CommonArgs {
    pub fn series_config(&self) -> Result<SeriesConfig> {
        SeriesConfig::new(
            self.tol.unwrap_or(SeriesConfig::DEFAULT_REL_TOL),
            self.max_terms.unwrap_or(SeriesConfig::DEFAULT_MAX_TERMS),
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expectation values of a circle coherent state
    #[command(allow_negative_numbers = true)]
    Circle {
        #[arg(long)]
        l: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Expectation values of a magnetic coherent state
    #[command(allow_negative_numbers = true)]
    Expect {
        #[arg(long)]
        l: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value_t = 0.0)]
        x0: f64,
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        #[arg(long, default_value_t = 1.0)]
        mu_omega: f64,
    },
    /// Landau-level distribution p_n
    #[command(allow_negative_numbers = true)]
    Dist {
        #[arg(long)]
        l: f64,
        #[arg(long, default_value_t = 0.0)]
        x0: f64,
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        #[arg(long, default_value_t = 20)]
        n_upper: u64,
        #[arg(long, default_value_t = 1.0)]
        mu_omega: f64,
    },
    /// Closeness distances d(l) and d_MM(l) over a grid
    #[command(allow_negative_numbers = true)]
    Compare {
        #[arg(long)]
        l_min: f64,
        #[arg(long)]
        l_max: f64,
        #[arg(long, default_value_t = 19)]
        steps: usize,
        #[arg(long, default_value_t = 1.0)]
        mu_omega: f64,
    },
    /// Residuals of the operator identities on a truncated Fock space
    #[command(allow_negative_numbers = true)]
    Algebra {
        #[arg(long, default_value_t = 1.0)]
        mu_omega: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = FockTruncation::DEFAULT_MAX)]
        n_max: usize,
        #[arg(long, default_value_t = FockTruncation::DEFAULT_MAX)]
        m_max: usize,
    },
    /// Time evolution of a state label under H_perp
    #[command(allow_negative_numbers = true)]
    Evolve {
        #[arg(long)]
        l: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value_t = 0.0)]
        x0: f64,
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// End time; defaults to one cyclotron period 2 pi / omega
        #[arg(long)]
        t_max: Option<f64>,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
}

/// A command's table and whether every check it ran passed.
#[derive(Debug)]
pub struct Outcome {
    pub table: Table,
    pub passed: bool,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Self { table, passed: true }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = cli.common.series_config()?;
    match cli.command {
        Command::Circle { l, phi } => cmd_circle(l, phi, &cfg).map(Outcome::from),
        Command::Expect { l, phi, x0, y0, mu_omega } => {
            cmd_expect(l, phi, x0, y0, mu_omega, &cfg).map(Outcome::from)
        }
        Command::Dist { l, x0, y0, n_upper, mu_omega } => {
            cmd_dist(l, x0, y0, n_upper, mu_omega, &cfg).map(Outcome::from)
        }
        Command::Compare { l_min, l_max, steps, mu_omega } => {
            cmd_compare(l_min, l_max, steps, mu_omega, &cfg).map(Outcome::from)
        }
        Command::Algebra { mu_omega, omega, n_max, m_max } => cmd_algebra(mu_omega, omega, n_max, m_max),
        Command::Evolve { l, phi, x0, y0, omega, t_max, steps } => {
            cmd_evolve(l, phi, x0, y0, omega, t_max, steps).map(Outcome::from)
        }
    }
}

pub fn cmd_circle(l: f64, phi: f64, cfg: &SeriesConfig) -> Result<Table> {
    let p = CirclePoint::new(l, phi)?;
    let mut t = Table::new();
    t.push(
        RowBuilder::new()
            .col("l", p.l())
            .col("phi", p.phi())
            .col("j_exp", circle::j_expectation(&p, cfg)?)
            .complex("u_exp", circle::u_expectation(&p, cfg)?)
            .complex("u_rel", circle::u_relative_expectation(&p, cfg)?),
    );
    Ok(t)
}

pub fn cmd_expect(l: f64, phi: f64, x0: f64, y0: f64, mu_omega: f64, cfg: &SeriesConfig) -> Result<Table> {
    let params = PhysicalParams::with_mu_omega(mu_omega)?;
    let p = MagneticPoint::new(l, phi, x0, y0)?;
    let l_exp = magnetic::l_expectation(l, cfg)?;
    let r_plus = magnetic::r_plus_expectation(l, p.phi(), &params, cfg)?;
    let rr = magnetic::r_plus_relative(l, p.phi(), &params, cfg)?;
    let r0 = magnetic::r0_expectation(&p);
    let classical = num_complex::Complex64::from_polar(params.radius(l), p.phi());
    let rel = |a: f64, b: f64| if b == 0.0 { f64::NAN } else { (a - b) / b };
    let mut t = Table::new();
    t.push(
        RowBuilder::new()
            .col("l", l)
            .col("phi", p.phi())
            .col("x0", x0)
            .col("y0", y0)
            .col("mu_omega", mu_omega)
            .col("L", l_exp)
            .complex("r_plus", r_plus)
            .complex("rr", rr)
            .complex("r0", r0)
            .complex("r_classical", classical)
            .col("L_rel_err", rel(l_exp, l))
            .col("rr_rel_err", rel(rr.norm(), params.radius(l))),
    );
    Ok(t)
}

pub fn cmd_dist(l: f64, x0: f64, y0: f64, n_upper: u64, mu_omega: f64, cfg: &SeriesConfig) -> Result<Table> {
    if n_upper < 1 {
        return Err(Error::Domain("n_upper must be at least 1".into()));
    }
    let params = PhysicalParams::with_mu_omega(mu_omega)?;
    MagneticPoint::new(l, 0.0, x0, y0)?;
    let dist = LevelDistribution::new(l, cfg)?;
    let p_m0 = magnetic::centre_probability(x0, y0, 0, &params);
    let mut t = Table::new();
    for n in 0..=n_upper {
        let p_n = dist.p(n);
        t.push(
            RowBuilder::new()
                .col("n", n)
                .col("p_n", p_n)
                .col("p_n_m0", p_n * p_m0),
        );
    }
    let peak = dist.peak();
    t.set_footer("argmax", peak.n);
    t.set_footer("predicted", magnetic::predicted_peak(l));
    t.set_footer("tie", peak.tie);
    Ok(t)
}

pub fn cmd_compare(l_min: f64, l_max: f64, steps: usize, mu_omega: f64, cfg: &SeriesConfig) -> Result<Table> {
    let params = PhysicalParams::with_mu_omega(mu_omega)?;
    let rows = comparison::sweep(l_min, l_max, steps, &params, cfg)?;
    let mut t = Table::new();
    for r in rows {
        t.push(RowBuilder::new().col("l", r.l).col("d", r.d).col("d_mm", r.d_mm));
    }
    Ok(t)
}

pub fn cmd_algebra(mu_omega: f64, omega: f64, n_max: usize, m_max: usize) -> Result<Outcome> {
    let params = PhysicalParams::new(mu_omega, omega)?;
    if n_max < 2 || m_max < 2 {
        return Err(Error::Domain("algebra checks need n_max, m_max >= 2".into()));
    }
    let trunc = FockTruncation::new(n_max, m_max)?;
    let mut t = Table::new();
    let mut passed = true;
    for c in algebra_identities(&params, trunc, ALGEBRA_MARGIN) {
        let ok = c.residual <= ALGEBRA_THRESHOLD;
        passed &= ok;
        t.push(
            RowBuilder::new()
                .col("identity", c.name)
                .col("residual", c.residual)
                .col("pass", ok),
        );
    }
    Ok(Outcome { table: t, passed })
}

pub fn cmd_evolve(
    l: f64,
    phi: f64,
    x0: f64,
    y0: f64,
    omega: f64,
    t_max: Option<f64>,
    steps: usize,
) -> Result<Table> {
    if steps < 1 {
        return Err(Error::Domain("steps must be at least 1".into()));
    }
    let params = PhysicalParams::new(1.0, omega)?;
    let p = MagneticPoint::new(l, phi, x0, y0)?;
    let t_max = t_max.unwrap_or(TAU / omega);
    if !t_max.is_finite() {
        return Err(Error::Domain("t_max must be finite".into()));
    }
    let mut t = Table::new();
    for k in 0..=steps {
        let time = t_max * (k as f64 / steps as f64);
        let q = magnetic::evolve(&p, time, &params);
        t.push(
            RowBuilder::new()
                .col("t", time)
                .col("l", q.l())
                .col("phi", q.phi())
                .col("x0", q.x0_bar())
                .col("y0", q.y0_bar()),
        );
    }
    Ok(t)
}
