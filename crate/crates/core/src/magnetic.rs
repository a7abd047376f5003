//! Coherent states `|zeta, z0>` of a charged particle in a uniform magnetic
//! field, built on the circle coherent states.
//!
//! A state is labelled by the classical angular momentum `l <= 0`, the phase
//! `phi`, and the orbit centre `(x0, y0)`:
//!
//! ```text
//! zeta = r(l) e^{-l/2 + i phi},   r(l) = sqrt(-l / mu omega)
//! z0   = x0 - i y0
//! <n,m|l,phi;x0,y0> = x^{n/2} e^{i n phi} / sqrt(n!) e^{-(n+1/2)^2 / 2}
//!                     * [sqrt(mu omega / 2) z0]^m / sqrt(m!)
//! ```
//!
//! with `x = -(l/2) e^{-l}`. The Landau-level part is the only place where
//! infinite sums appear; their terms `x^n / n! e^{-(n+s)^2}` rise to around
//! `e^{600}` at `l = -50`, so they run through the log-domain engine.
//! Coefficients are unnormalized; every observable normalizes internally.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;

use crate::circle::reduce_angle;
use crate::error::{Error, Result};
use crate::fock::{FockTruncation, PhysicalParams};
use crate::series::{ln_factorial, sum_log_terms, LogTerm, SeriesConfig, SeriesSum};

/// Most negative `l` accepted by the observables.
pub const L_MIN: f64 = -50.0;

/// Label of a magnetic coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagneticPoint {
    l: f64,
    phi: f64,
    x0_bar: f64,
    y0_bar: f64,
}

impl MagneticPoint {
    pub fn new(l: f64, phi: f64, x0_bar: f64, y0_bar: f64) -> Result<Self> {
        check_l(l)?;
        if !(phi.is_finite() && x0_bar.is_finite() && y0_bar.is_finite()) {
            return Err(Error::Domain("phi, x0 and y0 must be finite".into()));
        }
        Ok(Self {
            l,
            phi: reduce_angle(phi),
            x0_bar,
            y0_bar,
        })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn x0_bar(&self) -> f64 {
        self.x0_bar
    }

    pub fn y0_bar(&self) -> f64 {
        self.y0_bar
    }

    /// `zeta = r(l) e^{-l/2 + i phi}`.
    pub fn zeta(&self, params: &PhysicalParams) -> C64 {
        C64::from_polar(params.radius(self.l) * (-0.5 * self.l).exp(), self.phi)
    }

    /// `z0 = x0 - i y0`.
    pub fn z0(&self) -> C64 {
        C64::new(self.x0_bar, -self.y0_bar)
    }
}

/// Validates `L_MIN <= l <= 0`.
pub fn check_l(l: f64) -> Result<()> {
    if l.is_nan() || l > 0.0 {
        return Err(Error::Domain(format!("l must be non-positive, got {l}")));
    }
    if l < L_MIN {
        return Err(Error::Domain(format!("l = {l} is below the supported minimum {L_MIN}")));
    }
    Ok(())
}

/// A coefficient `<n,m|zeta,z0>` with its labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagneticCoefficient {
    pub n: u64,
    pub m: u64,
    pub value: C64,
}

/// `ln x` for `x = -(l/2) e^{-l}`; `-inf` at `l = 0`.
fn ln_x(l: f64) -> f64 {
    if l == 0.0 {
        f64::NEG_INFINITY
    } else {
        (-0.5 * l).ln() - l
    }
}

/// `k ln(base)` with the convention `0^0 = 1`.
fn power_log(k: u64, ln_base: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        k as f64 * ln_base
    }
}

/// Landau-level factor of the coefficient as `(log |.|, phase angle)`.
pub fn landau_part(l: f64, phi: f64, n: u64) -> (f64, f64) {
    let nf = n as f64;
    let log_mag = 0.5 * power_log(n, ln_x(l)) - 0.5 * ln_factorial(n) - 0.5 * (nf + 0.5).powi(2);
    (log_mag, nf * phi)
}

/// Orbit-centre factor `[sqrt(mu omega/2) z0]^m / sqrt(m!)` as `(log |.|, angle)`.
pub fn centre_part(z0: C64, m: u64, params: &PhysicalParams) -> (f64, f64) {
    let w = z0 * (0.5 * params.mu_omega()).sqrt();
    let ln_w = if w.norm() == 0.0 { f64::NEG_INFINITY } else { w.norm().ln() };
    let log_mag = power_log(m, ln_w) - 0.5 * ln_factorial(m);
    let angle = if m == 0 { 0.0 } else { m as f64 * w.arg() };
    (log_mag, angle)
}

/// Log-magnitude and phase angle of `<n,m|l,phi;x0,y0>`.
pub fn coefficient_log(p: &MagneticPoint, n: u64, m: u64, params: &PhysicalParams) -> (f64, f64) {
    let (ln_a, arg_a) = landau_part(p.l, p.phi, n);
    let (ln_b, arg_b) = centre_part(p.z0(), m, params);
    (ln_a + ln_b, arg_a + arg_b)
}

/// `<n,m|l,phi;x0,y0>` (unnormalized).
pub fn coefficient(p: &MagneticPoint, n: u64, m: u64, params: &PhysicalParams) -> MagneticCoefficient {
    let (lm, arg) = coefficient_log(p, n, m, params);
    let value = if lm == f64::NEG_INFINITY {
        C64::new(0.0, 0.0)
    } else {
        C64::from_polar(lm.exp(), arg)
    };
    MagneticCoefficient { n, m, value }
}

/// `sum_n w(n) x^n / n! e^{-(n + shift)^2}` where `ln w(n)` is `extra(n)`.
fn landau_series<F>(l: f64, shift: f64, extra: F, cfg: &SeriesConfig) -> Result<SeriesSum>
where
    F: Fn(u64) -> f64,
{
    let lx = ln_x(l);
    let term = move |n: u64| {
        let nf = n as f64;
        LogTerm::positive(power_log(n, lx) - ln_factorial(n) - (nf + shift).powi(2) + extra(n))
    };
    if l == 0.0 {
        // only n = 0 survives
        return sum_log_terms(std::iter::once(term(0)), cfg);
    }
    sum_log_terms((0u64..).map(term), cfg)
}

/// `<L>_l = -sum (2n+1) x^n/n! e^{-(n+1/2)^2} / sum x^n/n! e^{-(n+1/2)^2}`.
///
/// Independent of `phi` and of the orbit centre.
pub fn l_expectation(l: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_l(l)?;
    let num = landau_series(l, 0.5, |n| (2.0 * n as f64 + 1.0).ln(), cfg)?;
    let den = landau_series(l, 0.5, |_| 0.0, cfg)?;
    Ok(-num.ratio(&den).re)
}

/// `|<<r+>>|`: `r(l) e^{-l/2} sum x^n/n! e^{-(n+1)^2} / sum x^n/n! e^{-(n+1/2)^2}`.
fn r_plus_relative_modulus(l: f64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<f64> {
    check_l(l)?;
    if l == 0.0 {
        return Ok(0.0);
    }
    let num = landau_series(l, 1.0, |_| 0.0, cfg)?;
    let den = landau_series(l, 0.5, |_| 0.0, cfg)?;
    let ln_mod = params.radius(l).ln() - 0.5 * l + (num.ln_abs() - den.ln_abs());
    Ok(ln_mod.exp())
}

/// `<r+> = e^{-1/4} <<r+>>`; its argument is exactly `phi`.
pub fn r_plus_expectation(l: f64, phi: f64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<C64> {
    let m = r_plus_relative_modulus(l, params, cfg)?;
    Ok(C64::from_polar((-0.25f64).exp() * m, phi))
}

/// Relative expectation `<<r+>> = e^{1/4} <r+>`, which approximates `r(l) e^{i phi}`.
pub fn r_plus_relative(l: f64, phi: f64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<C64> {
    let m = r_plus_relative_modulus(l, params, cfg)?;
    Ok(C64::from_polar(m, phi))
}

/// Landau-level distribution `p_n(l)` for `n = 0, 1, ...` up to the series
/// cutoff, normalized against the full series.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelDistribution {
    l: f64,
    log_weights: Vec<f64>,
    log_norm: f64,
}

impl LevelDistribution {
    pub fn new(l: f64, cfg: &SeriesConfig) -> Result<Self> {
        check_l(l)?;
        let den = landau_series(l, 0.5, |_| 0.0, cfg)?;
        let log_weights = (0..den.terms as u64)
            .map(|n| 2.0 * landau_part(l, 0.0, n).0)
            .collect();
        Ok(Self {
            l,
            log_weights,
            log_norm: den.ln_abs(),
        })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// `p_n(l)`; levels beyond the stored cutoff are evaluated directly.
    pub fn p(&self, n: u64) -> f64 {
        let lw = match self.log_weights.get(n as usize) {
            Some(&w) => w,
            None => 2.0 * landau_part(self.l, 0.0, n).0,
        };
        (lw - self.log_norm).exp()
    }

    /// Stored probabilities `p_0, p_1, ...`.
    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.log_weights.len() as u64).map(|n| self.p(n)).collect()
    }

    /// Most probable level; near-equal neighbours (relative gap below
    /// `1e-9`) resolve to the smaller `n` and are reported as a tie.
    pub fn peak(&self) -> Peak {
        const TIE_GAP: f64 = 1e-9;
        let (mut best, mut best_w) = (0usize, f64::NEG_INFINITY);
        for (n, &w) in self.log_weights.iter().enumerate() {
            if w > best_w + TIE_GAP {
                best = n;
                best_w = w;
            }
        }
        let tie = self
            .log_weights
            .iter()
            .enumerate()
            .any(|(n, &w)| n != best && (w - best_w).abs() <= TIE_GAP);
        Peak { n: best as u64, tie }
    }
}

/// Poisson weight of the orbit-centre quantum number:
/// `e^{-k} k^m / m!` with mean `k = (mu omega / 2)(x0^2 + y0^2)`.
pub fn centre_probability(x0_bar: f64, y0_bar: f64, m: u64, params: &PhysicalParams) -> f64 {
    let mean = 0.5 * params.mu_omega() * (x0_bar * x0_bar + y0_bar * y0_bar);
    if mean == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    (m as f64 * mean.ln() - mean - ln_factorial(m)).exp()
}

/// Probability `p_{n,m}` of finding `|n, m>` in the normalized state.
pub fn p_nm(p: &MagneticPoint, n: u64, m: u64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<f64> {
    let dist = LevelDistribution::new(p.l, cfg)?;
    Ok(dist.p(n) * centre_probability(p.x0_bar, p.y0_bar, m, params))
}

/// Argmax of `p_n(l)` with a tie flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Peak {
    pub n: u64,
    pub tie: bool,
}

pub fn peak_n(l: f64, cfg: &SeriesConfig) -> Result<Peak> {
    Ok(LevelDistribution::new(l, cfg)?.peak())
}

/// Integer nearest to `-(l+1)/2`, halves rounded down, clamped at 0.
pub fn predicted_peak(l: f64) -> u64 {
    let x = -(l + 1.0) / 2.0;
    (x - 0.5).ceil().max(0.0) as u64
}

/// `<r0-> = x0 - i y0`, exact from the eigenvalue relation `r0- |.> = z0 |.>`.
pub fn r0_expectation(p: &MagneticPoint) -> C64 {
    p.z0()
}

/// Coefficients of `p` on a truncated basis, for matrix-route checks.
pub fn state_vector(p: &MagneticPoint, params: &PhysicalParams, trunc: FockTruncation) -> Vec<C64> {
    trunc.state(|n, m| coefficient(p, n as u64, m as u64, params).value)
}

/// Time evolution under `H_perp`: `zeta(t) = e^{-i omega t} zeta`, orbit
/// centre and `l` conserved.
pub fn evolve(p: &MagneticPoint, t: f64, params: &PhysicalParams) -> MagneticPoint {
    let rot = (params.omega() * t).rem_euclid(TAU);
    MagneticPoint {
        phi: reduce_angle(p.phi - rot),
        ..*p
    }
}
