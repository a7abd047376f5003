//! Coherent states for a quantum particle on a circle.
//!
//! The states `|l, phi>` live in the eigenbasis `{|j>}` of the angular
//! momentum `J`, with `U|j> = |j+1>`. Their coefficients are
//! `<j|l,phi> = e^{l j - i j phi} e^{-j^2/2}`, so all sums over `j` are
//! Gaussian in `j` and are evaluated through the series engine, ordered
//! outwards from the Gaussian centre.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::series::{nearest_first, sum_log_terms, LogTerm, SeriesConfig, SeriesSum};

/// Reduce an angle to `[0, 2pi)`.
pub fn reduce_angle(phi: f64) -> f64 {
    let r = phi.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Spectrum of `J`: integer or half-integer eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Integer,
    HalfInteger,
}

/// Label `(l, phi)` of the circle coherent state `|xi>`, `xi = e^{-l + i phi}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePoint {
    l: f64,
    phi: f64,
}

impl CirclePoint {
    pub fn new(l: f64, phi: f64) -> Result<Self> {
        if !l.is_finite() || !phi.is_finite() {
            return Err(Error::Domain(format!(
                "circle point needs finite (l, phi), got ({l}, {phi})"
            )));
        }
        Ok(Self { l, phi: reduce_angle(phi) })
    }

    pub fn in_sector(l: f64, phi: f64, sector: Sector) -> Result<Self> {
        match sector {
            Sector::Integer => Self::new(l, phi),
            Sector::HalfInteger => Err(Error::HalfIntegerUnsupported),
        }
    }

    pub fn origin() -> Self {
        Self { l: 0.0, phi: 0.0 }
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `xi = e^{-l + i phi}`.
    pub fn xi(&self) -> C64 {
        C64::from_polar((-self.l).exp(), self.phi)
    }

    fn log_term(&self, j: i64) -> LogTerm {
        let jf = j as f64;
        LogTerm::with_angle(self.l * jf - 0.5 * jf * jf, -jf * self.phi)
    }
}

/// A coefficient `<j|l,phi>` together with its label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleCoefficient {
    pub j: i64,
    pub value: C64,
}

/// `<j|l,phi> = e^{l j} e^{-i j phi} e^{-j^2/2}`.
pub fn coefficient(p: &CirclePoint, j: i64) -> CircleCoefficient {
    let t = p.log_term(j);
    CircleCoefficient {
        j,
        value: t.phase * t.log_magnitude.exp(),
    }
}

/// Jacobi theta function `theta_3(z | tau) = sum_n e^{i pi tau n^2 + 2 pi i n z}`.
pub fn theta3(z: C64, tau: C64, cfg: &SeriesConfig) -> Result<C64> {
    Ok(theta3_sum(z, tau, cfg)?.value())
}

fn theta3_sum(z: C64, tau: C64, cfg: &SeriesConfig) -> Result<SeriesSum> {
    if tau.im.is_nan() || tau.im <= 0.0 {
        return Err(Error::NonConvergent(format!(
            "theta3 requires Im(tau) > 0, got tau = {tau}"
        )));
    }
    if !(z.re.is_finite() && z.im.is_finite() && tau.re.is_finite() && tau.im.is_finite()) {
        return Err(Error::NonConvergent("theta3 needs finite arguments".into()));
    }
    // |term| = exp(-pi Im(tau) n^2 - 2 pi n Im(z)), a Gaussian centred here:
    let center = -z.im / tau.im;
    let terms = nearest_first(center).map(|n| {
        let nf = n as f64;
        let log_mag = -PI * tau.im * nf * nf - 2.0 * PI * nf * z.im;
        let angle = PI * tau.re * nf * nf + 2.0 * PI * nf * z.re;
        LogTerm::with_angle(log_mag, angle)
    });
    sum_log_terms(terms, cfg)
}

/// Overlap `<p|q> = sum_j conj(<j|p>) <j|q>`, summed directly in `j`.
pub fn overlap(p: &CirclePoint, q: &CirclePoint, cfg: &SeriesConfig) -> Result<C64> {
    let center = 0.5 * (p.l + q.l);
    let terms = nearest_first(center).map(|j| {
        let a = p.log_term(j);
        let b = q.log_term(j);
        LogTerm::new(a.log_magnitude + b.log_magnitude, a.phase.conj() * b.phase)
    });
    Ok(sum_log_terms(terms, cfg)?.value())
}

/// Overlap evaluated as `theta_3((i / 2 pi) ln(conj(xi) eta) | i / pi)`.
pub fn overlap_theta(p: &CirclePoint, q: &CirclePoint, cfg: &SeriesConfig) -> Result<C64> {
    let w = p.xi().conj() * q.xi();
    let z = C64::new(0.0, 1.0 / (2.0 * PI)) * w.ln();
    theta3(z, C64::new(0.0, 1.0 / PI), cfg)
}

/// `sum_j |<j|l,phi>|^2 = sum_j e^{2 l j - j^2}`.
fn norm_sum(l: f64, cfg: &SeriesConfig) -> Result<SeriesSum> {
    let terms = nearest_first(l).map(|j| {
        let jf = j as f64;
        LogTerm::positive(2.0 * l * jf - jf * jf)
    });
    sum_log_terms(terms, cfg)
}

/// `<J> = sum_j j e^{2lj - j^2} / sum_j e^{2lj - j^2}`; independent of phi.
pub fn j_expectation(p: &CirclePoint, cfg: &SeriesConfig) -> Result<f64> {
    let l = p.l;
    let num = sum_log_terms(
        nearest_first(l).map(|j| {
            if j == 0 {
                return LogTerm::ZERO;
            }
            let jf = j as f64;
            LogTerm::signed(jf.abs().ln() + 2.0 * l * jf - jf * jf, j < 0)
        }),
        cfg,
    )?;
    let den = norm_sum(l, cfg)?;
    Ok(num.ratio(&den).re)
}

/// `<U> = sum_j conj(c_{j+1}) c_j / sum_j |c_j|^2`.
///
/// Every product `conj(c_{j+1}) c_j` carries the same phase `e^{i phi}`, so
/// the magnitude is summed as a real series and the phase applied once.
pub fn u_expectation(p: &CirclePoint, cfg: &SeriesConfig) -> Result<C64> {
    Ok(C64::from_polar(u_modulus(p.l, cfg)?, p.phi))
}

fn u_modulus(l: f64, cfg: &SeriesConfig) -> Result<f64> {
    // log |c_{j+1} c_j| = l(2j+1) - (j^2 + j + 1/2), centred at j = l - 1/2
    let num = sum_log_terms(
        nearest_first(l - 0.5).map(|j| {
            let jf = j as f64;
            LogTerm::positive(l * (2.0 * jf + 1.0) - (jf * jf + jf + 0.5))
        }),
        cfg,
    )?;
    let den = norm_sum(l, cfg)?;
    Ok(num.ratio(&den).re)
}

/// `<<U>> = <U>_{(l,phi)} / <U>_{(0,0)}`.
pub fn u_relative_expectation(p: &CirclePoint, cfg: &SeriesConfig) -> Result<C64> {
    let ratio = u_modulus(p.l, cfg)? / u_modulus(0.0, cfg)?;
    Ok(C64::from_polar(ratio, p.phi))
}
