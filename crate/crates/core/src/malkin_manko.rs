//! Malkin–Man'ko coherent states `|z, z0>`: common eigenvectors of `r+` and
//! `r0-`, i.e. ordinary two-mode coherent states. Used as the baseline the
//! magnetic coherent states are compared against.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::{FockTruncation, PhysicalParams};
use crate::magnetic::centre_part;

/// Label `(x, y; x0, y0)` with `z = x + i y` and `z0 = x0 - i y0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MMPoint {
    pub x_bar: f64,
    pub y_bar: f64,
    pub x0_bar: f64,
    pub y0_bar: f64,
}

impl MMPoint {
    pub fn new(x_bar: f64, y_bar: f64, x0_bar: f64, y0_bar: f64) -> Result<Self> {
        if ![x_bar, y_bar, x0_bar, y0_bar].iter().all(|v| v.is_finite()) {
            return Err(Error::Domain("Malkin-Man'ko point needs finite coordinates".into()));
        }
        Ok(Self { x_bar, y_bar, x0_bar, y0_bar })
    }

    /// Point on the classical orbit with angular momentum `l` at angle `phi`.
    pub fn from_polar(l: f64, phi: f64, x0_bar: f64, y0_bar: f64, params: &PhysicalParams) -> Result<Self> {
        if l.is_nan() || l > 0.0 {
            return Err(Error::Domain(format!("l must be non-positive, got {l}")));
        }
        let z = C64::from_polar(params.radius(l), phi);
        Self::new(z.re, z.im, x0_bar, y0_bar)
    }

    pub fn z(&self) -> C64 {
        C64::new(self.x_bar, self.y_bar)
    }

    pub fn z0(&self) -> C64 {
        C64::new(self.x0_bar, -self.y0_bar)
    }

    /// Classical angular momentum `l = -mu omega (x^2 + y^2)`.
    pub fn l(&self, params: &PhysicalParams) -> f64 {
        -params.mu_omega() * (self.x_bar * self.x_bar + self.y_bar * self.y_bar)
    }
}

/// `<n,m|z,z0> = (mw/2)^{n/2} z^n / sqrt(n!) (mw/2)^{m/2} z0^m / sqrt(m!)`.
pub fn coefficient_mm(p: &MMPoint, n: u64, m: u64, params: &PhysicalParams) -> C64 {
    // both factors have the standard coherent-state form
    let (ln_a, arg_a) = centre_part(p.z(), n, params);
    let (ln_b, arg_b) = centre_part(p.z0(), m, params);
    let lm = ln_a + ln_b;
    if lm == f64::NEG_INFINITY {
        C64::new(0.0, 0.0)
    } else {
        C64::from_polar(lm.exp(), arg_a + arg_b)
    }
}

/// `<r+> = x + i y`, exact.
pub fn r_plus_mm(p: &MMPoint) -> C64 {
    p.z()
}

/// `<L> = -mu omega (x^2 + y^2) - 1` evaluated from the point.
pub fn l_expectation_mm_at(p: &MMPoint, params: &PhysicalParams) -> f64 {
    p.l(params) - 1.0
}

/// `<L>_l = l - 1`: the zero-point shift of the Malkin–Man'ko states.
pub fn l_expectation_mm(l: f64) -> Result<f64> {
    if l.is_nan() || l > 0.0 {
        return Err(Error::Domain(format!("l must be non-positive, got {l}")));
    }
    Ok(l - 1.0)
}

/// Closeness distance `d_MM(l) = 1 / |l|`.
pub fn d_mm(l: f64) -> Result<f64> {
    if l.is_nan() || l >= 0.0 {
        return Err(Error::Domain(format!("d_MM needs l < 0, got {l}")));
    }
    Ok(1.0 / l.abs())
}

/// `d_MM` from its least-squares definition: relative radius error of `<r+>`
/// at `phi = 0` combined with the relative error of `<L>`.
pub fn d_mm_least_squares(l: f64, params: &PhysicalParams) -> Result<f64> {
    if l.is_nan() || l >= 0.0 {
        return Err(Error::Domain(format!("d_MM needs l < 0, got {l}")));
    }
    let r = params.radius(l);
    let p = MMPoint::from_polar(l, 0.0, 0.0, 0.0, params)?;
    let pos = (r_plus_mm(&p).re - r) / r;
    let mom = (l_expectation_mm(l)? - l) / l;
    Ok(pos.hypot(mom))
}

/// Coefficients of `p` on a truncated basis.
pub fn state_vector_mm(p: &MMPoint, params: &PhysicalParams, trunc: FockTruncation) -> Vec<C64> {
    trunc.state(|n, m| coefficient_mm(p, n as u64, m as u64, params))
}
