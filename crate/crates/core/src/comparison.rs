//! Least-squares closeness of coherent-state expectations to the classical
//! phase-space point `(r(l), l)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fock::PhysicalParams;
use crate::magnetic::{l_expectation, r_plus_relative};
use crate::malkin_manko::d_mm;
use crate::series::SeriesConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub l: f64,
    pub d: f64,
    pub d_mm: f64,
}

/// Closeness distance of the magnetic coherent states:
///
/// `d(l) = sqrt( ((<<r+>>_{(l,0)} - r) / r)^2 + ((<L>_l - l) / l)^2 )`.
pub fn d(l: f64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<f64> {
    if l.is_nan() || l >= 0.0 {
        return Err(Error::Domain(format!("d(l) needs l < 0, got {l}")));
    }
    let r = params.radius(l);
    let rr = r_plus_relative(l, 0.0, params, cfg)?;
    debug_assert!(rr.im.abs() < 1e-12);
    let pos = (rr.re - r) / r;
    let mom = (l_expectation(l, cfg)? - l) / l;
    Ok(pos.hypot(mom))
}

pub fn row(l: f64, params: &PhysicalParams, cfg: &SeriesConfig) -> Result<ComparisonRow> {
    Ok(ComparisonRow {
        l,
        d: d(l, params, cfg)?,
        d_mm: d_mm(l)?,
    })
}

/// Uniform grid of `steps` points from `l_min` to `l_max`, both included.
pub fn grid(l_min: f64, l_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(l_min < l_max && l_max < 0.0) {
        return Err(Error::Domain(format!(
            "sweep needs l_min < l_max < 0, got [{l_min}, {l_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::Domain(format!("sweep needs at least 2 steps, got {steps}")));
    }
    let h = (l_max - l_min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { l_max } else { l_min + i as f64 * h })
        .collect())
}

/// Rows of `(l, d, d_MM)` over a uniform grid, evaluated in parallel; output
/// order follows the grid.
pub fn sweep(
    l_min: f64,
    l_max: f64,
    steps: usize,
    params: &PhysicalParams,
    cfg: &SeriesConfig,
) -> Result<Vec<ComparisonRow>> {
    grid(l_min, l_max, steps)?
        .into_par_iter()
        .map(|l| row(l, params, cfg))
        .collect()
}
