//! Overflow-free summation of Gaussian-damped series.
//!
//! Every sum in this crate has terms of the form `t_n = e^{a(n)} * phase(n)`
//! where `a(n)` can reach several hundred before the `e^{-n^2}` damping wins.
//! Terms are therefore passed around as [`LogTerm`]s and accumulated relative
//! to the running maximum log-magnitude, so nothing is ever exponentiated
//! outside `[e^{-inf}, 1]`. The result is a [`SeriesSum`], which keeps the
//! scale separate from the mantissa; ratios of two sums never have to leave
//! log space.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Tolerance and term cap for every infinite-sum evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    rel_tol: f64,
    max_terms: usize,
}

impl SeriesConfig {
    pub const DEFAULT_REL_TOL: f64 = 1e-14;
    pub const DEFAULT_MAX_TERMS: usize = 10_000;

    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must lie in (0, 1), got {rel_tol}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::InvalidConfig("max_terms must be at least 1".into()));
        }
        Ok(Self { rel_tol, max_terms })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            rel_tol: Self::DEFAULT_REL_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// A single series term stored as `exp(log_magnitude) * phase`.
///
/// `phase` has unit modulus. An exactly-zero term is represented by
/// `log_magnitude == -inf` (see [`LogTerm::ZERO`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogTerm {
    pub log_magnitude: f64,
    pub phase: C64,
}

impl LogTerm {
    pub const ZERO: LogTerm = LogTerm {
        log_magnitude: f64::NEG_INFINITY,
        phase: C64 { re: 1.0, im: 0.0 },
    };

    pub fn new(log_magnitude: f64, phase: C64) -> Self {
        Self { log_magnitude, phase }
    }

    pub fn positive(log_magnitude: f64) -> Self {
        Self::new(log_magnitude, C64::new(1.0, 0.0))
    }

    /// Real term with sign `+1` or `-1`.
    pub fn signed(log_magnitude: f64, negative: bool) -> Self {
        let s = if negative { -1.0 } else { 1.0 };
        Self::new(log_magnitude, C64::new(s, 0.0))
    }

    /// Unit phase `e^{i theta}`.
    pub fn with_angle(log_magnitude: f64, theta: f64) -> Self {
        Self::new(log_magnitude, C64::from_polar(1.0, theta))
    }

    pub fn is_zero(&self) -> bool {
        self.log_magnitude == f64::NEG_INFINITY
    }
}

/// Result of a series evaluation: `scaled * exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub log_scale: f64,
    pub scaled: C64,
    /// Number of terms consumed, including flagged zeros.
    pub terms: usize,
}

impl SeriesSum {
    /// The sum as an ordinary complex number (may overflow to infinity).
    pub fn value(&self) -> C64 {
        if self.scaled == C64::new(0.0, 0.0) {
            return self.scaled;
        }
        self.scaled * self.log_scale.exp()
    }

    /// Real part of the sum (for series with real terms).
    pub fn real(&self) -> f64 {
        self.value().re
    }

    /// Natural log of `|sum|`.
    pub fn ln_abs(&self) -> f64 {
        self.scaled.norm().ln() + self.log_scale
    }

    /// `self / other`, evaluated without leaving log space.
    pub fn ratio(&self, other: &SeriesSum) -> C64 {
        let shift = self.log_scale - other.log_scale;
        if self.scaled == C64::new(0.0, 0.0) {
            return C64::new(0.0, 0.0);
        }
        self.scaled / other.scaled * shift.exp()
    }
}

/// Neumaier-compensated accumulator for one real component.
#[derive(Debug, Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn scale(&mut self, f: f64) {
        self.sum *= f;
        self.comp *= f;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum a sequence of log-domain terms.
///
/// Terms are accumulated relative to the running maximum magnitude. Once a
/// term is smaller than its predecessor the magnitude peak is taken to have
/// passed, and the sum stops at the first later term whose magnitude is below
/// `rel_tol` times the accumulated absolute mass `sum |t_n|` (for same-sign
/// series this is `|partial sum|`; for oscillating series it keeps a cancelled
/// partial sum from stalling the stop rule), provided the term before it was
/// below the threshold as well. Requiring two consecutive small terms keeps
/// the `+j, -j` pairs of a symmetric two-sided sum together. A finite
/// sequence that ends before the stop rule fires is summed exactly.
///
/// Flagged zero terms are counted against `max_terms` but otherwise ignored.
pub fn sum_log_terms<I>(terms: I, cfg: &SeriesConfig) -> Result<SeriesSum>
where
    I: IntoIterator<Item = LogTerm>,
{
    let mut max_log = f64::NEG_INFINITY;
    let mut re = Compensated::default();
    let mut im = Compensated::default();
    let mut mass = 0.0_f64;
    let mut prev_log: Option<f64> = None;
    let mut peak_passed = false;
    let mut small_run = 0u8;
    let mut count = 0usize;

    let finish = |max_log: f64, re: &Compensated, im: &Compensated, count| SeriesSum {
        log_scale: max_log,
        scaled: C64::new(re.value(), im.value()),
        terms: count,
    };

    for term in terms {
        if count == cfg.max_terms {
            return Err(if peak_passed {
                Error::TermCapExceeded { max_terms: cfg.max_terms }
            } else {
                Error::NonConvergent(format!(
                    "term magnitudes still increasing after {} terms",
                    cfg.max_terms
                ))
            });
        }
        count += 1;

        let lm = term.log_magnitude;
        if lm == f64::NEG_INFINITY {
            continue;
        }
        if !lm.is_finite() {
            return Err(Error::NonConvergent(format!(
                "non-finite term log-magnitude {lm} at index {}",
                count - 1
            )));
        }

        if lm > max_log {
            if max_log > f64::NEG_INFINITY {
                let f = (max_log - lm).exp();
                re.scale(f);
                im.scale(f);
                mass *= f;
            }
            max_log = lm;
        }
        let w = (lm - max_log).exp();
        re.add(w * term.phase.re);
        im.add(w * term.phase.im);
        mass += w;

        if let Some(p) = prev_log {
            if lm < p {
                peak_passed = true;
            }
        }
        if peak_passed && w < cfg.rel_tol * mass {
            small_run += 1;
            if small_run == 2 {
                return Ok(finish(max_log, &re, &im, count));
            }
        } else {
            small_run = 0;
        }
        prev_log = Some(lm);
    }

    Ok(finish(max_log, &re, &im, count))
}

/// Integers ordered by increasing distance from `center`, ties broken
/// towards the larger integer.
///
/// Feeding a Gaussian-shaped two-sided sum in this order gives the engine a
/// non-increasing magnitude sequence.
pub fn nearest_first(center: f64) -> impl Iterator<Item = i64> {
    let lo_start = center.floor() as i64;
    let mut lo = lo_start;
    let mut hi = lo_start + 1;
    std::iter::from_fn(move || {
        let dl = center - lo as f64;
        let dh = hi as f64 - center;
        if dh <= dl {
            hi += 1;
            Some(hi - 1)
        } else {
            lo -= 1;
            Some(lo + 1)
        }
    })
}

/// `ln(n!)`.
pub fn ln_factorial(n: u64) -> f64 {
    statrs::function::factorial::ln_factorial(n)
}
