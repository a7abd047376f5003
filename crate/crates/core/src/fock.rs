//! Truncated two-mode Fock space `|n, m>` for the transverse motion.
//!
//! `n` counts Landau-level quanta (`N_a = a^dag a`), `m` counts orbit-centre
//! quanta (`N_b = b^dag b`). The generators of the circular-motion algebra act
//! as ladder operators on one mode each:
//!
//! ```text
//! L    |n,m> = -(2n+1)          |n,m>
//! r+   |n,m> = sqrt(2n/mw)      |n-1,m>
//! r-   |n,m> = sqrt(2(n+1)/mw)  |n+1,m>
//! r0+  |n,m> = sqrt(2(m+1)/mw)  |n,m+1>
//! r0-  |n,m> = sqrt(2m/mw)      |n,m-1>
//! ```
//!
//! Raising operators drop amplitude that would leave the truncated space, so
//! commutators are only faithful away from the last shell; residual checks
//! take an explicit interior margin.
//!
//! Matrices are stored row-compressed. Every generator has at most one entry
//! per row, and the products needed for commutators stay banded.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Coupling `mu * omega` and cyclotron frequency `omega` (hbar = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mu_omega: f64,
    omega: f64,
}

impl PhysicalParams {
    pub fn new(mu_omega: f64, omega: f64) -> Result<Self> {
        if !(mu_omega > 0.0 && mu_omega.is_finite()) {
            return Err(Error::Domain(format!("mu_omega must be positive, got {mu_omega}")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Domain(format!("omega must be positive, got {omega}")));
        }
        Ok(Self { mu_omega, omega })
    }

    /// Parameters with `omega = 1`, for computations that never evolve in time.
    pub fn with_mu_omega(mu_omega: f64) -> Result<Self> {
        Self::new(mu_omega, 1.0)
    }

    pub fn mu_omega(&self) -> f64 {
        self.mu_omega
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Magnetic length `lambda = 1 / sqrt(mu omega)`, the ground-orbit radius.
    pub fn magnetic_length(&self) -> f64 {
        1.0 / self.mu_omega.sqrt()
    }

    /// Classical orbit radius `r(l) = sqrt(-l / mu omega)` for `l <= 0`.
    pub fn radius(&self, l: f64) -> f64 {
        (-l / self.mu_omega).sqrt()
    }
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self { mu_omega: 1.0, omega: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockTruncation {
    n_max: usize,
    m_max: usize,
}

impl FockTruncation {
    pub const DEFAULT_MAX: usize = 64;

    pub fn new(n_max: usize, m_max: usize) -> Result<Self> {
        if n_max < 1 || m_max < 1 {
            return Err(Error::InvalidConfig(format!(
                "truncation needs n_max, m_max >= 1, got ({n_max}, {m_max})"
            )));
        }
        Ok(Self { n_max, m_max })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn dim(&self) -> usize {
        (self.n_max + 1) * (self.m_max + 1)
    }

    /// Flat index of `|n, m>`.
    pub fn index(&self, n: usize, m: usize) -> usize {
        debug_assert!(n <= self.n_max && m <= self.m_max);
        n * (self.m_max + 1) + m
    }

    /// Inverse of [`index`](Self::index).
    pub fn label(&self, idx: usize) -> (usize, usize) {
        (idx / (self.m_max + 1), idx % (self.m_max + 1))
    }

    /// State vector with components `amplitude(n, m)`.
    pub fn state<F>(&self, mut amplitude: F) -> Vec<C64>
    where
        F: FnMut(usize, usize) -> C64,
    {
        (0..self.dim())
            .map(|i| {
                let (n, m) = self.label(i);
                amplitude(n, m)
            })
            .collect()
    }
}

impl Default for FockTruncation {
    fn default() -> Self {
        Self {
            n_max: Self::DEFAULT_MAX,
            m_max: Self::DEFAULT_MAX,
        }
    }
}

impl fmt::Display for FockTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n<={}, m<={}", self.n_max, self.m_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    L,
    RPlus,
    RMinus,
    R0Plus,
    R0Minus,
    A,
    ADag,
    B,
    BDag,
    HPerp,
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Generator::L,
        Generator::RPlus,
        Generator::RMinus,
        Generator::R0Plus,
        Generator::R0Minus,
        Generator::A,
        Generator::ADag,
        Generator::B,
        Generator::BDag,
        Generator::HPerp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Generator::L => "L",
            Generator::RPlus => "r_plus",
            Generator::RMinus => "r_minus",
            Generator::R0Plus => "r0_plus",
            Generator::R0Minus => "r0_minus",
            Generator::A => "a",
            Generator::ADag => "a_dag",
            Generator::B => "b",
            Generator::BDag => "b_dag",
            Generator::HPerp => "H_perp",
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .iter()
            .copied()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// Complex operator on the truncated `|n, m>` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    trunc: FockTruncation,
    // rows[i] = sorted (col, value), no explicit zeros
    rows: Vec<Vec<(usize, C64)>>,
}

impl OperatorMatrix {
    pub fn zeros(trunc: FockTruncation) -> Self {
        Self {
            trunc,
            rows: vec![Vec::new(); trunc.dim()],
        }
    }

    pub fn identity(trunc: FockTruncation) -> Self {
        Self::diagonal(trunc, |_, _| 1.0)
    }

    /// Diagonal operator with entries `f(n, m)`.
    pub fn diagonal<F: Fn(usize, usize) -> f64>(trunc: FockTruncation, f: F) -> Self {
        let mut rows = vec![Vec::new(); trunc.dim()];
        for (i, row) in rows.iter_mut().enumerate() {
            let (n, m) = trunc.label(i);
            let v = f(n, m);
            if v != 0.0 {
                row.push((i, C64::new(v, 0.0)));
            }
        }
        Self { trunc, rows }
    }

    /// Operator mapping `|n, m>` to `amp(n, m) |n + dn, m + dm>`; targets
    /// outside the truncation are dropped.
    fn shift<F: Fn(usize, usize) -> f64>(trunc: FockTruncation, dn: i64, dm: i64, amp: F) -> Self {
        let mut out = Self::zeros(trunc);
        for col in 0..trunc.dim() {
            let (n, m) = trunc.label(col);
            let tn = n as i64 + dn;
            let tm = m as i64 + dm;
            if tn < 0 || tm < 0 || tn > trunc.n_max as i64 || tm > trunc.m_max as i64 {
                continue;
            }
            let v = amp(n, m);
            if v != 0.0 {
                let row = trunc.index(tn as usize, tm as usize);
                out.rows[row].push((col, C64::new(v, 0.0)));
            }
        }
        for r in &mut out.rows {
            r.sort_by_key(|e| e.0);
        }
        out
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry `<row| A |col>` by flat index.
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.rows[row]
            .binary_search_by_key(&col, |e| e.0)
            .map(|k| self.rows[row][k].1)
            .unwrap_or_default()
    }

    /// Entry `<n', m'| A |n, m>`.
    pub fn element(&self, bra: (usize, usize), ket: (usize, usize)) -> C64 {
        self.get(self.trunc.index(bra.0, bra.1), self.trunc.index(ket.0, ket.1))
    }

    /// Stored nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::DimensionMismatch {
                left: self.trunc.to_string(),
                right: other.trunc.to_string(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, s: C64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(c, v)| (c, v * s))
                    .filter(|e| e.1 != C64::new(0.0, 0.0))
                    .collect()
            })
            .collect();
        Self { trunc: self.trunc, rows }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    fn combine(&self, other: &Self, sign: f64) -> Result<Self> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, C64> = a.iter().copied().collect();
                for &(c, v) in b {
                    *acc.entry(c).or_default() += v * sign;
                }
                acc.into_iter().filter(|e| e.1 != C64::new(0.0, 0.0)).collect()
            })
            .collect();
        Ok(Self { trunc: self.trunc, rows })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1.0)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, C64> = BTreeMap::new();
                for &(k, a) in row {
                    for &(c, b) in &other.rows[k] {
                        *acc.entry(c).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|e| e.1 != C64::new(0.0, 0.0)).collect()
            })
            .collect();
        Ok(Self { trunc: self.trunc, rows })
    }

    /// `[self, other] = self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn adjoint(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dim()];
        for (r, c, v) in self.nonzeros() {
            rows[c].push((r, v.conj()));
        }
        for r in &mut rows {
            r.sort_by_key(|e: &(usize, C64)| e.0);
        }
        Self { trunc: self.trunc, rows }
    }

    /// `A |psi>`.
    pub fn apply(&self, psi: &[C64]) -> Result<Vec<C64>> {
        if psi.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: format!("operator dim {}", self.dim()),
                right: format!("vector len {}", psi.len()),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().map(|&(c, v)| v * psi[c]).sum())
            .collect())
    }

    /// Normalized expectation `<psi|A|psi> / <psi|psi>`.
    pub fn expectation(&self, psi: &[C64]) -> Result<C64> {
        let a_psi = self.apply(psi)?;
        let num: C64 = psi.iter().zip(&a_psi).map(|(p, q)| p.conj() * q).sum();
        let den: f64 = psi.iter().map(|p| p.norm_sqr()).sum();
        if den == 0.0 {
            return Err(Error::Domain("expectation in the zero vector".into()));
        }
        Ok(num / den)
    }

    /// Max-norm over entries whose row and column labels both satisfy
    /// `n <= n_max - margin` and `m <= m_max - margin`.
    pub fn max_abs_interior(&self, margin: usize) -> f64 {
        let n_lim = self.trunc.n_max.saturating_sub(margin);
        let m_lim = self.trunc.m_max.saturating_sub(margin);
        let inside = |i: usize| {
            let (n, m) = self.trunc.label(i);
            n <= n_lim && m <= m_lim
        };
        self.nonzeros()
            .filter(|&(r, c, _)| inside(r) && inside(c))
            .map(|(_, _, v)| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_interior(0)
    }
}

/// Matrix of a named generator on the truncated space.
pub fn build_generator(g: Generator, params: &PhysicalParams, trunc: FockTruncation) -> OperatorMatrix {
    let mw = params.mu_omega();
    match g {
        Generator::L => OperatorMatrix::diagonal(trunc, |n, _| -(2.0 * n as f64 + 1.0)),
        Generator::RPlus => OperatorMatrix::shift(trunc, -1, 0, |n, _| (2.0 * n as f64 / mw).sqrt()),
        Generator::RMinus => {
            OperatorMatrix::shift(trunc, 1, 0, |n, _| (2.0 * (n as f64 + 1.0) / mw).sqrt())
        }
        Generator::R0Plus => {
            OperatorMatrix::shift(trunc, 0, 1, |_, m| (2.0 * (m as f64 + 1.0) / mw).sqrt())
        }
        Generator::R0Minus => OperatorMatrix::shift(trunc, 0, -1, |_, m| (2.0 * m as f64 / mw).sqrt()),
        Generator::A => OperatorMatrix::shift(trunc, -1, 0, |n, _| (n as f64).sqrt()),
        Generator::ADag => OperatorMatrix::shift(trunc, 1, 0, |n, _| (n as f64 + 1.0).sqrt()),
        Generator::B => OperatorMatrix::shift(trunc, 0, -1, |_, m| (m as f64).sqrt()),
        Generator::BDag => OperatorMatrix::shift(trunc, 0, 1, |_, m| (m as f64 + 1.0).sqrt()),
        // -(omega/2) L, written so that H + (omega/2) L cancels bit for bit
        Generator::HPerp => {
            let half_w = 0.5 * params.omega();
            OperatorMatrix::diagonal(trunc, move |n, _| half_w * (2.0 * n as f64 + 1.0))
        }
    }
}

/// Build a generator by name.
pub fn build_generator_named(name: &str, params: &PhysicalParams, trunc: FockTruncation) -> Result<OperatorMatrix> {
    Ok(build_generator(name.parse()?, params, trunc))
}

/// Interior max-norm of `[a, b] - expected`.
pub fn commutator_residual(
    a: &OperatorMatrix,
    b: &OperatorMatrix,
    expected: &OperatorMatrix,
    interior_margin: usize,
) -> Result<f64> {
    let r = a.commutator(b)?.sub(expected)?;
    Ok(r.max_abs_interior(interior_margin))
}

/// Max-norm of `r- r+ + L/mw + I/mw` over the whole truncated space.
///
/// `r- r+` never leaves the truncation, so the identity holds at the
/// boundary too.
pub fn casimir_residual(params: &PhysicalParams, trunc: FockTruncation) -> f64 {
    let inv = 1.0 / params.mu_omega();
    let rp = build_generator(Generator::RPlus, params, trunc);
    let rm = build_generator(Generator::RMinus, params, trunc);
    let l = build_generator(Generator::L, params, trunc);
    let id = OperatorMatrix::identity(trunc);
    let lhs = rm
        .mul(&rp)
        .and_then(|x| x.add(&l.scale_re(inv)))
        .and_then(|x| x.add(&id.scale_re(inv)))
        .expect("same truncation");
    lhs.max_abs()
}

/// One identity of the algebra with its residual on a given truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: f64,
}

/// Residuals of every algebraic identity the generators must satisfy:
/// the commutators of the circular-motion algebra (on the interior), the
/// Casimir relation, `L = -(2 N_a + 1)` and `H_perp = -omega L / 2`.
pub fn algebra_identities(params: &PhysicalParams, trunc: FockTruncation, margin: usize) -> Vec<IdentityCheck> {
    use Generator::*;
    let g = |x| build_generator(x, params, trunc);
    let (l, rp, rm, r0p, r0m) = (g(L), g(RPlus), g(RMinus), g(R0Plus), g(R0Minus));
    let (a, ad, b, bd, h) = (g(A), g(ADag), g(B), g(BDag), g(HPerp));
    let id = OperatorMatrix::identity(trunc);
    let zero = OperatorMatrix::zeros(trunc);
    let two_over = 2.0 / params.mu_omega();

    let comm = |x: &OperatorMatrix, y: &OperatorMatrix, e: &OperatorMatrix| {
        commutator_residual(x, y, e, margin).expect("same truncation")
    };

    let n_a = ad.mul(&a).expect("same truncation");
    let l_from_na = n_a.scale_re(-2.0).sub(&id).expect("same truncation");
    let h_plus = h.add(&l.scale_re(0.5 * params.omega())).expect("same truncation");

    vec![
        IdentityCheck { name: "[L,r+]-2r+", residual: comm(&l, &rp, &rp.scale_re(2.0)) },
        IdentityCheck { name: "[L,r-]+2r-", residual: comm(&l, &rm, &rm.scale_re(-2.0)) },
        IdentityCheck { name: "[L,r0+]", residual: comm(&l, &r0p, &zero) },
        IdentityCheck { name: "[L,r0-]", residual: comm(&l, &r0m, &zero) },
        IdentityCheck { name: "[r+,r-]-2/mw", residual: comm(&rp, &rm, &id.scale_re(two_over)) },
        IdentityCheck { name: "[r0+,r0-]+2/mw", residual: comm(&r0p, &r0m, &id.scale_re(-two_over)) },
        IdentityCheck { name: "[r+,r0+]", residual: comm(&rp, &r0p, &zero) },
        IdentityCheck { name: "[r-,r0-]", residual: comm(&rm, &r0m, &zero) },
        IdentityCheck { name: "[a,a_dag]-1", residual: comm(&a, &ad, &id) },
        IdentityCheck { name: "[b,b_dag]-1", residual: comm(&b, &bd, &id) },
        IdentityCheck { name: "[a,b]", residual: comm(&a, &b, &zero) },
        IdentityCheck { name: "[a,b_dag]", residual: comm(&a, &bd, &zero) },
        IdentityCheck { name: "casimir", residual: casimir_residual(params, trunc) },
        IdentityCheck { name: "L+2N_a+1", residual: l.sub(&l_from_na).expect("same truncation").max_abs() },
        IdentityCheck { name: "H+wL/2", residual: h_plus.max_abs() },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(mw: f64, n: usize) -> (PhysicalParams, FockTruncation) {
        (PhysicalParams::new(mw, 1.3).unwrap(), FockTruncation::new(n, n).unwrap())
    }

    #[test]
    fn generator_entries() {
        let (p, t) = setup(0.5, 4);
        let l = build_generator(Generator::L, &p, t);
        assert_eq!(l.element((0, 0), (0, 0)), C64::new(-1.0, 0.0));
        assert_eq!(l.element((3, 2), (3, 2)), C64::new(-7.0, 0.0));
        let rp = build_generator(Generator::RPlus, &p, t);
        assert_eq!(rp.element((0, 0), (1, 0)).re, (2.0f64 / 0.5).sqrt());
        let h = build_generator(Generator::HPerp, &p, t);
        assert!((h.element((3, 0), (3, 0)).re - 3.5 * 1.3).abs() < 1e-15);
        let r0m = build_generator(Generator::R0Minus, &p, t);
        assert_eq!(r0m.element((1, 2), (1, 3)).re, (6.0f64 / 0.5).sqrt());
    }

    #[test]
    fn names_round_trip() {
        for g in Generator::ALL {
            assert_eq!(g.name().parse::<Generator>().unwrap(), g);
        }
        assert_eq!(
            "x_plus".parse::<Generator>(),
            Err(Error::UnknownGenerator("x_plus".into()))
        );
        let (p, t) = setup(1.0, 2);
        assert!(build_generator_named("nope", &p, t).is_err());
        assert!(build_generator_named("b_dag", &p, t).is_ok());
    }

    #[test]
    fn band_structure() {
        let (p, t) = setup(1.0, 5);
        let expected_shift = |g| match g {
            Generator::L | Generator::HPerp => (0, 0),
            Generator::RPlus | Generator::A => (-1, 0),
            Generator::RMinus | Generator::ADag => (1, 0),
            Generator::R0Plus | Generator::BDag => (0, 1),
            Generator::R0Minus | Generator::B => (0, -1),
        };
        for g in Generator::ALL {
            let (dn, dm) = expected_shift(g);
            for (r, c, _) in build_generator(g, &p, t).nonzeros() {
                let (rn, rm) = t.label(r);
                let (cn, cm) = t.label(c);
                assert_eq!(rn as i64 - cn as i64, dn, "{g:?}");
                assert_eq!(rm as i64 - cm as i64, dm, "{g:?}");
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let (p, t) = setup(1.7, 12);
        let l = build_generator(Generator::L, &p, t);
        let rp = build_generator(Generator::RPlus, &p, t);
        assert!(commutator_residual(&l, &rp, &rp.scale_re(2.0), 1).unwrap() < 1e-12);
        let r0p = build_generator(Generator::R0Plus, &p, t);
        let r0m = build_generator(Generator::R0Minus, &p, t);
        let e = OperatorMatrix::identity(t).scale_re(-2.0 / 1.7);
        assert!(commutator_residual(&r0p, &r0m, &e, 1).unwrap() < 1e-12);
        assert_eq!(commutator_residual(&l, &l, &OperatorMatrix::zeros(t), 0).unwrap(), 0.0);
    }

    #[test]
    fn truncation_corrupts_only_the_last_shell() {
        let (p, t) = setup(1.0, 6);
        let rp = build_generator(Generator::RPlus, &p, t);
        let rm = build_generator(Generator::RMinus, &p, t);
        let e = OperatorMatrix::identity(t).scale_re(2.0);
        assert!(commutator_residual(&rp, &rm, &e, 0).unwrap() > 1.0);
        assert!(commutator_residual(&rp, &rm, &e, 1).unwrap() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let p = PhysicalParams::default();
        let a = build_generator(Generator::L, &p, FockTruncation::new(2, 2).unwrap());
        let b = build_generator(Generator::L, &p, FockTruncation::new(3, 2).unwrap());
        assert!(matches!(
            commutator_residual(&a, &b, &a, 0),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(a.apply(&[C64::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn casimir_small_cases() {
        let (p, t) = setup(1.0, 1);
        assert!(casimir_residual(&p, t) < 1e-14);
        let (p, t) = setup(0.5, 20);
        assert!(casimir_residual(&p, t) < 1e-12);
    }

    #[test]
    fn hamiltonian_is_exactly_minus_half_omega_l() {
        let (p, t) = setup(2.0, 10);
        let checks = algebra_identities(&p, t, 1);
        let h = checks.iter().find(|c| c.name == "H+wL/2").unwrap();
        assert_eq!(h.residual, 0.0);
        assert!(checks.iter().all(|c| c.residual < 1e-12), "{checks:?}");
    }

    #[test]
    fn adjoint_pairs() {
        let (p, t) = setup(0.8, 4);
        let rp = build_generator(Generator::RPlus, &p, t);
        let rm = build_generator(Generator::RMinus, &p, t);
        assert_eq!(rp.adjoint(), rm);
        let b = build_generator(Generator::B, &p, t);
        let bd = build_generator(Generator::BDag, &p, t);
        assert_eq!(b.adjoint(), bd);
    }

    #[test]
    fn params_validation() {
        assert!(PhysicalParams::new(0.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, -1.0).is_err());
        assert!(FockTruncation::new(0, 3).is_err());
        let p = PhysicalParams::new(4.0, 1.0).unwrap();
        assert_eq!(p.magnetic_length(), 0.5);
        assert_eq!(p.radius(-4.0), 1.0);
    }
}
