//! Cross-checks against independent brute-force evaluations: plain f64
//! summation over a fixed window, recurrence-built series, and truncated
//! matrix expectations.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use statrs::distribution::{Discrete, Poisson};

use landau_coherent::circle::{self, CirclePoint};
use landau_coherent::fock::{build_generator, FockTruncation, Generator, PhysicalParams};
use landau_coherent::magnetic::{self, LevelDistribution, MagneticPoint};
use landau_coherent::malkin_manko::{self, MMPoint};
use landau_coherent::series::{sum_log_terms, LogTerm, SeriesConfig};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

/// `sum_{|n| <= 60} exp(i pi tau n^2 + 2 pi i n z)`, no log-domain tricks.
fn theta3_naive(z: C64, tau: C64) -> C64 {
    let i = C64::new(0.0, 1.0);
    (-60i64..=60)
        .map(|n| {
            let nf = n as f64;
            (i * PI * tau * nf * nf + 2.0 * PI * i * nf * z).exp()
        })
        .sum()
}

/// Brute-force circle sums over a window around `l`.
fn circle_window(l: f64) -> impl Iterator<Item = i64> {
    let c = l.round() as i64;
    c - 40..=c + 40
}

fn j_expectation_naive(p: &CirclePoint) -> f64 {
    let coeffs: Vec<(i64, C64)> = circle_window(p.l())
        .map(|j| (j, circle::coefficient(p, j).value))
        .collect();
    let num: f64 = coeffs.iter().map(|(j, c)| *j as f64 * c.norm_sqr()).sum();
    let den: f64 = coeffs.iter().map(|(_, c)| c.norm_sqr()).sum();
    num / den
}

fn u_expectation_naive(p: &CirclePoint) -> C64 {
    let num: C64 = circle_window(p.l())
        .map(|j| circle::coefficient(p, j + 1).value.conj() * circle::coefficient(p, j).value)
        .sum();
    let den: f64 = circle_window(p.l())
        .map(|j| circle::coefficient(p, j).value.norm_sqr())
        .sum();
    num / den
}

/// `x^n / n! e^{-(n+s)^2}` by the term ratio `x/n e^{-(2n-1+2s)}`.
fn landau_terms(l: f64, shift: f64) -> Vec<f64> {
    let x = -(l / 2.0) * (-l).exp();
    let mut t = (-shift * shift).exp();
    (0..200)
        .map(|n| {
            if n > 0 {
                let nf = n as f64;
                t *= x / nf * (-(2.0 * nf - 1.0 + 2.0 * shift)).exp();
            }
            t
        })
        .collect()
}

#[test]
fn theta3_matches_naive_sum() {
    let cases = [
        (C64::new(0.0, 0.0), C64::new(0.0, 1.0 / PI)),
        (C64::new(0.3, 0.1), C64::new(0.2, 0.7)),
        (C64::new(-1.2, -0.4), C64::new(-0.5, 1.3)),
        (C64::new(0.25, 0.9), C64::new(0.0, 0.4)),
    ];
    for (z, tau) in cases {
        let a = circle::theta3(z, tau, &cfg()).unwrap();
        let b = theta3_naive(z, tau);
        assert!((a - b).norm() <= 1e-13 * b.norm(), "z={z} tau={tau}: {a} vs {b}");
    }
}

#[test]
fn circle_observables_match_brute_force() {
    for &(l, phi) in &[(0.0, 0.0), (0.37, 1.2), (-2.8, 4.0), (6.5, 0.1), (-9.1, 2.9)] {
        let p = CirclePoint::new(l, phi).unwrap();
        let j = circle::j_expectation(&p, &cfg()).unwrap();
        let jn = j_expectation_naive(&p);
        assert!((j - jn).abs() < 1e-12, "l={l}: {j} vs {jn}");
        let u = circle::u_expectation(&p, &cfg()).unwrap();
        let un = u_expectation_naive(&p);
        assert!((u - un).norm() < 1e-13, "l={l}: {u} vs {un}");
    }
}

#[test]
fn overlap_matches_brute_force() {
    let p = CirclePoint::new(1.3, 0.4).unwrap();
    let q = CirclePoint::new(-0.6, 2.2).unwrap();
    let naive: C64 = (-40i64..=40)
        .map(|j| circle::coefficient(&p, j).value.conj() * circle::coefficient(&q, j).value)
        .sum();
    let v = circle::overlap(&p, &q, &cfg()).unwrap();
    assert!((v - naive).norm() <= 1e-13 * naive.norm());
}

#[test]
fn landau_series_match_recurrence() {
    let params = PhysicalParams::default();
    for &l in &[-0.5, -1.0, -3.7, -9.0, -16.0, -25.0] {
        let a = landau_terms(l, 0.5);
        let b = landau_terms(l, 1.0);
        let den: f64 = a.iter().sum();
        let num_l: f64 = a.iter().enumerate().map(|(n, t)| (2 * n + 1) as f64 * t).sum();
        let num_r: f64 = b.iter().sum();

        let lexp = magnetic::l_expectation(l, &cfg()).unwrap();
        assert!((lexp + num_l / den).abs() <= 1e-12 * lexp.abs(), "l={l}");

        let rr = magnetic::r_plus_relative(l, 0.0, &params, &cfg()).unwrap();
        let expected = params.radius(l) * (-0.5 * l).exp() * num_r / den;
        assert!((rr.re - expected).abs() <= 1e-12 * expected, "l={l}");
    }
}

#[test]
fn landau_series_at_l_minus_nine() {
    // terms x^n/n! e^{-(n+1/2)^2} with x = (9/2) e^9; 200-bit reference sum
    let ln_x = 4.5f64.ln() + 9.0;
    let terms = (0u64..).map(|n| {
        let nf = n as f64;
        LogTerm::positive(nf * ln_x - statrs::function::factorial::ln_factorial(n) - (nf + 0.5).powi(2))
    });
    let s = sum_log_terms(terms, &cfg()).unwrap();
    let reference = 198_814_249.270_624_112_499_832;
    assert!((s.real() - reference).abs() <= 1e-13 * reference);
    let rec: f64 = landau_terms(-9.0, 0.5).iter().sum();
    assert!((s.real() - rec).abs() <= 1e-12 * reference);
}

#[test]
fn magnetic_matrix_route() {
    let params = PhysicalParams::with_mu_omega(1.5).unwrap();
    let trunc = FockTruncation::default();
    for &(l, phi) in &[(-1.0, 0.3), (-9.0, 2.0), (-20.0, 5.0)] {
        let p = MagneticPoint::new(l, phi, 0.7, -0.4).unwrap();
        let psi = magnetic::state_vector(&p, &params, trunc);

        let lm = build_generator(Generator::L, &params, trunc).expectation(&psi).unwrap();
        let lexp = magnetic::l_expectation(l, &cfg()).unwrap();
        assert!((lm.re - lexp).abs() < 1e-10 && lm.im.abs() < 1e-12, "l={l}");

        let rp = build_generator(Generator::RPlus, &params, trunc).expectation(&psi).unwrap();
        let r = magnetic::r_plus_expectation(l, phi, &params, &cfg()).unwrap();
        assert!((rp - r).norm() < 1e-10, "l={l}: {rp} vs {r}");

        let r0 = build_generator(Generator::R0Minus, &params, trunc).expectation(&psi).unwrap();
        assert!((r0 - magnetic::r0_expectation(&p)).norm() < 1e-10);
    }
}

#[test]
fn centre_marginal_is_poisson() {
    let params = PhysicalParams::with_mu_omega(0.8).unwrap();
    let trunc = FockTruncation::new(40, 64).unwrap();
    let p = MagneticPoint::new(-6.0, 1.0, 1.5, -2.0).unwrap();
    let psi = magnetic::state_vector(&p, &params, trunc);
    let total: f64 = psi.iter().map(|c| c.norm_sqr()).sum();
    let mean = 0.5 * 0.8 * (1.5f64 * 1.5 + 2.0 * 2.0);
    let poisson = Poisson::new(mean).unwrap();
    for m in 0..=30 {
        let marginal: f64 = (0..=trunc.n_max())
            .map(|n| psi[trunc.index(n, m)].norm_sqr())
            .sum::<f64>()
            / total;
        assert!((marginal - poisson.pmf(m as u64)).abs() < 1e-10, "m={m}");
        let closed = magnetic::centre_probability(1.5, -2.0, m as u64, &params);
        assert!((closed - poisson.pmf(m as u64)).abs() < 1e-13);
    }
}

#[test]
fn level_distribution_matches_normalized_coefficients() {
    let params = PhysicalParams::default();
    let p = MagneticPoint::new(-9.0, 0.0, 0.0, 0.0).unwrap();
    let w: Vec<f64> = (0..60).map(|n| magnetic::coefficient(&p, n, 0, &params).value.norm_sqr()).collect();
    let total: f64 = w.iter().sum();
    let dist = LevelDistribution::new(-9.0, &cfg()).unwrap();
    for (n, wn) in w.iter().enumerate().take(25) {
        assert!((dist.p(n as u64) - wn / total).abs() < 1e-14);
        let pnm = magnetic::p_nm(&p, n as u64, 0, &params, &cfg()).unwrap();
        assert!((pnm - wn / total).abs() < 1e-14);
    }
}

#[test]
fn malkin_manko_matrix_route() {
    let params = PhysicalParams::with_mu_omega(2.0).unwrap();
    let trunc = FockTruncation::default();
    let p = MMPoint::new(-0.9, 1.2, 0.3, 0.3).unwrap();
    let psi = malkin_manko::state_vector_mm(&p, &params, trunc);
    let rp = build_generator(Generator::RPlus, &params, trunc).expectation(&psi).unwrap();
    assert!((rp - malkin_manko::r_plus_mm(&p)).norm() < 1e-10);
    let l = build_generator(Generator::L, &params, trunc).expectation(&psi).unwrap();
    let expected = malkin_manko::l_expectation_mm(p.l(&params)).unwrap();
    assert!((l.re - expected).abs() < 1e-10);
}
