//! Fourier series on the unit circle.
//!
//! Coefficients use the normalized arc-length measure, so
//! `coefficient(j) = mean_k f(theta_k) e^{-i j theta_k}`. Abel means are
//! available through the coefficient series and through the Poisson
//! integral; the two must agree, and the tests hold them to it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec;
use crate::numerics::{cis, CircleGrid, C64, ONE, ZERO};

const UNIT_EPS: f64 = 1e-12;

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!("radius r = {r} must lie in [0, 1)")));
    }
    Ok(())
}

fn check_unit(z: C64, name: &str) -> Result<()> {
    if (z.norm() - 1.0).abs() > UNIT_EPS {
        return Err(Error::domain(format!("{name} = {z} is not on the unit circle")));
    }
    Ok(())
}

/// Uniform samples of a function on the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCircleFunction {
    grid: CircleGrid,
    values: Vec<C64>,
}

impl SampledCircleFunction {
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> C64 + Sync + Send,
    {
        let grid = CircleGrid::new(n)?;
        let values = grid.sample(f);
        Ok(SampledCircleFunction { grid, values })
    }

    pub fn from_values(values: Vec<C64>) -> Result<Self> {
        let grid = CircleGrid::new(values.len())?;
        Ok(SampledCircleFunction { grid, values })
    }

    pub fn grid(&self) -> CircleGrid {
        self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Mean of `|f|`, the discrete L1 mass.
    pub fn l1_mass(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).sum::<f64>() / self.n() as f64
    }

    /// Mean of `|f|^2`.
    pub fn l2_mass(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.n() as f64
    }

    pub fn pointwise_product(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::domain("pointwise product of functions on different grids"));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(SampledCircleFunction {
            grid: self.grid,
            values,
        })
    }
}

/// Finitely supported map from integer frequencies to coefficients.
/// Absent keys are zero; exact zeros are never stored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SpectralSeries {
    coeffs: BTreeMap<i64, C64>,
}

impl SpectralSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C64)>,
    {
        let mut s = Self::new();
        for (j, c) in pairs {
            s.add(j, c);
        }
        s
    }

    pub fn monomial(j: i64) -> Self {
        Self::from_pairs([(j, ONE)])
    }

    pub fn get(&self, j: i64) -> C64 {
        self.coeffs.get(&j).copied().unwrap_or(ZERO)
    }

    pub fn set(&mut self, j: i64, c: C64) {
        if c == ZERO {
            self.coeffs.remove(&j);
        } else {
            self.coeffs.insert(j, c);
        }
    }

    pub fn add(&mut self, j: i64, c: C64) {
        let v = self.get(j) + c;
        self.set(j, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().map(|(&j, &c)| (j, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|j|` in the support (0 for the empty series).
    pub fn degree(&self) -> i64 {
        self.coeffs.keys().map(|j| j.abs()).max().unwrap_or(0)
    }

    pub fn min_frequency(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// `sum |c_j|^2`.
    pub fn energy(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum()
    }

    /// Drops coefficients with modulus at most `eps`.
    pub fn chopped(&self, eps: f64) -> Self {
        Self::from_pairs(self.iter().filter(|(_, c)| c.norm() > eps))
    }

    /// Coefficient-wise comparison, absent keys read as zero.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .all(|&j| (self.get(j) - other.get(j)).norm() <= eps)
    }

    /// Evaluates `sum c_j e^{i j theta}`.
    pub fn evaluate(&self, theta: f64) -> C64 {
        self.iter().map(|(j, c)| c * cis(j as f64 * theta)).sum()
    }

    pub fn sample(&self, n: usize) -> Result<SampledCircleFunction> {
        SampledCircleFunction::from_fn(n, |t| self.evaluate(t))
    }
}

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(C64);

impl DiskPoint {
    pub fn new(zeta: C64) -> Result<Self> {
        if !(zeta.norm() < 1.0) {
            return Err(Error::domain(format!("{zeta} is not inside the open unit disk")));
        }
        Ok(DiskPoint(zeta))
    }

    pub fn polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(cis(theta) * r)
    }

    pub fn value(&self) -> C64 {
        self.0
    }
}

/// `mean_k f(theta_k) e^{-i j theta_k}`; exact for trigonometric polynomials
/// of degree below `n / 2`.
pub fn fourier_coefficient(f: &SampledCircleFunction, j: i64) -> Result<C64> {
    let n = f.n();
    if 2 * j.unsigned_abs() as usize >= n {
        return Err(Error::Aliasing { j, n });
    }
    let grid = f.grid();
    let values = f.values();
    // reduce j * k modulo n so the phase stays exact for large grids
    let jm = j.rem_euclid(n as i64) as usize;
    let s = exec::sum(n, |k| values[k] * cis(-grid.angle((jm * k) % n)));
    Ok(s / n as f64)
}

/// All coefficients with `|j| <= window`.
pub fn coefficient_window(f: &SampledCircleFunction, window: i64) -> Result<SpectralSeries> {
    if window < 0 {
        return Err(Error::domain("coefficient window must be nonnegative"));
    }
    if 2 * window as usize >= f.n() {
        return Err(Error::Aliasing { j: window, n: f.n() });
    }
    let width = 2 * window as usize + 1;
    let coeffs = exec::map(width, |k| {
        let j = k as i64 - window;
        fourier_coefficient(f, j).map(|c| (j, c))
    });
    coeffs.into_iter().collect::<Result<Vec<_>>>().map(SpectralSeries::from_pairs)
}

/// Poisson kernel `(1 - r^2) / |w - r z|^2` for `z, w` on the circle.
pub fn poisson_kernel(r: f64, z: C64, w: C64) -> Result<f64> {
    check_radius(r)?;
    check_unit(z, "z")?;
    check_unit(w, "w")?;
    Ok(kernel(r, z, w))
}

#[inline]
fn kernel(r: f64, z: C64, w: C64) -> f64 {
    (1.0 - r * r) / (w - z * r).norm_sqr()
}

/// Abel mean through the coefficient series, `sum c_j r^{|j|} z^j`.
pub fn abel_mean_series(series: &SpectralSeries, r: f64, z: C64) -> Result<C64> {
    check_radius(r)?;
    check_unit(z, "z")?;
    Ok(series
        .iter()
        .map(|(j, c)| c * r.powi(j.unsigned_abs() as i32) * z.powi(j as i32))
        .sum())
}

/// Abel mean through the Poisson integral, `mean_k f(w_k) p_r(w_k, z)`.
pub fn abel_mean_integral(f: &SampledCircleFunction, r: f64, z: C64) -> Result<C64> {
    check_radius(r)?;
    check_unit(z, "z")?;
    let grid = f.grid();
    let values = f.values();
    let s = exec::sum(f.n(), |k| values[k] * kernel(r, z, grid.point(k)));
    Ok(s / f.n() as f64)
}

/// Harmonic extension `h(zeta) = sum_{j>=0} c_j zeta^j + sum_{j>=1} c_{-j} conj(zeta)^j`.
pub fn harmonic_extension(series: &SpectralSeries, zeta: DiskPoint) -> C64 {
    let (plus, minus) = holomorphic_parts(series, zeta);
    plus + minus
}

/// The holomorphic part `h_+` (nonnegative frequencies) and the
/// conjugate-holomorphic part `h_-` (negative frequencies).
pub fn holomorphic_parts(series: &SpectralSeries, zeta: DiskPoint) -> (C64, C64) {
    let z = zeta.value();
    let mut plus = ZERO;
    let mut minus = ZERO;
    for (j, c) in series.iter() {
        if j >= 0 {
            plus += c * z.powi(j as i32);
        } else {
            minus += c * z.conj().powi((-j) as i32);
        }
    }
    (plus, minus)
}

/// Cauchy product `c_l = sum_{j=0}^{l} a_j b_{l-j}`.
pub fn cauchy_product(a: &[C64], b: &[C64]) -> Vec<C64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = a.len() + b.len() - 1;
    (0..len)
        .map(|l| {
            let lo = l.saturating_sub(b.len() - 1);
            let hi = l.min(a.len() - 1);
            (lo..=hi).map(|j| a[j] * b[l - j]).sum()
        })
        .collect()
}

/// Values of `sum a_j r^j` along an Abel schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelSum {
    /// Value at the last radius of the schedule.
    pub value: C64,
    /// `(r, sum a_j r^j)` for every radius in the schedule.
    pub trace: Vec<(f64, C64)>,
}

fn check_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::domain("Abel schedule is empty"));
    }
    if schedule.iter().any(|r| !(0.0..1.0).contains(r)) {
        return Err(Error::domain("Abel schedule radii must lie in [0, 1)"));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("Abel schedule must be strictly increasing"));
    }
    Ok(())
}

fn power_sum<F>(len: usize, term: F, r: f64) -> C64
where
    F: Fn(usize) -> C64,
{
    // Horner from the top keeps the partial sums stable for r near 1
    (0..len).rev().fold(ZERO, |acc, j| acc * r + term(j))
}

/// Abel sums of a finite sequence; no extrapolation is attempted.
pub fn abel_sum(a: &[C64], schedule: &[f64]) -> Result<AbelSum> {
    check_schedule(schedule)?;
    let trace: Vec<(f64, C64)> = schedule.iter().map(|&r| (r, power_sum(a.len(), |j| a[j], r))).collect();
    Ok(AbelSum {
        value: trace.last().map(|t| t.1).unwrap_or(ZERO),
        trace,
    })
}

/// Abel sums of an infinite sequence with `|a_j| <= bound`, truncated where
/// the geometric tail `bound r^K / (1 - r)` drops below `eps`.
pub fn abel_sum_generated<F>(term: F, bound: f64, schedule: &[f64], eps: f64) -> Result<AbelSum>
where
    F: Fn(usize) -> C64,
{
    check_schedule(schedule)?;
    if !(eps > 0.0) || !(bound >= 0.0) {
        return Err(Error::domain("abel_sum_generated needs bound >= 0 and eps > 0"));
    }
    let mut trace = Vec::with_capacity(schedule.len());
    for &r in schedule {
        let len = if bound == 0.0 || r == 0.0 {
            1
        } else {
            let k = ((eps * (1.0 - r) / bound).ln() / r.ln()).ceil();
            k.max(1.0) as usize
        };
        trace.push((r, power_sum(len, &term, r)));
    }
    Ok(AbelSum {
        value: trace.last().map(|t| t.1).unwrap_or(ZERO),
        trace,
    })
}

/// Coefficients of a product: `(fg)^(l) = sum_k F(l - k) G(k)`.
pub fn product_coefficients(f: &SpectralSeries, g: &SpectralSeries) -> SpectralSeries {
    let mut out = SpectralSeries::new();
    for (j, a) in f.iter() {
        for (k, b) in g.iter() {
            out.add(j + k, a * b);
        }
    }
    out
}

/// Finite measure on the circle: point masses plus a trigonometric density
/// given by its coefficients.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CircleMeasure {
    pub atoms: Vec<(C64, C64)>,
    pub density: SpectralSeries,
}

impl CircleMeasure {
    pub fn dirac(point: C64) -> Result<Self> {
        check_unit(point, "atom")?;
        Ok(CircleMeasure {
            atoms: vec![(point, ONE)],
            density: SpectralSeries::new(),
        })
    }

    pub fn add_atom(&mut self, point: C64, weight: C64) -> Result<()> {
        check_unit(point, "atom")?;
        self.atoms.push((point, weight));
        Ok(())
    }

    /// `mu^(j) = sum_k w_k conj(a_k)^j + density(j)`.
    pub fn coefficient(&self, j: i64) -> C64 {
        let atoms: C64 = self.atoms.iter().map(|(a, w)| w * a.conj().powi(j as i32)).sum();
        atoms + self.density.get(j)
    }

    pub fn window(&self, window: i64) -> SpectralSeries {
        SpectralSeries::from_pairs((-window..=window).map(|j| (j, self.coefficient(j))))
    }

    /// Upper bound on the total variation (exact for pure atoms).
    pub fn total_variation_bound(&self) -> f64 {
        self.atoms.iter().map(|(_, w)| w.norm()).sum::<f64>()
            + self.density.iter().map(|(_, c)| c.norm()).sum::<f64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn single_mode_coefficients() {
        let f = SampledCircleFunction::from_fn(16, |t| cis(3.0 * t)).unwrap();
        assert!((fourier_coefficient(&f, 3).unwrap() - ONE).norm() < 1e-12);
        assert!(fourier_coefficient(&f, 2).unwrap().norm() < 1e-12);
        let one = SampledCircleFunction::from_fn(8, |_| ONE).unwrap();
        assert!((fourier_coefficient(&one, 0).unwrap() - ONE).norm() < 1e-15);
    }

    #[test]
    fn aliasing_is_rejected() {
        let f = SampledCircleFunction::from_fn(16, |_| ONE).unwrap();
        assert_eq!(fourier_coefficient(&f, 8), Err(Error::Aliasing { j: 8, n: 16 }));
        assert!(fourier_coefficient(&f, -8).is_err());
        assert!(fourier_coefficient(&f, 7).is_ok());
        assert!(coefficient_window(&f, 8).is_err());
    }

    #[test]
    fn expcos_second_coefficient() {
        // grid-refinement oracle: a 10x finer grid; the value is I_2(1)
        let f = |t: f64| c(t.cos().exp(), 0.0);
        let v = fourier_coefficient(&SampledCircleFunction::from_fn(64, f).unwrap(), 2).unwrap();
        let fine = fourier_coefficient(&SampledCircleFunction::from_fn(640, f).unwrap(), 2).unwrap();
        assert!((v - fine).norm() < 1e-10);
        assert!((fine.re - 0.135_747_669_767_038_28).abs() < 1e-14);
    }

    #[test]
    fn cosine_window() {
        let f = SampledCircleFunction::from_fn(32, |t| c(t.cos(), 0.0)).unwrap();
        let w = coefficient_window(&f, 2).unwrap();
        let expected = SpectralSeries::from_pairs([(-1, c(0.5, 0.0)), (1, c(0.5, 0.0))]);
        assert!(w.approx_eq(&expected, 1e-12));
        assert_eq!(w.chopped(1e-12), w.chopped(1e-12).chopped(1e-12));
        assert_eq!(w.chopped(1e-12).len(), 2);
        let zero = SampledCircleFunction::from_fn(32, |_| ZERO).unwrap();
        assert!(coefficient_window(&zero, 4).unwrap().is_empty());
    }

    #[test]
    fn poisson_kernel_closed_form_values() {
        assert!((poisson_kernel(0.0, cis(0.3), cis(2.0)).unwrap() - 1.0).abs() < 1e-15);
        let z = cis(1.1);
        assert!((poisson_kernel(0.5, z, z).unwrap() - 3.0).abs() < 1e-12);
        assert!((poisson_kernel(0.5, c(-1.0, 0.0), ONE).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(poisson_kernel(1.0, ONE, ONE).is_err());
        assert!(poisson_kernel(-0.1, ONE, ONE).is_err());
        assert!(poisson_kernel(0.5, c(0.5, 0.0), ONE).is_err());
        // symmetric and positive
        let (a, b) = (cis(0.4), cis(-2.2));
        let k = poisson_kernel(0.9, a, b).unwrap();
        assert!(k > 0.0);
        assert!((k - poisson_kernel(0.9, b, a).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn abel_series_term_and_constant() {
        let z = cis(0.7);
        for j in [-3i64, 0, 2] {
            let v = abel_mean_series(&SpectralSeries::monomial(j), 0.6, z).unwrap();
            let expected = z.powi(j as i32) * 0.6f64.powi(j.abs() as i32);
            assert!((v - expected).norm() < 1e-15);
        }
        let k = SpectralSeries::from_pairs([(0, c(2.0, -1.0))]);
        assert_eq!(abel_mean_series(&k, 0.99, z).unwrap(), c(2.0, -1.0));
        assert!(abel_mean_series(&k, 1.0, z).is_err());
    }

    #[test]
    fn abel_integral_simple_cases() {
        let one = SampledCircleFunction::from_fn(256, |_| ONE).unwrap();
        for r in [0.0, 0.5, 0.9] {
            assert!((abel_mean_integral(&one, r, cis(0.3)).unwrap() - ONE).norm() < 1e-6);
        }
        let e1 = SampledCircleFunction::from_fn(256, cis).unwrap();
        assert!((abel_mean_integral(&e1, 0.5, ONE).unwrap() - c(0.5, 0.0)).norm() < 1e-6);
        assert!(abel_mean_integral(&e1, 1.0, ONE).is_err());
    }

    #[test]
    fn harmonic_extension_monomials() {
        let zeta = DiskPoint::new(c(0.3, 0.4)).unwrap();
        assert_eq!(harmonic_extension(&SpectralSeries::monomial(1), zeta), c(0.3, 0.4));
        assert_eq!(harmonic_extension(&SpectralSeries::monomial(-1), zeta), c(0.3, -0.4));
        assert!(DiskPoint::new(ONE).is_err());
        let f = SpectralSeries::from_pairs([(2, ONE), (-3, ONE)]);
        let (p, m) = holomorphic_parts(&f, DiskPoint::new(c(0.5, 0.0)).unwrap());
        assert!((p - c(0.25, 0.0)).norm() < 1e-15);
        assert!((m - c(0.125, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cauchy_product_examples() {
        assert_eq!(cauchy_product(&[ONE, ONE], &[ONE, ONE]), vec![ONE, c(2.0, 0.0), ONE]);
        let b = vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 4.0)];
        assert_eq!(cauchy_product(&[ONE], &b), b);
        assert!(cauchy_product(&[], &b).is_empty());
    }

    #[test]
    fn abel_sum_of_alternating_ones() {
        let a: Vec<C64> = (0..200_000).map(|j| c(if j % 2 == 0 { 1.0 } else { -1.0 }, 0.0)).collect();
        let s = abel_sum(&a, &[0.9, 0.99, 0.999]).unwrap();
        for &(r, v) in &s.trace {
            assert!((v.re - 1.0 / (1.0 + r)).abs() < 1e-9, "r={r} v={v}");
        }
        assert!((s.value.re - 0.5).abs() < 1e-3);
        let g = abel_sum_generated(|j| c(if j % 2 == 0 { 1.0 } else { -1.0 }, 0.0), 1.0, &[0.9, 0.99], 1e-13).unwrap();
        assert!((g.value.re - 1.0 / 1.99).abs() < 1e-12);
    }

    #[test]
    fn abel_sum_finite_is_exact_polynomial() {
        let a = [c(1.0, 0.0), c(2.0, 1.0), c(-0.5, 0.0)];
        let r: f64 = 0.8;
        let s = abel_sum(&a, &[0.1, r]).unwrap();
        let direct = a[0] + a[1] * r + a[2] * r * r;
        assert!((s.value - direct).norm() < 1e-15);
    }

    #[test]
    fn abel_schedule_validation() {
        assert!(abel_sum(&[ONE], &[]).is_err());
        assert!(abel_sum(&[ONE], &[0.5, 0.5]).is_err());
        assert!(abel_sum(&[ONE], &[0.9, 0.5]).is_err());
        assert!(abel_sum(&[ONE], &[0.5, 1.0]).is_err());
    }

    #[test]
    fn product_coefficient_examples() {
        let p = product_coefficients(&SpectralSeries::monomial(1), &SpectralSeries::monomial(2));
        assert_eq!(p, SpectralSeries::monomial(3));
        let cos = SpectralSeries::from_pairs([(-1, c(0.5, 0.0)), (1, c(0.5, 0.0))]);
        let sq = product_coefficients(&cos, &cos);
        let expected = SpectralSeries::from_pairs([(-2, c(0.25, 0.0)), (0, c(0.5, 0.0)), (2, c(0.25, 0.0))]);
        assert!(sq.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn measure_coefficients() {
        let mu = CircleMeasure::dirac(cis(PI / 2.0)).unwrap();
        // conj(i)^j = (-i)^j
        assert!((mu.coefficient(1) - c(0.0, -1.0)).norm() < 1e-15);
        assert!((mu.coefficient(2) - c(-1.0, 0.0)).norm() < 1e-15);
        let mut nu = CircleMeasure::default();
        nu.add_atom(ONE, c(2.0, 0.0)).unwrap();
        nu.density = SpectralSeries::monomial(3);
        assert_eq!(nu.coefficient(3), c(3.0, 0.0));
        assert_eq!(nu.coefficient(0), c(2.0, 0.0));
        assert!(nu.add_atom(c(2.0, 0.0), ONE).is_err());
        for j in -5..=5 {
            assert!(nu.coefficient(j).norm() <= nu.total_variation_bound() + 1e-15);
        }
    }
}
