//! Fourier analysis on the real line.
//!
//! Transforms use `f^(xi) = int f(x) e^{-i x xi} dx`. Closed-form families
//! (one-sided and two-sided exponentials) return exact formulas; callables
//! and bounded exponential sums go through truncated midpoint quadrature,
//! and every truncation is backed by an explicit tail certificate.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{cis, line_integral, line_integral_refined, LineIntegral, LineQuadrature, Tolerances, C64, I, ONE, ZERO};

/// Panel width used near kinks of the closed-form families.
const KINK_STEP: f64 = 2e-3;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type ComplexFn = Arc<dyn Fn(f64) -> C64 + Send + Sync>;

/// Integrable callable with a decay certificate.
#[derive(Clone)]
pub struct Callable {
    func: ComplexFn,
    /// `T -> bound on int_{|x| > T} |f|`.
    l1_tail: RealFn,
    sup: f64,
}

impl fmt::Debug for Callable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Callable").field("sup", &self.sup).finish_non_exhaustive()
    }
}

/// Functions on the real line understood by this module.
#[derive(Debug, Clone)]
pub enum LineFunction {
    /// `e^{r x}` for `x <= 0`, zero for `x > 0`.
    LeftExp(f64),
    /// Zero for `x <= 0`, `e^{-r x}` for `x > 0`.
    RightExp(f64),
    /// `e^{-r |x|}`.
    TwoSidedExp(f64),
    Callable(Callable),
    /// Bounded, non-integrable sum `sum_k c_k e^{i nu_k t}`.
    Exponentials(Vec<(f64, C64)>),
}

fn check_rate(r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("decay rate r = {r} must be positive")));
    }
    Ok(r)
}

impl LineFunction {
    pub fn left_exp(r: f64) -> Result<Self> {
        check_rate(r).map(LineFunction::LeftExp)
    }

    pub fn right_exp(r: f64) -> Result<Self> {
        check_rate(r).map(LineFunction::RightExp)
    }

    pub fn two_sided_exp(r: f64) -> Result<Self> {
        check_rate(r).map(LineFunction::TwoSidedExp)
    }

    /// Integrable callable; `l1_tail(T)` must bound `int_{|x|>T} |f|` and
    /// `sup` must bound `|f|`.
    pub fn callable<F, B>(func: F, sup: f64, l1_tail: B) -> Result<Self>
    where
        F: Fn(f64) -> C64 + Send + Sync + 'static,
        B: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(sup >= 0.0) {
            return Err(Error::domain("callable needs a sup bound"));
        }
        Ok(LineFunction::Callable(Callable {
            func: Arc::new(func),
            l1_tail: Arc::new(l1_tail),
            sup,
        }))
    }

    pub fn exponentials(terms: Vec<(f64, C64)>) -> Result<Self> {
        if terms.iter().any(|(nu, c)| !nu.is_finite() || !c.is_finite()) {
            return Err(Error::domain("exponential sum needs finite frequencies and coefficients"));
        }
        Ok(LineFunction::Exponentials(terms))
    }

    pub fn constant(c: C64) -> Self {
        LineFunction::Exponentials(vec![(0.0, c)])
    }

    pub fn eval(&self, x: f64) -> C64 {
        match self {
            LineFunction::LeftExp(r) => {
                if x <= 0.0 {
                    C64::new((r * x).exp(), 0.0)
                } else {
                    ZERO
                }
            }
            LineFunction::RightExp(r) => {
                if x > 0.0 {
                    C64::new((-r * x).exp(), 0.0)
                } else {
                    ZERO
                }
            }
            LineFunction::TwoSidedExp(r) => C64::new((-r * x.abs()).exp(), 0.0),
            LineFunction::Callable(c) => (c.func)(x),
            LineFunction::Exponentials(terms) => terms.iter().map(|(nu, c)| c * cis(nu * x)).sum(),
        }
    }

    pub fn sup_bound(&self) -> f64 {
        match self {
            LineFunction::Callable(c) => c.sup,
            LineFunction::Exponentials(terms) => terms.iter().map(|(_, c)| c.norm()).sum(),
            _ => 1.0,
        }
    }

    pub fn is_integrable(&self) -> bool {
        !matches!(self, LineFunction::Exponentials(_))
    }

    /// `int |f|` when known in closed form.
    pub fn l1_norm(&self) -> Option<f64> {
        match self {
            LineFunction::LeftExp(r) | LineFunction::RightExp(r) => Some(1.0 / r),
            LineFunction::TwoSidedExp(r) => Some(2.0 / r),
            _ => None,
        }
    }

    /// Bound on `int_{|x| > T} |f|`; infinite for exponential sums.
    pub fn l1_tail(&self, t: f64) -> f64 {
        let t = t.max(0.0);
        match self {
            LineFunction::LeftExp(r) | LineFunction::RightExp(r) => (-r * t).exp() / r,
            LineFunction::TwoSidedExp(r) => 2.0 * (-r * t).exp() / r,
            LineFunction::Callable(c) => (c.l1_tail)(t),
            LineFunction::Exponentials(terms) => {
                if terms.iter().all(|(_, c)| *c == ZERO) {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    fn max_frequency(&self) -> f64 {
        match self {
            LineFunction::Exponentials(terms) => terms.iter().map(|(nu, _)| nu.abs()).fold(0.0, f64::max),
            _ => 0.0,
        }
    }

    /// Exact transform for the closed-form families.
    pub fn closed_form_transform(&self, xi: f64) -> Option<C64> {
        match self {
            LineFunction::LeftExp(r) => Some(ONE / C64::new(*r, -xi)),
            LineFunction::RightExp(r) => Some(ONE / C64::new(*r, xi)),
            LineFunction::TwoSidedExp(r) => Some(C64::new(2.0 * r / (r * r + xi * xi), 0.0)),
            _ => None,
        }
    }

    /// Open interval of `Im zeta` on which the transform extends holomorphically.
    pub fn strip(&self) -> (f64, f64) {
        match self {
            LineFunction::LeftExp(r) => (-r, f64::INFINITY),
            LineFunction::RightExp(r) => (f64::NEG_INFINITY, *r),
            LineFunction::TwoSidedExp(r) => (-r, *r),
            _ => (0.0, 0.0),
        }
    }
}

fn integrable_or_err(f: &LineFunction) -> Result<()> {
    if f.is_integrable() {
        Ok(())
    } else {
        Err(Error::domain("function is not integrable on the line"))
    }
}

fn transform_step(xi: f64) -> f64 {
    KINK_STEP / xi.abs().max(1.0)
}

/// Transform of an integrable function by quadrature over the window `q`.
pub fn fourier_transform_quadrature(f: &LineFunction, xi: f64, q: &LineQuadrature, tol: &Tolerances) -> Result<LineIntegral> {
    integrable_or_err(f)?;
    let c = q.center.abs();
    line_integral(|x| f.eval(x) * cis(-x * xi), q, |t| f.l1_tail(t - c), tol)
}

/// `f^(xi)`; exact for closed-form families, quadrature for callables.
pub fn fourier_transform(f: &LineFunction, xi: f64, tol: &Tolerances) -> Result<C64> {
    if let Some(v) = f.closed_form_transform(xi) {
        return Ok(v);
    }
    integrable_or_err(f)?;
    let q = LineQuadrature::fit(0.0, transform_step(xi), |t| f.l1_tail(t), tol.quad_eps / 2.0)?;
    line_integral_refined(|x| f.eval(x) * cis(-x * xi), &q, |t| f.l1_tail(t), tol).map(|r| r.value)
}

/// Finite measure on the line: point masses plus an optional scaled density.
#[derive(Debug, Clone, Default)]
pub struct AtomicDensityMeasure {
    pub atoms: Vec<(f64, C64)>,
    pub density: Option<(C64, LineFunction)>,
}

impl AtomicDensityMeasure {
    pub fn dirac(a: f64) -> Self {
        AtomicDensityMeasure {
            atoms: vec![(a, ONE)],
            density: None,
        }
    }

    pub fn atoms(atoms: Vec<(f64, C64)>) -> Self {
        AtomicDensityMeasure { atoms, density: None }
    }

    pub fn with_density(density: LineFunction) -> Result<Self> {
        integrable_or_err(&density)?;
        Ok(AtomicDensityMeasure {
            atoms: Vec::new(),
            density: Some((ONE, density)),
        })
    }

    fn atom_reach(&self) -> f64 {
        self.atoms.iter().map(|(a, _)| a.abs()).fold(0.0, f64::max)
    }

    /// `sum |w_k| + |scale| int |density|`.
    pub fn total_variation(&self, tol: &Tolerances) -> Result<f64> {
        let atoms: f64 = self.atoms.iter().map(|(_, w)| w.norm()).sum();
        let density = match &self.density {
            None => 0.0,
            Some((s, f)) => {
                let l1 = match f.l1_norm() {
                    Some(v) => v,
                    None => {
                        let q = LineQuadrature::fit(0.0, KINK_STEP, |t| f.l1_tail(t), tol.quad_eps / 2.0)?;
                        let r = line_integral_refined(|x| C64::new(f.eval(x).norm(), 0.0), &q, |t| f.l1_tail(t), tol)?;
                        r.value.re + r.error_budget()
                    }
                };
                s.norm() * l1
            }
        };
        Ok(atoms + density)
    }
}

/// `mu^(xi) = sum_k w_k e^{-i a_k xi} + scale * density^(xi)`.
pub fn measure_transform(mu: &AtomicDensityMeasure, xi: f64, tol: &Tolerances) -> Result<C64> {
    let atoms: C64 = mu.atoms.iter().map(|(a, w)| w * cis(-a * xi)).sum();
    let density = match &mu.density {
        None => ZERO,
        Some((s, f)) => s * fourier_transform(f, xi, tol)?,
    };
    Ok(atoms + density)
}

/// Transforms that extend to complex arguments inside a validity strip.
pub trait ComplexTransform {
    fn transform_complex(&self, zeta: C64) -> Result<C64>;
}

fn strip_label(lo: f64, hi: f64) -> String {
    format!("({lo}, {hi})")
}

impl ComplexTransform for LineFunction {
    fn transform_complex(&self, zeta: C64) -> Result<C64> {
        let (lo, hi) = self.strip();
        if !(lo < zeta.im && zeta.im < hi) {
            return Err(Error::StripViolation {
                im: zeta.im,
                strip: strip_label(lo, hi),
            });
        }
        Ok(match self {
            LineFunction::LeftExp(r) => ONE / (C64::new(*r, 0.0) - I * zeta),
            LineFunction::RightExp(r) => ONE / (C64::new(*r, 0.0) + I * zeta),
            LineFunction::TwoSidedExp(r) => C64::new(2.0 * r, 0.0) / ((C64::new(*r, 0.0) - I * zeta) * (C64::new(*r, 0.0) + I * zeta)),
            _ => unreachable!("empty strip"),
        })
    }
}

impl ComplexTransform for AtomicDensityMeasure {
    fn transform_complex(&self, zeta: C64) -> Result<C64> {
        let atoms: C64 = self.atoms.iter().map(|(a, w)| w * (-I * zeta * a).exp()).sum();
        let density = match &self.density {
            None => ZERO,
            Some((s, f)) => s * f.transform_complex(zeta)?,
        };
        Ok(atoms + density)
    }
}

/// Both sides of the translation and modulation laws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LawCheck {
    /// `((f_a)^(xi), f^(xi) e^{-i a xi})` with `f_a(x) = f(x - a)`.
    pub translation: (C64, C64),
    /// `((f^alpha)^(xi), f^(xi + alpha))` with `f^alpha(x) = f(x) e^{-i alpha x}`.
    pub modulation: (C64, C64),
}

/// Evaluates both laws; the left sides always come from quadrature.
pub fn translation_modulation_check(f: &LineFunction, a: f64, alpha: f64, xi: f64, tol: &Tolerances) -> Result<LawCheck> {
    integrable_or_err(f)?;
    let step = transform_step(xi.abs().max((xi + alpha).abs()));
    let shifted = LineQuadrature::fit(a, step, |t| f.l1_tail(t), tol.quad_eps / 2.0)?;
    let lhs_t = line_integral(|x| f.eval(x - a) * cis(-x * xi), &shifted, |t| f.l1_tail(t), tol)?.value;
    let rhs_t = fourier_transform(f, xi, tol)? * cis(-a * xi);
    let plain = LineQuadrature::fit(0.0, step, |t| f.l1_tail(t), tol.quad_eps / 2.0)?;
    let lhs_m = line_integral(|x| f.eval(x) * cis(-alpha * x) * cis(-x * xi), &plain, |t| f.l1_tail(t), tol)?.value;
    let rhs_m = fourier_transform(f, xi + alpha, tol)?;
    Ok(LawCheck {
        translation: (lhs_t, rhs_t),
        modulation: (lhs_m, rhs_m),
    })
}

fn pairing(outer: &AtomicDensityMeasure, inner: &AtomicDensityMeasure, tol: &Tolerances) -> Result<C64> {
    let mut total = ZERO;
    for (a, w) in &outer.atoms {
        total += w * measure_transform(inner, *a, tol)?;
    }
    if let Some((s, rho)) = &outer.density {
        let inner_tv = inner.total_variation(tol)?;
        let step = KINK_STEP / inner.atom_reach().max(1.0);
        let budget = tol.quad_eps / 2.0;
        let q = LineQuadrature::fit(0.0, step, |t| inner_tv * rho.l1_tail(t), budget)?;
        let r = line_integral_refined(
            |t| measure_transform(inner, t, tol).unwrap_or(C64::new(f64::NAN, f64::NAN)) * rho.eval(t),
            &q,
            |t| inner_tv * rho.l1_tail(t),
            tol,
        )?;
        if !r.value.is_finite() {
            return Err(Error::domain("inner transform failed during pairing quadrature"));
        }
        total += s * r.value;
    }
    Ok(total)
}

/// `(int nu^ d mu, int mu^ d nu)`; the two must agree.
pub fn multiplication_formula_check(mu: &AtomicDensityMeasure, nu: &AtomicDensityMeasure, tol: &Tolerances) -> Result<(C64, C64)> {
    Ok((pairing(mu, nu, tol)?, pairing(nu, mu, tol)?))
}

/// A point of the open upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint(C64);

impl HalfPlanePoint {
    pub fn new(z: C64) -> Result<Self> {
        if !(z.im > 0.0) || !z.re.is_finite() {
            return Err(Error::domain(format!("{z} is not in the upper half-plane")));
        }
        Ok(HalfPlanePoint(z))
    }

    pub fn value(&self) -> C64 {
        self.0
    }
}

fn halfplane_step(f: &LineFunction, y: f64) -> f64 {
    let kink = if matches!(f, LineFunction::Exponentials(_) | LineFunction::Callable(_)) {
        f64::INFINITY
    } else {
        KINK_STEP
    };
    (y / 4.0).min(1.0 / (1.0 + f.max_frequency())).min(kink).min(0.25)
}

/// Tail of `(1/pi) int_{|s| > T} y / (y^2 + s^2) ds`.
fn poisson_mass_tail(y: f64, t: f64) -> f64 {
    1.0 - 2.0 / PI * (t / y).atan()
}

fn poisson_tail(f: &LineFunction, x: f64, y: f64, t: f64) -> f64 {
    let k = y / (PI * (y * y + t * t));
    match f {
        LineFunction::Exponentials(terms) => terms
            .iter()
            .map(|(nu, c)| {
                let mass = poisson_mass_tail(y, t);
                if *nu == 0.0 {
                    c.norm() * mass
                } else {
                    c.norm() * mass.min(4.0 * k / nu.abs())
                }
            })
            .sum(),
        _ => (k * f.l1_tail(t - x.abs())).min(f.sup_bound() * poisson_mass_tail(y, t)),
    }
}

/// Poisson average `(1/pi) int f(t) y / (y^2 + (t - x)^2) dt` at `x + i y`.
pub fn poisson_halfplane(f: &LineFunction, x: f64, y: f64, tol: &Tolerances) -> Result<LineIntegral> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("y = {y} must be positive")));
    }
    let tail = |t: f64| poisson_tail(f, x, y, t);
    let q = LineQuadrature::fit(x, halfplane_step(f, y), tail, tol.quad_eps / 2.0)?;
    line_integral_refined(|t| f.eval(t) * (y / (PI * (y * y + (t - x) * (t - x)))), &q, tail, tol)
}

fn cauchy_tail(f: &LineFunction, x: f64, y: f64, t: f64) -> f64 {
    match f {
        LineFunction::Exponentials(terms) => terms
            .iter()
            .map(|(nu, c)| {
                if *nu == 0.0 {
                    c.norm() * poisson_mass_tail(y, t) / 2.0
                } else {
                    c.norm() * 2.0 / (PI * nu.abs() * t)
                }
            })
            .sum(),
        _ => f.l1_tail(t - x.abs()) / (2.0 * PI * t),
    }
}

/// `(h_+(z), h_-(z))` with `h_+ = (1/2 pi i) int f(t)/(t - z) dt` and
/// `h_- = -(1/2 pi i) int f(t)/(t - conj z) dt`. The window is symmetric
/// about `Re z`.
pub fn cauchy_parts(f: &LineFunction, z: HalfPlanePoint, tol: &Tolerances) -> Result<(C64, C64)> {
    let z = z.value();
    let (x, y) = (z.re, z.im);
    let tail = |t: f64| cauchy_tail(f, x, y, t);
    let q = LineQuadrature::fit(x, halfplane_step(f, y), tail, tol.quad_eps / 2.0)?;
    let scale = ONE / (2.0 * PI * I);
    let plus = line_integral_refined(|t| f.eval(t) / (t - z), &q, tail, tol)?.value * scale;
    let minus = line_integral_refined(|t| f.eval(t) / (t - z.conj()), &q, tail, tol)?.value * (-scale);
    Ok((plus, minus))
}

/// Test functions continuous on the closed upper half-plane, holomorphic
/// inside, and decaying along the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticCatalog {
    /// `1 / (x + i)`
    SimplePole,
    /// `1 / (x + i)^2`
    DoublePole,
    /// `e^{i x} / (x + 2 i)`
    OscillatingPole,
}

impl AnalyticCatalog {
    pub const ALL: [AnalyticCatalog; 3] = [
        AnalyticCatalog::SimplePole,
        AnalyticCatalog::DoublePole,
        AnalyticCatalog::OscillatingPole,
    ];

    pub fn eval(&self, z: C64) -> C64 {
        match self {
            AnalyticCatalog::SimplePole => ONE / (z + I),
            AnalyticCatalog::DoublePole => ONE / ((z + I) * (z + I)),
            AnalyticCatalog::OscillatingPole => (I * z).exp() / (z + 2.0 * I),
        }
    }

    /// `|g(x)| <= 1 / |x|^p` on the real line.
    fn decay_power(&self) -> i32 {
        match self {
            AnalyticCatalog::DoublePole => 2,
            _ => 1,
        }
    }

    /// Distance from the real axis to the pole in the lower half-plane.
    fn pole_depth(&self) -> f64 {
        match self {
            AnalyticCatalog::OscillatingPole => 2.0,
            _ => 1.0,
        }
    }
}

/// Cauchy-formula quantities for a catalog function at `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyCheck {
    /// `(1/2 pi i) int g(x) / (x - w) dx`
    pub integral: C64,
    /// `g(w)` from the closed form
    pub expected: C64,
    /// `(1/2 pi i) int g(x) / (x - conj w) dx`, which vanishes
    pub conjugate_integral: C64,
    /// `(1/2 pi i) int g(x) [1/(x - w) - 1/(x - conj w)] dx`
    pub difference_kernel: C64,
}

pub fn cauchy_integral_check(g: AnalyticCatalog, w: C64, tol: &Tolerances) -> Result<CauchyCheck> {
    let w = HalfPlanePoint::new(w)?.value();
    let p = g.decay_power();
    let m = w.norm();
    // int_{|x|>T} |x|^{-p} |x - w|^{-1} dx <= 2 / (p (T - m)^p), times 1/(2 pi)
    let single_tail = move |t: f64| {
        if t <= m {
            f64::INFINITY
        } else {
            1.0 / (PI * p as f64 * (t - m).powi(p))
        }
    };
    // the difference kernel is 2 y / |x - w|^2, one more power of decay
    let diff_tail = move |t: f64| {
        if t <= m {
            f64::INFINITY
        } else {
            2.0 * w.im / (PI * (p + 1) as f64 * (t - m).powi(p + 1))
        }
    };
    let depth = g.pole_depth().min(w.im);
    let step = (depth / 4.0).min(0.25);
    let budget = tol.quad_eps / 2.0;
    let scale = ONE / (2.0 * PI * I);
    let gx = move |x: f64| g.eval(C64::new(x, 0.0));

    let q = LineQuadrature::fit(0.0, step, single_tail, budget)?;
    let integral = line_integral_refined(|x| gx(x) / (x - w), &q, single_tail, tol)?.value * scale;
    let conjugate_integral = line_integral_refined(|x| gx(x) / (x - w.conj()), &q, single_tail, tol)?.value * scale;
    let qd = LineQuadrature::fit(0.0, step, diff_tail, budget)?;
    let difference_kernel = line_integral_refined(
        |x| gx(x) * (2.0 * I * w.im) / (x - w).norm_sqr(),
        &qd,
        diff_tail,
        tol,
    )?
    .value
        * scale;
    Ok(CauchyCheck {
        integral,
        expected: g.eval(w),
        conjugate_integral,
        difference_kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn gaussian() -> LineFunction {
        // int_{|x|>T} e^{-x^2} <= e^{-T^2} / T for T >= 1
        LineFunction::callable(|x| c((-x * x).exp(), 0.0), 1.0, |t| if t < 1.0 { 2.0 } else { (-t * t).exp() / t }).unwrap()
    }

    #[test]
    fn closed_form_transforms() {
        let a = LineFunction::left_exp(2.0).unwrap();
        let b = LineFunction::right_exp(2.0).unwrap();
        let c1 = LineFunction::two_sided_exp(1.0).unwrap();
        for xi in [-3.0, 0.0, 0.7] {
            assert_eq!(fourier_transform(&a, xi, &tol()).unwrap(), ONE / c(2.0, -xi));
            assert_eq!(fourier_transform(&b, xi, &tol()).unwrap(), ONE / c(2.0, xi));
        }
        assert_eq!(fourier_transform(&c1, 0.0, &tol()).unwrap(), c(2.0, 0.0));
        assert!(LineFunction::two_sided_exp(0.0).is_err());
    }

    #[test]
    fn transforms_decay_at_high_frequency() {
        let c1 = LineFunction::two_sided_exp(1.0).unwrap();
        let mut prev = f64::INFINITY;
        for xi in [1.0, 10.0, 100.0, 1e3] {
            let v = fourier_transform(&c1, xi, &tol()).unwrap().norm();
            assert!(v < prev);
            prev = v;
        }
        // 2 / (1 + 1e6) is about 2e-6, so 1e-6 is out of reach at r = 1
        assert!(prev < 1e-5);
        let a1 = LineFunction::left_exp(1.0).unwrap();
        assert!(fourier_transform(&a1, 1e6, &tol()).unwrap().norm() < 1e-5);
    }

    #[test]
    fn quadrature_agrees_with_closed_forms() {
        let q = LineQuadrature::new(40.0, 80_000).unwrap();
        for f in [
            LineFunction::left_exp(1.0).unwrap(),
            LineFunction::right_exp(1.5).unwrap(),
            LineFunction::two_sided_exp(1.0).unwrap(),
        ] {
            for xi in [-2.0, 0.0, 1.0] {
                let quad = fourier_transform_quadrature(&f, xi, &q, &tol()).unwrap();
                let exact = f.closed_form_transform(xi).unwrap();
                assert!((quad.value - exact).norm() < 1e-6, "{f:?} xi={xi}");
            }
        }
    }

    #[test]
    fn callable_gaussian_transform() {
        // int e^{-x^2} e^{-i x xi} dx = sqrt(pi) e^{-xi^2/4}
        for xi in [0.0, 1.0, 3.0] {
            let v = fourier_transform(&gaussian(), xi, &tol()).unwrap();
            assert!((v - c(PI.sqrt() * (-xi * xi / 4.0).exp(), 0.0)).norm() < 1e-6);
        }
    }

    #[test]
    fn exponential_sums_have_no_transform() {
        let f = LineFunction::constant(ONE);
        assert!(fourier_transform(&f, 0.0, &tol()).is_err());
        assert!(AtomicDensityMeasure::with_density(f).is_err());
    }

    #[test]
    fn dirac_transforms() {
        let t = tol();
        for xi in [-1.0, 0.0, 2.5] {
            assert_eq!(measure_transform(&AtomicDensityMeasure::dirac(0.0), xi, &t).unwrap(), ONE);
            assert!((measure_transform(&AtomicDensityMeasure::dirac(2.0), xi, &t).unwrap() - cis(-2.0 * xi)).norm() < 1e-15);
            let dipole = AtomicDensityMeasure::atoms(vec![(1.0, ONE), (-1.0, -ONE)]);
            let v = measure_transform(&dipole, xi, &t).unwrap();
            assert!((v - c(0.0, -2.0 * xi.sin())).norm() < 1e-15);
        }
    }

    #[test]
    fn complex_transform_strips() {
        let a1 = LineFunction::left_exp(1.0).unwrap();
        assert!((a1.transform_complex(c(0.0, 0.5)).unwrap() - c(2.0 / 3.0, 0.0)).norm() < 1e-15);
        let c1 = LineFunction::two_sided_exp(1.0).unwrap();
        assert!(matches!(c1.transform_complex(c(0.0, 2.0)), Err(Error::StripViolation { .. })));
        assert!(LineFunction::right_exp(1.0).unwrap().transform_complex(c(0.0, 1.0)).is_err());
        assert!(LineFunction::right_exp(1.0).unwrap().transform_complex(c(3.0, -5.0)).is_ok());
        // on the real axis the complex route equals the real one
        for xi in [-1.5, 0.3] {
            let v = c1.transform_complex(c(xi, 0.0)).unwrap();
            assert!((v - c1.closed_form_transform(xi).unwrap()).norm() < 1e-15);
        }
        assert!(gaussian().transform_complex(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn left_supported_atoms_are_bounded_in_upper_half_plane() {
        let mu = AtomicDensityMeasure::atoms(vec![(-1.0, c(0.5, 0.5)), (0.0, c(-2.0, 0.0))]);
        let tv = mu.total_variation(&tol()).unwrap();
        for zeta in [c(0.0, 0.1), c(2.0, 1.0), c(-5.0, 7.0)] {
            assert!(mu.transform_complex(zeta).unwrap().norm() <= tv + 1e-12);
        }
    }

    #[test]
    fn translation_and_modulation_laws() {
        let c1 = LineFunction::two_sided_exp(1.0).unwrap();
        let law = translation_modulation_check(&c1, 0.0, 0.0, 0.4, &tol()).unwrap();
        assert!((law.translation.0 - law.translation.1).norm() < 1e-6);
        let law = translation_modulation_check(&c1, PI, 0.0, 1.0, &tol()).unwrap();
        assert!((law.translation.1 - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((law.translation.0 - law.translation.1).norm() < 1e-6);
        let a1 = LineFunction::left_exp(1.0).unwrap();
        let law = translation_modulation_check(&a1, 0.0, 0.5, 0.0, &tol()).unwrap();
        assert!((law.modulation.1 - ONE / c(1.0, -0.5)).norm() < 1e-15);
        assert!((law.modulation.0 - law.modulation.1).norm() < 1e-6);
    }

    #[test]
    fn multiplication_formula_examples() {
        let t = tol();
        let nu = AtomicDensityMeasure::with_density(LineFunction::two_sided_exp(1.0).unwrap()).unwrap();
        let (l, r) = multiplication_formula_check(&AtomicDensityMeasure::dirac(0.0), &nu, &t).unwrap();
        assert!((l - c(2.0, 0.0)).norm() < 1e-12);
        assert!((r - c(2.0, 0.0)).norm() < 1e-6);
        let (l, r) = multiplication_formula_check(&AtomicDensityMeasure::dirac(0.7), &AtomicDensityMeasure::dirac(-1.3), &t).unwrap();
        assert!((l - cis(0.7 * 1.3)).norm() < 1e-15);
        assert!((l - r).norm() < 1e-15);
        let mu = AtomicDensityMeasure::with_density(LineFunction::two_sided_exp(2.0).unwrap()).unwrap();
        let (l, r) = multiplication_formula_check(&nu, &mu, &t).unwrap();
        assert!((l - r).norm() < 1e-6, "{l} {r}");
    }

    #[test]
    fn poisson_of_constant_is_one() {
        let one = LineFunction::constant(ONE);
        for y in [0.1, 1.0, 10.0] {
            let v = poisson_halfplane(&one, 0.3, y, &tol()).unwrap();
            assert!((v.value - ONE).norm() < 1e-6, "y={y} {v:?}");
        }
        assert!(poisson_halfplane(&one, 0.0, 0.0, &tol()).is_err());
    }

    #[test]
    fn poisson_of_single_frequency_damps() {
        let e1 = LineFunction::exponentials(vec![(1.0, ONE)]).unwrap();
        for (x, y) in [(0.0, 1.0), (0.8, 0.5)] {
            let v = poisson_halfplane(&e1, x, y, &tol()).unwrap().value;
            assert!((v - cis(x) * (-y).exp()).norm() < 1e-6);
        }
    }

    #[test]
    fn poisson_of_laplace_density_decays_like_inverse_y() {
        // frozen oracle values from adaptive quadrature of (1/pi) int e^{-|t|} y/(y^2+t^2) dt
        let c1 = LineFunction::two_sided_exp(1.0).unwrap();
        for (y, oracle) in [(10.0, 0.06251035435671175), (100.0, 0.00636492600746031)] {
            let v = poisson_halfplane(&c1, 0.0, y, &tol()).unwrap().value.re;
            assert!((v - oracle).abs() < 1e-7, "y={y} v={v} oracle={oracle}");
            let ratio = v / (2.0 / (PI * y));
            assert!(ratio < 1.0 && ratio > 0.98);
        }
    }

    #[test]
    fn cauchy_parts_of_single_frequencies() {
        let y = 1.0;
        let z = HalfPlanePoint::new(c(0.0, y)).unwrap();
        let (p, m) = cauchy_parts(&LineFunction::exponentials(vec![(1.0, ONE)]).unwrap(), z, &tol()).unwrap();
        assert!((p - c((-y).exp(), 0.0)).norm() < 1e-6);
        assert!(m.norm() < 1e-6);
        let (p, m) = cauchy_parts(&LineFunction::exponentials(vec![(-1.0, ONE)]).unwrap(), z, &tol()).unwrap();
        assert!(p.norm() < 1e-6);
        assert!((m - c((-y).exp(), 0.0)).norm() < 1e-6);
    }

    #[test]
    fn cauchy_parts_recombine_to_poisson() {
        let t = tol();
        for f in [LineFunction::two_sided_exp(1.0).unwrap(), LineFunction::left_exp(2.0).unwrap(), gaussian()] {
            for z in [c(0.0, 0.5), c(1.2, 2.0)] {
                let (p, m) = cauchy_parts(&f, HalfPlanePoint::new(z).unwrap(), &t).unwrap();
                let h = poisson_halfplane(&f, z.re, z.im, &t).unwrap().value;
                assert!((p + m - h).norm() < 1e-6, "{f:?} {z}");
            }
        }
        assert!(HalfPlanePoint::new(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn cauchy_formula_on_catalog() {
        let t = tol();
        let r = cauchy_integral_check(AnalyticCatalog::DoublePole, c(0.0, 1.0), &t).unwrap();
        assert!((r.expected - c(-0.25, 0.0)).norm() < 1e-15);
        assert!((r.integral - r.expected).norm() < 1e-6);
        assert!(r.conjugate_integral.norm() < 1e-6);
        assert!((r.difference_kernel - r.expected).norm() < 1e-6);
        for g in AnalyticCatalog::ALL {
            let r = cauchy_integral_check(g, c(0.5, 1.5), &t).unwrap();
            assert!((r.integral - r.expected).norm() < 1e-6, "{g:?} {r:?}");
            assert!(r.conjugate_integral.norm() < 1e-6, "{g:?} {r:?}");
            assert!((r.difference_kernel - r.expected).norm() < 1e-6, "{g:?} {r:?}");
        }
        assert!(cauchy_integral_check(AnalyticCatalog::SimplePole, c(0.0, -1.0), &t).is_err());
    }
}
