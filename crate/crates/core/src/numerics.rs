//! Shared numeric substrate: circle grids, truncated line quadrature and the
//! tolerance policy used across the crate.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exec;

pub type C64 = num_complex::Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Two-tier tolerance policy.
///
/// `exact_eps` is for identities that hold in exact arithmetic and only see
/// rounding error; `quad_eps` is for identities limited by discretization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub exact_eps: f64,
    pub quad_eps: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact_eps: 1e-12,
            quad_eps: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn new(exact_eps: f64, quad_eps: f64) -> Result<Self> {
        if !(0.0 < exact_eps && exact_eps < quad_eps && quad_eps < 1.0) {
            return Err(Error::domain(format!(
                "tolerances need 0 < exact_eps < quad_eps < 1, got {exact_eps:e}, {quad_eps:e}"
            )));
        }
        Ok(Tolerances {
            exact_eps,
            quad_eps,
        })
    }

    pub fn with_quad(self, quad_eps: f64) -> Result<Self> {
        Tolerances::new(self.exact_eps, quad_eps)
    }
}

/// `e^{i theta}`.
#[inline]
pub fn cis(theta: f64) -> C64 {
    C64::new(theta.cos(), theta.sin())
}

/// Uniform grid `theta_k = 2 pi k / n` on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleGrid {
    n: usize,
}

impl CircleGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("circle grid needs n >= 1"));
        }
        Ok(CircleGrid { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn angle(&self, k: usize) -> f64 {
        2.0 * PI * k as f64 / self.n as f64
    }

    /// The node `e^{i theta_k}`.
    pub fn point(&self, k: usize) -> C64 {
        cis(self.angle(k))
    }

    pub fn angles(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.angle(k)).collect()
    }

    /// Quadrature weight per node for arc length, `2 pi / n`.
    pub fn weight(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    pub fn sample<F>(&self, f: F) -> Vec<C64>
    where
        F: Fn(f64) -> C64 + Sync + Send,
    {
        let grid = *self;
        exec::map(self.n, move |k| f(grid.angle(k)))
    }
}

/// Mean of the samples, i.e. the normalized arc-length integral up to aliasing.
pub fn circle_mean(samples: &[C64]) -> Result<C64> {
    if samples.is_empty() {
        return Err(Error::domain("circle_mean of an empty sample vector"));
    }
    Ok(exec::sum(samples.len(), |k| samples[k]) / samples.len() as f64)
}

/// Composite midpoint rule on `[a, b]` with `n` panels.
pub fn midpoint<F>(f: &F, a: f64, b: f64, n: usize) -> C64
where
    F: Fn(f64) -> C64 + Sync,
{
    if n == 0 {
        return ZERO;
    }
    let h = (b - a) / n as f64;
    exec::sum(n, |k| f(a + (k as f64 + 0.5) * h)) * h
}

/// Composite midpoint over the window `[center - half_width, center + half_width]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineQuadrature {
    pub center: f64,
    pub half_width: f64,
    pub panels: usize,
}

/// Panel cap for automatically fitted windows (about 1.3e8 evaluations).
pub const MAX_PANELS: usize = 1 << 27;
const MAX_HALF_WIDTH: f64 = 1e9;

impl LineQuadrature {
    pub fn new(half_width: f64, panels: usize) -> Result<Self> {
        Self::centered(0.0, half_width, panels)
    }

    pub fn centered(center: f64, half_width: f64, panels: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::domain("line quadrature needs a positive finite half width"));
        }
        if panels < 2 || !panels.is_multiple_of(2) {
            return Err(Error::domain("line quadrature needs an even panel count >= 2"));
        }
        if !center.is_finite() {
            return Err(Error::domain("line quadrature center must be finite"));
        }
        Ok(LineQuadrature {
            center,
            half_width,
            panels,
        })
    }

    /// Smallest power-of-two window (from `half_width = 8`) whose tail bound is
    /// within `tail_budget`, with panels no wider than `step`.
    pub fn fit<B>(center: f64, step: f64, tail_bound: B, tail_budget: f64) -> Result<Self>
    where
        B: Fn(f64) -> f64,
    {
        if !(step > 0.0) {
            return Err(Error::domain("panel width must be positive"));
        }
        let mut half_width = 8.0;
        while tail_bound(half_width) > tail_budget {
            half_width *= 2.0;
            if half_width > MAX_HALF_WIDTH {
                return Err(Error::TruncationInsufficient {
                    tail: tail_bound(half_width / 2.0),
                    tol: tail_budget,
                });
            }
        }
        let mut panels = (2.0 * half_width / step).ceil() as usize;
        panels += panels % 2;
        if panels > MAX_PANELS {
            return Err(Error::TruncationInsufficient {
                tail: tail_bound(half_width),
                tol: tail_budget,
            });
        }
        LineQuadrature::centered(center, half_width, panels.max(2))
    }

    pub fn lower(&self) -> f64 {
        self.center - self.half_width
    }

    pub fn upper(&self) -> f64 {
        self.center + self.half_width
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / self.panels as f64
    }
}

/// Result of a truncated line integral together with its error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineIntegral {
    pub value: C64,
    /// `|I(n) - I(n/2)|`, the panel-refinement delta.
    pub refinement_delta: f64,
    /// Certified bound on the discarded tails.
    pub tail: f64,
}

impl LineIntegral {
    pub fn error_budget(&self) -> f64 {
        self.refinement_delta + self.tail
    }
}

/// Truncated composite-midpoint integral of `f` over the real line.
///
/// `tail_bound(T)` must bound the contribution of `|x - center| > T`. The call
/// refuses when that bound exceeds `tol.quad_eps`.
pub fn line_integral<F, B>(f: F, q: &LineQuadrature, tail_bound: B, tol: &Tolerances) -> Result<LineIntegral>
where
    F: Fn(f64) -> C64 + Sync,
    B: Fn(f64) -> f64,
{
    let tail = tail_bound(q.half_width);
    if !(tail <= tol.quad_eps) {
        return Err(Error::TruncationInsufficient {
            tail,
            tol: tol.quad_eps,
        });
    }
    let fine = midpoint(&f, q.lower(), q.upper(), q.panels);
    let coarse = midpoint(&f, q.lower(), q.upper(), q.panels / 2);
    Ok(LineIntegral {
        value: fine,
        refinement_delta: (fine - coarse).norm(),
        tail,
    })
}

/// Like [`line_integral`], then halves the panel width until the refinement
/// delta is within `tol.quad_eps / 2` or the panel cap is reached.
pub fn line_integral_refined<F, B>(f: F, q: &LineQuadrature, tail_bound: B, tol: &Tolerances) -> Result<LineIntegral>
where
    F: Fn(f64) -> C64 + Sync,
    B: Fn(f64) -> f64,
{
    let mut r = line_integral(&f, q, &tail_bound, tol)?;
    let mut panels = q.panels;
    while r.refinement_delta > tol.quad_eps / 2.0 && panels * 2 <= MAX_PANELS {
        panels *= 2;
        let fine = midpoint(&f, q.lower(), q.upper(), panels);
        r = LineIntegral {
            value: fine,
            refinement_delta: (fine - r.value).norm(),
            tail: r.tail,
        };
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances_are_ordered() {
        assert!(Tolerances::new(1e-6, 1e-12).is_err());
        assert!(Tolerances::new(0.0, 1e-6).is_err());
        assert!(Tolerances::new(1e-12, 1.0).is_err());
        let t = Tolerances::default();
        assert!(Tolerances::new(t.exact_eps, t.quad_eps).is_ok());
    }

    #[test]
    fn grid_nodes_increase_in_unit_interval() {
        let g = CircleGrid::new(16).unwrap();
        let a = g.angles();
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(a[0], 0.0);
        assert!(*a.last().unwrap() < 2.0 * PI);
        assert!(CircleGrid::new(0).is_err());
        // mean of samples == (1/2pi) * sum f * weight
        let s = g.sample(|t| C64::new(t.sin() + 2.0, 0.0));
        let weighted: C64 = s.iter().map(|v| v * g.weight()).sum::<C64>() / (2.0 * PI);
        assert!((weighted - circle_mean(&s).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn circle_mean_basics() {
        assert!(circle_mean(&[]).is_err());
        for n in [1, 5, 64] {
            let g = CircleGrid::new(n).unwrap();
            assert_eq!(circle_mean(&g.sample(|_| ONE)).unwrap(), ONE);
        }
        let g = CircleGrid::new(16).unwrap();
        assert!(circle_mean(&g.sample(cis)).unwrap().norm() < 1e-12);
    }

    #[test]
    fn modes_below_nyquist_average_to_zero() {
        let n = 24;
        let g = CircleGrid::new(n).unwrap();
        for j in 1..n as i64 {
            for s in [-1, 1] {
                let m = circle_mean(&g.sample(move |t| cis((s * j) as f64 * t))).unwrap();
                assert!(m.norm() < 1e-12, "j={j} m={m}");
            }
        }
    }

    #[test]
    fn expcos_mean_converges_to_fine_grid() {
        // finest-grid oracle at n = 4096 (equals I_0(1) to double precision)
        let oracle = 1.2660658777520082;
        let f = |t: f64| C64::new(t.cos().exp(), 0.0);
        let v = circle_mean(&CircleGrid::new(256).unwrap().sample(f)).unwrap();
        assert!((v.re - oracle).abs() < 1e-6);
        let fine = circle_mean(&CircleGrid::new(4096).unwrap().sample(f)).unwrap();
        assert!((fine.re - oracle).abs() < 1e-14);
        // refinement never increases the error above rounding level
        let mut prev = f64::INFINITY;
        for n in [2, 4, 8, 16, 32, 64, 128, 256] {
            let err = (circle_mean(&CircleGrid::new(n).unwrap().sample(f)).unwrap().re - oracle).abs();
            assert!(err <= prev.max(1e-15), "n={n} err={err} prev={prev}");
            prev = err;
        }
    }

    fn exp_tail(t: f64) -> f64 {
        2.0 * (-t).exp()
    }

    #[test]
    fn laplace_density_integrates_to_two() {
        let tol = Tolerances::default();
        let q = LineQuadrature::new(40.0, 1 << 16).unwrap();
        let r = line_integral(|x: f64| C64::new((-x.abs()).exp(), 0.0), &q, exp_tail, &tol).unwrap();
        assert!((r.value.re - 2.0).abs() < tol.quad_eps, "{r:?}");
        assert!(r.error_budget() < tol.quad_eps);
    }

    #[test]
    fn zero_integrand() {
        let q = LineQuadrature::new(10.0, 100).unwrap();
        let r = line_integral(|_| ZERO, &q, |_| 0.0, &Tolerances::default()).unwrap();
        assert_eq!(r.value, ZERO);
    }

    #[test]
    fn damped_cosine_matches_closed_form() {
        // transform of e^{-|x|} at xi = 1 is 2r/(r^2+xi^2) = 1
        let (r, xi) = (1.0f64, 1.0f64);
        let oracle = 2.0 * r / (r * r + xi * xi);
        let q = LineQuadrature::new(40.0, 1 << 16).unwrap();
        let v = line_integral(
            |x: f64| C64::new((-x.abs()).exp() * x.cos(), 0.0),
            &q,
            exp_tail,
            &Tolerances::default(),
        )
        .unwrap();
        assert!((v.value.re - oracle).abs() < 1e-6);
    }

    #[test]
    fn refuses_short_windows() {
        let q = LineQuadrature::new(5.0, 100).unwrap();
        let err = line_integral(|_| ONE, &q, exp_tail, &Tolerances::default()).unwrap_err();
        assert!(matches!(err, Error::TruncationInsufficient { .. }));
        assert!(err.to_string().contains("truncation insufficient"));
    }

    #[test]
    fn even_integrand_is_twice_the_half_line() {
        let f = |x: f64| C64::new((-x * x).exp() * (1.0 + x.cos()), 0.0);
        let (t, n) = (12.0, 4096);
        let full = midpoint(&f, -t, t, n);
        let half = midpoint(&f, 0.0, t, n / 2);
        assert!((full - half * 2.0).norm() < 1e-12);
    }

    #[test]
    fn fit_grows_window_until_tail_fits() {
        let q = LineQuadrature::fit(0.0, 0.1, exp_tail, 1e-9).unwrap();
        assert!(exp_tail(q.half_width) <= 1e-9);
        assert!(q.step() <= 0.1 + 1e-15);
        assert!(LineQuadrature::fit(0.0, 0.1, |_| 1.0, 1e-9).is_err());
    }
}
