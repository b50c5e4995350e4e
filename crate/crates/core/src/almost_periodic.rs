//! Trigonometric polynomials `f(x) = sum_t c_t e^{i x t}` with real
//! frequencies, the computable part of the almost periodic functions.
//!
//! Frequencies closer than [`MERGE_TOL`] are merged and values within
//! `MERGE_TOL` of zero snap to exactly zero.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exec;
use crate::line::LineFunction;
use crate::numerics::{cis, C64, I, ONE, ZERO};

pub const MERGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct TrigPolynomial {
    /// Sorted by frequency, no duplicates, no zero coefficients.
    terms: Vec<(f64, C64)>,
}

impl TrigPolynomial {
    pub fn new<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, C64)>,
    {
        let mut raw: Vec<(f64, C64)> = terms.into_iter().collect();
        if raw.iter().any(|(t, c)| !t.is_finite() || !c.is_finite()) {
            return Err(Error::domain("trigonometric polynomial needs finite frequencies and coefficients"));
        }
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut terms: Vec<(f64, C64)> = Vec::with_capacity(raw.len());
        for (t, c) in raw {
            match terms.last_mut() {
                Some(last) if (t - last.0).abs() <= MERGE_TOL => last.1 += c,
                _ => terms.push((t, c)),
            }
        }
        for term in terms.iter_mut() {
            if term.0.abs() <= MERGE_TOL {
                term.0 = 0.0;
            }
        }
        terms.retain(|(_, c)| *c != ZERO);
        Ok(TrigPolynomial { terms })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `e_t(x) = e^{i x t}`.
    pub fn exp(t: f64) -> Self {
        Self::term(t, ONE)
    }

    pub fn term(t: f64, c: C64) -> Self {
        Self::new([(t, c)]).expect("finite term")
    }

    pub fn terms(&self) -> &[(f64, C64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: f64) -> C64 {
        self.terms
            .iter()
            .find(|(s, _)| (s - t).abs() <= MERGE_TOL)
            .map_or(ZERO, |(_, c)| *c)
    }

    pub fn min_frequency(&self) -> Option<f64> {
        self.terms.first().map(|(t, _)| *t)
    }

    /// `sum |c_t|`, which bounds the sup norm.
    pub fn coefficient_l1(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm()).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.terms.iter().chain(&other.terms).copied()).expect("finite terms")
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.terms.iter().map(|(t, c)| (*t, c * s))).expect("finite terms")
    }

    /// `conj(f)`, with coefficient `conj(c_t)` at frequency `-t`.
    pub fn conj(&self) -> Self {
        Self::new(self.terms.iter().map(|(t, c)| (-t, c.conj()))).expect("finite terms")
    }

    /// `f_b(x) = f(x - b)`.
    pub fn translate(&self, b: f64) -> Self {
        Self::new(self.terms.iter().map(|(t, c)| (*t, c * cis(-b * t)))).expect("finite terms")
    }

    /// Bounded exponential-sum view for line quadrature.
    pub fn to_line_function(&self) -> LineFunction {
        LineFunction::Exponentials(self.terms.clone())
    }

    /// Parses lines `t, re, im`; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("line {}: expected `t, re, im`", lineno + 1)));
            }
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad number {s:?}", lineno + 1)))
            };
            terms.push((num(fields[0])?, C64::new(num(fields[1])?, num(fields[2])?)));
        }
        Self::new(terms)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (t, c) in &self.terms {
            let _ = writeln!(out, "{t:.16e}, {:.16e}, {:.16e}", c.re, c.im);
        }
        out
    }
}

pub fn evaluate(f: &TrigPolynomial, x: f64) -> C64 {
    f.terms.iter().map(|(t, c)| c * cis(x * t)).sum()
}

/// Bohr mean: the coefficient at frequency zero.
pub fn mean_exact(f: &TrigPolynomial) -> C64 {
    f.coefficient(0.0)
}

/// Average of `f` over `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalAverage {
    pub a: f64,
    pub b: f64,
    pub value: C64,
    /// `sum_{t != 0} 2 |c_t| / (|t| (b - a))`, bounding the distance to the mean.
    pub rate_bound: f64,
}

/// Closed-form interval average
/// `c_0 + sum_{t != 0} c_t (e^{i b t} - e^{i a t}) / (i t (b - a))`.
pub fn mean_interval(f: &TrigPolynomial, a: f64, b: f64) -> Result<IntervalAverage> {
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!("interval [{a}, {b}] must have b > a")));
    }
    let len = b - a;
    let mut value = ZERO;
    let mut rate_bound = 0.0;
    for (t, c) in &f.terms {
        if *t == 0.0 {
            value += c;
        } else {
            value += c * (cis(b * t) - cis(a * t)) / (I * (t * len));
            rate_bound += 2.0 * c.norm() / (t.abs() * len);
        }
    }
    Ok(IntervalAverage { a, b, value, rate_bound })
}

/// `<f, g> = Lambda(f conj(g)) = sum_t c^f_t conj(c^g_t)`.
pub fn inner_product(f: &TrigPolynomial, g: &TrigPolynomial) -> C64 {
    let (mut i, mut j) = (0, 0);
    let mut acc = ZERO;
    while i < f.terms.len() && j < g.terms.len() {
        let (s, a) = f.terms[i];
        let (t, b) = g.terms[j];
        if (s - t).abs() <= MERGE_TOL {
            acc += a * b.conj();
            i += 1;
            j += 1;
        } else if s < t {
            i += 1;
        } else {
            j += 1;
        }
    }
    acc
}

/// Product of two polynomials: frequencies add, coefficients convolve.
pub fn multiply(f: &TrigPolynomial, g: &TrigPolynomial) -> TrigPolynomial {
    let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
    for (s, a) in &f.terms {
        for (t, b) in &g.terms {
            terms.push((s + t, a * b));
        }
    }
    TrigPolynomial::new(terms).expect("finite terms")
}

/// Half-plane Poisson average `sum_t c_t e^{i x t} e^{-y |t|}`.
pub fn halfplane_average(f: &TrigPolynomial, x: f64, y: f64) -> Result<C64> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("y = {y} must be positive")));
    }
    Ok(f.terms.iter().map(|(t, c)| c * cis(x * t) * (-y * t.abs()).exp()).sum())
}

/// True iff no negative frequency is present, i.e. `f` is the boundary
/// value of a bounded holomorphic function on the upper half-plane.
pub fn is_boundary_holomorphic(f: &TrigPolynomial) -> bool {
    f.min_frequency().is_none_or(|t| t >= 0.0)
}

/// `(Lambda(f g), Lambda(f) Lambda(g))` for nonnegative spectra.
pub fn holomorphic_mean_product_check(f: &TrigPolynomial, g: &TrigPolynomial) -> Result<(C64, C64)> {
    if !is_boundary_holomorphic(f) || !is_boundary_holomorphic(g) {
        return Err(Error::domain("mean multiplicativity needs nonnegative spectra"));
    }
    Ok((mean_exact(&multiply(f, g)), mean_exact(f) * mean_exact(g)))
}

/// Shifts `tau` on the grid `tau_step, 2 tau_step, ... <= tau_max` with
/// `sup_x |f(x + tau) - f(x)| <= eps`, the supremum estimated on a dense
/// sample of one window. A diagnostic; no completeness is claimed.
pub fn almost_period_search(f: &TrigPolynomial, eps: f64, tau_max: f64, tau_step: f64) -> Result<Vec<f64>> {
    if !(eps > 0.0) {
        return Err(Error::domain("eps must be positive"));
    }
    if !(tau_step > 0.0 && tau_step < tau_max && tau_max.is_finite()) {
        return Err(Error::domain("need 0 < tau_step < tau_max"));
    }
    // sample window: the longest period present (capped), 32 points per shortest one
    let nonzero: Vec<f64> = f.terms.iter().map(|(t, _)| t.abs()).filter(|t| *t > 0.0).collect();
    let (window, spacing) = if nonzero.is_empty() {
        (1.0, 1.0)
    } else {
        let lo = nonzero.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = nonzero.iter().cloned().fold(0.0, f64::max);
        ((2.0 * PI / lo).min(200.0), 2.0 * PI / hi / 32.0)
    };
    let samples: Vec<f64> = (0..((window / spacing).ceil() as usize).max(1)).map(|k| k as f64 * spacing).collect();
    let count = (tau_max / tau_step).floor() as usize;
    let hits = exec::map(count, |k| {
        let tau = (k + 1) as f64 * tau_step;
        let sup = samples
            .iter()
            .map(|&x| (evaluate(f, x + tau) - evaluate(f, x)).norm())
            .fold(0.0, f64::max);
        (sup <= eps).then_some(tau)
    });
    Ok(hits.into_iter().flatten().collect())
}
