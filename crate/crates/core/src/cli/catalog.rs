//! Named function catalog for the command line.

use std::path::Path;

use crate::almost_periodic::TrigPolynomial;
use crate::circle::SpectralSeries;
use crate::error::{Error, Result};
use crate::line::LineFunction;
use crate::numerics::{cis, C64};

/// Circle functions: `cos`, `sin`, `expcos`, `const:<c>`, `mode:<j>`,
/// `trig:<file>` (integer frequencies only).
#[derive(Debug, Clone)]
pub enum CircleSpec {
    Cos,
    Sin,
    ExpCos,
    Const(f64),
    Mode(i64),
    Trig(SpectralSeries),
}

impl CircleSpec {
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, arg) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        let bad = || Error::Parse(format!("unknown circle function spec {spec:?}"));
        match (name, arg) {
            ("cos", None) => Ok(CircleSpec::Cos),
            ("sin", None) => Ok(CircleSpec::Sin),
            ("expcos", None) => Ok(CircleSpec::ExpCos),
            ("const", Some(a)) => a.parse().map(CircleSpec::Const).map_err(|_| bad()),
            ("mode", Some(a)) => a.parse().map(CircleSpec::Mode).map_err(|_| bad()),
            ("trig", Some(path)) => {
                let poly = load_trig(Path::new(path))?;
                let mut series = SpectralSeries::new();
                for (t, c) in poly.terms() {
                    if t.fract() != 0.0 {
                        return Err(Error::Parse(format!("circle polynomial frequency {t} is not an integer")));
                    }
                    series.add(*t as i64, *c);
                }
                Ok(CircleSpec::Trig(series))
            }
            _ => Err(bad()),
        }
    }

    pub fn eval(&self, theta: f64) -> C64 {
        match self {
            CircleSpec::Cos => C64::new(theta.cos(), 0.0),
            CircleSpec::Sin => C64::new(theta.sin(), 0.0),
            CircleSpec::ExpCos => C64::new(theta.cos().exp(), 0.0),
            CircleSpec::Const(c) => C64::new(*c, 0.0),
            CircleSpec::Mode(j) => cis(*j as f64 * theta),
            CircleSpec::Trig(s) => s.evaluate(theta),
        }
    }
}

/// Line functions: `a:<r>`, `b:<r>`, `c:<r>`, `gauss`.
pub fn parse_line_function(spec: &str) -> Result<LineFunction> {
    let bad = || Error::Parse(format!("unknown line function spec {spec:?}"));
    if spec == "gauss" {
        return gaussian();
    }
    let (name, arg) = spec.split_once(':').ok_or_else(bad)?;
    let r: f64 = arg.parse().map_err(|_| bad())?;
    match name {
        "a" => LineFunction::left_exp(r),
        "b" => LineFunction::right_exp(r),
        "c" => LineFunction::two_sided_exp(r),
        _ => Err(bad()),
    }
}

/// `e^{-x^2}` with the tail certificate `e^{-T^2} / T` for `T >= 1`.
pub fn gaussian() -> Result<LineFunction> {
    LineFunction::callable(
        |x| C64::new((-x * x).exp(), 0.0),
        1.0,
        |t| if t < 1.0 { std::f64::consts::PI.sqrt() } else { (-t * t).exp() / t },
    )
}

/// Closed-form transform for catalog line functions.
pub fn line_transform_exact(spec: &str, f: &LineFunction, xi: f64) -> Option<C64> {
    if spec == "gauss" {
        return Some(C64::new(std::f64::consts::PI.sqrt() * (-xi * xi / 4.0).exp(), 0.0));
    }
    f.closed_form_transform(xi)
}

pub fn load_trig(path: &Path) -> Result<TrigPolynomial> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    TrigPolynomial::parse(&text)
}
