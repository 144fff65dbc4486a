//! Extrapolating a limiting average degree from a finite series.
//!
//! Each generation `n` gives a point `(d_n - d_{n-1}, d_n)`. A straight line
//! through these points meets `x = 0`, where successive degrees stop
//! changing, at its intercept.

use std::str::FromStr;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RegressionError {
    #[error("need at least 2 usable generations, got {0}")]
    TooFewPoints(usize),
    #[error("all x values are equal; the fit is singular")]
    Singular,
    #[error("generation {0} or its predecessor is missing from the series")]
    MissingGeneration(u32),
    #[error("generations must be strictly increasing (saw {0} after {1})")]
    Unordered(u32, u32),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Average degree per generation.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeSeries {
    entries: Vec<(u32, f64)>,
}

impl DegreeSeries {
    pub fn new(entries: Vec<(u32, f64)>) -> Result<Self, RegressionError> {
        for w in entries.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(RegressionError::Unordered(w[1].0, w[0].0));
            }
        }
        Ok(DegreeSeries { entries })
    }

    /// `d_1, d_2, …` for consecutive generations starting at 1.
    pub fn from_values(values: &[f64]) -> Self {
        DegreeSeries {
            entries: values
                .iter()
                .enumerate()
                .map(|(i, &d)| (i as u32 + 1, d))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn get(&self, generation: u32) -> Option<f64> {
        self.entries.iter().find(|e| e.0 == generation).map(|e| e.1)
    }

    /// `(d_n - d_{n-1}, d_n)` for the listed generations, or for every
    /// generation from `start` on when `include` is `None`.
    pub fn difference_pairs(
        &self,
        start: u32,
        include: Option<&[u32]>,
    ) -> Result<Vec<(f64, f64)>, RegressionError> {
        let gens: Vec<u32> = match include {
            Some(list) => list.to_vec(),
            None => self
                .entries
                .iter()
                .map(|e| e.0)
                .filter(|&g| g >= start)
                .collect(),
        };
        let mut pairs = Vec::with_capacity(gens.len());
        for g in gens {
            let cur = self.get(g).ok_or(RegressionError::MissingGeneration(g))?;
            let prev = g
                .checked_sub(1)
                .and_then(|p| self.get(p))
                .ok_or(RegressionError::MissingGeneration(g))?;
            pairs.push((cur - prev, cur));
        }
        if pairs.len() < 2 {
            return Err(RegressionError::TooFewPoints(pairs.len()));
        }
        Ok(pairs)
    }
}

/// Two whitespace- or comma-separated columns, generation and average
/// degree, after one header line.
impl FromStr for DegreeSeries {
    type Err = RegressionError;

    fn from_str(text: &str) -> Result<Self, RegressionError> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate().skip(1) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let err = |message: String| RegressionError::Parse {
                line: i + 1,
                message,
            };
            if fields.len() != 2 {
                return Err(err(format!("expected 2 columns, found {}", fields.len())));
            }
            let g = fields[0]
                .parse::<u32>()
                .map_err(|e| err(format!("generation: {e}")))?;
            let d = fields[1]
                .parse::<f64>()
                .map_err(|e| err(format!("degree: {e}")))?;
            if !d.is_finite() {
                return Err(err("degree is not finite".into()));
            }
            entries.push((g, d));
        }
        DegreeSeries::new(entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub residual_sum_squares: f64,
    pub point_count: usize,
}

impl LinearFit {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    /// The extrapolated limit: the line's value at zero difference.
    pub fn limit(&self) -> f64 {
        self.intercept
    }
}

/// Ordinary least squares `y = a x + b`.
pub fn fit_ols(pairs: &[(f64, f64)]) -> Result<LinearFit, RegressionError> {
    let n = pairs.len();
    if n < 2 {
        return Err(RegressionError::TooFewPoints(n));
    }
    let nf = n as f64;
    let mx = pairs.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = pairs.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxx: f64 = pairs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pairs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 || sxx <= f64::EPSILON * pairs.iter().map(|p| p.0 * p.0).sum::<f64>() {
        return Err(RegressionError::Singular);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual_sum_squares = pairs
        .iter()
        .map(|&(x, y)| (y - slope * x - intercept).powi(2))
        .sum();
    Ok(LinearFit {
        slope,
        intercept,
        residual_sum_squares,
        point_count: n,
    })
}

pub fn limit_estimate(fit: &LinearFit) -> f64 {
    fit.limit()
}

/// Rounds half away from zero to `decimals` places.
pub fn round_to(value: f64, decimals: i32) -> f64 {
    let s = 10f64.powi(decimals);
    (value * s).round() / s
}

/// Rounds up to `decimals` places; the convention of the published summary
/// of limits. A small slack keeps exact decimals from jumping a step.
pub fn round_up(value: f64, decimals: i32) -> f64 {
    let s = 10f64.powi(decimals);
    ((value * s) - 1e-9).ceil() / s
}
