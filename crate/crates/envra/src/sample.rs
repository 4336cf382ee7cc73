//! Grouped observations and evaluation grids.

use crate::error::{Error, Result};

/// Pooled observations with group labels; the object permuted under the null
/// hypothesis of equal distributions.
///
/// Group ids are `0..group_count`. Invariants enforced at construction:
/// values and labels have equal positive length, every value is finite, there
/// are at least two groups and every group has at least one observation.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupedSample {
    values: Vec<f64>,
    labels: Vec<usize>,
    group_count: usize,
}

impl GroupedSample {
    pub fn new(values: Vec<f64>, labels: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.len() != labels.len() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                labels: labels.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        let group_count = labels.iter().copied().max().map_or(0, |m| m + 1);
        if group_count < 2 {
            return Err(Error::TooFewGroups {
                got: group_count,
                needed: 2,
            });
        }
        let mut sizes = vec![0usize; group_count];
        for &label in &labels {
            sizes[label] += 1;
        }
        if let Some(group) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyGroup { group });
        }
        Ok(Self {
            values,
            labels,
            group_count,
        })
    }

    /// Build a two-group sample from two value vectors.
    pub fn from_two(x: &[f64], y: &[f64]) -> Result<Self> {
        let mut values = Vec::with_capacity(x.len() + y.len());
        values.extend_from_slice(x);
        values.extend_from_slice(y);
        let mut labels = vec![0usize; x.len()];
        labels.extend(std::iter::repeat(1).take(y.len()));
        Self::new(values, labels)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn group_count(&self) -> usize {
        self.group_count
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.group_count];
        for &label in &self.labels {
            sizes[label] += 1;
        }
        sizes
    }

    /// Values of one group, in input order.
    pub fn group_values(&self, group: usize) -> Result<Vec<f64>> {
        if group >= self.group_count {
            return Err(Error::UnknownGroup {
                group,
                count: self.group_count,
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&self.labels)
            .filter(|(_, &l)| l == group)
            .map(|(&v, _)| v)
            .collect())
    }

    /// Replace the pooled values, keeping the label layout. The replacement
    /// must be a permutation of the original pool for the result to be a
    /// valid relabelling; callers in the permutation engine guarantee this.
    pub(crate) fn with_values(&self, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            values,
            labels: self.labels.clone(),
            group_count: self.group_count,
        }
    }

    /// Same pooled values under a different label vector.
    pub(crate) fn with_labels(&self, labels: Vec<usize>) -> Self {
        debug_assert_eq!(labels.len(), self.values.len());
        Self {
            values: self.values.clone(),
            labels,
            group_count: self.group_count,
        }
    }

    pub fn pooled_min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn pooled_max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Discretization points for statistics evaluated on the observation scale.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalGrid {
    points: Vec<f64>,
}

impl EvalGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidGrid {
                reason: format!("need at least 2 points, got {}", points.len()),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidGrid {
                reason: "grid contains a non-finite point".into(),
            });
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid {
                reason: "grid points must be strictly increasing".into(),
            });
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Quantile levels for the quantile regression process, all inside (0, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct TauGrid {
    taus: Vec<f64>,
}

impl TauGrid {
    pub fn new(taus: Vec<f64>) -> Result<Self> {
        if taus.len() < 2 {
            return Err(Error::InvalidGrid {
                reason: format!("need at least 2 quantile levels, got {}", taus.len()),
            });
        }
        if taus.iter().any(|t| !(t.is_finite() && *t > 0.0 && *t < 1.0)) {
            return Err(Error::InvalidGrid {
                reason: "quantile levels must lie strictly inside (0, 1)".into(),
            });
        }
        if taus.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid {
                reason: "quantile levels must be strictly increasing".into(),
            });
        }
        Ok(Self { taus })
    }

    /// `d` equally spaced levels covering `[lo, hi]`.
    pub fn linspace(lo: f64, hi: f64, d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidGrid {
                reason: format!("need at least 2 quantile levels, got {d}"),
            });
        }
        let step = (hi - lo) / (d - 1) as f64;
        let mut taus: Vec<f64> = (0..d).map(|k| lo + k as f64 * step).collect();
        taus[d - 1] = hi;
        Self::new(taus)
    }

    pub fn taus(&self) -> &[f64] {
        &self.taus
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }
}

/// Kernel family for density estimation. Only the Gaussian kernel is
/// implemented; it is the standard companion of Silverman's bandwidth rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Gaussian,
}

/// Per-group bandwidths for the density statistic.
#[derive(Debug, Clone, PartialEq)]
pub struct KdeConfig {
    bandwidths: Vec<f64>,
    kernel: Kernel,
}

impl KdeConfig {
    pub fn new(bandwidths: Vec<f64>, kernel: Kernel) -> Result<Self> {
        if bandwidths.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&b) = bandwidths.iter().find(|b| !(b.is_finite() && **b > 0.0)) {
            return Err(Error::InvalidBandwidth { value: b });
        }
        Ok(Self { bandwidths, kernel })
    }

    pub fn bandwidths(&self) -> &[f64] {
        &self.bandwidths
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }
}
