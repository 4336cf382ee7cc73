//! Test-statistic vectors for grouped data.
//!
//! Builds the discretized statistics compared by the envelope engine: ECDF
//! differences, QQ vectors, per-group ECDFs and kernel density estimates, and
//! the quantile regression process. All constructors are pure functions; for
//! the permutation loop a [`PreparedSample`] caches the per-group sorted
//! values so the per-permutation cost is one sort per group.

use crate::error::{Error, Result};
use crate::sample::{EvalGrid, GroupedSample, KdeConfig, Kernel, TauGrid};

const INV_SQRT_2PI: f64 = 0.3989422804014327;
/// Kernel contributions beyond this many bandwidths are below 1e-14 and are
/// skipped.
const KERNEL_CUTOFF: f64 = 8.0;

/// Which statistic a block of a [`StatVector`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// ECDF difference of two groups.
    Diff,
    /// Quantile-quantile vector of a group pair.
    Qq,
    /// ECDF of one group.
    Ecdf,
    /// Kernel density estimate of one group.
    Den,
    /// Quantile regression coefficient path of one group against a reference.
    Qr,
    /// Internal: per-statistic measure ranks in the combined test.
    MeasureRank,
}

impl BlockKind {
    pub fn label(self) -> &'static str {
        match self {
            BlockKind::Diff => "diff",
            BlockKind::Qq => "qq",
            BlockKind::Ecdf => "ecdf",
            BlockKind::Den => "den",
            BlockKind::Qr => "qr",
            BlockKind::MeasureRank => "measure-rank",
        }
    }

    /// Axis the block is discretized over: observation values or quantile
    /// levels.
    pub fn tau_axis(self) -> bool {
        matches!(self, BlockKind::Qr)
    }
}

/// Identifies the group or group pair a block belongs to (0-based ids).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockId {
    Group(usize),
    Pair(usize, usize),
}

/// One labelled segment of a statistic vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StatBlock {
    pub kind: BlockKind,
    pub id: BlockId,
    pub values: Vec<f64>,
}

/// A labelled concatenation of per-group or per-pair statistic blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct StatVector {
    blocks: Vec<StatBlock>,
}

impl StatVector {
    pub fn new(blocks: Vec<StatBlock>) -> Self {
        Self { blocks }
    }

    pub fn blocks(&self) -> &[StatBlock] {
        &self.blocks
    }

    pub fn total_length(&self) -> usize {
        self.blocks.iter().map(|b| b.values.len()).sum()
    }

    /// (kind, id, length) triple per block; two vectors are comparable in one
    /// test exactly when these agree.
    pub fn structure(&self) -> Vec<(BlockKind, BlockId, usize)> {
        self.blocks
            .iter()
            .map(|b| (b.kind, b.id, b.values.len()))
            .collect()
    }

    /// All block values concatenated in block order.
    pub fn concatenated(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_length());
        for block in &self.blocks {
            out.extend_from_slice(&block.values);
        }
        out
    }
}

/// Equally spaced grid from the pooled minimum to the pooled maximum.
pub fn make_grid(sample: &GroupedSample, d: usize) -> Result<EvalGrid> {
    if d < 2 {
        return Err(Error::InvalidGrid {
            reason: format!("need at least 2 points, got {d}"),
        });
    }
    let lo = sample.pooled_min();
    let hi = sample.pooled_max();
    if lo == hi {
        return Err(Error::DegenerateRange { value: lo });
    }
    let step = (hi - lo) / (d - 1) as f64;
    let mut points: Vec<f64> = (0..d).map(|k| lo + k as f64 * step).collect();
    points[d - 1] = hi;
    EvalGrid::new(points)
}

/// Empirical cumulative distribution function: the fraction of values `<= x`.
pub fn ecdf_eval(values: &[f64], x: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let count = values.iter().filter(|v| **v <= x).count();
    Ok(count as f64 / values.len() as f64)
}

/// Smallest data value `y` with `ecdf(y) >= tau` (left-continuous generalized
/// inverse). Always returns a data point; `tau` must lie in (0, 1].
pub fn quantile_eval(values: &[f64], tau: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(tau.is_finite() && tau > 0.0 && tau <= 1.0) {
        return Err(Error::InvalidTau { tau });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
    Ok(quantile_sorted(&sorted, tau))
}

/// `quantile_eval` over values that are already sorted ascending.
#[inline]
fn quantile_sorted(sorted: &[f64], tau: f64) -> f64 {
    let m = sorted.len();
    // Smallest k in 1..=m with k/m >= tau; the comparison is done exactly the
    // way ecdf_eval computes its ratio, so the generalized-inverse identities
    // hold under floating point as well.
    let mut lo = 1usize;
    let mut hi = m;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if mid as f64 / m as f64 >= tau {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    sorted[lo - 1]
}

#[inline]
fn ecdf_sorted(sorted: &[f64], x: f64) -> f64 {
    let count = sorted.partition_point(|v| *v <= x);
    count as f64 / sorted.len() as f64
}

/// Silverman's rule-of-thumb bandwidth:
/// `0.9 * min(sd, IQR / 1.34) * m^(-1/5)`, falling back to the standard
/// deviation alone when the interquartile range is zero. The sample standard
/// deviation uses the `m - 1` denominator; quartiles come from the same
/// generalized inverse as [`quantile_eval`].
pub fn silverman_bandwidth(values: &[f64]) -> Result<f64> {
    let m = values.len();
    if m < 2 {
        return Err(Error::EmptyInput);
    }
    let mean = values.iter().sum::<f64>() / m as f64;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    let sd = (ss / (m - 1) as f64).sqrt();
    if sd == 0.0 {
        return Err(Error::ConstantSample);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
    let iqr = quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25);
    let spread = if iqr == 0.0 { sd } else { sd.min(iqr / 1.34) };
    Ok(0.9 * spread * (m as f64).powf(-0.2))
}

/// Gaussian kernel density estimate evaluated on a grid.
pub fn kde_eval(values: &[f64], bandwidth: f64, grid: &EvalGrid) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(bandwidth.is_finite() && bandwidth > 0.0) {
        return Err(Error::InvalidBandwidth { value: bandwidth });
    }
    let scale = INV_SQRT_2PI / (values.len() as f64 * bandwidth);
    Ok(grid
        .points()
        .iter()
        .map(|&x| {
            let mut acc = 0.0;
            for &v in values {
                let u = (x - v) / bandwidth;
                if u.abs() <= KERNEL_CUTOFF {
                    acc += (-0.5 * u * u).exp();
                }
            }
            acc * scale
        })
        .collect())
}

/// A sample with per-group values pre-sorted; the working form used by the
/// statistic constructors.
#[derive(Debug, Clone)]
pub struct PreparedSample {
    sorted_groups: Vec<Vec<f64>>,
}

impl PreparedSample {
    pub fn from_sample(sample: &GroupedSample) -> Self {
        let mut groups = vec![Vec::new(); sample.group_count()];
        for (&v, &l) in sample.values().iter().zip(sample.labels()) {
            groups[l].push(v);
        }
        for g in &mut groups {
            g.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
        }
        Self {
            sorted_groups: groups,
        }
    }

    pub fn group_count(&self) -> usize {
        self.sorted_groups.len()
    }

    pub fn sorted_group(&self, group: usize) -> &[f64] {
        &self.sorted_groups[group]
    }

    /// ECDF difference of the two groups of a two-group sample.
    pub fn stat_diff(&self, grid: &EvalGrid) -> Result<StatVector> {
        if self.group_count() != 2 {
            return Err(Error::StatisticArity {
                statistic: "diff",
                needed: 2,
                got: self.group_count(),
            });
        }
        let g0 = self.sorted_group(0);
        let g1 = self.sorted_group(1);
        let values = grid
            .points()
            .iter()
            .map(|&x| ecdf_sorted(g0, x) - ecdf_sorted(g1, x))
            .collect();
        Ok(StatVector::new(vec![StatBlock {
            kind: BlockKind::Diff,
            id: BlockId::Pair(0, 1),
            values,
        }]))
    }

    /// QQ vector of the pair `(l, k)`: quantiles of group `k` at the ECDF
    /// levels of group `l`. Where the level is zero the value is the minimum
    /// of group `k`, keeping the vector finite.
    pub fn stat_qq_pair(&self, l: usize, k: usize, grid: &EvalGrid) -> Result<StatVector> {
        let n = self.group_count();
        if l >= n {
            return Err(Error::UnknownGroup { group: l, count: n });
        }
        if k >= n {
            return Err(Error::UnknownGroup { group: k, count: n });
        }
        if l == k {
            return Err(Error::InvalidScenario {
                reason: "qq pair needs two distinct groups".into(),
            });
        }
        Ok(StatVector::new(vec![self.qq_block(l, k, grid)]))
    }

    fn qq_block(&self, l: usize, k: usize, grid: &EvalGrid) -> StatBlock {
        let gl = self.sorted_group(l);
        let gk = self.sorted_group(k);
        let values = grid
            .points()
            .iter()
            .map(|&x| {
                let level = ecdf_sorted(gl, x);
                if level == 0.0 {
                    gk[0]
                } else {
                    quantile_sorted(gk, level)
                }
            })
            .collect();
        StatBlock {
            kind: BlockKind::Qq,
            id: BlockId::Pair(l, k),
            values,
        }
    }

    /// QQ vectors of all `n(n-1)/2` group pairs in lexicographic order.
    pub fn stat_qq_pairs(&self, grid: &EvalGrid) -> Result<StatVector> {
        let n = self.group_count();
        let mut blocks = Vec::with_capacity(n * (n - 1) / 2);
        for l in 0..n {
            for k in (l + 1)..n {
                blocks.push(self.qq_block(l, k, grid));
            }
        }
        Ok(StatVector::new(blocks))
    }

    /// Per-group ECDF blocks, combined into one long vector.
    pub fn stat_ecdf_all(&self, grid: &EvalGrid) -> Result<StatVector> {
        let blocks = (0..self.group_count())
            .map(|g| {
                let sorted = self.sorted_group(g);
                StatBlock {
                    kind: BlockKind::Ecdf,
                    id: BlockId::Group(g),
                    values: grid.points().iter().map(|&x| ecdf_sorted(sorted, x)).collect(),
                }
            })
            .collect();
        Ok(StatVector::new(blocks))
    }

    /// Per-group kernel density blocks with per-group bandwidths. The
    /// bandwidths come from the caller so that a configuration computed on
    /// the observed groups can be reused unchanged for every permutation.
    pub fn stat_den_all(&self, grid: &EvalGrid, cfg: &KdeConfig) -> Result<StatVector> {
        let n = self.group_count();
        if cfg.bandwidths().len() != n {
            return Err(Error::LengthMismatch {
                values: cfg.bandwidths().len(),
                labels: n,
            });
        }
        let Kernel::Gaussian = cfg.kernel();
        let blocks = (0..n)
            .map(|g| {
                kde_eval(self.sorted_group(g), cfg.bandwidths()[g], grid).map(|values| StatBlock {
                    kind: BlockKind::Den,
                    id: BlockId::Group(g),
                    values,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StatVector::new(blocks))
    }

    /// Quantile regression process for a saturated one-categorical-covariate
    /// design: one block per non-reference group holding the difference of
    /// that group's quantiles from the reference group's quantiles.
    pub fn stat_qr(&self, taus: &TauGrid, reference: usize) -> Result<StatVector> {
        let n = self.group_count();
        if reference >= n {
            return Err(Error::UnknownGroup {
                group: reference,
                count: n,
            });
        }
        let ref_quantiles: Vec<f64> = taus
            .taus()
            .iter()
            .map(|&t| quantile_sorted(self.sorted_group(reference), t))
            .collect();
        let blocks = (0..n)
            .filter(|&g| g != reference)
            .map(|g| {
                let sorted = self.sorted_group(g);
                let values = taus
                    .taus()
                    .iter()
                    .zip(&ref_quantiles)
                    .map(|(&t, &q_ref)| quantile_sorted(sorted, t) - q_ref)
                    .collect();
                StatBlock {
                    kind: BlockKind::Qr,
                    id: BlockId::Group(g),
                    values,
                }
            })
            .collect();
        Ok(StatVector::new(blocks))
    }
}

/// See [`PreparedSample::stat_diff`].
pub fn stat_diff(sample: &GroupedSample, grid: &EvalGrid) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_diff(grid)
}

/// See [`PreparedSample::stat_qq_pair`].
pub fn stat_qq_pair(
    sample: &GroupedSample,
    l: usize,
    k: usize,
    grid: &EvalGrid,
) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_qq_pair(l, k, grid)
}

/// See [`PreparedSample::stat_qq_pairs`].
pub fn stat_qq_pairs(sample: &GroupedSample, grid: &EvalGrid) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_qq_pairs(grid)
}

/// See [`PreparedSample::stat_ecdf_all`].
pub fn stat_ecdf_all(sample: &GroupedSample, grid: &EvalGrid) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_ecdf_all(grid)
}

/// See [`PreparedSample::stat_den_all`].
pub fn stat_den_all(
    sample: &GroupedSample,
    grid: &EvalGrid,
    cfg: &KdeConfig,
) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_den_all(grid, cfg)
}

/// See [`PreparedSample::stat_qr`].
pub fn stat_qr(sample: &GroupedSample, taus: &TauGrid, reference: usize) -> Result<StatVector> {
    PreparedSample::from_sample(sample).stat_qr(taus, reference)
}

/// Silverman bandwidths for every group of a sample, in group order.
pub fn group_bandwidths(sample: &GroupedSample) -> Result<Vec<f64>> {
    (0..sample.group_count())
        .map(|g| silverman_bandwidth(&sample.group_values(g)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn two_group(x: &[f64], y: &[f64]) -> GroupedSample {
        GroupedSample::from_two(x, y).unwrap()
    }

    #[test]
    fn grid_spans_pooled_range() {
        let s = two_group(&[0.0], &[1.0]);
        let g = make_grid(&s, 3).unwrap();
        assert_eq!(g.points(), &[0.0, 0.5, 1.0]);

        let s = two_group(&[-2.1, 0.0], &[3.4]);
        let g = make_grid(&s, 100).unwrap();
        assert_eq!(g.points()[0], -2.1);
        assert_eq!(g.points()[99], 3.4);
        assert_relative_eq!(g.points()[1] - g.points()[0], 5.5 / 99.0, epsilon = 1e-12);
    }

    #[test]
    fn grid_rejects_constant_pool() {
        let s = two_group(&[1.0, 1.0], &[1.0]);
        assert!(matches!(
            make_grid(&s, 10),
            Err(Error::DegenerateRange { .. })
        ));
    }

    #[test]
    fn ecdf_counts_at_and_below() {
        let v = [1.0, 2.0, 2.0, 4.0];
        assert_eq!(ecdf_eval(&v, 2.0).unwrap(), 0.75);
        assert_eq!(ecdf_eval(&v, 0.5).unwrap(), 0.0);
        assert_eq!(ecdf_eval(&v, 4.0).unwrap(), 1.0);
        assert!(ecdf_eval(&[], 0.0).is_err());
    }

    #[test]
    fn quantile_is_generalized_inverse() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_eval(&v, 0.5).unwrap(), 2.0);
        assert_eq!(quantile_eval(&v, 0.251).unwrap(), 2.0);
        assert_eq!(quantile_eval(&v, 0.25).unwrap(), 1.0);
        assert_eq!(quantile_eval(&v, 1.0).unwrap(), 4.0);
        assert_eq!(quantile_eval(&[5.0], 0.3).unwrap(), 5.0);
        assert_eq!(quantile_eval(&[5.0], 1.0).unwrap(), 5.0);
        assert!(quantile_eval(&v, 0.0).is_err());
        assert!(quantile_eval(&v, 1.1).is_err());
    }

    #[test]
    fn silverman_matches_hand_values() {
        // 50 values at -a, 50 at +a with a = sqrt(0.99): sd = 1 exactly and
        // IQR / 1.34 > 1, so the sd branch is taken.
        let a = 0.99f64.sqrt();
        let mut v = vec![-a; 50];
        v.extend(vec![a; 50]);
        let bw = silverman_bandwidth(&v).unwrap();
        assert_relative_eq!(bw, 0.35830, epsilon = 5e-5);
        assert_relative_eq!(bw, 0.9 * 100f64.powf(-0.2), epsilon = 1e-12);
    }

    #[test]
    fn silverman_iqr_zero_falls_back_to_sd() {
        // 30 zeros plus +-sqrt(62): both quartiles are 0, sd = 2.
        let c = 62f64.sqrt();
        let mut v = vec![0.0; 30];
        v.push(c);
        v.push(-c);
        let bw = silverman_bandwidth(&v).unwrap();
        assert_relative_eq!(bw, 0.9, epsilon = 1e-12);
    }

    #[test]
    fn silverman_rejects_constant_sample() {
        assert!(matches!(
            silverman_bandwidth(&[3.0, 3.0, 3.0]),
            Err(Error::ConstantSample)
        ));
    }

    #[test]
    fn silverman_agrees_with_direct_formula() {
        // Cross-check against an independent evaluation of the rule on
        // irregular data.
        let mut rng = crate::rng::stream(7, &[99]);
        use rand::Rng;
        for _ in 0..50 {
            let m = rng.gen_range(5..200);
            let values: Vec<f64> = (0..m).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let bw = silverman_bandwidth(&values).unwrap();

            let mean = values.iter().sum::<f64>() / m as f64;
            let sd = (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (m - 1) as f64)
                .sqrt();
            let mut sorted = values.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let pick = |tau: f64| {
                let mut k = 1;
                while (k as f64) / (m as f64) < tau {
                    k += 1;
                }
                sorted[k - 1]
            };
            let iqr = pick(0.75) - pick(0.25);
            let spread = if iqr == 0.0 { sd } else { sd.min(iqr / 1.34) };
            let expected = 0.9 * spread * (m as f64).powf(-0.2);
            assert_relative_eq!(bw, expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn kde_single_point_peak() {
        let g = EvalGrid::new(vec![-1.0, 0.0, 1.0]).unwrap();
        let f = kde_eval(&[0.0], 1.0, &g).unwrap();
        assert_relative_eq!(f[1], 0.39894, epsilon = 1e-5);
        assert!(f.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn kde_symmetric_sample_gives_symmetric_curve() {
        let g = EvalGrid::new((0..21).map(|k| -2.0 + 0.2 * k as f64).collect()).unwrap();
        let f = kde_eval(&[-1.0, -0.25, 0.25, 1.0], 0.5, &g).unwrap();
        for k in 0..f.len() {
            assert_relative_eq!(f[k], f[f.len() - 1 - k], epsilon = 1e-12);
        }
    }

    #[test]
    fn kde_integrates_to_one() {
        use rand::Rng;
        let mut rng = crate::rng::stream(11, &[5]);
        for _ in 0..20 {
            let m = rng.gen_range(5..60);
            let values: Vec<f64> = (0..m).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let b = silverman_bandwidth(&values).unwrap();
            let lo = values.iter().cloned().fold(f64::INFINITY, f64::min) - 5.0 * b;
            let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 5.0 * b;
            let d = 4001;
            let step = (hi - lo) / (d - 1) as f64;
            let grid = EvalGrid::new((0..d).map(|k| lo + k as f64 * step).collect()).unwrap();
            let f = kde_eval(&values, b, &grid).unwrap();
            let mut mass = 0.0;
            for w in f.windows(2) {
                mass += 0.5 * (w[0] + w[1]) * step;
            }
            assert!((mass - 1.0).abs() < 1e-3, "mass {mass}");
        }
    }

    #[test]
    fn diff_of_identical_groups_is_zero() {
        let s = two_group(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]);
        let g = make_grid(&s, 7).unwrap();
        let t = stat_diff(&s, &g).unwrap();
        assert_eq!(t.total_length(), 7);
        assert!(t.blocks()[0].values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn diff_separated_groups_hits_one() {
        let s = two_group(&[1.0, 2.0], &[3.0, 4.0]);
        let g = EvalGrid::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let t = stat_diff(&s, &g).unwrap();
        assert_eq!(t.blocks()[0].values[1], 1.0);
    }

    #[test]
    fn diff_requires_two_groups() {
        let s = GroupedSample::new(vec![1.0, 2.0, 3.0], vec![0, 1, 2]).unwrap();
        let g = make_grid(&s, 5).unwrap();
        assert!(matches!(
            stat_diff(&s, &g),
            Err(Error::StatisticArity { .. })
        ));
    }

    #[test]
    fn qq_pair_identity_at_data_points() {
        let s = two_group(&[1.0, 2.0, 3.0, 4.0], &[1.0, 2.0, 3.0, 4.0]);
        let g = EvalGrid::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let t = stat_qq_pair(&s, 0, 1, &g).unwrap();
        assert_eq!(t.blocks()[0].values, vec![1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn qq_pair_recovers_constant_shift() {
        let c = 2.5;
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| v + c).collect();
        let s = two_group(&x, &y);
        let g = EvalGrid::new(x.to_vec()).unwrap();
        let t = stat_qq_pair(&s, 0, 1, &g).unwrap();
        for (v, xv) in t.blocks()[0].values.iter().zip(&x) {
            assert_relative_eq!(*v, xv + c, epsilon = 1e-12);
        }
    }

    #[test]
    fn qq_pair_below_support_maps_to_group_minimum() {
        let s = two_group(&[10.0, 11.0], &[3.0, 4.0]);
        let g = EvalGrid::new(vec![0.0, 10.5, 11.0]).unwrap();
        let t = stat_qq_pair(&s, 0, 1, &g).unwrap();
        // F_0(0) = 0, so the value is the minimum of group 1.
        assert_eq!(t.blocks()[0].values[0], 3.0);
    }

    #[test]
    fn qq_pairs_block_count_and_order() {
        let s = GroupedSample::new(
            vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0],
            vec![0, 0, 1, 1, 2, 2],
        )
        .unwrap();
        let g = make_grid(&s, 4).unwrap();
        let t = stat_qq_pairs(&s, &g).unwrap();
        let ids: Vec<BlockId> = t.blocks().iter().map(|b| b.id).collect();
        assert_eq!(
            ids,
            vec![BlockId::Pair(0, 1), BlockId::Pair(0, 2), BlockId::Pair(1, 2)]
        );
    }

    #[test]
    fn ecdf_blocks_are_monotone() {
        let s = two_group(&[1.0, 3.0, 2.0], &[4.0, 0.5]);
        let g = make_grid(&s, 9).unwrap();
        let t = stat_ecdf_all(&s, &g).unwrap();
        assert_eq!(t.blocks().len(), 2);
        for b in t.blocks() {
            assert!(b.values.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(*b.values.last().unwrap(), 1.0);
        }
    }

    #[test]
    fn den_blocks_shapes_and_nonnegative() {
        let s = two_group(&[1.0, 2.0, 3.0], &[2.0, 2.5, 4.0]);
        let g = make_grid(&s, 11).unwrap();
        let cfg = KdeConfig::new(group_bandwidths(&s).unwrap(), Kernel::Gaussian).unwrap();
        let t = stat_den_all(&s, &g, &cfg).unwrap();
        assert_eq!(t.total_length(), 22);
        assert!(t
            .blocks()
            .iter()
            .all(|b| b.values.iter().all(|&v| v >= 0.0)));
    }

    #[test]
    fn den_identical_groups_equal_blocks() {
        let s = two_group(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]);
        let g = make_grid(&s, 11).unwrap();
        let cfg = KdeConfig::new(vec![0.7, 0.7], Kernel::Gaussian).unwrap();
        let t = stat_den_all(&s, &g, &cfg).unwrap();
        assert_eq!(t.blocks()[0].values, t.blocks()[1].values);
    }

    #[test]
    fn qr_identical_groups_zero() {
        let s = two_group(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]);
        let taus = TauGrid::linspace(0.1, 0.9, 9).unwrap();
        let t = stat_qr(&s, &taus, 0).unwrap();
        assert_eq!(t.blocks().len(), 1);
        assert!(t.blocks()[0].values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn qr_recovers_constant_shift() {
        let c = 1.25;
        let x = [2.0, 4.0, 6.0, 8.0];
        let y: Vec<f64> = x.iter().map(|v| v + c).collect();
        let s = two_group(&x, &y);
        let taus = TauGrid::linspace(0.05, 0.95, 19).unwrap();
        let t = stat_qr(&s, &taus, 0).unwrap();
        for v in &t.blocks()[0].values {
            assert_relative_eq!(*v, c, epsilon = 1e-12);
        }
    }

    #[test]
    fn qr_three_groups_two_blocks() {
        let s = GroupedSample::new(
            vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0],
            vec![0, 0, 1, 1, 2, 2],
        )
        .unwrap();
        let taus = TauGrid::linspace(0.2, 0.8, 5).unwrap();
        let t = stat_qr(&s, &taus, 0).unwrap();
        assert_eq!(t.blocks().len(), 2);
        assert_eq!(t.blocks()[0].id, BlockId::Group(1));
        assert_eq!(t.blocks()[1].id, BlockId::Group(2));
        // Reference other than group 0.
        let t = stat_qr(&s, &taus, 1).unwrap();
        assert_eq!(t.blocks()[0].id, BlockId::Group(0));
        assert_eq!(t.blocks()[1].id, BlockId::Group(2));
    }

    #[test]
    fn galois_link_between_ecdf_and_quantile() {
        use rand::Rng;
        let mut rng = crate::rng::stream(3, &[17]);
        for _ in 0..100 {
            let m = rng.gen_range(1..40);
            let values: Vec<f64> = (0..m)
                .map(|_| (rng.gen_range(-20..20) as f64) * 0.5)
                .collect();
            let tau = rng.gen_range(0.001..1.0);
            let q = quantile_eval(&values, tau).unwrap();
            assert!(ecdf_eval(&values, q).unwrap() >= tau);
            for &v in &values {
                let f = ecdf_eval(&values, v).unwrap();
                assert!(quantile_eval(&values, f).unwrap() <= v);
            }
        }
    }
}
