//! TOPSIS-style ranking of alternatives described by FNNN decision matrices.
//!
//! The pipeline normalizes the matrix column by column, aggregates each row
//! with one of the four operators, builds positive and negative ideals from
//! the extrema of the aggregates, measures every aggregate against both
//! ideals and ranks alternatives by relative closeness `D⁻ / (D⁺ + D⁻)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::aggregate::{Operator, WeightVector};
use crate::distance::Metric;
use crate::error::FnnError;
use crate::number::{Fnnn, Lambda, MembershipTriple, NormalParams};
use crate::Result;

/// `n` alternatives × `m` attributes of FNNN cells with attribute weights.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    attributes: Vec<String>,
    /// Row-major, `alternatives.len() * attributes.len()` entries.
    cells: Vec<Fnnn>,
    weights: WeightVector,
    normalized: bool,
}

impl DecisionMatrix {
    pub fn new(
        alternatives: Vec<String>,
        attributes: Vec<String>,
        cells: Vec<Fnnn>,
        weights: WeightVector,
    ) -> Result<Self> {
        let (n, m) = (alternatives.len(), attributes.len());
        if n == 0 || m == 0 {
            return Err(FnnError::EmptyInput);
        }
        if cells.len() != n * m {
            return Err(FnnError::LengthMismatch { expected: n * m, found: cells.len() });
        }
        if weights.len() != m {
            return Err(FnnError::LengthMismatch { expected: m, found: weights.len() });
        }
        let dm = Self { alternatives, attributes, cells, weights, normalized: false };
        for col in 0..m {
            if dm.column(col).map(Fnnn::eta).fold(f64::NEG_INFINITY, f64::max) <= 0.0 {
                return Err(FnnError::ColumnMaxNonPositive { col });
            }
        }
        Ok(dm)
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn cells(&self) -> &[Fnnn] {
        &self.cells
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn cell(&self, row: usize, col: usize) -> &Fnnn {
        &self.cells[row * self.n_attributes() + col]
    }

    pub fn row(&self, row: usize) -> &[Fnnn] {
        let m = self.n_attributes();
        &self.cells[row * m..(row + 1) * m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Fnnn]> {
        self.cells.chunks(self.n_attributes())
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &Fnnn> {
        self.cells.iter().skip(col).step_by(self.n_attributes())
    }

    /// Replace the attribute weights.
    pub fn with_weights(mut self, weights: WeightVector) -> Result<Self> {
        if weights.len() != self.n_attributes() {
            return Err(FnnError::LengthMismatch { expected: self.n_attributes(), found: weights.len() });
        }
        self.weights = weights;
        Ok(self)
    }
}

/// Column-wise normalization: `η' = η / maxᵢ η`, `ξ' = (ξ / maxᵢ ξ)·(ξ / η)`.
/// Memberships are unchanged.
pub fn normalize(dm: &DecisionMatrix) -> Result<DecisionMatrix> {
    let m = dm.n_attributes();
    let mut eta_max = alloc::vec![f64::NEG_INFINITY; m];
    let mut xi_max = alloc::vec![f64::NEG_INFINITY; m];
    for (idx, cell) in dm.cells.iter().enumerate() {
        let (row, col) = (idx / m, idx % m);
        if !(cell.eta() > 0.0) {
            return Err(FnnError::ZeroLocation { row, col });
        }
        eta_max[col] = eta_max[col].max(cell.eta());
        xi_max[col] = xi_max[col].max(cell.xi());
    }
    let cells = dm
        .cells
        .iter()
        .enumerate()
        .map(|(idx, cell)| {
            let col = idx % m;
            let eta = cell.eta() / eta_max[col];
            let xi = (cell.xi() / xi_max[col]) * (cell.xi() / cell.eta());
            // overflow or underflow of the spread quotient
            if !eta.is_finite() || !xi.is_finite() || xi == 0.0 {
                return Err(FnnError::NonFinite);
            }
            Ok(Fnnn::from_parts(NormalParams::new(eta, xi)?, cell.mu()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecisionMatrix { cells, normalized: true, ..dm.clone() })
}

/// One aggregate per alternative, combining its attributes with the attribute weights.
pub fn aggregate_rows(dm: &DecisionMatrix, op: Operator, lam: Lambda) -> Result<Vec<Fnnn>> {
    if !dm.is_normalized() {
        return Err(FnnError::NotNormalized);
    }
    dm.rows().map(|row| op.apply(row, dm.weights(), lam)).collect()
}

/// Positive ideal `⟨(max η, min ξ); 1, 1, 0⟩` and negative ideal
/// `⟨(min η, max ξ); 0, 0, 1⟩` over the aggregated alternatives.
pub fn ideal_values(aggregates: &[Fnnn]) -> Result<(Fnnn, Fnnn)> {
    let first = aggregates.first().ok_or(FnnError::EmptyInput)?;
    let (mut eta_lo, mut eta_hi) = (first.eta(), first.eta());
    let (mut xi_lo, mut xi_hi) = (first.xi(), first.xi());
    for a in &aggregates[1..] {
        eta_lo = eta_lo.min(a.eta());
        eta_hi = eta_hi.max(a.eta());
        xi_lo = xi_lo.min(a.xi());
        xi_hi = xi_hi.max(a.xi());
    }
    Ok((
        Fnnn::from_parts(NormalParams::new(eta_hi, xi_lo)?, MembershipTriple::POSITIVE),
        Fnnn::from_parts(NormalParams::new(eta_lo, xi_hi)?, MembershipTriple::NEGATIVE),
    ))
}

/// Relative closeness `D⁻ᵢ / (D⁺ᵢ + D⁻ᵢ)`.
pub fn closeness(dplus: &[f64], dminus: &[f64]) -> Result<Vec<f64>> {
    if dplus.len() != dminus.len() {
        return Err(FnnError::LengthMismatch { expected: dplus.len(), found: dminus.len() });
    }
    dplus
        .iter()
        .zip(dminus)
        .enumerate()
        .map(|(index, (&p, &n))| {
            for value in [p, n] {
                if !(value >= 0.0) || !value.is_finite() {
                    return Err(FnnError::NegativeDistance { index, value });
                }
            }
            let total = p + n;
            if total == 0.0 {
                return Err(FnnError::DegenerateCloseness { index });
            }
            Ok(n / total)
        })
        .collect()
}

/// Alternative indices by descending closeness; ties keep ascending index.
pub fn rank(closeness: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..closeness.len()).collect();
    // Stable sort keeps ascending index among equal scores.
    order.sort_by(|&a, &b| closeness[b].total_cmp(&closeness[a]));
    order
}

/// Operator, distance and Λ for one pipeline run.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PipelineConfig {
    pub operator: Operator,
    pub metric: Metric,
    pub lambda: Lambda,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self { operator: Operator::Fnnwa, metric: Metric::Hamming, lambda: Lambda::ONE }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RankingReport {
    pub config: PipelineConfig,
    /// False for fractional Λ.
    pub lambda_in_domain: bool,
    pub normalized: DecisionMatrix,
    pub aggregates: Vec<Fnnn>,
    pub positive_ideal: Fnnn,
    pub negative_ideal: Fnnn,
    pub d_plus: Vec<f64>,
    pub d_minus: Vec<f64>,
    pub closeness: Vec<f64>,
    /// Best first.
    pub ordering: Vec<usize>,
    /// Alternatives whose aggregate has `t³ + i³ + f³ > 2`.
    pub cubic_bound_violations: Vec<usize>,
}

impl RankingReport {
    pub fn best(&self) -> usize {
        self.ordering[0]
    }

    pub fn alternatives(&self) -> &[String] {
        self.normalized.alternatives()
    }
}

fn rank_normalized(normalized: DecisionMatrix, config: PipelineConfig) -> Result<RankingReport> {
    let aggregates = aggregate_rows(&normalized, config.operator, config.lambda)?;
    let (positive_ideal, negative_ideal) = ideal_values(&aggregates)?;
    let d_plus: Vec<f64> = aggregates.iter().map(|a| config.metric.distance(a, &positive_ideal)).collect();
    let d_minus: Vec<f64> = aggregates.iter().map(|a| config.metric.distance(a, &negative_ideal)).collect();
    let closeness = closeness(&d_plus, &d_minus)?;
    let ordering = rank(&closeness);
    let cubic_bound_violations = aggregates
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.satisfies_cubic_bound())
        .map(|(idx, _)| idx)
        .collect();
    Ok(RankingReport {
        config,
        lambda_in_domain: config.lambda.is_integral(),
        normalized,
        aggregates,
        positive_ideal,
        negative_ideal,
        d_plus,
        d_minus,
        closeness,
        ordering,
        cubic_bound_violations,
    })
}

/// Normalize, aggregate, build ideals, measure distances and rank.
pub fn run_pipeline(dm: &DecisionMatrix, config: PipelineConfig) -> Result<RankingReport> {
    rank_normalized(normalize(dm)?, config)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepRow {
    pub lambda: Lambda,
    pub closeness: Vec<f64>,
    pub ordering: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Λ values whose ordering differs from the preceding row.
    pub transitions: Vec<Lambda>,
}

impl SweepResult {
    fn from_rows(rows: Vec<SweepRow>) -> Self {
        let transitions = detect_transitions(&rows);
        Self { rows, transitions }
    }

    pub fn row(&self, lambda: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.lambda.get() == lambda)
    }
}

/// Λ values of rows whose ordering differs from the previous row.
pub fn detect_transitions(rows: &[SweepRow]) -> Vec<Lambda> {
    rows.windows(2)
        .filter(|pair| pair[0].ordering != pair[1].ordering)
        .map(|pair| pair[1].lambda)
        .collect()
}

/// One pipeline run per Λ, in the given (strictly increasing) order.
/// `config.lambda` is ignored.
pub fn lambda_sweep(dm: &DecisionMatrix, config: PipelineConfig, lambdas: &[Lambda]) -> Result<SweepResult> {
    if lambdas.is_empty() {
        return Err(FnnError::EmptyInput);
    }
    if let Some(index) = lambdas.windows(2).position(|p| p[1] <= p[0]) {
        return Err(FnnError::SweepNotIncreasing { index: index + 1 });
    }
    let normalized = normalize(dm)?;
    let rows = lambdas
        .iter()
        .map(|&lambda| {
            let report = rank_normalized(normalized.clone(), PipelineConfig { lambda, ..config })?;
            Ok(SweepRow { lambda, closeness: report.closeness, ordering: report.ordering })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|k| alloc::format!("{prefix}{k}")).collect()
    }

    fn small() -> DecisionMatrix {
        let cells = vec![
            Fnnn::new(0.8, 0.4, 0.7, 0.6, 0.5).unwrap(),
            Fnnn::new(0.5, 0.6, 0.9, 0.3, 0.2).unwrap(),
            Fnnn::new(0.4, 0.2, 0.6, 0.8, 0.4).unwrap(),
            Fnnn::new(0.6, 0.3, 0.5, 0.5, 0.7).unwrap(),
        ];
        DecisionMatrix::new(labels("A", 2), labels("c", 2), cells, WeightVector::new(vec![0.6, 0.4]).unwrap())
            .unwrap()
    }

    #[test]
    fn matrix_shape_checks() {
        let cell = Fnnn::new(0.5, 0.5, 0.5, 0.5, 0.5).unwrap();
        let w = WeightVector::uniform(2).unwrap();
        assert!(matches!(
            DecisionMatrix::new(labels("A", 2), labels("c", 2), vec![cell; 3], w.clone()),
            Err(FnnError::LengthMismatch { expected: 4, found: 3 })
        ));
        assert!(matches!(
            DecisionMatrix::new(vec![], labels("c", 2), vec![], w.clone()),
            Err(FnnError::EmptyInput)
        ));
        assert!(matches!(
            DecisionMatrix::new(labels("A", 1), labels("c", 3), vec![cell; 3], w),
            Err(FnnError::LengthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn normalization_sets_column_max_to_one() {
        let n = normalize(&small()).unwrap();
        assert!(n.is_normalized());
        for col in 0..2 {
            assert!(n.column(col).any(|c| c.eta() == 1.0));
        }
        let c = n.cell(1, 0);
        assert!((c.eta() - 0.5).abs() < 1e-15);
        assert!((c.xi() - (0.2 / 0.4) * (0.2 / 0.4)).abs() < 1e-15);
        assert_eq!(c.mu(), small().cell(1, 0).mu());
    }

    #[test]
    fn single_alternative_normalization() {
        let cells = vec![Fnnn::new(0.4, 0.3, 0.5, 0.5, 0.5).unwrap(), Fnnn::new(2.0, 1.0, 0.5, 0.5, 0.5).unwrap()];
        let dm = DecisionMatrix::new(labels("A", 1), labels("c", 2), cells, WeightVector::uniform(2).unwrap())
            .unwrap();
        let n = normalize(&dm).unwrap();
        assert_eq!(n.cell(0, 0).eta(), 1.0);
        assert!((n.cell(0, 0).xi() - 0.3 / 0.4).abs() < 1e-15);
        assert!((n.cell(0, 1).xi() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn zero_location_is_rejected() {
        let cells = vec![Fnnn::new(0.0, 0.3, 0.5, 0.5, 0.5).unwrap(), Fnnn::new(0.5, 0.3, 0.5, 0.5, 0.5).unwrap()];
        let dm = DecisionMatrix::new(labels("A", 2), labels("c", 1), cells, WeightVector::new(vec![1.0]).unwrap())
            .unwrap();
        assert_eq!(normalize(&dm), Err(FnnError::ZeroLocation { row: 0, col: 0 }));
    }

    #[test]
    fn aggregation_requires_normalized_matrix() {
        assert_eq!(aggregate_rows(&small(), Operator::Fnnwa, Lambda::ONE), Err(FnnError::NotNormalized));
    }

    #[test]
    fn single_attribute_aggregation_is_identity() {
        let cells = vec![Fnnn::new(0.5, 0.3, 0.7, 0.4, 0.5).unwrap(), Fnnn::new(0.8, 0.6, 0.2, 0.9, 0.1).unwrap()];
        let dm = DecisionMatrix::new(labels("A", 2), labels("c", 1), cells, WeightVector::new(vec![1.0]).unwrap())
            .unwrap();
        let n = normalize(&dm).unwrap();
        for op in Operator::ALL {
            let agg = aggregate_rows(&n, op, Lambda::new(2.0).unwrap()).unwrap();
            for (a, c) in agg.iter().zip(n.cells()) {
                for (x, y) in a.components().iter().zip(c.components()) {
                    assert!((x - y).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ideals_of_single_alternative_share_normal_part() {
        let a = Fnnn::new(0.7, 0.4, 0.5, 0.6, 0.7).unwrap();
        let (pos, neg) = ideal_values(&[a]).unwrap();
        assert_eq!(pos.normal(), a.normal());
        assert_eq!(neg.normal(), a.normal());
        assert_eq!(pos.mu(), MembershipTriple::POSITIVE);
        assert_eq!(neg.mu(), MembershipTriple::NEGATIVE);
        assert_eq!(ideal_values(&[]), Err(FnnError::EmptyInput));
    }

    #[test]
    fn closeness_values_and_errors() {
        let c = closeness(&[0.1954, 0.2], &[0.1733, 0.2]).unwrap();
        assert!((c[0] - 0.4700).abs() < 1e-3);
        assert_eq!(c[1], 0.5);
        assert_eq!(closeness(&[0.0], &[0.0]), Err(FnnError::DegenerateCloseness { index: 0 }));
        assert!(matches!(closeness(&[0.1], &[0.1, 0.2]), Err(FnnError::LengthMismatch { .. })));
        assert!(matches!(closeness(&[-0.1], &[0.2]), Err(FnnError::NegativeDistance { .. })));
        assert_eq!(closeness(&[0.0], &[0.3]).unwrap(), vec![1.0]);
    }

    #[test]
    fn rank_ties_and_order() {
        assert_eq!(rank(&[0.5, 0.5, 0.5]), vec![0, 1, 2]);
        assert_eq!(rank(&[0.4704, 0.5260, 0.5180, 0.5224, 0.5651]), vec![4, 1, 3, 2, 0]);
        assert_eq!(rank(&[0.2, 0.9, 0.2, 0.9]), vec![1, 3, 0, 2]);
        assert!(rank(&[]).is_empty());
    }

    #[test]
    fn one_by_one_matrix_ranks_its_only_alternative() {
        let cells = vec![Fnnn::new(0.5, 0.3, 0.7, 0.4, 0.5).unwrap()];
        let dm = DecisionMatrix::new(vec!["only".to_string()], labels("c", 1), cells, WeightVector::new(vec![1.0]).unwrap())
            .unwrap();
        let report = run_pipeline(&dm, PipelineConfig::default()).unwrap();
        assert_eq!(report.ordering, vec![0]);
        assert!((0.0..=1.0).contains(&report.closeness[0]));
    }

    #[test]
    fn sweep_validates_lambdas() {
        let dm = small();
        let l = |x: f64| Lambda::new(x).unwrap();
        assert_eq!(lambda_sweep(&dm, PipelineConfig::default(), &[]), Err(FnnError::EmptyInput));
        assert_eq!(
            lambda_sweep(&dm, PipelineConfig::default(), &[l(2.0), l(2.0)]),
            Err(FnnError::SweepNotIncreasing { index: 1 })
        );
        let sweep = lambda_sweep(&dm, PipelineConfig::default(), &[l(1.0), l(3.0)]).unwrap();
        assert_eq!(sweep.rows.len(), 2);
        let single = run_pipeline(&dm, PipelineConfig::default()).unwrap();
        assert_eq!(sweep.rows[0].closeness, single.closeness);
    }

    #[test]
    fn transitions_follow_ordering_changes() {
        let row = |lambda: f64, ordering: Vec<usize>| SweepRow {
            lambda: Lambda::new(lambda).unwrap(),
            closeness: vec![],
            ordering,
        };
        let rows = vec![row(1.0, vec![0, 1]), row(2.0, vec![0, 1]), row(3.0, vec![1, 0]), row(4.0, vec![0, 1])];
        let t: Vec<f64> = detect_transitions(&rows).into_iter().map(Lambda::get).collect();
        assert_eq!(t, vec![3.0, 4.0]);
    }

    #[test]
    fn normalization_overflow_is_degenerate() {
        let cells = vec![Fnnn::new(1e-300, 1e300, 0.5, 0.5, 0.5).unwrap(), Fnnn::new(1.0, 1.0, 0.5, 0.5, 0.5).unwrap()];
        let dm = DecisionMatrix::new(labels("A", 2), labels("c", 1), cells, WeightVector::uniform(1).unwrap()).unwrap();
        let err = normalize(&dm).unwrap_err();
        assert_eq!(err, FnnError::NonFinite);
        assert!(err.is_degenerate());
    }
}
