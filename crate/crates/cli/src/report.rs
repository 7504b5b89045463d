//! Report documents and their table, CSV and JSON renderings.

use std::fmt::Write as _;

use fnnn_core::{
    rank, Fnnn, Lambda, MembershipTriple, Metric, NormalParams, Operator, RankingReport, SweepResult,
};
use serde::{Deserialize, Serialize};

use crate::input::RawCell;

/// Machine-readable result of `rank`, at full precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankDoc {
    pub operator: String,
    pub metric: String,
    pub lambda: f64,
    /// False for fractional Λ.
    pub lambda_in_domain: bool,
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub weights: Vec<f64>,
    /// One row per alternative.
    pub normalized: Vec<Vec<RawCell>>,
    pub aggregates: Vec<RawCell>,
    pub positive_ideal: RawCell,
    pub negative_ideal: RawCell,
    pub d_plus: Vec<f64>,
    pub d_minus: Vec<f64>,
    pub closeness: Vec<f64>,
    /// Zero-based alternative indices, best first.
    pub ordering: Vec<usize>,
    pub ordering_labels: Vec<String>,
    pub best: String,
    /// Alternatives whose aggregate exceeds `t³ + i³ + f³ ≤ 2`.
    pub cubic_bound_violations: Vec<String>,
}

impl RankDoc {
    pub fn from_report(r: &RankingReport) -> Self {
        let names = r.alternatives();
        let label = |k: &usize| names[*k].clone();
        let n = &r.normalized;
        RankDoc {
            operator: r.config.operator.name().into(),
            metric: r.config.metric.name().into(),
            lambda: r.config.lambda.get(),
            lambda_in_domain: r.lambda_in_domain,
            alternatives: names.to_vec(),
            attributes: n.attributes().to_vec(),
            weights: n.weights().as_slice().to_vec(),
            normalized: n.rows().map(|row| row.iter().map(RawCell::from).collect()).collect(),
            aggregates: r.aggregates.iter().map(RawCell::from).collect(),
            positive_ideal: RawCell::from(&r.positive_ideal),
            negative_ideal: RawCell::from(&r.negative_ideal),
            d_plus: r.d_plus.clone(),
            d_minus: r.d_minus.clone(),
            closeness: r.closeness.clone(),
            ordering: r.ordering.clone(),
            ordering_labels: r.ordering.iter().map(label).collect(),
            best: label(&r.best()),
            cubic_bound_violations: r.cubic_bound_violations.iter().map(label).collect(),
        }
    }

    /// Ranks the stored closeness values again.
    pub fn rerank(&self) -> Vec<usize> {
        rank(&self.closeness)
    }

    /// Recomputes D⁺, D⁻ and closeness from the stored aggregates and ideals.
    pub fn recompute_closeness(&self) -> Result<Vec<f64>, String> {
        let metric: Metric = self.metric.parse().map_err(|_| format!("unknown metric `{}`", self.metric))?;
        // aggregates may legitimately exceed the cubic bound
        let fnnn = |c: &RawCell| -> Result<Fnnn, String> {
            Ok(Fnnn::from_parts(
                NormalParams::new(c.eta, c.xi).map_err(|e| e.to_string())?,
                MembershipTriple::new(c.t, c.i, c.f).map_err(|e| e.to_string())?,
            ))
        };
        let pos = fnnn(&self.positive_ideal)?;
        let neg = fnnn(&self.negative_ideal)?;
        let agg = self.aggregates.iter().map(fnnn).collect::<Result<Vec<_>, String>>()?;
        let dp: Vec<f64> = agg.iter().map(|a| metric.distance(a, &pos)).collect();
        let dm: Vec<f64> = agg.iter().map(|a| metric.distance(a, &neg)).collect();
        fnnn_core::closeness(&dp, &dm).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRowDoc {
    pub lambda: f64,
    pub closeness: Vec<f64>,
    pub ordering: Vec<usize>,
    pub ordering_labels: Vec<String>,
}

/// Machine-readable result of `sweep`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub operator: String,
    pub metric: String,
    pub alternatives: Vec<String>,
    pub rows: Vec<SweepRowDoc>,
    /// Λ values whose ordering differs from the previous row.
    pub transitions: Vec<f64>,
}

impl SweepDoc {
    pub fn new(sweep: &SweepResult, operator: Operator, metric: Metric, alternatives: &[String]) -> Self {
        SweepDoc {
            operator: operator.name().into(),
            metric: metric.name().into(),
            alternatives: alternatives.to_vec(),
            rows: sweep
                .rows
                .iter()
                .map(|r| SweepRowDoc {
                    lambda: r.lambda.get(),
                    closeness: r.closeness.clone(),
                    ordering: r.ordering.clone(),
                    ordering_labels: r.ordering.iter().map(|&k| alternatives[k].clone()).collect(),
                })
                .collect(),
            transitions: sweep.transitions.iter().map(|l| l.get()).collect(),
        }
    }
}

fn fixed(x: f64, digits: usize) -> String {
    format!("{x:.digits$}")
}

fn chain(labels: &[String]) -> String {
    labels.join(" ≥ ")
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn cell_fields(c: &RawCell, d: usize) -> Vec<String> {
    [c.eta, c.xi, c.t, c.i, c.f].iter().map(|&x| fixed(x, d)).collect()
}

fn heading(s: &str) -> Vec<String> {
    s.split(' ').map(str::to_owned).collect()
}

/// Human-readable report of every step, rounded to `digits` decimals.
pub fn rank_table(doc: &RankDoc, digits: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Operator {}, metric {}, Λ = {}, weights {}",
        doc.operator,
        doc.metric,
        doc.lambda,
        doc.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
    );
    if !doc.lambda_in_domain {
        let _ = writeln!(out, "note: Λ = {} is not an integer; the method is stated for integer Λ ≥ 1", doc.lambda);
    }

    out.push_str("\nNormalized decision matrix\n");
    let mut rows = vec![heading("alternative attribute eta xi t i f")];
    for (r, row) in doc.normalized.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let mut line = vec![doc.alternatives[r].clone(), doc.attributes[c].clone()];
            line.extend(cell_fields(cell, digits));
            rows.push(line);
        }
    }
    out.push_str(&pad_table(&rows));

    let _ = writeln!(out, "\nAggregates ({})", doc.operator);
    let mut rows = vec![heading("alternative eta xi t i f")];
    for (name, cell) in doc.alternatives.iter().zip(&doc.aggregates) {
        let mut line = vec![name.clone()];
        line.extend(cell_fields(cell, digits));
        rows.push(line);
    }
    out.push_str(&pad_table(&rows));

    out.push_str("\nIdeal values\n");
    let mut rows = vec![heading("ideal eta xi t i f")];
    for (name, cell) in [("positive", &doc.positive_ideal), ("negative", &doc.negative_ideal)] {
        let mut line = vec![name.to_owned()];
        line.extend(cell_fields(cell, digits));
        rows.push(line);
    }
    out.push_str(&pad_table(&rows));

    let rank_of = |k: usize| doc.ordering.iter().position(|&o| o == k).map_or(0, |p| p + 1);
    out.push_str("\nDistances and relative closeness\n");
    let mut rows = vec![heading("alternative D+ D- closeness rank")];
    for (k, name) in doc.alternatives.iter().enumerate() {
        rows.push(vec![
            name.clone(),
            fixed(doc.d_plus[k], digits),
            fixed(doc.d_minus[k], digits),
            fixed(doc.closeness[k], digits),
            rank_of(k).to_string(),
        ]);
    }
    out.push_str(&pad_table(&rows));

    let _ = writeln!(out, "\nRanking: {}", chain(&doc.ordering_labels));
    let _ = writeln!(out, "Best alternative: {}", doc.best);
    if !doc.cubic_bound_violations.is_empty() {
        let _ = writeln!(
            out,
            "note: aggregates of {} exceed t³ + i³ + f³ ≤ 2",
            doc.cubic_bound_violations.join(", ")
        );
    }
    out
}

/// `alternative,d_plus,d_minus,closeness,rank` at full precision.
pub fn rank_csv(doc: &RankDoc) -> String {
    let mut out = String::from("alternative,d_plus,d_minus,closeness,rank\n");
    for (pos, &k) in doc.ordering.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&doc.alternatives[k]),
            doc.d_plus[k],
            doc.d_minus[k],
            doc.closeness[k],
            pos + 1
        );
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn sweep_table(doc: &SweepDoc, digits: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Relative closeness by Λ (operator {}, metric {})", doc.operator, doc.metric);
    let mut header = vec!["Λ".to_owned()];
    header.extend((1..=doc.alternatives.len()).map(|k| format!("D{k}")));
    header.push("order".into());
    let mut rows = vec![header];
    for r in &doc.rows {
        let mut line = vec![r.lambda.to_string()];
        line.extend(r.closeness.iter().map(|&c| fixed(c, digits)));
        line.push(chain(&r.ordering_labels));
        rows.push(line);
    }
    out.push_str(&pad_table(&rows));
    let _ = writeln!(out, "\nColumns D1..D{} are {}", doc.alternatives.len(), doc.alternatives.join(", "));
    if doc.transitions.is_empty() {
        out.push_str("Ranking transitions: none\n");
    } else {
        let list: Vec<String> = doc.transitions.iter().map(|l| format!("Λ = {l}")).collect();
        let _ = writeln!(out, "Ranking transitions: {}", list.join(", "));
    }
    out
}

/// `lambda,D1..Dn,order` at full precision.
pub fn sweep_csv(doc: &SweepDoc) -> String {
    let mut out = plot_header(doc.alternatives.len());
    out.pop();
    out.push_str(",order\n");
    for r in &doc.rows {
        let values: Vec<String> = r.closeness.iter().map(f64::to_string).collect();
        let order = r.ordering_labels.join(" > ");
        let _ = writeln!(out, "{},{},{}", r.lambda, values.join(","), csv_field(&order));
    }
    out
}

fn plot_header(n: usize) -> String {
    let mut out = String::from("lambda");
    for k in 1..=n {
        let _ = write!(out, ",D{k}");
    }
    out.push('\n');
    out
}

/// Plot data: header `lambda,D1,…,Dn`, one full-precision row per Λ.
pub fn plot_csv(doc: &SweepDoc) -> String {
    let mut out = plot_header(doc.alternatives.len());
    for r in &doc.rows {
        let values: Vec<String> = r.closeness.iter().map(f64::to_string).collect();
        let _ = writeln!(out, "{},{}", r.lambda, values.join(","));
    }
    out
}

/// Reads plot data back as `(Λ, closeness)` rows.
pub fn parse_plot_csv(text: &str) -> Result<Vec<(f64, Vec<f64>)>, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    if headers.get(0) != Some("lambda") || headers.len() < 2 {
        return Err("expected header `lambda,D1,...`".into());
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| e.to_string())?;
            let nums = rec
                .iter()
                .map(|s| s.parse::<f64>().map_err(|e| format!("`{s}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((nums[0], nums[1..].to_vec()))
        })
        .collect()
}

/// Λ values at which the closeness ranking changes, recomputed from plot rows.
pub fn plot_transitions(rows: &[(f64, Vec<f64>)]) -> Vec<f64> {
    rows.windows(2)
        .filter(|p| rank(&p[0].1) != rank(&p[1].1))
        .map(|p| p[1].0)
        .collect()
}

/// Λ values `a, a+1, … ≤ b`.
pub fn lambda_steps(a: f64, b: f64) -> Vec<Lambda> {
    let count = ((b - a) + 1e-9).floor() as usize + 1;
    (0..count).filter_map(|k| Lambda::new(a + k as f64).ok()).collect()
}
