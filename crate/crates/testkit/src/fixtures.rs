//! The engineer-selection example: five candidates rated on four attributes,
//! with the intermediate tables and the Λ sweep as published (4 decimals).

use fnnn_core::{DecisionMatrix, Fnnn, WeightVector};

pub const ALTERNATIVES: [&str; 5] = ["E1", "E2", "E3", "E4", "E5"];
pub const ATTRIBUTES: [&str; 4] = ["e1", "e2", "e3", "e4"];
pub const WEIGHTS: [f64; 4] = [0.35, 0.27, 0.23, 0.15];

type Cell = [f64; 5];

/// Raw ratings `(η, ξ, t, i, f)`, row per alternative.
pub const RAW: [[Cell; 4]; 5] = [
    [[0.85, 0.5, 0.88, 0.8, 0.8], [0.55, 0.5, 0.85, 0.7, 0.9], [0.65, 0.6, 0.8, 0.8, 0.85], [0.6, 0.55, 0.7, 0.85, 0.9]],
    [[0.7, 0.65, 0.75, 0.95, 0.75], [0.65, 0.45, 0.85, 0.65, 0.95], [0.5, 0.4, 0.7, 0.85, 0.9], [0.8, 0.65, 0.85, 0.95, 0.65]],
    [[0.75, 0.6, 0.8, 0.7, 0.85], [0.75, 0.7, 0.9, 0.85, 0.8], [0.65, 0.5, 0.75, 0.9, 0.8], [0.65, 0.5, 0.8, 0.7, 0.95]],
    [[0.5, 0.4, 0.7, 0.85, 0.9], [0.6, 0.5, 0.95, 0.75, 0.75], [0.75, 0.55, 0.8, 0.95, 0.7], [0.75, 0.7, 0.75, 0.85, 0.85]],
    [[0.65, 0.55, 0.9, 0.75, 0.85], [0.7, 0.6, 0.75, 0.9, 0.8], [0.7, 0.65, 0.9, 0.75, 0.85], [0.7, 0.5, 0.85, 0.9, 0.7]],
];

/// Normalized matrix as printed.
pub const NORMALIZED: [[Cell; 4]; 5] = [
    [[1.0, 0.4525, 0.88, 0.8, 0.8], [0.7333, 0.6494, 0.85, 0.7, 0.9], [0.8667, 0.8521, 0.8, 0.8, 0.85], [0.75, 0.7202, 0.7, 0.85, 0.9]],
    [[0.8235, 0.9286, 0.75, 0.95, 0.75], [0.8667, 0.4451, 0.85, 0.65, 0.95], [0.6667, 0.4923, 0.7, 0.85, 0.9], [1.0, 0.7545, 0.85, 0.95, 0.65]],
    [[0.8824, 0.7385, 0.8, 0.7, 0.85], [1.0, 0.9333, 0.9, 0.85, 0.8], [0.8667, 0.5917, 0.75, 0.9, 0.8], [0.8125, 0.5495, 0.8, 0.7, 0.95]],
    [[0.5882, 0.4923, 0.7, 0.85, 0.9], [0.8, 0.5952, 0.95, 0.75, 0.75], [1.0, 0.6205, 0.8, 0.95, 0.7], [0.9375, 0.9333, 0.75, 0.85, 0.85]],
    [[0.7647, 0.716, 0.9, 0.75, 0.85], [0.9333, 0.7347, 0.75, 0.9, 0.8], [0.9333, 0.9286, 0.9, 0.75, 0.85], [0.875, 0.5102, 0.85, 0.9, 0.7]],
];

/// FNNWA aggregates at Λ = 1.
pub const AGGREGATES: [Cell; 5] = [
    [0.8598, 0.6377, 0.8375, 0.7863, 0.8524],
    [0.8256, 0.6716, 0.7924, 0.8911, 0.8160],
    [0.9000, 0.7290, 0.8277, 0.8068, 0.8385],
    [0.7925, 0.6157, 0.8441, 0.8663, 0.8017],
    [0.8656, 0.7391, 0.8660, 0.8299, 0.8122],
];

pub const POSITIVE_IDEAL: Cell = [0.9, 0.6157, 1.0, 1.0, 0.0];
pub const NEGATIVE_IDEAL: Cell = [0.7925, 0.7391, 0.0, 0.0, 1.0];

pub const D_PLUS: [f64; 5] = [0.1954, 0.1746, 0.1776, 0.1759, 0.1602];
pub const D_MINUS: [f64; 5] = [0.1733, 0.1938, 0.1908, 0.1925, 0.2082];
pub const CLOSENESS: [f64; 5] = [0.4704, 0.5260, 0.5180, 0.5224, 0.5651];

/// Zero-based, best first: E5, E2, E4, E3, E1.
pub const ORDERING: [usize; 5] = [4, 1, 3, 2, 0];

/// FNNWA + Hamming closeness for Λ = 2..=34.
pub const SWEEP: [(f64, [f64; 5]); 33] = [
    (2.0, [0.4730, 0.5311, 0.5226, 0.5316, 0.5687]),
    (3.0, [0.4756, 0.5362, 0.5276, 0.5406, 0.5724]),
    (4.0, [0.478, 0.5412, 0.5328, 0.5487, 0.5759]),
    (5.0, [0.4804, 0.5459, 0.538, 0.5559, 0.5792]),
    (6.0, [0.4825, 0.5502, 0.5432, 0.5622, 0.5823]),
    (7.0, [0.4845, 0.5541, 0.5483, 0.5677, 0.5853]),
    (8.0, [0.4864, 0.5576, 0.5531, 0.5726, 0.588]),
    (9.0, [0.4881, 0.5608, 0.5576, 0.5769, 0.5906]),
    (10.0, [0.4897, 0.5636, 0.5617, 0.5807, 0.593]),
    (11.0, [0.4912, 0.5661, 0.5656, 0.5841, 0.5952]),
    (12.0, [0.4926, 0.5683, 0.5692, 0.5872, 0.5974]),
    (13.0, [0.4939, 0.5704, 0.5725, 0.5901, 0.5994]),
    (14.0, [0.4952, 0.5722, 0.5756, 0.5928, 0.6013]),
    (15.0, [0.4964, 0.5739, 0.5784, 0.5952, 0.603]),
    (16.0, [0.4975, 0.5754, 0.581, 0.5975, 0.6047]),
    (17.0, [0.4985, 0.5768, 0.5834, 0.5997, 0.6063]),
    (18.0, [0.4996, 0.5781, 0.5856, 0.6017, 0.6078]),
    (19.0, [0.5005, 0.5793, 0.5877, 0.6036, 0.6092]),
    (20.0, [0.5014, 0.5804, 0.5896, 0.6054, 0.6105]),
    (21.0, [0.5023, 0.5815, 0.5915, 0.6071, 0.6118]),
    (22.0, [0.5031, 0.5824, 0.5931, 0.6087, 0.613]),
    (23.0, [0.5039, 0.5834, 0.5947, 0.6102, 0.6141]),
    (24.0, [0.5047, 0.5842, 0.5962, 0.6116, 0.6151]),
    (25.0, [0.5055, 0.585, 0.5976, 0.613, 0.6161]),
    (26.0, [0.5062, 0.5858, 0.5989, 0.6143, 0.617]),
    (27.0, [0.5069, 0.5865, 0.6002, 0.6156, 0.6179]),
    (28.0, [0.5075, 0.5871, 0.6013, 0.6168, 0.6188]),
    (29.0, [0.5082, 0.5878, 0.6025, 0.618, 0.6195]),
    (30.0, [0.5088, 0.5884, 0.6035, 0.6191, 0.6203]),
    (31.0, [0.5094, 0.589, 0.6045, 0.6201, 0.621]),
    (32.0, [0.5099, 0.5895, 0.6055, 0.6211, 0.6217]),
    (33.0, [0.5105, 0.59, 0.6064, 0.6221, 0.6223]),
    (34.0, [0.5111, 0.5905, 0.6073, 0.623, 0.6229]),
];

/// Orderings as listed next to the sweep values, zero-based, best first.
/// Within 2..=12 the listed ordering is E5, E4, E2, E3, E1 throughout, although
/// the Λ = 12 values already put E3 ahead of E2.
pub fn listed_ordering(lambda: f64) -> [usize; 5] {
    match lambda as u32 {
        2..=12 => [4, 3, 1, 2, 0],
        13..=33 => [4, 3, 2, 1, 0],
        _ => [3, 4, 2, 1, 0],
    }
}

/// Λ values at which the listed ordering changes within 2..=34.
pub const LISTED_TRANSITIONS: [f64; 2] = [13.0, 34.0];

/// The ordering implied by a row of closeness values (descending, ties by index).
pub fn ordering_of(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    idx
}

/// Transitions implied by the printed sweep values within `2..=34`.
pub fn printed_value_transitions() -> Vec<f64> {
    SWEEP
        .windows(2)
        .filter(|p| ordering_of(&p[0].1) != ordering_of(&p[1].1))
        .map(|p| p[1].0)
        .collect()
}

fn cell(c: &Cell) -> Fnnn {
    Fnnn::new(c[0], c[1], c[2], c[3], c[4]).expect("valid rating")
}

/// The raw decision matrix with its attribute weights.
pub fn decision_matrix() -> DecisionMatrix {
    DecisionMatrix::new(
        ALTERNATIVES.iter().map(|s| s.to_string()).collect(),
        ATTRIBUTES.iter().map(|s| s.to_string()).collect(),
        RAW.iter().flatten().map(cell).collect(),
        WeightVector::new(WEIGHTS.to_vec()).expect("weights sum to 1"),
    )
    .expect("well-formed matrix")
}
