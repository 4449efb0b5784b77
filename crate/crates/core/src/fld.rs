//! Fuzzy local dimension.
//!
//! Around a center node, every node within radius `r` contributes a Gaussian
//! weight `exp(-d^2 / eps^2)` of its hop distance `d`. The fuzzy count at `r`
//! is the mean weight over those nodes (center included), and the fuzzy local
//! dimension is the least-squares slope of `ln(fuzzy count)` against `ln r`
//! for `r = 1..=d_max`.
//!
//! By default the box size `eps` tracks the radius (`eps = r`). Nodes closer
//! to the center then dominate the count, and a node whose neighbourhood
//! thins out as the radius grows can end up with a negative dimension.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceField, NodeId};
use crate::regression::log_log_slope;
use crate::score::{Measure, ScoreVector};

/// Gaussian membership of a node at hop distance `d` for box size `eps`.
pub fn membership(d: u32, eps: f64) -> f64 {
    debug_assert!(eps > 0.0, "box size must be positive");
    let d = d as f64;
    (-(d * d) / (eps * eps)).exp()
}

/// Box-size policy for the membership function.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MembershipParams {
    /// Use this box size at every radius instead of `eps = r`.
    pub fixed_epsilon: Option<f64>,
}

impl MembershipParams {
    pub fn with_fixed_epsilon(eps: f64) -> Result<MembershipParams> {
        if eps > 0.0 && eps.is_finite() {
            Ok(MembershipParams {
                fixed_epsilon: Some(eps),
            })
        } else {
            Err(Error::InvalidArgument(format!(
                "box size must be positive, got {eps}"
            )))
        }
    }

    fn epsilon(&self, r: u32) -> f64 {
        self.fixed_epsilon.unwrap_or(r as f64)
    }
}

/// Fuzzy and crisp node counts around one center.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyCountSeries {
    pub center: NodeId,
    /// `1..=d_max`.
    pub radii: Vec<u32>,
    /// Mean membership of the nodes within each radius, in `(0, 1]`.
    pub counts: Vec<f64>,
    /// Number of nodes within each radius.
    pub real_counts: Vec<usize>,
}

/// Fuzzy count at radius `r` with `eps = r`, returned with the number of
/// nodes it averages over.
pub fn fuzzy_count(field: &DistanceField, r: u32) -> Result<(f64, usize)> {
    fuzzy_count_with(field, r, &MembershipParams::default())
}

pub fn fuzzy_count_with(
    field: &DistanceField,
    r: u32,
    params: &MembershipParams,
) -> Result<(f64, usize)> {
    if r == 0 || r > field.d_max {
        return Err(Error::InvalidArgument(format!(
            "radius {r} outside 1..={} for node {}",
            field.d_max, field.source
        )));
    }
    let eps = params.epsilon(r);
    let shells = &field.shell_counts[..=r as usize];
    // Summing per shell keeps the result a function of the shell counts only.
    let weight: f64 = shells
        .iter()
        .enumerate()
        .map(|(d, &c)| c as f64 * membership(d as u32, eps))
        .sum();
    let real: usize = shells.iter().sum();
    Ok((weight / real as f64, real))
}

pub fn fuzzy_count_series(field: &DistanceField, params: &MembershipParams) -> FuzzyCountSeries {
    let radii: Vec<u32> = (1..=field.d_max).collect();
    let (counts, real_counts) = radii
        .iter()
        .map(|&r| fuzzy_count_with(field, r, params).expect("radius in range"))
        .unzip();
    FuzzyCountSeries {
        center: field.source,
        radii,
        counts,
        real_counts,
    }
}

/// Fuzzy local dimension of every node with `eps = r`.
pub fn fuzzy_local_dimension(fields: &[DistanceField]) -> ScoreVector {
    fuzzy_local_dimension_with(fields, &MembershipParams::default())
}

/// Nodes with `d_max < 2` have too few radii for a slope; they are flagged
/// undefined with score `0.0`.
pub fn fuzzy_local_dimension_with(
    fields: &[DistanceField],
    params: &MembershipParams,
) -> ScoreVector {
    let (scores, undefined) = fields
        .par_iter()
        .map(|f| {
            let series = fuzzy_count_series(f, params);
            match log_log_slope(&series.counts) {
                Some(slope) => (slope, false),
                None => (0.0, true),
            }
        })
        .unzip();
    ScoreVector::new(Measure::Fld, scores, undefined)
}
