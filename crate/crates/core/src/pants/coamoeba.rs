//! Membership in the open zonotope `π·Z_n`, seen on the torus of argument vectors.
//!
//! A point `θ` lies in the image of the interior of `πZ_n` exactly when the
//! angles are not contained in any closed half-circle, which is read off from
//! the largest circular gap between consecutive sorted angles.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoamoebaRegion {
    Interior,
    Boundary,
    Outside,
}

/// Largest gap between circularly consecutive angles, in `[0, 2π]`.
pub fn largest_gap(theta: &[f64]) -> f64 {
    if theta.is_empty() {
        return TAU;
    }
    let mut a: Vec<f64> = theta.iter().map(|t| t.rem_euclid(TAU)).collect();
    a.sort_by(f64::total_cmp);
    let wrap = a[0] + TAU - a[a.len() - 1];
    a.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max)
}

pub fn coamoeba_classify(theta: &[f64], tol: f64) -> CoamoebaRegion {
    let g = largest_gap(theta);
    if g > PI + tol {
        CoamoebaRegion::Outside
    } else if g < PI - tol {
        CoamoebaRegion::Interior
    } else {
        CoamoebaRegion::Boundary
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(coamoeba_classify(&[0.0; 3], 1e-9), CoamoebaRegion::Outside);
        assert_eq!(coamoeba_classify(&[0.0, TAU / 3.0, 2.0 * TAU / 3.0], 1e-9), CoamoebaRegion::Interior);
        assert_eq!(coamoeba_classify(&[PI, 0.0, 0.0], 1e-9), CoamoebaRegion::Boundary);
    }

    #[test]
    fn gap_handles_wraparound() {
        let g = largest_gap(&[-0.1, 0.1, 3.0]);
        assert!((g - (TAU - 3.1)).abs() < 1e-12);
    }
}
