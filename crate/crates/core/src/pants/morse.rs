//! The Morse function `f(x) = Σ g(x_j)` on the sphere `{Σx = 0, Σx² = 1} ⊂ ℝ^{n+2}`.

use serde::Serialize;

use crate::exact::Rational;
use crate::lattice::SubsetK;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GradientError {
    #[error("g violates condition {condition} at u = {at}")]
    BadG { condition: u8, at: f64 },
    #[error("point is not on the sphere slice (Σx = {sum}, Σx² = {norm2})")]
    NotOnSphere { sum: f64, norm2: f64 },
}

/// `g′(u) = 1` for `|u| ≤ δ` and `δ/2 + (1 − δ/2) sech(c(|u| − δ))` beyond.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GParams {
    pub delta: f64,
    pub c: f64,
}

impl Default for GParams {
    fn default() -> Self {
        GParams { delta: 0.1, c: 40.0 }
    }
}

impl GParams {
    /// Checks conditions 1–5 on a grid of `|u| ≤ 1`, which covers the sphere.
    pub fn new(delta: f64, c: f64) -> Result<Self, GradientError> {
        let p = GParams { delta, c };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<(), GradientError> {
        let d = self.delta;
        if !(d > 0.0 && d < 0.5 && self.c > 0.0) {
            return Err(GradientError::BadG { condition: 0, at: d });
        }
        let steps = 4000;
        let mut prev_tail: Option<f64> = None;
        for i in 0..=steps {
            let u = i as f64 / steps as f64;
            for s in [u, -u] {
                if self.gprime(s) <= 0.0 {
                    return Err(GradientError::BadG { condition: 1, at: s });
                }
            }
            if (self.g(-u) + self.g(u)).abs() > 1e-12 {
                return Err(GradientError::BadG { condition: 2, at: u });
            }
            if u < d && self.g(u) != u {
                return Err(GradientError::BadG { condition: 3, at: u });
            }
            if u > d {
                // compare g′ − δ/2 so the tail is not swallowed by rounding
                let tail = self.tail(u);
                if prev_tail.is_some_and(|p| tail >= p) {
                    return Err(GradientError::BadG { condition: 4, at: u });
                }
                prev_tail = Some(tail);
            }
            if u > 2.0 * d && self.gprime(u) >= d {
                return Err(GradientError::BadG { condition: 5, at: u });
            }
        }
        Ok(())
    }

    fn tail(&self, a: f64) -> f64 {
        (1.0 - self.delta / 2.0) / (self.c * (a - self.delta)).cosh()
    }

    pub fn gprime(&self, u: f64) -> f64 {
        let a = u.abs();
        if a <= self.delta {
            1.0
        } else {
            self.delta / 2.0 + self.tail(a)
        }
    }

    /// Antiderivative of `g′` through the origin, using `∫ sech = gd`.
    pub fn g(&self, u: f64) -> f64 {
        let a = u.abs();
        if a <= self.delta {
            return u;
        }
        let d = self.delta;
        let s = a - d;
        let gd = 2.0 * (self.c * s / 2.0).tanh().atan();
        let v = d + d / 2.0 * s + (1.0 - d / 2.0) * gd / self.c;
        v.copysign(u)
    }

    pub fn f(&self, x: &[f64]) -> f64 {
        x.iter().map(|&v| self.g(v)).sum()
    }

    /// `f_j = g′(x_j) − mean_k g′(x_k)`; the gradient of `Σ g` restricted to `Σx = 0`.
    pub fn components(&self, x: &[f64]) -> Vec<f64> {
        let gp: Vec<f64> = x.iter().map(|&v| self.gprime(v)).collect();
        let mean = gp.iter().sum::<f64>() / gp.len() as f64;
        gp.into_iter().map(|v| v - mean).collect()
    }

    /// Gradient of `f` on the sphere slice: the components with the radial part removed.
    pub fn gradient_f(&self, x: &[f64], tol: f64) -> Result<Vec<f64>, GradientError> {
        let sum: f64 = x.iter().sum();
        let norm2: f64 = x.iter().map(|v| v * v).sum();
        if sum.abs() > tol.max(1e-9) * 1e3 || (norm2 - 1.0).abs() > tol.max(1e-9) * 1e3 {
            return Err(GradientError::NotOnSphere { sum, norm2 });
        }
        let f = self.components(x);
        let radial: f64 = f.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() / norm2;
        Ok(f.iter().zip(x).map(|(a, b)| a - radial * b).collect())
    }
}

/// Smallest `f_k x_j − f_j x_k` over pairs with `x_j > x_k ≥ 0`, or `None` if there are no such pairs.
pub fn fcells_margin(params: &GParams, x: &[f64]) -> Option<f64> {
    let f = params.components(x);
    let mut best: Option<f64> = None;
    for j in 0..x.len() {
        for k in 0..x.len() {
            if x[j] > x[k] && x[k] >= 0.0 {
                let m = f[k] * x[j] - f[j] * x[k];
                best = Some(best.map_or(m, |b: f64| b.min(m)));
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseCriticalPoint {
    pub k: SubsetK,
    /// `−1/|K|` on `K` and `1/|K̄|` elsewhere; not normalized.
    pub coordinates: Vec<Rational>,
    pub index: usize,
}

impl MorseCriticalPoint {
    pub fn normalized(&self) -> Vec<f64> {
        let v: Vec<f64> = self.coordinates.iter().map(Rational::to_f64).collect();
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        v.into_iter().map(|a| a / norm).collect()
    }
}

/// One critical point `p_K` per proper nonempty `K`, with Morse index `n + 1 − |K|`.
pub fn morse_data(n: usize) -> Vec<MorseCriticalPoint> {
    let full = SubsetK::full(n);
    SubsetK::all(n)
        .filter(|k| !k.is_empty() && *k != full)
        .map(|k| {
            let inside = Rational::new(-1, k.len() as i64);
            let outside = Rational::new(1, (n + 2 - k.len()) as i64);
            let coordinates =
                (0..n + 2).map(|j| if k.contains(j) { inside.clone() } else { outside.clone() }).collect();
            MorseCriticalPoint { k, coordinates, index: n + 1 - k.len() }
        })
        .collect()
}

/// Whether `x` lies in the stable manifold `S(p_K)` (argmin set is `K`) and the
/// unstable manifold `U(p_K)` (argmax set is `K̄`), with ties up to `tol`.
pub fn stable_unstable_membership(x: &[f64], k: SubsetK, tol: f64) -> (bool, bool) {
    let n = x.len() - 2;
    let min = x.iter().copied().fold(f64::INFINITY, f64::min);
    let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmin = SubsetK((0..x.len()).filter(|&j| x[j] <= min + tol).fold(0, |a, j| a | 1 << j));
    let argmax = SubsetK((0..x.len()).filter(|&j| x[j] >= max - tol).fold(0, |a, j| a | 1 << j));
    (argmin == k, argmax == k.complement(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_g_is_admissible() {
        let p = GParams::default();
        assert!(GParams::new(p.delta, p.c).is_ok());
        assert!(p.gprime(0.2) < 0.1);
    }

    #[test]
    fn slow_decay_is_rejected() {
        assert!(matches!(GParams::new(0.1, 2.0), Err(GradientError::BadG { condition: 5, .. })));
    }

    #[test]
    fn g_is_antiderivative() {
        let p = GParams::default();
        for &u in &[0.05, 0.15, 0.3, 0.7] {
            let h = 1e-6;
            let num = (p.g(u + h) - p.g(u - h)) / (2.0 * h);
            assert!((num - p.gprime(u)).abs() < 1e-6, "u={u}");
        }
    }

    #[test]
    fn critical_point_example() {
        let pts = morse_data(2);
        let p = pts.iter().find(|p| p.k == SubsetK::singleton(0)).unwrap();
        assert_eq!(p.coordinates[0], Rational::from_integer(-1));
        assert_eq!(p.coordinates[1], Rational::new(1, 3));
        assert_eq!(p.index, 2);
    }

    #[test]
    fn critical_point_is_in_both_cells() {
        for p in morse_data(2) {
            assert_eq!(stable_unstable_membership(&p.normalized(), p.k, 1e-9), (true, true));
        }
    }
}
