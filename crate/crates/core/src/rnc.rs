//! The degree-`n` rational curve `u(z)` in `ℙ^{n+1}` with components
//! `u_k(z) = (n+1)/(z − ν_k) − Σ_{j≠k} 1/(z − ν_j)`, which passes through
//! `p_{j} = [−1 : … : n+1 : … : −1]` at `z = ν_j` and through `p_φ` at `z = 0`.
//!
//! Clearing denominators by `Π_j (z − ν_j)` gives polynomial components
//! `P_k(z) = (n+1)Π_{j≠k}(z − ν_j) − Σ_{l≠k} Π_{j≠l}(z − ν_j)`.

use serde::Serialize;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RncError {
    #[error("target has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("target entries must sum to zero")]
    NonzeroSum,
    #[error("degenerate target: {0}")]
    DegenerateTarget(String),
    #[error("could not isolate the real roots of component {component}")]
    RootIsolationFailure { component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveData {
    pub n: usize,
    pub nodes: Vec<Rational>,
    pub target: Vec<Rational>,
}

/// The solution of `((n+2)I − J) x = p_φ` with `Σx = 0`, namely `x = p_φ/(n+2)`.
pub fn gauge_solution(n: usize, pphi: &[Rational]) -> Result<Vec<Rational>, RncError> {
    let m = n + 2;
    if pphi.len() != m {
        return Err(RncError::WrongLength { expected: m, got: pphi.len() });
    }
    if !pphi.iter().sum::<Rational>().is_zero() {
        return Err(RncError::NonzeroSum);
    }
    let scale = Rational::new(1, m as i64);
    Ok(pphi.iter().map(|p| p * &scale).collect())
}

/// `M x = p_φ` for `M = (n+2)I − J`.
pub fn satisfies_system(x: &[Rational], pphi: &[Rational]) -> bool {
    let m = Rational::from_integer(x.len() as i64);
    let total: Rational = x.iter().sum();
    x.len() == pphi.len() && x.iter().zip(pphi).all(|(xi, p)| xi * &m - &total == *p)
}

/// Gauge-fixed solve followed by `ν_j = 1/x_j`.
pub fn solve_nodes(n: usize, pphi: &[Rational]) -> Result<CurveData, RncError> {
    let x = gauge_solution(n, pphi)?;
    let mut nodes = Vec::with_capacity(x.len());
    for (j, xj) in x.iter().enumerate() {
        if xj.is_zero() {
            return Err(RncError::DegenerateTarget(format!("x_{} = 0, so ν_{} is at infinity", j + 1, j + 1)));
        }
        nodes.push(xj.recip());
    }
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(RncError::DegenerateTarget(format!("ν_{} = ν_{}", i + 1, j + 1)));
            }
        }
    }
    Ok(CurveData { n, nodes, target: pphi.to_vec() })
}

impl CurveData {
    /// `M x = p_φ` for `x_j = 1/ν_j`.
    pub fn back_substitution_holds(&self) -> bool {
        let x: Vec<Rational> = self.nodes.iter().map(Rational::recip).collect();
        satisfies_system(&x, &self.target)
    }

    /// Coefficients (ascending) of the cleared components `P_k`.
    pub fn cleared_polynomials(&self) -> Vec<Poly> {
        let m = self.n + 2;
        let without = |skip: usize| {
            let mut p = Poly::constant(Rational::ONE);
            for (j, nu) in self.nodes.iter().enumerate() {
                if j != skip {
                    p = p.mul_linear(nu);
                }
            }
            p
        };
        let partial: Vec<Poly> = (0..m).map(without).collect();
        (0..m)
            .map(|k| {
                let mut p = partial[k].scale(&Rational::from_integer(self.n as i64 + 1));
                for (l, q) in partial.iter().enumerate() {
                    if l != k {
                        p = p.sub(q);
                    }
                }
                p
            })
            .collect()
    }

    /// Largest degree among the cleared components.
    pub fn cleared_degree(&self) -> Option<usize> {
        self.cleared_polynomials().iter().filter_map(Poly::degree).max()
    }
}

/// `u(z)` as a projective point, via the cleared components (valid at the nodes too).
pub fn curve_eval(c: &CurveData, z: &Rational) -> Vec<Rational> {
    c.cleared_polynomials().iter().map(|p| p.eval(z)).collect()
}

/// `[−1 : … : n+1 : … : −1]` with `n+1` in position `j` (0-based).
pub fn vertex_point(j: usize, n: usize) -> Vec<Rational> {
    (0..n + 2).map(|i| Rational::from_integer(if i == j { n as i64 + 1 } else { -1 })).collect()
}

/// Equality in projective space: both nonzero and all `2×2` minors vanish.
pub fn projectively_equal(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() || a.iter().all(Rational::is_zero) || b.iter().all(Rational::is_zero) {
        return false;
    }
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// Dense univariate polynomial over `ℚ`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trimmed(mut v: Vec<Rational>) -> Poly {
        while v.last().is_some_and(Rational::is_zero) {
            v.pop();
        }
        Poly(v)
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::trimmed(vec![c])
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `self · (z − a)`.
    pub fn mul_linear(&self, a: &Rational) -> Poly {
        let mut out = vec![Rational::ZERO; self.0.len() + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i + 1] = &out[i + 1] + c;
            out[i] = &out[i] - &(c * a);
        }
        Poly::trimmed(out)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::trimmed(self.0.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or(Rational::ZERO);
        Poly::trimmed((0..len).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::ZERO, |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::trimmed(self.0.iter().enumerate().skip(1).map(|(i, c)| c * &Rational::from_integer(i as i64)).collect())
    }

    /// Remainder of division by a nonzero `d`.
    pub fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.0[dd].recip();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] * &lead;
            for (i, c) in d.0.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = &r[idx] - &(&q * c);
            }
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        Poly(r)
    }

    fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain[chain.len() - 1].is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]).scale(&Rational::from_integer(-1));
            chain.push(r);
        }
        chain.pop();
        chain
    }

    /// Strict bound on the absolute value of every root.
    fn root_bound(&self) -> Rational {
        let d = self.degree().unwrap_or(0);
        let lead = self.0[d].abs();
        let max = self.0[..d].iter().map(|c| (c / &lead).abs()).max().unwrap_or(Rational::ZERO);
        max + Rational::ONE
    }
}

fn sign_variations(chain: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.eval(x).signum()).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

const MAX_DEPTH: usize = 200;

/// Disjoint intervals `(a, b]`, each holding exactly one distinct real root of `p`.
fn isolate(p: &Poly) -> Option<Vec<(Rational, Rational)>> {
    if p.degree().unwrap_or(0) == 0 {
        return Some(Vec::new());
    }
    let chain = p.sturm_chain();
    let count = |a: &Rational, b: &Rational| sign_variations(&chain, a) - sign_variations(&chain, b);
    let bound = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, 0usize)];
    let half = Rational::new(1, 2);
    while let Some((a, b, depth)) = stack.pop() {
        match count(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ if depth >= MAX_DEPTH => return None,
            _ => {
                let mut mid = (&a + &b) * &half;
                // keep the split point off the roots so variation counts stay valid
                let mut nudge = (&b - &a) * &Rational::new(1, 7);
                while p.eval(&mid).is_zero() {
                    nudge *= &half;
                    mid = &mid + &nudge;
                }
                stack.push((mid.clone(), b, depth + 1));
                stack.push((a, mid, depth + 1));
            }
        }
    }
    out.sort();
    Some(out)
}

/// Narrows an isolating interval to width `< tol` with float midpoints, keeping
/// an exact sign change at the endpoints.
fn refine(p: &Poly, a: &Rational, b: &Rational, tol: f64) -> Option<f64> {
    if p.eval(b).is_zero() {
        return Some(b.to_f64());
    }
    let sa = p.eval(a).signum();
    let sb = p.eval(b).signum();
    if sa == 0 || sa == sb {
        return None;
    }
    let (mut lo, mut hi) = (a.clone(), b.clone());
    for _ in 0..MAX_DEPTH {
        let (fl, fh) = (lo.to_f64(), hi.to_f64());
        if fh - fl < tol {
            return Some(0.5 * (fl + fh));
        }
        let mid = Rational::from_f64(0.5 * (fl + fh))?;
        if mid <= lo || mid >= hi {
            return Some(0.5 * (fl + fh));
        }
        match p.eval(&mid).signum() {
            0 => return Some(mid.to_f64()),
            s if s == sa => lo = mid,
            _ => hi = mid,
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentCrossings {
    pub component: usize,
    pub roots: Vec<f64>,
    /// `−(n+1)/(z − ν_k)² + Σ_{j≠k} 1/(z − ν_j)²` at each root.
    pub derivatives: Vec<f64>,
    /// Each derivative divided by the sum of the absolute values of its terms.
    pub relative: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingReport {
    pub components: Vec<ComponentCrossings>,
    pub min_derivative: Option<f64>,
    pub min_relative: Option<f64>,
    /// Components whose real-root count differs from `n`.
    pub unexpected_root_counts: Vec<usize>,
}

impl CrossingReport {
    /// Every derivative exceeds `tol` times the size of its terms, so its sign
    /// is not an artifact of rounding or of roots far from the nodes.
    pub fn all_positive(&self, tol: f64) -> bool {
        self.min_relative.is_none_or(|m| m > tol)
    }
}

/// Real zeros of each `u_k` and the derivative of `u_k` there.
pub fn crossing_positivity(c: &CurveData) -> Result<CrossingReport, RncError> {
    let nodes: Vec<f64> = c.nodes.iter().map(Rational::to_f64).collect();
    let mut components = Vec::new();
    let mut unexpected = Vec::new();
    for (k, p) in c.cleared_polynomials().iter().enumerate() {
        let fail = || RncError::RootIsolationFailure { component: k };
        let intervals = isolate(p).ok_or_else(fail)?;
        let mut roots = Vec::with_capacity(intervals.len());
        for (a, b) in &intervals {
            roots.push(refine(p, a, b, 1e-12).ok_or_else(fail)?);
        }
        let mut derivatives = Vec::with_capacity(roots.len());
        let mut relative = Vec::with_capacity(roots.len());
        for &z in &roots {
            let (mut value, mut size) = (0.0, 0.0);
            for (j, nu) in nodes.iter().enumerate() {
                let w = 1.0 / ((z - nu) * (z - nu));
                let term = if j == k { -(c.n as f64 + 1.0) * w } else { w };
                value += term;
                size += term.abs();
            }
            derivatives.push(value);
            relative.push(value / size);
        }
        if roots.len() != c.n {
            unexpected.push(k);
        }
        components.push(ComponentCrossings { component: k, roots, derivatives, relative });
    }
    let min_derivative = components.iter().flat_map(|c| c.derivatives.iter().copied()).reduce(f64::min);
    let min_relative = components.iter().flat_map(|c| c.relative.iter().copied()).reduce(f64::min);
    Ok(CrossingReport { components, min_derivative, min_relative, unexpected_root_counts: unexpected })
}
