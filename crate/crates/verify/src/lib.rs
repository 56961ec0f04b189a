//! Independent oracles and seeded samplers for the acceptance run.

use pants_core::lattice::SubsetK;
use pants_core::pants::CoamoebaRegion;
use pants_core::weyl::{bigraded_basis, Monomial, OperatorElement};
use pants_core::Rational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = rng.gen_range(-9..=9);
    if num == 0 {
        num = 1;
    }
    Rational::new(num, rng.gen_range(1..=5))
}

pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize) -> OperatorElement {
    let m = n + 2;
    let a: Vec<u16> = (0..m).map(|_| rng.gen_range(0..3)).collect();
    let s = SubsetK(rng.gen_range(0..1u32 << m));
    let t = SubsetK(rng.gen_range(0..1u32 << m));
    let seed = Monomial::new(&a, s, t);
    let basis = bigraded_basis(&seed.weight(n), seed.scaled_degree(n), n);
    // a bigraded piece can hold both parities
    let parity = seed.parity();
    let same: Vec<Monomial> = basis.into_iter().filter(|b| b.parity() == parity).collect();
    let mut x = OperatorElement::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let b = same[rng.gen_range(0..same.len())];
        x.add_term(b, &random_rational(rng));
    }
    x
}

pub fn random_sphere_point(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mean = v.iter().sum::<f64>() / m as f64;
        let v: Vec<f64> = v.iter().map(|x| x - mean).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

pub fn random_target(rng: &mut ChaCha8Rng, m: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..m - 1).map(|_| random_rational(rng)).collect();
    let s: Rational = v.iter().sum();
    v.push(-s);
    v
}

/// `0 ∈ conv{e^{iθ_j}}` by testing, for each input direction, whether the line through it bounds all points.
pub fn hull_oracle(theta: &[f64]) -> CoamoebaRegion {
    let eps = 1e-9;
    let pts: Vec<(f64, f64)> = theta.iter().map(|t| (t.cos(), t.sin())).collect();
    for &(ux, uy) in &pts {
        let cross: Vec<f64> = pts.iter().map(|&(vx, vy)| ux * vy - uy * vx).collect();
        let one_side = cross.iter().all(|&c| c >= -eps) || cross.iter().all(|&c| c <= eps);
        if one_side {
            let antipodal = pts.iter().any(|&(vx, vy)| (vx + ux).abs() < eps && (vy + uy).abs() < eps);
            return if antipodal { CoamoebaRegion::Boundary } else { CoamoebaRegion::Outside };
        }
    }
    CoamoebaRegion::Interior
}
