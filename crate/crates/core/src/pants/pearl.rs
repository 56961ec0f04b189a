//! Degrees of pearl configurations and the label identity each pearl must satisfy.

use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::lattice::{LatticeVector, SubsetK};

/// `|K|′`: the cardinality, except that `∅` and `[n+2]` both count as `(n+2)/2`.
fn primed_size(k: SubsetK, n: usize) -> Rational {
    if k.is_empty() || k == SubsetK::full(n) {
        Rational::new(n as i64 + 2, 2)
    } else {
        Rational::from_integer(k.len() as i64)
    }
}

/// `2(|K_0|′ − Σ|K_j|′)/(n+2) + k − 1`.
pub fn pearl_degree(k0: SubsetK, inputs: &[SubsetK], n: usize) -> Rational {
    let mut s = primed_size(k0, n);
    for &k in inputs {
        s -= primed_size(k, n);
    }
    s * Rational::new(2, n as i64 + 2) + Rational::from_integer(inputs.len() as i64 - 1)
}

/// One pearl: its flipping-point count, the labels after each flip (1-based), and its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PearlLabel {
    pub k_v: usize,
    pub labels: Vec<Vec<usize>>,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PearlTreeLabeling {
    pub n: usize,
    pub pearls: Vec<PearlLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PearlReport {
    pub pearl: usize,
    pub valid: bool,
    pub problems: Vec<String>,
}

/// Checks `Σ_j e_{K_j} = ((k_v − d_v)/2)·𝟙` componentwise, `d_v ≥ 0` and `k_v ≡ d_v (mod 2)` per pearl.
pub fn validate_pearl_labels(lab: &PearlTreeLabeling) -> Vec<PearlReport> {
    let n = lab.n;
    lab.pearls
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut problems = Vec::new();
            if p.labels.len() != p.k_v {
                problems.push(format!("{} labels for k_v = {}", p.labels.len(), p.k_v));
            }
            if p.degree < 0 {
                problems.push(format!("negative degree {}", p.degree));
            }
            let diff = p.k_v as i64 - p.degree;
            if diff.rem_euclid(2) != 0 {
                problems.push(format!("k_v − d_v = {diff} is odd"));
            }
            let mut sum = LatticeVector::zero(n);
            for l in &p.labels {
                match SubsetK::from_indices(l, n) {
                    Ok(k) => sum = sum.add(&k.indicator(n)),
                    Err(_) => problems.push(format!("label {l:?} is not a subset of [{}]", n + 2)),
                }
            }
            if diff.rem_euclid(2) != 0 || sum != LatticeVector::zero(n).shift(diff / 2) {
                problems.push(format!("Σ e_K = {:?} is not ({diff}/2)·𝟙", sum.0));
            }
            PearlReport { pearl: i, valid: problems.is_empty(), problems }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(idx: &[usize], n: usize) -> SubsetK {
        SubsetK::from_indices(idx, n).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(pearl_degree(s(&[1, 2], 2), &[s(&[1], 2), s(&[2], 2)], 2), Rational::ONE);
        let singles: Vec<SubsetK> = (0..5).map(SubsetK::singleton).collect();
        assert_eq!(pearl_degree(SubsetK::EMPTY, &singles, 3), Rational::from_integer(3));
        assert_eq!(pearl_degree(SubsetK::EMPTY, &[SubsetK::EMPTY, SubsetK::EMPTY], 3), Rational::ZERO);
    }

    #[test]
    fn label_examples() {
        let tri = PearlTreeLabeling {
            n: 1,
            pearls: vec![PearlLabel { k_v: 3, labels: vec![vec![1], vec![2], vec![3]], degree: 1 }],
        };
        assert!(validate_pearl_labels(&tri)[0].valid);
        for d in 0..4 {
            let bad = PearlTreeLabeling {
                n: 1,
                pearls: vec![PearlLabel { k_v: 2, labels: vec![vec![1], vec![1]], degree: d }],
            };
            assert!(!validate_pearl_labels(&bad)[0].valid, "d={d}");
        }
        let empty = PearlTreeLabeling { n: 2, pearls: vec![PearlLabel { k_v: 0, labels: vec![], degree: 0 }] };
        assert!(validate_pearl_labels(&empty)[0].valid);
    }
}
