//! Exact inertia (p, q, z) of symmetric integer matrices by congruence
//! diagonalization over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl SymmetricIntMatrix {
    /// Panics if the entries are not square and symmetric.
    #[allow(clippy::needless_range_loop)]
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let d = entries.len();
        for row in &entries {
            assert_eq!(row.len(), d, "matrix must be square");
        }
        for a in 0..d {
            for b in 0..d {
                assert_eq!(entries[a][b], entries[b][a], "matrix must be symmetric");
            }
        }
        SymmetricIntMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Congruence diagonalization with exact rationals. Pivot selection:
/// largest absolute diagonal entry (lowest index on ties). A step with an
/// all-zero diagonal but some off-diagonal entry reduces a hyperbolic
/// 2x2 block, contributing (1, 1, 0); rows of zeros contribute nullity.
pub fn inertia(m: &SymmetricIntMatrix) -> SignatureTriple {
    let d = m.size();
    let mut a: Vec<Vec<BigRational>> = m
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..d).collect();
    let mut triple = SignatureTriple {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !active.is_empty() {
        // Diagonal pivot: largest |a_ii| among active rows.
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .max_by(|&i, &j| {
                a[i][i]
                    .abs()
                    .cmp(&a[j][j].abs())
                    .then(j.cmp(&i)) // prefer the lower index on ties
            });
        if let Some(i) = pivot {
            let piv = a[i][i].clone();
            if piv.is_positive() {
                triple.positive += 1;
            } else {
                triple.negative += 1;
            }
            active.retain(|&k| k != i);
            for &k in &active {
                let factor = &a[k][i] / &piv;
                if factor.is_zero() {
                    continue;
                }
                for &l in &active {
                    let delta = &factor * &a[i][l];
                    a[k][l] = &a[k][l] - delta;
                }
            }
            for &k in &active.clone() {
                a[k][i] = BigRational::zero();
                a[i][k] = BigRational::zero();
            }
            continue;
        }
        // All active diagonal entries are zero: find an off-diagonal
        // entry b = a_ij != 0 and split off the hyperbolic plane on
        // rows i, j.
        let mut hyper = None;
        'search: for (pi, &i) in active.iter().enumerate() {
            for &j in &active[pi + 1..] {
                if !a[i][j].is_zero() {
                    hyper = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = hyper else {
            // Remaining active block is entirely zero.
            triple.zero += active.len();
            break;
        };
        triple.positive += 1;
        triple.negative += 1;
        let b = a[i][j].clone();
        active.retain(|&k| k != i && k != j);
        for &k in &active {
            for &l in &active {
                // Eliminate couplings of rows k, l to the plane {i, j}:
                // x_k -> x_k - (a_kj/b) x_i - (a_ki/b) x_j subtracts
                // (a_ki a_jl + a_kj a_il) / b from a_kl.
                let delta = (&a[k][i] * &a[j][l] + &a[k][j] * &a[i][l]) / &b;
                a[k][l] = &a[k][l] - delta;
            }
        }
        for &k in &active.clone() {
            a[k][i] = BigRational::zero();
            a[i][k] = BigRational::zero();
            a[k][j] = BigRational::zero();
            a[j][k] = BigRational::zero();
        }
    }
    debug_assert_eq!(triple.positive + triple.negative + triple.zero, d);
    triple
}

pub fn signature(m: &SymmetricIntMatrix) -> i64 {
    inertia(m).signature()
}
