//! Shared helpers for the integration tests: fixture loading and an
//! independent exact rank computation used as an oracle.
#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use partial_duality::algebra::StructureAlgebra;
use partial_duality::exactla::Scalar;
use partial_duality::scenario::{load_scenario, Scenario};

pub fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(file)
}

pub fn fixture_text(file: &str) -> String {
    std::fs::read_to_string(fixture_path(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn load(file: &str) -> Scenario {
    load_scenario(&fixture_text(file), None).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_q(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(r) => r.clone(),
        Scalar::Prime { .. } => panic!("oracle works over the rationals only"),
    }
}

/// Rank by plain Gaussian elimination over `BigRational`.
pub fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in c..cols {
                    let sub = &factor * &rows[rank][k];
                    rows[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the center, as the solution space of `x b_i = b_i x` for all `i`.
pub fn center_dim(a: &StructureAlgebra) -> usize {
    let d = a.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        // coordinate k of Σ_j x_j (b_j b_i - b_i b_j)
        let mut block = vec![vec![q(0); d]; d];
        for j in 0..d {
            let left = a.mul(&a.basis_vector(j), &a.basis_vector(i));
            let right = a.mul(&a.basis_vector(i), &a.basis_vector(j));
            for k in 0..d {
                block[k][j] = to_q(&left[k]) - to_q(&right[k]);
            }
        }
        rows.extend(block);
    }
    d - rank_q(rows)
}

pub fn is_one(x: &BigRational) -> bool {
    x.is_one()
}
