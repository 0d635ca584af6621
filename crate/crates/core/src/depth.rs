//! The depth-graded derivation matrix on double zeta generators of odd
//! weight N, and the Euler-type decomposition rows it comes from.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::periods::dim_cusp_forms;
use crate::rat::{choose, Rat};

/// Index (m, n) with 2m + 2n + 1 = N, m, n >= 1, ordered by ascending m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndex {
    pub m: i64,
    pub n: i64,
}

impl PairIndex {
    pub fn weight(&self) -> i64 {
        2 * self.m + 2 * self.n + 1
    }
}

/// One row of the Euler-type decomposition of zeta(2m+1, 2n): a multiple of
/// zeta(N) plus products zeta(2m1+1) * zeta(2n1).
#[derive(Debug, Clone)]
pub struct DecompRow {
    pub pair: PairIndex,
    pub zeta_n_coeff: BigInt,
    pub product_coeffs: Vec<BigInt>,
}

pub fn check_odd_weight(n: i64) -> Result<()> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidWeight(n));
    }
    Ok(())
}

/// Canonical list of generator pairs for weight N: (1, K-1), (2, K-2), ...
/// where K = (N-1)/2. There are K-1 of them.
pub fn pairs(n: i64) -> Result<Vec<PairIndex>> {
    check_odd_weight(n)?;
    let k = (n - 1) / 2;
    Ok((1..k).map(|m| PairIndex { m, n: k - m }).collect())
}

fn entry(row: &PairIndex, col: &PairIndex) -> BigInt {
    let delta: i64 = if row == col { 1 } else { 0 };
    BigInt::from(delta)
        - choose(2 * col.m as u64, 2 * row.m)
        - choose(2 * col.m as u64, 2 * row.n - 1)
}

/// (K-1) x (K-1) matrix of the depth-lowering derivation: rows indexed by
/// generator pair (m, n), columns by target pair (m1, n1), entry
/// delta - C(2m1, 2m) - C(2m1, 2n-1).
pub fn dmatrix(n: i64) -> Result<QMatrix> {
    let idx = pairs(n)?;
    let rows = idx
        .iter()
        .map(|r| idx.iter().map(|c| Rat::from_integer(entry(r, c))).collect())
        .collect();
    Ok(QMatrix::from_rows(rows))
}

/// Full decomposition rows: zeta(N) coefficient 1 - C(N-1, 2n-1) - C(N-1, 2m)
/// as printed in the source, plus the product coefficients (the dmatrix row).
pub fn decomposition(n: i64) -> Result<Vec<DecompRow>> {
    let idx = pairs(n)?;
    let nn = (n - 1) as u64;
    Ok(idx
        .iter()
        .map(|p| DecompRow {
            pair: *p,
            zeta_n_coeff: BigInt::from(1) - choose(nn, 2 * p.n - 1) - choose(nn, 2 * p.m),
            product_coeffs: idx.iter().map(|c| entry(p, c)).collect(),
        })
        .collect())
}

/// Computed rank of the derivation matrix next to the predicted value
/// (K-1) - dim S_{N-1} - dim S_{N+1}.
pub fn rank_law(n: i64) -> Result<(usize, usize)> {
    let m = dmatrix(n)?;
    let k1 = m.rows();
    let predicted = k1 - dim_cusp_forms(n - 1) - dim_cusp_forms(n + 1);
    Ok((m.rank(), predicted))
}
