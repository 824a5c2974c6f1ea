//! Matrix rank, twice: an exact fraction-free elimination that is
//! authoritative, and a floating-point SVD used only to cross-check it.

use nalgebra::linalg::SVD;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::RankError;
use crate::matrix::RationalMatrix;

/// Which path produced a rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankResult {
    pub rank: usize,
    pub method: RankMethod,
    /// Ratio between the smallest kept and largest discarded singular value;
    /// only the float path sets this.
    pub gap_ratio: Option<f64>,
}

/// Default relative tolerance scale for the float path.
pub const DEFAULT_TOL_SCALE: f64 = 1e-12;
/// Default minimum certified spectral gap for the float path.
pub const DEFAULT_MIN_GAP: f64 = 1e6;

/// Exact rank over ℚ by Bareiss fraction-free Gaussian elimination.
///
/// Denominators are cleared per column first, so the elimination runs on
/// arbitrary-precision integers; the division in the update step is exact by
/// the Bareiss identity, and pivots are chosen as the largest magnitude in
/// the current column to keep entry growth down.
pub fn exact_rank(m: &RationalMatrix) -> RankResult {
    let rank = if m.is_empty() {
        0
    } else {
        bareiss_rank(m)
    };
    RankResult {
        rank,
        method: RankMethod::Exact,
        gap_ratio: None,
    }
}

fn bareiss_rank(m: &RationalMatrix) -> usize {
    let mut a = m.integerized();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0usize;
    let mut prev = BigInt::one();

    for col in 0..cols {
        let pivot_row = (rank..rows)
            .filter(|&r| !a.entry(r, col).is_zero())
            .max_by(|&x, &y| a.entry(x, col).magnitude().cmp(a.entry(y, col).magnitude()));
        let Some(pivot_row) = pivot_row else {
            // No pivot in this column; rank does not grow here.
            continue;
        };
        a.swap_rows(rank, pivot_row);
        let pivot = a.entry(rank, col).clone();
        for r in rank + 1..rows {
            let head = a.entry(r, col).clone();
            for c in col + 1..cols {
                let numer = a.entry(r, c) * &pivot - &head * a.entry(rank, c);
                debug_assert!((&numer % &prev).is_zero(), "Bareiss division must be exact");
                a.data[r * cols + c] = numer / &prev;
            }
            a.data[r * cols + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Numerical rank from the singular value spectrum of the float mirror.
///
/// `rank = #{σᵢ > σ₁·max(rows,cols)·tol_scale}`. The result is only accepted
/// when the spectrum shows a clear gap at the cut (`σ_r/σ_{r+1} ≥ min_gap`);
/// otherwise the float path refuses to certify and returns `AmbiguousRank`,
/// leaving the decision to [`exact_rank`].
pub fn float_rank(
    m: &RationalMatrix,
    tol_scale: f64,
    min_gap: f64,
) -> Result<RankResult, RankError> {
    assert!(tol_scale > 0.0 && min_gap > 0.0);
    if m.is_empty() {
        return Ok(RankResult {
            rank: 0,
            method: RankMethod::Float,
            gap_ratio: Some(f64::INFINITY),
        });
    }

    let svd = SVD::try_new(m.to_f64(), false, false, f64::EPSILON, 0)
        .ok_or(RankError::SvdFailed)?;
    let mut sigma: Vec<f64> = svd.singular_values.iter().copied().collect();
    sigma.sort_by(|x, y| y.total_cmp(x));

    let sigma1 = sigma.first().copied().unwrap_or(0.0);
    let tol = sigma1 * (m.rows().max(m.cols()) as f64) * tol_scale;
    let rank = sigma.iter().take_while(|&&s| s > tol).count();

    let gap_ratio = if rank == sigma.len() || sigma[rank] == 0.0 {
        f64::INFINITY
    } else if rank == 0 {
        // Nothing kept but σ₁ > 0: only certifiable if σ₁ is far below tol.
        tol / sigma1
    } else {
        sigma[rank - 1] / sigma[rank]
    };

    if gap_ratio < min_gap {
        return Err(RankError::AmbiguousRank {
            gap_ratio,
            min_gap,
        });
    }
    Ok(RankResult {
        rank,
        method: RankMethod::Float,
        gap_ratio: Some(gap_ratio),
    })
}

/// [`float_rank`] with the default tolerance and gap settings.
pub fn float_rank_default(m: &RationalMatrix) -> Result<RankResult, RankError> {
    float_rank(m, DEFAULT_TOL_SCALE, DEFAULT_MIN_GAP)
}
