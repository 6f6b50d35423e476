use crate::bits::{interval, Mask};
use crate::error::RootError;
use crate::rt::RTProfile;

/// How one cell (k, i) of the pair condition is satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellVerdict {
    /// sup A < inf B.
    Cond1,
    /// Only the diagonal condition holds.
    Cond2,
    Fail,
}

/// Per-cell outcome of [`cond_pair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub holds: bool,
    /// `cells[(k−1)·n + (i−1)]` is the verdict at (k, i).
    pub cells: Vec<CellVerdict>,
    pub n: usize,
}

impl PairReport {
    pub fn cell(&self, k: usize, i: usize) -> CellVerdict {
        self.cells[(k - 1) * self.n + (i - 1)]
    }

    /// The first failing cell in row-major order.
    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .position(|&c| c == CellVerdict::Fail)
            .map(|p| (p / self.n + 1, p % self.n + 1))
    }
}

/// Condition 1 for one cell, on raw row data: T_k, θ̃_k for the positive
/// profile and T'_i, θ̃'_i for the negative one.
#[inline]
pub(crate) fn cell_cond1(k: usize, tk: Mask, ttk: i64, i: usize, ti: Mask, tti: i64) -> bool {
    let hi = ttk.min(tti);
    let a = tk & ti & interval(k.max(i) as i64, hi);
    let b = !tk & !ti & interval((k.max(i) - 1) as i64, hi - 1);
    if a == 0 || b == 0 {
        return true;
    }
    // sup A < inf B
    (63 - a.leading_zeros()) < b.trailing_zeros()
}

/// Condition 2 for the diagonal cell (k, k): equal θ-values and, on
/// [k, θ̃_k), no point in both T-sets and no point outside both.
#[inline]
pub(crate) fn cell_cond2(k: usize, tk: Mask, ttk: i64, tk2: Mask, ttk2: i64) -> bool {
    if ttk != ttk2 {
        return false;
    }
    let range = interval(k as i64, ttk - 1);
    (tk & tk2 & range) == 0 && (!tk & !tk2 & range) == 0
}

/// The verdict at cell (k, i); condition 1 is reported when both hold.
pub fn cell_verdict(pos: &RTProfile, neg: &RTProfile, k: usize, i: usize) -> CellVerdict {
    let (tk, ttk) = (pos.t(k), pos.theta().tilde(k));
    let (ti, tti) = (neg.t(i), neg.theta().tilde(i));
    if cell_cond1(k, tk, ttk, i, ti, tti) {
        CellVerdict::Cond1
    } else if i == k && cell_cond2(k, tk, ttk, ti, tti) {
        CellVerdict::Cond2
    } else {
        CellVerdict::Fail
    }
}

/// Whether the pair (U⁺_θ, U⁻_θ') satisfies, at every cell (k, i) ∈ [1,n]²,
/// one of the two conditions, with
/// A = {a : max(k,i) ≤ a ≤ min(θ̃_k, θ̃'_i), a ∈ T_k, a ∈ T'_i} and
/// B = {b : max(k−1,i−1) ≤ b < min(θ̃_k, θ̃'_i), b ∉ T_k, b ∉ T'_i}.
pub fn cond_pair(pos: &RTProfile, neg: &RTProfile) -> Result<PairReport, RootError> {
    let n = pos.n();
    if neg.n() != n {
        return Err(RootError::RankMismatch(n, neg.n()));
    }
    let mut cells = Vec::with_capacity(n * n);
    for k in 1..=n {
        for i in 1..=n {
            cells.push(cell_verdict(pos, neg, k, i));
        }
    }
    let holds = cells.iter().all(|&c| c != CellVerdict::Fail);
    Ok(PairReport { holds, cells, n })
}
