use crate::bits::{has, mask_to_vec};
use crate::rt::RTProfile;
use std::fmt;

/// A failure of one of the structural claims about R_k and T_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimViolation {
    /// Claim number (1–4).
    pub claim: u8,
    pub k: usize,
    pub m: usize,
    /// The auxiliary index `s` where the claim quantifies over one.
    pub s: Option<usize>,
}

impl fmt::Display for ClaimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "claim {} fails at k={}, m={}", self.claim, self.k, self.m)?;
        if let Some(s) = self.s {
            write!(f, ", s={s}")?;
        }
        Ok(())
    }
}

/// Positions reachable from `k` by chains k = k_0 < k_1 < … with
/// k_{i+1} − 1 ∈ R_{k_i}; bit `j` of the result stands for position `j`
/// (positions run up to n+1, hence 128 bits).
fn chain_reach(p: &RTProfile, k: usize, memo: &mut [Option<u128>]) -> u128 {
    if let Some(r) = memo[k] {
        return r;
    }
    let mut out: u128 = 1 << k;
    if k <= p.n() {
        for s in mask_to_vec(p.r(k)) {
            out |= chain_reach(p, s + 1, memo);
        }
    }
    memo[k] = Some(out);
    out
}

/// Check Claims 1–4 on a profile and return every violation found.
///
/// 1. m ∈ T_k ⟺ some chain k = k_0 < … < k_r = m+1 has k_{i+1}−1 ∈ R_{k_i};
/// 2. s ∈ T_k, m ∈ T_{s+1} ⟹ m ∈ T_k;
/// 3. m ∈ T_k, k ≤ s < m ⟹ s ∈ T_k or m ∈ T_{s+1};
/// 4. for k ≤ m < θ̃_k: m ∈ T_k ⟺ θ̃_k ∉ T_{m+1}.
pub fn check_claims(p: &RTProfile) -> Vec<ClaimViolation> {
    let n = p.n();
    let mut out = Vec::new();
    let mut memo = vec![None; n + 2];
    for k in 1..=n {
        let reach = chain_reach(p, k, &mut memo);
        for m in k..=n {
            let in_t = has(p.t(k), m);
            if in_t != ((reach >> (m + 1)) & 1 == 1) {
                out.push(ClaimViolation { claim: 1, k, m, s: None });
            }
            for s in k..=n {
                if has(p.t(k), s) && s < n && has(p.t(s + 1), m) && !in_t {
                    out.push(ClaimViolation { claim: 2, k, m, s: Some(s) });
                }
                if in_t && s < m && !has(p.t(k), s) && !has(p.t(s + 1), m) {
                    out.push(ClaimViolation { claim: 3, k, m, s: Some(s) });
                }
            }
        }
        let tt = p.theta().tilde(k);
        for m in k..(tt.max(0) as usize) {
            if has(p.t(k), m) == has(p.t(m + 1), tt as usize) {
                out.push(ClaimViolation { claim: 4, k, m, s: None });
            }
        }
    }
    out
}
