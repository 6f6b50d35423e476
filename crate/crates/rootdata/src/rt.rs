use crate::bits::{has, mask_to_vec, Mask};
use crate::gendesc::GenDesc;
use crate::theta::RootSequence;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The degree [k:m] = x_k + … + x_m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootInterval {
    pub k: usize,
    pub m: usize,
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.k, self.m)
    }
}

/// A root sequence together with its sets R_k ⊆ T_k ⊆ [k, n].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RTProfile {
    theta: RootSequence,
    r: Vec<Mask>,
    t: Vec<Mask>,
}

impl RTProfile {
    pub fn theta(&self) -> &RootSequence {
        &self.theta
    }

    pub fn n(&self) -> usize {
        self.theta.n()
    }

    /// R_k as a bitmask (1-based `k`).
    pub fn r(&self, k: usize) -> Mask {
        self.r[k - 1]
    }

    /// T_k as a bitmask (1-based `k`); `t(n+1)` is the empty set.
    pub fn t(&self, k: usize) -> Mask {
        if k > self.n() {
            0
        } else {
            self.t[k - 1]
        }
    }

    pub fn r_sets(&self) -> Vec<Vec<usize>> {
        self.r.iter().map(|&m| mask_to_vec(m)).collect()
    }

    pub fn t_sets(&self) -> Vec<Vec<usize>> {
        self.t.iter().map(|&m| mask_to_vec(m)).collect()
    }

    /// The PBW generator descriptors (k, m, T_k) with m ∈ T_k, ordered by k
    /// then m (Claim 7 of the classification).
    pub fn pbw_generators(&self) -> Vec<GenDesc> {
        let n = self.n();
        let mut out = Vec::new();
        for k in 1..=n {
            for m in mask_to_vec(self.t(k)) {
                out.push(GenDesc::new_unchecked(n, k, m, self.t(k)));
            }
        }
        out
    }

    /// The generators Ψ^{T_k}(k,m) with m ∈ R_k (simple roots; Claim 8).
    pub fn simple_generators(&self) -> Vec<GenDesc> {
        let n = self.n();
        let mut out = Vec::new();
        for k in 1..=n {
            for m in mask_to_vec(self.r(k)) {
                out.push(GenDesc::new_unchecked(n, k, m, self.t(k)));
            }
        }
        out
    }
}

/// Build R_k, T_k by downward induction on k.
///
/// For θ_k = 0: R_k = T_k = ∅.  Otherwise
/// R_k = {θ̃_k} ∪ {m : k ≤ m < θ̃_k, θ̃_k ∉ T_{m+1},
///                  ∀ r ∈ [k, m): m ∈ T_{r+1} ⟺ θ̃_k ∈ T_{r+1}},
/// T_k = R_k ∪ ⋃_{s ∈ R_k, s ≠ n} T_{s+1}.
pub fn build_rt(theta: &RootSequence) -> RTProfile {
    let n = theta.n();
    // t[k] for k in 1..=n+1, index 0 unused
    let mut t = vec![0 as Mask; n + 2];
    let mut r = vec![0 as Mask; n + 2];
    for k in (1..=n).rev() {
        if theta.get(k) == 0 {
            continue;
        }
        let tt = theta.tilde(k) as usize;
        let mut rk: Mask = 1 << tt;
        for m in k..tt {
            if has(t[m + 1], tt) {
                continue;
            }
            if (k..m).all(|rr| has(t[rr + 1], m) == has(t[rr + 1], tt)) {
                rk |= 1 << m;
            }
        }
        let mut tk = rk;
        for s in mask_to_vec(rk) {
            if s != n {
                tk |= t[s + 1];
            }
        }
        r[k] = rk;
        t[k] = tk;
    }
    RTProfile {
        theta: theta.clone(),
        r: r[1..=n].to_vec(),
        t: t[1..=n].to_vec(),
    }
}

/// All U-roots {[k:m] : m ∈ T_k}.
pub fn roots_of(p: &RTProfile) -> Vec<RootInterval> {
    (1..=p.n())
        .flat_map(|k| mask_to_vec(p.t(k)).into_iter().map(move |m| RootInterval { k, m }))
        .collect()
}

/// Simple U-roots {[k:m] : m ∈ R_k}.
pub fn simple_roots_of(p: &RTProfile) -> Vec<RootInterval> {
    (1..=p.n())
        .flat_map(|k| mask_to_vec(p.r(k)).into_iter().map(move |m| RootInterval { k, m }))
        .collect()
}
