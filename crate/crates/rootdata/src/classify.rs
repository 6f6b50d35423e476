use crate::bits::{has, interval, Mask};
use crate::error::RootError;
use crate::gendesc::GenDesc;
use crate::rt::{build_rt, RTProfile};
use crate::theta::{enumerate_theta, RootSequence};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A formal product g_{i_1} g_{i_2} ⋯ of group-like generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupWord(pub Vec<usize>);

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "g{i}")?;
        }
        Ok(())
    }
}

/// A homogeneous subalgebra is a Hopf subalgebra iff every θ_k ≤ 1.
pub fn is_hopf(theta: &RootSequence) -> bool {
    theta.values().iter().all(|&t| t <= 1)
}

/// {j : j ∈ T_j}: the letters x_j generating the maximal Hopf subalgebra
/// over the group algebra.
pub fn max_hopf(p: &RTProfile) -> Mask {
    (1..=p.n()).filter(|&j| has(p.t(j), j)).fold(0, |m, j| m | (1 << j))
}

/// The set π = {j : j ∈ T_j}; on ad_r-invariant profiles this identifies
/// the subalgebra as K(π).
pub fn kpi_of(p: &RTProfile) -> Mask {
    max_hopf(p)
}

/// ad_r-invariance: every T_k equals [j(k), n] with j(k) = min{j ≥ k : j ∈ T_j},
/// and T_k = ∅ when no such j exists.
pub fn is_adr_invariant(p: &RTProfile) -> bool {
    let n = p.n();
    let pi = kpi_of(p);
    (1..=n).all(|k| {
        let above = pi & interval(k as i64, n as i64);
        let expected = if above == 0 {
            0
        } else {
            interval(above.trailing_zeros() as i64, n as i64)
        };
        p.t(k) == expected
    })
}

/// The unique ad_r-invariant root sequence with the given π ⊆ [1, n].
pub fn theta_of_kpi(n: usize, pi: Mask) -> Result<RootSequence, RootError> {
    if n == 0 || n > 63 {
        return Err(RootError::BadRank(n));
    }
    enumerate_theta(n)
        .find(|th| {
            let p = build_rt(th);
            is_adr_invariant(&p) && kpi_of(&p) == pi
        })
        .ok_or(RootError::NoInvariantTheta)
}

/// Generators g_k⋯g_m^{-1}·Ψ^{T_k}(k,m) of the one-sided variant, one per
/// PBW generator, as (group word, descriptor) pairs.
pub fn u1_descriptors(p: &RTProfile) -> Vec<(GroupWord, GenDesc)> {
    p.pbw_generators()
        .into_iter()
        .map(|d| (GroupWord((d.k..=d.m).collect()), d))
        .collect()
}
