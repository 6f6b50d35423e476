use crate::error::RootError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A root sequence θ = (θ_1,…,θ_n) with 0 ≤ θ_k ≤ n−k+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSequence {
    n: usize,
    theta: Vec<usize>,
}

impl RootSequence {
    pub fn new(n: usize, theta: Vec<usize>) -> Result<Self, RootError> {
        if n == 0 || n > 63 {
            return Err(RootError::BadRank(n));
        }
        if theta.len() != n {
            return Err(RootError::BadLength { n, len: theta.len() });
        }
        for (i, &t) in theta.iter().enumerate() {
            let k = i + 1;
            if t > n - k + 1 {
                return Err(RootError::OutOfBounds {
                    k,
                    value: t,
                    max: n - k + 1,
                });
            }
        }
        Ok(RootSequence { n, theta })
    }

    /// The zero sequence (the group algebra itself).
    pub fn zero(n: usize) -> Self {
        RootSequence::new(n, vec![0; n]).expect("zero sequence is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.theta
    }

    /// θ_k for 1-based `k`.
    pub fn get(&self, k: usize) -> usize {
        self.theta[k - 1]
    }

    /// θ̃_k = k + θ_k − 1 (equals k − 1 when θ_k = 0).
    pub fn tilde(&self, k: usize) -> i64 {
        k as i64 + self.theta[k - 1] as i64 - 1
    }
}

impl fmt::Display for RootSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.theta.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All (n+1)! root sequences of rank `n` in lexicographic order.
pub fn enumerate_theta(n: usize) -> impl Iterator<Item = RootSequence> {
    let mut cur: Option<Vec<usize>> = if (1..=63).contains(&n) { Some(vec![0; n]) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // advance like an odometer, last coordinate fastest
        let mut next = out.clone();
        let mut i = n;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            let max = n - i; // θ_{i+1} ≤ n-(i+1)+1
            if next[i] < max {
                next[i] += 1;
                cur = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(RootSequence { n, theta: out })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_theta(2).count(), 6);
        assert_eq!(enumerate_theta(3).count(), 24);
        let v: Vec<_> = enumerate_theta(3).collect();
        let mut s = v.clone();
        s.sort();
        assert_eq!(v, s, "lexicographic order");
        s.dedup();
        assert_eq!(s.len(), 24);
    }

    #[test]
    fn bounds_are_checked() {
        assert!(RootSequence::new(3, vec![4, 0, 0]).is_err());
        assert!(RootSequence::new(3, vec![3, 3, 0]).is_err());
        assert!(RootSequence::new(3, vec![3, 2, 1]).is_ok());
        assert!(RootSequence::new(3, vec![3, 2]).is_err());
    }
}
