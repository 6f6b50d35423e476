use crate::bits::{has, interval, mask_from, mask_to_vec, Mask};
use crate::error::RootError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Glyph set for diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiagramStyle {
    /// `o` white, `*` black.
    #[default]
    Ascii,
    /// `○` white, `●` black.
    Unicode,
}

/// A descriptor (k, m, S) of the PBW generator Ψ^S(k,m).  Only S ∩ [k, m−1]
/// matters; the raw set is kept so listings can show the full T_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenDesc {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub s: Mask,
}

impl GenDesc {
    pub fn new(n: usize, k: usize, m: usize, s: Mask) -> Result<Self, RootError> {
        if n == 0 || n > 63 {
            return Err(RootError::BadRank(n));
        }
        if !(1 <= k && k <= m && m <= n) {
            return Err(RootError::BadDescriptor { n, k, m });
        }
        Ok(GenDesc { n, k, m, s })
    }

    /// Build from a list of set elements.
    pub fn from_list(n: usize, k: usize, m: usize, s: &[usize]) -> Result<Self, RootError> {
        Self::new(n, k, m, mask_from(s.iter().copied().filter(|&x| x < 64)))
    }

    pub(crate) fn new_unchecked(n: usize, k: usize, m: usize, s: Mask) -> Self {
        GenDesc { n, k, m, s }
    }

    /// S ∩ [k, m−1].
    pub fn s_eff(&self) -> Mask {
        self.s & interval(self.k as i64, self.m as i64 - 1)
    }

    /// The same descriptor with S replaced by S ∩ [k, m−1].
    pub fn normalized(&self) -> GenDesc {
        GenDesc { s: self.s_eff(), ..*self }
    }

    /// s_1 < … < s_r, the elements of S ∩ [k, m−1].
    pub fn cuts(&self) -> Vec<usize> {
        mask_to_vec(self.s_eff())
    }

    /// S_circle = (S ∩ [k,m−1]) ∪ {k−1}.
    pub fn s_circle(&self) -> Mask {
        self.s_eff() | (1 << (self.k - 1))
    }

    /// S_bullet = (S ∩ [k,m−1]) ∪ {m}.
    pub fn s_bullet(&self) -> Mask {
        self.s_eff() | (1 << self.m)
    }

    /// Complement of S in [k, m−1].
    pub fn complement(&self) -> GenDesc {
        GenDesc {
            s: interval(self.k as i64, self.m as i64 - 1) & !self.s_eff(),
            ..*self
        }
    }

    /// The descriptor Ψ^S(a, b) for a sub-interval, same S.
    pub fn sub(&self, a: usize, b: usize) -> GenDesc {
        debug_assert!(1 <= a && a <= b && b <= self.n);
        GenDesc { k: a, m: b, ..*self }
    }

    /// Length m − k + 1 of the degree [k:m].
    pub fn len(&self) -> usize {
        self.m - self.k + 1
    }

    /// Always false; a descriptor has at least one letter.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The continuous pieces of the piecewise word
    /// u^S(k,m) = u(1+s_r, m) u(1+s_{r−1}, s_r) ⋯ u(k, s_1), as `(a, b)`
    /// intervals in that order.
    pub fn pieces(&self) -> Vec<(usize, usize)> {
        let cuts = self.cuts();
        let mut bounds = vec![self.k - 1];
        bounds.extend(cuts);
        bounds.push(self.m);
        (0..bounds.len() - 1)
            .rev()
            .map(|i| (bounds[i] + 1, bounds[i + 1]))
            .collect()
    }

    /// The piecewise word u^S(k,m) as letter indices.
    pub fn piecewise_word(&self) -> Vec<usize> {
        self.pieces().into_iter().flat_map(|(a, b)| a..=b).collect()
    }

    /// (k,m)-entrances: {s ∈ S_bullet : s = k or s − 1 ∉ S}.
    pub fn entrances(&self) -> Mask {
        let se = self.s_eff();
        let mut out = 0;
        for s in mask_to_vec(self.s_bullet()) {
            if s == self.k || !has(se, s - 1) {
                out |= 1 << s;
            }
        }
        out
    }

    /// The decoding map (k, m, S) ↦ (φ(m), φ(k), [φ(m), φ(k)−1] ∖ (φ(S)−1))
    /// with φ(i) = n − i + 1.  Ψ of the result, written in the relabeled
    /// letters y_i = x_{φ(i)}, is proportional to Ψ of the input.
    pub fn decode(&self) -> GenDesc {
        let n = self.n;
        let phi = |i: usize| n + 1 - i;
        let (k2, m2) = (phi(self.m), phi(self.k));
        let shifted = mask_from(self.cuts().into_iter().map(|s| phi(s) - 1));
        let s2 = interval(k2 as i64, m2 as i64 - 1) & !shifted;
        GenDesc { n, k: k2, m: m2, s: s2 }
    }

    /// Two-row diagram: labels k−1 … m over the points; k−1 is white, m is
    /// black and an intermediate point i is black iff i ∈ S.
    pub fn diagram(&self, style: DiagramStyle) -> String {
        let (white, black) = match style {
            DiagramStyle::Ascii => ("o", "*"),
            DiagramStyle::Unicode => ("○", "●"),
        };
        let se = self.s_eff();
        let mut labels = Vec::new();
        let mut points = Vec::new();
        for i in (self.k - 1)..=self.m {
            let label = i.to_string();
            let black_point = i == self.m || (i >= self.k && has(se, i));
            let glyph = if black_point { black } else { white };
            let width = label.len();
            points.push(format!("{glyph:<width$}"));
            labels.push(label);
        }
        format!("{}\n{}", labels.join(" "), points.join(" "))
    }

    /// Just the point row of the diagram.
    pub fn points(&self, style: DiagramStyle) -> String {
        self.diagram(style).lines().nth(1).unwrap_or_default().to_string()
    }
}

impl fmt::Display for GenDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.cuts().iter().map(|x| x.to_string()).collect();
        write!(f, "Psi^{{{}}}({},{})", s.join(","), self.k, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize, m: usize, s: &[usize]) -> GenDesc {
        GenDesc::from_list(3, k, m, s).unwrap()
    }

    #[test]
    fn diagrams() {
        assert_eq!(g(1, 3, &[]).diagram(DiagramStyle::Ascii), "0 1 2 3\no o o *");
        assert_eq!(g(1, 3, &[1, 2]).points(DiagramStyle::Ascii), "o * * *");
        assert_eq!(g(2, 2, &[]).diagram(DiagramStyle::Ascii), "1 2\no *");
        assert_eq!(g(1, 3, &[2]).points(DiagramStyle::Unicode), "○ ○ ● ●");
    }

    #[test]
    fn entrances_follow_definition() {
        assert_eq!(mask_to_vec(g(1, 3, &[2]).entrances()), vec![2]);
        assert_eq!(mask_to_vec(g(1, 3, &[]).entrances()), vec![3]);
        assert_eq!(mask_to_vec(g(2, 2, &[]).entrances()), vec![2]);
        assert_eq!(mask_to_vec(g(1, 3, &[1, 2]).entrances()), vec![1]);
    }

    #[test]
    fn pieces_and_words() {
        assert_eq!(g(1, 3, &[2]).pieces(), vec![(3, 3), (1, 2)]);
        assert_eq!(g(1, 3, &[1, 2]).piecewise_word(), vec![3, 2, 1]);
        assert_eq!(g(1, 3, &[]).piecewise_word(), vec![1, 2, 3]);
        assert_eq!(g(1, 3, &[1]).piecewise_word(), vec![2, 3, 1]);
    }

    #[test]
    fn decode_examples_and_involution() {
        let n = 4;
        let d = GenDesc::from_list(n, 1, n, &[]).unwrap().decode();
        assert_eq!((d.k, d.m, d.cuts()), (1, n, vec![1, 2, 3]));
        assert_eq!(g(1, 3, &[2]).decode().normalized(), g(1, 3, &[2]));
        for k in 1..=n {
            for m in k..=n {
                for s in 0..(1u64 << n) {
                    let x = GenDesc::new(n, k, m, s << 1).unwrap();
                    assert_eq!(x.decode().decode(), x.normalized());
                }
            }
        }
    }
}
