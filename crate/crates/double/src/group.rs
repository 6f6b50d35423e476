use std::fmt;

/// An element of H = G × F, the free abelian group on g_1…g_n, f_1…f_n,
/// stored as its exponent vector (g-exponents first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<i32>);

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement(vec![0; 2 * n])
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn g(n: usize, i: usize) -> Self {
        let mut e = Self::identity(n);
        e.0[i - 1] = 1;
        e
    }

    pub fn f(n: usize, i: usize) -> Self {
        let mut e = Self::identity(n);
        e.0[n + i - 1] = 1;
        e
    }

    /// h_i = g_i f_i.
    pub fn h(n: usize, i: usize) -> Self {
        Self::g(n, i).mul(&Self::f(n, i))
    }

    /// h̄ = h_k h_{k+1} ⋯ h_m (the identity when m < k).
    pub fn h_bar(n: usize, k: usize, m: usize) -> Self {
        (k..=m).fold(Self::identity(n), |acc, i| acc.mul(&Self::h(n, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn inv(&self) -> GroupElement {
        GroupElement(self.0.iter().map(|a| -a).collect())
    }

    pub fn g_exp(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn f_exp(&self, i: usize) -> i32 {
        self.0[self.n() + i - 1]
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let n = self.n();
        for (name, off) in [("g", 0), ("f", n)] {
            for i in 1..=n {
                match self.0[off + i - 1] {
                    0 => {}
                    1 => write!(f, "{name}{i}")?,
                    e => write!(f, "{name}{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law_and_display() {
        let a = GroupElement::h(3, 2);
        assert_eq!(a.to_string(), "g2f2");
        assert!(a.mul(&a.inv()).is_identity());
        assert_eq!(GroupElement::h_bar(2, 1, 2).to_string(), "g1g2f1f2");
        assert_eq!(GroupElement::g(2, 1).mul(&GroupElement::g(2, 1)).to_string(), "g1^2");
        assert_eq!(GroupElement::identity(2).to_string(), "1");
    }
}
