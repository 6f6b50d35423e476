use smallvec::SmallVec;
use std::cmp::Ordering;

/// A Laurent monomial `∏ v_i^{e_i}` stored sparsely as `(variable, exponent)`
/// pairs sorted by variable index, with no zero exponents.
///
/// Variable `0` is `q`; variable `i ≥ 1` is `t_i` (the multiparameter value
/// `t_{i,i+1}`).
///
/// `Ord` is the graded-lexicographic order: total degree first, then the
/// dense exponent vectors compared lexicographically with `q` most
/// significant.  Polynomials list terms from the largest monomial down.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[(u8, i32); 2]>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    /// The single variable `v^e`.
    pub fn var_pow(v: u8, e: i32) -> Self {
        let mut m = SmallVec::new();
        if e != 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    /// Build from arbitrary `(variable, exponent)` pairs; duplicates add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u8, i32)>) -> Self {
        let mut acc = Monomial::one();
        for (v, e) in pairs {
            acc = acc.mul(&Monomial::var_pow(v, e));
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// The `(variable, exponent)` pairs in increasing variable order.
    pub fn pairs(&self) -> &[(u8, i32)] {
        &self.0
    }

    /// Exponent of variable `v` (zero when absent).
    pub fn exp(&self, v: u8) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    /// Product of monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// Inverse monomial (exponents negated).
    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// `self / other`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Integer power.
    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<u8> {
        self.0.last().map(|(v, _)| *v)
    }

    /// Dense-lexicographic comparison (q most significant, larger exponent
    /// wins), ignoring total degree.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let va = a.get(i).map(|p| p.0);
            let vb = b.get(j).map(|p| p.0);
            match (va, vb) {
                (None, None) => return Ordering::Equal,
                (Some(x), Some(y)) if x == y => {
                    match a[i].1.cmp(&b[j].1) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    }
                }
                // variable present in `a` only (or earlier in `a`): compare
                // its exponent against an implicit zero in `b`.
                (Some(x), Some(y)) if x < y => return a[i].1.cmp(&0),
                (Some(_), None) => return a[i].1.cmp(&0),
                _ => return 0.cmp(&b[j].1),
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_cancels_exponents() {
        let a = Monomial::from_pairs([(0, 2), (1, -1)]);
        let b = Monomial::from_pairs([(0, -2), (1, 1)]);
        assert!(a.mul(&b).is_one());
        assert_eq!(a.mul(&a.inv()), Monomial::one());
    }

    #[test]
    fn graded_lex_order() {
        let q2 = Monomial::var_pow(0, 2);
        let one = Monomial::one();
        let qm1 = Monomial::var_pow(0, -1);
        assert!(q2 > one && one > qm1);
        // same total degree: q·t1^-1 vs t1^0 — lex decides on q first
        let a = Monomial::from_pairs([(0, 1), (1, -1)]);
        assert!(a > one);
        let t1 = Monomial::var_pow(1, 1);
        let q = Monomial::var_pow(0, 1);
        assert!(q > t1);
    }
}
