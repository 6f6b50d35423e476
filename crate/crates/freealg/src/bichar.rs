use crate::error::FreeAlgError;
use crate::word::{DegreeVector, Word};
use atlas_ring::{LaurentPoly, Monomial, VarSet};

/// Which family of quantification parameters is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// p_{i,i+1} = q⁻¹, p_{i+1,i} = 1, all other off-diagonal values 1.
    #[default]
    OneParameter,
    /// p_{i,i+1} = t_i, p_{i+1,i} = q⁻¹ t_i⁻¹ with independent t_i.
    Multiparameter,
}

/// The bicharacter p(i,j) = χ^i(g_j) on letters, as a table of unit
/// Laurent monomials.
///
/// Constructors check p_ii = q^e, p_{i,i+1} p_{i+1,i} = q^{−e} and
/// p_ij p_ji = 1 for |i−j| > 1, where e = 1 for the positive wing and
/// e = −1 for the negative one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    n: usize,
    mode: Mode,
    table: Vec<Monomial>,
}

impl Bicharacter {
    pub fn new(n: usize, mode: Mode) -> Self {
        let mut table = vec![Monomial::one(); n * n];
        for i in 1..=n {
            table[(i - 1) * n + (i - 1)] = Monomial::var_pow(0, 1);
            if i < n {
                let (up, down) = match mode {
                    Mode::OneParameter => (Monomial::var_pow(0, -1), Monomial::one()),
                    Mode::Multiparameter => {
                        let t = Monomial::var_pow(i as u8, 1);
                        (t.clone(), Monomial::var_pow(0, -1).mul(&t.inv()))
                    }
                };
                table[(i - 1) * n + i] = up;
                table[i * n + (i - 1)] = down;
            }
        }
        Bicharacter::from_table(n, mode, table).expect("standard parameters satisfy the relations")
    }

    pub fn one_parameter(n: usize) -> Self {
        Self::new(n, Mode::OneParameter)
    }

    pub fn multiparameter(n: usize) -> Self {
        Self::new(n, Mode::Multiparameter)
    }

    /// Build from an explicit row-major table, checking the relations.
    pub fn from_table(n: usize, mode: Mode, table: Vec<Monomial>) -> Result<Self, FreeAlgError> {
        if n == 0 || n > 255 || table.len() != n * n {
            return Err(FreeAlgError::Bicharacter(format!("table of size {} for rank {n}", table.len())));
        }
        let b = Bicharacter { n, mode, table };
        let e = b.p_mono(1, 1).exp(0);
        if e.abs() != 1 {
            return Err(FreeAlgError::Bicharacter("p_11 must be q or q^-1".into()));
        }
        let qe = Monomial::var_pow(0, e);
        for i in 1..=n {
            for j in 1..=n {
                let prod = b.p_mono(i, j).mul(b.p_mono(j, i));
                let ok = if i == j {
                    *b.p_mono(i, i) == qe
                } else if i.abs_diff(j) == 1 {
                    prod == qe.inv()
                } else {
                    prod.is_one()
                };
                if !ok {
                    return Err(FreeAlgError::Bicharacter(format!("relation fails at ({i},{j})")));
                }
            }
        }
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The variables the coefficients live in.
    pub fn var_set(&self) -> VarSet {
        match self.mode {
            Mode::OneParameter => VarSet::single(),
            Mode::Multiparameter => VarSet::multiparameter(self.n),
        }
    }

    /// p(i, j) as a monomial (1-based letters).
    pub fn p_mono(&self, i: usize, j: usize) -> &Monomial {
        &self.table[(i - 1) * self.n + (j - 1)]
    }

    /// p(i, j) as a Laurent polynomial.
    pub fn p(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly::monomial(self.p_mono(i, j).clone())
    }

    /// p(u, v) = ∏_{a ∈ u, b ∈ v} p(a, b) for degrees.
    pub fn p_deg(&self, u: &DegreeVector, v: &DegreeVector) -> Monomial {
        let mut acc = Monomial::one();
        for (i, &a) in u.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.0.iter().enumerate() {
                if b != 0 {
                    acc = acc.mul(&self.p_mono(i + 1, j + 1).pow((a * b) as i32));
                }
            }
        }
        acc
    }

    /// p(u, v) for words.
    pub fn p_words(&self, u: &Word, v: &Word) -> Monomial {
        self.p_deg(&u.degree(self.n), &v.degree(self.n))
    }

    /// The negative-wing bicharacter p⁻(i, j) = p(j, i)⁻¹.
    pub fn negative(&self) -> Bicharacter {
        let n = self.n;
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                table.push(self.p_mono(j, i).inv());
            }
        }
        Bicharacter::from_table(n, self.mode, table).expect("inverse transpose satisfies the relations")
    }

    /// The bicharacter of the relabelled letters y_i = x_{f(i)}:
    /// p_y(i, j) = p(f(i), f(j)).
    pub fn relabeled(&self, f: impl Fn(usize) -> usize) -> Result<Bicharacter, FreeAlgError> {
        let n = self.n;
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                table.push(self.p_mono(f(i), f(j)).clone());
            }
        }
        Bicharacter::from_table(n, self.mode, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_in_both_modes() {
        for mode in [Mode::OneParameter, Mode::Multiparameter] {
            let b = Bicharacter::new(4, mode);
            assert_eq!(b.p(2, 2).to_string(), "q");
            assert_eq!((&b.p(1, 3) * &b.p(3, 1)).to_string(), "1");
            assert_eq!((&b.p(2, 3) * &b.p(3, 2)).to_string(), "q^-1");
            let neg = b.negative();
            assert_eq!(neg.p(1, 1).to_string(), "q^-1");
        }
        let m = Bicharacter::multiparameter(3);
        assert_eq!(m.p(1, 2).to_string(), "t1");
        assert_eq!(m.p(3, 2).to_string(), "q^-1*t2^-1");
    }

    #[test]
    fn p_of_an_interval_with_itself_is_q() {
        for mode in [Mode::OneParameter, Mode::Multiparameter] {
            let b = Bicharacter::new(5, mode);
            for k in 1..=5 {
                for m in k..=5 {
                    let d = DegreeVector::interval(5, k, m);
                    assert_eq!(b.p_deg(&d, &d), Monomial::var_pow(0, 1));
                }
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let t = vec![Monomial::one(); 4];
        assert!(Bicharacter::from_table(2, Mode::OneParameter, t).is_err());
    }
}
