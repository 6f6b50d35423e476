use crate::bichar::Bicharacter;
use crate::error::FreeAlgError;
use crate::word::{DegreeVector, Word};
use atlas_ring::{LaurentPoly, Monomial};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A finite linear combination of words with Laurent coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn letter(i: usize) -> Self {
        Self::from_word(Word::letter(i))
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Word, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, LaurentPoly)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    /// Add `c·w` in place.
    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Add `c·other` in place.
    pub fn add_scaled(&mut self, other: &FreeElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(c * x));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> FreeElement {
        let mut e = FreeElement::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn scale_mono(&self, m: &Monomial) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.shift(m))).collect(),
        }
    }

    /// The common degree of all words, `None` for zero.
    pub fn degree(&self, n: usize) -> Result<Option<DegreeVector>, FreeAlgError> {
        let mut it = self.terms.keys().map(|w| w.degree(n));
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(FreeAlgError::NotHomogeneous)
        }
    }

    /// Split into homogeneous components.
    pub fn components(&self, n: usize) -> BTreeMap<DegreeVector, FreeElement> {
        let mut out: BTreeMap<DegreeVector, FreeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree(n)).or_default().add_term(w.clone(), c);
        }
        out
    }

    /// Largest letter index used, 0 for scalars.
    pub fn max_letter(&self) -> usize {
        self.terms.keys().flat_map(|w| w.letters()).max().unwrap_or(0)
    }

    /// Apply a letter map to every word.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> FreeElement {
        FreeElement::from_terms(self.terms.iter().map(|(w, c)| (w.relabel(&f), c.clone())))
    }

    /// Projective equality: a ∼ b iff the supports coincide and
    /// a_w·b_v = a_v·b_w for all words (the zero element is only
    /// proportional to zero).
    pub fn is_proportional(&self, other: &FreeElement) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let Some((w0, a0)) = self.terms.iter().next() else {
            return true;
        };
        let Some(b0) = other.terms.get(w0) else {
            return false;
        };
        self.terms.iter().all(|(w, a)| match other.terms.get(w) {
            Some(b) => a * b0 == a0 * b,
            None => false,
        })
    }

    /// The scalar pair (α, β) with β·self = α·other when the two are
    /// proportional and nonzero.
    pub fn ratio(&self, other: &FreeElement) -> Option<(LaurentPoly, LaurentPoly)> {
        if !self.is_proportional(other) || self.is_zero() {
            return None;
        }
        let (w0, a0) = self.terms.iter().next()?;
        Some((a0.clone(), other.terms[w0].clone()))
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let (neg, c) = match c.terms() {
                [(_, r)] if r < &atlas_ring::rat(0, 1) => (true, -c),
                _ => (false, c.clone()),
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else if c.num_terms() == 1 {
                write!(f, "{c}*{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut e = self.clone();
        e.add_scaled(rhs, &LaurentPoly::one());
        e
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut e = self.clone();
        e.add_scaled(rhs, &LaurentPoly::from_int(-1));
        e
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Concatenation product.
impl Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        let mut e = FreeElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                e.add_term(u.concat(v), &(a * b));
            }
        }
        e
    }
}

impl Add for FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: FreeElement) -> FreeElement {
        &self + &rhs
    }
}

impl Sub for FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: FreeElement) -> FreeElement {
        &self - &rhs
    }
}

impl Mul for FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: FreeElement) -> FreeElement {
        &self * &rhs
    }
}

/// p(u, v) for homogeneous elements (1 when either is zero).
pub fn p_of(b: &Bicharacter, u: &FreeElement, v: &FreeElement) -> Result<LaurentPoly, FreeAlgError> {
    let n = b.n();
    match (u.degree(n)?, v.degree(n)?) {
        (Some(du), Some(dv)) => Ok(LaurentPoly::monomial(b.p_deg(&du, &dv))),
        _ => Ok(LaurentPoly::one()),
    }
}

/// The skew bracket [u, v] = uv − p(u,v)·vu of homogeneous elements.
pub fn skew_bracket(b: &Bicharacter, u: &FreeElement, v: &FreeElement) -> Result<FreeElement, FreeAlgError> {
    let n = b.n();
    let (Some(du), Some(dv)) = (u.degree(n)?, v.degree(n)?) else {
        return Ok(FreeElement::zero());
    };
    let p = b.p_deg(&du, &dv);
    let mut e = u * v;
    e.add_scaled(&(v * u), &-LaurentPoly::monomial(p));
    Ok(e)
}
