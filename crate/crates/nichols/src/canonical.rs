use atlas_freealg::{FreeElement, Word};
use atlas_ring::{LaurentPoly, SparseVec};
use std::fmt;
use std::ops::{Add, Sub};

/// An element of the quantum shuffle algebra: the Ω-image of an element of
/// the free algebra.  Two free elements have equal images iff they are
/// equal in U_q⁺(sl_{n+1}).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalElement(FreeElement);

impl CanonicalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit (the empty tensor word).
    pub fn one() -> Self {
        CanonicalElement(FreeElement::one())
    }

    /// Wrap a map word → coefficient that is already a shuffle-algebra
    /// element.
    pub fn from_raw(e: FreeElement) -> Self {
        CanonicalElement(e)
    }

    pub fn as_raw(&self) -> &FreeElement {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.0.terms()
    }

    pub fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.0.coeff(w)
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        self.0.add_term(w, c);
    }

    pub fn add_scaled(&mut self, o: &CanonicalElement, c: &LaurentPoly) {
        self.0.add_scaled(&o.0, c);
    }

    pub fn scale(&self, c: &LaurentPoly) -> CanonicalElement {
        CanonicalElement(self.0.scale(c))
    }

    pub fn is_proportional(&self, o: &CanonicalElement) -> bool {
        self.0.is_proportional(&o.0)
    }

    /// (α, β) with β·self = α·other, when proportional and nonzero.
    pub fn ratio(&self, o: &CanonicalElement) -> Option<(LaurentPoly, LaurentPoly)> {
        self.0.ratio(&o.0)
    }

    pub fn to_sparse(&self) -> SparseVec<Word> {
        self.0.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    pub fn from_sparse(v: &SparseVec<Word>) -> Self {
        CanonicalElement(FreeElement::from_terms(v.iter().map(|(w, c)| (w.clone(), c.clone()))))
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for &CanonicalElement {
    type Output = CanonicalElement;
    fn add(self, rhs: &CanonicalElement) -> CanonicalElement {
        CanonicalElement(&self.0 + &rhs.0)
    }
}

impl Sub for &CanonicalElement {
    type Output = CanonicalElement;
    fn sub(self, rhs: &CanonicalElement) -> CanonicalElement {
        CanonicalElement(&self.0 - &rhs.0)
    }
}
