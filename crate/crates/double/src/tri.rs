use crate::group::GroupElement;
use atlas_freealg::Word;
use atlas_ring::LaurentPoly;
use std::collections::BTreeMap;
use std::fmt;

/// A basis key u⁻ · h · u⁺ of the triangular decomposition
/// U⁻ ⊗ k[H] ⊗ U⁺: a negative word (letters x_i⁻), a group element and a
/// positive word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriKey {
    pub neg: Word,
    pub h: GroupElement,
    pub pos: Word,
}

/// A finite linear combination of triangular keys.  Words are free-algebra
/// words; equality in U_q is decided by [`crate::Double::canonical`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangularElement {
    terms: BTreeMap<TriKey, LaurentPoly>,
}

impl TriangularElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(neg: Word, h: GroupElement, pos: Word, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(TriKey { neg, h, pos }, &c);
        e
    }

    /// The unit 1 = (∅, 1, ∅).
    pub fn one(n: usize) -> Self {
        Self::group(GroupElement::identity(n))
    }

    pub fn group(h: GroupElement) -> Self {
        Self::term(Word::empty(), h, Word::empty(), LaurentPoly::one())
    }

    pub fn add_term(&mut self, k: TriKey, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_scaled(&mut self, o: &TriangularElement, c: &LaurentPoly) {
        for (k, x) in &o.terms {
            self.add_term(k.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> TriangularElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TriKey, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Γ-degree D(u⁺) − D(u⁻) of every term, `None` if they differ or the
    /// element is zero.
    pub fn net_degree(&self, n: usize) -> Option<Vec<i32>> {
        let mut out: Option<Vec<i32>> = None;
        for k in self.terms.keys() {
            let mut d = vec![0i32; n];
            for l in k.pos.letters() {
                d[l - 1] += 1;
            }
            for l in k.neg.letters() {
                d[l - 1] -= 1;
            }
            match &out {
                None => out = Some(d),
                Some(o) if *o == d => {}
                Some(_) => return None,
            }
        }
        out
    }
}

impl std::ops::Sub for &TriangularElement {
    type Output = TriangularElement;
    fn sub(self, rhs: &TriangularElement) -> TriangularElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::from_int(-1));
        out
    }
}

impl std::ops::Add for &TriangularElement {
    type Output = TriangularElement;
    fn add(self, rhs: &TriangularElement) -> TriangularElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

fn neg_word(w: &Word) -> String {
    w.letters().map(|l| format!("x{l}-")).collect()
}

impl fmt::Display for TriKey {
    /// The non-trivial parts of `negword · h · posword`, or `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.neg.is_empty() {
            parts.push(neg_word(&self.neg));
        }
        if !self.h.is_identity() {
            parts.push(self.h.to_string());
        }
        if !self.pos.is_empty() {
            parts.push(self.pos.to_string());
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" · "))
    }
}

impl fmt::Display for TriangularElement {
    /// Terms in key order, e.g. `1 - g1f1 + q*x1- · x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let (neg, c) = match c.terms() {
                [(_, r)] if r < &atlas_ring::rat(0, 1) => (true, -c),
                _ => (false, c.clone()),
            };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.is_one() {
                write!(f, "{k}")?;
            } else if c.num_terms() == 1 {
                write!(f, "{c}*{k}")?;
            } else {
                write!(f, "({c})*{k}")?;
            }
        }
        Ok(())
    }
}
