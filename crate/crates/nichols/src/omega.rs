use crate::canonical::CanonicalElement;
use atlas_freealg::{Bicharacter, FreeElement, Word};
use atlas_ring::{LaurentPoly, Monomial};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// The Nichols algebra U_q⁺(sl_{n+1}) for one bicharacter, realised inside
/// the quantum shuffle algebra by
///
///   Ω(u) = Σ ∂^b_{z_1}(∂^b_{z_2}(⋯ ∂^b_{z_d}(u))) · (z_1 z_2 ⋯ z_d),
///
/// with the braided derivative ∂^b_i (deleting x_i at position t costs
/// ∏_{s>t} p(j_s, i)⁻¹).  Images of single words are cached; the cache is
/// shared between threads.
pub struct Nichols {
    b: Bicharacter,
    cache: RwLock<HashMap<Word, CanonicalElement>>,
}

impl Nichols {
    pub fn new(b: Bicharacter) -> Self {
        Nichols { b, cache: RwLock::new(HashMap::new()) }
    }

    pub fn bichar(&self) -> &Bicharacter {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    /// Ω of a single word.  Recursively, Ω(w) = Σ_t f_t · Ω(w∖t) ⊗ x_{w_t}
    /// where f_t is the braided-derivative factor of position t.
    pub fn omega_word(&self, w: &Word) -> CanonicalElement {
        if let Some(c) = self.cache.read().expect("cache lock").get(w) {
            return c.clone();
        }
        let out = if w.is_empty() {
            CanonicalElement::one()
        } else {
            let letters: Vec<usize> = w.letters().collect();
            let mut acc: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
            for (t, &i) in letters.iter().enumerate() {
                let mut f = Monomial::one();
                for &j in &letters[t + 1..] {
                    f = f.mul(&self.b.p_mono(j, i).inv());
                }
                let sub = self.omega_word(&w.without(t));
                for (z, c) in sub.terms() {
                    let mut z2 = z.clone();
                    z2.0.push(i as u8);
                    let e = acc.entry(z2).or_default();
                    *e += &c.shift(&f);
                }
            }
            CanonicalElement::from_raw(FreeElement::from_terms(acc))
        };
        self.cache.write().expect("cache lock").insert(w.clone(), out.clone());
        out
    }

    /// Ω extended linearly.
    pub fn omega(&self, u: &FreeElement) -> CanonicalElement {
        let mut out = CanonicalElement::zero();
        for (w, c) in u.terms() {
            out.add_scaled(&self.omega_word(w), c);
        }
        out
    }

    /// Equality in U_q⁺.
    pub fn equal(&self, u: &FreeElement, v: &FreeElement) -> bool {
        self.omega(&(u - v)).is_zero()
    }

    /// Vanishing in U_q⁺.
    pub fn is_zero(&self, u: &FreeElement) -> bool {
        self.omega(u).is_zero()
    }

    /// Projective equality in U_q⁺.
    pub fn proportional(&self, u: &FreeElement, v: &FreeElement) -> bool {
        self.omega(u).is_proportional(&self.omega(v))
    }

    /// The braided shuffle product of two shuffle-algebra elements.
    pub fn shuffle(&self, a: &CanonicalElement, c: &CanonicalElement) -> CanonicalElement {
        shuffle_product(&self.b, a, c)
    }
}

/// Braided shuffle product: the sum over all interleavings of the two
/// tensor words, where each time a letter b of the right factor is placed
/// before a letter c of the left factor the term picks up p(b, c)⁻¹.
pub fn shuffle_product(b: &Bicharacter, a: &CanonicalElement, c: &CanonicalElement) -> CanonicalElement {
    let mut acc: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
    for (w1, c1) in a.terms() {
        for (w2, c2) in c.terms() {
            let coeff = c1 * c2;
            let l1: Vec<usize> = w1.letters().collect();
            let l2: Vec<usize> = w2.letters().collect();
            let mut cur: Vec<u8> = Vec::with_capacity(l1.len() + l2.len());
            merge(b, &l1, &l2, 0, 0, Monomial::one(), &mut cur, &coeff, &mut acc);
        }
    }
    CanonicalElement::from_raw(FreeElement::from_terms(acc))
}

#[allow(clippy::too_many_arguments)]
fn merge(
    b: &Bicharacter,
    l1: &[usize],
    l2: &[usize],
    i: usize,
    j: usize,
    f: Monomial,
    cur: &mut Vec<u8>,
    coeff: &LaurentPoly,
    acc: &mut BTreeMap<Word, LaurentPoly>,
) {
    if i == l1.len() && j == l2.len() {
        let e = acc.entry(Word(cur.iter().copied().collect())).or_default();
        *e += &coeff.shift(&f);
        return;
    }
    if i < l1.len() {
        cur.push(l1[i] as u8);
        merge(b, l1, l2, i + 1, j, f.clone(), cur, coeff, acc);
        cur.pop();
    }
    if j < l2.len() {
        let mut g = f;
        for &c in &l1[i..] {
            g = g.mul(&b.p_mono(l2[j], c).inv());
        }
        cur.push(l2[j] as u8);
        merge(b, l1, l2, i, j + 1, g, cur, coeff, acc);
        cur.pop();
    }
}

/// The braided deconcatenation Δ^b(z_1⋯z_d) = Σ (z_1⋯z_i) ⊗ (z_{i+1}⋯z_d),
/// grouped by the right leg: each entry is (Σ left legs, right leg).
pub fn deconcat(c: &CanonicalElement) -> Vec<(CanonicalElement, Word)> {
    let mut by_right: BTreeMap<Word, CanonicalElement> = BTreeMap::new();
    for (z, coeff) in c.terms() {
        for i in 0..=z.len() {
            let left = Word(z.0[..i].iter().copied().collect());
            let right = Word(z.0[i..].iter().copied().collect());
            by_right.entry(right).or_default().add_term(left, coeff);
        }
    }
    by_right
        .into_iter()
        .filter(|(_, l)| !l.is_zero())
        .map(|(r, l)| (l, r))
        .collect()
}
