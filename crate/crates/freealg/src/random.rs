use crate::element::FreeElement;
use crate::word::{DegreeVector, Word};
use atlas_ring::LaurentPoly;
use rand::Rng;

/// A random degree vector of the given total degree.
pub fn random_degree<R: Rng>(rng: &mut R, n: usize, total: usize) -> DegreeVector {
    let mut d = vec![0u32; n];
    for _ in 0..total {
        d[rng.gen_range(0..n)] += 1;
    }
    DegreeVector(d)
}

/// A random homogeneous element of total degree `total` with up to `terms`
/// words, small integer coefficients and occasional powers of q.
pub fn random_homogeneous<R: Rng>(rng: &mut R, n: usize, total: usize, terms: usize) -> FreeElement {
    let deg = random_degree(rng, n, total);
    random_of_degree(rng, &deg, terms)
}

/// A random element of the given degree with up to `terms` words.
pub fn random_of_degree<R: Rng>(rng: &mut R, deg: &DegreeVector, terms: usize) -> FreeElement {
    let words: Vec<Word> = deg.words();
    let mut e = FreeElement::zero();
    for _ in 0..terms.max(1) {
        let w = words[rng.gen_range(0..words.len())].clone();
        let c = &LaurentPoly::from_int(rng.gen_range(1..=4)) * &LaurentPoly::q_pow(rng.gen_range(-1..=1));
        e.add_term(w, &c);
    }
    if e.is_zero() {
        e.add_term(words[0].clone(), &LaurentPoly::one());
    }
    e
}
