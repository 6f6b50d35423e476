use crate::group::GroupElement;
use crate::tri::{TriKey, TriangularElement};
use atlas_freealg::{partial, partial_star, Bicharacter, FreeElement, Word};
use atlas_nichols::{CanonicalElement, Nichols};
use atlas_ring::{LaurentPoly, Monomial};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// Canonical coordinates of a triangular element: for each group element
/// h, the tensor Ω⁻(u⁻) ⊗ Ω⁺(u⁺) written on pairs of Ω-words.
pub type TriCanonical = BTreeMap<(GroupElement, Word, Word), LaurentPoly>;

/// The quantum double U_q(sl_{n+1}) = U⁻ ⊗ k[H] ⊗ U⁺ built on a bicharacter
/// p of the positive wing.  The negative wing carries p⁻(i,j) = p(j,i)⁻¹.
///
/// Commutation rules, with χ^i(h) = ∏_j p(i,j)^{e(g_j)} p(j,i)^{e(f_j)}:
/// * x_i · h = χ^i(h) h · x_i and x_i⁻ · h = χ^i(h)⁻¹ h · x_i⁻;
/// * x_i x_j⁻ − p(j,i) x_j⁻ x_i = δ_ij (1 − h_i) with h_i = g_i f_i.
pub struct Double {
    pos: Nichols,
    neg: Nichols,
    memo: RwLock<HashMap<(Word, Word), TriangularElement>>,
}

impl Double {
    pub fn new(b: Bicharacter) -> Self {
        let neg = Nichols::new(b.negative());
        Double { pos: Nichols::new(b), neg, memo: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.pos.n()
    }

    pub fn bichar(&self) -> &Bicharacter {
        self.pos.bichar()
    }

    pub fn neg_bichar(&self) -> &Bicharacter {
        self.neg.bichar()
    }

    /// The positive wing U⁺ (Nichols algebra of p).
    pub fn positive(&self) -> &Nichols {
        &self.pos
    }

    /// The negative wing U⁻ (Nichols algebra of p⁻).
    pub fn negative(&self) -> &Nichols {
        &self.neg
    }

    /// χ^i(h).
    pub fn chi(&self, i: usize, h: &GroupElement) -> Monomial {
        let b = self.bichar();
        let mut acc = Monomial::one();
        for j in 1..=self.n() {
            let (eg, ef) = (h.g_exp(j), h.f_exp(j));
            if eg != 0 {
                acc = acc.mul(&b.p_mono(i, j).pow(eg));
            }
            if ef != 0 {
                acc = acc.mul(&b.p_mono(j, i).pow(ef));
            }
        }
        acc
    }

    /// χ^d(h) = ∏_i χ^i(h)^{d_i} for a net degree d ∈ ℤⁿ.
    pub fn chi_deg(&self, d: &[i32], h: &GroupElement) -> Monomial {
        let mut acc = Monomial::one();
        for (i, &e) in d.iter().enumerate() {
            if e != 0 {
                acc = acc.mul(&self.chi(i + 1, h).pow(e));
            }
        }
        acc
    }

    fn chi_word(&self, w: &Word, h: &GroupElement) -> Monomial {
        w.letters().fold(Monomial::one(), |acc, i| acc.mul(&self.chi(i, h)))
    }

    pub fn pos_elem(&self, u: &FreeElement) -> TriangularElement {
        let n = self.n();
        let mut out = TriangularElement::zero();
        for (w, c) in u.terms() {
            out.add_term(TriKey { neg: Word::empty(), h: GroupElement::identity(n), pos: w.clone() }, c);
        }
        out
    }

    pub fn neg_elem(&self, u: &FreeElement) -> TriangularElement {
        let n = self.n();
        let mut out = TriangularElement::zero();
        for (w, c) in u.terms() {
            out.add_term(TriKey { neg: w.clone(), h: GroupElement::identity(n), pos: Word::empty() }, c);
        }
        out
    }

    /// The word product u⁺ · u⁻ in triangular form.
    pub fn straighten(&self, p: &Word, nw: &Word) -> TriangularElement {
        let key = (p.clone(), nw.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let n = self.n();
        let out = if p.is_empty() || nw.is_empty() {
            TriangularElement::term(nw.clone(), GroupElement::identity(n), p.clone(), LaurentPoly::one())
        } else {
            let i = p.0[0] as usize;
            let rest = Word(p.0[1..].into());
            let mut out = TriangularElement::zero();
            for (k, c) in self.straighten(&rest, nw).terms() {
                self.letter_times(i, k, c, &mut out);
            }
            out
        };
        self.memo.write().expect("memo lock").insert(key, out.clone());
        out
    }

    /// x_i · (c · u⁻ h u⁺), accumulated into `out`.  Uses
    /// x_i u⁻ = p(u⁻,x_i) u⁻ x_i + p(u⁻,x_i) p_ii⁻¹ ∂*_i(u⁻) − h_i ∂_i(u⁻),
    /// both derivatives taken in the negative wing; h_i is then moved right
    /// past ∂_i(u⁻), which costs χ^{∂_i(u⁻)}(h_i).
    fn letter_times(&self, i: usize, k: &TriKey, c: &LaurentPoly, out: &mut TriangularElement) {
        let n = self.n();
        let bm = self.neg_bichar();
        let pf = k.neg.letters().fold(Monomial::one(), |acc, j| acc.mul(self.bichar().p_mono(j, i)));
        let moved = c.shift(&pf.mul(&self.chi(i, &k.h)));
        let pos = Word::letter(i).concat(&k.pos);
        out.add_term(TriKey { neg: k.neg.clone(), h: k.h.clone(), pos }, &moved);
        let single = FreeElement::from_word(k.neg.clone());
        let star_f = c.shift(&pf.mul(&self.bichar().p_mono(i, i).inv()));
        for (w, cc) in partial_star(bm, i, &single).terms() {
            out.add_term(TriKey { neg: w.clone(), h: k.h.clone(), pos: k.pos.clone() }, &(&star_f * cc));
        }
        let hi = GroupElement::h(n, i);
        let h = hi.mul(&k.h);
        for (w, cc) in partial(bm, i, &single).terms() {
            // h_i · w = ∏_{j ∈ w} χ^j(h_i) · w · h_i
            let conj = self.chi_word(w, &hi);
            out.add_term(TriKey { neg: w.clone(), h: h.clone(), pos: k.pos.clone() }, &-(&(c * cc)).shift(&conj));
        }
    }

    /// The product in U_q(sl_{n+1}).
    pub fn mul(&self, a: &TriangularElement, b: &TriangularElement) -> TriangularElement {
        let mut out = TriangularElement::zero();
        for (k1, c1) in a.terms() {
            for (k2, c2) in b.terms() {
                let c12 = c1 * c2;
                for (k, c) in self.straighten(&k1.pos, &k2.neg).terms() {
                    let f = self.chi_word(&k.neg, &k1.h).mul(&self.chi_word(&k.pos, &k2.h));
                    let key = TriKey {
                        neg: k1.neg.concat(&k.neg),
                        h: k1.h.mul(&k.h).mul(&k2.h),
                        pos: k.pos.concat(&k2.pos),
                    };
                    out.add_term(key, &(&c12 * c).shift(&f));
                }
            }
        }
        out
    }

    /// Canonical coordinates modulo the quantum Serre relations of both
    /// wings.
    pub fn canonical(&self, a: &TriangularElement) -> TriCanonical {
        let mut out = TriCanonical::new();
        let mut neg_cache: HashMap<Word, CanonicalElement> = HashMap::new();
        let mut pos_cache: HashMap<Word, CanonicalElement> = HashMap::new();
        for (k, c) in a.terms() {
            let on = neg_cache.entry(k.neg.clone()).or_insert_with(|| self.neg.omega_word(&k.neg)).clone();
            let op = pos_cache.entry(k.pos.clone()).or_insert_with(|| self.pos.omega_word(&k.pos)).clone();
            for (a, x) in on.terms() {
                for (b, y) in op.terms() {
                    let key = (k.h.clone(), a.clone(), b.clone());
                    let e = out.entry(key.clone()).or_default();
                    *e += &(&(c * x) * y);
                    if e.is_zero() {
                        out.remove(&key);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self, a: &TriangularElement) -> bool {
        self.canonical(a).is_empty()
    }

    pub fn equal(&self, a: &TriangularElement, b: &TriangularElement) -> bool {
        self.is_zero(&(a - b))
    }

    /// Projective equality in canonical coordinates.
    pub fn proportional(&self, a: &TriangularElement, b: &TriangularElement) -> bool {
        self.ratio(a, b).is_some() || (self.is_zero(a) && self.is_zero(b))
    }

    /// (α, β) with β·a = α·b when both are nonzero and proportional.
    pub fn ratio(&self, a: &TriangularElement, b: &TriangularElement) -> Option<(LaurentPoly, LaurentPoly)> {
        let ca = self.canonical(a);
        let cb = self.canonical(b);
        if ca.len() != cb.len() || ca.is_empty() {
            return None;
        }
        let (k0, a0) = ca.iter().next()?;
        let b0 = cb.get(k0)?;
        let ok = ca.iter().all(|(k, x)| cb.get(k).is_some_and(|y| x * b0 == a0 * y));
        ok.then(|| (a0.clone(), b0.clone()))
    }
}
