use crate::canonical::CanonicalElement;
use crate::error::NicholsError;
use crate::omega::Nichols;
use atlas_freealg::{u_bracket, DegreeVector, FreeElement, Word};
use atlas_ring::{ExactMatrix, LaurentPoly};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// The super-letter u[k,m] = [x_k x_{k+1} ⋯ x_m].  The order is the
/// lexicographic order of the underlying words with x_1 > x_2 > ⋯ > x_n
/// and a proper prefix greater than its extensions, so u[k,m] > u[k',m']
/// iff k < k', or k = k' and m < m'.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperLetter {
    pub k: usize,
    pub m: usize,
}

impl SuperLetter {
    pub fn new(k: usize, m: usize) -> Self {
        debug_assert!(1 <= k && k <= m);
        SuperLetter { k, m }
    }

    pub fn degree(&self, n: usize) -> DegreeVector {
        DegreeVector::interval(n, self.k, self.m)
    }
}

impl Ord for SuperLetter {
    fn cmp(&self, o: &Self) -> Ordering {
        o.k.cmp(&self.k).then(o.m.cmp(&self.m))
    }
}

impl PartialOrd for SuperLetter {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for SuperLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},{}]", self.k, self.m)
    }
}

/// A PBW monomial w_1^{e_1} ⋯ w_r^{e_r}: super-letters with positive
/// exponents, listed in product order, which is strictly increasing in the
/// super-letter order (w_1 < w_2 < ⋯ < w_r).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub factors: Vec<(SuperLetter, u32)>,
}

impl PbwMonomial {
    /// A monomial from factors in any order; repeated super-letters merge.
    pub fn new(factors: impl IntoIterator<Item = (SuperLetter, u32)>) -> Self {
        let mut v: Vec<(SuperLetter, u32)> = Vec::new();
        let mut all: Vec<(SuperLetter, u32)> = factors.into_iter().filter(|(_, e)| *e > 0).collect();
        all.sort();
        for (s, e) in all {
            match v.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => v.push((s, e)),
            }
        }
        PbwMonomial { factors: v }
    }

    pub fn single(s: SuperLetter) -> Self {
        PbwMonomial { factors: vec![(s, 1)] }
    }

    pub fn degree(&self, n: usize) -> DegreeVector {
        let mut d = DegreeVector::zero(n);
        for (s, e) in &self.factors {
            for i in s.k..=s.m {
                d.0[i - 1] += e;
            }
        }
        d
    }

    /// The largest super-letter, which is the last factor.
    pub fn largest(&self) -> Option<SuperLetter> {
        self.factors.last().map(|(s, _)| *s)
    }

    /// Super-letters with multiplicity, in product order.
    pub fn letters(&self) -> impl Iterator<Item = SuperLetter> + '_ {
        self.factors.iter().flat_map(|(s, e)| std::iter::repeat(*s).take(*e as usize))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

/// All PBW monomials of the given multidegree (every super-letter has
/// infinite height at generic q).
pub fn pbw_monomials(d: &DegreeVector) -> Vec<PbwMonomial> {
    let n = d.0.len();
    let mut letters: Vec<SuperLetter> = Vec::new();
    for k in 1..=n {
        for m in k..=n {
            letters.push(SuperLetter::new(k, m));
        }
    }
    letters.sort();
    let mut out = Vec::new();
    let mut rest = d.0.clone();
    let mut cur: Vec<(SuperLetter, u32)> = Vec::new();
    fn fits(rest: &[u32], s: SuperLetter) -> bool {
        (s.k..=s.m).all(|i| rest[i - 1] > 0)
    }
    fn go(
        letters: &[SuperLetter],
        idx: usize,
        rest: &mut Vec<u32>,
        cur: &mut Vec<(SuperLetter, u32)>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if rest.iter().all(|&r| r == 0) {
            out.push(PbwMonomial { factors: cur.clone() });
            return;
        }
        if idx == letters.len() {
            return;
        }
        // The smallest index of a letter still needed must be covered by
        // some remaining super-letter; skipping is always allowed.
        go(letters, idx + 1, rest, cur, out);
        let s = letters[idx];
        let mut e = 0;
        while fits(rest, s) {
            for i in s.k..=s.m {
                rest[i - 1] -= 1;
            }
            e += 1;
            cur.push((s, e));
            go(letters, idx + 1, rest, cur, out);
            cur.pop();
        }
        for i in s.k..=s.m {
            rest[i - 1] += e;
        }
    }
    go(&letters, 0, &mut rest, &mut cur, &mut out);
    out.sort();
    out
}

impl Nichols {
    /// Ω of the super-letter u[k,m].
    pub fn omega_super_letter(&self, s: SuperLetter) -> Result<CanonicalElement, NicholsError> {
        Ok(self.omega(&u_bracket(self.bichar(), s.k, s.m)?))
    }

    /// Ω of a PBW monomial, computed as a shuffle product of super-letter
    /// images.
    pub fn omega_pbw(&self, mono: &PbwMonomial) -> Result<CanonicalElement, NicholsError> {
        let mut acc = CanonicalElement::one();
        for s in mono.letters() {
            acc = self.shuffle(&acc, &self.omega_super_letter(s)?);
        }
        Ok(acc)
    }

    /// The PBW monomial as an element of the free algebra.
    pub fn pbw_element(&self, mono: &PbwMonomial) -> Result<FreeElement, NicholsError> {
        let mut acc = FreeElement::one();
        for s in mono.letters() {
            acc = &acc * &u_bracket(self.bichar(), s.k, s.m)?;
        }
        Ok(acc)
    }

    /// Exact coordinates of a homogeneous element in the PBW basis of its
    /// multidegree.
    pub fn pbw_decompose(&self, u: &FreeElement) -> Result<PbwCoordinates, NicholsError> {
        let n = self.n();
        let Some(d) = u.degree(n)? else {
            return Ok(PbwCoordinates {
                monomials: Vec::new(),
                numerators: Vec::new(),
                denominator: LaurentPoly::one(),
            });
        };
        let monomials = pbw_monomials(&d);
        let images: Vec<CanonicalElement> =
            monomials.iter().map(|m| self.omega_pbw(m)).collect::<Result<_, _>>()?;
        let target = self.omega(u);
        let mut words: BTreeSet<Word> = target.terms().map(|(w, _)| w.clone()).collect();
        for im in &images {
            words.extend(im.terms().map(|(w, _)| w.clone()));
        }
        let mut m = ExactMatrix::new(words.len(), monomials.len());
        let mut rhs = Vec::with_capacity(words.len());
        for (r, w) in words.iter().enumerate() {
            for (c, im) in images.iter().enumerate() {
                m.set(r, c, im.coeff(w));
            }
            rhs.push(target.coeff(w));
        }
        let out = m.solve(&rhs)?;
        if out.rank != monomials.len() {
            return Err(NicholsError::Inconsistent(format!(
                "PBW images of degree {:?} have rank {} < {}",
                d.0,
                out.rank,
                monomials.len()
            )));
        }
        let sol = out
            .solution
            .ok_or_else(|| NicholsError::Inconsistent(format!("element {u} outside the PBW span")))?;
        Ok(PbwCoordinates { monomials, numerators: sol.numerators, denominator: sol.denominator })
    }
}

/// Coordinates x_i = numerators[i] / denominator of an element in the PBW
/// monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwCoordinates {
    pub monomials: Vec<PbwMonomial>,
    pub numerators: Vec<LaurentPoly>,
    pub denominator: LaurentPoly,
}

impl PbwCoordinates {
    /// Monomials with a nonzero coordinate, with their numerators.
    pub fn support(&self) -> impl Iterator<Item = (&PbwMonomial, &LaurentPoly)> {
        self.monomials.iter().zip(&self.numerators).filter(|(_, c)| !c.is_zero())
    }

    /// The numerator on `mono` (zero if absent).
    pub fn numerator(&self, mono: &PbwMonomial) -> LaurentPoly {
        self.monomials
            .iter()
            .position(|m| m == mono)
            .map(|i| self.numerators[i].clone())
            .unwrap_or_default()
    }
}
