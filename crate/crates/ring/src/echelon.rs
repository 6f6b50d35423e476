use crate::modp::ModPoint;
use crate::poly::LaurentPoly;
use std::collections::BTreeMap;

/// A sparse vector: coordinates keyed by an ordered index type, zero entries
/// omitted.
pub type SparseVec<K> = BTreeMap<K, LaurentPoly>;

/// An exact, incrementally built row-echelon basis of a subspace of
/// `Frac(Laurent)^K`.
///
/// Each stored row has a distinct pivot key (its smallest key) and vanishes
/// at the pivots of all earlier rows.  Reduction is fraction-free
/// (`v ← b_c·v − v_c·b`) followed by removal of the monomial/integer content,
/// so membership and rank are exact.  A modular image of every row is kept
/// alongside so that non-membership is usually detected without any
/// polynomial arithmetic.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>)>,
    point: ModPoint,
    modular: Vec<(K, BTreeMap<K, u64>)>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

fn reduce_exact<K: Ord + Clone>(v: &mut SparseVec<K>, pivot: &K, row: &SparseVec<K>) {
    let Some(vc) = v.get(pivot).cloned() else {
        return;
    };
    let bc = &row[pivot];
    let mut out: SparseVec<K> = BTreeMap::new();
    let bc_is_one = bc.is_one();
    for (k, x) in v.iter() {
        if k == pivot {
            continue;
        }
        let y = if bc_is_one { x.clone() } else { bc * x };
        out.insert(k.clone(), y);
    }
    for (k, b) in row.iter() {
        if k == pivot {
            continue;
        }
        let t = &vc * b;
        let e = out.entry(k.clone()).or_default();
        *e -= &t;
        if e.is_zero() {
            out.remove(k);
        }
    }
    normalize(&mut out);
    *v = out;
}

/// Divide out the common integer content and the common monomial factor.
fn normalize<K: Ord + Clone>(v: &mut SparseVec<K>) {
    if v.is_empty() {
        return;
    }
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let mut g = num_bigint::BigInt::zero();
    let mut l = num_bigint::BigInt::one();
    let mut lo: BTreeMap<u8, i32> = BTreeMap::new();
    let mut seen_vars: Vec<u8> = Vec::new();
    for p in v.values() {
        for v in p.variables() {
            if !seen_vars.contains(&v) {
                seen_vars.push(v);
            }
        }
    }
    for p in v.values() {
        for (m, c) in p.terms() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
            for &var in &seen_vars {
                let e = m.exp(var);
                let ent = lo.entry(var).or_insert(e);
                if e < *ent {
                    *ent = e;
                }
            }
        }
    }
    let mut factor = crate::Rational::new(l, g);
    let first_neg = v
        .values()
        .next()
        .and_then(|p| p.leading())
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if first_neg {
        factor = -factor;
    }
    let shift = crate::Monomial::from_pairs(lo.into_iter().map(|(var, e)| (var, -e)));
    if factor.is_one() && shift.is_one() {
        return;
    }
    for p in v.values_mut() {
        *p = p.shift(&shift).scale(&factor);
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            point: ModPoint::random(8, 0x5eed_ec4e),
            modular: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The stored echelon rows (pivot key, row).
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.iter().map(|(_, r)| r)
    }

    fn modular_image(&self, v: &SparseVec<K>) -> Option<BTreeMap<K, u64>> {
        let mut out = BTreeMap::new();
        for (k, x) in v {
            let e = x.eval_mod(&self.point)?;
            if e != 0 {
                out.insert(k.clone(), e);
            }
        }
        Some(out)
    }

    /// Modular reduction: `Some(true)` if the modular image of `v` is
    /// certainly outside the span (then so is `v`); `Some(false)` if it
    /// reduces to zero modulo p (inconclusive); `None` if evaluation failed.
    fn modular_outside(&self, v: &SparseVec<K>) -> Option<bool> {
        use crate::modp::{inv, mul, sub};
        let mut w = self.modular_image(v)?;
        for (pivot, row) in &self.modular {
            let Some(&wc) = w.get(pivot) else { continue };
            let f = mul(wc, inv(row[pivot])?);
            for (k, &b) in row {
                let e = w.entry(k.clone()).or_insert(0);
                *e = sub(*e, mul(f, b));
                if *e == 0 {
                    w.remove(k);
                }
            }
        }
        Some(!w.is_empty())
    }

    /// Reduce `v` exactly against the basis; the result is zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut w: SparseVec<K> = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k.clone(), x.clone()))
            .collect();
        normalize(&mut w);
        for (pivot, row) in &self.rows {
            if w.is_empty() {
                break;
            }
            reduce_exact(&mut w, pivot, row);
        }
        w
    }

    /// Exact membership test.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        if v.values().all(|x| x.is_zero()) {
            return true;
        }
        // A nonzero modular residue certifies non-membership: a genuine
        // linear dependency specialises to one modulo p.
        if let Some(true) = self.modular_outside(v) {
            return false;
        }
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns `true` iff it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let w = self.reduce(v);
        let Some(pivot) = w.keys().next().cloned() else {
            return false;
        };
        let image = self.modular_image(&w).filter(|m| m.contains_key(&pivot));
        self.rows.push((pivot.clone(), w));
        match image {
            Some(m) => self.modular.push((pivot, m)),
            // Unlucky evaluation point: draw a new one for all rows.
            None => self.rebuild_modular(),
        }
        true
    }

    fn rebuild_modular(&mut self) {
        for attempt in 1..64u64 {
            self.point = ModPoint::random(8, 0x5eed_ec4e ^ attempt.wrapping_mul(0x9e37_79b9));
            let mut ok = true;
            let mut images = Vec::with_capacity(self.rows.len());
            for (pivot, row) in &self.rows {
                match self.modular_image(row) {
                    Some(m) if m.contains_key(pivot) => images.push((pivot.clone(), m)),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.modular = images;
                return;
            }
        }
        panic!("could not find a modular evaluation point preserving the pivots");
    }
}
