use crate::double::Double;
use crate::error::DoubleError;
use crate::group::GroupElement;
use crate::tri::TriangularElement;
use atlas_freealg::{partial, DegreeVector, FreeElement, Word};
use atlas_nichols::{CanonicalElement, DerivativeClosure, Nichols, SubalgebraSpan};
use std::collections::BTreeMap;

/// A membership oracle for canonical elements of one wing.
pub trait WingSpace {
    fn contains(&mut self, c: &CanonicalElement) -> Result<bool, DoubleError>;
}

impl WingSpace for SubalgebraSpan<'_> {
    fn contains(&mut self, c: &CanonicalElement) -> Result<bool, DoubleError> {
        Ok(SubalgebraSpan::contains(self, c)?)
    }
}

/// prW: the linear span of all iterated left derivatives of one element
/// (the element itself included), in every degree it reaches.
pub struct ClosureSpace {
    pub closure: DerivativeClosure,
    n: usize,
}

impl ClosureSpace {
    pub fn new(ctx: &Nichols, u: &FreeElement) -> Self {
        let b = ctx.bichar().clone();
        ClosureSpace { closure: DerivativeClosure::compute(ctx, u, |i, v| partial(&b, i, v)), n: ctx.n() }
    }
}

impl WingSpace for ClosureSpace {
    fn contains(&mut self, c: &CanonicalElement) -> Result<bool, DoubleError> {
        let Some((w, _)) = c.terms().next() else {
            return Ok(true);
        };
        let d = w.degree(self.n);
        Ok(self.closure.spans.get(&d).is_some_and(|e| e.contains(&c.to_sparse())))
    }
}

/// The space of all of one wing (no constraint).
pub struct Everything;

impl WingSpace for Everything {
    fn contains(&mut self, _: &CanonicalElement) -> Result<bool, DoubleError> {
        Ok(true)
    }
}

/// Whether `a` lies in A⁻ ⊗ k[H] ⊗ A⁺.  The canonical tensor is split by
/// group element and by the degrees of both legs; a block lies in
/// A⁻ ⊗ A⁺ iff every column (fixed positive Ω-word) lies in A⁻ and every
/// row (fixed negative Ω-word) lies in A⁺.
pub fn in_triple(
    ctx: &Double,
    a: &TriangularElement,
    neg: &mut dyn WingSpace,
    pos: &mut dyn WingSpace,
) -> Result<bool, DoubleError> {
    let n = ctx.n();
    type Block = BTreeMap<(Word, Word), atlas_ring::LaurentPoly>;
    let mut blocks: BTreeMap<(GroupElement, DegreeVector, DegreeVector), Block> = BTreeMap::new();
    for ((h, nw, pw), c) in ctx.canonical(a) {
        blocks
            .entry((h, nw.degree(n), pw.degree(n)))
            .or_default()
            .insert((nw, pw), c);
    }
    for block in blocks.values() {
        let mut cols: BTreeMap<&Word, CanonicalElement> = BTreeMap::new();
        let mut rows: BTreeMap<&Word, CanonicalElement> = BTreeMap::new();
        for ((nw, pw), c) in block {
            cols.entry(pw).or_insert_with(CanonicalElement::zero).add_term(nw.clone(), c);
            rows.entry(nw).or_insert_with(CanonicalElement::zero).add_term(pw.clone(), c);
        }
        for c in cols.values() {
            if !neg.contains(c)? {
                return Ok(false);
            }
        }
        for r in rows.values() {
            if !pos.contains(r)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
