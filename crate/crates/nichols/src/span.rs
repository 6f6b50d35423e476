use crate::canonical::CanonicalElement;
use crate::error::NicholsError;
use crate::omega::Nichols;
use atlas_freealg::{DegreeVector, FreeElement, Word};
use atlas_ring::Echelon;
use std::collections::{BTreeMap, HashMap};

/// Default total-degree bound for span computations.
pub const DEFAULT_BOUND: u32 = 6;

/// The subalgebra of U_q⁺ generated by a finite set of homogeneous
/// elements, materialised lazily one multidegree at a time up to a total
/// degree bound.  The degree-d component is spanned by b·g with b running
/// over a basis of degree d − deg g and g over the generators.
pub struct SubalgebraSpan<'a> {
    ctx: &'a Nichols,
    gens: Vec<(DegreeVector, CanonicalElement)>,
    bound: u32,
    bases: HashMap<DegreeVector, Echelon<Word>>,
}

/// Multidegree of a nonzero homogeneous shuffle element.
pub fn canonical_degree(n: usize, c: &CanonicalElement) -> Result<Option<DegreeVector>, NicholsError> {
    Ok(c.as_raw().degree(n)?)
}

impl<'a> SubalgebraSpan<'a> {
    /// Generators must be homogeneous; zero generators and scalars are
    /// dropped (scalars are always in the span).
    pub fn new(ctx: &'a Nichols, generators: &[FreeElement], bound: u32) -> Result<Self, NicholsError> {
        let mut gens = Vec::new();
        for g in generators {
            let Some(d) = g.degree(ctx.n())? else { continue };
            if d.total() == 0 {
                continue;
            }
            let c = ctx.omega(g);
            if !c.is_zero() {
                gens.push((d, c));
            }
        }
        Ok(SubalgebraSpan { ctx, gens, bound, bases: HashMap::new() })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Multidegrees of the (nonzero) generators.
    pub fn generator_degrees(&self) -> Vec<DegreeVector> {
        self.gens.iter().map(|(d, _)| d.clone()).collect()
    }

    fn ensure(&mut self, d: &DegreeVector) -> Result<(), NicholsError> {
        if self.bases.contains_key(d) {
            return Ok(());
        }
        if d.total() > self.bound {
            return Err(NicholsError::DegreeBound { degree: d.total(), bound: self.bound });
        }
        let mut e = Echelon::new();
        if d.total() == 0 {
            e.insert(&CanonicalElement::one().to_sparse());
        } else {
            for gi in 0..self.gens.len() {
                let Some(rest) = d.checked_sub(&self.gens[gi].0) else { continue };
                self.ensure(&rest)?;
                let rows: Vec<CanonicalElement> =
                    self.bases[&rest].rows().map(CanonicalElement::from_sparse).collect();
                for r in rows {
                    let prod = self.ctx.shuffle(&r, &self.gens[gi].1);
                    e.insert(&prod.to_sparse());
                }
            }
        }
        self.bases.insert(d.clone(), e);
        Ok(())
    }

    /// An exact basis of the degree-d component.
    pub fn basis(&mut self, d: &DegreeVector) -> Result<Vec<CanonicalElement>, NicholsError> {
        self.ensure(d)?;
        Ok(self.bases[d].rows().map(CanonicalElement::from_sparse).collect())
    }

    /// Dimension of the degree-d component.
    pub fn dim(&mut self, d: &DegreeVector) -> Result<usize, NicholsError> {
        self.ensure(d)?;
        Ok(self.bases[d].rank())
    }

    /// Exact membership of a shuffle element (checked per homogeneous
    /// component).
    pub fn contains(&mut self, c: &CanonicalElement) -> Result<bool, NicholsError> {
        for (d, comp) in c.as_raw().components(self.ctx.n()) {
            self.ensure(&d)?;
            if !self.bases[&d].contains(&CanonicalElement::from_raw(comp).to_sparse()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership of a free-algebra element.
    pub fn contains_element(&mut self, u: &FreeElement) -> Result<bool, NicholsError> {
        let c = self.ctx.omega(u);
        self.contains(&c)
    }

    /// Every multidegree of total degree ≤ bound that is a sum of generator
    /// degrees, in increasing total degree.
    pub fn reachable_degrees(&self) -> Vec<DegreeVector> {
        let n = self.ctx.n();
        let mut seen: BTreeMap<(u32, DegreeVector), ()> = BTreeMap::new();
        let mut frontier = vec![DegreeVector::zero(n)];
        seen.insert((0, DegreeVector::zero(n)), ());
        while let Some(d) = frontier.pop() {
            for (g, _) in &self.gens {
                let e = d.add(g);
                if e.total() <= self.bound && seen.insert((e.total(), e.clone()), ()).is_none() {
                    frontier.push(e);
                }
            }
        }
        seen.into_keys().map(|(_, d)| d).collect()
    }
}

/// An exact basis of the degree-d component of the subalgebra generated by
/// `generators`.
pub fn subalgebra_basis(
    ctx: &Nichols,
    generators: &[FreeElement],
    d: &DegreeVector,
    bound: u32,
) -> Result<Vec<CanonicalElement>, NicholsError> {
    SubalgebraSpan::new(ctx, generators, bound)?.basis(d)
}

/// Whether `u` lies in the subalgebra generated by `generators`.
pub fn member(ctx: &Nichols, u: &FreeElement, generators: &[FreeElement], bound: u32) -> Result<bool, NicholsError> {
    SubalgebraSpan::new(ctx, generators, bound)?.contains_element(u)
}

/// The linear span of all iterated derivatives of `u` under the given
/// family of operators (applied for every letter), per multidegree.  Each
/// entry holds an exact echelon basis of Ω-images and free-algebra
/// representatives of the basis vectors.
pub struct DerivativeClosure {
    pub spans: BTreeMap<DegreeVector, Echelon<Word>>,
    pub representatives: Vec<FreeElement>,
}

impl DerivativeClosure {
    pub fn compute(ctx: &Nichols, u: &FreeElement, op: impl Fn(usize, &FreeElement) -> FreeElement) -> Self {
        let n = ctx.n();
        let mut spans: BTreeMap<DegreeVector, Echelon<Word>> = BTreeMap::new();
        let mut reps = Vec::new();
        let mut queue: Vec<FreeElement> = u.components(n).into_values().collect();
        while let Some(v) = queue.pop() {
            let c = ctx.omega(&v);
            if c.is_zero() {
                continue;
            }
            let d = v.degree(n).ok().flatten().unwrap_or_else(|| DegreeVector::zero(n));
            if !spans.entry(d).or_default().insert(&c.to_sparse()) {
                continue;
            }
            for i in 1..=n {
                let w = op(i, &v);
                if !w.is_zero() {
                    queue.push(w);
                }
            }
            reps.push(v);
        }
        DerivativeClosure { spans, representatives: reps }
    }

    pub fn dim(&self, d: &DegreeVector) -> usize {
        self.spans.get(d).map_or(0, |e| e.rank())
    }
}
