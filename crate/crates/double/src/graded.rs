use crate::double::Double;
use crate::error::DoubleError;
use crate::group::GroupElement;
use crate::tri::TriangularElement;
use atlas_freealg::FreeElement;
use atlas_ring::LaurentPoly;

/// A Γ-homogeneous H-word: an element together with its net degree
/// d ∈ ℤⁿ (D(x_i) = e_i, D(x_i⁻) = −e_i), which fixes its character χ^d,
/// and the group-like g attached to it (g_{x_i} = g_i, g_{x_i⁻} = f_i,
/// g_{hu} = h·g_u).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    pub elem: TriangularElement,
    pub degree: Vec<i32>,
    pub group: GroupElement,
}

impl Graded {
    /// A homogeneous element of the positive wing.
    pub fn positive(ctx: &Double, u: &FreeElement) -> Result<Self, DoubleError> {
        let n = ctx.n();
        let d = u.degree(n)?.ok_or(DoubleError::NotHomogeneous)?;
        let mut g = GroupElement::identity(n);
        for (i, &e) in d.0.iter().enumerate() {
            g.0[i] = e as i32;
        }
        Ok(Graded { elem: ctx.pos_elem(u), degree: d.0.iter().map(|&e| e as i32).collect(), group: g })
    }

    /// A homogeneous element of the negative wing, written in the letters
    /// x_i⁻.
    pub fn negative(ctx: &Double, u: &FreeElement) -> Result<Self, DoubleError> {
        let n = ctx.n();
        let d = u.degree(n)?.ok_or(DoubleError::NotHomogeneous)?;
        let mut g = GroupElement::identity(n);
        for (i, &e) in d.0.iter().enumerate() {
            g.0[n + i] = e as i32;
        }
        Ok(Graded { elem: ctx.neg_elem(u), degree: d.0.iter().map(|&e| -(e as i32)).collect(), group: g })
    }

    /// The group-like h itself: degree 0, attached group-like h.
    pub fn group_like(h: GroupElement) -> Self {
        let n = h.n();
        Graded { elem: TriangularElement::group(h.clone()), degree: vec![0; n], group: h }
    }

    /// h·u, with χ^{hu} = χ^u and g_{hu} = h g_u.
    pub fn times_group(&self, ctx: &Double, h: &GroupElement) -> Graded {
        Graded {
            elem: ctx.mul(&TriangularElement::group(h.clone()), &self.elem),
            degree: self.degree.clone(),
            group: h.mul(&self.group),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Graded {
        Graded { elem: self.elem.scale(c), ..self.clone() }
    }

    pub fn is_zero(&self, ctx: &Double) -> bool {
        ctx.is_zero(&self.elem)
    }
}

/// The product of H-words: degrees add, group-likes multiply.
pub fn graded_mul(ctx: &Double, a: &Graded, b: &Graded) -> Graded {
    Graded {
        elem: ctx.mul(&a.elem, &b.elem),
        degree: a.degree.iter().zip(&b.degree).map(|(x, y)| x + y).collect(),
        group: a.group.mul(&b.group),
    }
}

/// The skew bracket [a, b] = ab − χ^a(g_b)·ba of H-words.
pub fn tri_bracket(ctx: &Double, a: &Graded, b: &Graded) -> Graded {
    let ab = graded_mul(ctx, a, b);
    let ba = ctx.mul(&b.elem, &a.elem);
    let c = LaurentPoly::monomial(ctx.chi_deg(&a.degree, &b.group));
    let mut elem = ab.elem;
    elem.add_scaled(&ba, &-c);
    Graded { elem, ..ab }
}

/// χ^a(g_b) as a Laurent monomial.
pub fn p_graded(ctx: &Double, a: &Graded, b: &Graded) -> LaurentPoly {
    LaurentPoly::monomial(ctx.chi_deg(&a.degree, &b.group))
}
