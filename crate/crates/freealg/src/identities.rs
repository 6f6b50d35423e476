//! The Jacobi and ad-identities of the skew bracket, as residuals
//! (left side minus right side).  The unconditional ones vanish in the free
//! algebra; the conditional ones vanish whenever their side condition does,
//! so they are checked against an equality oracle chosen by the caller.

use crate::bichar::Bicharacter;
use crate::element::{p_of, skew_bracket as br, FreeElement};
use crate::error::FreeAlgError;
use atlas_ring::LaurentPoly;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// [[u,v],w] = [u,[v,w]] + p_wv⁻¹[[u,w],v] + (p_vw − p_wv⁻¹)[u,w]·v
    Jacobi,
    /// [[u,v],w] = [u,[v,w]] − p_vu⁻¹[v,[u,w]] + (p_vu⁻¹ − p_uv) v·[u,w]
    JacobiDual,
    /// [[u,v],w] = [u,[v,w]] when [u,w] = 0
    JacobiConditional,
    /// [u,[v,w]] = p_uv [v,[u,w]] when [u,v] = 0 and p_uv p_vu = 1
    JacobiSwap,
    /// [u·v,w] = p_vw [u,w]·v + u·[v,w]
    AdProductLeft,
    /// [u,v·w] = [u,v]·w + p_uv v·[u,w]
    AdProductRight,
    /// [u·v,w] = u·[v,w] when [u,w] = 0
    AdProductConditional,
    /// [u,v] = −p_uv [v,u] when p_uv p_vu = 1
    Antisymmetry,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Jacobi,
        Identity::JacobiDual,
        Identity::JacobiConditional,
        Identity::JacobiSwap,
        Identity::AdProductLeft,
        Identity::AdProductRight,
        Identity::AdProductConditional,
        Identity::Antisymmetry,
    ];

    /// True when the identity holds in the free algebra without any side
    /// condition.
    pub fn is_unconditional(self) -> bool {
        matches!(
            self,
            Identity::Jacobi | Identity::JacobiDual | Identity::AdProductLeft | Identity::AdProductRight
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::Jacobi => "jacobi",
            Identity::JacobiDual => "jacobi-dual",
            Identity::JacobiConditional => "jacobi-conditional",
            Identity::JacobiSwap => "jacobi-swap",
            Identity::AdProductLeft => "ad-product-left",
            Identity::AdProductRight => "ad-product-right",
            Identity::AdProductConditional => "ad-product-conditional",
            Identity::Antisymmetry => "antisymmetry",
        };
        f.write_str(s)
    }
}

fn inv(p: &LaurentPoly) -> LaurentPoly {
    p.inv_term().expect("bicharacter values are units")
}

/// Whether the side condition of `id` holds for (u, v, w), deciding
/// vanishing with `is_zero`.
pub fn side_condition(
    id: Identity,
    b: &Bicharacter,
    u: &FreeElement,
    v: &FreeElement,
    w: &FreeElement,
    is_zero: &dyn Fn(&FreeElement) -> bool,
) -> Result<bool, FreeAlgError> {
    Ok(match id {
        Identity::JacobiConditional | Identity::AdProductConditional => is_zero(&br(b, u, w)?),
        Identity::JacobiSwap => {
            is_zero(&br(b, u, v)?) && (&p_of(b, u, v)? * &p_of(b, v, u)?).is_one()
        }
        Identity::Antisymmetry => (&p_of(b, u, v)? * &p_of(b, v, u)?).is_one(),
        _ => true,
    })
}

/// Left side minus right side of `id` at (u, v, w).
pub fn residual(
    id: Identity,
    b: &Bicharacter,
    u: &FreeElement,
    v: &FreeElement,
    w: &FreeElement,
) -> Result<FreeElement, FreeAlgError> {
    let p = |x: &FreeElement, y: &FreeElement| p_of(b, x, y);
    Ok(match id {
        Identity::Jacobi => {
            let lhs = br(b, &br(b, u, v)?, w)?;
            let uw = br(b, u, w)?;
            let pwv_inv = inv(&p(w, v)?);
            let mut rhs = br(b, u, &br(b, v, w)?)?;
            rhs.add_scaled(&br(b, &uw, v)?, &pwv_inv);
            rhs.add_scaled(&(&uw * v), &(&p(v, w)? - &pwv_inv));
            &lhs - &rhs
        }
        Identity::JacobiDual => {
            let lhs = br(b, &br(b, u, v)?, w)?;
            let uw = br(b, u, w)?;
            let pvu_inv = inv(&p(v, u)?);
            let mut rhs = br(b, u, &br(b, v, w)?)?;
            rhs.add_scaled(&br(b, v, &uw)?, &-&pvu_inv);
            rhs.add_scaled(&(v * &uw), &(&pvu_inv - &p(u, v)?));
            &lhs - &rhs
        }
        Identity::JacobiConditional => &br(b, &br(b, u, v)?, w)? - &br(b, u, &br(b, v, w)?)?,
        Identity::JacobiSwap => {
            let rhs = br(b, v, &br(b, u, w)?)?.scale(&p(u, v)?);
            &br(b, u, &br(b, v, w)?)? - &rhs
        }
        Identity::AdProductLeft => {
            let lhs = br(b, &(u * v), w)?;
            let mut rhs = u * &br(b, v, w)?;
            rhs.add_scaled(&(&br(b, u, w)? * v), &p(v, w)?);
            &lhs - &rhs
        }
        Identity::AdProductRight => {
            let lhs = br(b, u, &(v * w))?;
            let mut rhs = &br(b, u, v)? * w;
            rhs.add_scaled(&(v * &br(b, u, w)?), &p(u, v)?);
            &lhs - &rhs
        }
        Identity::AdProductConditional => &br(b, &(u * v), w)? - &(u * &br(b, v, w)?),
        Identity::Antisymmetry => {
            let mut r = br(b, u, v)?;
            r.add_scaled(&br(b, v, u)?, &p(u, v)?);
            r
        }
    })
}
