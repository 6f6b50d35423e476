use crate::bichar::Bicharacter;
use crate::element::FreeElement;
use crate::word::Word;
use atlas_ring::{LaurentPoly, Monomial};

/// Which braiding factor accompanies the deletion of one letter.
#[derive(Clone, Copy)]
enum Side {
    /// ∏_{s<t} p(j_s, i): the left calculus ∂_i.
    Left,
    /// ∏_{s>t} p(i, j_s): the dual calculus ∂*_i.
    Dual,
    /// ∏_{s>t} p(j_s, i)⁻¹: the braided derivative ∂^b_i.
    Braided,
}

fn derive(b: &Bicharacter, i: usize, u: &FreeElement, side: Side) -> FreeElement {
    let mut out = FreeElement::zero();
    for (w, c) in u.terms() {
        for (t, l) in w.letters().enumerate() {
            if l != i {
                continue;
            }
            let mut f = Monomial::one();
            match side {
                Side::Left => {
                    for j in w.letters().take(t) {
                        f = f.mul(b.p_mono(j, i));
                    }
                }
                Side::Dual => {
                    for j in w.letters().skip(t + 1) {
                        f = f.mul(b.p_mono(i, j));
                    }
                }
                Side::Braided => {
                    for j in w.letters().skip(t + 1) {
                        f = f.mul(&b.p_mono(j, i).inv());
                    }
                }
            }
            out.add_term(w.without(t), &c.shift(&f));
        }
    }
    out
}

/// The left derivative: ∂_i(x_j) = δ_ij and
/// ∂_i(uv) = ∂_i(u)·v + p(u, x_i)·u·∂_i(v).
pub fn partial(b: &Bicharacter, i: usize, u: &FreeElement) -> FreeElement {
    derive(b, i, u, Side::Left)
}

/// The dual derivative: ∂*_i(x_j) = δ_ij and
/// ∂*_i(uv) = p(x_i, v)·∂*_i(u)·v + u·∂*_i(v).
pub fn partial_star(b: &Bicharacter, i: usize, u: &FreeElement) -> FreeElement {
    derive(b, i, u, Side::Dual)
}

/// The braided derivative ∂^b_i: deleting letter x_i at position t costs
/// ∏_{s>t} p(j_s, i)⁻¹.  It is the conjugate g_i ∂-type coordinate used by
/// the shuffle embedding.
pub fn partial_braided(b: &Bicharacter, i: usize, u: &FreeElement) -> FreeElement {
    derive(b, i, u, Side::Braided)
}

/// D_w for w = x_{k_1} x_{k_2} ⋯: applies ∂_{k_1} first, then ∂_{k_2}, ….
/// With D_{x_k v} = ∂_k ∘ D_v written as a right operator (u·D_{x_k v} =
/// (u·∂_k)·D_v) this is the order in which u·D_w is evaluated.
pub fn d_w(b: &Bicharacter, w: &Word, u: &FreeElement) -> FreeElement {
    let mut cur = u.clone();
    for l in w.letters() {
        if cur.is_zero() {
            break;
        }
        cur = partial(b, l, &cur);
    }
    cur
}

/// The scalar part (coefficient of the empty word).
pub fn scalar_part(u: &FreeElement) -> LaurentPoly {
    u.coeff(&Word::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::u_bracket;

    #[test]
    fn derivative_of_a_letter() {
        let b = Bicharacter::one_parameter(3);
        for i in 1..=3 {
            assert_eq!(partial(&b, i, &FreeElement::letter(i)), FreeElement::one());
            assert_eq!(partial_star(&b, i, &FreeElement::letter(i)), FreeElement::one());
            let other = FreeElement::letter(i % 3 + 1);
            assert!(partial(&b, i, &other).is_zero());
            assert!(partial_star(&b, i, &other).is_zero());
        }
    }

    #[test]
    fn derivative_of_u_brackets() {
        let b = Bicharacter::multiparameter(4);
        let one_minus: LaurentPoly = "1 - q^-1".parse().unwrap();
        for k in 1..=4 {
            for m in k..=4 {
                let u = u_bracket(&b, k, m).unwrap();
                // ∂_j u[k,m] for j ≠ k vanishes only modulo the Serre
                // relations; in the free algebra it is zero for short brackets.
                for j in 1..=4 {
                    let d = partial(&b, j, &u);
                    if j != k {
                        assert!(d.is_zero() || m > k + 1, "∂_{j} u[{k},{m}]");
                    } else if k < m {
                        assert_eq!(d, u_bracket(&b, k + 1, m).unwrap().scale(&one_minus));
                    } else {
                        assert_eq!(d, FreeElement::one());
                    }
                }
            }
        }
    }

    #[test]
    fn leibniz_rules() {
        let b = Bicharacter::multiparameter(3);
        let u = &FreeElement::letter(1) * &FreeElement::letter(2);
        let v = &FreeElement::letter(2) * &FreeElement::letter(3);
        let uv = &u * &v;
        for i in 1..=3 {
            let pui = LaurentPoly::monomial(b.p_words(&Word::from_letters([1, 2]), &Word::letter(i)));
            let lhs = partial(&b, i, &uv);
            let rhs = &(&partial(&b, i, &u) * &v) + &(&u * &partial(&b, i, &v)).scale(&pui);
            assert_eq!(lhs, rhs);
            let piv = LaurentPoly::monomial(b.p_words(&Word::letter(i), &Word::from_letters([2, 3])));
            let lhs = partial_star(&b, i, &uv);
            let rhs = &(&partial_star(&b, i, &u) * &v).scale(&piv) + &(&u * &partial_star(&b, i, &v));
            assert_eq!(lhs, rhs);
        }
    }
}
