//! Exhaustive and randomized verification suites for the double, each
//! returning one [`Verdict`].

use crate::double::Double;
use crate::error::DoubleError;
use crate::graded::{graded_mul, p_graded, tri_bracket, Graded};
use crate::group::GroupElement;
use crate::tri::TriangularElement;
use crate::verify::{consistency_experiment, rela3_check, verify_cross, verify_derm, verify_sh, ConsistencyReport};
use atlas_freealg::random::random_homogeneous;
use atlas_freealg::{Bicharacter, FreeElement, Mode, Word};
use atlas_nichols::suites::all_descriptors;
use atlas_nichols::Verdict;
use atlas_ring::LaurentPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| rng.gen_range(1..=n)))
}

/// A random short element u⁻ h u⁺ with one or two terms.
fn random_tri<R: Rng>(rng: &mut R, n: usize) -> TriangularElement {
    let mut out = TriangularElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut h = GroupElement::identity(n);
        for e in h.0.iter_mut() {
            *e = rng.gen_range(-1..=1);
        }
        let c = LaurentPoly::from_int(rng.gen_range(1..=3));
        out.add_scaled(&TriangularElement::term(random_word(rng, n, 2), h, random_word(rng, n, 2), c), &LaurentPoly::one());
    }
    out
}

fn random_group<R: Rng>(rng: &mut R, n: usize) -> GroupElement {
    GroupElement((0..2 * n).map(|_| rng.gen_range(-1..=1)).collect())
}

fn random_graded<R: Rng>(rng: &mut R, ctx: &Double) -> Result<Graded, DoubleError> {
    let n = ctx.n();
    let total = rng.gen_range(1..=2);
    let u = random_homogeneous(rng, n, total, 2);
    let base = if rng.gen_bool(0.5) { Graded::positive(ctx, &u)? } else { Graded::negative(ctx, &u)? };
    Ok(if rng.gen_bool(0.5) { base.times_group(ctx, &random_group(rng, n)) } else { base })
}

/// The quantum Serre element ad(x_i)^{1−a_ij}(x_j) for |i−j| = 1, in the
/// given bicharacter.
fn serre(b: &Bicharacter, i: usize, j: usize) -> FreeElement {
    let xi = FreeElement::letter(i);
    let mut e = FreeElement::letter(j);
    for _ in 0..2 {
        e = atlas_freealg::skew_bracket(b, &xi, &e).expect("homogeneous");
    }
    e
}

/// Associativity, (rela3), Serre relations on both wings, Γ-grading and the
/// H-word bracket identities (cuq1)–(cuq4).
pub fn double_suite(n_max: usize, samples: usize, seed: u64, mode: Mode) -> Result<Verdict, DoubleError> {
    let mut v = Verdict::new("double");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=n_max {
        let ctx = Double::new(Bicharacter::new(n, mode));
        v.absorb(rela3_check(&ctx)?);
        for i in 1..n {
            for (a, c) in [(i, i + 1), (i + 1, i)] {
                let pos = ctx.pos_elem(&serre(ctx.bichar(), a, c));
                let neg = ctx.neg_elem(&serre(ctx.neg_bichar(), a, c));
                v.check(ctx.is_zero(&pos) && ctx.is_zero(&neg), || format!("Serre ({a},{c}) survives at n={n}"));
            }
        }
        if n > 3 {
            continue;
        }
        for _ in 0..samples {
            let (a, b, c) = (random_tri(&mut rng, n), random_tri(&mut rng, n), random_tri(&mut rng, n));
            let l = ctx.mul(&ctx.mul(&a, &b), &c);
            let r = ctx.mul(&a, &ctx.mul(&b, &c));
            v.check(ctx.equal(&l, &r), || format!("associativity fails on ({a})({b})({c})"));
            let ab = ctx.mul(&a, &b);
            let grading_ok = match (a.net_degree(n), b.net_degree(n), ab.net_degree(n)) {
                (Some(x), Some(y), Some(z)) => x.iter().zip(&y).map(|(p, q)| p + q).eq(z),
                (Some(_), Some(_), None) => ab.is_zero(),
                _ => true,
            };
            v.check(grading_ok, || format!("Γ-degree not additive on ({a})({b})"));
            let (u, w) = (random_graded(&mut rng, &ctx)?, random_graded(&mut rng, &ctx)?);
            let h = random_group(&mut rng, n);
            v.absorb(cuq_check(&ctx, &u, &w, &h, rng.gen_range(1..=n)));
        }
    }
    Ok(v)
}

/// (cuq1), (cuq2), (cuq21), (cuq3), (cuq4) at one sample.
pub fn cuq_check(ctx: &Double, u: &Graded, w: &Graded, h: &GroupElement, i: usize) -> Verdict {
    let mut v = Verdict::new("cuq");
    let n = ctx.n();
    let chi = |x: &Graded, g: &GroupElement| LaurentPoly::monomial(ctx.chi_deg(&x.degree, g));
    let one = LaurentPoly::one();
    // (cuq1) [u, h w] = χ^u(h) h [u, w]
    let lhs = tri_bracket(ctx, u, &w.times_group(ctx, h));
    let rhs = tri_bracket(ctx, u, w).times_group(ctx, h).scale(&chi(u, h));
    v.check(ctx.equal(&lhs.elem, &rhs.elem), || "cuq1".into());
    // (cuq2) [h u, w] = h [u, w] + p_uw (1 − χ^w(h)) h w·u
    let lhs = tri_bracket(ctx, &u.times_group(ctx, h), w);
    let wu = graded_mul(ctx, w, u).times_group(ctx, h);
    let mut rhs = tri_bracket(ctx, u, w).times_group(ctx, h).elem;
    rhs.add_scaled(&wu.elem, &(&p_graded(ctx, u, w) * &(&one - &chi(w, h))));
    v.check(ctx.equal(&lhs.elem, &rhs), || "cuq2".into());
    // (cuq21) [h u, w] = χ^w(h) h [u, w] + (1 − χ^w(h)) h u·w
    let uw = graded_mul(ctx, u, w).times_group(ctx, h);
    let mut rhs = tri_bracket(ctx, u, w).times_group(ctx, h).elem.scale(&chi(w, h));
    rhs.add_scaled(&uw.elem, &(&one - &chi(w, h)));
    v.check(ctx.equal(&lhs.elem, &rhs), || "cuq21".into());
    // (cuq3) [u, [x_i, x_i⁻]] = (1 − χ^u(h_i)) u
    let c = tri_bracket(
        ctx,
        &Graded::positive(ctx, &FreeElement::letter(i)).expect("letter"),
        &Graded::negative(ctx, &FreeElement::letter(i)).expect("letter"),
    );
    let hi = GroupElement::h(n, i);
    let lhs = tri_bracket(ctx, u, &c);
    v.check(ctx.equal(&lhs.elem, &u.elem.scale(&(&one - &chi(u, &hi)))), || "cuq3".into());
    // (cuq4) [[x_i, x_i⁻], u] = (χ^u(h_i) − 1) h_i u
    let lhs = tri_bracket(ctx, &c, u);
    let rhs = u.times_group(ctx, &hi).elem.scale(&(&chi(u, &hi) - &one));
    v.check(ctx.equal(&lhs.elem, &rhs), || "cuq4".into());
    v
}

/// [Ψ^S(k,m), Ψ_−^{S̄}(k,m)] ∼ 1 − h_k⋯h_m for every descriptor, n ≤ n_max.
pub fn sh_suite(n_max: usize, mode: Mode) -> Result<Verdict, DoubleError> {
    let mut v = Verdict::new("sh");
    for n in 1..=n_max {
        let ctx = Double::new(Bicharacter::new(n, mode));
        let parts = all_descriptors(n)
            .par_iter()
            .map(|g| verify_sh(&ctx, g))
            .collect::<Result<Vec<_>, _>>()?;
        parts.into_iter().for_each(|p| v.absorb(p));
    }
    Ok(v)
}

/// The (derm) case formulas and the entrance criterion for every
/// descriptor and every k ≤ i ≤ m, n ≤ n_max.
pub fn derm_suite(n_max: usize, mode: Mode) -> Result<Verdict, DoubleError> {
    let mut v = Verdict::new("derm");
    for n in 1..=n_max {
        let ctx = Double::new(Bicharacter::new(n, mode));
        let jobs: Vec<_> = all_descriptors(n).into_iter().flat_map(|g| (g.k..=g.m).map(move |i| (g, i))).collect();
        let parts = jobs
            .par_iter()
            .map(|(g, i)| verify_derm(&ctx, g, *i))
            .collect::<Result<Vec<_>, _>>()?;
        parts.into_iter().for_each(|p| v.absorb(p));
    }
    Ok(v)
}

/// The vanishing and inclusion statements for every ordered pair of
/// descriptors at rank n.
pub fn cross_suite(n: usize, mode: Mode) -> Result<Verdict, DoubleError> {
    let ctx = Double::new(Bicharacter::new(n, mode));
    let ds = all_descriptors(n);
    let jobs: Vec<_> = ds.iter().flat_map(|a| ds.iter().map(move |b| (a, b))).collect();
    let parts = jobs
        .par_iter()
        .map(|(a, b)| verify_cross(&ctx, a, b))
        .collect::<Result<Vec<_>, _>>()?;
    let mut v = Verdict::new("cross");
    parts.into_iter().for_each(|p| v.absorb(p));
    Ok(v)
}

/// The closure experiment against the pair condition.
pub fn consistency_suite(n: usize, bound: u32, mode: Mode) -> Result<(Verdict, ConsistencyReport), DoubleError> {
    let ctx = Double::new(Bicharacter::new(n, mode));
    let report = consistency_experiment(&ctx, bound)?;
    Ok((report.verdict(), report))
}
