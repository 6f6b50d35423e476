//! Verification suites.  Each returns a [`Verdict`] naming the first
//! counterexample as (n, k, m, S) together with the offending coefficient.

use crate::canonical::CanonicalElement;
use crate::coideal::{coideal_check, differential_closure_check, profile_generators, separated, theorem26_span_check};
use crate::error::NicholsError;
use crate::omega::{deconcat, Nichols};
use crate::pbw::pbw_monomials;
use crate::verdict::Verdict;
use atlas_freealg::identities::{residual, side_condition, Identity};
use atlas_freealg::random::{random_homogeneous, random_of_degree};
use atlas_freealg::{
    d_w, partial, psi, scalar_part, skew_bracket, u_bracket, u_pw, Bicharacter, BracketTerm, DegreeVector,
    FreeElement, Mode, Word,
};
use atlas_ring::{ExactMatrix, LaurentPoly};
use atlas_rootdata::{build_rt, enumerate_theta, GenDesc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Every descriptor (k, m, S) with S ⊆ [k, m−1] at rank n.
pub fn all_descriptors(n: usize) -> Vec<GenDesc> {
    let mut out = Vec::new();
    for k in 1..=n {
        for m in k..=n {
            for s in 0..(1u64 << (m - k)) {
                let g = GenDesc::new(n, k, m, s << k).expect("valid descriptor");
                out.push(g);
            }
        }
    }
    out
}

fn first_discrepancy(c: &CanonicalElement) -> String {
    match c.terms().next() {
        Some((w, x)) => format!("discrepancy {x} on ({w})"),
        None => "no discrepancy".into(),
    }
}

fn one_minus_qinv() -> LaurentPoly {
    "1 - q^-1".parse().expect("valid literal")
}

/// Check u = v in U_q⁺.
fn check_equal(v: &mut Verdict, ctx: &Nichols, lhs: &FreeElement, rhs: &FreeElement, label: impl FnOnce() -> String) {
    let diff = ctx.omega(&(lhs - rhs));
    v.check(diff.is_zero(), || format!("{}: {}", label(), first_discrepancy(&diff)));
}

/// Check u ∼ v (projective equality, both nonzero) in U_q⁺.
fn check_proportional(
    v: &mut Verdict,
    ctx: &Nichols,
    lhs: &FreeElement,
    rhs: &FreeElement,
    label: impl FnOnce() -> String,
) {
    let a = ctx.omega(lhs);
    let b = ctx.omega(rhs);
    let ok = !a.is_zero() && a.is_proportional(&b);
    v.check(ok, || format!("{}: {a} is not proportional to {b}", label()));
}

fn contexts(n_max: usize, mode: Mode) -> Vec<Nichols> {
    (1..=n_max).map(|n| Nichols::new(Bicharacter::new(n, mode))).collect()
}

// ---------------------------------------------------------------- identities

/// A random element of total degree `total` using only letters lo..=hi.
fn random_in_range<R: Rng>(rng: &mut R, n: usize, lo: usize, hi: usize, total: usize, terms: usize) -> FreeElement {
    let mut d = DegreeVector::zero(n);
    for _ in 0..total {
        d.0[rng.gen_range(lo..=hi) - 1] += 1;
    }
    random_of_degree(rng, &d, terms)
}

/// A random homogeneous element of total degree 1..=max_deg with up to
/// max_terms words.
fn rand_elem<R: Rng>(rng: &mut R, n: usize, max_deg: usize, max_terms: usize) -> FreeElement {
    let d = rng.gen_range(1..=max_deg);
    let t = rng.gen_range(1..=max_terms);
    random_homogeneous(rng, n, d, t)
}

/// Two random elements with separated supports (some letter index lies
/// strictly between them), in random order.
fn separated_pair<R: Rng>(rng: &mut R, n: usize, deg: (usize, usize)) -> (FreeElement, FreeElement) {
    let a = rng.gen_range(1..=n - 2);
    let lo = random_in_range(rng, n, 1, a, deg.0, 2);
    let hi = random_in_range(rng, n, a + 2, n, deg.1, 2);
    if rng.gen_bool(0.5) {
        (lo, hi)
    } else {
        (hi, lo)
    }
}

/// The Jacobi and ad-identities on random homogeneous triples.  The
/// unconditional identities are checked in the free algebra; the
/// conditional ones are checked in U_q⁺ on triples constructed so that the
/// side condition holds there (separated supports).
pub fn identity_suite(triples: usize, seed: u64, mode: Mode) -> Result<Verdict, NicholsError> {
    let mut out = Verdict::new("identities");
    let ctxs = contexts(4, mode);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for id in Identity::ALL {
        let mut v = Verdict::new(id.to_string());
        let mut done = 0;
        let mut attempts = 0;
        while done < triples {
            attempts += 1;
            if attempts > 20 * triples {
                v.fail(format!("only {done} triples satisfied the side condition"));
                break;
            }
            let (u, vv, w, n);
            if id.is_unconditional() {
                n = rng.gen_range(1..=4);
                u = rand_elem(&mut rng, n, 5, 3);
                vv = rand_elem(&mut rng, n, 5, 3);
                w = rand_elem(&mut rng, n, 5, 3);
            } else {
                n = rng.gen_range(3..=4);
                let third = rand_elem(&mut rng, n, 2, 2);
                let degs = (rng.gen_range(1..=2), rng.gen_range(1..=2));
                let (a, c) = separated_pair(&mut rng, n, degs);
                match id {
                    Identity::JacobiConditional | Identity::AdProductConditional => {
                        (u, vv, w) = (a, third, c);
                    }
                    _ => {
                        (u, vv, w) = (a, c, third);
                    }
                }
            }
            let ctx = &ctxs[n - 1];
            let b = ctx.bichar();
            if !side_condition(id, b, &u, &vv, &w, &|x| ctx.is_zero(x))? {
                continue;
            }
            let r = residual(id, b, &u, &vv, &w)?;
            let ok = if id.is_unconditional() { r.is_zero() } else { ctx.is_zero(&r) };
            v.check(ok, || format!("n={n}, u={u}, v={vv}, w={w}: residual {r}"));
            done += 1;
        }
        out.absorb(v);
    }
    Ok(out)
}

// ---------------------------------------------------------------- omega

/// Serre relations vanish under Ω for every n ≤ `n_max`, and Ω is
/// multiplicative on `pairs` random pairs (degrees ≤ 3).
pub fn omega_suite(n_max: usize, pairs: usize, seed: u64, mode: Mode) -> Result<Verdict, NicholsError> {
    let mut out = Verdict::new("omega");
    let ctxs = contexts(n_max, mode);
    let x = FreeElement::letter;
    for ctx in &ctxs {
        let n = ctx.n();
        let b = ctx.bichar();
        for i in 1..=n {
            if i < n {
                let xi = skew_bracket(b, &x(i), &x(i + 1))?;
                let r1 = skew_bracket(b, &x(i), &xi)?;
                let r2 = skew_bracket(b, &xi, &x(i + 1))?;
                let (o1, o2) = (ctx.omega(&r1), ctx.omega(&r2));
                out.check(o1.is_zero(), || format!("n={n}: [x{i},[x{i},x{}]] {}", i + 1, first_discrepancy(&o1)));
                out.check(o2.is_zero(), || format!("n={n}: [[x{i},x{}],x{}] {}", i + 1, i + 1, first_discrepancy(&o2)));
            }
            for j in 1..=n {
                if i.abs_diff(j) > 1 {
                    let o = ctx.omega(&skew_bracket(b, &x(i), &x(j))?);
                    out.check(o.is_zero(), || format!("n={n}: [x{i},x{j}] {}", first_discrepancy(&o)));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let n = rng.gen_range(1..=n_max.min(3));
        let ctx = &ctxs[n - 1];
        let u = rand_elem(&mut rng, n, 3, 3);
        let v = rand_elem(&mut rng, n, 3, 3);
        let lhs = ctx.omega(&(&u * &v));
        let rhs = ctx.shuffle(&ctx.omega(&u), &ctx.omega(&v));
        let diff = &lhs - &rhs;
        out.check(diff.is_zero(), || format!("n={n}, u={u}, v={v}: Ω(uv) ≠ Ω(u)·Ω(v), {}", first_discrepancy(&diff)));
    }
    Ok(out)
}

// ---------------------------------------------------------------- pbw

/// Dimension data of one multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwRank {
    pub degree: DegreeVector,
    pub monomials: usize,
    pub monomial_rank: usize,
    pub word_rank: usize,
}

/// Every multidegree of total degree 1..=bound in n letters.
pub fn multidegrees(n: usize, bound: u32) -> Vec<DegreeVector> {
    let mut out = Vec::new();
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<DegreeVector>) {
        if cur.len() == n {
            if cur.iter().sum::<u32>() > 0 {
                out.push(DegreeVector(cur.clone()));
            }
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    go(n, bound, &mut Vec::new(), &mut out);
    out
}

/// For one multidegree: the number of PBW monomials, the exact rank of
/// their Ω-images and the exact rank of Ω on all words of that degree.
///
/// The word image of degree d is Σ_i Ω(words of degree d − e_i) ⧢ (x_i).
/// When every degree d − e_i has already passed, those lower images are
/// the PBW spans, so {Ω(b)⧢(x_i) : b a PBW monomial of degree d − e_i}
/// spans the word image.  [`pbw_suite`] checks every degree up to the
/// bound, so by induction on total degree the computed word ranks are exact.
pub fn pbw_rank(ctx: &Nichols, d: &DegreeVector) -> Result<PbwRank, NicholsError> {
    let n = ctx.n();
    let monos = pbw_monomials(d);
    let words = d.words();
    let images: Vec<CanonicalElement> = monos.iter().map(|m| ctx.omega_pbw(m)).collect::<Result<_, _>>()?;
    let mut gens: Vec<CanonicalElement> = Vec::new();
    for i in 1..=n {
        let mut e = DegreeVector::zero(n);
        e.0[i - 1] = 1;
        let Some(lower) = d.checked_sub(&e) else { continue };
        let xi = ctx.omega_word(&Word::letter(i));
        if lower.total() == 0 {
            gens.push(xi);
            continue;
        }
        for b in pbw_monomials(&lower) {
            gens.push(ctx.shuffle(&ctx.omega_pbw(&b)?, &xi));
        }
    }
    let column = |c: &CanonicalElement| -> Vec<LaurentPoly> { words.iter().map(|w| c.coeff(w)).collect() };
    let mut m = ExactMatrix::new(words.len(), monos.len());
    for (c, im) in images.iter().enumerate() {
        for (r, x) in column(im).into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    let monomial_rank = m.rank();
    let targets: Vec<Vec<LaurentPoly>> = gens.iter().map(column).collect();
    let word_rank = if m.columns_in_span(&targets)?.into_iter().all(|x| x) {
        monomial_rank
    } else {
        let mut full = ExactMatrix::new(words.len(), monos.len() + targets.len());
        for (c, t) in images.iter().map(column).chain(targets.iter().cloned()).enumerate() {
            for (r, x) in t.into_iter().enumerate() {
                full.set(r, c, x);
            }
        }
        full.rank()
    };
    Ok(PbwRank { degree: d.clone(), monomials: monos.len(), monomial_rank, word_rank })
}

/// PBW monomials form a basis: #monomials = rank of their images = rank of
/// Ω on the whole word space, for every multidegree up to the bound.
pub fn pbw_suite(n: usize, bound: u32, mode: Mode) -> Result<Verdict, NicholsError> {
    let mut out = Verdict::new("pbw");
    let ctx = Nichols::new(Bicharacter::new(n, mode));
    let degrees = multidegrees(n, bound);
    let ranks: Vec<Result<PbwRank, NicholsError>> = degrees.par_iter().map(|d| pbw_rank(&ctx, d)).collect();
    for r in ranks {
        let r = r?;
        out.check(r.monomials == r.monomial_rank && r.monomial_rank == r.word_rank, || {
            format!(
                "n={n}, degree {:?}: {} monomials, image rank {}, word rank {}",
                r.degree.0, r.monomials, r.monomial_rank, r.word_rank
            )
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------- derivatives

fn cut_list(g: &GenDesc) -> Vec<usize> {
    g.cuts()
}

/// The first-derivative formulas for u[k,m] and Ψ^S(k,m), all descriptors
/// at every n ≤ `n_max`: vanishing outside S_circle, the k-, (1+s_i)- and
/// (1+s_r)-derivatives with their exact scalars, the nonzero D_w scalar for
/// the piecewise word, and the length-one right legs of Δ^b.
pub fn derivative_suite(n_max: usize, mode: Mode) -> Result<Verdict, NicholsError> {
    let mut out = Verdict::new("derivatives");
    for ctx in contexts(n_max, mode) {
        let n = ctx.n();
        let b = ctx.bichar().clone();
        let c1 = one_minus_qinv();
        let c2 = &c1 * &c1;
        let ps = |g: &GenDesc| psi(&b, g);
        // u[k,m]
        let mut v = Verdict::new("u-derivatives");
        for k in 1..=n {
            for m in k..=n {
                let u = u_bracket(&b, k, m)?;
                for j in 1..=n {
                    let d = partial(&b, j, &u);
                    let rhs = if j != k {
                        FreeElement::zero()
                    } else if k == m {
                        FreeElement::one()
                    } else {
                        u_bracket(&b, k + 1, m)?.scale(&c1)
                    };
                    check_equal(&mut v, &ctx, &d, &rhs, || format!("n={n}, ∂_{j} u[{k},{m}]"));
                }
            }
        }
        out.absorb(v);
        let mut vanish = Verdict::new("vanishing");
        let mut first = Verdict::new("k-derivative");
        let mut top = Verdict::new("top-cut-derivative");
        let mut inner = Verdict::new("inner-cut-derivative");
        let mut dw = Verdict::new("piecewise-scalar");
        let mut legs = Verdict::new("length-one-legs");
        for g in all_descriptors(n) {
            let (k, m) = (g.k, g.m);
            let u = ps(&g)?;
            let sc = g.s_circle();
            let cuts = cut_list(&g);
            let label = |j: usize| format!("(n,k,m,S)=({n},{k},{m},{:?}), j={j}", cuts);
            for j in 1..=n {
                let d = partial(&b, j, &u);
                if !(j >= 1 && sc >> (j - 1) & 1 == 1) {
                    check_equal(&mut vanish, &ctx, &d, &FreeElement::zero(), || label(j));
                }
            }
            if let (Some(&s1), Some(&sr)) = (cuts.first(), cuts.last()) {
                // ∂_k
                let d = partial(&b, k, &u);
                let rhs = if s1 == k {
                    FreeElement::zero()
                } else {
                    let lam = &c1 * &LaurentPoly::monomial(b.p_deg(&DegreeVector::interval(n, 1 + s1, m), &DegreeVector::interval(n, k, k)));
                    ps(&g.sub(k + 1, m))?.scale(&lam)
                };
                check_equal(&mut first, &ctx, &d, &rhs, || label(k));
                // ∂_{1+s_r}
                let j = 1 + sr;
                let d = partial(&b, j, &u);
                let rhs = if j != m {
                    &u_bracket(&b, 2 + sr, m)?.scale(&c2) * &ps(&g.sub(k, sr))?
                } else {
                    ps(&g.sub(k, sr))?.scale(&c1)
                };
                check_equal(&mut top, &ctx, &d, &rhs, || label(j));
                // ∂_{1+s_i}, i < r
                for w in cuts.windows(2) {
                    let (si, sn) = (w[0], w[1]);
                    let j = 1 + si;
                    let d = partial(&b, j, &u);
                    let rhs = if sn > 1 + si {
                        let mu = &c2
                            * &LaurentPoly::monomial(
                                b.p_deg(&DegreeVector::interval(n, 1 + sn, m), &DegreeVector::interval(n, j, j)),
                            );
                        (&ps(&g.sub(2 + si, m))? * &ps(&g.sub(k, si))?).scale(&mu)
                    } else {
                        FreeElement::zero()
                    };
                    check_equal(&mut inner, &ctx, &d, &rhs, || label(j));
                }
            }
            let s = d_w(&b, &u_pw(&g), &u);
            let ok = s.degree(n)?.is_none_or(|d| d.total() == 0) && !scalar_part(&s).is_zero();
            dw.check(ok, || format!("(n,k,m,S)=({n},{k},{m},{cuts:?}): Ψ·D_w = {s}"));
            let c = ctx.omega(&u);
            let got: Vec<usize> = deconcat(&c)
                .into_iter()
                .filter(|(_, r)| r.len() == 1)
                .map(|(_, r)| r.letters().next().unwrap_or(0))
                .collect();
            // j − 1 ∈ S_circle is necessary; the k- and inner-cut formulas
            // vanish exactly when j itself is a cut.
            let want: Vec<usize> = (1..=n).filter(|&j| sc >> (j - 1) & 1 == 1 && !cuts.contains(&j)).collect();
            legs.check(got == want, || format!("(n,k,m,S)=({n},{k},{m},{cuts:?}): legs {got:?}, expected {want:?}"));
        }
        for x in [vanish, first, top, inner, dw, legs] {
            out.absorb(x);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- structure

/// All binary bracketings of the letters k..=m.
fn alignments(k: usize, m: usize) -> Vec<BracketTerm> {
    if k == m {
        return vec![BracketTerm::Letter(k)];
    }
    let mut out = Vec::new();
    for s in k..m {
        for l in alignments(k, s) {
            for r in alignments(s + 1, m) {
                out.push(BracketTerm::bracket(l.clone(), r));
            }
        }
    }
    out
}

/// Bracket-shape laws of the Ψ elements at every n ≤ `n_max`: alignment
/// independence of u[k,m], the recursive splittings, the cut insertion
/// formula, decoding, and commutation of separated elements.
pub fn structure_suite(n_max: usize, mode: Mode) -> Result<Verdict, NicholsError> {
    let mut out = Verdict::new("structure");
    for ctx in contexts(n_max, mode) {
        let n = ctx.n();
        let b = ctx.bichar().clone();
        let ps = |g: &GenDesc| psi(&b, g);
        let x = FreeElement::letter;
        let mut align = Verdict::new("alignment");
        for k in 1..=n {
            for m in k..=n {
                let u = u_bracket(&b, k, m)?;
                for t in alignments(k, m) {
                    check_equal(&mut align, &ctx, &t.eval(&b)?, &u, || format!("n={n}: {t} vs u[{k},{m}]"));
                }
            }
        }
        out.absorb(align);
        let mut split = Verdict::new("split");
        let mut ends = Verdict::new("end-letters");
        let mut cut = Verdict::new("cut-insertion");
        let mut dec = Verdict::new("decode");
        let phi = |i: usize| n + 1 - i;
        let bd = b.relabeled(phi)?;
        for g in all_descriptors(n) {
            let (k, m) = (g.k, g.m);
            let cuts = g.cuts();
            let label = || format!("(n,k,m,S)=({n},{k},{m},{cuts:?})");
            let u = ps(&g)?;
            let has = |i: usize| cuts.contains(&i);
            for t in k..m {
                if has(t) {
                    continue;
                }
                let br = skew_bracket(&b, &ps(&g.sub(k, t))?, &ps(&g.sub(t + 1, m))?)?;
                check_proportional(&mut split, &ctx, &u, &br, || format!("{}, t={t}", label()));
                // inserting the cut t
                let bounds: Vec<usize> = std::iter::once(k - 1).chain(cuts.iter().copied()).chain([m]).collect();
                let i = bounds.iter().position(|&s| s > t).expect("m > t");
                let (lo, hi) = (bounds[i - 1], bounds[i]);
                let du = DegreeVector::interval(n, 1 + lo, t);
                let dv = DegreeVector::interval(n, 1 + t, hi);
                let with_t = GenDesc { s: g.s | 1 << t, ..g };
                let mut rhs = (&ps(&g.sub(1 + t, m))? * &ps(&g.sub(k, t))?).scale(&one_minus_qinv());
                rhs.add_scaled(&u, &-&LaurentPoly::monomial(b.p_deg(&dv, &du)));
                check_equal(&mut cut, &ctx, &ps(&with_t)?, &rhs, || format!("{}, t={t}", label()));
            }
            if m > k {
                let left = ps(&g.sub(k, m - 1))?;
                let rhs = if has(m - 1) { skew_bracket(&b, &x(m), &left)? } else { skew_bracket(&b, &left, &x(m))? };
                check_proportional(&mut ends, &ctx, &u, &rhs, || format!("{} at m", label()));
                let right = ps(&g.sub(k + 1, m))?;
                let rhs = if !has(k) { skew_bracket(&b, &x(k), &right)? } else { skew_bracket(&b, &right, &x(k))? };
                check_proportional(&mut ends, &ctx, &u, &rhs, || format!("{} at k", label()));
            }
            let h = g.decode();
            let y = psi(&bd, &h)?.relabel(phi);
            check_proportional(&mut dec, &ctx, &u, &y, || format!("{} decoded to {h}", label()));
        }
        for v in [split, ends, cut, dec] {
            out.absorb(v);
        }
        let mut sep = Verdict::new("separated");
        let descs = all_descriptors(n);
        for g in &descs {
            for h in &descs {
                if separated((g.k, g.m), (h.k, h.m)) {
                    let br = skew_bracket(&b, &ps(g)?, &ps(h)?)?;
                    let o = ctx.omega(&br);
                    sep.check(o.is_zero(), || format!("n={n}: [{g},{h}] {}", first_discrepancy(&o)));
                }
            }
        }
        out.absorb(sep);
    }
    Ok(out)
}

// ---------------------------------------------------------------- coideals

/// Every U_θ at rank n passes the coideal test and the differential
/// closure test up to the bound.
pub fn coideal_suite(n: usize, bound: u32, mode: Mode) -> Result<Verdict, NicholsError> {
    let ctx = Nichols::new(Bicharacter::new(n, mode));
    let thetas: Vec<_> = enumerate_theta(n).collect();
    let results: Vec<Result<(Verdict, Verdict), NicholsError>> = thetas
        .par_iter()
        .map(|t| {
            let p = build_rt(t);
            let gens = profile_generators(&ctx, &p)?;
            let mut c = coideal_check(&ctx, &gens, bound)?;
            c.name = format!("coideal U_{t}");
            let mut d = differential_closure_check(&ctx, &p, bound)?;
            d.name = format!("differential U_{t}");
            Ok((c, d))
        })
        .collect();
    let mut out = Verdict::new("coideal");
    for r in results {
        let (c, d) = r?;
        out.absorb(c);
        out.absorb(d);
    }
    Ok(out)
}

/// The derivative-span equality for every descriptor at rank n.
pub fn theorem26_suite(n: usize, mode: Mode) -> Result<Verdict, NicholsError> {
    let ctx = Nichols::new(Bicharacter::new(n, mode));
    let mut out = Verdict::new("derivative-span");
    for g in all_descriptors(n) {
        out.absorb(theorem26_span_check(&ctx, &g)?);
    }
    Ok(out)
}
