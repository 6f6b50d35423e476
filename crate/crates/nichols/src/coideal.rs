use crate::canonical::CanonicalElement;
use crate::error::NicholsError;
use crate::omega::{deconcat, Nichols};
use crate::pbw::{PbwMonomial, SuperLetter};
use crate::span::{DerivativeClosure, SubalgebraSpan};
use crate::verdict::Verdict;
use atlas_freealg::{partial, partial_star, psi, DegreeVector, FreeElement, Word};
use atlas_ring::Echelon;
use atlas_rootdata::{GenDesc, RTProfile};
use std::collections::BTreeSet;

/// Right coideal test: for every basis element u of the generated
/// subalgebra up to the bound, each left leg of the braided coproduct
/// Δ^b(Ω(u)), grouped by right leg, lies in the subalgebra again.
pub fn coideal_check(ctx: &Nichols, generators: &[FreeElement], bound: u32) -> Result<Verdict, NicholsError> {
    let mut v = Verdict::new("coideal");
    let mut span = SubalgebraSpan::new(ctx, generators, bound)?;
    for d in span.reachable_degrees() {
        for u in span.basis(&d)? {
            for (left, right) in deconcat(&u) {
                if right.is_empty() {
                    continue;
                }
                let ok = span.contains(&left)?;
                v.check(ok, || format!("degree {:?}: left leg {left} of right leg {right} not in the span", d.0));
            }
        }
    }
    Ok(v)
}

/// The Ψ^{T_k}(k,m), m ∈ T_k, of a root profile as free-algebra elements.
pub fn profile_generators(ctx: &Nichols, profile: &RTProfile) -> Result<Vec<FreeElement>, NicholsError> {
    profile
        .pbw_generators()
        .iter()
        .map(|g| Ok(psi(ctx.bichar(), g)?))
        .collect()
}

/// Every first derivative ∂_i of every PBW generator of U_θ lies in U_θ.
pub fn differential_closure_check(ctx: &Nichols, profile: &RTProfile, bound: u32) -> Result<Verdict, NicholsError> {
    let mut v = Verdict::new("differential-closure");
    let gens = profile_generators(ctx, profile)?;
    let mut span = SubalgebraSpan::new(ctx, &gens, bound)?;
    for (g, desc) in gens.iter().zip(profile.pbw_generators()) {
        for i in 1..=ctx.n() {
            let d = partial(ctx.bichar(), i, g);
            let ok = span.contains_element(&d)?;
            v.check(ok, || format!("∂_{i} {desc} not in U_{}", profile.theta()));
        }
    }
    Ok(v)
}

/// Intervals [a,b] and [a',b'] are separated when some index lies strictly
/// between them.
pub fn separated(x: (usize, usize), y: (usize, usize)) -> bool {
    x.1 + 1 < y.0 || y.1 + 1 < x.0
}

/// The descriptors Ψ^S(a,b), k ≤ a ≤ b ≤ m, with b ∈ S or b = m, and
/// a − 1 ∉ S or a = k.
pub fn w_set(g: &GenDesc) -> Vec<GenDesc> {
    let s = g.s_eff();
    let has = |i: usize| i < 64 && s >> i & 1 == 1;
    let mut out = Vec::new();
    for a in g.k..=g.m {
        for b in a..=g.m {
            if (has(b) || b == g.m) && (a == g.k || !has(a - 1)) {
                out.push(g.sub(a, b));
            }
        }
    }
    out
}

/// Per-multidegree spans of W^S(k,m), of all products of pairwise
/// separated members, and of the scalars.
fn w_span(ctx: &Nichols, g: &GenDesc) -> Result<std::collections::BTreeMap<DegreeVector, Echelon<Word>>, NicholsError> {
    let n = ctx.n();
    let w = w_set(g);
    let images: Vec<(DegreeVector, CanonicalElement)> = w
        .iter()
        .map(|x| Ok((DegreeVector::interval(n, x.k, x.m), ctx.omega(&psi(ctx.bichar(), x)?))))
        .collect::<Result<_, NicholsError>>()?;
    let mut spans: std::collections::BTreeMap<DegreeVector, Echelon<Word>> = Default::default();
    spans.entry(DegreeVector::zero(n)).or_default().insert(&CanonicalElement::one().to_sparse());
    // Subsets of pairwise separated members, built in increasing index
    // order; the empty product is the unit.
    fn go(
        ctx: &Nichols,
        w: &[GenDesc],
        images: &[(DegreeVector, CanonicalElement)],
        start: usize,
        chosen: &mut Vec<usize>,
        acc: &CanonicalElement,
        deg: &DegreeVector,
        spans: &mut std::collections::BTreeMap<DegreeVector, Echelon<Word>>,
    ) {
        for j in start..w.len() {
            if chosen.iter().any(|&i| !separated((w[i].k, w[i].m), (w[j].k, w[j].m))) {
                continue;
            }
            let prod = ctx.shuffle(acc, &images[j].1);
            let d = deg.add(&images[j].0);
            spans.entry(d.clone()).or_default().insert(&prod.to_sparse());
            chosen.push(j);
            go(ctx, w, images, j + 1, chosen, &prod, &d, spans);
            chosen.pop();
        }
    }
    go(ctx, &w, &images, 0, &mut Vec::new(), &CanonicalElement::one(), &DegreeVector::zero(n), &mut spans);
    Ok(spans)
}

fn compare_spans(
    v: &mut Verdict,
    g: &GenDesc,
    a: &std::collections::BTreeMap<DegreeVector, Echelon<Word>>,
    b: &std::collections::BTreeMap<DegreeVector, Echelon<Word>>,
) {
    let degrees: BTreeSet<&DegreeVector> = a.keys().chain(b.keys()).collect();
    for d in degrees {
        let ea = a.get(d);
        let eb = b.get(d);
        let ra = ea.map_or(0, |e| e.rank());
        let rb = eb.map_or(0, |e| e.rank());
        let contained = match (ea, eb) {
            (Some(ea), Some(eb)) => eb.rows().all(|r| ea.contains(r)),
            (_, None) => true,
            (None, Some(eb)) => eb.rank() == 0,
        };
        v.check(ra == rb && contained, || {
            format!("{g}: degree {:?} derivative span has dimension {ra}, W-span {rb}", d.0)
        });
    }
}

/// Span equality, per multidegree, between the iterated left-derivative
/// closure of Ψ^S(k,m) and the span of W^S(k,m), its pairwise separated
/// products and the scalars.
pub fn theorem26_span_check(ctx: &Nichols, g: &GenDesc) -> Result<Verdict, NicholsError> {
    let mut v = Verdict::new("derivative-span");
    let b = ctx.bichar().clone();
    let u = psi(&b, g)?;
    let closure = DerivativeClosure::compute(ctx, &u, |i, x| partial(&b, i, x));
    let w = w_span(ctx, g)?;
    compare_spans(&mut v, g, &closure.spans, &w);
    Ok(v)
}

/// The same comparison for the closure under the right-hand calculus ∂*_i.
/// Reported separately: the two calculi generate different subspaces in
/// general.
pub fn dual_span_check(ctx: &Nichols, g: &GenDesc) -> Result<Verdict, NicholsError> {
    let mut v = Verdict::new("dual-derivative-span");
    let b = ctx.bichar().clone();
    let u = psi(&b, g)?;
    let closure = DerivativeClosure::compute(ctx, &u, |i, x| partial_star(&b, i, x));
    let w = w_span(ctx, g)?;
    compare_spans(&mut v, g, &closure.spans, &w);
    Ok(v)
}

/// Read off the descriptor of an element of the shape
/// c = u[k,m] + Σ_{i<m} A_i·u[k,i] (A_i involving only x_{i+1},…,x_m)
/// and return Ψ^S(k,m) with S = {i : A_i ≠ 0}.  The result is checked to
/// lie in the subalgebra generated by the derivative closure of c.
pub fn psi_from_element(ctx: &Nichols, c: &FreeElement) -> Result<(GenDesc, FreeElement), NicholsError> {
    let n = ctx.n();
    let d = c
        .degree(n)?
        .ok_or_else(|| NicholsError::Shape("zero element".into()))?;
    let support: Vec<usize> = (1..=n).filter(|&i| d.0[i - 1] > 0).collect();
    let (k, m) = match (support.first(), support.last()) {
        (Some(&k), Some(&m)) if d == DegreeVector::interval(n, k, m) => (k, m),
        _ => return Err(NicholsError::Shape(format!("degree {:?} is not an interval [k:m]", d.0))),
    };
    let coords = ctx.pbw_decompose(c)?;
    let lead = PbwMonomial::single(SuperLetter::new(k, m));
    if coords.numerator(&lead).is_zero() {
        return Err(NicholsError::Shape(format!("no u[{k},{m}] term")));
    }
    let mut s: Vec<usize> = Vec::new();
    for (mono, _) in coords.support() {
        if *mono == lead {
            continue;
        }
        match mono.largest() {
            Some(SuperLetter { k: a, m: i }) if a == k && i < m => s.push(i),
            _ => return Err(NicholsError::Shape(format!("PBW term {mono} is not of the form A·u[{k},i]"))),
        }
    }
    let g = GenDesc::from_list(n, k, m, &s).map_err(|e| NicholsError::Shape(e.to_string()))?;
    let out = psi(ctx.bichar(), &g)?;
    let b = ctx.bichar().clone();
    let closure = DerivativeClosure::compute(ctx, c, |i, x| partial(&b, i, x));
    let total = d.total();
    let mut span = SubalgebraSpan::new(ctx, &closure.representatives, total)?;
    if !span.contains_element(&out)? {
        return Err(NicholsError::Inconsistent(format!("{g} is not generated by the derivatives of {c}")));
    }
    Ok((g, out))
}
