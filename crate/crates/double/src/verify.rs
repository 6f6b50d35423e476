use crate::double::Double;
use crate::error::DoubleError;
use crate::graded::{tri_bracket, Graded};
use crate::group::GroupElement;
use crate::membership::{in_triple, ClosureSpace, Everything};
use crate::tri::TriangularElement;
use atlas_freealg::{psi, FreeElement};
use atlas_nichols::{SubalgebraSpan, Verdict};
use atlas_ring::LaurentPoly;
use atlas_rootdata::{build_rt, cond_pair, enumerate_theta, GenDesc, Mask, RootSequence};
use rayon::prelude::*;

/// Ψ^S(k,m) in the positive wing.
pub fn psi_plus(ctx: &Double, g: &GenDesc) -> Result<Graded, DoubleError> {
    Graded::positive(ctx, &psi(ctx.bichar(), g)?)
}

/// Ψ_−^S(k,m): the same bracket polynomial in the letters x_i⁻, built with
/// the negative-wing bicharacter.
pub fn psi_minus(ctx: &Double, g: &GenDesc) -> Result<Graded, DoubleError> {
    Graded::negative(ctx, &psi(ctx.neg_bichar(), g)?)
}

fn letter_minus(ctx: &Double, i: usize) -> Result<Graded, DoubleError> {
    Graded::negative(ctx, &FreeElement::letter(i))
}

fn pos_tri(ctx: &Double, g: &GenDesc) -> Result<TriangularElement, DoubleError> {
    Ok(ctx.pos_elem(&psi(ctx.bichar(), g)?))
}

fn with_group(ctx: &Double, h: GroupElement, a: &TriangularElement) -> TriangularElement {
    ctx.mul(&TriangularElement::group(h), a)
}

/// 1 − h for a group element h.
pub fn one_minus(h: GroupElement) -> TriangularElement {
    let n = h.n();
    &TriangularElement::one(n) - &TriangularElement::group(h)
}

/// [x_i, x_j⁻] = δ_ij (1 − h_i) for all i, j.
pub fn rela3_check(ctx: &Double) -> Result<Verdict, DoubleError> {
    let n = ctx.n();
    let mut v = Verdict::new("rela3");
    for i in 1..=n {
        for j in 1..=n {
            let br = tri_bracket(ctx, &Graded::positive(ctx, &FreeElement::letter(i))?, &letter_minus(ctx, j)?);
            let expected = if i == j { one_minus(GroupElement::h(n, i)) } else { TriangularElement::zero() };
            v.check(ctx.equal(&br.elem, &expected), || format!("[x{i}, x{j}-] = {}", br.elem));
        }
    }
    Ok(v)
}

/// The bracket [Ψ^S(k,m), Ψ_−^{S̄}(k,m)] with S̄ the complement of S in
/// [k, m−1].
pub fn sh_bracket(ctx: &Double, g: &GenDesc) -> Result<Graded, DoubleError> {
    Ok(tri_bracket(ctx, &psi_plus(ctx, g)?, &psi_minus(ctx, &g.complement())?))
}

/// (α, β) with β·[Ψ^S(k,m), Ψ_−^{S̄}(k,m)] = α·(1 − h_k⋯h_m), when the
/// bracket is proportional to 1 − h_k⋯h_m.
pub fn sh_scalar(ctx: &Double, g: &GenDesc) -> Result<Option<(LaurentPoly, LaurentPoly)>, DoubleError> {
    let br = sh_bracket(ctx, g)?;
    let target = one_minus(GroupElement::h_bar(ctx.n(), g.k, g.m));
    Ok(ctx.ratio(&br.elem, &target))
}

pub fn verify_sh(ctx: &Double, g: &GenDesc) -> Result<Verdict, DoubleError> {
    let mut v = Verdict::new("sh");
    let r = sh_scalar(ctx, g)?;
    v.check(r.is_some(), || format!("[{g}, Psi_-({})] is not proportional to 1 - h({}..{})", g.complement(), g.k, g.m));
    Ok(v)
}

/// The element that [Ψ^S(k,m), x_i⁻] is proportional to, or zero.
pub fn derm_expected(ctx: &Double, g: &GenDesc, i: usize) -> Result<TriangularElement, DoubleError> {
    let n = ctx.n();
    let (k, m) = (g.k, g.m);
    let s = g.s_eff();
    let in_s = |x: usize| x >= 1 && x < 64 && (s >> x) & 1 == 1;
    if i < k || i > m {
        return Ok(TriangularElement::zero());
    }
    if k == m {
        return Ok(one_minus(GroupElement::h(n, k)));
    }
    let h = GroupElement::h(n, i);
    if i == k {
        let t = pos_tri(ctx, &g.sub(k + 1, m))?;
        return Ok(if in_s(k) { t } else { with_group(ctx, h, &t) });
    }
    if i == m {
        let t = pos_tri(ctx, &g.sub(k, m - 1))?;
        return Ok(if in_s(m - 1) { with_group(ctx, h, &t) } else { t });
    }
    let prod = ctx.mul(&pos_tri(ctx, &g.sub(i + 1, m))?, &pos_tri(ctx, &g.sub(k, i - 1))?);
    Ok(match (in_s(i - 1), in_s(i)) {
        (true, false) => with_group(ctx, h, &prod),
        (false, true) => prod,
        _ => TriangularElement::zero(),
    })
}

/// Checks the case formula for [Ψ^S(k,m), x_i⁻], and for k < m that the
/// bracket lies in k[H]·prW^S(k,m) exactly when i is not an entrance.
pub fn verify_derm(ctx: &Double, g: &GenDesc, i: usize) -> Result<Verdict, DoubleError> {
    if i < g.k || i > g.m {
        return Err(DoubleError::BadIndex { i, k: g.k, m: g.m });
    }
    let mut v = Verdict::new("derm");
    let br = tri_bracket(ctx, &psi_plus(ctx, g)?, &letter_minus(ctx, i)?);
    let expected = derm_expected(ctx, g, i)?;
    let ok = if expected.is_zero() { ctx.is_zero(&br.elem) } else { ctx.ratio(&br.elem, &expected).is_some() };
    v.check(ok, || format!("[{g}, x{i}-] = {} does not match {}", br.elem, expected));
    if g.k < g.m {
        let inside = sin_membership(ctx, g, &br.elem)?;
        let entrance = (g.entrances() >> i) & 1 == 1;
        v.check(inside != entrance, || {
            format!("[{g}, x{i}-]: prW membership {inside}, entrance {entrance}")
        });
    }
    Ok(v)
}

fn sin_membership(ctx: &Double, g: &GenDesc, br: &TriangularElement) -> Result<bool, DoubleError> {
    let mut pos = ClosureSpace::new(ctx.positive(), &psi(ctx.bichar(), g)?);
    in_triple(ctx, br, &mut Everything, &mut pos)
}

fn sup(m: Mask) -> i64 {
    63 - m.leading_zeros() as i64
}

fn inf(m: Mask) -> i64 {
    m.trailing_zeros() as i64
}

/// Which hypothesis governs a cross-bracket [Ψ^S(k,m), Ψ_−^T(i,j)].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossCase {
    /// S^•∩T^• = S_∘∩T_∘ = ∅: the bracket vanishes.
    Zero,
    /// sup(S^•∩T^•) < inf(S̄_∘∩T̄_∘): the bracket lies in
    /// prW_−^T(i,j)·k[H]·prW^S(k,m).
    Inequality,
    /// i = k, j = m and T = S̄: same inclusion.
    Complementary,
    /// Neither condition holds; nothing is asserted.
    Open,
}

pub fn cross_case(gp: &GenDesc, gm: &GenDesc) -> CrossCase {
    let bullet = gp.s_bullet() & gm.s_bullet();
    if bullet == 0 && gp.s_circle() & gm.s_circle() == 0 {
        return CrossCase::Zero;
    }
    let circle = gp.complement().s_circle() & gm.complement().s_circle();
    if bullet == 0 || circle == 0 || sup(bullet) < inf(circle) {
        return CrossCase::Inequality;
    }
    if gp.k == gm.k && gp.m == gm.m && gm.s_eff() == gp.complement().s_eff() {
        return CrossCase::Complementary;
    }
    CrossCase::Open
}

/// The cross-bracket [Ψ^S(k,m), Ψ_−^T(i,j)].
pub fn cross_bracket(ctx: &Double, gp: &GenDesc, gm: &GenDesc) -> Result<Graded, DoubleError> {
    Ok(tri_bracket(ctx, &psi_plus(ctx, gp)?, &psi_minus(ctx, gm)?))
}

/// Whether a cross-bracket lies in prW_−^T(i,j)·k[H]·prW^S(k,m).
pub fn cross_inclusion(ctx: &Double, gp: &GenDesc, gm: &GenDesc, br: &TriangularElement) -> Result<bool, DoubleError> {
    let mut neg = ClosureSpace::new(ctx.negative(), &psi(ctx.neg_bichar(), gm)?);
    let mut pos = ClosureSpace::new(ctx.positive(), &psi(ctx.bichar(), gp)?);
    in_triple(ctx, br, &mut neg, &mut pos)
}

pub fn verify_cross(ctx: &Double, gp: &GenDesc, gm: &GenDesc) -> Result<Verdict, DoubleError> {
    let mut v = Verdict::new("cross");
    let case = cross_case(gp, gm);
    if case == CrossCase::Open {
        return Ok(v);
    }
    let br = cross_bracket(ctx, gp, gm)?;
    match case {
        CrossCase::Zero => v.check(ctx.is_zero(&br.elem), || format!("[{gp}, {gm}-] should vanish: {}", br.elem)),
        _ => {
            let ok = cross_inclusion(ctx, gp, gm, &br.elem)?;
            v.check(ok, || format!("[{gp}, {gm}-] ({case:?}) leaves prW- k[H] prW"))
        }
    }
    Ok(v)
}

/// Verdicts of one ordered pair (U⁺_θ, U⁻_θ′).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub theta: RootSequence,
    pub theta_neg: RootSequence,
    /// Every cross-bracket of generators lies in U⁻_θ′·k[H]·U⁺_θ.
    pub closure: bool,
    /// The combinatorial pair condition.
    pub condition: bool,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub n: usize,
    pub bound: u32,
    pub pairs: Vec<PairOutcome>,
}

impl ConsistencyReport {
    pub fn accepted(&self) -> usize {
        self.pairs.iter().filter(|p| p.closure).count()
    }

    pub fn disagreements(&self) -> Vec<&PairOutcome> {
        self.pairs.iter().filter(|p| p.closure != p.condition).collect()
    }

    pub fn verdict(&self) -> Verdict {
        let mut v = Verdict::new("consistency");
        for p in &self.pairs {
            v.check(p.closure == p.condition, || {
                format!("pair {} / {}: closure {} but condition {}", p.theta, p.theta_neg, p.closure, p.condition)
            });
        }
        v
    }
}

/// Decides, for the pair (θ, θ′), whether all brackets [Ψ⁺, Ψ⁻] of PBW
/// generators lie in U⁻_θ′·k[H]·U⁺_θ, truncated at `bound`.
pub fn pair_closure(ctx: &Double, theta: &RootSequence, theta_neg: &RootSequence, bound: u32) -> Result<bool, DoubleError> {
    let gp = build_rt(theta).pbw_generators();
    let gm = build_rt(theta_neg).pbw_generators();
    let pos_gens: Vec<FreeElement> = gp.iter().map(|g| psi(ctx.bichar(), g)).collect::<Result<_, _>>()?;
    let neg_gens: Vec<FreeElement> = gm.iter().map(|g| psi(ctx.neg_bichar(), g)).collect::<Result<_, _>>()?;
    let mut pos = SubalgebraSpan::new(ctx.positive(), &pos_gens, bound)?;
    let mut neg = SubalgebraSpan::new(ctx.negative(), &neg_gens, bound)?;
    for a in &pos_gens {
        let a = Graded::positive(ctx, a)?;
        for b in &neg_gens {
            let br = tri_bracket(ctx, &a, &Graded::negative(ctx, b)?);
            if !in_triple(ctx, &br.elem, &mut neg, &mut pos)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs [`pair_closure`] over every ordered pair of root sequences and
/// records the combinatorial pair condition next to it.
pub fn consistency_experiment(ctx: &Double, bound: u32) -> Result<ConsistencyReport, DoubleError> {
    let n = ctx.n();
    let thetas: Vec<RootSequence> = enumerate_theta(n).collect();
    let jobs: Vec<(&RootSequence, &RootSequence)> =
        thetas.iter().flat_map(|a| thetas.iter().map(move |b| (a, b))).collect();
    let pairs = jobs
        .par_iter()
        .map(|(a, b)| {
            let closure = pair_closure(ctx, a, b, bound)?;
            let condition = cond_pair(&build_rt(a), &build_rt(b))?.holds;
            Ok(PairOutcome { theta: (*a).clone(), theta_neg: (*b).clone(), closure, condition })
        })
        .collect::<Result<Vec<_>, DoubleError>>()?;
    Ok(ConsistencyReport { n, bound, pairs })
}
