use crate::bits::{has, mask_to_vec, Mask};
use crate::error::RootError;
use crate::gendesc::GenDesc;
use crate::rt::{build_rt, RTProfile, RootInterval};
use crate::theta::{enumerate_theta, RootSequence};

/// The U-roots contributed by the derivative closure of one generator
/// Ψ^S(k,m): for every i ∈ [k,m] with i = k or i−1 ∉ S, the degrees [i:b]
/// with b ∈ (S ∩ [i,m−1]) ∪ {m}.
pub fn root_set_of_generator(g: &GenDesc) -> Vec<RootInterval> {
    let se = g.s_eff();
    let mut out = Vec::new();
    for i in g.k..=g.m {
        if i == g.k || !has(se, i - 1) {
            for b in mask_to_vec(g.s_bullet()) {
                if b >= i {
                    out.push(RootInterval { k: i, m: b });
                }
            }
        }
    }
    out
}

/// Root sets {[k:m] : m ∈ T_k} of every root sequence of one rank, stored as
/// the row masks T_1, …, T_n.
pub struct RootTable {
    n: usize,
    rows: Vec<(RootSequence, Vec<Mask>)>,
}

impl RootTable {
    pub fn new(n: usize) -> Self {
        let rows = enumerate_theta(n)
            .map(|th| {
                let p = build_rt(&th);
                let t = (1..=n).map(|k| p.t(k)).collect();
                (th, t)
            })
            .collect();
        RootTable { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn contains(a: &[Mask], b: &[Mask]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }
}

/// The root sequence of the smallest coideal subalgebra containing the given
/// generators: the unique ⊆-minimal root set containing every root forced by
/// the generators.
pub fn generated_theta(table: &RootTable, gens: &[GenDesc]) -> Result<RootSequence, RootError> {
    let n = table.n;
    let mut need = vec![0 as Mask; n];
    for g in gens {
        if g.n != n {
            return Err(RootError::RankMismatch(n, g.n));
        }
        for r in root_set_of_generator(g) {
            need[r.k - 1] |= 1 << r.m;
        }
    }
    let cands: Vec<&(RootSequence, Vec<Mask>)> = table
        .rows
        .iter()
        .filter(|(_, t)| RootTable::contains(&need, t))
        .collect();
    let minimal: Vec<&RootSequence> = cands
        .iter()
        .filter(|(_, t)| {
            !cands
                .iter()
                .any(|(_, o)| o != t && RootTable::contains(o, t))
        })
        .map(|(th, _)| th)
        .collect();
    match minimal.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(RootError::Ambiguous(format!(
            "{} minimal root sets contain the generators",
            minimal.len()
        ))),
    }
}

/// A smallest set of generators Ψ^{T_k}(k,m), m ∈ R_k, that generates U_θ as
/// a right coideal subalgebra over the group algebra, ordered by decreasing
/// length and then increasing k.  Among sets of equal size the first in
/// that order is chosen.
pub fn rcs_generators(p: &RTProfile, table: &RootTable) -> Vec<GenDesc> {
    let mut cands = p.simple_generators();
    cands.sort_by_key(|g| (std::cmp::Reverse(g.len()), g.k, g.m));
    let target = p.theta();
    if target.values().iter().all(|&t| t == 0) {
        return Vec::new();
    }
    for size in 1..=cands.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<GenDesc> = idx.iter().map(|&i| cands[i]).collect();
            if generated_theta(table, &chosen).ok().as_ref() == Some(target) {
                return chosen;
            }
            // next combination in lexicographic order
            let mut j = size;
            while j > 0 && idx[j - 1] == cands.len() - size + j - 1 {
                j -= 1;
            }
            if j == 0 {
                break;
            }
            idx[j - 1] += 1;
            for l in j..size {
                idx[l] = idx[l - 1] + 1;
            }
        }
    }
    cands
}
