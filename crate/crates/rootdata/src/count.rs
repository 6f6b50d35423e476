use crate::bits::Mask;
use crate::pair::{cell_cond1, cell_cond2, cond_pair, CellVerdict};
use crate::rt::{build_rt, RTProfile};
use crate::theta::{enumerate_theta, RootSequence};
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

/// Result of counting compatible pairs (θ, θ′).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FullCount {
    /// Number of ordered pairs satisfying the pair condition.
    pub total: u64,
    /// Of these, pairs where every cell satisfies condition 1.
    pub all_cond1: u64,
}

impl FullCount {
    /// Accepted pairs needing condition 2 at some diagonal cell.
    pub fn uses_cond2(&self) -> u64 {
        self.total - self.all_cond1
    }
}

/// Number of distinct R/T profiles over all root sequences of rank `n`.
pub fn count_borel(n: usize) -> u64 {
    let distinct: HashSet<Vec<Mask>> = enumerate_theta(n)
        .map(|th| {
            let p = build_rt(&th);
            (1..=n).map(|k| p.r(k)).collect()
        })
        .collect();
    distinct.len() as u64
}

/// Brute force over all ordered pairs; the reference for [`count_full`].
pub fn count_full_naive(n: usize) -> FullCount {
    let profiles: Vec<RTProfile> = enumerate_theta(n).map(|t| build_rt(&t)).collect();
    profiles
        .par_iter()
        .map(|a| {
            let mut c = FullCount::default();
            for b in &profiles {
                let r = cond_pair(a, b).expect("same rank");
                if r.holds {
                    c.total += 1;
                    if r.cells.iter().all(|&v| v == CellVerdict::Cond1) {
                        c.all_cond1 += 1;
                    }
                }
            }
            c
        })
        .reduce(FullCount::default, add)
}

fn add(a: FullCount, b: FullCount) -> FullCount {
    FullCount {
        total: a.total + b.total,
        all_cond1: a.all_cond1 + b.all_cond1,
    }
}

/// A fixed-size bitset over row-signature indices.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(len: usize) -> Self {
        let mut v = vec![u64::MAX; len.div_ceil(64)];
        if len % 64 != 0 {
            *v.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
        }
        Bits(v)
    }
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= b;
        }
    }
}

/// One node of the suffix tree of root sequences: a choice of
/// (θ_i, …, θ_n), identified at level `i` by its row signature (T_i, θ̃_i).
struct Node {
    sig: u32,
    children: std::ops::Range<u32>,
}

/// Precomputed data: distinct row signatures per row, compatibility tables
/// and the suffix tree.
struct Engine {
    n: usize,
    /// sigs[k−1] = distinct (T_k, θ̃_k) pairs for row k
    sigs: Vec<Vec<(Mask, i64)>>,
    /// levels[i−1] = nodes at level i; root children are the nodes of level n
    levels: Vec<Vec<Node>>,
}

impl Engine {
    fn new(n: usize) -> Self {
        let mut sigs: Vec<Vec<(Mask, i64)>> = vec![Vec::new(); n];
        let mut index: Vec<HashMap<(Mask, i64), u32>> = vec![HashMap::new(); n];
        let mut levels: Vec<Vec<Node>> = (0..n).map(|_| Vec::new()).collect();
        // Build level by level from row n down to row 1.  `frontier` holds,
        // for each node of the current level, its T-suffix t[i..=n].
        let mut frontier: Vec<Vec<Mask>> = vec![vec![0; n + 2]];
        let mut parents_range: Vec<std::ops::Range<u32>> = Vec::new();
        for i in (1..=n).rev() {
            let mut next = Vec::new();
            parents_range.clear();
            for t in &frontier {
                let start = levels[i - 1].len() as u32;
                for th_i in 0..=(n - i + 1) {
                    let tk = row_t(n, i, th_i, t);
                    let key = (tk, i as i64 + th_i as i64 - 1);
                    let sig = *index[i - 1].entry(key).or_insert_with(|| {
                        sigs[i - 1].push(key);
                        (sigs[i - 1].len() - 1) as u32
                    });
                    levels[i - 1].push(Node { sig, children: 0..0 });
                    let mut t2 = t.clone();
                    t2[i] = tk;
                    next.push(t2);
                }
                parents_range.push(start..levels[i - 1].len() as u32);
            }
            if i < n {
                for (node, range) in levels[i].iter_mut().zip(parents_range.drain(..)) {
                    node.children = range;
                }
            }
            frontier = next;
        }
        Engine { n, sigs, levels }
    }

    /// Count the θ′ compatible with the θ whose row signatures are `own`.
    fn count_for(&self, own: &[(Mask, i64)]) -> FullCount {
        let n = self.n;
        // allowed[i−1]: row-i signatures of θ′ compatible with every row of θ
        let mut allowed: Vec<Bits> = Vec::with_capacity(n);
        let mut allowed1: Vec<Bits> = Vec::with_capacity(n);
        for i in 1..=n {
            let len = self.sigs[i - 1].len();
            let mut any = Bits::full(len);
            let mut only1 = Bits::full(len);
            for k in 1..=n {
                let (tk, ttk) = own[k - 1];
                let mut a = Bits::empty(len);
                let mut c1 = Bits::empty(len);
                for (s, &(ti, tti)) in self.sigs[i - 1].iter().enumerate() {
                    if cell_cond1(k, tk, ttk, i, ti, tti) {
                        a.set(s);
                        c1.set(s);
                    } else if k == i && cell_cond2(k, tk, ttk, ti, tti) {
                        a.set(s);
                    }
                }
                any.and(&a);
                only1.and(&c1);
            }
            allowed.push(any);
            allowed1.push(only1);
        }
        let mut out = FullCount::default();
        let top = &self.levels[n - 1];
        self.dfs(n, 0..top.len() as u32, true, &allowed, &allowed1, &mut out);
        out
    }

    fn dfs(
        &self,
        level: usize,
        range: std::ops::Range<u32>,
        cond1: bool,
        allowed: &[Bits],
        allowed1: &[Bits],
        out: &mut FullCount,
    ) {
        for idx in range {
            let node = &self.levels[level - 1][idx as usize];
            let s = node.sig as usize;
            if !allowed[level - 1].get(s) {
                continue;
            }
            let c1 = cond1 && allowed1[level - 1].get(s);
            if level == 1 {
                out.total += 1;
                out.all_cond1 += c1 as u64;
            } else {
                self.dfs(level - 1, node.children.clone(), c1, allowed, allowed1, out);
            }
        }
    }
}

/// T_i given T_{i+1}, …, T_n (indexed by position in `t`).
fn row_t(n: usize, i: usize, th_i: usize, t: &[Mask]) -> Mask {
    if th_i == 0 {
        return 0;
    }
    let tt = i + th_i - 1;
    let has = |m: Mask, x: usize| (m >> x) & 1 == 1;
    let mut r: Mask = 1 << tt;
    for m in i..tt {
        if has(t[m + 1], tt) {
            continue;
        }
        if (i..m).all(|rr| has(t[rr + 1], m) == has(t[rr + 1], tt)) {
            r |= 1 << m;
        }
    }
    let mut tk = r;
    let mut rest = r;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if s != n {
            tk |= t[s + 1];
        }
    }
    tk
}

/// Number of ordered pairs (θ, θ′) satisfying the pair condition.
///
/// Each cell (k, i) depends only on the row signature (T_k, θ̃_k) of θ and
/// (T′_i, θ̃′_i) of θ′.  For every θ the admissible row signatures of θ′ are
/// intersected row by row, and the θ′ are counted by a pruned walk of the
/// suffix tree (row i of θ′ depends only on θ′_i, …, θ′_n).  The outer loop
/// over θ runs in parallel.
pub fn count_full(n: usize) -> FullCount {
    count_full_with_progress(n, &AtomicU64::new(0))
}

/// [`count_full`], adding to `done` the number of pairs (θ, θ′) decided as
/// each θ finishes, so a caller can report throughput.
pub fn count_full_with_progress(n: usize, done: &AtomicU64) -> FullCount {
    let engine = Engine::new(n);
    let thetas: Vec<RootSequence> = enumerate_theta(n).collect();
    let per_theta = thetas.len() as u64;
    thetas
        .par_iter()
        .map(|th| {
            let p = build_rt(th);
            let own: Vec<(Mask, i64)> = (1..=n).map(|k| (p.t(k), th.tilde(k))).collect();
            let c = engine.count_for(&own);
            done.fetch_add(per_theta, Ordering::Relaxed);
            c
        })
        .reduce(FullCount::default, add)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn borel_counts_are_factorials() {
        let mut f = 1;
        for n in 1..=6 {
            f *= n as u64 + 1;
            assert_eq!(count_borel(n), f);
        }
    }

    #[test]
    fn small_full_counts() {
        assert_eq!(count_full(1).total, 4);
        assert_eq!(count_full(2).total, 26);
        assert_eq!(count_full(3).total, 252);
    }

    #[test]
    fn progress_counts_every_pair() {
        let done = AtomicU64::new(0);
        assert_eq!(count_full_with_progress(3, &done).total, 252);
        assert_eq!(done.load(Ordering::Relaxed), 24 * 24);
    }

    #[test]
    fn fast_matches_naive() {
        for n in 1..=4 {
            assert_eq!(count_full(n), count_full_naive(n), "n={n}");
        }
    }
}
