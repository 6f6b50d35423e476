//! The `borel` listing: one record per root sequence, with JSON, CSV and
//! text emitters and a validating JSON parser.

use crate::render::{bracket_word, mask_string, set_string, wide_points};
use crate::SCHEMA;
use atlas_freealg::psi_term;
use atlas_rootdata::{
    build_rt, enumerate_theta, is_adr_invariant, is_hopf, mask_to_vec, max_hopf, rcs_generators, simple_roots_of,
    DiagramStyle, GenDesc, RTProfile, RootSequence, RootTable,
};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

/// Largest rank accepted by the listing commands.
pub const MAX_LISTING_N: usize = 12;

/// One PBW generator Ψ^S(k,m) of a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub k: usize,
    pub m: usize,
    /// S ∩ [k, m−1].
    pub s: Vec<usize>,
    /// Compact bracket word, e.g. `[x3[x1x2]]`.
    pub word: String,
    /// Fully bracketed term, e.g. `[x3,[x1,x2]]`.
    pub term: String,
    /// Point diagram over 0…n.
    pub diagram: String,
}

impl GeneratorRecord {
    pub fn new(g: &GenDesc, style: DiagramStyle) -> Self {
        GeneratorRecord {
            k: g.k,
            m: g.m,
            s: g.cuts(),
            word: bracket_word(g),
            term: psi_term(g).to_string(),
            diagram: wide_points(g, style),
        }
    }
}

/// Everything the listing reports about one U_θ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub theta: Vec<usize>,
    /// R_1, …, R_n.
    pub r: Vec<Vec<usize>>,
    /// T_1, …, T_n.
    pub t: Vec<Vec<usize>>,
    /// Simple roots [k:m] as (k, m).
    pub simple_roots: Vec<(usize, usize)>,
    pub pbw: Vec<GeneratorRecord>,
    /// A minimal set of generators as a right coideal subalgebra.
    pub rcs: Vec<GeneratorRecord>,
    pub hopf: bool,
    pub adr_invariant: bool,
    /// {j : x_j ∈ U_θ}.
    pub max_hopf: Vec<usize>,
}

impl Record {
    pub fn new(p: &RTProfile, table: &RootTable, style: DiagramStyle) -> Self {
        let gens = |v: Vec<GenDesc>| v.iter().map(|g| GeneratorRecord::new(g, style)).collect();
        Record {
            theta: p.theta().values().to_vec(),
            r: p.r_sets(),
            t: p.t_sets(),
            simple_roots: simple_roots_of(p).iter().map(|r| (r.k, r.m)).collect(),
            pbw: gens(p.pbw_generators()),
            rcs: gens(rcs_generators(p, table)),
            hopf: is_hopf(p.theta()),
            adr_invariant: is_adr_invariant(p),
            max_hopf: mask_to_vec(max_hopf(p)),
        }
    }
}

/// The versioned listing document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Listing {
    pub schema: String,
    pub n: usize,
    pub records: Vec<Record>,
}

#[derive(Debug, Error)]
pub enum ListingError {
    #[error("malformed listing: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error("record {index}: {msg}")]
    Record { index: usize, msg: String },
    #[error("listing has {got} records, expected {expected}")]
    Count { got: usize, expected: usize },
}

/// All (n+1)! records in lexicographic order of θ.
pub fn borel_listing(n: usize, style: DiagramStyle) -> Listing {
    let table = RootTable::new(n);
    let records = enumerate_theta(n).map(|th| Record::new(&build_rt(&th), &table, style)).collect();
    Listing { schema: SCHEMA.to_string(), n, records }
}

/// Parse a JSON listing and rebuild its profiles.  Every record's θ must be
/// a valid root sequence whose R and T sets match the stored ones, and the
/// records must cover each θ exactly once.
pub fn parse_listing(text: &str) -> Result<(Listing, Vec<RTProfile>), ListingError> {
    let listing: Listing = serde_json::from_str(text)?;
    if listing.schema != SCHEMA {
        return Err(ListingError::Schema(listing.schema));
    }
    let n = listing.n;
    if n == 0 || n > MAX_LISTING_N {
        return Err(ListingError::Record { index: 0, msg: format!("rank {n} out of range") });
    }
    let mut seen = std::collections::HashSet::new();
    let mut profiles = Vec::with_capacity(listing.records.len());
    for (index, rec) in listing.records.iter().enumerate() {
        let bad = |msg: String| ListingError::Record { index, msg };
        let th = RootSequence::new(n, rec.theta.clone()).map_err(|e| bad(e.to_string()))?;
        let p = build_rt(&th);
        if p.r_sets() != rec.r || p.t_sets() != rec.t {
            return Err(bad(format!("R/T sets do not match theta {th}")));
        }
        if !seen.insert(th.clone()) {
            return Err(bad(format!("duplicate theta {th}")));
        }
        profiles.push(p);
    }
    let expected: usize = (2..=n + 1).product();
    if profiles.len() != expected {
        return Err(ListingError::Count { got: profiles.len(), expected });
    }
    Ok((listing, profiles))
}

pub fn to_json(l: &Listing) -> String {
    serde_json::to_string_pretty(l).expect("listing serializes")
}

fn sets_cell(sets: &[Vec<usize>]) -> String {
    sets.iter().map(|s| set_string(s)).collect::<Vec<_>>().join(" ")
}

fn words_cell(gens: &[GeneratorRecord]) -> String {
    gens.iter().map(|g| g.word.as_str()).collect::<Vec<_>>().join(" ")
}

pub fn to_csv(l: &Listing) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["schema", "theta", "R", "T", "simple_roots", "pbw", "rcs", "hopf", "adr_invariant", "max_hopf"])
        .expect("in-memory write");
    for r in &l.records {
        let theta = r.theta.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let roots = r.simple_roots.iter().map(|(k, m)| format!("[{k}:{m}]")).collect::<Vec<_>>().join(" ");
        w.write_record([
            l.schema.as_str(),
            &format!("({theta})"),
            &sets_cell(&r.r),
            &sets_cell(&r.t),
            &roots,
            &words_cell(&r.pbw),
            &words_cell(&r.rcs),
            &r.hopf.to_string(),
            &r.adr_invariant.to_string(),
            &set_string(&r.max_hopf),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(l: &Listing) -> String {
    let mut out = String::new();
    for r in &l.records {
        let theta = r.theta.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut flags = Vec::new();
        if r.hopf {
            flags.push("hopf");
        }
        if r.adr_invariant {
            flags.push("ad_r-invariant");
        }
        let _ = writeln!(out, "theta ({theta}){}", if flags.is_empty() { String::new() } else { format!("  [{}]", flags.join(", ")) });
        for k in (1..=l.n).rev() {
            let gens: Vec<&GeneratorRecord> = r.pbw.iter().filter(|g| g.k == k).collect();
            let words: Vec<&str> = gens.iter().map(|g| g.word.as_str()).collect();
            let _ = writeln!(
                out,
                "  R{k} = {:<12} T{k} = {:<12} {}",
                set_string(&r.r[k - 1]),
                set_string(&r.t[k - 1]),
                words.join(", ")
            );
        }
        let roots: Vec<String> = r.simple_roots.iter().map(|(k, m)| format!("[{k}:{m}]")).collect();
        let _ = writeln!(out, "  simple roots: {}", roots.join(" "));
        let rcs: Vec<String> = r.rcs.iter().map(|g| format!("{} ({})", g.word, g.diagram)).collect();
        let _ = writeln!(out, "  generators: {}", if rcs.is_empty() { "-".to_string() } else { rcs.join(", ") });
        let _ = writeln!(out, "  max hopf: {}", mask_string(r.max_hopf.iter().fold(0, |m, &j| m | (1 << j))));
    }
    out
}
