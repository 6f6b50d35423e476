//! The table of proper right coideal subalgebras: one block of n lines per
//! non-Hopf θ, in decreasing lexicographic order, with columns r(U), R, T,
//! PBW generators and coideal generators.

use crate::listing::{GeneratorRecord, Record};
use crate::render::set_string;
use atlas_rootdata::{build_rt, enumerate_theta, is_hopf, DiagramStyle, RootTable};
use std::fmt::Write as _;

/// Records of the proper (non-Hopf) subalgebras, θ decreasing.
pub fn proper_records(n: usize, style: DiagramStyle) -> Vec<Record> {
    let table = RootTable::new(n);
    let mut thetas: Vec<_> = enumerate_theta(n).filter(|th| !is_hopf(th)).collect();
    thetas.reverse();
    thetas.iter().map(|th| Record::new(&build_rt(th), &table, style)).collect()
}

fn joined(gens: &[&GeneratorRecord], f: impl Fn(&GeneratorRecord) -> String, sep: &str) -> String {
    gens.iter().map(|g| f(g)).collect::<Vec<_>>().join(sep)
}

/// The cells of one block: `lines[j][c]` is column `c` on line `j`.
fn block(r: &Record, n: usize) -> Vec<[String; 5]> {
    let theta = r.theta.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let rcs: Vec<&GeneratorRecord> = r.rcs.iter().collect();
    // At least three lines, so θ, the coideal generators and their
    // diagrams always have a place.
    (0..n.max(3))
        .map(|j| {
            let k = n.saturating_sub(j);
            let pbw: Vec<&GeneratorRecord> = r.pbw.iter().filter(|g| g.k == k).collect();
            let first = match j {
                0 if r.adr_invariant => "*".to_string(),
                1 => format!("({theta})"),
                _ => String::new(),
            };
            let last = match j {
                1 => joined(&rcs, |g| g.word.clone(), ", "),
                2 => joined(&rcs, |g| g.diagram.clone(), " , "),
                _ => String::new(),
            };
            if k == 0 {
                return [first, String::new(), String::new(), String::new(), last];
            }
            [
                first,
                format!("R{k}={}", set_string(&r.r[k - 1])),
                format!("T{k}={}", set_string(&r.t[k - 1])),
                joined(&pbw, |g| g.word.clone(), ", "),
                last,
            ]
        })
        .collect()
}

/// Render the table.  Column widths adapt to the content, so the output is
/// stable for a fixed rank.
pub fn render(records: &[Record], n: usize) -> String {
    const HEADER: [&str; 5] = ["r(U)", "R", "T", "PBW-generators", "r.c.s. generators"];
    let blocks: Vec<Vec<[String; 5]>> = records.iter().map(|r| block(r, n)).collect();
    let mut width = HEADER.map(|h| h.chars().count());
    for line in blocks.iter().flatten() {
        for (w, cell) in width.iter_mut().zip(line) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let rule = {
        let parts: Vec<String> = width.iter().map(|w| "-".repeat(w + 2)).collect();
        format!("+{}+", parts.join("+"))
    };
    let row = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(width)
            .map(|(c, w)| format!(" {}{} ", c, " ".repeat(w - c.chars().count())))
            .collect();
        format!("|{}|", parts.join("|"))
    };
    let mut out = String::new();
    let _ = writeln!(out, "{rule}");
    let _ = writeln!(out, "{}", row(&HEADER.map(String::from)));
    let _ = writeln!(out, "{rule}");
    for b in &blocks {
        for line in b {
            let _ = writeln!(out, "{}", row(line));
        }
        let _ = writeln!(out, "{rule}");
    }
    let starred = records.iter().filter(|r| r.adr_invariant).count();
    let _ = writeln!(out, "{} proper right coideal subalgebras, {} ad_r-invariant (*)", records.len(), starred);
    out
}
