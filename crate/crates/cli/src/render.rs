//! Plain-text renderings shared by the emitters.

use atlas_freealg::{psi_term, BracketTerm, Word};
use atlas_rootdata::{mask_to_vec, DiagramStyle, GenDesc, Mask};

/// `{1,3}` / `{}`.
pub fn set_string(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn mask_string(m: Mask) -> String {
    set_string(&mask_to_vec(m))
}

fn leaves(t: &BracketTerm, out: &mut Vec<usize>) {
    match t {
        BracketTerm::Letter(i) => out.push(*i),
        BracketTerm::Bracket(a, b) => {
            leaves(a, out);
            leaves(b, out);
        }
    }
}

/// Whether the leaves run through consecutive indices in one direction.
fn is_run(letters: &[usize]) -> bool {
    let up = letters.windows(2).all(|w| w[1] == w[0] + 1);
    let down = letters.windows(2).all(|w| w[0] == w[1] + 1);
    up || down
}

/// The compact bracket notation of a term: a bracket whose letters run
/// through consecutive indices is written flat, `[x1x2x3]` or `[x3x2x1]`;
/// other brackets keep their structure, `[x3[x1x2]]`.
pub fn compact(t: &BracketTerm) -> String {
    match t {
        BracketTerm::Letter(i) => format!("x{i}"),
        BracketTerm::Bracket(a, b) => {
            let mut ls = Vec::new();
            leaves(t, &mut ls);
            if is_run(&ls) {
                format!("[{}]", Word::from_letters(ls))
            } else {
                format!("[{}{}]", compact(a), compact(b))
            }
        }
    }
}

/// The compact bracket word of Ψ^S(k,m).
pub fn bracket_word(g: &GenDesc) -> String {
    compact(&psi_term(g))
}

/// The diagram of Ψ^S(k,m) over all points 0…n: white/black on
/// [k−1, m], a dot elsewhere.
pub fn wide_points(g: &GenDesc, style: DiagramStyle) -> String {
    let dot = match style {
        DiagramStyle::Ascii => ".",
        DiagramStyle::Unicode => "·",
    };
    let inner: Vec<String> = g.points(style).split(' ').map(str::to_string).collect();
    (0..=g.n)
        .map(|i| if i + 1 < g.k || i > g.m { dot.to_string() } else { inner[i + 1 - g.k].clone() })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize, m: usize, s: &[usize]) -> GenDesc {
        GenDesc::from_list(3, k, m, s).unwrap()
    }

    #[test]
    fn compact_words_follow_the_table_notation() {
        assert_eq!(bracket_word(&g(1, 3, &[])), "[x1x2x3]");
        assert_eq!(bracket_word(&g(1, 3, &[1, 2])), "[x3x2x1]");
        assert_eq!(bracket_word(&g(1, 3, &[2])), "[x3[x1x2]]");
        assert_eq!(bracket_word(&g(1, 3, &[1])), "[[x2x3]x1]");
        assert_eq!(bracket_word(&g(2, 2, &[])), "x2");
    }

    #[test]
    fn wide_diagrams() {
        assert_eq!(wide_points(&g(1, 3, &[]), DiagramStyle::Ascii), "o o o *");
        assert_eq!(wide_points(&g(2, 3, &[2]), DiagramStyle::Ascii), ". o * *");
        assert_eq!(wide_points(&g(1, 2, &[]), DiagramStyle::Unicode), "○ ○ ● ·");
        assert_eq!(set_string(&[]), "{}");
        assert_eq!(mask_string(0b1010), "{1,3}");
    }
}
