use crate::bichar::Bicharacter;
use crate::element::{skew_bracket, FreeElement};
use crate::error::FreeAlgError;
use crate::word::Word;
use atlas_rootdata::GenDesc;
use std::fmt;
use std::str::FromStr;

/// Deepest bracket nesting accepted by the parser.
pub const MAX_DEPTH: usize = 512;

/// A bracket expression: `term := "x" INT | "[" term "," term "]"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTerm {
    Letter(usize),
    Bracket(Box<BracketTerm>, Box<BracketTerm>),
}

impl BracketTerm {
    pub fn bracket(a: BracketTerm, b: BracketTerm) -> BracketTerm {
        BracketTerm::Bracket(Box::new(a), Box::new(b))
    }

    /// The underlying word (letters left to right).
    pub fn word(&self) -> Word {
        let mut v = Vec::new();
        self.collect(&mut v);
        Word::from_letters(v)
    }

    fn collect(&self, v: &mut Vec<usize>) {
        match self {
            BracketTerm::Letter(i) => v.push(*i),
            BracketTerm::Bracket(a, b) => {
                a.collect(v);
                b.collect(v);
            }
        }
    }

    pub fn max_letter(&self) -> usize {
        self.word().letters().max().unwrap_or(0)
    }

    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> BracketTerm {
        match self {
            BracketTerm::Letter(i) => BracketTerm::Letter(f(*i)),
            BracketTerm::Bracket(a, b) => BracketTerm::bracket(a.relabel(f), b.relabel(f)),
        }
    }

    /// Expand to a free-algebra element.
    pub fn eval(&self, b: &Bicharacter) -> Result<FreeElement, FreeAlgError> {
        match self {
            BracketTerm::Letter(i) => {
                if *i == 0 || *i > b.n() {
                    return Err(FreeAlgError::LetterOutOfRange { letter: *i, n: b.n() });
                }
                Ok(FreeElement::letter(*i))
            }
            BracketTerm::Bracket(x, y) => skew_bracket(b, &x.eval(b)?, &y.eval(b)?),
        }
    }
}

impl fmt::Display for BracketTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTerm::Letter(i) => write!(f, "x{i}"),
            BracketTerm::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, FreeAlgError> {
        Err(FreeAlgError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FreeAlgError> {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn term(&mut self, depth: usize) -> Result<BracketTerm, FreeAlgError> {
        if depth > MAX_DEPTH {
            return self.err("brackets nested too deeply");
        }
        self.ws();
        match self.s.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
                match digits.parse::<usize>() {
                    Ok(i) if (1..=255).contains(&i) && !digits.starts_with('0') => Ok(BracketTerm::Letter(i)),
                    _ => {
                        self.pos = start;
                        self.err("expected a letter index 1..=255")
                    }
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.term(depth + 1)?;
                self.expect(b',')?;
                let b = self.term(depth + 1)?;
                self.expect(b']')?;
                Ok(BracketTerm::bracket(a, b))
            }
            _ => self.err("expected 'x' or '['"),
        }
    }
}

impl FromStr for BracketTerm {
    type Err = FreeAlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let t = p.term(0)?;
        p.ws();
        if p.pos != p.s.len() {
            return p.err("trailing input");
        }
        Ok(t)
    }
}

fn check_interval(n: usize, k: usize, m: usize) -> Result<(), FreeAlgError> {
    if 1 <= k && k <= m && m <= n {
        Ok(())
    } else {
        Err(FreeAlgError::BadInterval { n, k, m })
    }
}

/// The right-nested bracket term [x_k,[x_{k+1},…[x_{m−1},x_m]…]].
pub fn u_term(k: usize, m: usize) -> BracketTerm {
    let mut t = BracketTerm::Letter(m);
    for i in (k..m).rev() {
        t = BracketTerm::bracket(BracketTerm::Letter(i), t);
    }
    t
}

/// u[k, m] as a free-algebra element.
pub fn u_bracket(b: &Bicharacter, k: usize, m: usize) -> Result<FreeElement, FreeAlgError> {
    check_interval(b.n(), k, m)?;
    u_term(k, m).eval(b)
}

/// The bracketing of the piecewise word:
/// Ψ^S(k,m) = [[…[u[1+s_r,m], u[1+s_{r−1},s_r]], …], u[k,s_1]].
pub fn psi_term(g: &GenDesc) -> BracketTerm {
    let mut pieces = g.pieces().into_iter();
    let (a, b) = pieces.next().expect("a descriptor has at least one piece");
    pieces.fold(u_term(a, b), |acc, (a, b)| BracketTerm::bracket(acc, u_term(a, b)))
}

/// Ψ^S(k,m) as a free-algebra element.
pub fn psi(b: &Bicharacter, g: &GenDesc) -> Result<FreeElement, FreeAlgError> {
    check_interval(b.n(), g.k, g.m)?;
    psi_term(g).eval(b)
}

/// The piecewise continuous word u^S(k,m) = u(1+s_r,m)⋯u(k,s_1).
pub fn u_pw(g: &GenDesc) -> Word {
    Word::from_letters(g.piecewise_word())
}
