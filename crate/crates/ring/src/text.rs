//! Textual Laurent format: `1 - q^-1`, `q^2 - 2 + q^-2`, `3/2*q*t1^-1`.
//!
//! Terms appear in decreasing graded-lex order; a coefficient is separated
//! from its monomial by `*` unless it is `±1`.  Variables are `q` and `t<i>`
//! (`t<i>` is the multiparameter value `t_{i,i+1}`).

use crate::error::RingError;
use crate::monomial::Monomial;
use crate::poly::LaurentPoly;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Name of variable index `v`.
pub fn var_name(v: u8) -> String {
    if v == 0 {
        "q".to_string()
    } else {
        format!("t{v}")
    }
}

/// Index of a variable name, if it is well formed.
pub fn var_index(name: &str) -> Option<u8> {
    if name == "q" {
        return Some(0);
    }
    let rest = name.strip_prefix('t')?;
    if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse::<u8>().ok().filter(|&i| i >= 1)
}

/// A declared variable set: `q` plus `t1 … t_{count}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarSet {
    /// Number of multiparameter variables `t_i` in the set.
    pub t_count: u8,
}

impl VarSet {
    /// `{q}` only.
    pub fn single() -> Self {
        VarSet { t_count: 0 }
    }

    /// `{q, t1, …, t_{n-1}}` for rank `n`.
    pub fn multiparameter(n: usize) -> Self {
        VarSet {
            t_count: n.saturating_sub(1) as u8,
        }
    }

    pub fn contains(&self, v: u8) -> bool {
        v == 0 || v <= self.t_count
    }

    pub fn nvars(&self) -> usize {
        self.t_count as usize + 1
    }

    fn describe(&self) -> String {
        (0..=self.t_count).map(var_name).collect::<Vec<_>>().join(", ")
    }

    /// Check that `p` only uses declared variables.
    pub fn check(&self, p: &LaurentPoly) -> Result<(), RingError> {
        match p.variables().into_iter().find(|v| !self.contains(*v)) {
            None => Ok(()),
            Some(v) => Err(RingError::VariableMismatch {
                var: var_name(v),
                declared: self.describe(),
            }),
        }
    }

    /// Parse text and check it against this variable set.
    pub fn parse(&self, s: &str) -> Result<LaurentPoly, RingError> {
        let p: LaurentPoly = s.parse()?;
        self.check(&p)?;
        Ok(p)
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    m.pairs()
        .iter()
        .map(|&(v, e)| {
            if e == 1 {
                var_name(v)
            } else {
                format!("{}^{}", var_name(v), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", fmt_monomial(m))?;
            } else {
                write!(f, "{a}*{}", fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

/// Largest exponent magnitude accepted by the parser.
const MAX_EXPONENT: i64 = 1 << 20;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, RingError> {
        Err(RingError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse::<BigInt>().unwrap())
    }

    fn int_exponent(&mut self) -> Result<i32, RingError> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let v: i64 = match i64::try_from(d) {
            Ok(v) if v <= MAX_EXPONENT => v,
            _ => return self.err("exponent out of range"),
        };
        Ok(if neg { -(v as i32) } else { v as i32 })
    }

    fn variable(&mut self) -> Result<(u8, i32), RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let Some(v) = var_index(name) else {
            self.pos = start;
            return self.err("unknown variable");
        };
        let e = if self.eat(b'^') { self.int_exponent()? } else { 1 };
        Ok((v, e))
    }

    /// factor := number ['/' number] | variable ['^' int]
    fn factor(&mut self, coeff: &mut Rational, mono: &mut Vec<(u8, i32)>) -> Result<(), RingError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = self.digits()?;
                let d = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                if d.is_zero() {
                    return self.err("zero denominator");
                }
                *coeff *= Rational::new(n, d);
                Ok(())
            }
            Some(b) if b.is_ascii_alphabetic() => {
                mono.push(self.variable()?);
                Ok(())
            }
            _ => self.err("expected a number or a variable"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), RingError> {
        let mut coeff = Rational::one();
        let mut mono = Vec::new();
        self.factor(&mut coeff, &mut mono)?;
        while self.eat(b'*') {
            self.factor(&mut coeff, &mut mono)?;
        }
        let mut acc: std::collections::BTreeMap<u8, i64> = std::collections::BTreeMap::new();
        for (v, e) in mono {
            *acc.entry(v).or_insert(0) += e as i64;
        }
        if acc.values().any(|e| e.abs() > MAX_EXPONENT) {
            return self.err("exponent out of range");
        }
        Ok((
            Monomial::from_pairs(acc.into_iter().map(|(v, e)| (v, e as i32))),
            coeff,
        ))
    }

    fn poly(&mut self) -> Result<LaurentPoly, RingError> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    /// Parse the textual format.  `0` parses to the zero polynomial; terms
    /// may appear in any order and like terms are combined.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        p.poly()
    }
}
