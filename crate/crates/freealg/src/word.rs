use crate::error::FreeAlgError;
use smallvec::SmallVec;
use std::fmt;

/// A word in the letters x_1, …, x_n, stored as 1-based letter indices.
/// The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(smallvec::smallvec![i as u8])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        Word(letters.into_iter().map(|i| i as u8).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word with position `t` deleted.
    pub fn without(&self, t: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(t);
        Word(v)
    }

    /// The word with `f` applied to every letter.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&l| f(l as usize) as u8).collect())
    }

    /// Number of occurrences of each letter, in rank `n`.
    pub fn degree(&self, n: usize) -> DegreeVector {
        let mut d = vec![0u32; n];
        for l in self.letters() {
            d[l - 1] += 1;
        }
        DegreeVector(d)
    }

    /// Check that all letters lie in 1..=n.
    pub fn check(&self, n: usize) -> Result<(), FreeAlgError> {
        match self.letters().find(|&l| l == 0 || l > n) {
            Some(letter) => Err(FreeAlgError::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in self.letters() {
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

/// Occurrences of each letter: the formal degree of a homogeneous element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zero(n: usize) -> Self {
        DegreeVector(vec![0; n])
    }

    /// The degree [k:m] = x_k + … + x_m.
    pub fn interval(n: usize, k: usize, m: usize) -> Self {
        DegreeVector((1..=n).map(|i| (k <= i && i <= m) as u32).collect())
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self − o` when it stays non-negative.
    pub fn checked_sub(&self, o: &DegreeVector) -> Option<DegreeVector> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DegreeVector)
    }

    /// All words of this degree, in increasing lexicographic order.
    pub fn words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut rest = self.0.clone();
        let mut cur = Vec::new();
        fn go(rest: &mut Vec<u32>, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
            if rest.iter().all(|&r| r == 0) {
                out.push(Word::from_letters(cur.iter().copied()));
                return;
            }
            for i in 0..rest.len() {
                if rest[i] > 0 {
                    rest[i] -= 1;
                    cur.push(i + 1);
                    go(rest, cur, out);
                    cur.pop();
                    rest[i] += 1;
                }
            }
        }
        go(&mut rest, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_of_a_degree() {
        let d = DegreeVector(vec![1, 2]);
        let w: Vec<String> = d.words().iter().map(|w| w.to_string()).collect();
        assert_eq!(w, vec!["x1x2x2", "x2x1x2", "x2x2x1"]);
        assert_eq!(DegreeVector::zero(3).words(), vec![Word::empty()]);
        assert_eq!(DegreeVector(vec![2, 2, 2]).words().len(), 90);
    }

    #[test]
    fn degree_and_display() {
        let w = Word::from_letters([3, 1, 3]);
        assert_eq!(w.degree(3), DegreeVector(vec![1, 0, 2]));
        assert_eq!(w.to_string(), "x3x1x3");
        assert_eq!(Word::empty().to_string(), "1");
        assert!(w.check(2).is_err());
    }
}
