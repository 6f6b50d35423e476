use crate::error::RingError;
use crate::modp::{self, ModPoint};
use crate::poly::LaurentPoly;

/// A dense matrix of Laurent polynomials, interpreted over the fraction
/// field of the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<LaurentPoly>>,
}

/// An exact solution `x = numerators / denominator` of `M x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub numerators: Vec<LaurentPoly>,
    pub denominator: LaurentPoly,
}

impl Solution {
    /// The `i`-th coordinate when it is a Laurent polynomial.
    pub fn coordinate(&self, i: usize) -> Option<LaurentPoly> {
        self.numerators[i].div_exact(&self.denominator)
    }
}

/// Outcome of [`ExactMatrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub rank: usize,
    /// `Some` iff the target lies in the column span.
    pub solution: Option<Solution>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![vec![LaurentPoly::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<LaurentPoly>>) -> Result<Self, RingError> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        if data.iter().any(|r| r.len() != cols) {
            return Err(RingError::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i][j] = v;
    }

    pub fn row_slices(&self) -> &[Vec<LaurentPoly>] {
        &self.data
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::new(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    /// Matrix product.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, RingError> {
        if self.cols != other.rows {
            return Err(RingError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::new(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    if self.data[i][k].is_zero() || other.data[k][j].is_zero() {
                        continue;
                    }
                    acc += &(&self.data[i][k] * &other.data[k][j]);
                }
                out.data[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) row echelon form, pivoting only in the first
    /// `cols` columns but updating every column.  Returns the pivot columns;
    /// every division performed is exact in the Laurent ring.
    fn bareiss_in_place(data: &mut [Vec<LaurentPoly>], cols: usize) -> Vec<usize> {
        let rows = data.len();
        let width = data.first().map_or(0, |r| r.len());
        let mut prev = LaurentPoly::one();
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            if r == rows {
                break;
            }
            // Prefer the sparsest nonzero pivot to limit growth.
            let Some(p) = (r..rows)
                .filter(|&i| !data[i][c].is_zero())
                .min_by_key(|&i| data[i][c].num_terms())
            else {
                continue;
            };
            data.swap(r, p);
            let (top, bottom) = data.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pv = &pivot_row[c];
            for row in bottom.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in (c + 1)..width {
                    let a = pv * &row[j];
                    let v = if lead.is_zero() || pivot_row[j].is_zero() {
                        a
                    } else {
                        a - &lead * &pivot_row[j]
                    };
                    row[j] = v
                        .div_exact(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
            }
            prev = pv.clone();
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Exact rank over the fraction field (the deciding authority).
    pub fn rank(&self) -> usize {
        let mut d = self.data.clone();
        Self::bareiss_in_place(&mut d, self.cols).len()
    }

    /// Rank of the matrix evaluated modulo 2^61−1 at `point`; an exact lower
    /// bound for [`ExactMatrix::rank`].  Returns `None` on a bad point.
    pub fn rank_at(&self, point: &ModPoint) -> Option<usize> {
        let mut m = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut r = Vec::with_capacity(self.cols);
            for e in row {
                r.push(e.eval_mod(point)?);
            }
            m.push(r);
        }
        Some(modp::rank_mod(m))
    }

    /// Evaluation-based rank: the maximum of the modular ranks at `trials`
    /// seeded random points.  Equal to the exact rank with overwhelming
    /// probability; never larger.
    pub fn rank_eval(&self, nvars: usize, seed: u64, trials: usize) -> usize {
        (0..trials as u64)
            .filter_map(|t| self.rank_at(&ModPoint::random(nvars.max(1), seed.wrapping_add(t))))
            .max()
            .unwrap_or(0)
    }

    /// For each target column, whether it lies in the column span of `M`.
    /// All targets are eliminated together in one fraction-free pass.
    pub fn columns_in_span(&self, targets: &[Vec<LaurentPoly>]) -> Result<Vec<bool>, RingError> {
        if let Some(t) = targets.iter().find(|t| t.len() != self.rows) {
            return Err(RingError::Shape(format!(
                "target has length {}, matrix has {} rows",
                t.len(),
                self.rows
            )));
        }
        let mut aug: Vec<Vec<LaurentPoly>> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend(targets.iter().map(|t| t[i].clone()));
                r
            })
            .collect();
        let rank = Self::bareiss_in_place(&mut aug, self.cols).len();
        Ok((0..targets.len())
            .map(|t| aug[rank..].iter().all(|row| row[self.cols + t].is_zero()))
            .collect())
    }

    /// Solve `M x = target` exactly.  Reports the rank of `M` and, when the
    /// target is in the column span, one solution with free variables set
    /// to zero.
    pub fn solve(&self, target: &[LaurentPoly]) -> Result<SolveOutcome, RingError> {
        if target.len() != self.rows {
            return Err(RingError::Shape(format!(
                "target has length {}, matrix has {} rows",
                target.len(),
                self.rows
            )));
        }
        let mut aug: Vec<Vec<LaurentPoly>> = self
            .data
            .iter()
            .zip(target)
            .map(|(row, t)| {
                let mut r = row.clone();
                r.push(t.clone());
                r
            })
            .collect();
        let pivots = Self::bareiss_in_place(&mut aug, self.cols + 1);
        let consistent = pivots.last() != Some(&self.cols);
        let rank = if consistent { pivots.len() } else { pivots.len() - 1 };
        if !consistent {
            return Ok(SolveOutcome { rank, solution: None });
        }
        // Back substitution with the final pivot as common denominator:
        // X_i = D·x_i is a ring element by Cramer's rule.
        let denom = if rank == 0 {
            LaurentPoly::one()
        } else {
            aug[rank - 1][pivots[rank - 1]].clone()
        };
        let mut x = vec![LaurentPoly::zero(); self.cols];
        for i in (0..rank).rev() {
            let mut acc = &denom * &aug[i][self.cols];
            for k in (i + 1)..rank {
                let cj = pivots[k];
                if !aug[i][cj].is_zero() {
                    acc -= &(&aug[i][cj] * &x[cj]);
                }
            }
            x[pivots[i]] = acc
                .div_exact(&aug[i][pivots[i]])
                .expect("fraction-free back substitution is exact");
        }
        Ok(SolveOutcome {
            rank,
            solution: Some(Solution {
                numerators: x,
                denominator: denom,
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_solve() {
        let m = ExactMatrix::from_rows(vec![vec![p("q"), p("0")], vec![p("0"), p("q^-1")]]).unwrap();
        let out = m.solve(&[p("q"), p("0")]).unwrap();
        assert_eq!(out.rank, 2);
        let s = out.solution.unwrap();
        assert_eq!(s.coordinate(0), Some(LaurentPoly::one()));
        assert_eq!(s.coordinate(1), Some(LaurentPoly::zero()));
    }

    #[test]
    fn proportional_column() {
        let m = ExactMatrix::from_rows(vec![vec![p("1 - q^-1")], vec![p("q - 1")]]).unwrap();
        let out = m.solve(&[p("2 - 2*q^-1"), p("2*q - 2")]).unwrap();
        assert_eq!(out.rank, 1);
        assert_eq!(out.solution.unwrap().coordinate(0), Some(LaurentPoly::from_int(2)));
        let bad = m.solve(&[p("1"), p("1")]).unwrap();
        assert!(bad.solution.is_none());
    }

    #[test]
    fn batched_span_membership() {
        let m = ExactMatrix::from_rows(vec![vec![p("1")], vec![p("q")], vec![p("0")]]).unwrap();
        let t = vec![
            vec![p("q^-1"), p("1"), p("0")],
            vec![p("1"), p("1"), p("0")],
            vec![p("0"), p("0"), p("t1")],
        ];
        assert_eq!(m.columns_in_span(&t).unwrap(), vec![true, false, false]);
    }

    #[test]
    fn singular_symbolic() {
        // rows (1, q) and (q, q^2) are dependent
        let m = ExactMatrix::from_rows(vec![
            vec![p("1"), p("q"), p("t1")],
            vec![p("q"), p("q^2"), p("q*t1")],
            vec![p("1"), p("1"), p("1")],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_eval(2, 7, 2), 2);
        let half = m.solve(&[LaurentPoly::constant(rat(1, 2)), p("1/2*q"), p("0")]).unwrap();
        assert!(half.solution.is_some());
    }
}
