//! Arithmetic modulo the Mersenne prime 2^61 − 1, used for the evaluation
//! fast path of rank computations.
//!
//! A nonzero minor modulo `p` at some point certifies a nonzero minor over
//! ℚ(q, t…), so modular ranks are exact *lower* bounds.

use crate::Rational;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The prime modulus 2^61 − 1.
pub const MODULUS: u64 = (1u64 << 61) - 1;

pub(crate) fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

pub(crate) fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

pub(crate) fn mul(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p as u64) & MODULUS;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    let s = (s & MODULUS) + (s >> 61);
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

pub(crate) fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64) -> Option<u64> {
    if a == 0 {
        None
    } else {
        Some(pow(a, MODULUS - 2))
    }
}

fn bigint_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn rational_mod(c: &Rational) -> Option<u64> {
    let n = bigint_mod(c.numer());
    let d = inv(bigint_mod(c.denom()))?;
    Some(mul(n, d))
}

/// A random evaluation point: one nonzero residue per variable, with its
/// inverse cached for negative exponents.
#[derive(Clone, Debug)]
pub struct ModPoint {
    values: Vec<u64>,
    inverses: Vec<u64>,
}

impl ModPoint {
    /// Draw `nvars` random nonzero residues from a seeded generator.
    pub fn random(nvars: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<u64> = (0..nvars).map(|_| rng.gen_range(2..MODULUS)).collect();
        Self::from_values(values)
    }

    pub fn from_values(values: Vec<u64>) -> Self {
        let inverses = values
            .iter()
            .map(|&v| inv(v).expect("evaluation values must be nonzero"))
            .collect();
        ModPoint { values, inverses }
    }

    pub fn nvars(&self) -> usize {
        self.values.len()
    }

    /// Value of `v^e` at this point (variables beyond the point evaluate to
    /// a fixed derived residue so that every variable has a value).
    pub fn power(&self, v: u8, e: i32) -> u64 {
        let idx = v as usize;
        let (base, binv) = if idx < self.values.len() {
            (self.values[idx], self.inverses[idx])
        } else {
            let b = add(7, 1000003 * (idx as u64 + 1) % MODULUS);
            (b, inv(b).unwrap())
        };
        if e >= 0 {
            pow(base, e as u64)
        } else {
            pow(binv, (-e) as u64)
        }
    }
}

/// Rank of a dense matrix over 𝔽_p (destroys its input).
pub(crate) fn rank_mod(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let pinv = inv(m[r][c]).unwrap();
        for i in (r + 1)..rows {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul(m[i][c], pinv);
            for j in c..cols {
                let t = mul(f, m[r][j]);
                m[i][j] = sub(m[i][j], t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
