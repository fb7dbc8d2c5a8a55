use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::universal_length;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_N: usize = 9;

/// A polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `P_n(t) = Σ_{ζ ∈ S_n} t^{ℓ_u(ζ)}` for `n ≤ 9`.
pub fn rank_polynomial(n: usize) -> Result<IntPolynomial> {
    rank_polynomial_bounded(n, DEFAULT_MAX_N)
}

pub fn rank_polynomial_bounded(n: usize, max_n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n > max_n {
        return Err(Error::Resource(format!("n = {n} exceeds the limit of {max_n}")));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let max_rank = n * (n - 1) / 2;
    let counts = perms
        .par_iter()
        .fold(
            || vec![0i64; max_rank + 1],
            |mut acc, z| {
                acc[universal_length(z)] += 1;
                acc
            },
        )
        .reduce(
            || vec![0i64; max_rank + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(IntPolynomial::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, 3, 2]).to_string(), "1 + 3t + 2t^2");
        assert_eq!(IntPolynomial::new(vec![0, 1, 0, -4]).to_string(), "t - 4t^3");
        assert_eq!(IntPolynomial::new(vec![0, 0]).to_string(), "0");
        assert_eq!(IntPolynomial::new(vec![-1]).to_string(), "-1");
    }

    #[test]
    fn small_rank_polynomials() {
        assert_eq!(rank_polynomial(1).unwrap().coeffs(), [1]);
        assert_eq!(rank_polynomial(2).unwrap().coeffs(), [1, 1]);
        assert_eq!(rank_polynomial(3).unwrap().coeffs(), [1, 3, 2]);
        assert_eq!(rank_polynomial(4).unwrap().coeffs(), [1, 6, 10, 6, 1]);
        assert_eq!(
            rank_polynomial(6).unwrap().coeffs(),
            [1, 15, 70, 155, 195, 156, 86, 33, 8, 1]
        );
    }

    #[test]
    fn evaluation_at_one_counts_permutations() {
        for n in 1..=6 {
            let f: i64 = (1..=n as i64).product();
            assert_eq!(rank_polynomial(n).unwrap().eval(1), f);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(rank_polynomial(10), Err(Error::Resource(_))));
        assert!(matches!(rank_polynomial_bounded(5, 4), Err(Error::Resource(_))));
        assert!(rank_polynomial(0).is_err());
    }
}
