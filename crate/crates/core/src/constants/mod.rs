//! Structure constants `c_λ^ζ` for multiplying a Schubert polynomial by a
//! Schur polynomial, computed as signed counts of reduced words.
//!
//! `H_p(ζ)` collects the reduced words of `ζ` whose `α` letters strictly
//! increase along consecutive blocks of sizes `p_1, p_2, …` (application
//! order). `E_p` and `E′_p` are the analogues with strictly decreasing `α`
//! and strictly decreasing `β`. Then
//!
//! ```text
//! c_λ^ζ = Σ_{σ ∈ S_r} ε(σ) |H_{λ_σ}(ζ)|,   λ_σ(i) = λ_{σ(i)} + i − σ(i).
//! ```

mod lr;
mod symmetry;
mod young;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::korder::leq_k;
use crate::perm::{Composition, Partition, Permutation};
use crate::umonoid::{reduced_words, universal_length, Word};

pub use lr::lr_coefficient;
pub use symmetry::{
    check_cyclic, check_disjoint, cyclic_conjugate, is_u_disjoint, phi_star_word, psi_h, psi_v,
    DisjointChecker,
};
pub use young::f_lambda;

/// Which block condition a word must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fit {
    /// `H_p`: `α` strictly increasing within blocks.
    IncreasingAlpha,
    /// `E_p`: `α` strictly decreasing within blocks.
    DecreasingAlpha,
    /// `E′_p`: `β` strictly decreasing within blocks.
    DecreasingBeta,
}

impl Fit {
    fn letters(self, x: &Word) -> Vec<usize> {
        match self {
            Fit::IncreasingAlpha | Fit::DecreasingAlpha => x.alphas().collect(),
            Fit::DecreasingBeta => x.betas().collect(),
        }
    }

    fn in_order(self, a: usize, b: usize) -> bool {
        match self {
            Fit::IncreasingAlpha => a < b,
            Fit::DecreasingAlpha | Fit::DecreasingBeta => a > b,
        }
    }

    /// Bit `i` set when letters `i` and `i + 1` (0-based) break the order.
    fn break_mask(self, x: &Word) -> u64 {
        let letters = self.letters(x);
        letters
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| !self.in_order(pair[0], pair[1]))
            .fold(0, |mask, (i, _)| mask | 1 << i)
    }
}

/// Bit `i` set when a block ends after letter `i` (0-based), or `None` when
/// `p` has a negative part.
fn boundary_mask(p: &Composition) -> Option<u64> {
    if p.has_negative() {
        return None;
    }
    let mut mask = 0u64;
    let mut end = 0usize;
    for &part in p.parts() {
        end += part as usize;
        if end > 0 && end < 64 {
            mask |= 1 << (end - 1);
        }
    }
    Some(mask)
}

pub fn fits(x: &Word, p: &Composition, kind: Fit) -> bool {
    if p.has_negative() || p.total() != x.len() as i64 {
        return false;
    }
    let letters = kind.letters(x);
    let mut start = 0;
    p.parts().iter().all(|&part| {
        let block = &letters[start..start + part as usize];
        start += part as usize;
        block.windows(2).all(|pair| kind.in_order(pair[0], pair[1]))
    })
}

/// `x` weakly fits `p`.
pub fn weakly_fits(x: &Word, p: &Composition) -> bool {
    fits(x, p, Fit::IncreasingAlpha)
}

/// The reduced words of one permutation with their block-break masks, so
/// that every `H_p`, `E_p`, `E′_p` count is a mask comparison.
#[derive(Debug, Clone)]
pub struct WordClasses {
    zeta: Permutation,
    rank: usize,
    words: Vec<Word>,
    masks: [Vec<u64>; 3],
}

const KINDS: [Fit; 3] = [Fit::IncreasingAlpha, Fit::DecreasingAlpha, Fit::DecreasingBeta];

impl WordClasses {
    pub fn new(z: &Permutation) -> Result<Self> {
        let rank = universal_length(z);
        if rank > 64 {
            return Err(Error::Resource(format!("ℓ_u = {rank} is beyond word masks")));
        }
        let words = reduced_words(z);
        let masks = KINDS.map(|kind| words.iter().map(|x| kind.break_mask(x)).collect());
        Ok(Self {
            zeta: z.clone(),
            rank,
            words,
            masks,
        })
    }

    pub fn zeta(&self) -> &Permutation {
        &self.zeta
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    fn slot(kind: Fit) -> usize {
        KINDS.iter().position(|&k| k == kind).unwrap()
    }

    fn matching(&self, p: &Composition, kind: Fit) -> impl Iterator<Item = usize> + '_ {
        let bound = boundary_mask(p).filter(|_| p.total() == self.rank as i64);
        let masks = &self.masks[Self::slot(kind)];
        (0..self.words.len()).filter(move |&i| bound.is_some_and(|b| masks[i] & !b == 0))
    }

    pub fn count(&self, p: &Composition, kind: Fit) -> usize {
        self.matching(p, kind).count()
    }

    pub fn set(&self, p: &Composition, kind: Fit) -> Vec<Word> {
        self.matching(p, kind).map(|i| self.words[i].clone()).collect()
    }

    /// `Σ_σ ε(σ) |X_{f(λ_σ)}|` over `σ ∈ S_r`.
    fn signed_sum(&self, lambda: &Partition, r: usize, kind: Fit, reverse: bool) -> i64 {
        permutations_of(r)
            .filter_map(|sigma| {
                let p = lambda_sigma_padded(lambda, &sigma, r);
                if p.has_negative() {
                    return None;
                }
                let p = if reverse { p.reversed() } else { p };
                Some(sigma.sign() * self.count(&p, kind) as i64)
            })
            .sum()
    }

    pub fn c_constant(&self, lambda: &Partition) -> Result<i64> {
        self.c_constant_padded(lambda, lambda.len())
    }

    /// The alternating sum with `λ` padded by zeros to `r` parts.
    pub fn c_constant_padded(&self, lambda: &Partition, r: usize) -> Result<i64> {
        if r < lambda.len() {
            return Err(Error::PartitionTooLong {
                parts: lambda.len(),
                k: r,
            });
        }
        if lambda.size() != self.rank {
            return Ok(0);
        }
        let c = self.signed_sum(lambda, r, Fit::IncreasingAlpha, false);
        if c < 0 {
            return Err(Error::Invariant(format!(
                "c_{{{lambda}}} of {} is negative ({c})",
                self.zeta
            )));
        }
        Ok(c)
    }

    /// `c_λ^ζ` through `E` and through `E′`, applied to the conjugate of `λ`.
    pub fn c_constant_dual(&self, lambda: &Partition) -> Result<i64> {
        if lambda.size() != self.rank {
            return Ok(0);
        }
        let t = lambda.conjugate();
        let via_e = self.signed_sum(&t, t.len(), Fit::DecreasingAlpha, true);
        let via_e_prime = self.signed_sum(&t, t.len(), Fit::DecreasingBeta, false);
        if via_e != via_e_prime {
            return Err(Error::Invariant(format!(
                "dual constants of {} at {lambda} disagree: E gives {via_e}, E′ gives {via_e_prime}",
                self.zeta
            )));
        }
        Ok(via_e)
    }

    /// `c_λ^ζ` for every `λ ⊢ ℓ_u(ζ)`, in reverse lexicographic order.
    pub fn table(&self) -> Result<Vec<(Partition, i64)>> {
        Partition::all_of(self.rank)
            .into_iter()
            .map(|lambda| {
                let c = self.c_constant(&lambda)?;
                Ok((lambda, c))
            })
            .collect()
    }

    pub fn d_lambda(&self, lambda: &Partition) -> Vec<SignedWordOccurrence> {
        let r = lambda.len();
        let mut out = Vec::new();
        for sigma in permutations_of(r) {
            let p = lambda_sigma_padded(lambda, &sigma, r);
            for word in self.set(&p, Fit::IncreasingAlpha) {
                out.push(SignedWordOccurrence {
                    word,
                    sign: sigma.sign(),
                    sigma: sigma.clone(),
                });
            }
        }
        out
    }

    pub fn report(&self) -> Result<ConstantsReport> {
        let table = self.table()?;
        let total: u64 = table
            .iter()
            .map(|(lambda, c)| f_lambda(lambda) as u64 * *c as u64)
            .sum();
        let chains = self.words.len() as u64;
        let identity_ok = total == chains;
        if !identity_ok {
            return Err(Error::Invariant(format!(
                "{} has {chains} reduced words but Σ f^λ c_λ = {total}",
                self.zeta
            )));
        }
        Ok(ConstantsReport {
            zeta: self.zeta.clone(),
            lu: self.rank,
            chains,
            c: table
                .into_iter()
                .map(|(lambda, value)| ConstantEntry { lambda, value })
                .collect(),
            identity_ok,
        })
    }
}

/// `S_r` with each element padded to a window of length `r`.
fn permutations_of(r: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(r)
}

fn lambda_sigma_padded(lambda: &Partition, sigma: &Permutation, r: usize) -> Composition {
    Composition::new(
        (1..=r)
            .map(|i| {
                let s = sigma.apply(i);
                lambda.part(s) as i64 + i as i64 - s as i64
            })
            .collect(),
    )
}

/// `λ_σ`, with `λ` padded to as many parts as `σ` moves.
pub fn lambda_sigma(lambda: &Partition, sigma: &Permutation) -> Composition {
    let r = lambda.len().max(sigma.support_bound());
    lambda_sigma_padded(lambda, sigma, r)
}

pub fn h_set(z: &Permutation, p: &Composition) -> Vec<Word> {
    filter_words(z, p, Fit::IncreasingAlpha)
}

pub fn e_set(z: &Permutation, p: &Composition) -> Vec<Word> {
    filter_words(z, p, Fit::DecreasingAlpha)
}

pub fn e_prime_set(z: &Permutation, p: &Composition) -> Vec<Word> {
    filter_words(z, p, Fit::DecreasingBeta)
}

fn filter_words(z: &Permutation, p: &Composition, kind: Fit) -> Vec<Word> {
    if p.has_negative() {
        return Vec::new();
    }
    reduced_words(z)
        .into_iter()
        .filter(|x| fits(x, p, kind))
        .collect()
}

pub fn c_constant(z: &Permutation, lambda: &Partition) -> Result<i64> {
    WordClasses::new(z)?.c_constant(lambda)
}

pub fn c_constant_padded(z: &Permutation, lambda: &Partition, r: usize) -> Result<i64> {
    WordClasses::new(z)?.c_constant_padded(lambda, r)
}

pub fn c_constant_dual(z: &Permutation, lambda: &Partition) -> Result<i64> {
    WordClasses::new(z)?.c_constant_dual(lambda)
}

pub fn constants_table(z: &Permutation) -> Result<Vec<(Partition, i64)>> {
    WordClasses::new(z)?.table()
}

/// `c^w_{u, v(λ,k)}`: zero unless `u ≤_k w`, then `c_λ^{wu⁻¹}`.
pub fn schubert_coeff(u: &Permutation, lambda: &Partition, k: usize, w: &Permutation) -> Result<i64> {
    if lambda.len() > k {
        return Err(Error::PartitionTooLong {
            parts: lambda.len(),
            k,
        });
    }
    if !leq_k(u, w, k) {
        return Ok(0);
    }
    c_constant(&w.compose(&u.inverse()), lambda)
}

pub fn verify_identity(z: &Permutation) -> Result<ConstantsReport> {
    WordClasses::new(z)?.report()
}

pub fn d_lambda(z: &Permutation, lambda: &Partition) -> Result<Vec<SignedWordOccurrence>> {
    Ok(WordClasses::new(z)?.d_lambda(lambda))
}

/// A word of `H_{λ_σ}(ζ)` tagged with `σ` and `ε(σ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedWordOccurrence {
    pub word: Word,
    pub sigma: Permutation,
    pub sign: i64,
}

/// `{"zeta":[...],"lu":N,"chains":M,"c":[{"lambda":[...],"value":v},...],"identity_ok":true}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub zeta: Permutation,
    pub lu: usize,
    pub chains: u64,
    pub c: Vec<ConstantEntry>,
    pub identity_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub lambda: Partition,
    pub value: i64,
}

impl ConstantsReport {
    pub fn value(&self, lambda: &Partition) -> i64 {
        self.c
            .iter()
            .find(|e| &e.lambda == lambda)
            .map_or(0, |e| e.value)
    }
}
