//! Generators `u_{αβ}`, words over them and the two text encodings.
//!
//! Words are stored in application order: `gens[0]` acts first. Products are
//! conventionally written right to left, so the "paper" text order prints the
//! last factor first: the application sequence `(1,4),(4,5),(2,3),(3,4)` is
//! written `u[3,4] u[2,3] u[4,5] u[1,4]`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The generator `u_{αβ}` with `0 < α < β`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    alpha: usize,
    beta: usize,
}

impl Generator {
    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        if alpha == 0 || alpha >= beta {
            return Err(Error::Parse(format!(
                "generator needs 0 < alpha < beta, got ({alpha},{beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub(crate) fn new_unchecked(alpha: usize, beta: usize) -> Self {
        debug_assert!(0 < alpha && alpha < beta);
        Self { alpha, beta }
    }

    pub fn alpha(self) -> usize {
        self.alpha
    }

    pub fn beta(self) -> usize {
        self.beta
    }

    pub fn transposition(self) -> Permutation {
        Permutation::transposition(self.alpha, self.beta)
    }

    pub fn letters(self) -> [usize; 2] {
        [self.alpha, self.beta]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},{}]", self.alpha, self.beta)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}{}", self.alpha, self.beta)
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.alpha, self.beta].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        Generator::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// Which way a word is written in text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordOrder {
    /// Last applied factor first (products written right to left).
    #[default]
    Paper,
    /// First applied factor first.
    Application,
}

impl FromStr for WordOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(WordOrder::Paper),
            "application" => Ok(WordOrder::Application),
            other => Err(Error::Parse(format!("unknown word order {other:?}"))),
        }
    }
}

/// A finite sequence of generators in application order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    gens: Vec<Generator>,
}

impl Word {
    pub fn new(gens: Vec<Generator>) -> Self {
        Self { gens }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from `(α, β)` pairs listed in application order.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, b)| Generator::new(a, b))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Builds a word from `(α, β)` pairs listed as written (last factor
    /// first).
    pub fn from_paper_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut w = Self::from_pairs(pairs)?;
        w.gens.reverse();
        Ok(w)
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn alphas(&self) -> impl Iterator<Item = usize> + '_ {
        self.gens.iter().map(|g| g.alpha)
    }

    pub fn betas(&self) -> impl Iterator<Item = usize> + '_ {
        self.gens.iter().map(|g| g.beta)
    }

    /// The set of letters `α, β` occurring in the word, sorted.
    pub fn letters(&self) -> Vec<usize> {
        self.gens
            .iter()
            .flat_map(|g| g.letters())
            .sorted()
            .dedup()
            .collect()
    }

    pub fn reversed(&self) -> Word {
        Self::new(self.gens.iter().rev().copied().collect())
    }

    /// `other` followed by `self`, i.e. the product `self · other`.
    pub fn after(&self, other: &Word) -> Word {
        let mut gens = other.gens.clone();
        gens.extend_from_slice(&self.gens);
        Self::new(gens)
    }

    pub fn push(&mut self, g: Generator) {
        self.gens.push(g);
    }

    pub(crate) fn gens_mut(&mut self) -> &mut Vec<Generator> {
        &mut self.gens
    }

    pub fn to_text(&self, order: WordOrder) -> String {
        if self.gens.is_empty() {
            return "1".to_string();
        }
        match order {
            WordOrder::Paper => self.gens.iter().rev().join(" "),
            WordOrder::Application => self.gens.iter().join(" "),
        }
    }

    pub fn parse_text(s: &str, order: WordOrder) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::empty());
        }
        let mut gens = Vec::new();
        let mut rest = s;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix("u[")
                .ok_or_else(|| Error::Parse(format!("expected `u[a,b]` at {rest:?}")))?;
            let close = body
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unterminated factor in {s:?}")))?;
            let (a, b) = body[..close]
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("factor {:?} needs two letters", &body[..close])))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid letter {t:?}")))
            };
            gens.push(Generator::new(parse(a)?, parse(b)?)?);
            rest = &body[close + 1..];
        }
        if order == WordOrder::Paper {
            gens.reverse();
        }
        Ok(Self::new(gens))
    }

    pub fn to_json(&self) -> WordJson {
        WordJson {
            gens: self.gens.clone(),
            order: WordOrder::Application,
        }
    }
}

/// `{"gens":[[1,4],[4,5]],"order":"application"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub gens: Vec<Generator>,
    pub order: WordOrder,
}

impl From<WordJson> for Word {
    fn from(j: WordJson) -> Self {
        let mut w = Word::new(j.gens);
        if j.order == WordOrder::Paper {
            w.gens.reverse();
        }
        w
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(WordOrder::Paper))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text(WordOrder::Paper))
    }
}

/// An element of `S_∞ ∪ {0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MaybePermutation {
    Zero,
    Perm(Permutation),
}

impl MaybePermutation {
    pub fn is_zero(&self) -> bool {
        matches!(self, MaybePermutation::Zero)
    }

    pub fn perm(&self) -> Option<&Permutation> {
        match self {
            MaybePermutation::Zero => None,
            MaybePermutation::Perm(p) => Some(p),
        }
    }

    pub fn into_perm(self) -> Option<Permutation> {
        match self {
            MaybePermutation::Zero => None,
            MaybePermutation::Perm(p) => Some(p),
        }
    }
}

impl From<Permutation> for MaybePermutation {
    fn from(p: Permutation) -> Self {
        MaybePermutation::Perm(p)
    }
}

impl fmt::Display for MaybePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaybePermutation::Zero => f.write_str("0"),
            MaybePermutation::Perm(p) => write!(f, "{p}"),
        }
    }
}
