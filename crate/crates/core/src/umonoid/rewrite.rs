//! The defining relations of `ℳ`, applied to words in application order.
//!
//! Written in application order (first factor acts first), for
//! `α < β < γ < δ`:
//!
//! 1. `αγ · γδ · βγ ≡ βγ · αβ · βδ`
//! 2. `βγ · γδ · αγ ≡ βδ · αβ · βγ`
//! 3. `αβ · γδ ≡ γδ · αβ` when the two generators are separated or strictly
//!    nested
//! 4. `αγ · βδ ≡ βδ · αγ ≡ 0` when `α ≤ β < γ ≤ δ`
//! 5. `βγ · αβ · βγ ≡ αβ · βγ · αβ ≡ 0`

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::word::{Generator, Word};
use super::evaluate_word;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// Relation (1).
    BraidAbove,
    /// Relation (2).
    BraidBelow,
    /// Relation (3).
    Commute,
    /// Relation (4).
    Overlap,
    /// Relation (5).
    Repeat,
}

impl Relation {
    pub fn number(self) -> u8 {
        match self {
            Relation::BraidAbove => 1,
            Relation::BraidBelow => 2,
            Relation::Commute => 3,
            Relation::Overlap => 4,
            Relation::Repeat => 5,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Relation::Overlap | Relation::Repeat)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// A factor pattern over letter variables `0, 1, 2, …`.
pub(crate) type Pattern = [(usize, usize)];

/// Binds `pattern` against `gens`, returning the letter assigned to each of
/// the `nvars` variables when every occurrence of a variable receives the
/// same letter. Variables absent from the pattern are left at 0.
pub(crate) fn bind(pattern: &Pattern, gens: &[Generator], nvars: usize) -> Option<Vec<usize>> {
    debug_assert_eq!(pattern.len(), gens.len());
    let mut vals = vec![0usize; nvars];
    for (&(x, y), g) in pattern.iter().zip(gens) {
        for (var, letter) in [(x, g.alpha()), (y, g.beta())] {
            if vals[var] == 0 {
                vals[var] = letter;
            } else if vals[var] != letter {
                return None;
            }
        }
    }
    Some(vals)
}

pub(crate) fn instantiate(pattern: &Pattern, vals: &[usize]) -> Vec<Generator> {
    pattern
        .iter()
        .map(|&(x, y)| Generator::new_unchecked(vals[x], vals[y]))
        .collect()
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

type Triple = [(usize, usize); 3];

const BRAIDS: [(Relation, Triple, Triple); 2] = [
    (Relation::BraidAbove, [(A, C), (C, D), (B, C)], [(B, C), (A, B), (B, D)]),
    (Relation::BraidBelow, [(B, C), (C, D), (A, C)], [(B, D), (A, B), (B, C)]),
];

const REPEATS: [Triple; 2] = [[(B, C), (A, B), (B, C)], [(A, B), (B, C), (A, B)]];

fn strictly_increasing(vals: &[usize]) -> bool {
    vals.windows(2).all(|w| w[0] < w[1])
}

fn commutes(x: Generator, y: Generator) -> bool {
    let (p, q, r, s) = (x.alpha(), x.beta(), y.alpha(), y.beta());
    q < r || s < p || (p < r && s < q) || (r < p && q < s)
}

fn overlaps(x: Generator, y: Generator) -> bool {
    let crossing = |p: usize, q: usize, r: usize, s: usize| p <= r && r < q && q <= s;
    crossing(x.alpha(), x.beta(), y.alpha(), y.beta())
        || crossing(y.alpha(), y.beta(), x.alpha(), x.beta())
}

/// Places (0-based index of the first factor) where relation (4) or (5)
/// applies.
pub fn zero_relation_sites(x: &Word) -> Vec<(usize, Relation)> {
    let gens = x.gens();
    let mut sites = Vec::new();
    for i in 0..gens.len() {
        if i + 1 < gens.len() && overlaps(gens[i], gens[i + 1]) {
            sites.push((i, Relation::Overlap));
        }
        if i + 2 < gens.len() {
            let repeat = REPEATS.iter().any(|pat| {
                bind(pat, &gens[i..i + 3], 3).is_some_and(|v| strictly_increasing(&v))
            });
            if repeat {
                sites.push((i, Relation::Repeat));
            }
        }
    }
    sites
}

fn replaced(x: &Word, at: usize, with: &[Generator]) -> Word {
    let mut out = x.clone();
    out.gens_mut()[at..at + with.len()].copy_from_slice(with);
    out
}

/// Every word one application of relations (1)–(3) away from `x`, in either
/// direction, sorted.
pub fn rewrite_neighbors(x: &Word) -> Result<Vec<Word>> {
    if evaluate_word(x).is_zero() {
        return Err(Error::ZeroWord);
    }
    if let Some(&(i, rel)) = zero_relation_sites(x).first() {
        return Err(Error::Invariant(format!(
            "relation {rel} applies at factor {} of the reduced word {x}",
            i + 1
        )));
    }
    let gens = x.gens();
    let mut out = BTreeSet::new();
    for i in 0..gens.len().saturating_sub(1) {
        if commutes(gens[i], gens[i + 1]) {
            out.insert(replaced(x, i, &[gens[i + 1], gens[i]]));
        }
    }
    for i in 0..gens.len().saturating_sub(2) {
        let triple = &gens[i..i + 3];
        for (_, lhs, rhs) in &BRAIDS {
            for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                if let Some(vals) = bind(from, triple, 4).filter(|v| strictly_increasing(v)) {
                    out.insert(replaced(x, i, &instantiate(to, &vals)));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The class of `x` under relations (1)–(3), sorted.
pub fn rewrite_closure(x: &Word) -> Result<Vec<Word>> {
    let mut seen = BTreeSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(w) = queue.pop_front() {
        for n in rewrite_neighbors(&w)? {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::perm::Permutation;
    use crate::umonoid::{canonical_word, reduced_words, MaybePermutation};

    fn paper(pairs: &[(usize, usize)]) -> Word {
        Word::from_paper_pairs(pairs).unwrap()
    }

    #[test]
    fn neighbour_examples() {
        let cm = paper(&[(3, 4), (2, 3), (4, 5), (1, 4)]);
        assert!(rewrite_neighbors(&cm).unwrap().contains(&paper(&[(3, 4), (4, 5), (2, 3), (1, 4)])));
        let x = paper(&[(3, 4), (4, 5), (1, 4), (2, 3)]);
        assert!(rewrite_neighbors(&x).unwrap().contains(&paper(&[(3, 5), (1, 3), (3, 4), (2, 3)])));
        let single = paper(&[(2, 5)]);
        assert!(rewrite_neighbors(&single).unwrap().is_empty());
        let zero = Word::from_pairs(&[(1, 2), (1, 2)]).unwrap();
        assert_eq!(rewrite_neighbors(&zero), Err(Error::ZeroWord));
    }

    #[test]
    fn zero_relations_detected() {
        let overlap = Word::from_pairs(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(zero_relation_sites(&overlap), vec![(0, Relation::Overlap)]);
        let repeat = Word::from_pairs(&[(1, 2), (2, 3), (1, 2)]).unwrap();
        assert!(zero_relation_sites(&repeat).contains(&(0, Relation::Repeat)));
        assert!(evaluate_word(&overlap).is_zero());
        assert!(evaluate_word(&repeat).is_zero());
    }

    #[test]
    fn closure_examples() {
        assert_eq!(rewrite_closure(&Word::empty()).unwrap(), vec![Word::empty()]);
        let cm = paper(&[(3, 4), (2, 3), (4, 5), (1, 4)]);
        let closure = rewrite_closure(&cm).unwrap();
        assert_eq!(closure.len(), 5);
        assert_eq!(closure, reduced_words(&"5,4,2,1,3".parse().unwrap()));
        let z: Permutation = "2,5,4,1,6,3".parse().unwrap();
        assert_eq!(rewrite_closure(&canonical_word(&z)).unwrap().len(), 14);
    }

    #[test]
    fn closure_is_the_reduced_word_set_in_s4() {
        for z in Permutation::all(4) {
            assert_eq!(rewrite_closure(&canonical_word(&z)).unwrap(), reduced_words(&z), "{z}");
        }
    }

    // Words of length at most 4 over generators with β ≤ 5 that evaluate to
    // the same permutation are connected by relations (1)–(3).
    #[test]
    fn faithful_on_short_words() {
        let gens: Vec<Generator> = (1..5)
            .flat_map(|a| (a + 1..=5).map(move |b| Generator::new(a, b).unwrap()))
            .collect();
        let mut classes: HashMap<Permutation, Vec<Word>> = HashMap::new();
        let mut frontier = vec![Word::empty()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in &gens {
                    let mut x = w.clone();
                    x.push(g);
                    if let MaybePermutation::Perm(z) = evaluate_word(&x) {
                        classes.entry(z).or_default().push(x.clone());
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        for words in classes.values() {
            let closure = rewrite_closure(&words[0]).unwrap();
            for w in words {
                assert!(closure.binary_search(w).is_ok(), "{w} not reached from {}", words[0]);
            }
        }
    }
}
