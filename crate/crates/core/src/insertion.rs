//! An insertion map from `H_{(1,n)}(ζ)` to `H_{(n,1)}(ζ)` built from six
//! local rewriting rules on factor triples.
//!
//! A word of `H_{(1,n)}` has at most one place where its `α` letters fail
//! to increase, between the first and second factor applied. Each rule
//! rewrites a triple whose middle factor has the smallest `α`, and moves
//! that break one step later in application order. Written as a product the
//! break travels leftwards, so the rules are tried on the rightmost triples
//! first.
//!
//! Rules are stored in application order: `[first, second, third]`.

use std::fmt;

use serde::Serialize;

use crate::constants::weakly_fits;
use crate::error::{Error, Result};
use crate::perm::Composition;
use crate::umonoid::rewrite::{bind, instantiate};
use crate::umonoid::{evaluate_word, Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleTag {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A side condition on the letters bound by a rule's pattern.
#[derive(Debug, Clone, Copy)]
pub enum Guard {
    /// The letters strictly increase in the order listed.
    Increasing(&'static [usize]),
    /// No letter of the first group equals a letter of the second.
    Disjoint(&'static [usize], &'static [usize]),
}

impl Guard {
    fn holds(&self, vals: &[usize]) -> bool {
        match *self {
            Guard::Increasing(vars) => vars.windows(2).all(|w| vals[w[0]] < vals[w[1]]),
            Guard::Disjoint(xs, ys) => xs.iter().all(|&x| ys.iter().all(|&y| vals[x] != vals[y])),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TransformRule {
    pub tag: RuleTag,
    pub vars: usize,
    pub before: [(usize, usize); 3],
    pub after: [(usize, usize); 3],
    pub guards: &'static [Guard],
}

impl TransformRule {
    /// The rewritten triple when `triple` matches.
    pub fn apply(&self, triple: &[Generator]) -> Option<Vec<Generator>> {
        let vals = bind(&self.before, triple, self.vars)?;
        self.guards
            .iter()
            .all(|g| g.holds(&vals))
            .then(|| instantiate(&self.after, &vals))
    }
}

// Letter variables of rules A, D, E and F.
const LA: usize = 0; // a
const LB: usize = 1; // b
const LC: usize = 2; // c
const GA: usize = 3; // α
const GB: usize = 4; // β
const GC: usize = 5; // γ

// Letter variables of rules B and C.
const QA: usize = 0; // α
const QB: usize = 1; // β
const QC: usize = 2; // γ
const QD: usize = 3; // δ

pub const RULES: [TransformRule; 6] = [
    TransformRule {
        tag: RuleTag::A,
        vars: 6,
        before: [(LB, GB), (LA, GA), (LC, GC)],
        after: [(LB, GB), (LC, GC), (LA, GA)],
        guards: &[Guard::Increasing(&[LA, LB, LC]), Guard::Disjoint(&[LA, GA], &[LC, GC])],
    },
    TransformRule {
        tag: RuleTag::B,
        vars: 4,
        before: [(QB, QD), (QA, QB), (QB, QC)],
        after: [(QB, QC), (QC, QD), (QA, QC)],
        guards: &[Guard::Increasing(&[QA, QB, QC, QD])],
    },
    TransformRule {
        tag: RuleTag::C,
        vars: 4,
        before: [(QB, QC), (QA, QB), (QB, QD)],
        after: [(QA, QC), (QC, QD), (QB, QC)],
        guards: &[Guard::Increasing(&[QA, QB, QC, QD])],
    },
    TransformRule {
        tag: RuleTag::D,
        vars: 6,
        before: [(LB, GB), (LA, LC), (LC, GC)],
        after: [(LA, LC), (LC, GC), (LB, GB)],
        guards: &[Guard::Increasing(&[LA, LB, LC]), Guard::Disjoint(&[LA, LC, GC], &[LB, GB])],
    },
    TransformRule {
        tag: RuleTag::E,
        vars: 6,
        before: [(LC, GC), (LA, LC), (LB, GB)],
        after: [(LB, GB), (LC, GC), (LA, LC)],
        guards: &[Guard::Increasing(&[LA, LB, LC]), Guard::Disjoint(&[LA, LC, GC], &[LB, GB])],
    },
    TransformRule {
        tag: RuleTag::F,
        vars: 6,
        before: [(LC, GC), (LA, GA), (LB, GB)],
        after: [(LA, GA), (LC, GC), (LB, GB)],
        guards: &[Guard::Increasing(&[LA, LB, LC]), Guard::Disjoint(&[LA, GA], &[LC, GC])],
    },
];

/// Application-order index of the first factor of the triple whose leftmost
/// written factor is number `pos` (1-based, written order).
fn triple_start(len: usize, pos: usize) -> Option<usize> {
    (pos >= 1 && pos + 2 <= len).then(|| len - pos - 2)
}

/// Applies the first rule, in the order A to F, matching the triple that
/// starts at written position `pos`. Returns `None` when no rule matches.
pub fn apply_rule(x: &Word, pos: usize) -> Result<Option<(RuleTag, Word)>> {
    let start = triple_start(x.len(), pos)
        .ok_or_else(|| Error::Precondition(format!("no factor triple at position {pos} of {x}")))?;
    let triple = &x.gens()[start..start + 3];
    for rule in &RULES {
        if let Some(new) = rule.apply(triple) {
            let mut out = x.clone();
            out.gens_mut()[start..start + 3].copy_from_slice(&new);
            let before = evaluate_word(x);
            let after = evaluate_word(&out);
            if before != after || after.is_zero() {
                return Err(Error::Invariant(format!(
                    "rule {} at position {pos} sends {x} ({before}) to {out} ({after})",
                    rule.tag
                )));
            }
            return Ok(Some((rule.tag, out)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionStep {
    pub pos: usize,
    pub rule: RuleTag,
    pub before: Word,
    pub after: Word,
}

impl fmt::Display for InsertionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pos={} rule={} before={} after={}",
            self.pos, self.rule, self.before, self.after
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionTrace {
    pub input: Word,
    pub result: Word,
    pub steps: Vec<InsertionStep>,
}

fn hook_shape(first: usize, second: usize) -> Composition {
    Composition::new(vec![first as i64, second as i64])
}

pub fn iteration_cap(len: usize) -> usize {
    2 * len.pow(3) + 2
}

/// Rewrites a word of `H_{(1,n)}(ζ)` into `H_{(n,1)}(ζ)`, always at the
/// rightmost written triple where some rule applies.
pub fn insert(x: &Word) -> Result<InsertionTrace> {
    if x.is_empty() {
        return Err(Error::Precondition("the empty word has no (1,n) shape".into()));
    }
    let n = x.len() - 1;
    if evaluate_word(x).is_zero() {
        return Err(Error::ZeroWord);
    }
    if !weakly_fits(x, &hook_shape(1, n)) {
        return Err(Error::Precondition(format!("{x} does not weakly fit (1,{n})")));
    }
    let cap = iteration_cap(x.len());
    let mut cur = x.clone();
    let mut steps = Vec::new();
    'rewrite: loop {
        for pos in (1..=x.len().saturating_sub(2)).rev() {
            if let Some((rule, next)) = apply_rule(&cur, pos)? {
                if steps.len() == cap {
                    return Err(Error::Nontermination(cap));
                }
                steps.push(InsertionStep {
                    pos,
                    rule,
                    before: cur,
                    after: next.clone(),
                });
                cur = next;
                continue 'rewrite;
            }
        }
        break;
    }
    if !weakly_fits(&cur, &hook_shape(n, 1)) {
        return Err(Error::Invariant(format!(
            "insertion of {x} stopped at {cur}, which does not weakly fit ({n},1)"
        )));
    }
    Ok(InsertionTrace {
        input: x.clone(),
        result: cur,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::constants::h_set;
    use crate::perm::Permutation;
    use crate::umonoid::{reduced_words, universal_length};

    fn paper(pairs: &[(usize, usize)]) -> Word {
        Word::from_paper_pairs(pairs).unwrap()
    }

    #[test]
    fn rule_b_instance() {
        let x = paper(&[(2, 3), (1, 2), (2, 4)]);
        let (tag, y) = apply_rule(&x, 1).unwrap().unwrap();
        assert_eq!(tag, RuleTag::B);
        assert_eq!(y, paper(&[(1, 3), (3, 4), (2, 3)]));
    }

    #[test]
    fn rule_f_guard_rejects_overlap() {
        let gens = Word::from_paper_pairs(&[(2, 4), (1, 3), (3, 5)]).unwrap();
        assert!(RULES[5].apply(gens.gens()).is_none());
        let ok = Word::from_paper_pairs(&[(2, 6), (1, 3), (4, 5)]).unwrap();
        assert!(RULES[5].apply(ok.gens()).is_some());
    }

    #[test]
    fn rules_d_and_e_bind_five_letters() {
        let x = paper(&[(2, 3), (1, 4), (4, 5)]);
        let (tag, y) = apply_rule(&x, 1).unwrap().unwrap();
        assert_eq!(tag, RuleTag::E);
        assert_eq!(y, paper(&[(1, 4), (4, 5), (2, 3)]));
        let x = paper(&[(4, 5), (1, 4), (2, 3)]);
        let (tag, y) = apply_rule(&x, 1).unwrap().unwrap();
        assert_eq!(tag, RuleTag::D);
        assert_eq!(y, paper(&[(2, 3), (4, 5), (1, 4)]));
    }

    #[test]
    fn positions_out_of_range() {
        let x = paper(&[(1, 2), (3, 4)]);
        assert!(apply_rule(&x, 1).is_err());
        let x = paper(&[(2, 3), (1, 2), (2, 4)]);
        assert!(apply_rule(&x, 2).is_err());
        assert!(apply_rule(&x, 0).is_err());
    }

    #[test]
    fn short_words_are_fixed() {
        let x = paper(&[(2, 5)]);
        assert_eq!(insert(&x).unwrap().result, x);
        let x = paper(&[(3, 4), (1, 2)]);
        assert_eq!(insert(&x).unwrap().result, x);
        assert!(insert(&Word::empty()).is_err());
    }

    #[test]
    fn rules_preserve_evaluation_on_reduced_words_of_s4() {
        for z in Permutation::all(4) {
            for x in reduced_words(&z) {
                for pos in 1..=x.len().saturating_sub(2) {
                    apply_rule(&x, pos).unwrap();
                }
            }
        }
    }

    #[test]
    fn insertion_is_a_bijection_in_s4() {
        for z in Permutation::all(4) {
            let len = universal_length(&z);
            if len < 2 {
                continue;
            }
            let n = len as i64 - 1;
            let source = h_set(&z, &Composition::new(vec![1, n]));
            let target: BTreeSet<Word> = h_set(&z, &Composition::new(vec![n, 1])).into_iter().collect();
            let image: BTreeSet<Word> = source.iter().map(|x| insert(x).unwrap().result).collect();
            assert_eq!(image.len(), source.len(), "{z} not injective");
            assert_eq!(image, target, "{z}");
        }
    }

    #[test]
    fn trace_format() {
        let x = paper(&[(2, 3), (1, 2), (2, 4)]);
        let trace = insert(&x).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(
            trace.steps[0].to_string(),
            "pos=1 rule=B before=u[2,3] u[1,2] u[2,4] after=u[1,3] u[3,4] u[2,3]"
        );
    }
}
