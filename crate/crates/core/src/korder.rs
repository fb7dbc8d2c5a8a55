//! The k-Bruhat order `≤_k` on `S_∞`: comparison, covers, the canonical
//! chains (CM and DCM), chain inversions and exhaustive maximal chain
//! enumeration.
//!
//! A cover `v <_k v·(a b)` requires `a ≤ k < b` and `ℓ(v·(a b)) = ℓ(v) + 1`.
//! The comparison itself is decided by three window conditions instead of a
//! search: `u(i) ≤ w(i)` for `i ≤ k`, `u(i) ≥ w(i)` for `i > k`, and the
//! relative order of values on each side of `k` never flips from ascent to
//! descent.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::umonoid::hasse::HasseGraph;
use crate::umonoid::word::{Generator, Word};

pub fn leq_k(u: &Permutation, w: &Permutation, k: usize) -> bool {
    let m = u.support_bound().max(w.support_bound());
    let uw = u.padded(m);
    let ww = w.padded(m);
    let split = k.min(m);
    if (0..split).any(|i| uw[i] > ww[i]) || (split..m).any(|i| uw[i] < ww[i]) {
        return false;
    }
    let keeps_order = |range: std::ops::Range<usize>| {
        range.clone().all(|i| {
            range
                .clone()
                .filter(|&j| j > i)
                .all(|j| !(uw[i] < uw[j] && ww[i] > ww[j]))
        })
    };
    keeps_order(0..split) && keeps_order(split..m)
}

/// Whether `v·(a b)` covers `v` in the Bruhat order (`a < b`).
fn is_bruhat_cover(window: &[usize], a: usize, b: usize) -> bool {
    let (lo, hi) = (window[a - 1], window[b - 1]);
    lo < hi && window[a..b - 1].iter().all(|&c| c < lo || c > hi)
}

/// An interval `[u, w]_k` with `u ≤_k w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedInterval {
    pub u: Permutation,
    pub w: Permutation,
    pub k: usize,
}

impl MarkedInterval {
    pub fn new(u: Permutation, w: Permutation, k: usize) -> Result<Self> {
        if !leq_k(&u, &w, k) {
            return Err(Error::NotComparable {
                u: u.to_string(),
                w: w.to_string(),
                k,
            });
        }
        Ok(Self { u, w, k })
    }

    /// `ℓ(w) − ℓ(u)`, the length of every maximal chain.
    pub fn rank(&self) -> usize {
        self.w.length() - self.u.length()
    }

    /// `w u⁻¹`.
    pub fn zeta(&self) -> Permutation {
        self.w.compose(&self.u.inverse())
    }

    fn bound(&self) -> usize {
        self.u.support_bound().max(self.w.support_bound())
    }
}

/// One step `v → v·(a b)` of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub perm: Permutation,
    pub gen: Generator,
    pub positions: (usize, usize),
}

/// Covers of `u` in `≤_k` that stay below `ceiling`, sorted by generator.
pub fn covers_k(u: &Permutation, k: usize, ceiling: &Permutation) -> Vec<Cover> {
    let m = u.support_bound().max(ceiling.support_bound());
    if k >= m {
        return Vec::new();
    }
    let window = u.padded(m);
    let mut out = Vec::new();
    for a in 1..=k {
        for b in k + 1..=m {
            if !is_bruhat_cover(&window, a, b) {
                continue;
            }
            let next = u.swap_positions(a, b);
            if leq_k(&next, ceiling, k) {
                out.push(Cover {
                    perm: next,
                    gen: Generator::new_unchecked(window[a - 1], window[b - 1]),
                    positions: (a, b),
                });
            }
        }
    }
    out.sort_by_key(|c| c.gen);
    out
}

/// A saturated chain `u₀ <_k u₁ <_k … <_k u_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    steps: Vec<Permutation>,
}

impl Chain {
    pub fn from_steps(steps: Vec<Permutation>) -> Self {
        assert!(!steps.is_empty(), "a chain has at least its bottom element");
        Self { steps }
    }

    pub fn steps(&self) -> &[Permutation] {
        &self.steps
    }

    pub fn bottom(&self) -> &Permutation {
        &self.steps[0]
    }

    pub fn top(&self) -> &Permutation {
        self.steps.last().unwrap()
    }

    /// Number of covers.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The transposed positions `(a_i, b_i)` with `a_i < b_i`, one per step.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.steps
            .windows(2)
            .map(|pair| {
                let m = pair[0].support_bound().max(pair[1].support_bound());
                let moved: Vec<usize> = (1..=m)
                    .filter(|&i| pair[0].apply(i) != pair[1].apply(i))
                    .collect();
                assert_eq!(moved.len(), 2, "chain steps differ by a transposition");
                (moved[0], moved[1])
            })
            .collect()
    }

    pub fn to_json(&self, k: usize) -> ChainJson {
        let steps = self
            .steps
            .iter()
            .skip(1)
            .zip(chain_to_word(self).gens())
            .map(|(perm, &gen)| StepJson {
                perm: perm.clone(),
                gen,
            })
            .collect();
        ChainJson {
            u: self.bottom().clone(),
            w: self.top().clone(),
            k,
            steps,
        }
    }
}

/// `{"u":[...],"w":[...],"k":K,"steps":[{"perm":[...],"gen":[a,b]},...]}`;
/// `steps` lists `u₁, …, u_n` with the generator applied to reach each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub u: Permutation,
    pub w: Permutation,
    pub k: usize,
    pub steps: Vec<StepJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub perm: Permutation,
    pub gen: Generator,
}

impl ChainJson {
    pub fn to_chain(&self) -> Result<Chain> {
        let word = Word::new(self.steps.iter().map(|s| s.gen).collect());
        let chain = word_to_chain(&word, &self.u, self.k)?;
        let listed = self.steps.iter().map(|s| &s.perm);
        if chain.steps().iter().skip(1).ne(listed) || chain.top() != &self.w {
            return Err(Error::Parse("chain steps disagree with their generators".into()));
        }
        Ok(chain)
    }
}

/// Selects the first step of the CM-chain: `a ≤ k` maximising `w(a)` among
/// positions with `u(a) < w(a)`, then `b > k` minimising `w(b)` among
/// positions with `u(b) > u(a) ≥ w(b)`.
fn cm_step(u: &[usize], w: &[usize], k: usize) -> Option<(usize, usize)> {
    let a = (1..=k)
        .filter(|&j| u[j - 1] < w[j - 1])
        .max_by_key(|&j| w[j - 1])?;
    let ua = u[a - 1];
    let b = (k + 1..=u.len())
        .filter(|&j| u[j - 1] > ua && ua >= w[j - 1])
        .min_by_key(|&j| w[j - 1])?;
    Some((a, b))
}

/// The dual selection: `b > k` minimising `w(b)` among positions with
/// `u(b) > w(b)`, then `a ≤ k` maximising `w(a)` among positions with
/// `u(a) < u(b) ≤ w(a)`.
fn dcm_step(u: &[usize], w: &[usize], k: usize) -> Option<(usize, usize)> {
    let b = (k + 1..=u.len())
        .filter(|&j| u[j - 1] > w[j - 1])
        .min_by_key(|&j| w[j - 1])?;
    let ub = u[b - 1];
    let a = (1..=k)
        .filter(|&j| u[j - 1] < ub && ub <= w[j - 1])
        .max_by_key(|&j| w[j - 1])?;
    Some((a, b))
}

/// Picks the next cover `(a, b)` from the current and top windows and `k`.
type CoverSelector = fn(&[usize], &[usize], usize) -> Option<(usize, usize)>;

fn canonical_chain(
    iv: &MarkedInterval,
    select: CoverSelector,
    name: &str,
) -> Result<Chain> {
    let m = iv.bound();
    let k = iv.k.min(m);
    let target = iv.w.padded(m);
    let mut cur = iv.u.clone();
    let mut steps = vec![cur.clone()];
    while cur != iv.w {
        let window = cur.padded(m);
        let (a, b) = select(&window, &target, k).ok_or_else(|| {
            Error::Invariant(format!("{name}-chain: no admissible step from {cur} towards {}", iv.w))
        })?;
        if !is_bruhat_cover(&window, a, b) {
            return Err(Error::Invariant(format!(
                "{name}-chain: ({a},{b}) is not a cover of {cur}"
            )));
        }
        let next = cur.swap_positions(a, b);
        if !leq_k(&next, &iv.w, iv.k) {
            return Err(Error::Invariant(format!(
                "{name}-chain: {next} left the interval below {}",
                iv.w
            )));
        }
        steps.push(next.clone());
        cur = next;
    }
    Ok(Chain::from_steps(steps))
}

pub fn cm_chain(iv: &MarkedInterval) -> Result<Chain> {
    canonical_chain(iv, cm_step, "CM")
}

/// The DCM-chain built step by step from the dual selection rule.
pub fn dcm_chain(iv: &MarkedInterval) -> Result<Chain> {
    canonical_chain(iv, dcm_step, "DCM")
}

/// The DCM-chain obtained by conjugating the CM-chain of the mirrored
/// interval `[ω₀uω₀, ω₀wω₀]_{m−k}` back with `ω₀`.
pub fn dcm_chain_by_symmetry(iv: &MarkedInterval) -> Result<Chain> {
    let m = iv.bound().max(iv.k);
    let mirrored = MarkedInterval {
        u: iv.u.omega_conjugate(m)?,
        w: iv.w.omega_conjugate(m)?,
        k: m - iv.k,
    };
    if !leq_k(&mirrored.u, &mirrored.w, mirrored.k) {
        return Err(Error::Invariant("ω₀-conjugation is not order preserving".into()));
    }
    let steps = cm_chain(&mirrored)?
        .steps()
        .iter()
        .map(|v| v.omega_conjugate(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(Chain::from_steps(steps))
}

/// Inversions `(i, j)` (1-based step indices) of a maximal chain ending at
/// `w`: `w(a_i) < w(a_j)`, or `w(a_i) = w(a_j)` and `w(b_i) > w(b_j)`.
pub fn chain_inversions(c: &Chain, w: &Permutation) -> Vec<(usize, usize)> {
    let keys: Vec<(usize, usize)> = c
        .positions()
        .into_iter()
        .map(|(a, b)| (w.apply(a), w.apply(b)))
        .collect();
    let mut out = Vec::new();
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            let (wa_i, wb_i) = keys[i];
            let (wa_j, wb_j) = keys[j];
            if wa_i < wa_j || (wa_i == wa_j && wb_i > wb_j) {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Every maximal chain of the interval, in lexicographic order of their
/// generator sequences.
pub fn all_chains(iv: &MarkedInterval) -> Vec<Chain> {
    fn go(iv: &MarkedInterval, path: &mut Vec<Permutation>, out: &mut Vec<Chain>) {
        let cur = path.last().unwrap();
        if *cur == iv.w {
            out.push(Chain::from_steps(path.clone()));
            return;
        }
        for cover in covers_k(cur, iv.k, &iv.w) {
            path.push(cover.perm);
            go(iv, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(iv, &mut vec![iv.u.clone()], &mut out);
    out
}

/// `γ(u, w, k)`: the number of maximal chains, by memoised counting over the
/// interval.
pub fn count_chains(iv: &MarkedInterval) -> u64 {
    fn go(v: &Permutation, iv: &MarkedInterval, memo: &mut HashMap<Permutation, u64>) -> u64 {
        if *v == iv.w {
            return 1;
        }
        if let Some(&n) = memo.get(v) {
            return n;
        }
        let n = covers_k(v, iv.k, &iv.w)
            .iter()
            .map(|c| go(&c.perm, iv, memo))
            .sum();
        memo.insert(v.clone(), n);
        n
    }
    go(&iv.u, iv, &mut HashMap::new())
}

/// Fails with a resource error when the interval has more than
/// `max_chains` maximal chains.
pub fn ensure_chain_budget(iv: &MarkedInterval, max_chains: u64) -> Result<u64> {
    let n = count_chains(iv);
    if n > max_chains {
        return Err(Error::Resource(format!(
            "interval has {n} maximal chains, more than the limit of {max_chains}"
        )));
    }
    Ok(n)
}

/// Records the step `u_i = (α_i β_i) u_{i−1}` as the generator
/// `(α_i, β_i) = (u_{i−1}(a_i), u_{i−1}(b_i))`.
pub fn chain_to_word(c: &Chain) -> Word {
    let gens = c
        .steps()
        .iter()
        .zip(c.positions())
        .map(|(v, (a, b))| Generator::new_unchecked(v.apply(a), v.apply(b)))
        .collect();
    Word::new(gens)
}

/// Replays a word from `u`, checking that every step is a `≤_k` cover.
pub fn word_to_chain(x: &Word, u: &Permutation, k: usize) -> Result<Chain> {
    let mut steps = vec![u.clone()];
    let mut cur = u.clone();
    for (i, g) in x.gens().iter().enumerate() {
        let inv = cur.inverse();
        let (a, b) = (inv.apply(g.alpha()), inv.apply(g.beta()));
        let fail = |reason: String| Error::NotACover { step: i + 1, reason };
        if !(a <= k && k < b) {
            return Err(fail(format!("positions ({a},{b}) do not straddle k = {k}")));
        }
        let m = cur.support_bound().max(b);
        if !is_bruhat_cover(&cur.padded(m), a, b) {
            return Err(fail(format!("{cur}·({a} {b}) does not add one inversion")));
        }
        cur = cur.swap_positions(a, b);
        steps.push(cur.clone());
    }
    Ok(Chain::from_steps(steps))
}

/// The Hasse diagram of `[u, w]_k`, nodes in breadth-first order from `u`.
pub fn interval_graph(iv: &MarkedInterval) -> HasseGraph {
    let mut graph = HasseGraph::default();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    index.insert(iv.u.clone(), graph.add_node(iv.u.clone()));
    queue.push_back(iv.u.clone());
    let mut seen_edges = HashSet::new();
    while let Some(v) = queue.pop_front() {
        let from = index[&v];
        for cover in covers_k(&v, iv.k, &iv.w) {
            let to = match index.get(&cover.perm) {
                Some(&i) => i,
                None => {
                    let i = graph.add_node(cover.perm.clone());
                    index.insert(cover.perm.clone(), i);
                    queue.push_back(cover.perm.clone());
                    i
                }
            };
            if seen_edges.insert((from, to)) {
                graph.add_edge(from, to, cover.gen);
            }
        }
    }
    graph
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn iv(u: &str, w: &str, k: usize) -> MarkedInterval {
        MarkedInterval::new(p(u), p(w), k).unwrap()
    }

    fn fig1() -> MarkedInterval {
        iv("2,1,4,3,5", "4,5,1,2,3", 2)
    }

    fn display_interval() -> MarkedInterval {
        iv("2,1,6,4,3,5", "4,5,6,1,2,3", 3)
    }

    fn chain(steps: &[&str]) -> Chain {
        Chain::from_steps(steps.iter().map(|s| p(s)).collect())
    }

    /// Reachability through covers, independent of the window conditions.
    fn reachable(u: &Permutation, w: &Permutation, k: usize) -> bool {
        if u == w {
            return true;
        }
        if u.length() >= w.length() {
            return false;
        }
        let m = u.support_bound().max(w.support_bound()).max(k + 1);
        let window = u.padded(m);
        (1..=k).any(|a| {
            (k + 1..=m).any(|b| {
                is_bruhat_cover(&window, a, b) && reachable(&u.swap_positions(a, b), w, k)
            })
        })
    }

    #[test]
    fn leq_k_examples() {
        let u = p("2,1,4,3,5");
        assert!(leq_k(&u, &u, 2));
        assert!(leq_k(&u, &p("4,5,1,2,3"), 2));
        assert!(!leq_k(&u, &p("4,5,1,2,3"), 3));
        // k = 0 only relates equal permutations
        assert!(leq_k(&u, &u, 0));
        assert!(!leq_k(&Permutation::identity(), &p("2,1"), 0));
    }

    #[test]
    fn leq_k_matches_cover_reachability_in_s4() {
        let perms: Vec<_> = Permutation::all(4).collect();
        for k in 0..=4 {
            for u in &perms {
                for w in &perms {
                    assert_eq!(leq_k(u, w, k), reachable(u, w, k), "{u} {w} k={k}");
                }
            }
        }
    }

    #[test]
    fn covers_examples() {
        let w = p("4,5,1,2,3");
        assert!(covers_k(&w, 2, &w).is_empty());
        let found: Vec<_> = covers_k(&p("2,1,4,3,5"), 2, &w)
            .into_iter()
            .map(|c| c.perm)
            .collect();
        assert_eq!(found, vec![p("2,4,1,3,5"), p("3,1,4,2,5"), p("4,1,2,3,5")]);

        let covers = covers_k(&p("2,1,6,4,3,5"), 3, &p("4,5,6,1,2,3"));
        let hit = covers
            .iter()
            .find(|c| c.perm == p("2,4,6,1,3,5"))
            .expect("cover present");
        assert_eq!(hit.gen, Generator::new(1, 4).unwrap());
        assert_eq!(hit.positions, (2, 4));
    }

    #[test]
    fn cm_chain_examples() {
        let u = p("3,1,2");
        assert_eq!(cm_chain(&iv("3,1,2", "3,1,2", 1)).unwrap().steps(), &[u]);
        let c = cm_chain(&display_interval()).unwrap();
        assert_eq!(
            c,
            chain(&["2,1,6,4,3,5", "2,4,6,1,3,5", "2,5,6,1,3,4", "3,5,6,1,2,4", "4,5,6,1,2,3"])
        );
        assert_eq!(c.positions()[0], (2, 4));
        let word = chain_to_word(&cm_chain(&fig1()).unwrap());
        assert_eq!(word, Word::from_pairs(&[(1, 4), (4, 5), (2, 3), (3, 4)]).unwrap());
    }

    #[test]
    fn dcm_chain_examples() {
        let top = iv("3,1,2", "3,1,2", 2);
        assert_eq!(dcm_chain(&top).unwrap().len(), 0);
        let expected = chain(&["2,1,6,4,3,5", "2,4,6,1,3,5", "3,4,6,1,2,5", "3,5,6,1,2,4", "4,5,6,1,2,3"]);
        assert_eq!(dcm_chain(&display_interval()).unwrap(), expected);
        assert_eq!(dcm_chain_by_symmetry(&display_interval()).unwrap(), expected);
        let word = chain_to_word(&dcm_chain(&fig1()).unwrap());
        assert_eq!(word, Word::from_paper_pairs(&[(3, 4), (4, 5), (2, 3), (1, 4)]).unwrap());
    }

    #[test]
    fn inversion_examples() {
        let d = display_interval();
        assert!(chain_inversions(&cm_chain(&d).unwrap(), &d.w).is_empty());
        let middle = chain(&["2,1,6,4,3,5", "3,1,6,4,2,5", "4,1,6,3,2,5", "4,3,6,1,2,5", "4,5,6,1,2,3"]);
        assert_eq!(
            chain_inversions(&middle, &d.w),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
        );
        let single = chain(&["2,1"]);
        assert!(chain_inversions(&single, &p("2,1")).is_empty());
        let one_step = iv("1", "2,1", 1);
        assert!(chain_inversions(&cm_chain(&one_step).unwrap(), &one_step.w).is_empty());
    }

    #[test]
    fn all_chains_examples() {
        let u = p("2,1");
        let c = all_chains(&iv("2,1", "2,1", 1));
        assert_eq!(c, vec![Chain::from_steps(vec![u])]);
        assert_eq!(all_chains(&fig1()).len(), 5);
        assert_eq!(count_chains(&fig1()), 5);
        assert_eq!(all_chains(&iv("1,3,2,5,4,6", "2,4,5,6,1,3", 4)).len(), 14);
        assert_eq!(all_chains(&iv("3,1,2,5,6,4", "4,2,5,6,3,1", 4)).len(), 14);
    }

    #[test]
    fn all_chains_are_sorted_and_distinct() {
        let words: Vec<Word> = all_chains(&display_interval()).iter().map(chain_to_word).collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
    }

    #[test]
    fn word_chain_round_trip() {
        let empty = word_to_chain(&Word::empty(), &p("2,1"), 1).unwrap();
        assert_eq!(chain_to_word(&empty), Word::empty());
        let f = fig1();
        for c in all_chains(&f) {
            let w = chain_to_word(&c);
            assert!(w.gens().iter().all(|g| g.alpha() < g.beta()));
            assert_eq!(word_to_chain(&w, &f.u, f.k).unwrap(), c);
        }
        let bad = Word::from_pairs(&[(1, 2)]).unwrap();
        assert!(matches!(
            word_to_chain(&bad, &p("2,1,4,3,5"), 2),
            Err(Error::NotACover { step: 1, .. })
        ));
    }

    #[test]
    fn chain_json_round_trip() {
        let f = fig1();
        let c = cm_chain(&f).unwrap();
        let json = serde_json::to_string(&c.to_json(f.k)).unwrap();
        assert!(json.starts_with(r#"{"u":[2,1,4,3],"w":[4,5,1,2,3],"k":2,"steps":[{"perm":[2,4,1,3],"gen":[1,4]}"#));
        let back: ChainJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_chain().unwrap(), c);
    }

    #[test]
    fn not_comparable_is_a_domain_error() {
        assert!(matches!(
            MarkedInterval::new(p("2,1,4,3,5"), p("4,5,1,2,3"), 3),
            Err(Error::NotComparable { k: 3, .. })
        ));
    }

    fn intervals(n: usize) -> Vec<MarkedInterval> {
        let perms: Vec<_> = Permutation::all(n).collect();
        let mut out = Vec::new();
        for k in 1..n {
            for u in &perms {
                for w in &perms {
                    if leq_k(u, w, k) {
                        out.push(MarkedInterval { u: u.clone(), w: w.clone(), k });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn canonical_chains_in_s4() {
        for iv in intervals(4) {
            let chains = all_chains(&iv);
            let cm = cm_chain(&iv).unwrap();
            let dcm = dcm_chain(&iv).unwrap();
            assert!(chains.contains(&cm) && chains.contains(&dcm));
            assert_eq!(dcm, dcm_chain_by_symmetry(&iv).unwrap());
            for c in &chains {
                assert_eq!(chain_inversions(c, &iv.w).is_empty(), *c == cm);
            }
            assert_eq!(chains.len() as u64, count_chains(&iv));
        }
    }

    #[test]
    fn vertical_symmetry_in_s5() {
        let perms: Vec<_> = Permutation::all(5).collect();
        for k in 0..=5 {
            for u in &perms {
                let ou = u.omega_conjugate(5).unwrap();
                for w in &perms {
                    let ow = w.omega_conjugate(5).unwrap();
                    assert_eq!(leq_k(u, w, k), leq_k(&ou, &ow, 5 - k));
                }
            }
        }
    }

    #[test]
    fn interval_graph_of_figure_one() {
        let g = interval_graph(&fig1());
        assert_eq!(g.nodes()[0], p("2,1,4,3,5"));
        assert_eq!(g.maximal_chain_count(), 5);
    }
}
