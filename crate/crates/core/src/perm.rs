//! Finitely supported permutations of the positive integers, partitions and
//! integer compositions.
//!
//! A [`Permutation`] is stored as its one-line window `p(1), …, p(m)` with
//! trailing fixed points trimmed, so two permutations are equal exactly when
//! their windows are equal. Every operation returns a canonical value.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self { window: Vec::new() }
    }

    /// Builds a permutation from a one-line window, checking that it is a
    /// rearrangement of `1..=window.len()`.
    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let m = window.len();
        let mut seen = vec![false; m + 1];
        for &v in &window {
            if v == 0 || v > m || seen[v] {
                return Err(Error::NotAPermutation(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Self::from_window_unchecked(window))
    }

    pub(crate) fn from_window_unchecked(mut window: Vec<usize>) -> Self {
        while let Some(&last) = window.last() {
            if last == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Self { window }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1, "transposition letters are positive");
        Self::identity().swap_values(a, b)
    }

    /// Trimmed one-line window; empty for the identity.
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Smallest `m` with the permutation in `S_m` (0 for the identity).
    pub fn support_bound(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// `p(i)` for a positive integer `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        if i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    /// The window extended with fixed points to length `m` (`m` must be at
    /// least the support bound).
    pub fn padded(&self, m: usize) -> Vec<usize> {
        debug_assert!(m >= self.window.len());
        let mut w = self.window.clone();
        w.extend(self.window.len() + 1..=m);
        w
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let m = self.support_bound().max(other.support_bound());
        let window = (1..=m).map(|i| self.apply(other.apply(i))).collect();
        Self::from_window_unchecked(window)
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Self { window }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Right multiplication by the transposition of positions `a` and `b`,
    /// i.e. `self · (a b)`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let m = self.support_bound().max(a).max(b);
        let mut w = self.padded(m);
        w.swap(a - 1, b - 1);
        Self::from_window_unchecked(w)
    }

    /// Left multiplication by the transposition of values `x` and `y`,
    /// i.e. `(x y) · self`.
    pub fn swap_values(&self, x: usize, y: usize) -> Permutation {
        let m = self.support_bound().max(x).max(y);
        let w = self
            .padded(m)
            .into_iter()
            .map(|v| {
                if v == x {
                    y
                } else if v == y {
                    x
                } else {
                    v
                }
            })
            .collect();
        Self::from_window_unchecked(w)
    }

    /// Splits `1..=m` (with `m` the support bound) into the values moved up,
    /// moved down and fixed.
    pub fn up_dw_fix(&self) -> UpDwFix {
        let inv = self.inverse();
        let mut out = UpDwFix::default();
        for j in 1..=self.support_bound() {
            let pre = inv.apply(j);
            if pre < j {
                out.up.push(j);
            } else if pre > j {
                out.dw.push(j);
            } else {
                out.fix.push(j);
            }
        }
        out
    }

    /// Conjugation `ω₀ · self · ω₀` by the longest element of `S_m`.
    pub fn omega_conjugate(&self, m: usize) -> Result<Permutation> {
        if self.support_bound() > m {
            return Err(Error::SupportExceedsBound {
                support: self.support_bound(),
                m,
            });
        }
        let window = (1..=m).map(|i| m + 1 - self.apply(m + 1 - i)).collect();
        Ok(Self::from_window_unchecked(window))
    }

    /// The shifted copy of `self` that fixes `pos` and acts on the remaining
    /// integers the way `self` acts on all of them.
    pub fn phi_star(&self, pos: usize) -> Permutation {
        assert!(pos >= 1, "insertion point is a positive integer");
        let m = self.support_bound().max(pos) + 1;
        let window = (1..=m)
            .map(|i| {
                if i == pos {
                    pos
                } else {
                    let j = if i < pos { i } else { i - 1 };
                    shift_up(self.apply(j), pos)
                }
            })
            .collect();
        Self::from_window_unchecked(window)
    }

    /// The Grassmannian permutation of `lambda` with its descent at `k`:
    /// `v(i) = λ_{k+1-i} + i` for `i ≤ k`, the other values following in
    /// increasing order.
    pub fn grassmannian(lambda: &Partition, k: usize) -> Result<Permutation> {
        if lambda.len() > k {
            return Err(Error::PartitionTooLong {
                parts: lambda.len(),
                k,
            });
        }
        let head: Vec<usize> = (1..=k).map(|i| lambda.part(k + 1 - i) + i).collect();
        let m = head.last().copied().unwrap_or(0).max(k);
        let mut used = vec![false; m + 1];
        for &v in &head {
            used[v] = true;
        }
        let mut window = head;
        window.extend((1..=m).filter(|&v| !used[v]));
        Ok(Self::from_window_unchecked(window))
    }

    /// All of `S_n` in lexicographic order of windows.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(Permutation::from_window_unchecked)
    }

    /// Window digits without separators, e.g. `254163`.
    pub fn compact(&self) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let sep = if self.window.len() > 9 { "," } else { "" };
        self.window.iter().join(sep)
    }

    /// The code (Lehmer code): `c(i) = #{j > i : p(j) < p(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn shift_up(v: usize, pos: usize) -> usize {
    if v < pos {
        v
    } else {
        v + 1
    }
}

/// Values moved up (`p⁻¹(j) < j`), moved down (`p⁻¹(j) > j`) and fixed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UpDwFix {
    pub up: Vec<usize>,
    pub dw: Vec<usize>,
    pub fix: Vec<usize>,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("1")
        } else {
            write!(f, "{}", self.window.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_list::<usize>(s)?;
        Permutation::from_window(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let window = Vec::<usize>::deserialize(d)?;
        Permutation::from_window(window).map_err(serde::de::Error::custom)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<T>()
                .map_err(|_| Error::Parse(format!("invalid entry {tok:?} in {s:?}")))
        })
        .collect()
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts trailing zeros, which are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i`, reading parts past the end as zero (1-based).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Zero-padded copy as a composition of `r` parts (`r ≥ len`).
    pub fn padded(&self, r: usize) -> Composition {
        debug_assert!(r >= self.len());
        Composition::new((1..=r).map(|i| self.part(i) as i64).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list::<usize>(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of integers; negative entries are allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<i64>,
}

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn has_negative(&self) -> bool {
        self.parts.iter().any(|&p| p < 0)
    }

    /// `(p_r, …, p_1)`.
    pub fn reversed(&self) -> Composition {
        Self::new(self.parts.iter().rev().copied().collect())
    }

    /// All weak compositions of `n` into exactly `r` nonnegative parts.
    pub fn all_weak(n: usize, r: usize) -> Vec<Composition> {
        fn go(rest: usize, slots: usize, prefix: &mut Vec<i64>, out: &mut Vec<Composition>) {
            if slots == 1 {
                prefix.push(rest as i64);
                out.push(Composition::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for p in 0..=rest {
                prefix.push(p as i64);
                go(rest - p, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r == 0 {
            if n == 0 {
                out.push(Composition::default());
            }
            return out;
        }
        go(n, r, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<i64>> for Composition {
    fn from(parts: Vec<i64>) -> Self {
        Self::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_list::<i64>(s)?))
    }
}
