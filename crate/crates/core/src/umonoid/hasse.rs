//! Hasse diagrams of intervals, DOT export and the Möbius function.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::standard_interval;
use super::word::Generator;
use crate::korder::interval_graph;
use crate::perm::Permutation;

/// A finite ranked poset given by its cover relations. Node 0 is the bottom
/// element and nodes are stored in nondecreasing rank.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HasseGraph {
    nodes: Vec<Permutation>,
    edges: Vec<(usize, usize, Generator)>,
}

impl HasseGraph {
    pub fn add_node(&mut self, p: Permutation) -> usize {
        self.nodes.push(p);
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, g: Generator) {
        self.edges.push((from, to, g));
    }

    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, Generator)] {
        &self.edges
    }

    fn below(&self) -> Vec<Vec<usize>> {
        let mut below = vec![Vec::new(); self.nodes.len()];
        for &(from, to, _) in &self.edges {
            below[to].push(from);
        }
        below
    }

    fn top(&self) -> Option<usize> {
        let mut has_up = vec![false; self.nodes.len()];
        for &(from, _, _) in &self.edges {
            has_up[from] = true;
        }
        let tops: Vec<usize> = (0..self.nodes.len()).filter(|&i| !has_up[i]).collect();
        (tops.len() == 1).then(|| tops[0])
    }

    /// Number of maximal chains from node 0 to the unique top.
    pub fn maximal_chain_count(&self) -> u64 {
        let Some(top) = self.top() else {
            return 0;
        };
        let below = self.below();
        let mut paths = vec![0u64; self.nodes.len()];
        paths[0] = 1;
        for v in 1..self.nodes.len() {
            paths[v] = below[v].iter().map(|&p| paths[p]).sum();
        }
        paths[top]
    }

    /// `μ(0̂, 1̂)`.
    pub fn mobius(&self) -> i64 {
        let Some(top) = self.top() else {
            return 0;
        };
        let below = self.below();
        let mut down: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.nodes.len()];
        let mut mu = vec![0i64; self.nodes.len()];
        mu[0] = 1;
        for v in 1..self.nodes.len() {
            let mut set = BTreeSet::new();
            for &p in &below[v] {
                set.insert(p);
                set.extend(down[p].iter().copied());
            }
            mu[v] = -set.iter().map(|&y| mu[y]).sum::<i64>();
            down[v] = set;
        }
        mu[top]
    }

    /// Sorted `(in-degree, out-degree)` pairs; an isomorphism invariant.
    pub fn degree_signature(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); self.nodes.len()];
        for &(from, to, _) in &self.edges {
            deg[from].1 += 1;
            deg[to].0 += 1;
        }
        deg.sort_unstable();
        deg
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", p.compact());
        }
        for &(from, to, g) in &self.edges {
            let _ = writeln!(s, "  n{from} -> n{to} [label=\"{g}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// `[1, ζ]_⪯`: the standard interval of `ζ` with every node `v` relabelled
/// `v u⁻¹`.
pub fn universal_interval(z: &Permutation) -> HasseGraph {
    let iv = standard_interval(z);
    let u_inv = iv.u.inverse();
    let mut g = interval_graph(&iv);
    for node in &mut g.nodes {
        *node = node.compose(&u_inv);
    }
    g
}

pub fn mobius(z: &Permutation) -> i64 {
    universal_interval(z).mobius()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::umonoid::{count_reduced_words, leq_universal};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(&Permutation::identity()), 1);
        assert_eq!(mobius(&Permutation::transposition(2, 5)), -1);
        assert_eq!(mobius(&p("3,2,1")), universal_interval(&p("3,2,1")).mobius());
    }

    #[test]
    fn nodes_are_the_lower_set() {
        for z in Permutation::all(4) {
            let g = universal_interval(&z);
            assert_eq!(g.nodes()[0], Permutation::identity());
            assert_eq!(g.maximal_chain_count(), count_reduced_words(&z));
            let nodes: BTreeSet<_> = g.nodes().iter().cloned().collect();
            let expected: BTreeSet<_> = Permutation::all(4).filter(|e| leq_universal(e, &z)).collect();
            assert_eq!(nodes, expected, "{z}");
        }
    }

    #[test]
    fn kite_and_hexagon() {
        let z = p("2,4,1,3");
        let gamma = p("2,3,4,1");
        let conj = gamma.compose(&z).compose(&gamma.inverse());
        let kite = universal_interval(&z);
        let hexagon = universal_interval(&conj);
        assert_eq!(hexagon.nodes().len(), 6);
        assert_eq!(hexagon.edges().len(), 6);
        assert_ne!(kite.degree_signature(), hexagon.degree_signature());
        assert_eq!(kite.maximal_chain_count(), hexagon.maximal_chain_count());
    }

    #[test]
    fn dot_output() {
        let dot = universal_interval(&p("2,1")).to_dot("z");
        assert!(dot.contains("n0 [label=\"1\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"u[1,2]\"]"));
    }
}
