//! Exact vertex covers of small hypergraphs.
//!
//! Every cover must contain a vertex of each hyperedge, so branching on the
//! vertices of one uncovered hyperedge is complete. Choosing the smallest
//! uncovered hyperedge keeps the branching factor low.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// Hyperedges are sorted, deduplicated vertex lists over `0..vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Self {
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        Hypergraph { vertices, edges }
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(Vec::is_empty)
    }

    pub fn is_cover(&self, set: &[usize]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|v| set.contains(v)))
    }

    /// A cover from which no vertex can be dropped.
    pub fn is_minimal_cover(&self, set: &[usize]) -> bool {
        self.is_cover(set)
            && (0..set.len()).all(|i| {
                let smaller: Vec<usize> =
                    set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                !self.is_cover(&smaller)
            })
    }

    fn smallest_uncovered(&self, chosen: &[bool]) -> Option<&Vec<usize>> {
        self.edges
            .iter()
            .filter(|e| !e.iter().any(|&v| chosen[v]))
            .min_by_key(|e| e.len())
    }

    /// Greedy packing of pairwise disjoint uncovered hyperedges; each needs
    /// its own cover vertex.
    fn packing_bound(&self, chosen: &[bool]) -> usize {
        let mut used = vec![false; self.vertices];
        let mut uncovered: Vec<&Vec<usize>> =
            self.edges.iter().filter(|e| !e.iter().any(|&v| chosen[v])).collect();
        uncovered.sort_by_key(|e| e.len());
        let mut count = 0;
        for e in uncovered {
            if e.iter().all(|&v| !used[v]) {
                for &v in e {
                    used[v] = true;
                }
                count += 1;
            }
        }
        count
    }

    fn branch(
        &self,
        chosen: &mut Vec<bool>,
        size: usize,
        budget: usize,
        found: &mut BTreeSet<Vec<usize>>,
        stop_at_first: bool,
    ) {
        if stop_at_first && !found.is_empty() {
            return;
        }
        let Some(edge) = self.smallest_uncovered(chosen) else {
            found.insert((0..self.vertices).filter(|&v| chosen[v]).collect());
            return;
        };
        if size + self.packing_bound(chosen) > budget {
            return;
        }
        for &v in edge.clone().iter() {
            chosen[v] = true;
            self.branch(chosen, size + 1, budget, found, stop_at_first);
            chosen[v] = false;
        }
    }

    /// Cardinality of a minimum vertex cover. `None` if some hyperedge is empty.
    pub fn covering_number(&self) -> Option<usize> {
        if self.has_empty_edge() {
            return None;
        }
        let mut chosen = vec![false; self.vertices];
        let mut budget = self.packing_bound(&chosen);
        loop {
            let mut found = BTreeSet::new();
            self.branch(&mut chosen, 0, budget, &mut found, true);
            if !found.is_empty() {
                return Some(budget);
            }
            budget += 1;
        }
    }

    /// Every minimum-cardinality cover, in lexicographic order.
    pub fn all_minimum_covers(&self) -> Vec<Vec<usize>> {
        let Some(k) = self.covering_number() else {
            return Vec::new();
        };
        let mut found = BTreeSet::new();
        self.branch(&mut vec![false; self.vertices], 0, k, &mut found, false);
        found.into_iter().filter(|c| c.len() == k).collect()
    }

    /// The lexicographically least minimum cover.
    pub fn min_vertex_cover(&self) -> Option<Vec<usize>> {
        self.all_minimum_covers().into_iter().next()
    }

    /// Every inclusion-minimal cover, in lexicographic order.
    pub fn all_minimal_covers(&self) -> Vec<Vec<usize>> {
        if self.has_empty_edge() {
            return Vec::new();
        }
        let mut found = BTreeSet::new();
        self.branch(&mut vec![false; self.vertices], 0, usize::MAX / 2, &mut found, false);
        found.into_iter().filter(|c| self.is_minimal_cover(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_minimum(h: &Hypergraph) -> usize {
        (0u32..1 << h.vertices)
            .filter(|mask| {
                let set: Vec<usize> = (0..h.vertices).filter(|&v| mask >> v & 1 == 1).collect();
                h.is_cover(&set)
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn glued_squares_initial_ideal() {
        // {e6e7, e3e7, e2e4e6} with 0-based variables.
        let h = Hypergraph::new(7, vec![vec![5, 6], vec![2, 6], vec![1, 3, 5]]);
        assert_eq!(h.covering_number(), Some(2));
        let covers = h.all_minimum_covers();
        // Exhaustive over all 2-subsets.
        let mut expected = Vec::new();
        for a in 0..7 {
            for b in a + 1..7 {
                if h.is_cover(&[a, b]) {
                    expected.push(vec![a, b]);
                }
            }
        }
        assert_eq!(covers, expected);
        assert!(covers.contains(&vec![2, 5]));
        assert_eq!(h.min_vertex_cover(), Some(vec![1, 6]));
    }

    #[test]
    fn single_hyperedge_and_k4() {
        let h = Hypergraph::new(8, vec![vec![0, 3, 5, 6]]);
        assert_eq!(h.min_vertex_cover(), Some(vec![0]));
        let h = Hypergraph::new(6, vec![vec![0, 4], vec![1, 3]]);
        assert_eq!(h.min_vertex_cover(), Some(vec![0, 1]));
        let h = Hypergraph::new(3, vec![]);
        assert_eq!(h.min_vertex_cover(), Some(vec![]));
        assert_eq!(Hypergraph::new(2, vec![vec![]]).covering_number(), None);
    }

    #[test]
    fn minimal_versus_minimum() {
        // <xy, xz>: {x} and {y,z} are both minimal.
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(h.all_minimal_covers(), vec![vec![0], vec![1, 2]]);
        assert_eq!(h.all_minimum_covers(), vec![vec![0]]);
    }

    #[test]
    fn agrees_with_brute_force_on_pseudo_random_hypergraphs() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let n = 4 + (next() % 9) as usize;
            let m = 1 + (next() % 8) as usize;
            let edges = (0..m)
                .map(|_| {
                    let k = 1 + (next() % 3) as usize;
                    (0..k).map(|_| (next() % n as u64) as usize).collect()
                })
                .collect();
            let h = Hypergraph::new(n, edges);
            assert_eq!(h.covering_number(), Some(brute_force_minimum(&h)));
            for c in h.all_minimal_covers() {
                assert!(h.is_minimal_cover(&c));
            }
        }
    }
}
