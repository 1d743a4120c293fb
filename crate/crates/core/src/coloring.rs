//! Exact vertex colouring by DSATUR branch-and-bound.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Colour classes `1..=k`, one entry per vertex (entry `i` is vertex `i+1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges().iter().all(|e| self.colors[e.u - 1] != self.colors[e.v - 1])
    }
}

struct Search {
    adj: Vec<Vec<bool>>,
    neighbours: Vec<Vec<usize>>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
}

impl Search {
    fn branch(&mut self, colors: &mut Vec<usize>, used: usize, remaining: usize) {
        if self.best == self.lower {
            return;
        }
        if remaining == 0 {
            if used < self.best {
                self.best = used;
                self.best_colors = colors.clone();
            }
            return;
        }
        let v = self.pick_vertex(colors);
        let mut forbidden = vec![false; used + 2];
        for &w in &self.neighbours[v] {
            if colors[w] != 0 {
                forbidden[colors[w]] = true;
            }
        }
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit {
            if forbidden[c] {
                continue;
            }
            colors[v] = c;
            self.branch(colors, used.max(c), remaining - 1);
            colors[v] = 0;
            if self.best == self.lower {
                return;
            }
        }
    }

    /// Highest saturation, then highest degree, then lowest index.
    fn pick_vertex(&self, colors: &[usize]) -> usize {
        let n = colors.len();
        let mut best = (0usize, 0usize, usize::MAX);
        let mut pick = usize::MAX;
        for v in 0..n {
            if colors[v] != 0 {
                continue;
            }
            let mut seen: Vec<usize> = self.neighbours[v]
                .iter()
                .map(|&w| colors[w])
                .filter(|&c| c != 0)
                .collect();
            seen.sort_unstable();
            seen.dedup();
            let key = (seen.len(), self.neighbours[v].len(), usize::MAX - v);
            if pick == usize::MAX || key > best {
                best = key;
                pick = v;
            }
        }
        pick
    }

    /// Largest clique found greedily from every start vertex.
    fn greedy_clique(&self) -> usize {
        let n = self.adj.len();
        let mut best = usize::from(n > 0);
        for start in 0..n {
            let mut clique = vec![start];
            let mut candidates: Vec<usize> = self.neighbours[start].clone();
            candidates.sort_by_key(|&w| std::cmp::Reverse(self.neighbours[w].len()));
            for w in candidates {
                if clique.iter().all(|&c| self.adj[c][w]) {
                    clique.push(w);
                }
            }
            best = best.max(clique.len());
        }
        best
    }
}

/// Minimum number of colours together with an optimal colouring.
///
/// Exhaustive; intended for graphs of at most a few dozen vertices.
pub fn exact_chromatic_number(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    let mut neighbours = vec![Vec::new(); n];
    for e in g.edges() {
        let (u, v) = (e.u - 1, e.v - 1);
        adj[u][v] = true;
        adj[v][u] = true;
        neighbours[u].push(v);
        neighbours[v].push(u);
    }
    let mut search = Search { adj, neighbours, lower: 0, best: n + 1, best_colors: vec![1; n] };
    search.lower = search.greedy_clique();
    let mut colors = vec![0; n];
    search.branch(&mut colors, 0, n);
    Coloring { colors: search.best_colors }
}

pub fn chromatic_number(g: &Graph) -> usize {
    exact_chromatic_number(g).colors_used()
}
