//! Finite simple graphs with stable edge labels.
//!
//! Vertices are numbered `1..=p`. Every edge carries a label `e<k>`; a freshly
//! parsed graph labels its edges `1..=q` in declaration order and deletions
//! keep the surviving labels, so the variable `e<k>` means the same edge in
//! `G` and in `G \ e`. Internally the position of an edge in [`Graph::edges`]
//! is its variable index in the polynomial ring.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};

/// Largest vertex count for which simple-cycle enumeration is offered.
pub const MAX_CYCLE_ENUMERATION_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub label: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// A proper two-colouring of the vertices, one side per colour class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// Membership of one edge in the even and odd simple cycles of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCycleProfile {
    pub in_some_even_cycle: bool,
    /// Vacuously true when the graph has no odd cycle.
    pub in_every_odd_cycle: bool,
}

impl Graph {
    /// Builds a graph from 1-based vertex pairs, labelling edges `1..=q`.
    pub fn new(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| Edge { label: i + 1, u, v })
            .collect();
        Self::from_edges(vertex_count, edges)
    }

    /// Builds a graph from explicitly labelled edges. Labels must be distinct.
    pub fn from_edges(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut labels = HashSet::new();
        for (i, e) in edges.iter().enumerate() {
            let line = i + 2;
            for w in [e.u, e.v] {
                if w == 0 || w > vertex_count {
                    return Err(Error::Parse {
                        line,
                        kind: ParseErrorKind::VertexOutOfRange { vertex: w, vertex_count },
                    });
                }
            }
            if e.u == e.v {
                return Err(Error::Parse { line, kind: ParseErrorKind::SelfLoop(e.u) });
            }
            if !seen.insert(e.key()) {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::DuplicateEdge(e.u, e.v),
                });
            }
            if !labels.insert(e.label) {
                return Err(Error::Syntax(format!("duplicate edge label e{}", e.label)));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Variable index (position) of the edge with this label.
    pub fn position_of(&self, label: usize) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.label == label)
            .ok_or(Error::InvalidEdge(label))
    }

    pub fn edge(&self, label: usize) -> Result<Edge> {
        self.position_of(label).map(|i| self.edges[i])
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|e| e.key() == (u.min(v), u.max(v)))
    }

    /// Removes one edge; vertices and the other labels are untouched.
    pub fn delete_edge(&self, label: usize) -> Result<Graph> {
        let pos = self.position_of(label)?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Graph { vertex_count: self.vertex_count, edges })
    }

    /// Adjacency lists of `(neighbour, edge position)`, indexed by vertex (slot 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count + 1];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists; isolated vertices form their own.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut out = Vec::new();
        for start in 1..=self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &(x, _) in &adj[w] {
                    if !seen[x] {
                        seen[x] = true;
                        comp.push(x);
                        queue.push_back(x);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The components as standalone graphs. Vertices are renumbered `1..` in
    /// increasing order; edge labels are kept.
    pub fn component_graphs(&self) -> Vec<Graph> {
        self.components()
            .into_iter()
            .map(|comp| {
                let mut index = vec![0; self.vertex_count + 1];
                for (i, &w) in comp.iter().enumerate() {
                    index[w] = i + 1;
                }
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| index[e.u] != 0)
                    .map(|e| Edge { label: e.label, u: index[e.u], v: index[e.v] })
                    .collect();
                Graph { vertex_count: comp.len(), edges }
            })
            .collect()
    }

    /// Disjoint union; the second graph's vertices are shifted past the first
    /// and its edge labels continue after the first graph's largest label.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let label_shift = self.edges.iter().map(|e| e.label).max().unwrap_or(0);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            label: e.label + label_shift,
            u: e.u + shift,
            v: e.v + shift,
        }));
        Graph { vertex_count: self.vertex_count + other.vertex_count, edges }
    }

    /// BFS two-colouring. `None` iff some component contains an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut colour = vec![u8::MAX; self.vertex_count + 1];
        for start in 1..=self.vertex_count {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &(x, _) in &adj[w] {
                    if colour[x] == u8::MAX {
                        colour[x] = 1 - colour[w];
                        queue.push_back(x);
                    } else if colour[x] == colour[w] {
                        return None;
                    }
                }
            }
        }
        let (side_a, side_b) = (1..=self.vertex_count).partition(|&w| colour[w] == 0);
        Some(Bipartition { side_a, side_b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Labels of the edges whose removal increases the number of components.
    pub fn bridges(&self) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut timer = 1;
        let mut out = BTreeSet::new();
        for root in 1..=n {
            if disc[root] != 0 {
                continue;
            }
            // Iterative DFS: (vertex, parent edge position, next neighbour slot).
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (w, parent_edge, ref mut next)) = stack.last_mut() {
                if *next < adj[w].len() {
                    let (x, ei) = adj[w][*next];
                    *next += 1;
                    if ei == parent_edge {
                        continue;
                    }
                    if disc[x] == 0 {
                        disc[x] = timer;
                        low[x] = timer;
                        timer += 1;
                        stack.push((x, ei, 0));
                    } else {
                        low[w] = low[w].min(disc[x]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[w]);
                        if low[w] > disc[parent] {
                            out.insert(self.edges[parent_edge].label);
                        }
                    }
                }
            }
        }
        out
    }

    /// Every simple cycle, each as the sorted list of its edge labels.
    ///
    /// Refuses graphs with more than [`MAX_CYCLE_ENUMERATION_VERTICES`] vertices.
    pub fn simple_cycles(&self) -> Result<Vec<Vec<usize>>> {
        if self.vertex_count > MAX_CYCLE_ENUMERATION_VERTICES {
            return Err(Error::Capability(format!(
                "cycle enumeration is limited to {MAX_CYCLE_ENUMERATION_VERTICES} vertices"
            )));
        }
        let adj = self.adjacency();
        let mut cycles = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            // Cycles whose smallest edge position is i: paths e.v -> e.u over
            // edges with larger positions.
            let mut on_path = vec![false; self.vertex_count + 1];
            let mut path = vec![i];
            on_path[e.v] = true;
            self.extend_paths(&adj, i, e.v, e.u, &mut on_path, &mut path, &mut cycles);
        }
        Ok(cycles)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_paths(
        &self,
        adj: &[Vec<(usize, usize)>],
        min_edge: usize,
        at: usize,
        target: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        for &(x, ei) in &adj[at] {
            if ei <= min_edge || on_path[x] {
                continue;
            }
            path.push(ei);
            if x == target {
                let mut labels: Vec<usize> = path.iter().map(|&p| self.edges[p].label).collect();
                labels.sort_unstable();
                cycles.push(labels);
            } else {
                on_path[x] = true;
                self.extend_paths(adj, min_edge, x, target, on_path, path, cycles);
                on_path[x] = false;
            }
            path.pop();
        }
    }

    pub fn edge_cycle_profile(&self, label: usize) -> Result<EdgeCycleProfile> {
        self.position_of(label)?;
        let cycles = self.simple_cycles()?;
        let in_some_even_cycle = cycles
            .iter()
            .any(|c| c.len() % 2 == 0 && c.contains(&label));
        let in_every_odd_cycle = cycles
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .all(|c| c.contains(&label));
        Ok(EdgeCycleProfile { in_some_even_cycle, in_every_odd_cycle })
    }

    /// Whether `0 <= chi(G) - chi(G \ e) <= 1`, both sides computed exactly.
    pub fn chromatic_drop_check(&self, label: usize) -> Result<bool> {
        let smaller = self.delete_edge(label)?;
        let before = crate::coloring::exact_chromatic_number(self).colors_used();
        let after = crate::coloring::exact_chromatic_number(&smaller).colors_used();
        Ok(before >= after && before - after <= 1)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Parses the edge-list format: `#` comments, a vertex count, then one
/// `u v` pair per edge. Errors report 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || Error::Parse { line, kind: ParseErrorKind::Malformed(raw.to_string()) };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let Some(p) = vertex_count else {
            if fields.len() != 1 {
                return Err(malformed());
            }
            let p: usize = fields[0].parse().map_err(|_| malformed())?;
            if p == 0 {
                return Err(malformed());
            }
            vertex_count = Some(p);
            continue;
        };
        if fields.len() != 2 {
            return Err(malformed());
        }
        let u: usize = fields[0].parse().map_err(|_| malformed())?;
        let v: usize = fields[1].parse().map_err(|_| malformed())?;
        for w in [u, v] {
            if w == 0 || w > p {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::VertexOutOfRange { vertex: w, vertex_count: p },
                });
            }
        }
        if u == v {
            return Err(Error::Parse { line, kind: ParseErrorKind::SelfLoop(u) });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, kind: ParseErrorKind::DuplicateEdge(u, v) });
        }
        edges.push(Edge { label: edges.len() + 1, u, v });
    }
    let vertex_count = vertex_count.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingVertexCount,
    })?;
    Ok(Graph { vertex_count, edges })
}

impl fmt::Display for Graph {
    /// Writes the graph back in the edge-list format. Labels are not part of
    /// the format, so a graph with gaps in its labels gains a comment line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.iter().enumerate().any(|(i, e)| e.label != i + 1) {
            let labels: Vec<String> = self.edges.iter().map(|e| format!("e{}", e.label)).collect();
            writeln!(f, "# labels: {}", labels.join(" "))?;
        }
        writeln!(f, "{}", self.vertex_count)?;
        for e in &self.edges {
            writeln!(f, "{} {}", e.u, e.v)?;
        }
        Ok(())
    }
}
