//! Isomorph-free generation of small graphs.
//!
//! Graphs on `n + 1` vertices are obtained from the canonical graphs on `n`
//! vertices by attaching a new vertex to every subset of the old ones, and
//! deduplicated by a canonical adjacency code. The code is the minimum over
//! all relabellings compatible with an equitable degree refinement, which is
//! an isomorphism invariant.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Vertex-count ceiling: the adjacency code is packed into a `u64`.
pub const MAX_VERTICES: usize = 11;

fn pair_bit(i: usize, j: usize) -> u64 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1u64 << (j * (j - 1) / 2 + i)
}

fn has(code: u64, i: usize, j: usize) -> bool {
    code & pair_bit(i, j) != 0
}

/// Ordered partition of `0..n` refined until equitable.
fn refined_cells(n: usize, code: u64) -> Vec<Vec<usize>> {
    let mut cell_of = vec![0usize; n];
    let mut cell_count = 1;
    loop {
        let mut keyed: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; cell_count];
                for w in 0..n {
                    if w != v && has(code, v, w) {
                        counts[cell_of[w]] += 1;
                    }
                }
                (cell_of[v], counts, v)
            })
            .collect();
        keyed.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut prev: Option<(usize, &Vec<usize>)> = None;
        for (c, counts, v) in &keyed {
            if prev != Some((*c, counts)) {
                cells.push(Vec::new());
                prev = Some((*c, counts));
            }
            cells.last_mut().unwrap().push(*v);
        }
        if cells.len() == cell_count {
            return cells;
        }
        cell_count = cells.len();
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
    }
}

/// Canonical code of the graph on `0..n` with adjacency `code`.
pub fn canonical_code(n: usize, code: u64) -> u64 {
    let cells = refined_cells(n, code);
    let mut position = vec![0usize; n];
    let mut best = u64::MAX;
    assign(&cells, 0, 0, &mut position, code, n, &mut best);
    best
}

fn assign(
    cells: &[Vec<usize>],
    cell: usize,
    offset: usize,
    position: &mut Vec<usize>,
    code: u64,
    n: usize,
    best: &mut u64,
) {
    if cell == cells.len() {
        let mut out = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if has(code, i, j) {
                    out |= pair_bit(position[i], position[j]);
                }
            }
        }
        *best = (*best).min(out);
        return;
    }
    let members = &cells[cell];
    permute(members, 0, &mut members.clone(), &mut |perm| {
        for (k, &v) in perm.iter().enumerate() {
            position[v] = offset + k;
        }
        assign(cells, cell + 1, offset + members.len(), position, code, n, best);
    });
}

fn permute(orig: &[usize], k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if k == buf.len() {
        f(buf);
        return;
    }
    for i in k..buf.len() {
        buf.swap(k, i);
        permute(orig, k + 1, buf, f);
        buf.swap(k, i);
    }
}

fn to_graph(n: usize, code: u64) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if has(code, i, j) {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    Graph::new(n, &pairs).expect("generated graphs are simple")
}

/// Canonical codes of every graph on exactly `n` vertices, up to isomorphism.
fn codes_on(n: usize) -> BTreeSet<u64> {
    assert!((1..=MAX_VERTICES).contains(&n), "vertex count must lie in 1..={MAX_VERTICES}");
    let mut level = BTreeSet::from([0u64]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            for subset in 0u64..(1 << m) {
                let mut grown = code;
                for i in 0..m {
                    if subset >> i & 1 == 1 {
                        grown |= pair_bit(i, m);
                    }
                }
                next.insert(canonical_code(m + 1, grown));
            }
        }
        level = next;
    }
    level
}

/// All graphs on exactly `n` vertices up to isomorphism, in canonical-code order.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    codes_on(n).into_iter().map(|c| to_graph(n, c)).collect()
}

/// All connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_on(n).into_iter().filter(Graph::is_connected).collect()
}

/// All connected graphs with `1..=n` vertices up to isomorphism.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}
