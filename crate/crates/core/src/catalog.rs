//! Small named graphs, labelled the way the worked examples label them.

use crate::graph::Graph;

fn build(p: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(p, pairs).expect("catalog graphs are simple")
}

/// Two 4-cycles sharing the edge `e7 = {2,5}`.
pub fn glued_four_cycles() -> Graph {
    build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)])
}

/// Two triangles joined by the path `e4 e5`.
pub fn extended_bow_tie() -> Graph {
    build(
        7,
        &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)],
    )
}

/// Two triangles sharing vertex 3.
pub fn bow_tie() -> Graph {
    build(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
}

/// `K_n`. For `n = 4` the labelling is `e1={1,2} e2={1,3} e3={2,3} e4={2,4}
/// e5={3,4} e6={1,4}`, which makes `e1e5 - e3e6` and `e2e4 - e3e6` squares.
pub fn complete(n: usize) -> Graph {
    if n == 4 {
        return build(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 4)]);
    }
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push((u, v));
        }
    }
    build(n, &pairs)
}

/// `C_n` with `e_i = {i, i+1}` and `e_n = {n, 1}`.
pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    build(n, &pairs)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    build(n, &pairs)
}

/// `C_4` with a pendant edge `e5 = {4,5}`.
pub fn square_with_pendant() -> Graph {
    build(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)])
}

/// Looks a graph up by the names the CLI accepts.
pub fn by_name(name: &str) -> Option<Graph> {
    let g = match name {
        "glued-four-cycles" => glued_four_cycles(),
        "extended-bow-tie" => extended_bow_tie(),
        "bow-tie" => bow_tie(),
        "square-with-pendant" => square_with_pendant(),
        _ => {
            let kind = name.chars().next()?;
            let n: usize = name[kind.len_utf8()..].parse().ok().filter(|&n| n >= 1)?;
            match kind.to_ascii_uppercase() {
                'K' => complete(n),
                'C' if n >= 3 => cycle(n),
                'P' => path(n),
                _ => return None,
            }
        }
    };
    Some(g)
}

pub const NAMES: &[&str] = &[
    "glued-four-cycles",
    "extended-bow-tie",
    "bow-tie",
    "square-with-pendant",
    "K<n>",
    "C<n>",
    "P<n>",
];
