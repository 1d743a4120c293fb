//! Integer matrices: the vertex-edge incidence matrix, its rank, and a
//! lattice basis of its integer kernel.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

impl IncidenceMatrix {
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(u).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn without_column(&self, j: usize) -> IncidenceMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.remove(j);
                r
            })
            .collect();
        IncidenceMatrix { rows: self.rows, cols: self.cols - 1, entries }
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut rank = 0;
        let mut prev = 1i128;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
                }
                m[r][col] = 0;
            }
            prev = m[rank][col];
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Column `j` has ones at the endpoints of the edge in position `j`.
pub fn incidence_matrix(g: &Graph) -> IncidenceMatrix {
    let (rows, cols) = (g.vertex_count(), g.edge_count());
    let mut entries = vec![vec![0i64; cols]; rows];
    for (j, e) in g.edges().iter().enumerate() {
        entries[e.u - 1][j] = 1;
        entries[e.v - 1][j] = 1;
    }
    IncidenceMatrix { rows, cols, entries }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.signum() * a, a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn norm2(v: &[i64]) -> i64 {
    v.iter().map(|x| x * x).sum()
}

/// A lattice basis of `{u in Z^q : M u = 0}`.
///
/// Unimodular column operations bring `M` to column echelon form `M U = H`;
/// the columns of `U` above the zero columns of `H` span the kernel. The
/// basis is then pairwise size-reduced, which keeps the binomials short.
pub fn integer_kernel_basis(m: &IncidenceMatrix) -> Vec<Vec<i64>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.entries.clone();
    let mut u: Vec<Vec<i64>> = (0..cols)
        .map(|j| (0..cols).map(|i| i64::from(i == j)).collect())
        .collect(); // u[j] is column j of U
    let mut pivot_col = 0;
    for r in 0..rows {
        if pivot_col == cols {
            break;
        }
        for c in pivot_col + 1..cols {
            let (a, b) = (h[r][pivot_col], h[r][c]);
            if b == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a, b);
            let (p, q) = (a / g, b / g);
            // [col_pivot, col_c] <- [x col_pivot + y col_c, -q col_pivot + p col_c]
            for row in h.iter_mut() {
                let (s, t) = (row[pivot_col], row[c]);
                row[pivot_col] = x * s + y * t;
                row[c] = -q * s + p * t;
            }
            let (s, t) = (u[pivot_col].clone(), u[c].clone());
            u[pivot_col] = s.iter().zip(&t).map(|(s, t)| x * s + y * t).collect();
            u[c] = s.iter().zip(&t).map(|(s, t)| -q * s + p * t).collect();
        }
        if h[r][pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    let mut basis: Vec<Vec<i64>> = u.split_off(pivot_col);
    size_reduce(&mut basis);
    for v in basis.iter_mut() {
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    basis
}

/// Replaces `b_i` by `b_i ± b_j` while that shortens it.
fn size_reduce(basis: &mut [Vec<i64>]) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand: Vec<i64> =
                        basis[i].iter().zip(&basis[j]).map(|(a, b)| a + sign * b).collect();
                    if norm2(&cand) < norm2(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn incidence_shapes_and_ranks() {
        let k3 = incidence_matrix(&catalog::complete(3));
        assert_eq!((k3.rows, k3.cols, k3.rank()), (3, 3, 3));
        assert!((0..3).all(|j| k3.column(j).iter().sum::<i64>() == 2));
        assert_eq!(incidence_matrix(&catalog::cycle(4)).rank(), 3);
        let glued = incidence_matrix(&catalog::glued_four_cycles());
        assert_eq!((glued.rows, glued.cols, glued.rank()), (6, 7, 5));
    }

    #[test]
    fn kernel_bases() {
        let c4 = integer_kernel_basis(&incidence_matrix(&catalog::cycle(4)));
        assert_eq!(c4, vec![vec![1, -1, 1, -1]]);
        assert!(integer_kernel_basis(&incidence_matrix(&catalog::complete(3))).is_empty());
        let m = incidence_matrix(&catalog::glued_four_cycles());
        let basis = integer_kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.apply(v).iter().all(|&x| x == 0));
        }
    }

    /// Kernel lattice index check: the basis spans every kernel vector with
    /// small entries, verified by brute force against solving in the basis.
    #[test]
    fn kernel_basis_spans_small_kernel_vectors() {
        for g in crate::enumerate::connected_graphs_up_to(5) {
            let m = incidence_matrix(&g);
            let basis = integer_kernel_basis(&m);
            assert_eq!(basis.len(), m.cols - m.rank(), "{g}");
            if m.cols > 7 {
                continue;
            }
            // Every kernel vector in {-1,0,1}^q must be an integer combination
            // of the basis; check by searching coefficients in [-3, 3].
            let q = m.cols;
            for code in 0..3usize.pow(q as u32) {
                let v: Vec<i64> = (0..q).map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1).collect();
                if m.apply(&v).iter().any(|&x| x != 0) {
                    continue;
                }
                assert!(in_span(&basis, &v), "{v:?} not spanned for {g}");
            }
        }
    }

    fn in_span(basis: &[Vec<i64>], v: &[i64]) -> bool {
        let k = basis.len();
        let range = 7usize;
        (0..range.pow(k as u32)).any(|code| {
            let coeffs: Vec<i64> = (0..k).map(|i| (code / range.pow(i as u32) % range) as i64 - 3).collect();
            (0..v.len()).all(|j| basis.iter().zip(&coeffs).map(|(b, c)| b[j] * c).sum::<i64>() == v[j])
        })
    }
}
