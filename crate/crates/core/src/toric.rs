//! Toric ideals of graphs.
//!
//! `I_G` is the kernel of `e_i -> v_j v_k`; its binomials are the exponent
//! vectors in the integer kernel of the incidence matrix. The ideal is
//! computed by saturating a lattice-basis ideal; the Graver basis (the
//! primitive binomials, a universal Gröbner basis) has two independent
//! backends that must agree.

use std::collections::BTreeSet;

use log::debug;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Binomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::gb::{buchberger, monomial_ideal_height, monomial_ideal_min_gens, saturate_all, BinomialIdeal};
use crate::graph::{Edge, Graph};
use crate::lattice::{incidence_matrix, integer_kernel_basis};

/// Edge-count ceiling for Graver computations.
pub const DEFAULT_GRAVER_EDGE_CAP: usize = 24;

/// The ideal generated by the binomials of a kernel lattice basis. Its
/// saturation by all variables is `I_G`.
pub fn lattice_basis_ideal(g: &Graph) -> BinomialIdeal {
    let basis = integer_kernel_basis(&incidence_matrix(g));
    let gens = basis.iter().filter_map(|u| Binomial::from_vector(u)).collect();
    BinomialIdeal::new(g.edge_count(), gens).expect("kernel vectors have q entries")
}

/// `I_G` as a reduced Gröbner basis under graded reverse lex.
///
/// Eliminates the vertex variables from `<e_i - v_j v_k>` with an order that
/// weights vertices above edges. Every generator is a pure difference, so
/// the binomial engine applies unchanged.
pub fn toric_ideal(g: &Graph) -> Result<BinomialIdeal> {
    let q = g.edge_count();
    if toric_ideal_is_zero(g) {
        return Ok(BinomialIdeal::zero(q));
    }
    let vars = q + g.vertex_count();
    let gens = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let edge = Monomial::var(i, vars);
            let ends = Monomial::from_powers(vars, &[(q + e.u - 1, 1), (q + e.v - 1, 1)]);
            Binomial::new(edge, ends).expect("distinct terms")
        })
        .collect();
    let weights = (0..vars).map(|i| u64::from(i >= q)).collect();
    let order = MonomialOrder::weight(weights, MonomialOrder::grevlex_identity(vars))?;
    let gb = buchberger(&BinomialIdeal::new(vars, gens)?, &order)?;
    let mut kept: Vec<Binomial> = gb
        .generators()
        .iter()
        .filter(|b| (q..vars).all(|v| !b.involves(v)))
        .cloned()
        .collect();
    for _ in q..vars {
        kept = kept.iter().map(|b| b.remove_slot(q)).collect();
    }
    debug!("toric ideal: {} of {} elimination elements survive", kept.len(), gb.generators().len());
    BinomialIdeal::new(q, kept)?.reduced(&MonomialOrder::grevlex_identity(q))
}

/// `I_G` by saturating the lattice-basis ideal; an independent route used
/// to cross-check [`toric_ideal`] on small graphs.
pub fn toric_ideal_by_saturation(g: &Graph) -> Result<BinomialIdeal> {
    if toric_ideal_is_zero(g) {
        return Ok(BinomialIdeal::zero(g.edge_count()));
    }
    saturate_all(&lattice_basis_ideal(g))
}

/// Number of bipartite components, isolated vertices included.
fn bipartite_components(g: &Graph) -> usize {
    g.component_graphs().iter().filter(|c| c.is_bipartite()).count()
}

/// Rank of the incidence matrix: `p` minus the number of bipartite components.
pub fn incidence_rank(g: &Graph) -> usize {
    g.vertex_count() - bipartite_components(g)
}

/// `I_G = <0>` iff the incidence matrix has full column rank.
pub fn toric_ideal_is_zero(g: &Graph) -> bool {
    incidence_rank(g) == g.edge_count()
}

/// Whether `label` occurs in some primitive binomial, decided by rank alone.
///
/// A variable occurs in a Graver element iff it occurs in a circuit iff it
/// occurs in some kernel vector iff deleting its column keeps the rank.
pub fn occurs_in_some_primitive(g: &Graph, label: usize) -> Result<bool> {
    let smaller = g.delete_edge(label)?;
    Ok(incidence_rank(&smaller) == incidence_rank(g))
}

/// `height(I_G) = q - p + #bipartite components`, summed over components.
pub fn height_formula(g: &Graph) -> usize {
    g.edge_count() + bipartite_components(g) - g.vertex_count()
}

/// A primitive binomial together with the multiset of edges its walk uses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WalkBinomial {
    pub binomial: Binomial,
    /// Multiplicity of each edge position in the walk (`plus + minus` exponents).
    pub multiplicities: Vec<u32>,
}

impl WalkBinomial {
    /// Orients `x^{u+} - x^{u-}` so the side that is smaller in identity lex
    /// is `minus`.
    pub fn from_vector(u: &[i64]) -> Option<Self> {
        let b = Binomial::from_vector(u)?.canonical(&MonomialOrder::lex_identity(u.len()));
        let multiplicities = u.iter().map(|&k| k.unsigned_abs() as u32).collect();
        Some(WalkBinomial { binomial: b, multiplicities })
    }

    pub fn exponent_vector(&self) -> Vec<i64> {
        self.binomial.exponent_vector()
    }

    /// `(label, multiplicity)` for every edge the walk uses.
    pub fn walk_edges(&self, g: &Graph) -> Vec<(usize, u32)> {
        g.edges()
            .iter()
            .zip(&self.multiplicities)
            .filter(|&(_, &m)| m > 0)
            .map(|(e, &m)| (e.label, m))
            .collect()
    }

    /// An explicit closed even walk, as a vertex sequence `v0 v1 ... v0`,
    /// whose odd-position edges multiply to `plus` and even-position edges
    /// to `minus`.
    ///
    /// Edge ends are paired at every vertex (plus-end with minus-end), which
    /// splits the edge multiset into alternating closed trails; trails that
    /// meet at a vertex are spliced by exchanging partners there.
    pub fn closed_walk(&self, g: &Graph) -> Result<Vec<usize>> {
        let plus = self.binomial.plus();
        let minus = self
            .binomial
            .minus()
            .ok_or_else(|| Error::Structural("a monomial has no walk".into()))?;
        // Occurrences: (edge position, is_plus).
        let mut occ: Vec<(usize, bool)> = Vec::new();
        for (j, _) in g.edges().iter().enumerate() {
            for _ in 0..plus.exponent(j) {
                occ.push((j, true));
            }
            for _ in 0..minus.exponent(j) {
                occ.push((j, false));
            }
        }
        let edges = g.edges();
        let n = g.vertex_count();
        // End (occurrence, side) where side 0 is at edge.u and side 1 at edge.v.
        let at = |o: usize, side: usize| -> usize {
            let e: &Edge = &edges[occ[o].0];
            if side == 0 {
                e.u
            } else {
                e.v
            }
        };
        let mut plus_ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
        let mut minus_ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
        for o in 0..occ.len() {
            for side in 0..2 {
                let list = if occ[o].1 { &mut plus_ends } else { &mut minus_ends };
                list[at(o, side)].push((o, side));
            }
        }
        for v in 1..=n {
            if plus_ends[v].len() != minus_ends[v].len() {
                return Err(Error::Structural(format!("vertex {v} is unbalanced")));
            }
        }
        loop {
            let trails = trace_trails(&occ, &plus_ends, &minus_ends, &at);
            if trails.len() == 1 {
                let trail = &trails[0];
                let mut walk: Vec<usize> = trail.iter().map(|&(o, side)| at(o, side)).collect();
                walk.push(walk[0]);
                return Ok(walk);
            }
            // Splice two trails through a shared vertex.
            let mut owner: Vec<Option<usize>> = vec![None; n + 1];
            let mut spliced = false;
            'search: for (t, trail) in trails.iter().enumerate() {
                for &(o, side) in trail {
                    let v = at(o, side);
                    match owner[v] {
                        Some(s) if s != t => {
                            // Swap the minus partner of one plus-end owned by
                            // trail s with one owned by trail t at v.
                            let pos_t = plus_ends[v]
                                .iter()
                                .position(|pe| trails[t].contains(pe) || trail_has_end(&trails[t], pe));
                            let pos_s = plus_ends[v]
                                .iter()
                                .position(|pe| trail_has_end(&trails[s], pe));
                            if let (Some(a), Some(b)) = (pos_t, pos_s) {
                                if a != b {
                                    minus_ends[v].swap(a, b);
                                    spliced = true;
                                    break 'search;
                                }
                            }
                        }
                        None => owner[v] = Some(t),
                        _ => {}
                    }
                }
            }
            if !spliced {
                return Err(Error::Structural("walk support is disconnected".into()));
            }
        }
    }
}

fn trail_has_end(trail: &[(usize, usize)], end: &(usize, usize)) -> bool {
    trail.iter().any(|&(o, s)| o == end.0 && (s == end.1 || 1 - s == end.1))
}

/// Alternating closed trails induced by pairing `plus_ends[v][i]` with
/// `minus_ends[v][i]`. Each trail lists the departure end of each traversed
/// occurrence, starting with a plus occurrence.
fn trace_trails(
    occ: &[(usize, bool)],
    plus_ends: &[Vec<(usize, usize)>],
    minus_ends: &[Vec<(usize, usize)>],
    at: &dyn Fn(usize, usize) -> usize,
) -> Vec<Vec<(usize, usize)>> {
    let mut used = vec![false; occ.len()];
    let mut trails = Vec::new();
    let partner = |end: (usize, usize), is_plus: bool| -> (usize, usize) {
        let v = at(end.0, end.1);
        let (from, to) = if is_plus { (&plus_ends[v], &minus_ends[v]) } else { (&minus_ends[v], &plus_ends[v]) };
        let i = from.iter().position(|&x| x == end).expect("end is registered");
        to[i]
    };
    for start in 0..occ.len() {
        if used[start] || !occ[start].1 {
            continue;
        }
        let mut trail = Vec::new();
        let mut cur = (start, 0usize);
        loop {
            used[cur.0] = true;
            trail.push(cur);
            let arrive = (cur.0, 1 - cur.1);
            let next = partner(arrive, occ[cur.0].1);
            if next.0 == start && next.1 == 0 {
                break;
            }
            if used[next.0] {
                break;
            }
            cur = next;
        }
        trails.push(trail);
    }
    trails
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraverBackend {
    /// Kernel vectors with entries in `[-2, 2]`, filtered for primitivity.
    KernelEnumeration,
    /// Reduced Gröbner basis of the Lawrence lifting's toric ideal.
    LawrenceLifting,
}

/// The Graver basis of `I_G` from the kernel-enumeration backend.
pub fn graver_basis(g: &Graph) -> Result<Vec<WalkBinomial>> {
    graver_basis_with(g, GraverBackend::KernelEnumeration, DEFAULT_GRAVER_EDGE_CAP)
}

/// The Graver basis, canonically oriented and sorted.
pub fn graver_basis_with(g: &Graph, backend: GraverBackend, edge_cap: usize) -> Result<Vec<WalkBinomial>> {
    if g.edge_count() > edge_cap {
        return Err(Error::Capability(format!(
            "Graver basis limited to {edge_cap} edges, graph has {}",
            g.edge_count()
        )));
    }
    if toric_ideal_is_zero(g) {
        return Ok(Vec::new());
    }
    let mut out = match backend {
        GraverBackend::KernelEnumeration => graver_by_enumeration(g),
        GraverBackend::LawrenceLifting => graver_by_lawrence(g)?,
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Sign-pattern masks of a kernel vector, for fast conformal comparison.
#[derive(Clone, Copy)]
struct Pattern {
    pos: u64,
    neg: u64,
    two: u64,
}

impl Pattern {
    fn of(u: &[i8]) -> Self {
        let mut p = Pattern { pos: 0, neg: 0, two: 0 };
        for (i, &x) in u.iter().enumerate() {
            if x > 0 {
                p.pos |= 1 << i;
            }
            if x < 0 {
                p.neg |= 1 << i;
            }
            if x.abs() == 2 {
                p.two |= 1 << i;
            }
        }
        p
    }

    /// `self ⊑ other` conformally (entries in [-2,2]).
    fn below(&self, other: &Pattern) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0 && self.two & !other.two == 0
    }

    fn negated(&self) -> Pattern {
        Pattern { pos: self.neg, neg: self.pos, two: self.two }
    }
}

struct BoxSearch<'a> {
    /// Edge positions in processing order.
    order: Vec<usize>,
    edges: &'a [Edge],
    /// For each vertex, how many incident edges are still unassigned.
    remaining: Vec<usize>,
    sums: Vec<i64>,
    current: Vec<i8>,
    found: Vec<Vec<i8>>,
}

impl BoxSearch<'_> {
    fn run(&mut self, step: usize, seen_nonzero: bool) {
        if step == self.order.len() {
            if seen_nonzero {
                self.found.push(self.current.clone());
            }
            return;
        }
        let j = self.order[step];
        let (u, v) = (self.edges[j].u, self.edges[j].v);
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        // First nonzero entry positive: one representative per sign pair.
        let values: &[i8] = if seen_nonzero { &[-2, -1, 0, 1, 2] } else { &[0, 1, 2] };
        for &x in values {
            let (su, sv) = (self.sums[u] + i64::from(x), self.sums[v] + i64::from(x));
            if su.unsigned_abs() > 2 * self.remaining[u] as u64
                || sv.unsigned_abs() > 2 * self.remaining[v] as u64
            {
                continue;
            }
            self.sums[u] = su;
            self.sums[v] = sv;
            self.current[j] = x;
            self.run(step + 1, seen_nonzero || x != 0);
            self.sums[u] -= i64::from(x);
            self.sums[v] -= i64::from(x);
        }
        self.current[j] = 0;
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }
}

/// Edges ordered so each vertex's incident edges finish early: vertices are
/// visited greedily by most already-visited neighbours.
fn closing_edge_order(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut visited = vec![false; n + 1];
    let mut order_edges = Vec::new();
    let mut placed = vec![false; g.edge_count()];
    for _ in 0..n {
        let next = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| {
                let links = adj[v].iter().filter(|&&(w, _)| visited[w]).count();
                (links, adj[v].len(), std::cmp::Reverse(v))
            })
            .expect("unvisited vertex remains");
        visited[next] = true;
        for &(w, j) in &adj[next] {
            if visited[w] && !placed[j] {
                placed[j] = true;
                order_edges.push(j);
            }
        }
    }
    order_edges
}

fn graver_by_enumeration(g: &Graph) -> Vec<WalkBinomial> {
    let q = g.edge_count();
    let order = closing_edge_order(g);
    let remaining = g.degrees();
    // Split the search on the first two edges for parallelism; results are
    // merged and sorted, so the schedule does not affect the output.
    let mut search = BoxSearch {
        order,
        edges: g.edges(),
        remaining,
        sums: vec![0; g.vertex_count() + 1],
        current: vec![0; q],
        found: Vec::new(),
    };
    search.run(0, false);
    let mut candidates = search.found;
    debug!("kernel box holds {} sign classes", candidates.len());
    candidates.sort_by_key(|u| (u.iter().map(|x| i64::from(x.abs())).sum::<i64>(), u.clone()));
    let patterns: Vec<Pattern> = candidates.iter().map(|u| Pattern::of(u)).collect();
    let mut kept: Vec<usize> = Vec::new();
    for (i, p) in patterns.iter().enumerate() {
        let dominated = kept.iter().any(|&k| {
            let pk = &patterns[k];
            pk.below(p) || pk.negated().below(p)
        });
        if !dominated {
            kept.push(i);
        }
    }
    kept.into_par_iter()
        .map(|i| {
            let u: Vec<i64> = candidates[i].iter().map(|&x| i64::from(x)).collect();
            WalkBinomial::from_vector(&u).expect("nonzero")
        })
        .collect()
}

fn graver_by_lawrence(g: &Graph) -> Result<Vec<WalkBinomial>> {
    let q = g.edge_count();
    let basis = integer_kernel_basis(&incidence_matrix(g));
    // Kernel of [[A, 0], [I, I]] is {(u, -u)}.
    let gens = basis
        .iter()
        .filter_map(|u| {
            let lifted: Vec<i64> = u.iter().copied().chain(u.iter().map(|x| -x)).collect();
            Binomial::from_vector(&lifted)
        })
        .collect();
    let lawrence = saturate_all(&BinomialIdeal::new(2 * q, gens)?)?;
    lawrence
        .generators()
        .iter()
        .map(|b| {
            let full = b.exponent_vector();
            WalkBinomial::from_vector(&full[..q])
                .ok_or_else(|| Error::Structural("Lawrence element with zero projection".into()))
        })
        .collect()
}

/// No other pool element `u' - v'` has `u' | u, v' | v` (in either orientation).
pub fn primitive_check(b: &Binomial, all: &[Binomial]) -> bool {
    let Some(minus) = b.minus() else {
        return false;
    };
    let dominated_by = |c: &Binomial| -> bool {
        let Some(cm) = c.minus() else {
            return false;
        };
        (c.plus().divides(b.plus()) && cm.divides(minus))
            || (cm.divides(b.plus()) && c.plus().divides(minus))
    };
    !all.iter()
        .filter(|c| *c != b && *c != &b.clone().flipped())
        .any(dominated_by)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimitiveClass {
    EvenCycle,
    TwoEdgeDisjointOddCycles,
}

/// Classifies the support subgraph of a primitive walk.
pub fn classify_primitive_subgraph(w: &WalkBinomial, g: &Graph) -> Result<PrimitiveClass> {
    let support: Vec<Edge> = g
        .edges()
        .iter()
        .zip(&w.multiplicities)
        .filter(|&(_, &m)| m > 0)
        .map(|(e, _)| *e)
        .collect();
    let sub = Graph::from_edges(g.vertex_count(), support.clone())?;
    let degrees = sub.degrees();
    let touched = degrees.iter().filter(|&&d| d > 0).count();
    let simple = w.multiplicities.iter().all(|&m| m <= 1);
    if simple
        && support.len() % 2 == 0
        && degrees.iter().all(|&d| d == 0 || d == 2)
        && sub.components().iter().filter(|c| c.len() > 1).count() == 1
        && touched == support.len()
    {
        return Ok(PrimitiveClass::EvenCycle);
    }
    let odd: Vec<BTreeSet<usize>> = sub
        .simple_cycles()?
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| c.into_iter().collect())
        .collect();
    for (i, a) in odd.iter().enumerate() {
        if odd[i + 1..].iter().any(|b| a.is_disjoint(b)) {
            return Ok(PrimitiveClass::TwoEdgeDisjointOddCycles);
        }
    }
    Err(Error::Structural(format!(
        "primitive walk {:?} is neither an even cycle nor contains two edge-disjoint odd cycles",
        w.binomial
    )))
}

/// Minimal generators of `init_<(I_G)`, read off the Graver basis.
pub fn initial_ideal(g: &Graph, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    let graver = graver_basis(g)?;
    Ok(initial_ideal_from(&graver, order))
}

/// Minimal generators of the leading terms of `walks` under `order`.
pub fn initial_ideal_from(walks: &[WalkBinomial], order: &MonomialOrder) -> Vec<Monomial> {
    let leads: Vec<Monomial> = walks.iter().map(|w| w.binomial.leading_term(order).clone()).collect();
    monomial_ideal_min_gens(&leads)
}

/// Minimal generators of `init_<(I_G)` from a reduced Gröbner basis. Agrees
/// with [`initial_ideal`] and scales to larger graphs.
pub fn initial_ideal_via_groebner(ideal: &BinomialIdeal, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    let gb = ideal.reduced(order)?;
    Ok(monomial_ideal_min_gens(&gb.leading_terms().expect("reduced basis has an order")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightReport {
    pub formula: usize,
    pub degeneration: usize,
}

/// The height of `I_G` two ways: the closed formula, and the height of the
/// initial ideal under graded reverse lex. Disagreement is an error.
pub fn height_toric(g: &Graph) -> Result<HeightReport> {
    let ideal = toric_ideal(g)?;
    height_toric_from(g, &ideal)
}

pub fn height_toric_from(g: &Graph, ideal: &BinomialIdeal) -> Result<HeightReport> {
    let formula = height_formula(g);
    let order = MonomialOrder::grevlex_identity(g.edge_count());
    let init = initial_ideal_via_groebner(ideal, &order)?;
    let degeneration = monomial_ideal_height(&init)
        .ok_or_else(|| Error::Structural("toric ideal contains a unit".into()))?;
    if formula != degeneration {
        return Err(Error::HeightMismatch { formula, degeneration });
    }
    Ok(HeightReport { formula, degeneration })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroIdealStructure {
    Tree,
    UnicyclicOdd,
    NonzeroIdeal,
}

/// Structure of a connected graph with `I_G = <0>`.
pub fn zero_ideal_structure(g: &Graph) -> ZeroIdealStructure {
    if !toric_ideal_is_zero(g) {
        ZeroIdealStructure::NonzeroIdeal
    } else if g.edge_count() + 1 == g.vertex_count() {
        ZeroIdealStructure::Tree
    } else {
        ZeroIdealStructure::UnicyclicOdd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_binomial;
    use crate::catalog;
    use crate::gb::{ideal_equal, is_groebner};

    fn b(g: &Graph, s: &str) -> Binomial {
        parse_binomial(s, &g.labels()).unwrap()
    }

    fn ideal(g: &Graph, gens: &[&str]) -> BinomialIdeal {
        BinomialIdeal::new(g.edge_count(), gens.iter().map(|s| b(g, s)).collect()).unwrap()
    }

    #[test]
    fn toric_ideals_of_catalog_graphs() {
        let g = catalog::glued_four_cycles();
        let i = toric_ideal(&g).unwrap();
        assert!(ideal_equal(&i, &ideal(&g, &["e1*e5 - e6*e7", "e2*e4 - e3*e7"])).unwrap());
        assert!(toric_ideal(&catalog::complete(3)).unwrap().is_zero());
        let ebt = catalog::extended_bow_tie();
        let i = toric_ideal(&ebt).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert!(ideal_equal(&i, &ideal(&ebt, &["e1*e4^2*e6*e7 - e2*e3*e5^2*e8"])).unwrap());
    }

    #[test]
    fn elimination_matches_saturation() {
        for g in crate::enumerate::connected_graphs_up_to(5) {
            let a = toric_ideal(&g).unwrap();
            let b = toric_ideal_by_saturation(&g).unwrap();
            assert_eq!(a.generators(), b.generators(), "{g}");
        }
        let gens: Vec<Vec<Binomial>> = [catalog::bow_tie(), catalog::extended_bow_tie(), catalog::cycle(8)]
            .iter()
            .map(|g| toric_ideal(g).unwrap().generators().to_vec())
            .collect();
        let sat: Vec<Vec<Binomial>> = [catalog::bow_tie(), catalog::extended_bow_tie(), catalog::cycle(8)]
            .iter()
            .map(|g| toric_ideal_by_saturation(g).unwrap().generators().to_vec())
            .collect();
        assert_eq!(gens, sat);
    }

    #[test]
    fn graver_of_small_graphs() {
        let c4 = catalog::cycle(4);
        let gr = graver_basis(&c4).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(gr[0].binomial, b(&c4, "e1*e3 - e2*e4"));

        let k4 = catalog::complete(4);
        let gr: BTreeSet<Binomial> = graver_basis(&k4).unwrap().into_iter().map(|w| w.binomial).collect();
        let expected: BTreeSet<Binomial> = ["e1*e5 - e3*e6", "e2*e4 - e3*e6", "e1*e5 - e2*e4"]
            .iter()
            .map(|s| b(&k4, s).canonical(&MonomialOrder::lex_identity(6)))
            .collect();
        assert_eq!(gr, expected);

        let bow = catalog::bow_tie();
        let gr = graver_basis(&bow).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(gr[0].binomial, b(&bow, "e1*e4*e5 - e2*e3*e6"));
        assert_eq!(gr[0].binomial.plus().degree(), 3);
    }

    #[test]
    fn backends_agree_on_catalog() {
        for g in [
            catalog::glued_four_cycles(),
            catalog::complete(4),
            catalog::bow_tie(),
            catalog::extended_bow_tie(),
            catalog::cycle(6),
            catalog::complete(5),
        ] {
            let a = graver_basis_with(&g, GraverBackend::KernelEnumeration, 24).unwrap();
            let l = graver_basis_with(&g, GraverBackend::LawrenceLifting, 24).unwrap();
            assert_eq!(a, l, "{g}");
        }
    }

    #[test]
    fn graver_cap() {
        let err = graver_basis_with(&catalog::complete(8), GraverBackend::KernelEnumeration, 24);
        assert!(matches!(err, Err(Error::Capability(_))));
    }

    #[test]
    fn primitivity() {
        let g = catalog::glued_four_cycles();
        let pool: Vec<Binomial> = graver_basis(&g).unwrap().into_iter().map(|w| w.binomial).collect();
        assert_eq!(pool.len(), 3);
        let hexagon = b(&g, "e1*e3*e5 - e2*e4*e6");
        assert!(pool.contains(&hexagon.clone().canonical(&MonomialOrder::lex_identity(7))));
        assert!(primitive_check(&hexagon, &pool));
        let scaled = b(&g, "e1*e2*e5 - e2*e6*e7");
        assert!(!primitive_check(&scaled, &pool));
        let c4 = catalog::cycle(4);
        assert!(primitive_check(&b(&c4, "e1*e3 - e2*e4"), &[b(&c4, "e1*e3 - e2*e4")]));
    }

    #[test]
    fn classification() {
        let c4 = catalog::cycle(4);
        let w = &graver_basis(&c4).unwrap()[0];
        assert_eq!(classify_primitive_subgraph(w, &c4).unwrap(), PrimitiveClass::EvenCycle);
        for g in [catalog::bow_tie(), catalog::extended_bow_tie()] {
            let w = &graver_basis(&g).unwrap()[0];
            assert_eq!(
                classify_primitive_subgraph(w, &g).unwrap(),
                PrimitiveClass::TwoEdgeDisjointOddCycles
            );
        }
        let ebt = catalog::extended_bow_tie();
        let w = &graver_basis(&ebt).unwrap()[0];
        assert_eq!(w.walk_edges(&ebt), vec![(1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 1), (7, 1), (8, 1)]);
    }

    #[test]
    fn closed_walks_rebuild_their_binomials() {
        for g in [catalog::extended_bow_tie(), catalog::glued_four_cycles(), catalog::complete(5)] {
            for w in graver_basis(&g).unwrap() {
                let walk = w.closed_walk(&g).unwrap();
                assert_eq!(walk.first(), walk.last());
                let mut plus = vec![0u32; g.edge_count()];
                let mut minus = vec![0u32; g.edge_count()];
                for (k, pair) in walk.windows(2).enumerate() {
                    let j = g
                        .edges()
                        .iter()
                        .position(|e| (e.u, e.v) == (pair[0], pair[1]) || (e.v, e.u) == (pair[0], pair[1]))
                        .expect("consecutive vertices are adjacent");
                    if k % 2 == 0 {
                        plus[j] += 1;
                    } else {
                        minus[j] += 1;
                    }
                }
                assert_eq!(plus, w.binomial.plus().exponents(), "{walk:?}");
                assert_eq!(minus, w.binomial.minus().unwrap().exponents(), "{walk:?}");
            }
        }
    }

    #[test]
    fn initial_ideals() {
        let g = catalog::glued_four_cycles();
        let order = MonomialOrder::parse_spec("lex:e6,e3", &g.labels(), true).unwrap();
        let init = initial_ideal(&g, &order).unwrap();
        let expect = |g: &Graph, ms: &[&str]| -> Vec<Monomial> {
            ms.iter().map(|s| crate::algebra::text::parse_monomial(s, &g.labels()).unwrap()).collect()
        };
        assert_eq!(init, expect(&g, &["e6*e7", "e3*e7", "e2*e4*e6"]));
        let via_gb = initial_ideal_via_groebner(&toric_ideal(&g).unwrap(), &order).unwrap();
        assert_eq!(via_gb, init);
        let k4 = catalog::complete(4);
        let init = initial_ideal(&k4, &MonomialOrder::lex_identity(6)).unwrap();
        assert_eq!(init, expect(&k4, &["e1*e5", "e2*e4"]));
        assert!(initial_ideal(&catalog::complete(3), &MonomialOrder::grevlex_identity(3)).unwrap().is_empty());
    }

    #[test]
    fn heights() {
        let cases = [(catalog::glued_four_cycles(), 2), (catalog::complete(4), 2), (catalog::complete(3), 0)];
        for (g, h) in cases {
            assert_eq!(height_toric(&g).unwrap(), HeightReport { formula: h, degeneration: h });
        }
        // Additivity over components.
        let g = catalog::glued_four_cycles().disjoint_union(&catalog::complete(4));
        assert_eq!(height_toric(&g).unwrap().formula, 4);
    }

    #[test]
    fn zero_ideal_structures() {
        assert_eq!(zero_ideal_structure(&catalog::path(4)), ZeroIdealStructure::Tree);
        assert_eq!(zero_ideal_structure(&catalog::complete(3)), ZeroIdealStructure::UnicyclicOdd);
        assert_eq!(zero_ideal_structure(&catalog::cycle(4)), ZeroIdealStructure::NonzeroIdeal);
    }

    #[test]
    fn universal_groebner_on_glued_squares() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = catalog::glued_four_cycles();
        let pool: Vec<Binomial> = graver_basis(&g).unwrap().into_iter().map(|w| w.binomial).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            assert!(is_groebner(&pool, &MonomialOrder::Lex(perm)));
        }
    }

    #[test]
    fn rank_criterion_matches_matrix_rank() {
        for g in crate::enumerate::connected_graphs_up_to(6) {
            let m = incidence_matrix(&g);
            assert_eq!(incidence_rank(&g), m.rank());
            for (j, e) in g.edges().iter().enumerate() {
                assert_eq!(
                    occurs_in_some_primitive(&g, e.label).unwrap(),
                    m.without_column(j).rank() == m.rank()
                );
            }
        }
    }
}
