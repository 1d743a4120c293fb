//! Chromatic bounds from initial ideals.
//!
//! If `init_<(I_G)` lies in the ideal generated by a set `E` of edge
//! variables then `chi(G) <= |E| + 3`. The best `E` is a minimum vertex cover
//! of the support hypergraph of the initial ideal.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::text::format_monomial;
use crate::algebra::{Monomial, MonomialOrder};
use crate::coloring::exact_chromatic_number;
use crate::cover::Hypergraph;
use crate::error::{Error, Result};
use crate::gb::{support_hypergraph_of, BinomialIdeal};
use crate::graph::Graph;
use crate::toric::{initial_ideal_via_groebner, toric_ideal};

pub type SupportHypergraph = Hypergraph;

/// Hyperedges are the supports of `init_gens`, over `vars` variables.
pub fn support_hypergraph(vars: usize, init_gens: &[Monomial]) -> SupportHypergraph {
    support_hypergraph_of(vars, init_gens)
}

/// The lexicographically least minimum cover. Empty when there are no
/// hyperedges; `None` when a hyperedge is empty.
pub fn min_vertex_cover(h: &SupportHypergraph) -> Option<Vec<usize>> {
    h.min_vertex_cover()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCertificate {
    pub order: MonomialOrder,
    /// Edge label of each variable slot.
    pub labels: Vec<usize>,
    pub init_gens: Vec<Monomial>,
    /// Variable slots of the cover.
    pub cover: Vec<usize>,
    pub bound: usize,
    pub exact_chi: usize,
    pub delta_plus_one: usize,
    pub cover_is_minimum: bool,
    /// For each init generator (by index), the cover slot dividing it.
    pub divisibility_witness: Vec<(usize, usize)>,
}

impl ChromaticCertificate {
    pub fn order_spec(&self) -> String {
        self.order.to_spec(&self.labels)
    }

    pub fn cover_labels(&self) -> Vec<usize> {
        self.cover.iter().map(|&s| self.labels[s]).collect()
    }

    /// Containment, minimality of the cover, the witness, and the bound.
    pub fn verify(&self) -> bool {
        let h = support_hypergraph(self.labels.len(), &self.init_gens);
        let witnessed = self.divisibility_witness.len() == self.init_gens.len()
            && self.divisibility_witness.iter().enumerate().all(|(i, &(g, v))| {
                g == i && self.cover.contains(&v) && self.init_gens[g].exponent(v) > 0
            });
        witnessed
            && h.is_minimal_cover(&self.cover)
            && self.bound == self.cover.len() + 3
            && self.exact_chi <= self.bound
    }

    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.init_gens.iter().map(|m| format_monomial(m, &self.labels)).collect();
        let cover: Vec<String> = self.cover_labels().iter().map(|l| format!("e{l}")).collect();
        let witness: Vec<String> = self
            .divisibility_witness
            .iter()
            .map(|&(g, v)| format!("{} -> e{}", gens[g], self.labels[v]))
            .collect();
        let mut out = format!("order: {}\n", self.order_spec());
        out.push_str(&format!("init_generators: <{}>\n", gens.join(", ")));
        out.push_str(&format!("cover: {{{}}}\n", cover.join(", ")));
        out.push_str(&format!("bound: {}\n", self.bound));
        out.push_str(&format!("exact_chromatic_number: {}\n", self.exact_chi));
        out.push_str(&format!("delta_plus_one: {}\n", self.delta_plus_one));
        out.push_str(&format!("cover_is_minimum: {}\n", self.cover_is_minimum));
        out.push_str(&format!("divisibility_witness: [{}]\n", witness.join(", ")));
        out
    }
}

/// Certificate for `g` under `order`.
pub fn chromatic_certificate(g: &Graph, order: &MonomialOrder) -> Result<ChromaticCertificate> {
    certificate_from(g, &toric_ideal(g)?, order)
}

/// As [`chromatic_certificate`], reusing a computed `I_G`.
pub fn certificate_from(g: &Graph, ideal: &BinomialIdeal, order: &MonomialOrder) -> Result<ChromaticCertificate> {
    let q = g.edge_count();
    if order.vars() != q {
        return Err(Error::LengthMismatch { expected: q, found: order.vars() });
    }
    let init_gens = initial_ideal_via_groebner(ideal, order)?;
    let h = support_hypergraph(q, &init_gens);
    let cover = min_vertex_cover(&h).ok_or_else(|| Error::Structural("initial ideal is the unit ideal".into()))?;
    let cover_is_minimum = h.covering_number() == Some(cover.len());
    let divisibility_witness = init_gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let v = cover.iter().copied().find(|&v| m.exponent(v) > 0).expect("cover meets every generator");
            (i, v)
        })
        .collect();
    let bound = cover.len() + 3;
    let exact_chi = exact_chromatic_number(g).colors_used();
    let cert = ChromaticCertificate {
        order: order.clone(),
        labels: g.labels(),
        init_gens,
        cover,
        bound,
        exact_chi,
        delta_plus_one: g.max_degree() + 1,
        cover_is_minimum,
        divisibility_witness,
    };
    if exact_chi > bound {
        return Err(Error::BoundViolation { chi: exact_chi, bound });
    }
    if !cert.verify() {
        return Err(Error::Structural("certificate failed its own checks".into()));
    }
    Ok(cert)
}

/// 4 when `I_G` is principal, 3 when it is zero.
pub fn principal_shortcut(g: &Graph) -> Result<Option<usize>> {
    let ideal = toric_ideal(g)?;
    Ok(match ideal.generators().len() {
        0 => Some(3),
        1 => Some(4),
        _ => None,
    })
}

/// Edge slots sorted by decreasing endpoint degree sum, ties by slot.
fn degree_sorted(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    let mut slots: Vec<usize> = (0..g.edge_count()).collect();
    slots.sort_by_key(|&i| {
        let e = g.edges()[i];
        (std::cmp::Reverse(deg[e.u] + deg[e.v]), i)
    });
    slots
}

/// The first `budget` distinct lex orders of the candidate stream: identity,
/// degree-sorted, then seeded random permutations.
pub fn candidate_orders(g: &Graph, budget: usize, seed: u64) -> Vec<MonomialOrder> {
    let q = g.edge_count();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let push = |p: Vec<usize>, perms: &mut Vec<Vec<usize>>| {
        if perms.len() < budget && !perms.contains(&p) {
            perms.push(p);
        }
    };
    push((0..q).collect(), &mut perms);
    push(degree_sorted(g), &mut perms);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let distinct = (1..=q).map(|k| k as u128).product::<u128>();
    let mut attempts = 0;
    while perms.len() < budget && (perms.len() as u128) < distinct && attempts < 100 * budget {
        let mut p: Vec<usize> = (0..q).collect();
        p.shuffle(&mut rng);
        push(p, &mut perms);
        attempts += 1;
    }
    perms.into_iter().map(MonomialOrder::Lex).collect()
}

/// The certificate with the smallest bound over the candidate orders; ties
/// go to the smaller order spec.
pub fn order_search(g: &Graph, budget: usize, seed: u64) -> Result<ChromaticCertificate> {
    if budget == 0 {
        return Err(Error::Capability("order search needs a budget of at least 1".into()));
    }
    let ideal = toric_ideal(g)?;
    let certs: Vec<ChromaticCertificate> = candidate_orders(g, budget, seed)
        .par_iter()
        .map(|o| certificate_from(g, &ideal, o))
        .collect::<Result<_>>()?;
    Ok(certs
        .into_iter()
        .min_by(|a, b| (a.bound, a.order_spec()).cmp(&(b.bound, b.order_spec())))
        .expect("at least one candidate"))
}

/// For each `e` in the cover, `G \ e` has a certificate under the induced
/// order whose cover is smaller by at least one.
pub fn cover_monotonicity_check(g: &Graph, cert: &ChromaticCertificate) -> Result<bool> {
    for &slot in &cert.cover {
        let smaller = g.delete_edge(cert.labels[slot])?;
        let sub = chromatic_certificate(&smaller, &cert.order.restrict(slot))?;
        if sub.cover.len() + 1 > cert.cover.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
