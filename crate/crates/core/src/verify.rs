//! Property suites run by `toricgraph verify`, over one graph or a corpus.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Binomial, MonomialOrder};
use crate::chromatic::{candidate_orders, certificate_from};
use crate::error::Result;
use crate::gb::{ideal_equal, is_groebner, BinomialIdeal};
use crate::graph::{Graph, MAX_CYCLE_ENUMERATION_VERTICES};
use crate::kmy::{
    deletion_identity_check, deletion_sequence, kmy_decompose, kmy_heights, nondegenerate_steps, default_order,
};
use crate::toric::{
    classify_primitive_subgraph, graver_basis_with, height_toric_from, occurs_in_some_primitive, toric_ideal,
    GraverBackend, DEFAULT_GRAVER_EDGE_CAP,
};

pub const PROPERTIES: &[&str] = &[
    "height",
    "deletion-identity",
    "degeneracy",
    "height-chain",
    "bipartite-preservation",
    "odd-even-cycles",
    "chromatic-bound",
    "chromatic-drop",
    "graver-backends",
    "universal-gb",
    "primitive-structure",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Orders per graph for the chromatic bound.
    pub orders: usize,
    /// Random orders for the universal Gröbner basis test.
    pub universal_orders: usize,
    /// Largest edge count for the Lawrence backend comparison.
    pub lawrence_edge_cap: usize,
    /// Largest edge count for Graver-based and per-edge ideal checks.
    pub graver_edge_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, orders: 5, universal_orders: 25, lawrence_edge_cap: 12, graver_edge_cap: 15 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: String,
    pub outcome: Outcome,
}

fn outcome(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(why)) => Outcome::Fail(why),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn skip_if(cond: bool, why: impl Into<String>) -> Option<Outcome> {
    cond.then(|| Outcome::Skipped(why.into()))
}

/// Runs every property on `g`.
pub fn verify_graph(g: &Graph, cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let ideal = toric_ideal(g);
    PROPERTIES
        .iter()
        .map(|&name| {
            let outcome = match &ideal {
                Err(e) => Outcome::Fail(e.to_string()),
                Ok(ideal) => run(name, g, ideal, cfg),
            };
            PropertyResult { property: name.to_string(), outcome }
        })
        .collect()
}

fn run(name: &str, g: &Graph, ideal: &BinomialIdeal, cfg: &VerifyConfig) -> Outcome {
    let q = g.edge_count();
    match name {
        "height" => outcome(check_height(g, ideal)),
        "deletion-identity" => skip_if(q > cfg.graver_edge_cap, "too many edges")
            .unwrap_or_else(|| outcome(each_edge(g, |e| Ok(deletion_identity_check(g, e, None)?)))),
        "degeneracy" => skip_if(q > cfg.graver_edge_cap, "too many edges")
            .unwrap_or_else(|| outcome(check_degeneracy(g, ideal))),
        "height-chain" => skip_if(q > cfg.graver_edge_cap, "too many edges")
            .unwrap_or_else(|| outcome(check_height_chain(g, ideal))),
        "bipartite-preservation" => skip_if(g.is_bipartite(), "bipartite").unwrap_or_else(|| {
            outcome(each_edge(g, |e| {
                Ok(!occurs_in_some_primitive(g, e)? || !g.delete_edge(e)?.is_bipartite())
            }))
        }),
        "odd-even-cycles" => skip_if(g.is_bipartite(), "bipartite")
            .or_else(|| skip_if(g.vertex_count() > MAX_CYCLE_ENUMERATION_VERTICES, "too many vertices"))
            .unwrap_or_else(|| outcome(check_odd_even_cycles(g))),
        "chromatic-bound" => outcome(check_chromatic_bound(g, ideal, cfg)),
        "chromatic-drop" => outcome(each_edge(g, |e| g.chromatic_drop_check(e))),
        "graver-backends" => skip_if(q > cfg.lawrence_edge_cap, "too many edges").unwrap_or_else(|| {
            outcome((|| {
                let a = graver_basis_with(g, GraverBackend::KernelEnumeration, cfg.lawrence_edge_cap)?;
                let b = graver_basis_with(g, GraverBackend::LawrenceLifting, cfg.lawrence_edge_cap)?;
                Ok((a != b).then(|| format!("{} vs {} elements", a.len(), b.len())))
            })())
        }),
        "universal-gb" => skip_if(q > cfg.lawrence_edge_cap, "too many edges")
            .unwrap_or_else(|| outcome(check_universal(g, ideal, cfg))),
        "primitive-structure" => skip_if(q > cfg.graver_edge_cap, "too many edges")
            .unwrap_or_else(|| outcome(check_primitive_structure(g))),
        _ => Outcome::Skipped("unknown property".into()),
    }
}

fn each_edge(g: &Graph, mut f: impl FnMut(usize) -> Result<bool>) -> Result<Option<String>> {
    for e in g.labels() {
        if !f(e)? {
            return Ok(Some(format!("fails at e{e}")));
        }
    }
    Ok(None)
}

fn check_height(g: &Graph, ideal: &BinomialIdeal) -> Result<Option<String>> {
    let report = height_toric_from(g, ideal)?;
    let steps = nondegenerate_steps(&deletion_sequence(g)?);
    Ok((steps != report.formula).then(|| format!("formula {} but {steps} deletion steps", report.formula)))
}

fn check_degeneracy(g: &Graph, ideal: &BinomialIdeal) -> Result<Option<String>> {
    let graver = graver_basis_with(g, GraverBackend::KernelEnumeration, DEFAULT_GRAVER_EDGE_CAP)?;
    for (y, e) in g.edges().iter().enumerate() {
        let by_graver = !graver.iter().any(|w| w.multiplicities[y] > 0);
        let by_rank = !occurs_in_some_primitive(g, e.label)?;
        let dec = kmy_decompose(ideal, y, &default_order(g.edge_count(), y)?)?;
        let avoids = !dec.gb_involves_y();
        let equal = ideal_equal(&dec.c, &dec.n)?;
        if [by_rank, avoids, equal, dec.degenerate].iter().any(|&v| v != by_graver) {
            return Ok(Some(format!("criteria disagree at e{}", e.label)));
        }
        if dec.c_is_unit() {
            return Ok(Some(format!("C is the unit ideal at e{}", e.label)));
        }
    }
    Ok(None)
}

fn check_height_chain(g: &Graph, ideal: &BinomialIdeal) -> Result<Option<String>> {
    for (y, e) in g.edges().iter().enumerate() {
        if !occurs_in_some_primitive(g, e.label)? {
            continue;
        }
        let dec = kmy_decompose(ideal, y, &default_order(g.edge_count(), y)?)?;
        let chain = kmy_heights(&dec)?;
        if !chain.holds() {
            return Ok(Some(format!("e{}: heights {:?}", e.label, chain)));
        }
    }
    Ok(None)
}

fn check_odd_even_cycles(g: &Graph) -> Result<Option<String>> {
    each_edge(g, |e| {
        if !g.delete_edge(e)?.is_bipartite() {
            return Ok(true);
        }
        let profile = g.edge_cycle_profile(e)?;
        Ok(!profile.in_some_even_cycle && profile.in_every_odd_cycle)
    })
}

fn check_chromatic_bound(g: &Graph, ideal: &BinomialIdeal, cfg: &VerifyConfig) -> Result<Option<String>> {
    for order in candidate_orders(g, cfg.orders, cfg.seed) {
        let cert = certificate_from(g, ideal, &order)?;
        if !cert.verify() {
            return Ok(Some(format!("certificate under {} fails", cert.order_spec())));
        }
    }
    Ok(None)
}

/// Random lex orders from the seed, identity first.
pub fn random_lex_orders(q: usize, count: usize, seed: u64) -> Vec<MonomialOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let mut p: Vec<usize> = (0..q).collect();
            if i > 0 {
                p.shuffle(&mut rng);
            }
            MonomialOrder::Lex(p)
        })
        .collect()
}

fn check_universal(g: &Graph, ideal: &BinomialIdeal, cfg: &VerifyConfig) -> Result<Option<String>> {
    let q = g.edge_count();
    let graver: Vec<Binomial> = graver_basis_with(g, GraverBackend::KernelEnumeration, cfg.lawrence_edge_cap)?
        .into_iter()
        .map(|w| w.binomial)
        .collect();
    if !ideal_equal(&BinomialIdeal::new(q, graver.clone())?, ideal)? {
        return Ok(Some("Graver basis does not generate I_G".into()));
    }
    for order in random_lex_orders(q, cfg.universal_orders, cfg.seed) {
        if !is_groebner(&graver, &order) {
            return Ok(Some(format!("not a Gröbner basis under {}", order.to_spec(&g.labels()))));
        }
    }
    Ok(None)
}

fn check_primitive_structure(g: &Graph) -> Result<Option<String>> {
    for w in graver_basis_with(g, GraverBackend::KernelEnumeration, DEFAULT_GRAVER_EDGE_CAP)? {
        classify_primitive_subgraph(&w, g)?;
        let b = &w.binomial;
        let minus = b.minus().expect("primitive binomials have two terms");
        let ok = b.plus().degree() >= 2
            && minus.degree() >= 2
            && w.multiplicities.iter().all(|&m| m <= 2)
            && b.plus().is_coprime(minus);
        if !ok {
            return Ok(Some(format!("{b:?} violates the walk structure")));
        }
    }
    Ok(None)
}

/// Pass/fail/skip counts per property over a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub graphs: usize,
    pub rows: Vec<(String, usize, usize, usize)>,
    pub failures: Vec<(String, String, String)>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn summarize(graphs: &[Graph], results: &[Vec<PropertyResult>]) -> SuiteSummary {
    let mut rows: Vec<(String, usize, usize, usize)> =
        PROPERTIES.iter().map(|p| (p.to_string(), 0, 0, 0)).collect();
    let mut failures = Vec::new();
    for (g, res) in graphs.iter().zip(results) {
        for (row, r) in rows.iter_mut().zip(res) {
            match &r.outcome {
                Outcome::Pass => row.1 += 1,
                Outcome::Fail(why) => {
                    row.2 += 1;
                    failures.push((g.to_string(), r.property.clone(), why.clone()));
                }
                Outcome::Skipped(_) => row.3 += 1,
            }
        }
    }
    SuiteSummary { graphs: graphs.len(), rows, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_graphs_pass() {
        let cfg = VerifyConfig::default();
        for g in [catalog::glued_four_cycles(), catalog::complete(4), catalog::bow_tie(), catalog::square_with_pendant()] {
            for r in verify_graph(&g, &cfg) {
                assert!(!matches!(r.outcome, Outcome::Fail(_)), "{g}: {r:?}");
            }
        }
    }

    #[test]
    fn summary_counts() {
        let graphs = vec![catalog::complete(3), catalog::cycle(4)];
        let results: Vec<_> = graphs.iter().map(|g| verify_graph(g, &VerifyConfig::default())).collect();
        let s = summarize(&graphs, &results);
        assert!(s.all_passed(), "{:?}", s.failures);
        assert!(s.rows.iter().all(|r| r.1 + r.2 + r.3 == 2));
    }
}
