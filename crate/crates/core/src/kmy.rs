//! Knutson-Miller-Yong decompositions with respect to an edge variable.
//!
//! With a y-compatible order every element of the reduced Gröbner basis
//! splits as `y^d q + r` where `y^d q` is its initial y-form. Then
//! `C = <q_i>` and `N = <q_i : d_i = 0>`.

use serde::{Deserialize, Serialize};

use crate::algebra::text::{format_binomial, format_monomial};
use crate::algebra::{initial_y_form, Binomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::gb::{ideal_equal, monomial_ideal_height, monomial_ideal_min_gens, monomial_ideal_radical, BinomialIdeal};
use crate::graph::Graph;
use crate::toric::{graver_basis, occurs_in_some_primitive, toric_ideal, toric_ideal_is_zero};

/// One basis element `y^d q + r`; `r` is absent when `init_y` is the whole element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KmySplit {
    pub element: Binomial,
    pub d: u32,
    pub q: Binomial,
    pub r: Option<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KMYDecomposition {
    pub y: usize,
    pub order: MonomialOrder,
    pub gb: BinomialIdeal,
    pub splits: Vec<KmySplit>,
    pub c: BinomialIdeal,
    pub n: BinomialIdeal,
    pub init_y_ideal: Vec<Binomial>,
    pub degenerate: bool,
}

fn split(element: &Binomial, y: usize) -> KmySplit {
    let init = initial_y_form(element, y);
    let d = init.plus().exponent(y);
    let strip = |m: &Monomial| m.div_unchecked(&Monomial::from_powers(m.vars(), &[(y, d)]));
    let q = match init.minus() {
        Some(minus) => Binomial::new(strip(init.plus()), strip(minus)).expect("terms stay distinct"),
        None => Binomial::monomial(strip(init.plus())),
    };
    let r = if init.is_monomial() && !element.is_monomial() {
        element.terms().find(|t| *t != init.plus()).cloned()
    } else {
        None
    };
    KmySplit { element: element.clone(), d, q, r }
}

fn is_unit(b: &Binomial) -> bool {
    b.is_monomial() && b.plus().is_one()
}

/// `sqrt C = sqrt N` or `C = <1>`. Radicals are taken exactly for monomial
/// ideals; otherwise the ideals themselves are compared, which is exact for
/// prime inputs such as toric ideals.
fn decide_degenerate(c: &BinomialIdeal, n: &BinomialIdeal) -> Result<bool> {
    if c.generators().iter().any(is_unit) {
        return Ok(true);
    }
    let all_monomial = |i: &BinomialIdeal| i.generators().iter().all(Binomial::is_monomial);
    if all_monomial(c) && all_monomial(n) {
        let leads = |i: &BinomialIdeal| i.generators().iter().map(|b| b.plus().clone()).collect::<Vec<_>>();
        return Ok(monomial_ideal_radical(&leads(c)) == monomial_ideal_radical(&leads(n)));
    }
    ideal_equal(c, n)
}

/// The KMY decomposition of `ideal` with respect to the variable in slot `y`.
pub fn kmy_decompose(ideal: &BinomialIdeal, y: usize, order: &MonomialOrder) -> Result<KMYDecomposition> {
    if y >= ideal.vars() {
        return Err(Error::InvalidVariable { index: y, vars: ideal.vars() });
    }
    if !order.is_y_compatible(y) {
        return Err(Error::NotYCompatible(y));
    }
    let gb = ideal.reduced(order)?;
    let splits: Vec<KmySplit> = gb.generators().iter().map(|g| split(g, y)).collect();
    let c_gens: Vec<Binomial> = splits.iter().map(|s| s.q.clone()).collect();
    let n_gens: Vec<Binomial> = splits.iter().filter(|s| s.d == 0).map(|s| s.q.clone()).collect();
    let c = BinomialIdeal::with_groebner_status(gb.vars(), c_gens, order.clone());
    let n = BinomialIdeal::with_groebner_status(gb.vars(), n_gens, order.clone());
    let init_y_ideal = gb.generators().iter().map(|g| initial_y_form(g, y)).collect();
    let degenerate = decide_degenerate(&c, &n)?;
    Ok(KMYDecomposition { y, order: order.clone(), gb, splits, c, n, init_y_ideal, degenerate })
}

impl KMYDecomposition {
    pub fn gb_involves_y(&self) -> bool {
        self.gb.involves(self.y)
    }

    pub fn c_is_unit(&self) -> bool {
        self.c.generators().iter().any(is_unit)
    }

    /// Record listing `y`, the splits, `C`, `N` and the verdict.
    pub fn to_text(&self, labels: &[usize]) -> String {
        let mut out = format!("y = e{}\norder = {}\n", labels[self.y], self.order.to_spec(labels));
        out.push_str("gb:\n");
        for s in &self.splits {
            let r = s.r.as_ref().map_or("0".to_string(), |m| format!("-{}", format_monomial(m, labels)));
            out.push_str(&format!(
                "  {}    d = {}, q = {}, r = {}\n",
                format_binomial(&s.element, labels),
                s.d,
                format_binomial(&s.q, labels),
                r
            ));
        }
        for (name, ideal) in [("C", &self.c), ("N", &self.n)] {
            let gens: Vec<String> = ideal.generators().iter().map(|g| format_binomial(g, labels)).collect();
            if gens.is_empty() {
                out.push_str(&format!("{name} = <0>\n"));
            } else {
                out.push_str(&format!("{name} = <{}>\n", gens.join(", ")));
            }
        }
        out.push_str(&format!("degenerate = {}\n", self.degenerate));
        out
    }
}

/// The y-top refinement of graded reverse lex, the default order for
/// decompositions of toric ideals.
pub fn default_order(vars: usize, y: usize) -> Result<MonomialOrder> {
    MonomialOrder::y_top(y, MonomialOrder::grevlex_identity(vars))
}

/// Decomposition of `I_G` with respect to the edge `label`.
pub fn kmy_decompose_toric(g: &Graph, label: usize, order: Option<&MonomialOrder>) -> Result<KMYDecomposition> {
    let y = g.position_of(label)?;
    let order = match order {
        Some(o) => o.clone(),
        None => default_order(g.edge_count(), y)?,
    };
    kmy_decompose(&toric_ideal(g)?, y, &order)
}

/// Whether `label` lies in no primitive binomial, read off the Graver basis.
pub fn is_degenerate_toric(g: &Graph, label: usize) -> Result<bool> {
    let y = g.position_of(label)?;
    Ok(!graver_basis(g)?.iter().any(|w| w.multiplicities[y] > 0))
}

/// `N` with the variable `y` dropped, as an ideal of `K[E(G) \ y]`.
fn restricted_n(dec: &KMYDecomposition) -> Result<BinomialIdeal> {
    dec.n.drop_variable(dec.y)
}

/// `N_{e, I_G} = I_{G \ e}`, and the initial ideal of `I_{G \ e}` under the
/// induced order is generated by the minimal generators of `init(I_G)` that
/// `e` does not divide.
pub fn deletion_identity_check(g: &Graph, label: usize, order: Option<&MonomialOrder>) -> Result<bool> {
    let dec = kmy_decompose_toric(g, label, order)?;
    let smaller = g.delete_edge(label)?;
    let target = toric_ideal(&smaller)?;
    if !ideal_equal(&restricted_n(&dec)?, &target)? {
        return Ok(false);
    }
    let y = dec.y;
    let leads = dec.gb.leading_terms().expect("reduced basis has an order");
    let kept: Vec<Monomial> = monomial_ideal_min_gens(&leads)
        .into_iter()
        .filter(|m| m.exponent(y) == 0)
        .map(|m| m.remove_slot(y))
        .collect();
    let induced = dec.order.restrict(y);
    let init = crate::toric::initial_ideal_via_groebner(&target, &induced)?;
    Ok(monomial_ideal_min_gens(&kept) == init)
}

/// Least-labelled edge that is not a bridge and lies in a primitive binomial.
pub fn select_deletion_edge(g: &Graph) -> Result<usize> {
    let bridges = g.bridges();
    for e in g.edges() {
        if !bridges.contains(&e.label) && occurs_in_some_primitive(g, e.label)? {
            return Ok(e.label);
        }
    }
    Err(Error::NoDeletionEdge)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionStep {
    pub label: usize,
    pub degenerate: bool,
}

/// Deletes selected edges until the toric ideal vanishes, component by
/// component. Each step records whether its edge is degenerate for the
/// graph it is deleted from.
pub fn deletion_sequence(g: &Graph) -> Result<Vec<DeletionStep>> {
    let mut steps = Vec::new();
    for component in g.component_graphs() {
        let mut h = component;
        while !toric_ideal_is_zero(&h) {
            let label = select_deletion_edge(&h)?;
            let degenerate = !occurs_in_some_primitive(&h, label)?;
            steps.push(DeletionStep { label, degenerate });
            h = h.delete_edge(label)?;
        }
    }
    Ok(steps)
}

pub fn nondegenerate_steps(steps: &[DeletionStep]) -> usize {
    steps.iter().filter(|s| !s.degenerate).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightChain {
    pub c: usize,
    pub i: usize,
    pub n: usize,
}

impl HeightChain {
    pub fn holds(&self) -> bool {
        self.c == self.i && self.i == self.n + 1
    }
}

fn height_of_recorded(ideal: &BinomialIdeal) -> Result<usize> {
    let Some(leads) = ideal.leading_terms() else {
        return Err(Error::Structural("ideal carries no Gröbner order".into()));
    };
    if leads.is_empty() {
        return Ok(0);
    }
    monomial_ideal_height(&leads).ok_or_else(|| Error::Structural("unit ideal has no height".into()))
}

/// Heights of `C`, `I` and `N` from the leading terms of their recorded
/// Gröbner bases.
pub fn kmy_heights(dec: &KMYDecomposition) -> Result<HeightChain> {
    Ok(HeightChain { c: height_of_recorded(&dec.c)?, i: height_of_recorded(&dec.gb)?, n: height_of_recorded(&dec.n)? })
}

/// `height(C) = height(I) = height(N) + 1` for a nondegenerate edge.
pub fn height_chain_check(g: &Graph, label: usize, order: Option<&MonomialOrder>) -> Result<bool> {
    let dec = kmy_decompose_toric(g, label, order)?;
    if dec.degenerate {
        return Err(Error::Structural(format!("e{label} is degenerate")));
    }
    Ok(kmy_heights(&dec)?.holds())
}

/// For non-bipartite `g` and a nondegenerate edge, `g \ y` stays non-bipartite.
pub fn bipartite_preservation_check(g: &Graph, label: usize) -> Result<bool> {
    if g.is_bipartite() {
        return Err(Error::Structural("graph is bipartite".into()));
    }
    if !occurs_in_some_primitive(g, label)? {
        return Err(Error::Structural(format!("e{label} is degenerate")));
    }
    Ok(!g.delete_edge(label)?.is_bipartite())
}

/// For a degenerate edge: the reduced basis avoids `y` and `I = C = N`.
pub fn degenerate_gb_avoids_y_check(g: &Graph, label: usize, order: Option<&MonomialOrder>) -> Result<bool> {
    if occurs_in_some_primitive(g, label)? {
        return Err(Error::Structural(format!("e{label} is nondegenerate")));
    }
    let dec = kmy_decompose_toric(g, label, order)?;
    Ok(!dec.gb_involves_y() && ideal_equal(&dec.c, &dec.n)? && ideal_equal(&dec.c, &dec.gb)?)
}
