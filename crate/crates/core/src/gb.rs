//! Gröbner bases of ideals generated by monomials and pure-difference
//! binomials.
//!
//! The class `{ m } ∪ { m - n }` is closed under S-polynomials and reduction:
//! rewriting a term of `a - b` with `c - d` gives `(a/c)d - b`, and a monomial
//! reducer simply deletes the term. No coefficient arithmetic is needed.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use log::{debug, trace};
use serde::{Deserialize, Serialize};

use crate::algebra::text::format_binomial;
use crate::algebra::{Binomial, Monomial, MonomialOrder};
use crate::cover::Hypergraph;
use crate::error::{Error, Result};

/// Pair-queue ceiling before `buchberger` gives up.
pub const DEFAULT_GENERATOR_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdealStatus {
    Raw,
    Groebner(MonomialOrder),
    ReducedGroebner(MonomialOrder),
}

/// An ideal given by monomial and binomial generators. The zero ideal has no
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialIdeal {
    vars: usize,
    generators: Vec<Binomial>,
    status: IdealStatus,
}

impl BinomialIdeal {
    pub fn new(vars: usize, generators: Vec<Binomial>) -> Result<Self> {
        for g in &generators {
            if g.vars() != vars {
                return Err(Error::LengthMismatch { expected: vars, found: g.vars() });
            }
        }
        Ok(BinomialIdeal { vars, generators, status: IdealStatus::Raw })
    }

    pub fn zero(vars: usize) -> Self {
        BinomialIdeal { vars, generators: Vec::new(), status: IdealStatus::Raw }
    }

    /// Marks `generators` as a Gröbner basis for `order`. The caller vouches
    /// for the claim; [`is_groebner`] can confirm it.
    pub fn with_groebner_status(vars: usize, generators: Vec<Binomial>, order: MonomialOrder) -> Self {
        let generators = generators.into_iter().map(|g| g.canonical(&order)).collect();
        BinomialIdeal { vars, generators, status: IdealStatus::Groebner(order) }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn status(&self) -> &IdealStatus {
        &self.status
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The order this generating set is a Gröbner basis for, if any.
    pub fn groebner_order(&self) -> Option<&MonomialOrder> {
        match &self.status {
            IdealStatus::Groebner(o) | IdealStatus::ReducedGroebner(o) => Some(o),
            IdealStatus::Raw => None,
        }
    }

    /// Leading terms of the generators under their Gröbner order.
    pub fn leading_terms(&self) -> Option<Vec<Monomial>> {
        let order = self.groebner_order()?;
        Some(self.generators.iter().map(|g| g.leading_term(order).clone()).collect())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.minus().is_none_or(|m| m.degree() == g.plus().degree()))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.generators.iter().any(|g| g.involves(var))
    }

    /// The same generators in the ring without variable `slot`.
    pub fn drop_variable(&self, slot: usize) -> Result<Self> {
        if self.involves(slot) {
            return Err(Error::Structural(format!("generator involves e{}", slot + 1)));
        }
        let status = match &self.status {
            IdealStatus::Raw => IdealStatus::Raw,
            IdealStatus::Groebner(o) => IdealStatus::Groebner(o.restrict(slot)),
            IdealStatus::ReducedGroebner(o) => IdealStatus::ReducedGroebner(o.restrict(slot)),
        };
        Ok(BinomialIdeal {
            vars: self.vars - 1,
            generators: self.generators.iter().map(|g| g.remove_slot(slot)).collect(),
            status,
        })
    }

    /// The reduced Gröbner basis for `order`, reusing `self` when it already is one.
    pub fn reduced(&self, order: &MonomialOrder) -> Result<Self> {
        if matches!(&self.status, IdealStatus::ReducedGroebner(o) if o == order) {
            return Ok(self.clone());
        }
        buchberger(self, order)
    }

    /// Membership test via the reduced basis for the reference order.
    pub fn contains(&self, f: &Binomial) -> Result<bool> {
        let order = MonomialOrder::grevlex_identity(self.vars);
        let gb = self.reduced(&order)?;
        Ok(normal_form(f, &gb.generators, &order).is_none())
    }

    /// `vars=<q> order=<spec>` followed by one generator per line.
    pub fn to_text(&self, labels: &[usize]) -> String {
        let order = self.groebner_order().map_or("raw".to_string(), |o| o.to_spec(labels));
        let mut out = format!("vars={} order={}\n", self.vars, order);
        for g in &self.generators {
            out.push_str(&format_binomial(g, labels));
            out.push('\n');
        }
        out
    }
}

/// A basis element in canonical orientation with a cached support mask.
#[derive(Debug, Clone)]
struct Elem {
    lead: Monomial,
    tail: Option<Monomial>,
    mask: u64,
}

impl Elem {
    fn new(lead: Monomial, tail: Option<Monomial>) -> Self {
        let mask = lead.support_mask();
        Elem { lead, tail, mask }
    }

    fn from_binomial(b: &Binomial, order: &MonomialOrder) -> Self {
        let b = b.clone().canonical(order);
        Elem::new(b.plus().clone(), b.minus().cloned())
    }

    fn to_binomial(&self) -> Binomial {
        match &self.tail {
            Some(t) => Binomial::new(self.lead.clone(), t.clone()).expect("lead differs from tail"),
            None => Binomial::monomial(self.lead.clone()),
        }
    }
}

fn find_divisor(m: &Monomial, basis: &[Elem], skip: Option<usize>) -> Option<usize> {
    let mask = m.support_mask();
    basis
        .iter()
        .enumerate()
        .find(|&(i, e)| Some(i) != skip && e.mask & !mask == 0 && e.lead.divides(m))
        .map(|(i, _)| i)
}

/// Fully reduces `a - b` (or the monomial `a`) modulo `basis`. Returns the
/// canonical remainder `(lead, tail)` or `None` for zero.
fn reduce(
    mut a: Monomial,
    mut b: Option<Monomial>,
    basis: &[Elem],
    order: &MonomialOrder,
    skip: Option<usize>,
) -> Option<(Monomial, Option<Monomial>)> {
    loop {
        if let Some(bb) = &b {
            match order.cmp(&a, bb) {
                Ordering::Less => std::mem::swap(&mut a, b.as_mut().unwrap()),
                Ordering::Equal => return None,
                Ordering::Greater => {}
            }
        }
        let Some(i) = find_divisor(&a, basis, skip) else {
            break;
        };
        match &basis[i].tail {
            Some(t) => a = a.div_mul(&basis[i].lead, t),
            None => a = b.take()?,
        }
    }
    let Some(mut t) = b else {
        return Some((a, None));
    };
    // The tail only decreases, so it stays below the lead.
    while let Some(i) = find_divisor(&t, basis, skip) {
        match &basis[i].tail {
            Some(d) => t = t.div_mul(&basis[i].lead, d),
            None => return Some((a, None)),
        }
    }
    debug_assert_ne!(a, t);
    Some((a, Some(t)))
}

/// Remainder of `f` on division by `basis`: zero, a monomial, or a
/// pure-difference binomial with no term divisible by a leading term.
pub fn normal_form(f: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let elems: Vec<Elem> = basis.iter().map(|b| Elem::from_binomial(b, order)).collect();
    let f = f.clone().canonical(order);
    reduce(f.plus().clone(), f.minus().cloned(), &elems, order, None)
        .map(|(a, b)| Elem::new(a, b).to_binomial())
}

fn s_polynomial(f: &Elem, g: &Elem) -> Option<(Monomial, Option<Monomial>)> {
    let l = f.lead.lcm(&g.lead);
    let left = f.tail.as_ref().map(|t| l.div_mul(&f.lead, t));
    let right = g.tail.as_ref().map(|t| l.div_mul(&g.lead, t));
    match (left, right) {
        (Some(a), Some(b)) => (a != b).then_some((a, Some(b))),
        (Some(a), None) | (None, Some(a)) => Some((a, None)),
        (None, None) => None,
    }
}

/// Interreduces a Gröbner basis into the reduced one, sorted by leading term.
fn interreduce(elems: Vec<Elem>, order: &MonomialOrder) -> Vec<Binomial> {
    let keep: Vec<bool> = (0..elems.len())
        .map(|i| {
            !elems.iter().enumerate().any(|(j, e)| {
                j != i && e.lead.divides(&elems[i].lead) && (e.lead != elems[i].lead || j < i)
            })
        })
        .collect();
    let minimal: Vec<Elem> = elems
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    let mut out: Vec<Binomial> = (0..minimal.len())
        .map(|i| {
            let e = &minimal[i];
            let tail = e.tail.as_ref().and_then(|t| {
                match reduce(t.clone(), None, &minimal, order, Some(i)) {
                    Some((r, _)) => Some(r),
                    None => None,
                }
            });
            Elem::new(e.lead.clone(), tail).to_binomial()
        })
        .collect();
    out.sort_by(|a, b| order.cmp(a.plus(), b.plus()));
    out
}

/// Reduced Gröbner basis with the default generator budget.
pub fn buchberger(ideal: &BinomialIdeal, order: &MonomialOrder) -> Result<BinomialIdeal> {
    buchberger_with_budget(ideal, order, DEFAULT_GENERATOR_BUDGET)
}

/// Buchberger's algorithm with the product and chain criteria.
///
/// Pairs are processed by increasing total degree of their lcm, ties by
/// generator index, so the run (and its log) is reproducible.
pub fn buchberger_with_budget(
    ideal: &BinomialIdeal,
    order: &MonomialOrder,
    budget: usize,
) -> Result<BinomialIdeal> {
    if order.vars() != ideal.vars {
        return Err(Error::LengthMismatch { expected: ideal.vars, found: order.vars() });
    }
    let mut basis: Vec<Elem> = Vec::new();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert = |basis: &mut Vec<Elem>,
                  queue: &mut BTreeSet<(u32, usize, usize)>,
                  pending: &mut HashSet<(usize, usize)>,
                  lead: Monomial,
                  tail: Option<Monomial>|
     -> Result<()> {
        let elem = Elem::new(lead, tail);
        let k = basis.len();
        for (i, other) in basis.iter().enumerate() {
            if other.lead.is_coprime(&elem.lead) {
                continue;
            }
            let deg = other.lead.lcm(&elem.lead).degree();
            queue.insert((deg, i, k));
            pending.insert((i, k));
        }
        basis.push(elem);
        if queue.len() > budget || basis.len() > budget {
            return Err(Error::Capability(format!(
                "Buchberger queue exceeded the generator budget of {budget}"
            )));
        }
        Ok(())
    };

    for g in &ideal.generators {
        let g = g.clone().canonical(order);
        if let Some((a, b)) = reduce(g.plus().clone(), g.minus().cloned(), &basis, order, None) {
            insert(&mut basis, &mut queue, &mut pending, a, b)?;
        }
    }

    let mut processed = 0usize;
    while let Some((deg, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        processed += 1;
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let Some((a, b)) = s_polynomial(&basis[i], &basis[j]) else {
            continue;
        };
        if let Some((a, b)) = reduce(a, b, &basis, order, None) {
            trace!("pair ({i},{j}) of lcm degree {deg} adds element {}", basis.len());
            insert(&mut basis, &mut queue, &mut pending, a, b)?;
        }
    }
    debug!("buchberger: {} pairs processed, {} elements before interreduction", processed, basis.len());
    let generators = interreduce(basis, order);
    Ok(BinomialIdeal {
        vars: ideal.vars,
        generators,
        status: IdealStatus::ReducedGroebner(order.clone()),
    })
}

/// Buchberger's criterion: every S-pair reduces to zero.
pub fn is_groebner(basis: &[Binomial], order: &MonomialOrder) -> bool {
    let elems: Vec<Elem> = basis.iter().map(|b| Elem::from_binomial(b, order)).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if elems[i].lead.is_coprime(&elems[j].lead) {
                continue;
            }
            if let Some((a, b)) = s_polynomial(&elems[i], &elems[j]) {
                if reduce(a, b, &elems, order, None).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Equality of ideals via reduced bases under graded reverse lex.
pub fn ideal_equal(a: &BinomialIdeal, b: &BinomialIdeal) -> Result<bool> {
    if a.vars != b.vars {
        return Ok(false);
    }
    let order = MonomialOrder::grevlex_identity(a.vars);
    Ok(a.reduced(&order)?.generators == b.reduced(&order)?.generators)
}

/// `(I : x^∞)`.
///
/// Homogeneous inputs take a Gröbner basis under graded reverse lex with `x`
/// smallest and divide every element by the largest power of `x` dividing
/// it. Other inputs fall back to eliminating `t` from `I + <x t - 1>`.
pub fn saturate_variable(ideal: &BinomialIdeal, x: usize) -> Result<BinomialIdeal> {
    if x >= ideal.vars {
        return Err(Error::InvalidVariable { index: x, vars: ideal.vars });
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    if !ideal.is_homogeneous() {
        return saturate_by_elimination(ideal, x);
    }
    let perm: Vec<usize> = (0..ideal.vars).filter(|&v| v != x).chain([x]).collect();
    let order = MonomialOrder::Grevlex(perm);
    let gb = buchberger(ideal, &order)?;
    let mut seen = HashSet::new();
    let mut generators = Vec::new();
    for g in gb.generators {
        let power = g.content().exponent(x);
        let divisor = Monomial::from_powers(ideal.vars, &[(x, power)]);
        let stripped = match g.minus() {
            Some(m) => Binomial::new(g.plus().div_unchecked(&divisor), m.div_unchecked(&divisor))
                .expect("terms stay distinct"),
            None => Binomial::monomial(g.plus().div_unchecked(&divisor)),
        };
        if seen.insert(stripped.clone()) {
            generators.push(stripped);
        }
    }
    Ok(BinomialIdeal::with_groebner_status(ideal.vars, generators, order))
}

fn saturate_by_elimination(ideal: &BinomialIdeal, x: usize) -> Result<BinomialIdeal> {
    let n = ideal.vars;
    let mut generators: Vec<Binomial> = ideal.generators.iter().map(|g| g.insert_slot(n)).collect();
    let xt = Monomial::from_powers(n + 1, &[(x, 1), (n, 1)]);
    generators.push(Binomial::new(xt, Monomial::one(n + 1)).expect("xt differs from 1"));
    let order = MonomialOrder::y_top(n, MonomialOrder::grevlex_identity(n + 1))?;
    let gb = buchberger(&BinomialIdeal::new(n + 1, generators)?, &order)?;
    let kept = gb
        .generators
        .iter()
        .filter(|g| !g.involves(n))
        .map(|g| g.remove_slot(n))
        .collect();
    Ok(BinomialIdeal::with_groebner_status(n, kept, order.restrict(n)))
}

/// `(I : (x_1 ... x_n)^∞)` as a reduced basis under graded reverse lex.
///
/// One pass over the variables suffices because `(I : x^∞) : y^∞ = I : (xy)^∞`.
pub fn saturate_all(ideal: &BinomialIdeal) -> Result<BinomialIdeal> {
    let mut current = ideal.clone();
    for x in 0..ideal.vars {
        current = saturate_variable(&current, x)?;
    }
    current.reduced(&MonomialOrder::grevlex_identity(ideal.vars))
}

/// Divisibility-minimal generators of a monomial ideal, deduplicated and
/// sorted ascending under graded reverse lex.
pub fn monomial_ideal_min_gens(ms: &[Monomial]) -> Vec<Monomial> {
    let mut unique: Vec<Monomial> = ms.to_vec();
    unique.sort();
    unique.dedup();
    let mut out: Vec<Monomial> = unique
        .iter()
        .filter(|m| !unique.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect();
    if let Some(first) = out.first() {
        let order = MonomialOrder::grevlex_identity(first.vars());
        out.sort_by(|a, b| order.cmp(a, b));
    }
    out
}

/// Support hypergraph of a list of monomials over `vars` variables.
pub fn support_hypergraph_of(vars: usize, ms: &[Monomial]) -> Hypergraph {
    Hypergraph::new(vars, ms.iter().map(Monomial::support).collect())
}

/// Height of a monomial ideal: the minimum number of variables meeting every
/// generator's support. `None` for the unit ideal.
pub fn monomial_ideal_height(ms: &[Monomial]) -> Option<usize> {
    let Some(first) = ms.first() else {
        return Some(0);
    };
    support_hypergraph_of(first.vars(), &monomial_ideal_min_gens(ms)).covering_number()
}

/// Radical of a monomial ideal: minimal generators of the squarefree parts.
pub fn monomial_ideal_radical(ms: &[Monomial]) -> Vec<Monomial> {
    let sq: Vec<Monomial> = ms.iter().map(Monomial::squarefree_part).collect();
    monomial_ideal_min_gens(&sq)
}
