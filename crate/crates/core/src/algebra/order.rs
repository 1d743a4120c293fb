//! Monomial orders.
//!
//! Permutations list variable indices from largest to smallest, so
//! `Lex(vec![5, 2, 0, 1, 3, 4, 6])` is the lex order with `e6 > e3 > e1 > ...`
//! on a ring whose labels are `1..=7`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    Grevlex(Vec<usize>),
    /// Compare `weights . exponents` first, then fall back to `tiebreak`.
    Weight { weights: Vec<u64>, tiebreak: Box<MonomialOrder> },
    /// Compare the degree in `y` first (higher wins), then `base`.
    YTop { y: usize, base: Box<MonomialOrder> },
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &v in perm {
        if v >= perm.len() || seen[v] {
            return Err(Error::OrderSpec(format!("{perm:?} is not a permutation")));
        }
        seen[v] = true;
    }
    Ok(())
}

impl MonomialOrder {
    pub fn lex(perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm)?;
        Ok(MonomialOrder::Lex(perm))
    }

    pub fn grevlex(perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm)?;
        Ok(MonomialOrder::Grevlex(perm))
    }

    pub fn lex_identity(vars: usize) -> Self {
        MonomialOrder::Lex((0..vars).collect())
    }

    /// The reference order: graded reverse lex with `e1 > e2 > ...`.
    pub fn grevlex_identity(vars: usize) -> Self {
        MonomialOrder::Grevlex((0..vars).collect())
    }

    pub fn weight(weights: Vec<u64>, tiebreak: MonomialOrder) -> Result<Self> {
        if weights.len() != tiebreak.vars() {
            return Err(Error::LengthMismatch { expected: tiebreak.vars(), found: weights.len() });
        }
        Ok(MonomialOrder::Weight { weights, tiebreak: Box::new(tiebreak) })
    }

    /// The `y`-top refinement of `base`; y-compatible by construction.
    pub fn y_top(y: usize, base: MonomialOrder) -> Result<Self> {
        if y >= base.vars() {
            return Err(Error::InvalidVariable { index: y, vars: base.vars() });
        }
        Ok(MonomialOrder::YTop { y, base: Box::new(base) })
    }

    pub fn vars(&self) -> usize {
        match self {
            MonomialOrder::Lex(p) | MonomialOrder::Grevlex(p) => p.len(),
            MonomialOrder::Weight { weights, .. } => weights.len(),
            MonomialOrder::YTop { base, .. } => base.vars(),
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.vars() != self.vars() {
                return Err(Error::LengthMismatch { expected: self.vars(), found: m.vars() });
            }
        }
        Ok(self.cmp(a, b))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex(perm) => {
                for &v in perm {
                    match x[v].cmp(&y[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex(perm) => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in perm.iter().rev() {
                    match x[v].cmp(&y[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Weight { weights, tiebreak } => {
                let w = |e: &[u32]| -> u64 {
                    weights.iter().zip(e).map(|(&w, &k)| w * u64::from(k)).sum()
                };
                match w(x).cmp(&w(y)) {
                    Ordering::Equal => tiebreak.cmp(a, b),
                    other => other,
                }
            }
            MonomialOrder::YTop { y: yv, base } => match x[*yv].cmp(&y[*yv]) {
                Ordering::Equal => base.cmp(a, b),
                other => other,
            },
        }
    }

    /// Larger of two monomials.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// True when the order provably compares y-degrees first: `YTop` on `y`,
    /// lex with `y` largest, or a weight order supported on `y` alone.
    pub fn is_y_compatible(&self, y: usize) -> bool {
        match self {
            MonomialOrder::YTop { y: yv, .. } => *yv == y,
            MonomialOrder::Lex(perm) => perm.first() == Some(&y),
            MonomialOrder::Weight { weights, .. } => weights
                .iter()
                .enumerate()
                .all(|(i, &w)| (i == y) == (w > 0)),
            MonomialOrder::Grevlex(_) => false,
        }
    }

    /// The induced order on the ring with variable `slot` removed.
    pub fn restrict(&self, slot: usize) -> MonomialOrder {
        let shift = |v: usize| if v > slot { v - 1 } else { v };
        let shrink = |perm: &[usize]| -> Vec<usize> {
            perm.iter().filter(|&&v| v != slot).map(|&v| shift(v)).collect()
        };
        match self {
            MonomialOrder::Lex(perm) => MonomialOrder::Lex(shrink(perm)),
            MonomialOrder::Grevlex(perm) => MonomialOrder::Grevlex(shrink(perm)),
            MonomialOrder::Weight { weights, tiebreak } => {
                let mut w = weights.clone();
                w.remove(slot);
                MonomialOrder::Weight { weights: w, tiebreak: Box::new(tiebreak.restrict(slot)) }
            }
            MonomialOrder::YTop { y, base } => {
                if *y == slot {
                    base.restrict(slot)
                } else {
                    MonomialOrder::YTop { y: shift(*y), base: Box::new(base.restrict(slot)) }
                }
            }
        }
    }

    /// Serializes in the order-spec grammar, naming variables by `labels`.
    pub fn to_spec(&self, labels: &[usize]) -> String {
        let names = |perm: &[usize]| -> String {
            perm.iter().map(|&v| format!("e{}", labels[v])).collect::<Vec<_>>().join(",")
        };
        let identity = |perm: &[usize]| perm.iter().enumerate().all(|(i, &v)| i == v);
        match self {
            MonomialOrder::Lex(perm) => format!("lex:{}", names(perm)),
            MonomialOrder::Grevlex(perm) if identity(perm) => "grevlex".to_string(),
            MonomialOrder::Grevlex(perm) => format!("grevlex:{}", names(perm)),
            MonomialOrder::Weight { weights, tiebreak } => {
                let w: Vec<String> = weights.iter().map(u64::to_string).collect();
                format!("weight:{}+{}", w.join(","), tiebreak.to_spec(labels))
            }
            MonomialOrder::YTop { y, base } => {
                format!("ytop:e{}+{}", labels[*y], base.to_spec(labels))
            }
        }
    }

    /// Parses the order-spec grammar:
    ///
    /// ```text
    /// lex:e6,e3,e1,e2,e4,e5,e7 | lex | grevlex | grevlex:<list>
    /// ytop:e6+<spec> | weight:1,0,2,...+<spec>
    /// ```
    ///
    /// With `partial`, a `lex`/`grevlex` list may name only the leading
    /// variables; the rest follow in index order.
    pub fn parse_spec(spec: &str, labels: &[usize], partial: bool) -> Result<Self> {
        let spec = spec.trim();
        let (head, rest) = match spec.split_once('+') {
            Some((h, r)) => (h, Some(r)),
            None => (spec, None),
        };
        let (kind, arg) = match head.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (head.trim(), None),
        };
        let n = labels.len();
        let var = |name: &str| -> Result<usize> {
            let name = name.trim();
            let label: usize = name
                .strip_prefix('e')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::OrderSpec(format!("bad variable name {name:?}")))?;
            labels
                .iter()
                .position(|&l| l == label)
                .ok_or_else(|| Error::OrderSpec(format!("unknown variable {name}")))
        };
        let list = |arg: Option<&str>| -> Result<Vec<usize>> {
            let Some(arg) = arg.filter(|a| !a.is_empty()) else {
                return Ok((0..n).collect());
            };
            let mut perm = arg.split(',').map(var).collect::<Result<Vec<_>>>()?;
            if partial {
                let mut seen = vec![false; n];
                for &v in &perm {
                    if std::mem::replace(&mut seen[v], true) {
                        return Err(Error::OrderSpec(format!("variable e{} repeated", labels[v])));
                    }
                }
                perm.extend((0..n).filter(|&v| !seen[v]));
            } else if perm.len() != n {
                return Err(Error::OrderSpec(format!(
                    "order lists {} of {n} variables (use --partial to complete it)",
                    perm.len()
                )));
            }
            Ok(perm)
        };
        let sub = |rest: Option<&str>| -> Result<MonomialOrder> {
            let rest = rest.ok_or_else(|| Error::OrderSpec(format!("{kind} needs '+<order>'")))?;
            Self::parse_spec(rest, labels, partial)
        };
        match kind {
            "lex" if rest.is_none() => Self::lex(list(arg)?),
            "grevlex" if rest.is_none() => Self::grevlex(list(arg)?),
            "ytop" => {
                let y = var(arg.ok_or_else(|| Error::OrderSpec("ytop needs a variable".into()))?)?;
                Self::y_top(y, sub(rest)?)
            }
            "weight" => {
                let weights = arg
                    .unwrap_or("")
                    .split(',')
                    .map(|w| {
                        w.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::OrderSpec(format!("bad weight {w:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::weight(weights, sub(rest)?)
            }
            _ => Err(Error::OrderSpec(format!("unrecognized order {spec:?}"))),
        }
    }
}

/// The `y`-top refinement of `base`.
pub fn make_y_compatible_order(y: usize, base: MonomialOrder) -> Result<MonomialOrder> {
    MonomialOrder::y_top(y, base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(vars: usize, powers: &[(usize, u32)]) -> Monomial {
        let shifted: Vec<_> = powers.iter().map(|&(i, k)| (i - 1, k)).collect();
        Monomial::from_powers(vars, &shifted)
    }

    #[test]
    fn basic_comparisons() {
        let lex = MonomialOrder::lex_identity(6);
        assert_eq!(
            lex.compare(&m(6, &[(1, 1), (5, 1)]), &m(6, &[(3, 1), (6, 1)])),
            Ok(Ordering::Greater)
        );
        let grevlex = MonomialOrder::grevlex_identity(6);
        let x = m(6, &[(2, 1), (4, 1)]);
        assert_eq!(grevlex.compare(&x, &x), Ok(Ordering::Equal));
        assert_eq!(grevlex.compare(&Monomial::one(6), &m(6, &[(1, 1)])), Ok(Ordering::Less));
        assert!(grevlex.compare(&Monomial::one(5), &x).is_err());
        // grevlex: e1e3 > e2^2 on three variables (smallest variable e3 vs e2^2 tie broken at e3).
        let g3 = MonomialOrder::grevlex_identity(3);
        assert_eq!(g3.cmp(&m(3, &[(1, 1), (3, 1)]), &m(3, &[(2, 2)])), Ordering::Less);
        assert_eq!(g3.cmp(&m(3, &[(1, 2)]), &m(3, &[(1, 1), (2, 1)])), Ordering::Greater);
    }

    #[test]
    fn y_top_puts_y_first() {
        let ytop = make_y_compatible_order(5, MonomialOrder::grevlex_identity(6)).unwrap();
        let y = m(6, &[(6, 1)]);
        let big = m(6, &[(1, 4), (2, 3)]);
        assert_eq!(ytop.cmp(&y, &big), Ordering::Greater);
        assert!(ytop.is_y_compatible(5));
        assert!(!ytop.is_y_compatible(0));
        assert!(MonomialOrder::lex_identity(4).is_y_compatible(0));
        assert!(!MonomialOrder::grevlex_identity(4).is_y_compatible(0));
    }

    #[test]
    fn spec_round_trip() {
        let labels: Vec<usize> = (1..=7).collect();
        for spec in [
            "lex:e6,e3,e1,e2,e4,e5,e7",
            "grevlex",
            "grevlex:e7,e6,e5,e4,e3,e2,e1",
            "ytop:e6+grevlex",
            "ytop:e2+lex:e1,e2,e3,e4,e5,e6,e7",
            "weight:1,0,0,0,0,0,2+grevlex",
        ] {
            let order = MonomialOrder::parse_spec(spec, &labels, false).unwrap();
            assert_eq!(order.to_spec(&labels), spec);
        }
    }

    #[test]
    fn partial_lex_is_completed_by_index() {
        let labels: Vec<usize> = (1..=7).collect();
        let order = MonomialOrder::parse_spec("lex:e6,e3", &labels, true).unwrap();
        assert_eq!(order, MonomialOrder::Lex(vec![5, 2, 0, 1, 3, 4, 6]));
        assert!(MonomialOrder::parse_spec("lex:e6,e3", &labels, false).is_err());
        assert!(MonomialOrder::parse_spec("lex:e6,e6", &labels, true).is_err());
        assert!(MonomialOrder::parse_spec("lex:e9", &labels, true).is_err());
        assert!(MonomialOrder::parse_spec("revlex", &labels, false).is_err());
    }

    #[test]
    fn labels_follow_deleted_edges() {
        // Ring of G \ e6 for the glued squares.
        let labels = [1, 2, 3, 4, 5, 7];
        let order = MonomialOrder::parse_spec("lex:e3,e7", &labels, true).unwrap();
        assert_eq!(order, MonomialOrder::Lex(vec![2, 5, 0, 1, 3, 4]));
        let full = MonomialOrder::Lex(vec![5, 2, 0, 1, 3, 4, 6]);
        assert_eq!(full.restrict(5), MonomialOrder::Lex(vec![2, 0, 1, 3, 4, 5]));
    }

    #[test]
    fn restrict_drops_y() {
        let ytop = MonomialOrder::y_top(2, MonomialOrder::grevlex_identity(4)).unwrap();
        assert_eq!(ytop.restrict(2), MonomialOrder::grevlex_identity(3));
        assert_eq!(
            ytop.restrict(0),
            MonomialOrder::YTop { y: 1, base: Box::new(MonomialOrder::grevlex_identity(3)) }
        );
    }
}
