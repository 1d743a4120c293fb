use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::order::MonomialOrder;

/// `plus - minus`, or the bare monomial `plus` when `minus` is absent.
///
/// Coefficients are implicitly `+1` and `-1`. A binomial with equal terms is
/// zero and is never constructed; zero is `None` wherever it can arise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    plus: Monomial,
    minus: Option<Monomial>,
}

impl Binomial {
    /// `plus - minus`, or `None` when the two terms cancel.
    pub fn new(plus: Monomial, minus: Monomial) -> Option<Self> {
        debug_assert_eq!(plus.vars(), minus.vars());
        (plus != minus).then_some(Binomial { plus, minus: Some(minus) })
    }

    pub fn monomial(m: Monomial) -> Self {
        Binomial { plus: m, minus: None }
    }

    /// `x^{u+} - x^{u-}` for an integer vector `u`; `None` for `u = 0`.
    pub fn from_vector(u: &[i64]) -> Option<Self> {
        let pos = u.iter().map(|&k| k.max(0) as u32).collect();
        let neg = u.iter().map(|&k| (-k).max(0) as u32).collect();
        Self::new(Monomial::from_exponents(pos), Monomial::from_exponents(neg))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> Option<&Monomial> {
        self.minus.as_ref()
    }

    pub fn vars(&self) -> usize {
        self.plus.vars()
    }

    pub fn is_monomial(&self) -> bool {
        self.minus.is_none()
    }

    /// `plus - minus` as an integer vector (a monomial gives its exponents).
    pub fn exponent_vector(&self) -> Vec<i64> {
        let minus = self.minus.as_ref();
        (0..self.vars())
            .map(|i| {
                i64::from(self.plus.exponent(i)) - minus.map_or(0, |m| i64::from(m.exponent(i)))
            })
            .collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        std::iter::once(&self.plus).chain(self.minus.as_ref())
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms().any(|m| m.exponent(var) > 0)
    }

    /// Orients the binomial so `plus` is the larger term under `order`.
    pub fn canonical(self, order: &MonomialOrder) -> Self {
        match self.minus {
            Some(minus) if order.cmp(&self.plus, &minus) == Ordering::Less => {
                Binomial { plus: minus, minus: Some(self.plus) }
            }
            minus => Binomial { plus: self.plus, minus },
        }
    }

    /// Swaps the two terms. Monomials are unchanged.
    pub fn flipped(self) -> Self {
        match self.minus {
            Some(minus) => Binomial { plus: minus, minus: Some(self.plus) },
            None => self,
        }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> &Monomial {
        match &self.minus {
            Some(minus) => order.max(&self.plus, minus),
            None => &self.plus,
        }
    }

    /// Multiplies both terms by `m`.
    pub fn scaled(&self, m: &Monomial) -> Self {
        Binomial { plus: self.plus.mul(m), minus: self.minus.as_ref().map(|n| n.mul(m)) }
    }

    /// Removes slot `i` from both terms.
    pub fn remove_slot(&self, i: usize) -> Self {
        Binomial { plus: self.plus.remove_slot(i), minus: self.minus.as_ref().map(|n| n.remove_slot(i)) }
    }

    pub fn insert_slot(&self, i: usize) -> Self {
        Binomial { plus: self.plus.insert_slot(i), minus: self.minus.as_ref().map(|n| n.insert_slot(i)) }
    }

    /// Largest monomial dividing both terms (the term itself for a monomial).
    pub fn content(&self) -> Monomial {
        match &self.minus {
            Some(minus) => self.plus.gcd(minus),
            None => self.plus.clone(),
        }
    }
}

/// The terms of `f` carrying the highest power of `y`.
///
/// A binomial with unequal `y`-degrees keeps only its heavier term; equal
/// degrees return `f` unchanged.
pub fn initial_y_form(f: &Binomial, y: usize) -> Binomial {
    let Some(minus) = f.minus() else {
        return f.clone();
    };
    match f.plus().exponent(y).cmp(&minus.exponent(y)) {
        Ordering::Greater => Binomial::monomial(f.plus().clone()),
        Ordering::Less => Binomial::monomial(minus.clone()),
        Ordering::Equal => f.clone(),
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<usize> = (1..=self.vars()).collect();
        f.write_str(&super::text::format_binomial(self, &labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(vars: usize, powers: &[(usize, u32)]) -> Monomial {
        let shifted: Vec<_> = powers.iter().map(|&(i, k)| (i - 1, k)).collect();
        Monomial::from_powers(vars, &shifted)
    }

    #[test]
    fn initial_y_forms() {
        // y = e1; f = e1^2 e2 - e3e4
        let f = Binomial::new(m(4, &[(1, 2), (2, 1)]), m(4, &[(3, 1), (4, 1)])).unwrap();
        assert_eq!(initial_y_form(&f, 0), Binomial::monomial(m(4, &[(1, 2), (2, 1)])));
        assert_eq!(initial_y_form(&f.clone().flipped(), 0), Binomial::monomial(m(4, &[(1, 2), (2, 1)])));
        let g = Binomial::new(m(4, &[(2, 1)]), m(4, &[(3, 1)])).unwrap();
        assert_eq!(initial_y_form(&g, 0), g);
        let h = Binomial::new(m(4, &[(1, 1), (2, 1)]), m(4, &[(1, 1), (3, 1)])).unwrap();
        assert_eq!(initial_y_form(&h, 0), h);
    }

    #[test]
    fn zero_is_not_a_binomial() {
        assert!(Binomial::new(m(2, &[(1, 1)]), m(2, &[(1, 1)])).is_none());
        assert!(Binomial::from_vector(&[0, 0]).is_none());
        let b = Binomial::from_vector(&[1, -1, 2]).unwrap();
        assert_eq!(b.exponent_vector(), vec![1, -1, 2]);
    }

    fn monomial(vars: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, vars).prop_map(Monomial::from_exponents)
    }

    fn order(vars: usize) -> impl Strategy<Value = MonomialOrder> {
        let perm = Just((0..vars).collect::<Vec<_>>()).prop_shuffle();
        (perm, 0..4usize, prop::collection::vec(0u64..3, vars), 0..vars).prop_map(
            move |(perm, kind, weights, y)| match kind {
                0 => MonomialOrder::Lex(perm),
                1 => MonomialOrder::Grevlex(perm),
                2 => MonomialOrder::weight(weights, MonomialOrder::Lex(perm)).unwrap(),
                _ => MonomialOrder::y_top(y, MonomialOrder::Grevlex(perm)).unwrap(),
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn orders_are_multiplicative_and_one_is_minimal(
            ord in order(5), a in monomial(5), b in monomial(5), w in monomial(5)
        ) {
            let lhs = ord.cmp(&a, &b);
            prop_assert_eq!(ord.cmp(&a.mul(&w), &b.mul(&w)), lhs);
            prop_assert_eq!(ord.cmp(&b, &a), lhs.reverse());
            prop_assert_ne!(ord.cmp(&Monomial::one(5), &a), Ordering::Greater);
            if lhs == Ordering::Equal {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn y_top_orders_are_y_compatible(
            perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
            y in 0..5usize, a in monomial(5), b in monomial(5)
        ) {
            let ord = MonomialOrder::y_top(y, MonomialOrder::Grevlex(perm)).unwrap();
            if let Some(f) = Binomial::new(a, b) {
                let init = initial_y_form(&f, y);
                prop_assert_eq!(f.leading_term(&ord), init.leading_term(&ord));
            }
        }

        #[test]
        fn canonicalization_is_idempotent(ord in order(4), a in monomial(4), b in monomial(4)) {
            if let Some(f) = Binomial::new(a, b) {
                let once = f.clone().canonical(&ord);
                prop_assert_eq!(once.clone().canonical(&ord), once.clone());
                prop_assert_eq!(once.plus(), f.leading_term(&ord));
                prop_assert_eq!(f.flipped().canonical(&ord), once);
            }
        }
    }
}
