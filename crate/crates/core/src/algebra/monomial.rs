use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense exponent vector over the edge variables. The zero vector is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(index: usize, vars: usize) -> Self {
        let mut m = Self::one(vars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// Builds `prod x_i^{k}` from `(i, k)` pairs.
    pub fn from_powers(vars: usize, powers: &[(usize, u32)]) -> Self {
        let mut m = Self::one(vars);
        for &(i, k) in powers {
            m.0[i] += k;
        }
        m
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Bit `i mod 64` set for every occurring variable `i`. Divisibility
    /// implies mask inclusion, which makes this a cheap pre-filter.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << (i % 64))
    }

    pub fn check_same_vars(&self, other: &Monomial) -> Result<()> {
        if self.vars() == other.vars() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.vars(), found: other.vars() })
        }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / other`, failing unless `other | self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_vars(other)?;
        if !other.divides(self) {
            return Err(Error::InexactDivision);
        }
        Ok(self.div_unchecked(other))
    }

    pub(crate) fn div_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    /// `(self / other) * factor`, the rewrite step of a reduction.
    pub(crate) fn div_mul(&self, other: &Monomial, factor: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .zip(&factor.0)
                .map(|((&a, &b), &c)| a - b + c)
                .collect(),
        )
    }

    /// Drops variable `i` entirely, returning its exponent and the rest.
    pub fn split_off_variable(&self, i: usize) -> (u32, Monomial) {
        let mut rest = self.clone();
        let d = rest.0[i];
        rest.0[i] = 0;
        (d, rest)
    }

    /// Removes slot `i`, shrinking the ambient ring by one variable.
    pub fn remove_slot(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(i);
        Monomial(v)
    }

    /// Inserts a zero slot at `i`, growing the ambient ring by one variable.
    pub fn insert_slot(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v.insert(i, 0);
        Monomial(v)
    }

    /// Product of the support variables.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| u32::from(e > 0)).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<usize> = (1..=self.vars()).collect();
        f.write_str(&super::text::format_monomial(self, &labels))
    }
}
