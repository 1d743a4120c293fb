//! Text syntax: `e1*e4^2*e6*e7`, `1`, and `<mono> - <mono>`.
//!
//! Variables are named by edge label; `labels[i]` is the label of slot `i`.

use super::binomial::Binomial;
use super::monomial::Monomial;
use crate::error::{Error, Result};

pub fn format_monomial(m: &Monomial, labels: &[usize]) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k > 0)
        .map(|(i, &k)| {
            let label = labels.get(i).copied().unwrap_or(i + 1);
            if k == 1 {
                format!("e{label}")
            } else {
                format!("e{label}^{k}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_binomial(b: &Binomial, labels: &[usize]) -> String {
    match b.minus() {
        Some(minus) => {
            format!("{} - {}", format_monomial(b.plus(), labels), format_monomial(minus, labels))
        }
        None => format_monomial(b.plus(), labels),
    }
}

pub fn parse_monomial(text: &str, labels: &[usize]) -> Result<Monomial> {
    let text = text.trim();
    let mut m = Monomial::one(labels.len());
    if text == "1" {
        return Ok(m);
    }
    let bad = |what: &str| Error::Syntax(format!("{what} in monomial {text:?}"));
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => (n.trim(), p.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?),
            None => (factor, 1),
        };
        let label: usize = name
            .strip_prefix('e')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad variable"))?;
        let slot = labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| bad(&format!("unknown variable e{label}")))?;
        m = m.mul(&Monomial::from_powers(labels.len(), &[(slot, power)]));
    }
    Ok(m)
}

/// Parses `a - b` or a bare monomial. `a - a` is rejected because zero has
/// no binomial representation.
pub fn parse_binomial(text: &str, labels: &[usize]) -> Result<Binomial> {
    match text.split_once('-') {
        Some((a, b)) => {
            let plus = parse_monomial(a, labels)?;
            let minus = parse_monomial(b, labels)?;
            Binomial::new(plus, minus)
                .ok_or_else(|| Error::Syntax(format!("{text:?} is the zero binomial")))
        }
        None => parse_monomial(text, labels).map(Binomial::monomial),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_gapped_labels() {
        let labels = [1, 2, 3, 4, 5, 7];
        let b = parse_binomial("e2*e4 - e3*e7", &labels).unwrap();
        assert_eq!(format_binomial(&b, &labels), "e2*e4 - e3*e7");
        let m = parse_monomial("e1*e4^2*e7", &labels).unwrap();
        assert_eq!(m.exponents(), &[1, 0, 0, 2, 0, 1]);
        assert_eq!(format_monomial(&Monomial::one(3), &[1, 2, 3]), "1");
        assert!(parse_monomial("e6", &labels).is_err());
        assert!(parse_monomial("x1", &labels).is_err());
        assert!(parse_binomial("e1 - e1", &labels).is_err());
        assert_eq!(parse_binomial("e1^2 - 1", &labels).unwrap().minus(), Some(&Monomial::one(6)));
    }
}
