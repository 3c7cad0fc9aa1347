//! Multivariate polynomials in the positional variables `a1, a2, ...` with
//! arbitrary-precision integer coefficients.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so a polynomial
//! has a single canonical form regardless of how many variables the caller
//! has in mind. Lexicographic order on the trimmed vectors agrees with
//! lexicographic order on zero-padded ones.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

/// Exponent vector `(j_1, ..., j_k)`, trailing zeros removed.
pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// The variable `a_{index}` (1-origin).
    pub fn var(index: usize) -> Self {
        assert!(index >= 1, "variables are 1-origin");
        let mut e = vec![0; index];
        e[index - 1] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Exponents, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(trim(exponents), coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents (zero if absent).
    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` if every monomial has total degree `d`; `None` for zero or
    /// mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, exponents: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Substitute numeric values for the variables.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &p) in e.iter().enumerate() {
                let v = values.get(idx).cloned().unwrap_or_default();
                term *= num_traits::pow(v, p as usize);
            }
            total += term;
        }
        total
    }

    /// Rename `a_s` to `a_{s + shift}` everywhere.
    pub fn shift_vars(&self, shift: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut shifted = vec![0; shift];
                shifted.extend_from_slice(e);
                (trim(shifted), c.clone())
            })
            .collect();
        MultiPoly { terms }
    }

    /// JSON object keyed by comma-joined exponent vectors padded to `k`
    /// entries, values are decimal coefficient strings.
    pub fn to_json(&self, k: usize) -> Value {
        let mut map = Map::new();
        for (e, c) in &self.terms {
            let width = k.max(e.len());
            let key = (0..width)
                .map(|i| e.get(i).copied().unwrap_or(0).to_string())
                .collect::<Vec<_>>()
                .join(",");
            map.insert(key, Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (idx, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "a{}", idx + 1)?;
        if p > 1 {
            write!(f, "^{p}")?;
        }
    }
    Ok(())
}

/// Canonical text: terms in descending lexicographic order of exponent
/// vectors, e.g. `a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (pos, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if e.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let len = e1.len().max(e2.len());
                let e: Exponents = (0..len)
                    .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(BigInt::from(c))
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn display_matches_canonical_order() {
        // a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2
        let p = &(&(&(&a(1) * &a(2)) * &a(2))
            + &(&(&(&a(1) * &a(2)) * &a(4)) * &MultiPoly::from(2)))
            + &(&(&(&a(1) * &a(4)) * &a(4)) + &(&(&a(3) * &a(4)) * &a(4)));
        assert_eq!(p.to_string(), "a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2");
    }

    #[test]
    fn display_signs_and_constants() {
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::one().to_string(), "1");
        let p = &MultiPoly::from(3) - &a(2);
        assert_eq!(p.to_string(), "-a2 + 3");
        let q = &(&a(1) * &MultiPoly::from(-2)) + &MultiPoly::from(-1);
        assert_eq!(q.to_string(), "-2*a1 - 1");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &(&a(1) + &a(2)) - &a(2);
        assert_eq!(p, a(1));
        assert_eq!(p.num_terms(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn json_pads_exponents() {
        let p = &a(1) * &a(3);
        let v = p.to_json(4);
        assert_eq!(v.to_string(), r#"{"1,0,1,0":"1"}"#);
    }

    #[test]
    fn shift_and_evaluate() {
        let p = &a(1) * &a(2);
        assert_eq!(p.shift_vars(2), &a(3) * &a(4));
        let v = p.evaluate(&[BigInt::from(3), BigInt::from(5)]);
        assert_eq!(v, BigInt::from(15));
    }

    #[test]
    fn homogeneity() {
        let p = &(&a(1) * &a(2)) + &(&a(3) * &a(3));
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!((&p + &a(1)).homogeneous_degree(), None);
        assert_eq!(MultiPoly::one().homogeneous_degree(), Some(0));
    }
}
