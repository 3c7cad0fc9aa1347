//! 2×2 matrices over Laurent polynomials in `t`: the one-parameter
//! generators `x_0(a), x_1(a)` and their products.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ring::Coefficient;
use crate::tableaux::BitString;

/// `Σ c_e t^e` with finitely many nonzero `c_e`; exponents may be negative.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C: Coefficient> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(exponent: i64, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, exponent: i64, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.get(&exponent) {
            Some(old) => old.add(coeff),
            None => coeff.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    /// `{"e": "coeff", ...}` keyed by exponent.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `g = [[g11, g12], [g21, g22]]`, stored 0-origin.
#[derive(Clone, PartialEq, Debug)]
pub struct LoopElement<C: Coefficient> {
    entries: [[LaurentPoly<C>; 2]; 2],
}

pub type SymbolicLoop = LoopElement<MultiPoly>;
pub type NumericLoop = LoopElement<BigRational>;

impl<C: Coefficient> LoopElement<C> {
    /// Checks `det g = 1`.
    pub fn new(entries: [[LaurentPoly<C>; 2]; 2]) -> Result<Self> {
        let g = LoopElement { entries };
        if g.det() != LaurentPoly::one() {
            return Err(Error::Domain(format!("determinant is {}, not 1", g.det())));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        LoopElement {
            entries: [
                [LaurentPoly::one(), LaurentPoly::zero()],
                [LaurentPoly::zero(), LaurentPoly::one()],
            ],
        }
    }

    /// Entry `g_ij` with 1-origin `i, j ∈ {1, 2}`.
    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly<C> {
        &self.entries[i - 1][j - 1]
    }

    pub fn det(&self) -> LaurentPoly<C> {
        let [[a, b], [c, d]] = &self.entries;
        a.mul(d).sub(&b.mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul(&rhs.entries[0][j])
                .add(&self.entries[i][1].mul(&rhs.entries[1][j]))
        };
        LoopElement {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    /// Smallest and largest `t`-exponent over all entries.
    pub fn degree_span(&self) -> (i64, i64) {
        let all = self.entries.iter().flatten();
        let lo = all
            .clone()
            .filter_map(LaurentPoly::min_exponent)
            .min()
            .unwrap_or(0);
        let hi = all.filter_map(LaurentPoly::max_exponent).max().unwrap_or(0);
        (lo, hi)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|row| Value::Array(row.iter().map(LaurentPoly::to_json).collect()))
                .collect(),
        )
    }
}

/// `x_0(a) = [[1, 0], [a t, 1]]`, `x_1(a) = [[1, a], [0, 1]]`.
pub fn generator<C: Coefficient>(parity: u8, a: C) -> LoopElement<C> {
    let mut g = LoopElement::identity();
    if parity == 0 {
        g.entries[1][0] = LaurentPoly::monomial(1, a);
    } else {
        g.entries[0][1] = LaurentPoly::monomial(0, a);
    }
    g
}

/// `x_{i_1}(a_1) ⋯ x_{i_k}(a_k)` with formal parameters.
pub fn word_to_loop(word: &BitString) -> Result<SymbolicLoop> {
    word.require_alternating()?;
    let g = word
        .bits()
        .iter()
        .enumerate()
        .fold(LoopElement::identity(), |acc, (t, &bit)| {
            acc.mul(&generator(bit, MultiPoly::var(t + 1)))
        });
    if g.det() != LaurentPoly::one() {
        return Err(Error::Invariant(format!(
            "det of word_to_loop({word}) is not 1"
        )));
    }
    Ok(g)
}

/// Same product with numeric parameters.
pub fn word_to_loop_numeric(word: &BitString, params: &[BigRational]) -> Result<NumericLoop> {
    word.require_alternating()?;
    if params.len() != word.len() {
        return Err(Error::Domain(format!(
            "{} parameters for a word of length {}",
            params.len(),
            word.len()
        )));
    }
    Ok(word
        .bits()
        .iter()
        .zip(params)
        .fold(LoopElement::identity(), |acc, (&bit, a)| {
            acc.mul(&generator(bit, a.clone()))
        }))
}

/// Membership in `U_+`: diagonal entries in `1 + t C[t]`, `g12` polynomial,
/// `g21 ∈ t C[t]`, determinant 1.
pub fn is_unipotent_plus<C: Coefficient>(g: &LoopElement<C>) -> bool {
    let polynomial = |p: &LaurentPoly<C>, lowest: i64| p.min_exponent().is_none_or(|e| e >= lowest);
    let unit_constant = |p: &LaurentPoly<C>| p.coeff(0) == C::one() && polynomial(p, 0);
    unit_constant(g.entry(1, 1))
        && unit_constant(g.entry(2, 2))
        && polynomial(g.entry(1, 2), 0)
        && polynomial(g.entry(2, 1), 1)
        && g.det() == LaurentPoly::one()
}
