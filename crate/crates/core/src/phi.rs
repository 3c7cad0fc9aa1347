//! The φ-map of a shape module, evaluated combinatorially.
//!
//! Euler characteristics of flag varieties are counts of standard tableaux
//! with a given parity string; the generating function is assembled from
//! chess-tableau counts, which already absorb the factorial denominators.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::partitions::Partition;
use crate::poly::MultiPoly;
use crate::tableaux::{enumerate_by_parity, enumerate_chess, BitString};

/// `χ(F_d(M))` for the shape module of shape `λ` and parity `i`.
pub fn euler_char(shape: &Partition, parity: u8, d: &BitString) -> Result<usize> {
    Ok(enumerate_by_parity(shape, parity, d)?.len())
}

/// Parity used by the chess-tableau side: `i* = i + i_1 + 1 (mod 2)`.
/// For the empty word the first letter is immaterial; 0 is used.
pub fn chess_parity(parity: u8, word: &BitString) -> u8 {
    let first = word.bits().first().copied().unwrap_or(0);
    (parity + first + 1) % 2
}

/// `φ_M(a_1, ..., a_k)` with integer coefficients `|Chess^(i*)_j(λ)|`.
pub fn phi_polynomial(shape: &Partition, parity: u8, word: &BitString) -> Result<MultiPoly> {
    word.require_alternating()?;
    let chess = enumerate_chess(shape, chess_parity(parity, word), word.len());
    Ok(chess
        .into_iter()
        .map(|(content, tableaux)| {
            let exponents = content.iter().map(|&j| j as u32).collect();
            MultiPoly::monomial(exponents, BigInt::from(tableaux.len()))
        })
        .sum())
}

/// The exponential-form coefficients `χ(F_{i^j}(M))` keyed by content `j`,
/// computed as `j_1! ... j_k! · |Chess_j|`. Contents with no chess tableau
/// are omitted.
pub fn euler_coefficients(
    shape: &Partition,
    parity: u8,
    word: &BitString,
) -> Result<BTreeMap<Vec<usize>, BigInt>> {
    word.require_alternating()?;
    let chess = enumerate_chess(shape, chess_parity(parity, word), word.len());
    Ok(chess
        .into_iter()
        .map(|(content, tableaux)| {
            let weight: BigInt = content.iter().map(|&j| factorial(j)).product();
            (content, weight * BigInt::from(tableaux.len()))
        })
        .collect())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
