//! Coefficient rings for Laurent entries and exact determinants over them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::MultiPoly;

/// A commutative ring with exact arithmetic. `BigRational` is the numeric
/// mode, `MultiPoly` the symbolic one.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact determinant of a square matrix given as rows.
    fn determinant(rows: &[Vec<Self>]) -> Self {
        det_by_minors(rows)
    }
}

impl Coefficient for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }

    fn determinant(rows: &[Vec<Self>]) -> Self {
        det_bareiss_rational(rows)
    }
}

/// Division-free determinant by expansion over column subsets: row `r`
/// is matched against every subset of `r + 1` columns, accumulating signed
/// products. `O(2^n n)` ring multiplications; fine for the window sizes
/// used here (n <= 10).
pub fn det_by_minors<C: Coefficient>(rows: &[Vec<C>]) -> C {
    let n = rows.len();
    if n == 0 {
        return C::one();
    }
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    assert!(
        n < usize::BITS as usize - 1,
        "matrix too large for subset expansion"
    );
    let full = (1usize << n) - 1;
    // minors[mask] = determinant of rows 0..popcount(mask) restricted to the columns in mask
    let mut minors: Vec<Option<C>> = vec![None; 1 << n];
    minors[0] = Some(C::one());
    for mask in 1..=full {
        let r = mask.count_ones() as usize - 1;
        let mut acc = C::zero();
        // Laplace expansion along row r over the columns of mask: the sign
        // depends on the rank of column c inside mask.
        let mut rank = 0usize;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &rows[r][c];
            if !entry.is_zero() {
                if let Some(sub) = &minors[mask & !(1 << c)] {
                    if !sub.is_zero() {
                        let term = entry.mul(sub);
                        // rank counts columns of mask left of c; row r is last
                        if (r - rank).is_multiple_of(2) {
                            acc = acc.add(&term);
                        } else {
                            acc = acc.sub(&term);
                        }
                    }
                }
            }
            rank += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[full].take().unwrap_or_else(C::zero)
}

/// Fraction-free (Bareiss) elimination: denominators are cleared row by row
/// so that every pivot step is an exact integer division.
pub fn det_bareiss_rational(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    if n == 0 {
        return <BigRational as One>::one();
    }
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    let mut scale = <BigRational as One>::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let lcm = row.iter().fold(BigInt::one(), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        });
        scale *= BigRational::from_integer(lcm.clone());
        m.push(
            row.iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        );
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return <BigRational as Zero>::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    BigRational::from_integer(sign * &m[n - 1][n - 1]) / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Leibniz formula over all permutations.
    fn leibniz(rows: &[Vec<BigRational>]) -> BigRational {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = <BigRational as Zero>::zero();
        loop {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut term = <BigRational as One>::one();
            for (r, &c) in perm.iter().enumerate() {
                term *= &rows[r][c];
            }
            if inversions % 2 == 1 {
                term = -term;
            }
            total += term;
            // next permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| perm[i] < perm[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        total
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]];
        assert_eq!(det_by_minors(&m), q(-2, 1));
        assert_eq!(det_bareiss_rational(&m), q(-2, 1));
        let empty: Vec<Vec<BigRational>> = vec![];
        assert_eq!(det_by_minors(&empty), q(1, 1));
    }

    #[test]
    fn bareiss_handles_pivot_swap_and_fractions() {
        let m = vec![
            vec![q(0, 1), q(1, 2), q(2, 1)],
            vec![q(1, 3), q(0, 1), q(1, 1)],
            vec![q(5, 1), q(-1, 1), q(0, 1)],
        ];
        assert_eq!(det_bareiss_rational(&m), leibniz(&m));
        assert_eq!(det_by_minors(&m), leibniz(&m));
    }

    proptest::proptest! {
        #[test]
        fn both_routes_match_leibniz(entries in proptest::collection::vec((-5i64..6, 1i64..4), 1..=25)) {
            let n = (entries.len() as f64).sqrt() as usize;
            let rows: Vec<Vec<BigRational>> = (0..n)
                .map(|r| (0..n).map(|c| { let (a, b) = entries[r * n + c]; q(a, b) }).collect())
                .collect();
            let expect = leibniz(&rows);
            proptest::prop_assert_eq!(det_by_minors(&rows), expect.clone());
            proptest::prop_assert_eq!(det_bareiss_rational(&rows), expect);
        }
    }
}
