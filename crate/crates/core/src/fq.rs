//! Small finite fields `F_2, F_3, F_4, F_5` as lookup tables, with the
//! row-reduction needed to enumerate subspaces.

use crate::error::{Error, Result};

/// Field elements are encoded as `0..q`. For prime `q` the encoding is the
/// residue; for `F_4 = F_2[w]/(w^2 + w + 1)` it is the bit pattern of
/// `c0 + c1 w`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

pub const SUPPORTED_ORDERS: [u8; 4] = [2, 3, 4, 5];

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let q = match q {
            2..=5 => q as u8,
            _ => {
                return Err(Error::Resource(format!(
                    "field order {q} unsupported (expected one of 2, 3, 4, 5)"
                )))
            }
        };
        let n = q as usize;
        let (add_fn, mul_fn): (fn(u8, u8, u8) -> u8, fn(u8, u8, u8) -> u8) = if q == 4 {
            (|a, b, _| a ^ b, |a, b, _| gf4_mul(a, b))
        } else {
            (
                |a, b, q| (a + b) % q,
                |a, b, q| ((a as u16 * b as u16) % q as u16) as u8,
            )
        };
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                add[a as usize * n + b as usize] = add_fn(a, b, q);
                mul[a as usize * n + b as usize] = mul_fn(a, b, q);
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a as usize * n + b as usize] == 0)
                    .expect("additive inverse")
            })
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q)
                        .find(|&b| mul[a as usize * n + b as usize] == 1)
                        .expect("multiplicative inverse")
                }
            })
            .collect();
        Ok(FiniteField {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// `x + c·y`, coordinatewise.
    pub fn axpy(&self, x: &[u8], c: u8, y: &[u8]) -> Vec<u8> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.add(a, self.mul(c, b)))
            .collect()
    }

    /// Reduced row echelon form of the span of `rows`, zero rows dropped.
    /// Two spanning sets give equal output iff they span the same subspace.
    pub fn rref(&self, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let width = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let scale = self.inv(m[rank][col]);
            m[rank] = m[rank].iter().map(|&x| self.mul(scale, x)).collect();
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let c = self.neg(m[r][col]);
                    m[r] = self.axpy(&m[r], c, &m[rank]);
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }

    /// True iff `v` lies in the span of the echelon rows `basis`.
    pub fn in_span(&self, basis: &[Vec<u8>], v: &[u8]) -> bool {
        let mut rows = basis.to_vec();
        rows.push(v.to_vec());
        self.rref(&rows).len() == basis.len()
    }
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    // carry-less product reduced by w^2 = w + 1
    let mut prod = 0u8;
    for bit in 0..2 {
        if b & (1 << bit) != 0 {
            prod ^= a << bit;
        }
    }
    if prod & 0b100 != 0 {
        prod ^= 0b111;
    }
    prod
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q as u64).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_has_no_zero_divisors() {
        let f = FiniteField::new(4).unwrap();
        for a in 1..4 {
            for b in 1..4 {
                assert_ne!(f.mul(a, b), 0);
            }
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        assert!(matches!(FiniteField::new(7), Err(Error::Resource(_))));
        assert!(FiniteField::new(1).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let f = FiniteField::new(3).unwrap();
        let a = f.rref(&[vec![1, 2, 0], vec![0, 1, 1]]);
        let b = f.rref(&[vec![1, 0, 1], vec![2, 1, 0], vec![0, 0, 0]]);
        assert_eq!(a, b);
        assert!(f.in_span(&a, &[1, 1, 2]));
        assert!(!f.in_span(&a, &[0, 0, 1]));
    }
}
