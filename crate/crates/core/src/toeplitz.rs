//! The block-Toeplitz matrix `T_g` of a loop element and its minors.
//!
//! An integer index `l` stands for the basis vector `t^{-m} e_c` with
//! `l = 2m + c`, `c ∈ {1, 2}`: odd indices carry component 1, even ones
//! component 2. Entry `(M, N)` is the coefficient of `t^{n-m}` in `g_{ij}`.

use crate::error::{Error, Result};
use crate::loop_group::{is_unipotent_plus, LoopElement};
use crate::partitions::{index_set, Partition};
use crate::ring::Coefficient;

/// `l ↦ (m, c)` with `l = 2m + c`, `c ∈ {1, 2}`.
pub fn decompose(l: i64) -> (i64, usize) {
    let c = if l.rem_euclid(2) == 1 { 1 } else { 2 };
    ((l - c as i64) / 2, c)
}

pub fn toeplitz_entry<C: Coefficient>(g: &LoopElement<C>, row: i64, col: i64) -> C {
    let (m, i) = decompose(row);
    let (n, j) = decompose(col);
    g.entry(i, j).coeff(n - m)
}

/// The submatrix of `T_g` on the given ordered rows and columns.
pub fn window<C: Coefficient>(g: &LoopElement<C>, rows: &[i64], cols: &[i64]) -> Vec<Vec<C>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| toeplitz_entry(g, r, c)).collect())
        .collect()
}

/// `Δ^(i)_{μ,λ}(g)`: rows `set^(i)_N(μ)`, columns `set^(i)_N(λ)` with
/// `N = N_λ`, both in the order `n = 0, 1, ..., N`.
pub fn minor<C: Coefficient>(
    g: &LoopElement<C>,
    mu: &Partition,
    lambda: &Partition,
    parity: u8,
) -> Result<C> {
    if !mu.is_contained_in(lambda) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let n = lambda.max_index();
    let rows = index_set(mu, parity, n)?;
    let cols = index_set(lambda, parity, n)?;
    Ok(C::determinant(&window(g, &rows, &cols)))
}

/// `Δ^(i)_{m,n}`, the minor between the staircases `(m, ..., 1)` and
/// `(n, ..., 1)`.
pub fn minor_staircase<C: Coefficient>(
    g: &LoopElement<C>,
    m: usize,
    n: usize,
    parity: u8,
) -> Result<C> {
    if m > n {
        return Err(Error::Domain(format!(
            "staircase {m} is not contained in staircase {n}"
        )));
    }
    minor(
        g,
        &Partition::staircase(m),
        &Partition::staircase(n),
        parity,
    )
}

/// `E^(i)_n`, the `(i, n + i)` entry of `T_g`; zero for negative `n`.
pub fn entry_e<C: Coefficient>(g: &LoopElement<C>, parity: u8, n: i64) -> C {
    if n < 0 {
        return C::zero();
    }
    toeplitz_entry(g, parity as i64, n + parity as i64)
}

/// Determinant of `(E^(q_s)_{λ_t - t + s})_{s,t}`, `0 <= s,t <= N`, with
/// `q_s = i + s mod 2`. Row `s` of the minor is row `i - s` of `T_g`, moved
/// to `q_s` by a block shift.
pub fn pieri_determinant<C: Coefficient>(
    g: &LoopElement<C>,
    lambda: &Partition,
    parity: u8,
) -> Result<C> {
    if !is_unipotent_plus(g) {
        return Err(Error::Precondition("the Pieri rule needs g in U_+".into()));
    }
    let n = lambda.max_index();
    let rows: Vec<Vec<C>> = (0..=n)
        .map(|s| {
            let q = ((parity as usize + s) % 2) as u8;
            (0..=n)
                .map(|t| entry_e(g, q, lambda.part(t) as i64 - t as i64 + s as i64))
                .collect()
        })
        .collect();
    Ok(C::determinant(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_group::{generator, word_to_loop, SymbolicLoop};
    use crate::poly::MultiPoly;
    use crate::tableaux::BitString;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> BitString {
        s.parse().unwrap()
    }

    const GOLDEN: &str = "a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2";

    #[test]
    fn index_decomposition() {
        assert_eq!(decompose(1), (0, 1));
        assert_eq!(decompose(2), (0, 2));
        assert_eq!(decompose(0), (-1, 2));
        assert_eq!(decompose(-1), (-1, 1));
        assert_eq!(decompose(3), (1, 1));
    }

    #[test]
    fn generator_entries() {
        let a = MultiPoly::var(1);
        assert_eq!(toeplitz_entry(&generator(1, a.clone()), 1, 2), a);
        assert_eq!(toeplitz_entry(&generator(0, a.clone()), 2, 3), a);
        let g = word_to_loop(&w("1,0,1")).unwrap();
        for m in -4..5 {
            assert!(toeplitz_entry(&g, m, m).is_one());
        }
    }

    #[test]
    fn golden_minor() {
        let g = word_to_loop(&w("1,0,1,0")).unwrap();
        let value = minor(&g, &Partition::empty(), &p("2,1"), 1).unwrap();
        assert_eq!(value.to_string(), GOLDEN);
        assert_eq!(minor_staircase(&g, 0, 2, 1).unwrap(), value);
        assert_eq!(pieri_determinant(&g, &p("2,1"), 1).unwrap(), value);
    }

    #[test]
    fn small_minors() {
        let g = word_to_loop(&w("0")).unwrap();
        assert_eq!(
            minor(&g, &Partition::empty(), &p("1"), 0).unwrap(),
            MultiPoly::var(1)
        );
        let id = SymbolicLoop::identity();
        for lambda in Partition::all_up_to(4) {
            for parity in 0..2 {
                assert!(minor(&id, &lambda, &lambda, parity).unwrap().is_one());
            }
        }
        assert!(minor_staircase(&id, 2, 2, 0).unwrap().is_one());
        assert!(minor_staircase(&id, 0, 0, 1).unwrap().is_one());
        assert!(matches!(
            minor_staircase(&id, 3, 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            minor(&id, &p("3"), &p("2,2"), 0),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn e_entries() {
        let a = MultiPoly::var(1);
        assert_eq!(entry_e(&generator(0, a.clone()), 0, 1), a);
        let id = SymbolicLoop::identity();
        assert!(entry_e(&id, 1, 0).is_one());
        let g = word_to_loop(&w("1,0,1,0")).unwrap();
        for parity in 0..2 {
            assert!(entry_e(&g, parity, -1).is_zero());
            assert!(entry_e(&g, parity, -3).is_zero());
        }
    }

    #[test]
    fn pieri_small_cases() {
        let id = SymbolicLoop::identity();
        assert!(pieri_determinant(&id, &p("1"), 0).unwrap().is_zero());
        let g = word_to_loop(&w("0,1,0")).unwrap();
        for n in 0..4 {
            let row = Partition::new(if n == 0 { vec![] } else { vec![n] }).unwrap();
            for parity in 0..2 {
                assert_eq!(
                    pieri_determinant(&g, &row, parity).unwrap(),
                    entry_e(&g, parity, n as i64)
                );
            }
        }
        let bad = crate::loop_group::LoopElement::new([
            [
                crate::loop_group::LaurentPoly::one(),
                crate::loop_group::LaurentPoly::monomial(-1, MultiPoly::one()),
            ],
            [
                crate::loop_group::LaurentPoly::zero(),
                crate::loop_group::LaurentPoly::one(),
            ],
        ])
        .unwrap();
        assert!(matches!(
            pieri_determinant(&bad, &p("1"), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn literal_row_reversed_form_is_not_the_minor() {
        // (E^(q_s)_{λ_{N-s}+t-s}) already differs at λ = (1,1)
        let g = word_to_loop(&w("0,1")).unwrap();
        let lambda = p("1,1");
        let rows: Vec<Vec<MultiPoly>> = (0..2)
            .map(|s| {
                (0..2)
                    .map(|t| {
                        entry_e(
                            &g,
                            (s % 2) as u8,
                            lambda.part(1 - s) as i64 + t as i64 - s as i64,
                        )
                    })
                    .collect()
            })
            .collect();
        let literal = MultiPoly::determinant(&rows);
        let value = minor(&g, &Partition::empty(), &lambda, 0).unwrap();
        assert_ne!(literal, value);
        assert_eq!(pieri_determinant(&g, &lambda, 0).unwrap(), value);
    }

    #[test]
    fn pieri_matches_minor_on_small_grid() {
        for first in 0..2 {
            for len in 0..=4 {
                let g = word_to_loop(&BitString::alternating(first, len)).unwrap();
                for lambda in Partition::all_up_to(4) {
                    for parity in 0..2 {
                        assert_eq!(
                            pieri_determinant(&g, &lambda, parity).unwrap(),
                            minor(&g, &Partition::empty(), &lambda, parity).unwrap(),
                            "word {first}/{len}, lambda {lambda}, i={parity}"
                        );
                    }
                }
            }
        }
    }
}
