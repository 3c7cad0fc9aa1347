//! Partitions, skew containment and the index sets that pick Toeplitz rows
//! and columns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition stored as its nonzero parts, largest first. Part `n` is
/// 0-indexed; reading past the stored parts yields 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts. Fails if the parts
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Self {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_n`, zero beyond the stored parts.
    pub fn part(&self, n: usize) -> usize {
        self.parts.get(n).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest `n` with `λ_n > 0`; zero for the empty partition.
    pub fn max_index(&self) -> usize {
        self.parts.len().saturating_sub(1)
    }

    /// True iff `self ⊆ outer` as Young diagrams.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        contains(self, outer)
    }

    /// Box coordinates `(row, col)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(s, &len)| (0..len).map(move |t| (s, t)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(
            remaining: usize,
            max_part: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Every `μ ⊆ self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(
            outer: &[usize],
            row: usize,
            cap: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row == outer.len() {
                out.push(
                    Partition::new(prefix.clone()).expect("weakly decreasing by construction"),
                );
                return;
            }
            for p in 0..=outer[row].min(cap) {
                prefix.push(p);
                rec(outer, row + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// `inner ⊆ outer`: `μ_t ≤ λ_t` for every `t`.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(m, l)| m <= l)
}

/// `{λ_n + i - n | 0 ≤ n ≤ N}` listed with `n = 0` first, so strictly
/// decreasing.
pub fn index_set(lambda: &Partition, parity: u8, window: usize) -> Result<Vec<i64>> {
    if window < lambda.max_index() {
        return Err(Error::InvalidWindow {
            window,
            max_index: lambda.max_index(),
        });
    }
    let set: Vec<i64> = (0..=window)
        .map(|n| lambda.part(n) as i64 + i64::from(parity) - n as i64)
        .collect();
    debug_assert!(set.windows(2).all(|w| w[0] > w[1]));
    Ok(set)
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes `(s, t)` with `μ_s ≤ t < λ_s`, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer
            .parts
            .iter()
            .enumerate()
            .flat_map(move |(s, &len)| (self.inner.part(s)..len).map(move |t| (s, t)))
    }
}

/// Comma-separated parts; the empty partition is the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined = self
            .parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&joined)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
