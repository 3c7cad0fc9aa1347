//! Concatenated chip diagrams `Γ_{i_1}(a_1) ⋯ Γ_{i_k}(a_k)` and their
//! non-crossing path families.
//!
//! A path is stored as its level after each chip (`k + 1` levels). Inside
//! chip `t` a path at level `l` either stays or, when `l ≡ i_t (mod 2)`,
//! climbs to `l + 1` picking up weight `a_t`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{index_set, Partition};
use crate::phi::chess_parity;
use crate::poly::MultiPoly;
use crate::tableaux::{BitString, ChessTableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    word: BitString,
    parity: u8,
    mu: Partition,
    lambda: Partition,
    paths: Vec<Vec<i64>>,
}

impl PathFamily {
    pub fn word(&self) -> &BitString {
        &self.word
    }

    pub fn paths(&self) -> &[Vec<i64>] {
        &self.paths
    }

    pub fn sources(&self) -> Vec<i64> {
        self.paths.iter().map(|p| p[0]).collect()
    }

    pub fn sinks(&self) -> Vec<i64> {
        self.paths
            .iter()
            .map(|p| *p.last().expect("path has a start"))
            .collect()
    }

    /// 1-origin chips at which path `n` climbs.
    pub fn ascents(&self, n: usize) -> Vec<usize> {
        self.paths[n]
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0])
            .map(|(t, _)| t + 1)
            .collect()
    }

    /// Ascents per chip, summed over all paths.
    pub fn content(&self) -> Vec<usize> {
        let mut j = vec![0; self.word.len()];
        for n in 0..self.paths.len() {
            for t in self.ascents(n) {
                j[t - 1] += 1;
            }
        }
        j
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sources": self.sources(),
            "sinks": self.sinks(),
            "paths": self.paths,
            "weight": family_weight(self).to_string(),
        })
    }
}

/// Entry `(from, to)` of the weight matrix of the single chip `Γ_bit(a)`.
pub fn chip_weight(bit: u8, a: &MultiPoly, from: i64, to: i64) -> MultiPoly {
    if to == from {
        MultiPoly::one()
    } else if to == from + 1 && from.rem_euclid(2) as u8 == bit {
        a.clone()
    } else {
        MultiPoly::zero()
    }
}

/// Largest climb still available from `level` using chips `t..`.
fn max_rise(bits: &[u8], t: usize, level: i64) -> i64 {
    let remaining = (bits.len() - t) as i64;
    if remaining == 0 {
        0
    } else if level.rem_euclid(2) as u8 == bits[t] {
        remaining
    } else {
        remaining - 1
    }
}

fn extend_paths(
    bits: &[u8],
    upper: Option<&[i64]>,
    sink: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let t = current.len() - 1;
    let level = current[t];
    if t == bits.len() {
        if level == sink {
            out.push(current.clone());
        }
        return;
    }
    let mut options = vec![level];
    if level.rem_euclid(2) as u8 == bits[t] {
        options.push(level + 1);
    }
    for next in options {
        if upper.is_some_and(|u| next >= u[t + 1]) {
            continue;
        }
        if next > sink || sink - next > max_rise(bits, t + 1, next) {
            continue;
        }
        current.push(next);
        extend_paths(bits, upper, sink, current, out);
        current.pop();
    }
}

/// All non-crossing families `(π_0, ..., π_N)`, `N = N_λ`, with `π_n`
/// running from `μ_n + i - n` to `λ_n + i - n`.
pub fn enumerate_families(
    word: &BitString,
    mu: &Partition,
    lambda: &Partition,
    parity: u8,
) -> Result<Vec<PathFamily>> {
    word.require_alternating()?;
    if !mu.is_contained_in(lambda) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let n = lambda.max_index();
    let sources = index_set(mu, parity, n)?;
    let sinks = index_set(lambda, parity, n)?;
    let mut families: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for (&source, &sink) in sources.iter().zip(&sinks) {
        let mut next = Vec::new();
        for partial in families {
            let mut paths = Vec::new();
            extend_paths(
                word.bits(),
                partial.last().map(Vec::as_slice),
                sink,
                &mut vec![source],
                &mut paths,
            );
            for path in paths {
                let mut family = partial.clone();
                family.push(path);
                next.push(family);
            }
        }
        families = next;
    }
    Ok(families
        .into_iter()
        .map(|paths| PathFamily {
            word: word.clone(),
            parity,
            mu: mu.clone(),
            lambda: lambda.clone(),
            paths,
        })
        .collect())
}

/// `a^j` with `j_t` the number of climbs inside chip `t`.
pub fn family_weight(family: &PathFamily) -> MultiPoly {
    let exps = family.content().into_iter().map(|j| j as u32).collect();
    MultiPoly::monomial(exps, 1.into())
}

/// `Σ_π wt(π)` over non-crossing families.
pub fn lindstrom_minor(
    word: &BitString,
    mu: &Partition,
    lambda: &Partition,
    parity: u8,
) -> Result<MultiPoly> {
    Ok(enumerate_families(word, mu, lambda, parity)?
        .iter()
        .map(family_weight)
        .sum())
}

/// Row `n` lists the chips where `π_n` climbs. Only defined when the
/// family starts at the sources of `∅`.
pub fn path_to_tableau(family: &PathFamily) -> Result<ChessTableau> {
    if !family.mu.is_empty() {
        return Err(Error::Domain(format!(
            "tableau correspondence needs μ = ∅, got {}",
            family.mu
        )));
    }
    let rows: Vec<Vec<usize>> = (0..family.paths.len())
        .map(|n| family.ascents(n))
        .filter(|row| !row.is_empty())
        .collect();
    ChessTableau::from_rows(
        rows,
        chess_parity(family.parity, &family.word),
        family.word.len(),
    )
}

/// Text picture of a family: one line per level, top level first, chips
/// left to right; `o` marks a path vertex and `/` a climb.
pub fn render_ascii(family: &PathFamily) -> String {
    let k = family.word.len();
    let lo = family.paths.iter().flatten().copied().min().unwrap_or(0);
    let hi = family.paths.iter().flatten().copied().max().unwrap_or(0);
    let width = 4 * k + 1;
    let label_width = lo.to_string().len().max(hi.to_string().len());
    let mut lines = Vec::new();
    let header: String = (1..=k).map(|t| format!("  a{t}")).collect();
    lines.push(format!("{:label_width$}  {}", "", header.trim_end()));
    for level in (lo..=hi).rev() {
        if level < hi {
            let mut gap = vec![' '; width];
            for path in &family.paths {
                for t in 0..k {
                    if path[t] == level && path[t + 1] == level + 1 {
                        gap[4 * t + 2] = '/';
                    }
                }
            }
            lines.push(format!(
                "{:label_width$}  {}",
                "",
                gap.iter().collect::<String>().trim_end()
            ));
        }
        let mut row = vec![' '; width];
        for c in 0..=k {
            row[4 * c] = '.';
        }
        for path in &family.paths {
            for c in 0..=k {
                if path[c] == level {
                    row[4 * c] = 'o';
                }
                if c < k && path[c] == level && path[c + 1] == level {
                    row[4 * c + 1..4 * c + 4].copy_from_slice(&['-'; 3]);
                }
            }
        }
        lines.push(format!(
            "{level:>label_width$}  {}",
            row.iter().collect::<String>().trim_end()
        ));
    }
    lines.join("\n") + "\n"
}
