//! Standard and chess tableaux, parity strings, the content expansion
//! `i^j`, flags of partitions and ground states.
//!
//! Labels are 1-origin; box coordinates `(row, col)` are 0-origin.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A finite word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("bit strings hold 0 or 1, got {b}")));
        }
        Ok(BitString(bits))
    }

    /// The alternating string of length `len` starting with `first`.
    pub fn alternating(first: u8, len: usize) -> Self {
        BitString((0..len).map(|t| (first + t as u8) % 2).collect())
    }

    /// Every bit string of length `len`, in lexicographic order.
    pub fn all(len: usize) -> Vec<BitString> {
        (0..1u32 << len)
            .map(|mask| {
                BitString(
                    (0..len)
                        .map(|t| ((mask >> (len - 1 - t)) & 1) as u8)
                        .collect(),
                )
            })
            .collect()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub(crate) fn require_alternating(&self) -> Result<()> {
        if self.is_alternating() {
            Ok(())
        } else {
            Err(Error::NotAlternating(self.to_string()))
        }
    }

    /// 1-origin positions of the nonzero bits.
    pub fn indicator(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(t, _)| t + 1)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.0.clone())
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .0
            .iter()
            .map(u8::to_string)
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(BitString::default());
        }
        let bits = s
            .split(',')
            .map(|b| match b.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(Error::Parse(format!("bad bit {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(BitString(bits))
    }
}

/// Parity of `s + t + i`.
pub fn box_parity(row: usize, col: usize, parity: u8) -> u8 {
    ((row + col + parity as usize) % 2) as u8
}

fn rows_to_json(rows: &[Vec<usize>]) -> Value {
    Value::from(
        rows.iter()
            .map(|r| Value::from(r.clone()))
            .collect::<Vec<_>>(),
    )
}

/// A filling with distinct labels, rows and columns strictly increasing.
/// The labels need not be `1..=n`; a general content bit string `q`
/// corresponds to the label set `[q]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Domain("tableau rows must be nonempty".into()));
        }
        let strict_rows = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let strict_cols = rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        let mut labels: Vec<usize> = rows.iter().flatten().copied().collect();
        labels.sort_unstable();
        let distinct = labels.windows(2).all(|w| w[0] < w[1]);
        if !(strict_rows && strict_cols && distinct) || labels.first() == Some(&0) {
            return Err(Error::Domain(format!("not a standard tableau: {rows:?}")));
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Labels in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels: Vec<usize> = self.rows.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels
    }

    /// `(row, col)` of a label.
    pub fn position(&self, label: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(s, row)| row.iter().position(|&x| x == label).map(|t| (s, t)))
    }

    /// Row-reading word, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Content bit string of length `n`: bit `t` is set iff `t` is a label.
    pub fn content(&self, n: usize) -> Result<BitString> {
        let mut bits = vec![0; n];
        for label in self.labels() {
            if label > n {
                return Err(Error::Domain(format!(
                    "label {label} exceeds content length {n}"
                )));
            }
            bits[label - 1] = 1;
        }
        BitString::new(bits)
    }

    pub fn to_json(&self) -> Value {
        rows_to_json(&self.rows)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// A semi-standard filling whose box parities match label parities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChessTableau {
    shape: Partition,
    parity: u8,
    rows: Vec<Vec<usize>>,
    content: Vec<usize>,
}

impl ChessTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `content[s - 1]` counts occurrences of label `s`.
    pub fn content(&self) -> &[usize] {
        &self.content
    }

    /// Validates a filling against the chess rules and computes its
    /// content over labels `1..=max_label`.
    pub fn from_rows(rows: Vec<Vec<usize>>, parity: u8, max_label: usize) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let mut content = vec![0; max_label];
        for (s, row) in rows.iter().enumerate() {
            for (t, &label) in row.iter().enumerate() {
                if label == 0 || label > max_label {
                    return Err(Error::Domain(format!(
                        "label {label} outside 1..={max_label}"
                    )));
                }
                if (label % 2) as u8 != box_parity(s, t, parity) {
                    return Err(Error::Domain(format!("box ({s},{t}) parity mismatch")));
                }
                if t > 0 && row[t - 1] >= label {
                    return Err(Error::Domain("rows must strictly increase".into()));
                }
                if s > 0 && rows[s - 1][t] > label {
                    return Err(Error::Domain("columns must weakly increase".into()));
                }
                content[label - 1] += 1;
            }
        }
        Ok(ChessTableau {
            shape,
            parity,
            rows,
            content,
        })
    }

    pub fn to_json(&self) -> Value {
        rows_to_json(&self.rows)
    }
}

impl fmt::Debug for ChessTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// All standard tableaux of shape `λ` with labels `1..=|λ|`, sorted
/// lexicographically by reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<StandardTableau> {
    fn grow(
        shape: &Partition,
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        total: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > total {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for s in 0..shape.len() {
            let len = rows[s].len();
            let fits = len < shape.part(s) && (s == 0 || rows[s - 1].len() > len);
            if fits {
                rows[s].push(next);
                grow(shape, rows, next + 1, total, out);
                rows[s].pop();
            }
        }
    }

    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    grow(shape, &mut rows, 1, shape.size(), &mut out);
    out.sort_by_cached_key(StandardTableau::reading_word);
    out
}

/// `d_t` = parity of the box holding the `t`-th smallest label.
pub fn parity_string(tableau: &StandardTableau, parity: u8) -> BitString {
    let mut located: Vec<(usize, u8)> = tableau
        .rows
        .iter()
        .enumerate()
        .flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .map(move |(t, &l)| (l, box_parity(s, t, parity)))
        })
        .collect();
    located.sort_unstable();
    BitString(located.into_iter().map(|(_, b)| b).collect())
}

/// `Tab^(i)(λ; d)`: standard tableaux whose `i`-parity string is `d`.
pub fn enumerate_by_parity(
    shape: &Partition,
    parity: u8,
    d: &BitString,
) -> Result<Vec<StandardTableau>> {
    if d.len() != shape.size() {
        return Err(Error::Domain(format!(
            "parity string has length {}, shape has {} boxes",
            d.len(),
            shape.size()
        )));
    }
    Ok(enumerate_standard(shape)
        .into_iter()
        .filter(|t| parity_string(t, parity) == *d)
        .collect())
}

/// Chess tableaux of shape `λ`, parity `i` and labels in `1..=k`, grouped
/// by content vector (length `k`).
pub fn enumerate_chess(
    shape: &Partition,
    parity: u8,
    max_label: usize,
) -> BTreeMap<Vec<usize>, Vec<ChessTableau>> {
    let boxes: Vec<(usize, usize)> = shape.boxes().collect();
    let mut rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&l| Vec::with_capacity(l))
        .collect();
    let mut out: BTreeMap<Vec<usize>, Vec<ChessTableau>> = BTreeMap::new();

    fn fill(
        boxes: &[(usize, usize)],
        idx: usize,
        rows: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        shape: &Partition,
        parity: u8,
        max_label: usize,
        out: &mut BTreeMap<Vec<usize>, Vec<ChessTableau>>,
    ) {
        let Some(&(s, t)) = boxes.get(idx) else {
            out.entry(content.clone()).or_default().push(ChessTableau {
                shape: shape.clone(),
                parity,
                rows: rows.clone(),
                content: content.clone(),
            });
            return;
        };
        let left = if t > 0 { rows[s][t - 1] + 1 } else { 1 };
        let above = if s > 0 { rows[s - 1][t] } else { 1 };
        let want = box_parity(s, t, parity) as usize;
        let mut label = left.max(above);
        if label % 2 != want {
            label += 1;
        }
        while label <= max_label {
            // the parity rule forces strict columns as well
            assert!(
                s == 0 || rows[s - 1][t] < label,
                "chess tableau with a repeated column label"
            );
            rows[s].push(label);
            content[label - 1] += 1;
            fill(boxes, idx + 1, rows, content, shape, parity, max_label, out);
            content[label - 1] -= 1;
            rows[s].pop();
            label += 2;
        }
    }

    let mut content = vec![0; max_label];
    fill(
        &boxes,
        0,
        &mut rows,
        &mut content,
        shape,
        parity,
        max_label,
        &mut out,
    );
    out
}

/// Smallest `s` (1-origin) with `j_1 + ... + j_s ≥ t`.
pub fn sigma(content: &[usize], position: usize) -> Result<usize> {
    let total: usize = content.iter().sum();
    if position == 0 || position > total {
        return Err(Error::Domain(format!(
            "position {position} outside 1..={total}"
        )));
    }
    let mut acc = 0;
    for (s, &j) in content.iter().enumerate() {
        acc += j;
        if acc >= position {
            return Ok(s + 1);
        }
    }
    unreachable!("position bounded by the content total")
}

/// `i^j`: the word `i` with its `s`-th letter repeated `j_s` times.
pub fn expand_word(word: &BitString, content: &[usize]) -> Result<BitString> {
    word.require_alternating()?;
    if word.len() != content.len() {
        return Err(Error::Domain(format!(
            "word has length {}, content has length {}",
            word.len(),
            content.len()
        )));
    }
    let bits = word
        .bits()
        .iter()
        .zip(content)
        .flat_map(|(&b, &j)| std::iter::repeat_n(b, j))
        .collect();
    Ok(BitString(bits))
}

/// Number of grounded `d`-transposition pairs of `T`, with `d` the
/// `i`-parity string of `T`.
pub fn ground_state(tableau: &StandardTableau, parity: u8) -> usize {
    let labels = tableau.labels();
    let d = parity_string(tableau, parity);
    let pos: Vec<(usize, usize)> = labels
        .iter()
        .map(|&l| tableau.position(l).expect("label present"))
        .collect();
    let mut grounded = 0;
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            if d.bits()[a] != d.bits()[b] {
                continue;
            }
            let ((row_s, col_s), (row_t, col_t)) = (pos[a], pos[b]);
            if row_s < row_t && col_t < col_s && swap_is_standard(tableau, labels[a], labels[b]) {
                grounded += 1;
            }
        }
    }
    grounded
}

fn swap_is_standard(tableau: &StandardTableau, x: usize, y: usize) -> bool {
    let rows = tableau
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&l| {
                    if l == x {
                        y
                    } else if l == y {
                        x
                    } else {
                        l
                    }
                })
                .collect()
        })
        .collect();
    StandardTableau::from_rows(rows).is_ok()
}

/// The flag `λ^(0) ⊆ ... ⊆ λ^(n)` where `λ^(t)` holds the boxes with label
/// at most `t`.
pub fn tableau_to_flag(tableau: &StandardTableau, n: usize) -> Vec<Partition> {
    (0..=n)
        .map(|t| {
            let parts = tableau
                .rows
                .iter()
                .map(|row| row.iter().filter(|&&l| l <= t).count())
                .collect();
            Partition::new(parts).expect("a standard tableau truncates to a partition")
        })
        .collect()
}

/// Inverse of [`tableau_to_flag`]: the box added between `λ^(t-1)` and
/// `λ^(t)` gets label `t`.
pub fn flag_to_tableau(flag: &[Partition]) -> Result<StandardTableau> {
    let first = flag
        .first()
        .ok_or_else(|| Error::Domain("empty flag".into()))?;
    if !first.is_empty() {
        return Err(Error::Domain(
            "flag must start at the empty partition".into(),
        ));
    }
    let last = flag.last().expect("nonempty");
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); last.len()];
    for (t, pair) in flag.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        match next.size().checked_sub(prev.size()) {
            Some(0) if prev == next => {}
            Some(1) if crate::partitions::contains(prev, next) => {
                let s = (0..next.len())
                    .find(|&s| next.part(s) != prev.part(s))
                    .expect("sizes differ by one");
                rows[s].push(t + 1);
            }
            _ => {
                return Err(Error::Domain(format!(
                    "flag step {prev:?} -> {next:?} is not a single box"
                )))
            }
        }
    }
    StandardTableau::from_rows(rows)
}

/// `T̄ ↦ T`: replace label `t` of a tableau in `Tab(λ)` by the `t`-th
/// element of `[q]`.
pub fn relabel(tableau: &StandardTableau, content: &BitString) -> Result<StandardTableau> {
    let targets = content.indicator();
    if targets.len() != tableau.shape.size() {
        return Err(Error::Domain(
            "content weight differs from the shape size".into(),
        ));
    }
    let rows = tableau
        .rows
        .iter()
        .map(|row| row.iter().map(|&l| targets[l - 1]).collect())
        .collect();
    StandardTableau::from_rows(rows)
}
