//! Skew-shape modules over the preprojective algebra of type affine `A_1`,
//! and a brute-force counter for their flag varieties over `F_q`.
//!
//! Basis vector `v_{s,t}` sits at vertex `(s + t + i) mod 2`. Along a row,
//! `α` (from even boxes) and `β` (from odd boxes) move one box left; along a
//! column, `α*` (from odd boxes) and `β*` (from even boxes) move one box up.
//! With this orientation `δ = α + β` runs right to left in each row, so a
//! shape module of shape `λ` has `δ`-Jordan type `λ`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fq::FiniteField;
use crate::partitions::{Partition, SkewShape};
use crate::tableaux::{box_parity, enumerate_by_parity, ground_state, BitString};

/// Largest module dimension accepted by [`count_flags_fq`].
pub const MAX_FLAG_DIM: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    Alpha,
    Beta,
    AlphaStar,
    BetaStar,
}

impl Arrow {
    pub const ALL: [Arrow; 4] = [Arrow::Alpha, Arrow::Beta, Arrow::AlphaStar, Arrow::BetaStar];

    pub fn name(self) -> &'static str {
        match self {
            Arrow::Alpha => "alpha",
            Arrow::Beta => "beta",
            Arrow::AlphaStar => "alpha*",
            Arrow::BetaStar => "beta*",
        }
    }

    /// Vertex the arrow starts from.
    pub fn source_vertex(self) -> u8 {
        match self {
            Arrow::Alpha | Arrow::BetaStar => 0,
            Arrow::Beta | Arrow::AlphaStar => 1,
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Box reached from `(s, t)`, before checking membership in the shape.
    fn step(self, s: usize, t: usize, parity: u8) -> Option<(usize, usize)> {
        let even = box_parity(s, t, parity) == 0;
        match self {
            Arrow::Alpha if even => t.checked_sub(1).map(|t| (s, t)),
            Arrow::Beta if !even => t.checked_sub(1).map(|t| (s, t)),
            Arrow::AlphaStar if !even => s.checked_sub(1).map(|s| (s, t)),
            Arrow::BetaStar if even => s.checked_sub(1).map(|s| (s, t)),
            _ => None,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ShapeModule {
    shape: SkewShape,
    parity: u8,
    basis: Vec<(usize, usize)>,
    /// `action[arrow][k]` is the image of basis vector `k`, if nonzero.
    action: [Vec<Option<usize>>; 4],
}

/// The skew-shape module of shape `outer / inner` and parity `i`. The
/// preprojective relations are checked before returning.
pub fn build_module(outer: &Partition, inner: &Partition, parity: u8) -> Result<ShapeModule> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let basis: Vec<(usize, usize)> = shape.boxes().collect();
    let lookup: HashMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let action = Arrow::ALL.map(|arrow| {
        basis
            .iter()
            .map(|&(s, t)| {
                arrow
                    .step(s, t, parity)
                    .and_then(|target| lookup.get(&target).copied())
            })
            .collect()
    });
    let module = ShapeModule {
        shape,
        parity,
        basis,
        action,
    };
    module.check_relations()?;
    Ok(module)
}

impl ShapeModule {
    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// Vertex carrying basis vector `k`.
    pub fn vertex(&self, k: usize) -> u8 {
        let (s, t) = self.basis[k];
        box_parity(s, t, self.parity)
    }

    pub fn act(&self, arrow: Arrow, k: usize) -> Option<usize> {
        self.action[arrow.index()][k]
    }

    /// Nonzero actions as `(source box, arrow, target box)`, sorted.
    pub fn arrows(&self) -> Vec<((usize, usize), Arrow, (usize, usize))> {
        let mut out: Vec<_> = Arrow::ALL
            .iter()
            .flat_map(|&arrow| {
                (0..self.dim()).filter_map(move |k| {
                    self.act(arrow, k)
                        .map(|j| (self.basis[k], arrow, self.basis[j]))
                })
            })
            .collect();
        out.sort();
        out
    }

    /// `α*α = ββ*` and `β*β = αα*` on every basis vector, and every arrow
    /// respects the vertex grading.
    pub fn check_relations(&self) -> Result<()> {
        let compose = |first: Arrow, second: Arrow, k: usize| {
            self.act(first, k).and_then(|j| self.act(second, j))
        };
        for k in 0..self.dim() {
            let lhs = compose(Arrow::Alpha, Arrow::AlphaStar, k);
            let rhs = compose(Arrow::BetaStar, Arrow::Beta, k);
            if lhs != rhs {
                return Err(Error::Invariant(format!(
                    "α*α ≠ ββ* on v{:?}",
                    self.basis[k]
                )));
            }
            let lhs = compose(Arrow::Beta, Arrow::BetaStar, k);
            let rhs = compose(Arrow::AlphaStar, Arrow::Alpha, k);
            if lhs != rhs {
                return Err(Error::Invariant(format!(
                    "β*β ≠ αα* on v{:?}",
                    self.basis[k]
                )));
            }
            for arrow in Arrow::ALL {
                if let Some(j) = self.act(arrow, k) {
                    if self.vertex(k) != arrow.source_vertex()
                        || self.vertex(j) == arrow.source_vertex()
                    {
                        return Err(Error::Invariant(format!(
                            "{arrow} on v{:?} breaks the vertex grading",
                            self.basis[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let arrows: Vec<Value> = self
            .arrows()
            .into_iter()
            .map(|(src, arrow, dst)| json!([[src.0, src.1], arrow.name(), [dst.0, dst.1]]))
            .collect();
        json!({
            "outer": self.outer().to_string(),
            "inner": self.inner().to_string(),
            "parity": self.parity,
            "dim": self.dim(),
            "arrows": arrows,
        })
    }
}

fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..width {
                    let v = &m[rank][c] * &factor;
                    m[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Jordan type of `δ = α + β` acting on the module, from the ranks of the
/// powers of `δ` over `Q`.
pub fn delta_partition_type(module: &ShapeModule) -> Result<Partition> {
    let n = module.dim();
    let mut delta = vec![vec![BigRational::zero(); n]; n];
    for k in 0..n {
        for arrow in [Arrow::Alpha, Arrow::Beta] {
            if let Some(j) = module.act(arrow, k) {
                delta[j][k] += BigRational::one();
            }
        }
    }
    let mut ranks = vec![n];
    let mut power = identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::Invariant("δ is not nilpotent".into()));
        }
        power = mat_mul(&delta, &power);
        ranks.push(rational_rank(&power));
    }
    // number of Jordan blocks of size ≥ k is rank(δ^{k-1}) - rank(δ^k)
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, pair) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, pair - next));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += x * &b[k][j];
                }
            }
        }
    }
    out
}

/// The module split by vertex, with arrows as partial maps between the
/// per-vertex coordinate spaces.
struct GradedModule {
    /// `local[k]` = coordinate of basis vector `k` inside its vertex space.
    dims: [usize; 2],
    /// For each vertex `v`, the arrows leaving it as coordinate maps into
    /// vertex `1 - v`.
    maps: [Vec<Vec<Option<usize>>>; 2],
}

impl GradedModule {
    fn new(module: &ShapeModule) -> Self {
        let mut local = vec![0; module.dim()];
        let mut dims = [0usize; 2];
        for k in 0..module.dim() {
            let v = module.vertex(k) as usize;
            local[k] = dims[v];
            dims[v] += 1;
        }
        let mut maps: [Vec<Vec<Option<usize>>>; 2] = [Vec::new(), Vec::new()];
        for arrow in Arrow::ALL {
            let v = arrow.source_vertex() as usize;
            let mut map = vec![None; dims[v]];
            for k in 0..module.dim() {
                if module.vertex(k) as usize == v {
                    map[local[k]] = module.act(arrow, k).map(|j| local[j]);
                }
            }
            maps[v].push(map);
        }
        GradedModule { dims, maps }
    }

    /// Arrow images of the vertex-`v` part of a submodule, landing in
    /// vertex `1 - v`.
    fn images(&self, field: &FiniteField, v: usize, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let target_dim = self.dims[1 - v];
        let mut out = Vec::new();
        for map in &self.maps[v] {
            for row in rows {
                let mut img = vec![0u8; target_dim];
                for (c, &x) in row.iter().enumerate() {
                    if let Some(j) = map[c] {
                        img[j] = field.add(img[j], x);
                    }
                }
                out.push(img);
            }
        }
        out
    }
}

struct FlagCounter<'a> {
    field: FiniteField,
    graded: GradedModule,
    d: &'a [u8],
    memo: HashMap<[Vec<Vec<u8>>; 2], u64>,
}

impl FlagCounter<'_> {
    /// Composition series of the submodule `w` (per-vertex echelon bases)
    /// whose successive quotients follow `d[..dim w]`.
    fn count(&mut self, w: [Vec<Vec<u8>>; 2]) -> u64 {
        let m = w[0].len() + w[1].len();
        if m == 0 {
            return 1;
        }
        if let Some(&c) = self.memo.get(&w) {
            return c;
        }
        let top = self.d[m - 1] as usize;
        let other = 1 - top;
        // the radical of w at vertex `top`: images of the other vertex part
        let radical = self
            .field
            .rref(&self.graded.images(&self.field, other, &w[other]));
        // complete the radical to a basis of w[top]
        let mut extended = radical.clone();
        let mut complement = Vec::new();
        for row in &w[top] {
            if !self.field.in_span(&extended, row) {
                extended = self
                    .field
                    .rref(&[extended.as_slice(), std::slice::from_ref(row)].concat());
                complement.push(row.clone());
            }
        }
        let r = complement.len();
        let mut total = 0u64;
        for functional in projective_points(self.field.order(), r) {
            let pivot = functional
                .iter()
                .position(|&x| x != 0)
                .expect("normalized functional");
            let mut rows = radical.clone();
            for j in (0..r).filter(|&j| j != pivot) {
                let c = self.field.neg(functional[j]);
                rows.push(self.field.axpy(&complement[j], c, &complement[pivot]));
            }
            let mut next = w.clone();
            next[top] = self.field.rref(&rows);
            total = total
                .checked_add(self.count(next))
                .expect("flag count overflows u64");
        }
        self.memo.insert(w, total);
        total
    }
}

/// Nonzero vectors of `F_q^r` whose first nonzero coordinate is 1.
fn projective_points(q: u8, r: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for pivot in 0..r {
        let free = r - pivot - 1;
        let total = (q as usize).pow(free as u32);
        for mut code in 0..total {
            let mut v = vec![0u8; r];
            v[pivot] = 1;
            for slot in v.iter_mut().skip(pivot + 1) {
                *slot = (code % q as usize) as u8;
                code /= q as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Number of `F_q`-rational composition series `0 = M_0 ⊂ ... ⊂ M_n = M`
/// with `M_t / M_{t-1} ≅ S_{d_t}`, by exhaustive top-down enumeration of
/// maximal submodules.
pub fn count_flags_fq(module: &ShapeModule, d: &BitString, q: u64) -> Result<u64> {
    if module.dim() > MAX_FLAG_DIM {
        return Err(Error::Resource(format!(
            "module dimension {} exceeds the limit {MAX_FLAG_DIM}",
            module.dim()
        )));
    }
    let field = FiniteField::new(q)?;
    if d.len() != module.dim() {
        return Err(Error::Domain(format!(
            "bit string has length {}, module has dimension {}",
            d.len(),
            module.dim()
        )));
    }
    let graded = GradedModule::new(module);
    let full = [0, 1].map(|v| {
        (0..graded.dims[v])
            .map(|c| (0..graded.dims[v]).map(|j| u8::from(j == c)).collect())
            .collect()
    });
    let mut counter = FlagCounter {
        field,
        graded,
        d: d.bits(),
        memo: HashMap::new(),
    };
    Ok(counter.count(full))
}

/// `Σ_{T ∈ Tab^(i)(λ; d)} q^{gr(T)}`.
pub fn conjecture1_prediction(
    shape: &Partition,
    parity: u8,
    d: &BitString,
    q: u64,
) -> Result<BigInt> {
    Ok(enumerate_by_parity(shape, parity, d)?
        .iter()
        .map(|t| num_traits::pow(BigInt::from(q), ground_state(t, parity)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn column_module() {
        let m = build_module(&p("1,1"), &Partition::empty(), 0).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.arrows(), vec![((1, 0), Arrow::AlphaStar, (0, 0))]);
        assert_eq!(m.vertex(0), 0);
        assert_eq!(m.vertex(1), 1);
    }

    #[test]
    fn skew_example_matches_arrow_diagram() {
        let m = build_module(&p("4,3,2,2,1"), &p("2,1"), 0).unwrap();
        assert_eq!(m.dim(), 9);
        use Arrow::*;
        let mut expected = vec![
            ((0, 3), Beta, (0, 2)),
            ((1, 2), Beta, (1, 1)),
            ((1, 2), AlphaStar, (0, 2)),
            ((2, 1), AlphaStar, (1, 1)),
            ((2, 1), Beta, (2, 0)),
            ((3, 0), AlphaStar, (2, 0)),
            ((3, 1), Alpha, (3, 0)),
            ((3, 1), BetaStar, (2, 1)),
            ((4, 0), BetaStar, (3, 0)),
        ];
        expected.sort();
        assert_eq!(m.arrows(), expected);
    }

    #[test]
    fn zero_module() {
        let m = build_module(&Partition::empty(), &Partition::empty(), 1).unwrap();
        assert_eq!(m.dim(), 0);
        assert!(m.arrows().is_empty());
        assert_eq!(delta_partition_type(&m).unwrap(), Partition::empty());
    }

    #[test]
    fn non_contained_inner_is_rejected() {
        assert!(matches!(
            build_module(&p("2"), &p("1,1"), 0),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn delta_type_examples() {
        for parity in 0..2 {
            let m = build_module(&p("2,1"), &Partition::empty(), parity).unwrap();
            assert_eq!(delta_partition_type(&m).unwrap(), p("2,1"));
        }
        let m = build_module(&p("1,1"), &Partition::empty(), 0).unwrap();
        assert_eq!(delta_partition_type(&m).unwrap(), p("1,1"));
        let m = build_module(&p("4,2"), &Partition::empty(), 1).unwrap();
        assert_eq!(delta_partition_type(&m).unwrap(), p("4,2"));
    }

    #[test]
    fn relations_hold_on_every_small_skew_module() {
        for outer in Partition::all_up_to(5) {
            for inner in outer.subpartitions() {
                for parity in 0..2 {
                    build_module(&outer, &inner, parity).unwrap();
                }
            }
        }
    }

    #[test]
    fn flag_count_examples() {
        let col = build_module(&p("1,1"), &Partition::empty(), 0).unwrap();
        assert_eq!(count_flags_fq(&col, &b("0,1"), 2).unwrap(), 1);
        assert_eq!(count_flags_fq(&col, &b("1,0"), 2).unwrap(), 0);
        let hook = build_module(&p("2,1"), &Partition::empty(), 1).unwrap();
        assert_eq!(count_flags_fq(&hook, &b("1,0,0"), 2).unwrap(), 3);
    }

    #[test]
    fn flag_count_guards() {
        let big = build_module(&p("4,4"), &Partition::empty(), 0).unwrap();
        assert!(matches!(
            count_flags_fq(&big, &BitString::alternating(0, 8), 2),
            Err(Error::Resource(_))
        ));
        let col = build_module(&p("1,1"), &Partition::empty(), 0).unwrap();
        assert!(matches!(
            count_flags_fq(&col, &b("0,1"), 7),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            count_flags_fq(&col, &b("0"), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn semisimple_module_counts_full_flags() {
        // (1) / ∅ twice side by side is not a shape, but the skew shape
        // (2,1)/(1) has two boxes with no arrows between them.
        let m = build_module(&p("2,1"), &p("1"), 0).unwrap();
        assert!(m.arrows().is_empty());
        // both boxes sit at vertex 1: every line is a submodule
        for q in [2u64, 3, 4, 5] {
            assert_eq!(count_flags_fq(&m, &b("1,1"), q).unwrap(), q + 1);
        }
    }

    #[test]
    fn prediction_examples() {
        assert_eq!(
            conjecture1_prediction(&p("2,1"), 1, &b("1,0,0"), 2).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            conjecture1_prediction(&p("2,1"), 1, &b("1,0,0"), 1).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            conjecture1_prediction(&p("1,1"), 0, &b("1,0"), 3).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn json_shape() {
        let m = build_module(&p("1,1"), &Partition::empty(), 0).unwrap();
        assert_eq!(
            m.to_json().to_string(),
            r#"{"arrows":[[[1,0],"alpha*",[0,0]]],"dim":2,"inner":"","outer":"1,1","parity":0}"#
        );
    }
}
