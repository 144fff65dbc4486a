//! Closed-form vertex and degree counts for the A2 tiling.
//!
//! A2-k is the patch grown from one small hexagon in `k - 1` steps; from
//! A2-3 on it is A2-(k-1) pasted to A2-(k-2) along a staircase. Counts are
//! exact: recursions over integers and closed forms over `Q(√5)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coords::{A2Point, Isometry, PlanePoint, Scalar};
use crate::golden::QSqrt5;
use crate::graph::TilingGraph;
use crate::substitution::{generate_bounded, AmmannA2, Patch, Tile, TileKind};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum A2Error {
    #[error("generation index must be at least {min}, got {got}")]
    IndexTooSmall { min: u32, got: u32 },
}

fn at_least(k: u32, min: u32) -> Result<(), A2Error> {
    if k < min {
        Err(A2Error::IndexTooSmall { min, got: k })
    } else {
        Ok(())
    }
}

/// `F(n)` by iteration, `F(0) = 0`.
pub fn fib(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// `F(n) = (φⁿ - (1-φ)ⁿ)/√5`, evaluated exactly.
pub fn fib_binet(n: u32) -> QSqrt5 {
    let diff = QSqrt5::phi().pow(n) - QSqrt5::phi_conj().pow(n);
    &diff / &QSqrt5::sqrt5()
}

/// Side labels along the pasting line of A2-k, `k >= 7`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelList {
    pub k: u32,
    pub labels: Vec<u8>,
}

impl LabelList {
    /// One pasting step: 4 → 3, 3 → 2, 2 → 1, 1 → (2, 4).
    pub fn next(&self) -> LabelList {
        let labels = self
            .labels
            .iter()
            .flat_map(|&l| match l {
                1 => vec![2, 4],
                other => vec![other - 1],
            })
            .collect();
        LabelList {
            k: self.k + 1,
            labels,
        }
    }

    pub fn ones(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 1).count()
    }
}

pub fn label_list(k: u32) -> Result<LabelList, A2Error> {
    at_least(k, 7)?;
    let mut l = LabelList {
        k: 7,
        labels: vec![1, 2, 3],
    };
    while l.k < k {
        l = l.next();
    }
    Ok(l)
}

/// `D_k`, the interior vertices of the pasting line of A2-(k+6).
pub fn middle_points(k: u32) -> Result<BigInt, A2Error> {
    at_least(k, 1)?;
    Ok(match k {
        1 => BigInt::from(2),
        2 => BigInt::from(3),
        _ => fib(k / 2 + 3) + fib((k - 1) / 2 + 2) - 1,
    })
}

/// `D_k` as `D_1` plus the per-step increments `F(j+1)` and `F(i)`.
pub fn middle_points_by_increments(k: u32) -> Result<BigInt, A2Error> {
    at_least(k, 1)?;
    if k == 1 {
        return Ok(BigInt::from(2));
    }
    let a: BigInt = (1..=k / 2).map(|j| fib(j + 1)).sum();
    let b: BigInt = (1..=(k - 1) / 2).map(fib).sum();
    Ok(BigInt::from(2) + a + b)
}

const TABLE: [(i64, i64); 8] = [
    (6, 12),
    (6, 12),
    (9, 20),
    (12, 28),
    (18, 44),
    (26, 66),
    (40, 104),
    (61, 162),
];

fn recurse(k: u32, pick: fn((i64, i64)) -> i64, loss: fn(BigInt) -> BigInt) -> BigInt {
    if k <= 8 {
        return BigInt::from(pick(TABLE[k as usize - 1]));
    }
    let mut prev = BigInt::from(pick(TABLE[6]));
    let mut cur = BigInt::from(pick(TABLE[7]));
    for j in 7..k - 1 {
        let d = middle_points(j - 4).expect("index at least 3");
        let next = &cur + &prev - loss(d);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Vertex count of A2-k: the hand counts up to k = 8, then
/// `V(k+2) = V(k+1) + V(k) - 2 - D_{k-4}`.
pub fn v_count(k: u32) -> Result<BigInt, A2Error> {
    at_least(k, 1)?;
    Ok(recurse(k, |r| r.0, |d| d + 2))
}

/// Total degree of A2-k: the hand counts up to k = 8, then
/// `T(k+2) = T(k+1) + T(k) - 2 - 2 D_{k-4}`.
pub fn t_count(k: u32) -> Result<BigInt, A2Error> {
    at_least(k, 1)?;
    Ok(recurse(k, |r| r.1, |d| d * 2 + 2))
}

fn f(n: u32) -> QSqrt5 {
    fib_binet(n)
}

fn homogeneous(k: u32, c: &QSqrt5) -> QSqrt5 {
    let m = k - 7;
    &(c * &QSqrt5::phi().pow(m)) + &(&c.conj() * &QSqrt5::phi_conj().pow(m))
}

/// Dominant coefficient of `V(k)`: `31/2 + 69/(2√5)`.
pub fn v_leading() -> QSqrt5 {
    QSqrt5::from_ratios(31, 2, 69, 10)
}

/// Dominant coefficient of `T(k)`: `44 + 98/√5`.
pub fn t_leading() -> QSqrt5 {
    QSqrt5::from_ratios(44, 1, 98, 5)
}

/// Closed form of `V(k)` for `k >= 7`, as an element of `Q(√5)`.
pub fn v_closed(k: u32) -> Result<QSqrt5, A2Error> {
    at_least(k, 7)?;
    let half = QSqrt5::from_ratios(1, 2, 0, 1);
    let two = QSqrt5::integer(2);
    let particular = if k.is_multiple_of(2) {
        let h = k / 2;
        let s = &(&half * &f(h)) + &f(h + 1);
        let s = &s + &(&two * &f(h - 1));
        &(&QSqrt5::one() + &s) - &(&half * &f(h - 3))
    } else {
        let s = &(&two * &f(k.div_ceil(2))) + &f((k - 1) / 2);
        &QSqrt5::one() + &s
    };
    Ok(&particular + &homogeneous(k, &v_leading()))
}

/// Closed form of `T(k)` for `k >= 7`.
pub fn t_closed(k: u32) -> Result<QSqrt5, A2Error> {
    at_least(k, 7)?;
    let n = |c: i64| QSqrt5::integer(c);
    let particular = if k.is_multiple_of(2) {
        let h = k / 2;
        let s = &f(h) + &(&n(2) * &f(h + 1));
        let s = &s + &(&n(4) * &f(h - 1));
        &s - &f(h - 3)
    } else {
        &(&n(4) * &f(k.div_ceil(2))) + &(&n(2) * &f((k - 1) / 2))
    };
    Ok(&particular + &homogeneous(k, &t_leading()))
}

/// One generation's counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Counts {
    pub k: u32,
    pub vertices: BigInt,
    pub total_degree: BigInt,
}

impl A2Counts {
    pub fn of(k: u32) -> Result<Self, A2Error> {
        Ok(A2Counts {
            k,
            vertices: v_count(k)?,
            total_degree: t_count(k)?,
        })
    }

    pub fn average(&self) -> BigRational {
        BigRational::new(self.total_degree.clone(), self.vertices.clone())
    }
}

pub fn avg_degree(k: u32) -> Result<BigRational, A2Error> {
    Ok(A2Counts::of(k)?.average())
}

/// The limiting average degree `(44 + 98/√5) / (31/2 + 69/(2√5))`, exactly
/// and as a double.
pub fn limit_avg_degree() -> (QSqrt5, f64) {
    let exact = &t_leading() / &v_leading();
    let value = exact.to_f64();
    (exact, value)
}

/// The A2-k patch (`k - 1` substitution steps from a small hexagon).
pub fn a2_patch(k: u32) -> Result<Patch<A2Point>, A2Error> {
    at_least(k, 1)?;
    Ok(
        generate_bounded::<AmmannA2>(TileKind::SmallHex, k - 1, u32::MAX)
            .expect("A2 seed is valid"),
    )
}

/// One row of [`verify_against_graphs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCheck {
    pub k: u32,
    pub graph: (u64, u64),
    pub formula: (BigInt, BigInt),
}

impl GraphCheck {
    pub fn matches(&self) -> bool {
        BigInt::from(self.graph.0) == self.formula.0 && BigInt::from(self.graph.1) == self.formula.1
    }
}

#[derive(Clone, Debug)]
pub struct GraphReport {
    pub rows: Vec<GraphCheck>,
}

impl GraphReport {
    pub fn first_mismatch(&self) -> Option<u32> {
        self.rows.iter().find(|r| !r.matches()).map(|r| r.k)
    }

    pub fn all_match(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Default upper bound for [`verify_against_graphs`].
pub const GRAPH_CHECK_BOUND: u32 = 16;

/// Builds A2-1 … A2-`max_k` and compares full-graph `(V, T)` with the
/// counts above. `max_k` is clamped to [`GRAPH_CHECK_BOUND`].
pub fn verify_against_graphs(max_k: u32) -> GraphReport {
    let max_k = max_k.min(GRAPH_CHECK_BOUND);
    let mut rows = Vec::new();
    let mut patch = a2_patch(1).expect("k >= 1");
    for k in 1..=max_k {
        if k > 1 {
            let tiles = patch
                .tiles
                .iter()
                .flat_map(crate::substitution::subdivide::<AmmannA2>)
                .collect();
            patch.tiles = crate::substitution::dedup_tiles(tiles);
            patch.generation += 1;
        }
        let g = TilingGraph::from_patch(&patch);
        rows.push(GraphCheck {
            k,
            graph: (g.vertex_count() as u64, g.total_degree()),
            formula: (v_count(k).expect("k >= 1"), t_count(k).expect("k >= 1")),
        });
    }
    GraphReport { rows }
}

/// Placements of A2-(k-1) and A2-(k-2) inside A2-k, `k >= 3`: a clockwise
/// quarter turn and a vertical flip.
pub fn pasting_maps(k: u32) -> Result<(Isometry<A2Point>, Isometry<A2Point>), A2Error> {
    at_least(k, 3)?;
    let psi = crate::coords::psi();
    let turned = Isometry::new(1, false, A2Point::new(Scalar::zero(), psi.pow(k - 1)));
    let flipped = Isometry::new(0, true, A2Point::new(Scalar::zero(), psi.pow(k - 3)));
    Ok((turned, flipped))
}

/// Vertices of A2-k on the line where its two sub-patches meet, with their
/// degrees in A2-k. Endpoints come first.
#[derive(Clone, Debug)]
pub struct PastingLine {
    pub endpoints: [u32; 2],
    pub interior: Vec<u32>,
}

fn covers(graph: &TilingGraph<A2Point>, p: &A2Point) -> bool {
    if graph.vertices.binary_search(p).is_ok() {
        return true;
    }
    let (px, py) = p.embed();
    graph.edges.iter().any(|&(i, j)| {
        let (a, b) = (&graph.vertices[i], &graph.vertices[j]);
        let (ax, ay) = a.embed();
        let (bx, by) = b.embed();
        let inside = (px - ax) * (bx - px) + (py - ay) * (by - py) > 0.0;
        inside
            && px >= ax.min(bx) - 1e-9
            && px <= ax.max(bx) + 1e-9
            && py >= ay.min(by) - 1e-9
            && py <= ay.max(by) + 1e-9
            && p.sub(a).wedge(&b.sub(a)).is_zero()
    })
}

/// The pasting line of A2-k, `k >= 3`.
pub fn pasting_line(k: u32) -> Result<PastingLine, A2Error> {
    at_least(k, 3)?;
    let (turned, flipped) = pasting_maps(k)?;
    let place = |p: Patch<A2Point>, g: &Isometry<A2Point>| -> Vec<Tile<A2Point>> {
        p.tiles.iter().map(|t| t.transformed(g)).collect()
    };
    let upper = place(a2_patch(k - 1)?, &turned);
    let lower = place(a2_patch(k - 2)?, &flipped);
    let gu = TilingGraph::from_tiles(&upper);
    let gl = TilingGraph::from_tiles(&lower);
    let mut all = upper;
    all.extend(lower);
    let whole = TilingGraph::from_tiles(&all);

    let on_line: Vec<usize> = (0..whole.vertex_count())
        .filter(|&i| covers(&gu, &whole.vertices[i]) && covers(&gl, &whole.vertices[i]))
        .collect();
    let neighbours = |i: usize| {
        whole
            .edges
            .iter()
            .filter(|&&(a, b)| (a == i && on_line.contains(&b)) || (b == i && on_line.contains(&a)))
            .count()
    };
    let mut endpoints = Vec::new();
    let mut interior = Vec::new();
    for &i in &on_line {
        if neighbours(i) <= 1 {
            endpoints.push(whole.degree[i]);
        } else {
            interior.push(whole.degree[i]);
        }
    }
    endpoints.sort_unstable();
    let endpoints = match endpoints[..] {
        [a, b] => [a, b],
        _ => [0, 0],
    };
    Ok(PastingLine {
        endpoints,
        interior,
    })
}
