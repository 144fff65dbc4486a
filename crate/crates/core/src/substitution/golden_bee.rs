//! Derivation of the A2 golden bee.
//!
//! Searches right-angled L-hexagons whose six sides are powers of `λ` for a
//! decomposition `Ψ·H = g₁(H) ∪ g₂(λ·H)` with `g₁` a clockwise quarter turn
//! and `g₂` a vertical flip (plus translations). The frozen A2 prototile is
//! checked against this search in the tests.

use crate::coords::{lambda, psi, A2Point, Isometry, Lambda, PlanePoint, Scalar};

/// One decomposition of the large hexagon.
#[derive(Clone, Debug)]
pub struct GoldenBee {
    /// Counterclockwise loop of `H`, starting at its lowest-then-leftmost corner.
    pub large: Vec<A2Point>,
    /// `λ·H`.
    pub small: Vec<A2Point>,
    /// Places `H` inside `Ψ·H`.
    pub large_piece: Isometry<A2Point>,
    /// Places `λ·H` inside `Ψ·H`.
    pub small_piece: Isometry<A2Point>,
    /// Corners of the boundary shared by the two pieces.
    pub staircase: Vec<A2Point>,
}

fn power(e: i32) -> Scalar<Lambda> {
    if e < 0 {
        psi().pow((-e) as u32)
    } else {
        lambda().pow(e as u32)
    }
}

fn l_hexagon(
    w: &Scalar<Lambda>,
    h1: &Scalar<Lambda>,
    w2: &Scalar<Lambda>,
    h: &Scalar<Lambda>,
) -> Vec<A2Point> {
    let z = Scalar::zero();
    vec![
        A2Point::new(z.clone(), z.clone()),
        A2Point::new(w.clone(), z.clone()),
        A2Point::new(w.clone(), h1.clone()),
        A2Point::new(w2.clone(), h1.clone()),
        A2Point::new(w2.clone(), h.clone()),
        A2Point::new(z, h.clone()),
    ]
}

/// Translates so the bounding box starts at the origin and rotates the loop
/// to start at its lowest-then-leftmost corner.
fn normalize(poly: &[A2Point]) -> Vec<A2Point> {
    let min_by = |key: fn(&A2Point) -> &Scalar<Lambda>| {
        poly.iter()
            .map(key)
            .min_by(|a, b| a.value().total_cmp(&b.value()))
            .cloned()
            .expect("nonempty polygon")
    };
    let shift = A2Point::new(min_by(|p| &p.x), min_by(|p| &p.y));
    let moved: Vec<A2Point> = poly.iter().map(|p| p.sub(&shift)).collect();
    let start = (0..moved.len())
        .min_by(|&i, &j| {
            let (xi, yi) = moved[i].embed();
            let (xj, yj) = moved[j].embed();
            yi.total_cmp(&yj).then(xi.total_cmp(&xj))
        })
        .expect("nonempty polygon");
    let mut out = moved[start..].to_vec();
    out.extend_from_slice(&moved[..start]);
    out
}

fn inside(poly: &[(f64, f64)], (x, y): (f64, f64)) -> bool {
    let mut hit = false;
    let n = poly.len();
    for i in 0..n {
        let (x0, y0) = poly[i];
        let (x1, y1) = poly[(i + 1) % n];
        if (y0 > y) != (y1 > y) && x < x0 + (y - y0) * (x1 - x0) / (y1 - y0) {
            hit = !hit;
        }
    }
    hit
}

fn sorted_values(values: impl Iterator<Item = Scalar<Lambda>>) -> Vec<f64> {
    let mut v: Vec<Scalar<Lambda>> = values.collect();
    v.sort();
    v.dedup();
    let mut f: Vec<f64> = v.iter().map(Scalar::value).collect();
    f.sort_by(f64::total_cmp);
    f
}

/// Whether the rectilinear `pieces` tile `whole` with no overlap: every cell
/// of the common coordinate grid is covered exactly once inside `whole` and
/// never outside it. Grid lines come from exact coordinates; only cell
/// centres are floating point.
pub fn tiles_exactly(whole: &[A2Point], pieces: &[Vec<A2Point>]) -> bool {
    let all = || whole.iter().chain(pieces.iter().flatten());
    let xs = sorted_values(all().map(|p| p.x.clone()));
    let ys = sorted_values(all().map(|p| p.y.clone()));
    let whole_f: Vec<_> = whole.iter().map(PlanePoint::embed).collect();
    let pieces_f: Vec<Vec<_>> = pieces
        .iter()
        .map(|p| p.iter().map(PlanePoint::embed).collect())
        .collect();
    for xw in xs.windows(2) {
        for yw in ys.windows(2) {
            let c = ((xw[0] + xw[1]) / 2.0, (yw[0] + yw[1]) / 2.0);
            let want = usize::from(inside(&whole_f, c));
            let got = pieces_f.iter().filter(|p| inside(p, c)).count();
            if want != got {
                return false;
            }
        }
    }
    true
}

fn on_segment(p: &A2Point, a: &A2Point, b: &A2Point) -> bool {
    if p == a || p == b {
        return true;
    }
    if !p.sub(a).wedge(&b.sub(a)).is_zero() {
        return false;
    }
    let (px, py) = p.embed();
    let (ax, ay) = a.embed();
    let (bx, by) = b.embed();
    (px - ax) * (bx - px) + (py - ay) * (by - py) > 0.0
}

fn on_boundary(p: &A2Point, poly: &[A2Point]) -> bool {
    let n = poly.len();
    (0..n).any(|i| on_segment(p, &poly[i], &poly[(i + 1) % n]))
}

/// Corners of either polygon that lie on the other's boundary.
pub fn shared_corners(a: &[A2Point], b: &[A2Point]) -> Vec<A2Point> {
    let mut out: Vec<A2Point> = a
        .iter()
        .filter(|p| on_boundary(p, b))
        .chain(b.iter().filter(|p| on_boundary(p, a)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

fn bbox(poly: &[A2Point]) -> (f64, f64, f64, f64) {
    poly.iter().map(PlanePoint::embed).fold(
        (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ),
        |(a, b, c, d), (x, y)| (a.min(x), b.min(y), c.max(x), d.max(y)),
    )
}

fn fits(inner: &[A2Point], outer: (f64, f64, f64, f64)) -> bool {
    let (a, b, c, d) = bbox(inner);
    let eps = 1e-9;
    a >= outer.0 - eps && b >= outer.1 - eps && c <= outer.2 + eps && d <= outer.3 + eps
}

/// Candidate placements of `piece` under `linear` with a corner on a corner
/// of `whole`, kept if the placed piece stays inside the bounding box.
fn placements(
    piece: &[A2Point],
    whole: &[A2Point],
    linear: &Isometry<A2Point>,
) -> Vec<(Isometry<A2Point>, Vec<A2Point>)> {
    let outer = bbox(whole);
    let mut out = Vec::new();
    for v in whole {
        for h in piece {
            let t = v.sub(&linear.apply_linear(h));
            let g = Isometry::new(linear.rotation, linear.reflect, t);
            let placed: Vec<A2Point> = piece.iter().map(|p| g.apply(p)).collect();
            if fits(&placed, outer) && !out.iter().any(|(h, _): &(Isometry<A2Point>, _)| h == &g) {
                out.push((g, placed));
            }
        }
    }
    out
}

/// Every decomposition found, with `H` normalized and its longest side `Ψ`.
pub fn all_golden_bees() -> Vec<GoldenBee> {
    let range = -1..=6;
    let gaps = [2, 4];
    let mut found: Vec<GoldenBee> = Vec::new();
    for ew in range.clone() {
        for gw in gaps {
            for eh in range.clone() {
                for gh in gaps {
                    // outer side λ^e, inner side λ^(e+g), their difference
                    // λ^(e+g) · λ^-g (1 - λ^g) is again a power of λ
                    let (w, w2) = (power(ew), power(ew + gw));
                    let (h, h_step) = (power(eh), power(eh + gh));
                    let h1 = &h - &h_step;
                    let hull = [ew, ew + gw, eh, eh + gh];
                    if hull.iter().min() != Some(&-1) {
                        continue;
                    }
                    let base = l_hexagon(&w, &h1, &w2, &h);
                    for reflect in [false, true] {
                        for rotation in 0..4 {
                            let o = Isometry::new(rotation, reflect, A2Point::origin());
                            let mut shape: Vec<A2Point> = base.iter().map(|p| o.apply(p)).collect();
                            if reflect {
                                shape[1..].reverse();
                            }
                            let large = normalize(&shape);
                            if found.iter().any(|b| b.large == large) {
                                continue;
                            }
                            if let Some(bee) = decompose(&large) {
                                found.push(bee);
                            }
                        }
                    }
                }
            }
        }
    }
    found
}

fn decompose(large: &[A2Point]) -> Option<GoldenBee> {
    let small: Vec<A2Point> = large.iter().map(|p| p.scale(&lambda())).collect();
    let whole: Vec<A2Point> = large.iter().map(|p| p.scale(&psi())).collect();
    let quarter = Isometry::new(1, false, A2Point::origin());
    let flip = Isometry::new(0, true, A2Point::origin());
    for (g1, p1) in placements(large, &whole, &quarter) {
        for (g2, p2) in placements(&small, &whole, &flip) {
            if tiles_exactly(&whole, &[p1.clone(), p2.clone()]) {
                return Some(GoldenBee {
                    large: large.to_vec(),
                    small,
                    large_piece: g1,
                    small_piece: g2,
                    staircase: shared_corners(&p1, &p2),
                });
            }
        }
    }
    None
}

/// The golden bee used by the A2 family.
///
/// # Panics
///
/// If the search finds no decomposition, which means the ring arithmetic is
/// broken.
pub fn solve_golden_bee() -> GoldenBee {
    all_golden_bees()
        .into_iter()
        .next()
        .expect("no golden-bee decomposition: the λ-ring reduction is inconsistent")
}
