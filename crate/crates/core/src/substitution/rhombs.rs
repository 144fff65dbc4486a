use std::sync::OnceLock;

use super::{find_isometry, Child, Family, Substitution, TileKind};
use crate::coords::{golden, Cyclo10, PlanePoint, Point10, Scalar};

/// Penrose fat and thin rhombs over `Z[ζ10]`, inflation `Φ`.
///
/// A rhomb is two mirror-image Robinson triangles `(A, B, C)` and
/// `(B + C - A, B, C)` glued along `BC`. Its frame is the apex `A` with the
/// two labelled neighbours `B` and `C`; prototiles have `A` at the origin
/// and the `A`-axis along +y. The whole-rhomb rule is assembled from the
/// half-triangle subdivision, so children may overhang the parent.
pub struct PenroseRhombs;

/// Neighbours `B`, `C` of the apex in the prototile frame.
fn frame(kind: TileKind) -> (Point10, Point10) {
    match kind {
        TileKind::ThinRhomb => (Point10::unit(2), Point10::unit(3)),
        _ => (Point10::unit(1), Point10::unit(4)),
    }
}

/// Half-rhomb triangle: thin halves have the 36° apex, fat halves the 108° one.
type Half = (TileKind, Point10, Point10, Point10);

fn split(half: &Half) -> Vec<Half> {
    let (kind, a, b, c) = half;
    let phi = golden();
    let (sa, sb, sc) = (a.scale(&phi), b.scale(&phi), c.scale(&phi));
    match kind {
        TileKind::ThinRhomb => {
            let p = sa.add(&b.sub(a));
            vec![
                (TileKind::ThinRhomb, sc.clone(), p.clone(), sb),
                (TileKind::FatRhomb, p, sc, sa),
            ]
        }
        _ => {
            let q = sb.add(&a.sub(b));
            let r = sb.add(&c.sub(b));
            vec![
                (TileKind::FatRhomb, r.clone(), sc, sa.clone()),
                (TileKind::FatRhomb, q.clone(), r.clone(), sb),
                (TileKind::ThinRhomb, r, q, sa),
            ]
        }
    }
}

fn build_rule(kind: TileKind) -> Vec<Child<Point10>> {
    let (b, c) = frame(kind);
    let apex = Point10::origin();
    let opposite = b.add(&c);
    let mut out: Vec<Child<Point10>> = Vec::new();
    let mut seen = Vec::new();
    for half in [(kind, apex, b.clone(), c.clone()), (kind, opposite, b, c)] {
        for (k, a1, b1, c1) in split(&half) {
            let (pb, pc) = frame(k);
            let g = find_isometry(&[Point10::origin(), pb, pc], &[a1, b1, c1])
                .expect("Robinson triangle is congruent to a prototile half");
            let tile = super::Tile::place::<PenroseRhombs>(k, g.clone());
            let key = (k, tile.canonical_key());
            if !seen.contains(&key) {
                seen.push(key);
                out.push(Child {
                    kind: k,
                    placement: g,
                });
            }
        }
    }
    out
}

impl Substitution for PenroseRhombs {
    type Point = Point10;
    const FAMILY: Family = Family::Pr;

    fn inflation() -> Scalar<Cyclo10> {
        golden()
    }

    fn prototile_loop(kind: TileKind) -> Vec<Point10> {
        match kind {
            TileKind::FatRhomb | TileKind::ThinRhomb => {
                let (b, c) = frame(kind);
                vec![Point10::origin(), b.clone(), b.add(&c), c]
            }
            _ => Vec::new(),
        }
    }

    fn rule(kind: TileKind) -> &'static [Child<Point10>] {
        static RULES: OnceLock<[Vec<Child<Point10>>; 2]> = OnceLock::new();
        let rules = RULES.get_or_init(|| {
            [
                build_rule(TileKind::FatRhomb),
                build_rule(TileKind::ThinRhomb),
            ]
        });
        match kind {
            TileKind::FatRhomb => &rules[0],
            TileKind::ThinRhomb => &rules[1],
            _ => &[],
        }
    }
}
