use std::sync::OnceLock;

use super::{Child, Family, Substitution, TileKind};
use crate::coords::{golden, Isometry, PlanePoint, Point10, Scalar};

/// Penrose kites and darts over `Z[ζ10]`, inflation `Φ`.
///
/// Both prototiles have their 72° (kite) or 36°-flanked (dart) apex at the
/// origin and their mirror axis along +x.
pub struct KiteDart;

fn phi_unit(k: i64) -> Point10 {
    Point10::unit(k).scale(&golden())
}

fn child(kind: TileKind, rotation: i64, translation: Point10) -> Child<Point10> {
    Child {
        kind,
        placement: Isometry::new(rotation, false, translation),
    }
}

fn build() -> [Vec<Child<Point10>>; 2] {
    let phi2 = golden().pow(2);
    let far = |k: i64| Point10::unit(k).scale(&phi2);
    let kite = vec![
        child(TileKind::Dart, -4, Point10::origin()),
        child(TileKind::Dart, 4, Point10::origin()),
        child(TileKind::Kite, 3, far(-1)),
        child(TileKind::Kite, -3, far(1)),
    ];
    let dart = vec![
        child(TileKind::Kite, 5, Point10::origin()),
        child(TileKind::Dart, -4, far(-4)),
        child(TileKind::Dart, 4, far(4)),
    ];
    [kite, dart]
}

impl Substitution for KiteDart {
    type Point = Point10;
    const FAMILY: Family = Family::Pkd;

    fn inflation() -> Scalar<crate::coords::Cyclo10> {
        golden()
    }

    fn prototile_loop(kind: TileKind) -> Vec<Point10> {
        match kind {
            TileKind::Kite => vec![Point10::origin(), phi_unit(-1), phi_unit(0), phi_unit(1)],
            TileKind::Dart => vec![
                Point10::origin(),
                phi_unit(4),
                Point10::unit(5),
                phi_unit(6),
            ],
            _ => Vec::new(),
        }
    }

    fn rule(kind: TileKind) -> &'static [Child<Point10>] {
        static RULES: OnceLock<[Vec<Child<Point10>>; 2]> = OnceLock::new();
        let rules = RULES.get_or_init(build);
        match kind {
            TileKind::Kite => &rules[0],
            TileKind::Dart => &rules[1],
            _ => &[],
        }
    }
}
