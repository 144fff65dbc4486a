use std::sync::OnceLock;

use super::{Child, Family, Substitution, TileKind};
use crate::coords::{silver, Cyclo8, Isometry, PlanePoint, Point8, Scalar};

/// Ammann–Beenker rhombs and squares over `Z[ζ8]`, inflation `1 + √2`.
///
/// The rhomb rule is symmetric under the rhomb's own symmetries. The square
/// rule is only symmetric about the diagonal through its first vertex, so a
/// square's frame is fixed by which corner comes first.
pub struct AmmannBeenker;

fn child(kind: TileKind, rotation: i64, translation: Point8) -> Child<Point8> {
    Child {
        kind,
        placement: Isometry::new(rotation, false, translation),
    }
}

fn build() -> [Vec<Child<Point8>>; 2] {
    use TileKind::{Rhomb45 as R, Square as S};
    let d = Point8::new(silver());
    let di = d.rotate(2);
    let dz = d.rotate(1);
    // far corners of the inflated rhomb and square
    let w = d.add(&dz);
    let ws = d.add(&di);
    let centre = Point8::unit(0).add(&Point8::unit(1)).add(&Point8::unit(2));
    let rhomb = vec![
        child(R, 0, Point8::origin()),
        child(R, 2, d.clone()),
        child(R, 4, w),
        child(S, 3, d.clone()),
        child(S, 4, dz.clone()),
        child(S, 7, dz),
        child(S, 0, d.clone()),
    ];
    let square = vec![
        child(R, 0, Point8::origin()),
        child(R, 1, Point8::origin()),
        child(R, 2, d.clone()),
        child(R, 7, di.clone()),
        child(S, 4, centre),
        child(S, 3, d),
        child(S, 5, di),
        child(S, 5, ws.clone()),
        child(S, 3, ws),
    ];
    [rhomb, square]
}

impl Substitution for AmmannBeenker {
    type Point = Point8;
    const FAMILY: Family = Family::Ab;

    fn inflation() -> Scalar<Cyclo8> {
        silver()
    }

    fn prototile_loop(kind: TileKind) -> Vec<Point8> {
        let loop_of = |k: i64| {
            let one = Point8::unit(0);
            let side = Point8::unit(k);
            vec![Point8::origin(), one.clone(), one.add(&side), side]
        };
        match kind {
            TileKind::Rhomb45 => loop_of(1),
            TileKind::Square => loop_of(2),
            _ => Vec::new(),
        }
    }

    fn rule(kind: TileKind) -> &'static [Child<Point8>] {
        static RULES: OnceLock<[Vec<Child<Point8>>; 2]> = OnceLock::new();
        let rules = RULES.get_or_init(build);
        match kind {
            TileKind::Rhomb45 => &rules[0],
            TileKind::Square => &rules[1],
            _ => &[],
        }
    }
}
