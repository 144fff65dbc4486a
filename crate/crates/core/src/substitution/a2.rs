use std::sync::OnceLock;

use super::{Child, Family, Substitution, TileKind};
use crate::coords::{lambda, psi, A2Point, Isometry, Lambda, PlanePoint, Scalar};

/// Ammann A2 golden-bee hexagons over `Z[λ]`, inflation `Ψ = λ^{-1}`.
///
/// `Ψ·H` splits into `H` turned a quarter clockwise and `λ·H` flipped
/// vertically; see [`super::golden_bee`] for the derivation.
pub struct AmmannA2;

/// The large golden bee: an L-hexagon with sides `λ², λ³, λ⁴, λ, 1, Ψ`.
pub fn large_hex() -> Vec<A2Point> {
    let l = |k: u32| Scalar::<Lambda>::generator_pow(k);
    let zero = Scalar::zero();
    let one = Scalar::one();
    vec![
        A2Point::new(zero.clone(), zero.clone()),
        A2Point::new(l(2), zero.clone()),
        A2Point::new(l(2), l(3)),
        A2Point::new(one.clone(), l(3)),
        A2Point::new(one, psi()),
        A2Point::new(zero, psi()),
    ]
}

fn build() -> [Vec<Child<A2Point>>; 2] {
    let psi2 = psi().pow(2);
    let large = vec![
        Child {
            kind: TileKind::LargeHex,
            placement: Isometry::new(1, false, A2Point::new(Scalar::zero(), psi2)),
        },
        Child {
            kind: TileKind::SmallHex,
            placement: Isometry::new(0, true, A2Point::new(Scalar::zero(), Scalar::one())),
        },
    ];
    let small = vec![Child {
        kind: TileKind::LargeHex,
        placement: Isometry::identity(),
    }];
    [small, large]
}

impl Substitution for AmmannA2 {
    type Point = A2Point;
    const FAMILY: Family = Family::A2;

    fn inflation() -> Scalar<Lambda> {
        psi()
    }

    fn prototile_loop(kind: TileKind) -> Vec<A2Point> {
        match kind {
            TileKind::LargeHex => large_hex(),
            TileKind::SmallHex => large_hex().iter().map(|p| p.scale(&lambda())).collect(),
            _ => Vec::new(),
        }
    }

    fn rule(kind: TileKind) -> &'static [Child<A2Point>] {
        static RULES: OnceLock<[Vec<Child<A2Point>>; 2]> = OnceLock::new();
        let rules = RULES.get_or_init(build);
        match kind {
            TileKind::SmallHex => &rules[0],
            TileKind::LargeHex => &rules[1],
            _ => &[],
        }
    }
}
