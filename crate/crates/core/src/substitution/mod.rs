//! Prototiles, substitution rules and patch generation.
//!
//! Every step multiplies the parent coordinates by the family's inflation
//! unit, so children always have prototile size and integral ring
//! coordinates.

mod a2;
mod ammann_beenker;
pub mod golden_bee;
mod kite_dart;
mod rhombs;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coords::{A2Point, Isometry, PlanePoint, Point10, Point8, Scalar};

pub use a2::AmmannA2;
pub use ammann_beenker::AmmannBeenker;
pub use kite_dart::KiteDart;
pub use rhombs::PenroseRhombs;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SubstitutionError {
    #[error("tile kind {kind} does not belong to family {family}")]
    WrongFamily { family: Family, kind: TileKind },
    #[error("generation {requested} exceeds the limit {limit} for family {family}")]
    GenerationLimit {
        family: Family,
        requested: u32,
        limit: u32,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown tile kind {0:?}")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Penrose kites and darts.
    Pkd,
    /// Penrose fat and thin rhombs.
    Pr,
    /// Ammann–Beenker rhombs and squares.
    Ab,
    /// Ammann A2 golden-bee hexagons.
    A2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Pkd, Family::Pr, Family::Ab, Family::A2];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pkd => "pkd",
            Family::Pr => "pr",
            Family::Ab => "ab",
            Family::A2 => "a2",
        }
    }

    pub fn kinds(self) -> [TileKind; 2] {
        match self {
            Family::Pkd => [TileKind::Kite, TileKind::Dart],
            Family::Pr => [TileKind::FatRhomb, TileKind::ThinRhomb],
            Family::Ab => [TileKind::Rhomb45, TileKind::Square],
            Family::A2 => [TileKind::SmallHex, TileKind::LargeHex],
        }
    }

    /// Default bound on `generate`.
    pub fn max_generation(self) -> u32 {
        match self {
            Family::A2 => 20,
            _ => 12,
        }
    }

    pub fn corners(self) -> usize {
        match self {
            Family::A2 => 6,
            _ => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SubstitutionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pkd" | "kite-dart" => Ok(Family::Pkd),
            "pr" | "rhomb" | "rhombs" => Ok(Family::Pr),
            "ab" | "ammann-beenker" => Ok(Family::Ab),
            "a2" => Ok(Family::A2),
            _ => Err(SubstitutionError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileKind {
    Kite,
    Dart,
    FatRhomb,
    ThinRhomb,
    Rhomb45,
    Square,
    SmallHex,
    LargeHex,
}

impl TileKind {
    pub fn family(self) -> Family {
        match self {
            TileKind::Kite | TileKind::Dart => Family::Pkd,
            TileKind::FatRhomb | TileKind::ThinRhomb => Family::Pr,
            TileKind::Rhomb45 | TileKind::Square => Family::Ab,
            TileKind::SmallHex | TileKind::LargeHex => Family::A2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TileKind::Kite => "kite",
            TileKind::Dart => "dart",
            TileKind::FatRhomb => "fat",
            TileKind::ThinRhomb => "thin",
            TileKind::Rhomb45 => "rhomb",
            TileKind::Square => "square",
            TileKind::SmallHex => "small",
            TileKind::LargeHex => "large",
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TileKind {
    type Err = SubstitutionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "kite" => TileKind::Kite,
            "dart" => TileKind::Dart,
            "fat" | "fatrhomb" => TileKind::FatRhomb,
            "thin" | "thinrhomb" => TileKind::ThinRhomb,
            "rhomb" | "rhomb45" | "rhombus" => TileKind::Rhomb45,
            "square" => TileKind::Square,
            "small" | "smallhex" => TileKind::SmallHex,
            "large" | "largehex" => TileKind::LargeHex,
            _ => return Err(SubstitutionError::UnknownKind(s.to_string())),
        })
    }
}

/// One child of a rule: its kind and its placement in the parent's
/// (already inflated) prototile frame.
#[derive(Clone, Debug)]
pub struct Child<P> {
    pub kind: TileKind,
    pub placement: Isometry<P>,
}

/// A tiling family: prototiles, inflation unit and rule table.
pub trait Substitution: Sized + Send + Sync + 'static {
    type Point: PlanePoint;
    const FAMILY: Family;

    /// Multiplier applied to all coordinates per generation.
    fn inflation() -> Scalar<<Self::Point as PlanePoint>::Ring>;

    /// Counterclockwise vertex loop of a prototile in its own frame.
    fn prototile_loop(kind: TileKind) -> Vec<Self::Point>;

    /// Children of a prototile placed by the identity.
    fn rule(kind: TileKind) -> &'static [Child<Self::Point>];

    fn check_kind(kind: TileKind) -> Result<(), SubstitutionError> {
        if kind.family() == Self::FAMILY {
            Ok(())
        } else {
            Err(SubstitutionError::WrongFamily {
                family: Self::FAMILY,
                kind,
            })
        }
    }

    fn prototile(kind: TileKind) -> Result<Tile<Self::Point>, SubstitutionError> {
        Self::check_kind(kind)?;
        Ok(Tile::place::<Self>(kind, Isometry::identity()))
    }
}

/// A placed tile: kind, placement of its prototile, and the resulting
/// counterclockwise vertex loop.
#[derive(Clone, Debug)]
pub struct Tile<P> {
    pub kind: TileKind,
    pub placement: Isometry<P>,
    pub vertices: Vec<P>,
}

impl<P: PlanePoint> Tile<P> {
    pub fn place<F: Substitution<Point = P>>(kind: TileKind, placement: Isometry<P>) -> Self {
        let mut vertices: Vec<P> = F::prototile_loop(kind)
            .iter()
            .map(|v| placement.apply(v))
            .collect();
        if placement.reflect {
            vertices[1..].reverse();
        }
        Tile {
            kind,
            placement,
            vertices,
        }
    }

    /// Sorted vertex list; two tiles coincide iff their keys are equal.
    pub fn canonical_key(&self) -> Vec<P> {
        let mut key = self.vertices.clone();
        key.sort();
        key
    }

    /// Consecutive vertex pairs around the loop.
    pub fn sides(&self) -> impl Iterator<Item = (&P, &P)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Shoelace area of the embedded loop.
    pub fn area(&self) -> f64 {
        let pts: Vec<(f64, f64)> = self.vertices.iter().map(PlanePoint::embed).collect();
        shoelace(&pts)
    }

    /// Exact squared side lengths around the loop.
    pub fn side_norms(&self) -> Vec<Scalar<P::Ring>> {
        self.sides().map(|(a, b)| b.sub(a).norm_key()).collect()
    }

    /// The tile after multiplying every coordinate by `unit`, without
    /// subdividing.
    pub fn inflated(&self, unit: &Scalar<P::Ring>) -> Self {
        Tile {
            kind: self.kind,
            placement: self.placement.inflated(unit),
            vertices: self.vertices.iter().map(|v| v.scale(unit)).collect(),
        }
    }

    /// The tile moved by an isometry.
    pub fn transformed(&self, g: &Isometry<P>) -> Self {
        let mut vertices: Vec<P> = self.vertices.iter().map(|v| g.apply(v)).collect();
        if g.reflect {
            vertices[1..].reverse();
        }
        Tile {
            kind: self.kind,
            placement: g.compose(&self.placement),
            vertices,
        }
    }
}

pub(crate) fn shoelace(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len();
    let mut s = 0.0;
    for i in 0..n {
        let (x0, y0) = pts[i];
        let (x1, y1) = pts[(i + 1) % n];
        s += x0 * y1 - x1 * y0;
    }
    s / 2.0
}

/// Children of a placed tile, in the next generation's coordinates.
pub fn subdivide<F: Substitution>(tile: &Tile<F::Point>) -> Vec<Tile<F::Point>> {
    let frame = tile.placement.inflated(&F::inflation());
    F::rule(tile.kind)
        .iter()
        .map(|c| Tile::place::<F>(c.kind, frame.compose(&c.placement)))
        .collect()
}

/// Removes exact duplicates (same kind and vertex set), keeping the first
/// occurrence, and returns the tiles in canonical order.
pub fn dedup_tiles<P: PlanePoint>(tiles: Vec<Tile<P>>) -> Vec<Tile<P>> {
    let mut seen: BTreeMap<(TileKind, Vec<P>), Tile<P>> = BTreeMap::new();
    for t in tiles {
        seen.entry((t.kind, t.canonical_key())).or_insert(t);
    }
    seen.into_values().collect()
}

/// A deduplicated set of tiles for one (family, seed, generation).
#[derive(Clone, Debug)]
pub struct Patch<P> {
    pub family: Family,
    pub seed: TileKind,
    pub generation: u32,
    pub tiles: Vec<Tile<P>>,
}

impl<P: PlanePoint> Patch<P> {
    /// Sum of embedded tile areas.
    pub fn area(&self) -> f64 {
        self.tiles.iter().map(Tile::area).sum()
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn count(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind == kind).count()
    }
}

/// Generates a patch with the family's default generation bound.
pub fn generate<F: Substitution>(
    seed: TileKind,
    generation: u32,
) -> Result<Patch<F::Point>, SubstitutionError> {
    generate_bounded::<F>(seed, generation, F::FAMILY.max_generation())
}

pub fn generate_bounded<F: Substitution>(
    seed: TileKind,
    generation: u32,
    limit: u32,
) -> Result<Patch<F::Point>, SubstitutionError> {
    if generation > limit {
        return Err(SubstitutionError::GenerationLimit {
            family: F::FAMILY,
            requested: generation,
            limit,
        });
    }
    let mut tiles = vec![F::prototile(seed)?];
    for _ in 0..generation {
        tiles = dedup_tiles(tiles.iter().flat_map(subdivide::<F>).collect());
    }
    Ok(Patch {
        family: F::FAMILY,
        seed,
        generation,
        tiles,
    })
}

/// A patch of any family, for code that picks the family at run time.
#[derive(Clone, Debug)]
pub enum AnyPatch {
    KiteDart(Patch<Point10>),
    Rhombs(Patch<Point10>),
    Beenker(Patch<Point8>),
    A2(Patch<A2Point>),
}

impl AnyPatch {
    pub fn generate(family: Family, seed: TileKind, n: u32) -> Result<Self, SubstitutionError> {
        Self::generate_bounded(family, seed, n, family.max_generation())
    }

    pub fn generate_bounded(
        family: Family,
        seed: TileKind,
        n: u32,
        limit: u32,
    ) -> Result<Self, SubstitutionError> {
        Ok(match family {
            Family::Pkd => AnyPatch::KiteDart(generate_bounded::<KiteDart>(seed, n, limit)?),
            Family::Pr => AnyPatch::Rhombs(generate_bounded::<PenroseRhombs>(seed, n, limit)?),
            Family::Ab => AnyPatch::Beenker(generate_bounded::<AmmannBeenker>(seed, n, limit)?),
            Family::A2 => AnyPatch::A2(generate_bounded::<AmmannA2>(seed, n, limit)?),
        })
    }

    pub fn family(&self) -> Family {
        match self {
            AnyPatch::KiteDart(_) => Family::Pkd,
            AnyPatch::Rhombs(_) => Family::Pr,
            AnyPatch::Beenker(_) => Family::Ab,
            AnyPatch::A2(_) => Family::A2,
        }
    }

    pub fn seed(&self) -> TileKind {
        match self {
            AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => p.seed,
            AnyPatch::Beenker(p) => p.seed,
            AnyPatch::A2(p) => p.seed,
        }
    }

    pub fn generation(&self) -> u32 {
        match self {
            AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => p.generation,
            AnyPatch::Beenker(p) => p.generation,
            AnyPatch::A2(p) => p.generation,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => p.len(),
            AnyPatch::Beenker(p) => p.len(),
            AnyPatch::A2(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Kinds and embedded vertex loops, in canonical tile order.
    pub fn embedded_tiles(&self) -> Vec<(TileKind, Vec<(f64, f64)>)> {
        fn emb<P: PlanePoint>(p: &Patch<P>) -> Vec<(TileKind, Vec<(f64, f64)>)> {
            p.tiles
                .iter()
                .map(|t| (t.kind, t.vertices.iter().map(PlanePoint::embed).collect()))
                .collect()
        }
        match self {
            AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => emb(p),
            AnyPatch::Beenker(p) => emb(p),
            AnyPatch::A2(p) => emb(p),
        }
    }
}

/// The first isometry (rotations before reflections) mapping `from[i]` to
/// `to[i]` for every `i`.
pub fn find_isometry<P: PlanePoint>(from: &[P], to: &[P]) -> Option<Isometry<P>> {
    for reflect in [false, true] {
        for rotation in 0..P::TURN {
            let linear = Isometry::new(rotation, reflect, P::origin());
            let t = to[0].sub(&linear.apply_linear(&from[0]));
            let g = Isometry::new(rotation, reflect, t);
            if from.iter().zip(to).all(|(a, b)| &g.apply(a) == b) {
                return Some(g);
            }
        }
    }
    None
}
