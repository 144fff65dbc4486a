//! JSON patch files with exact coordinates.
//!
//! Every vertex is a list of coefficient vectors: one for the cyclotomic
//! families, two (x then y) for A2. Coefficients are JSON integers, or
//! decimal strings once they leave the `i64` range.

use aperiodic::coords::{A2Point, CycloPoint, Cyclotomic, PlanePoint, Scalar};
use aperiodic::substitution::{
    find_isometry, AmmannA2, AmmannBeenker, AnyPatch, Family, KiteDart, Patch, PenroseRhombs,
    Substitution, Tile, TileKind,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const EMBEDDING_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64()
            .map_or_else(|| Coeff::Text(n.to_string()), Coeff::Int)
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            Coeff::Int(n) => Ok(BigInt::from(*n)),
            Coeff::Text(s) => s
                .parse()
                .map_err(|e| CliError::data(format!("coefficient {s:?}"), e)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileEntry {
    pub kind: String,
    pub vertices: Vec<Vec<Vec<Coeff>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PatchFile {
    pub family: String,
    pub seed_kind: String,
    pub generation: u32,
    pub embedding_version: u32,
    pub tiles: Vec<TileEntry>,
}

/// Points that can be written as, and read from, coefficient vectors.
pub trait ExactPoint: PlanePoint {
    fn to_vectors(&self) -> Vec<Vec<Coeff>>;
    fn from_vectors(v: &[Vec<Coeff>]) -> Result<Self>;
}

fn scalar_vector<R: aperiodic::coords::RingSpec>(s: &Scalar<R>) -> Vec<Coeff> {
    s.coeffs().iter().map(Coeff::from_big).collect()
}

fn vector_scalar<R: aperiodic::coords::RingSpec>(v: &[Coeff]) -> Result<Scalar<R>> {
    if v.len() != 4 {
        return Err(CliError::Data(format!(
            "expected 4 coefficients, found {}",
            v.len()
        )));
    }
    let c = [
        v[0].to_big()?,
        v[1].to_big()?,
        v[2].to_big()?,
        v[3].to_big()?,
    ];
    Ok(Scalar::from_coeffs(c))
}

impl<R: Cyclotomic> ExactPoint for CycloPoint<R> {
    fn to_vectors(&self) -> Vec<Vec<Coeff>> {
        vec![scalar_vector(self.scalar())]
    }

    fn from_vectors(v: &[Vec<Coeff>]) -> Result<Self> {
        match v {
            [s] => Ok(CycloPoint::new(vector_scalar(s)?)),
            _ => Err(CliError::Data(format!(
                "expected 1 coefficient vector per vertex, found {}",
                v.len()
            ))),
        }
    }
}

impl ExactPoint for A2Point {
    fn to_vectors(&self) -> Vec<Vec<Coeff>> {
        vec![scalar_vector(&self.x), scalar_vector(&self.y)]
    }

    fn from_vectors(v: &[Vec<Coeff>]) -> Result<Self> {
        match v {
            [x, y] => Ok(A2Point::new(vector_scalar(x)?, vector_scalar(y)?)),
            _ => Err(CliError::Data(format!(
                "expected 2 coefficient vectors per vertex, found {}",
                v.len()
            ))),
        }
    }
}

fn entries<P: ExactPoint>(p: &Patch<P>) -> Vec<TileEntry> {
    p.tiles
        .iter()
        .map(|t| TileEntry {
            kind: t.kind.name().to_string(),
            vertices: t.vertices.iter().map(ExactPoint::to_vectors).collect(),
        })
        .collect()
}

impl PatchFile {
    pub fn from_patch(patch: &AnyPatch) -> Self {
        let tiles = match patch {
            AnyPatch::KiteDart(p) | AnyPatch::Rhombs(p) => entries(p),
            AnyPatch::Beenker(p) => entries(p),
            AnyPatch::A2(p) => entries(p),
        };
        PatchFile {
            family: patch.family().name().to_string(),
            seed_kind: patch.seed().name().to_string(),
            generation: patch.generation(),
            embedding_version: EMBEDDING_VERSION,
            tiles,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("patch files always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::data("patch file", e))
    }

    pub fn to_patch(&self) -> Result<AnyPatch> {
        if self.embedding_version != EMBEDDING_VERSION {
            return Err(CliError::Data(format!(
                "unsupported embeddingVersion {}",
                self.embedding_version
            )));
        }
        let family: Family = self
            .family
            .parse()
            .map_err(|e| CliError::data("family", e))?;
        let seed: TileKind = self
            .seed_kind
            .parse()
            .map_err(|e| CliError::data("seedKind", e))?;
        if seed.family() != family {
            return Err(CliError::Data(format!(
                "seed kind {seed} is not a {family} tile"
            )));
        }
        Ok(match family {
            Family::Pkd => AnyPatch::KiteDart(self.tiles_of::<KiteDart>(seed)?),
            Family::Pr => AnyPatch::Rhombs(self.tiles_of::<PenroseRhombs>(seed)?),
            Family::Ab => AnyPatch::Beenker(self.tiles_of::<AmmannBeenker>(seed)?),
            Family::A2 => AnyPatch::A2(self.tiles_of::<AmmannA2>(seed)?),
        })
    }

    fn tiles_of<F: Substitution>(&self, seed: TileKind) -> Result<Patch<F::Point>>
    where
        F::Point: ExactPoint,
    {
        let tiles = self
            .tiles
            .iter()
            .enumerate()
            .map(|(i, e)| read_tile::<F>(e).map_err(|err| CliError::data(format!("tile {i}"), err)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Patch {
            family: F::FAMILY,
            seed,
            generation: self.generation,
            tiles,
        })
    }
}

/// Rebuilds the placement of a stored tile; the vertex loop must be a
/// congruent copy of its prototile.
fn read_tile<F: Substitution>(e: &TileEntry) -> Result<Tile<F::Point>>
where
    F::Point: ExactPoint,
{
    let kind: TileKind = e.kind.parse().map_err(|err| CliError::data("kind", err))?;
    F::check_kind(kind).map_err(|err| CliError::Data(err.to_string()))?;
    let vertices = e
        .vertices
        .iter()
        .map(|v| F::Point::from_vectors(v))
        .collect::<Result<Vec<_>>>()?;
    let proto = F::prototile_loop(kind);
    if vertices.len() != proto.len() {
        return Err(CliError::Data(format!(
            "a {kind} has {} vertices, found {}",
            proto.len(),
            vertices.len()
        )));
    }
    let mut mirrored = vertices.clone();
    mirrored[1..].reverse();
    let placed = [&vertices, &mirrored]
        .into_iter()
        .filter_map(|target| find_isometry(&proto, target))
        .map(|g| Tile::place::<F>(kind, g))
        .find(|t| t.vertices == vertices);
    placed.ok_or_else(|| CliError::Data(format!("vertices are not a placed {kind}")))
}
