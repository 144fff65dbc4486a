//! Vertex/side graphs of patches and their degree statistics.
//!
//! Tile sides are split at every corner lying on them, so a corner in the
//! middle of a neighbour's side (a T-vertex) is joined to both halves. On
//! edge-to-edge tilings no side is split and the degree is the usual one.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_rational::Ratio;

use crate::coords::{PlanePoint, Scalar};
use crate::substitution::{Patch, Tile};

/// A graph with exact vertices, split sides and per-vertex counts.
#[derive(Clone, Debug)]
pub struct TilingGraph<P> {
    /// Canonically ordered distinct tile corners.
    pub vertices: Vec<P>,
    /// Distinct segments as sorted index pairs.
    pub edges: Vec<(usize, usize)>,
    /// Number of distinct whole tile sides before splitting.
    pub side_count: usize,
    /// Graph degree of each vertex.
    pub degree: Vec<u32>,
    /// Number of tiles having each vertex as a corner.
    pub corner_count: Vec<u32>,
}

impl<P: PlanePoint> TilingGraph<P> {
    pub fn from_patch(patch: &Patch<P>) -> Self {
        Self::from_tiles(&patch.tiles)
    }

    pub fn from_tiles(tiles: &[Tile<P>]) -> Self {
        let mut corners: BTreeMap<P, u32> = BTreeMap::new();
        for t in tiles {
            for v in &t.vertices {
                *corners.entry(v.clone()).or_default() += 1;
            }
        }
        let vertices: Vec<P> = corners.keys().cloned().collect();
        let corner_count: Vec<u32> = corners.values().copied().collect();
        let index: HashMap<&P, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();

        let mut sides: HashSet<(usize, usize)> = HashSet::new();
        for t in tiles {
            for (a, b) in t.sides() {
                let (i, j) = (index[a], index[b]);
                sides.insert((i.min(j), i.max(j)));
            }
        }
        let mut sides: Vec<(usize, usize)> = sides.into_iter().collect();
        sides.sort_unstable();

        let embedded: Vec<(f64, f64)> = vertices.iter().map(PlanePoint::embed).collect();
        let grid = Grid::new(&embedded);
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        for &(i, j) in &sides {
            let (a, b) = (&vertices[i], &vertices[j]);
            let dir = b.sub(a);
            let (ax, ay) = embedded[i];
            let (bx, by) = embedded[j];
            let (dx, dy) = (bx - ax, by - ay);
            let len2 = dx * dx + dy * dy;
            let mut stops: Vec<(f64, usize)> = vec![(0.0, i), (1.0, j)];
            for k in grid.near_segment(embedded[i], embedded[j]) {
                if k == i || k == j {
                    continue;
                }
                let (px, py) = embedded[k];
                let s = ((px - ax) * dx + (py - ay) * dy) / len2;
                if s <= 0.0 || s >= 1.0 {
                    continue;
                }
                if vertices[k].sub(a).wedge(&dir).is_zero() {
                    stops.push((s, k));
                }
            }
            stops.sort_by(|x, y| x.0.total_cmp(&y.0));
            for w in stops.windows(2) {
                let (u, v) = (w[0].1, w[1].1);
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut degree = vec![0u32; vertices.len()];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        TilingGraph {
            vertices,
            edges,
            side_count: sides.len(),
            degree,
            corner_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.degree.iter().map(|&d| u64::from(d)).sum()
    }

    /// Degree statistics over the vertices inside `window`.
    pub fn summarize(&self, window: &Window<P>) -> Result<DegreeSummary, EmptyWindow> {
        self.summarize_with(window, window.mode.degree_rule())
    }

    pub fn summarize_with(
        &self,
        window: &Window<P>,
        rule: DegreeRule,
    ) -> Result<DegreeSummary, EmptyWindow> {
        let counts = match rule {
            DegreeRule::Graph => &self.degree,
            DegreeRule::Corners => &self.corner_count,
        };
        let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
        for (v, &d) in self.vertices.iter().zip(counts) {
            if window.contains(v) {
                *histogram.entry(d).or_default() += 1;
            }
        }
        let vertex_count: u64 = histogram.values().sum();
        if vertex_count == 0 {
            return Err(EmptyWindow { mode: window.mode });
        }
        let total_degree = histogram.iter().map(|(&d, &c)| u64::from(d) * c).sum();
        Ok(DegreeSummary {
            vertex_count,
            total_degree,
            histogram,
            mode: window.mode,
            rule,
        })
    }

    /// Degree histogram over the windowed vertices.
    pub fn histogram(&self, window: &Window<P>) -> BTreeMap<u32, u64> {
        self.summarize(window)
            .map(|s| s.histogram)
            .unwrap_or_default()
    }
}

/// Uniform bucket grid over embedded vertices. Tiles are prototile-sized,
/// so unit cells keep the per-side candidate lists short.
struct Grid {
    cells: HashMap<(i64, i64), Vec<usize>>,
}

impl Grid {
    const CELL: f64 = 1.0;

    fn cell((x, y): (f64, f64)) -> (i64, i64) {
        (
            (x / Self::CELL).floor() as i64,
            (y / Self::CELL).floor() as i64,
        )
    }

    fn new(points: &[(f64, f64)]) -> Self {
        let mut cells: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, &p) in points.iter().enumerate() {
            cells.entry(Self::cell(p)).or_default().push(i);
        }
        Grid { cells }
    }

    fn near_segment(&self, a: (f64, f64), b: (f64, f64)) -> impl Iterator<Item = usize> + '_ {
        let eps = 1e-9;
        let lo = Self::cell((a.0.min(b.0) - eps, a.1.min(b.1) - eps));
        let hi = Self::cell((a.0.max(b.0) + eps, a.1.max(b.1) + eps));
        (lo.0..=hi.0)
            .flat_map(move |cx| (lo.1..=hi.1).map(move |cy| (cx, cy)))
            .filter_map(|c| self.cells.get(&c))
            .flatten()
            .copied()
    }
}

/// Which count serves as the degree of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeRule {
    /// Graph degree over split sides.
    Graph,
    /// Number of tiles with a corner at the vertex, as counted by the
    /// original quad-file degree counter.
    Corners,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowMode {
    Full,
    /// Middle third of the bounding box in both directions, closed.
    MiddleThird,
    /// Open bounding box: drops only the vertices on its outline. This is
    /// what the original degree counter computes, since its window margin
    /// `(1/3)*(maxX-minX)` is evaluated with integer division.
    InteriorBBoxCompat,
}

impl WindowMode {
    /// The degree accounting that goes with the mode.
    pub fn degree_rule(self) -> DegreeRule {
        match self {
            WindowMode::InteriorBBoxCompat => DegreeRule::Corners,
            _ => DegreeRule::Graph,
        }
    }
}

impl std::str::FromStr for WindowMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(WindowMode::Full),
            "middle-third" | "middle" => Ok(WindowMode::MiddleThird),
            "compat" => Ok(WindowMode::InteriorBBoxCompat),
            _ => Err(format!(
                "unknown window {s:?} (expected full, middle-third or compat)"
            )),
        }
    }
}

/// Axis-aligned rectangle in embedded coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Rect {
    pub fn bounding(points: impl IntoIterator<Item = (f64, f64)>) -> Option<Rect> {
        points.into_iter().fold(None, |acc, (x, y)| {
            Some(match acc {
                None => Rect {
                    min_x: x,
                    min_y: y,
                    max_x: x,
                    max_y: y,
                },
                Some(r) => Rect {
                    min_x: r.min_x.min(x),
                    min_y: r.min_y.min(y),
                    max_x: r.max_x.max(x),
                    max_y: r.max_y.max(y),
                },
            })
        })
    }

    pub fn middle_third(&self) -> Rect {
        let kx = (self.max_x - self.min_x) / 3.0;
        let ky = (self.max_y - self.min_y) / 3.0;
        Rect {
            min_x: self.min_x + kx,
            min_y: self.min_y + ky,
            max_x: self.max_x - kx,
            max_y: self.max_y - ky,
        }
    }

    pub fn contains_closed(&self, (x, y): (f64, f64)) -> bool {
        self.min_x <= x && x <= self.max_x && self.min_y <= y && y <= self.max_y
    }

    pub fn contains_open(&self, (x, y): (f64, f64)) -> bool {
        self.min_x < x && x < self.max_x && self.min_y < y && y < self.max_y
    }
}

/// A vertex filter derived from a patch's bounding box.
#[derive(Clone, Debug)]
pub struct Window<P: PlanePoint> {
    pub mode: WindowMode,
    /// Bounding box for `Full` and `InteriorBBoxCompat`, the middle third
    /// for `MiddleThird`.
    pub rect: Rect,
    extremes: Option<Extremes<P>>,
}

#[derive(Clone, Debug)]
struct Extremes<P: PlanePoint> {
    x: [Scalar<P::Ring>; 2],
    y: [Scalar<P::Ring>; 2],
}

impl<P: PlanePoint> Window<P> {
    pub fn of_patch(patch: &Patch<P>, mode: WindowMode) -> Self {
        Self::of_points(patch.tiles.iter().flat_map(|t| t.vertices.iter()), mode)
    }

    pub fn of_graph(graph: &TilingGraph<P>, mode: WindowMode) -> Self {
        Self::of_points(graph.vertices.iter(), mode)
    }

    /// # Panics
    ///
    /// On an empty point set.
    pub fn of_points<'a>(points: impl Iterator<Item = &'a P> + Clone, mode: WindowMode) -> Self {
        let bbox = Rect::bounding(points.clone().map(PlanePoint::embed)).expect("nonempty patch");
        let rect = match mode {
            WindowMode::MiddleThird => bbox.middle_third(),
            _ => bbox,
        };
        let extremes = (mode == WindowMode::InteriorBBoxCompat).then(|| {
            let ext = |coord: fn((f64, f64)) -> f64, key: fn(&P) -> Scalar<P::Ring>| {
                let by = |a: &&P, b: &&P| coord(a.embed()).total_cmp(&coord(b.embed()));
                let lo = points.clone().min_by(by).expect("nonempty");
                let hi = points.clone().max_by(by).expect("nonempty");
                [key(lo), key(hi)]
            };
            Extremes {
                x: ext(|p| p.0, P::x_key),
                y: ext(|p| p.1, P::y_key),
            }
        });
        Window {
            mode,
            rect,
            extremes,
        }
    }

    pub fn contains(&self, p: &P) -> bool {
        match self.mode {
            WindowMode::Full => true,
            WindowMode::MiddleThird => self.rect.contains_closed(p.embed()),
            WindowMode::InteriorBBoxCompat => {
                let e = self
                    .extremes
                    .as_ref()
                    .expect("compat window keeps extremes");
                let (x, y) = (p.x_key(), p.y_key());
                !e.x.contains(&x) && !e.y.contains(&y)
            }
        }
    }
}

/// Nothing fell inside the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("no vertices inside the {mode:?} window")]
pub struct EmptyWindow {
    pub mode: WindowMode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub vertex_count: u64,
    pub total_degree: u64,
    pub histogram: BTreeMap<u32, u64>,
    pub mode: WindowMode,
    pub rule: DegreeRule,
}

impl DegreeSummary {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.total_degree, self.vertex_count)
    }

    pub fn average(&self) -> f64 {
        self.total_degree as f64 / self.vertex_count as f64
    }
}
