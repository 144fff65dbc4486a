//! Aperiodic substitution tilings over exact coordinates, and the vertex
//! degree statistics of their graphs.
//!
//! ```
//! use aperiodic::graph::{TilingGraph, Window, WindowMode};
//! use aperiodic::substitution::{generate, AmmannA2, TileKind};
//!
//! // A2-3: one large hexagon split into two.
//! let patch = generate::<AmmannA2>(TileKind::SmallHex, 2).unwrap();
//! let graph = TilingGraph::from_patch(&patch);
//! let summary = graph.summarize(&Window::of_patch(&patch, WindowMode::Full)).unwrap();
//! assert_eq!((summary.vertex_count, summary.total_degree), (9, 20));
//! ```

pub mod a2_analysis;
pub mod coords;
pub mod golden;
pub mod graph;
pub mod regression;
pub mod substitution;
