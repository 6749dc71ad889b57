//! Bounded-angle spanning trees and directional-antenna hop spanners.
//!
//! A point set with one wedge-shaped antenna per point induces a
//! communication graph: `p` and `q` are joined when each lies in the other's
//! wedge. This crate orients wedges of a fixed aperture so that the induced
//! graph contains a light spanning tree (apertures 180, 120 and 90 degrees),
//! or so that it stays a constant-hop spanner of the unit disk graph.
//!
//! ```
//! use bast_core::{build_alpha_st, verify_alpha_st, Alpha, PointSet};
//!
//! let points = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.8), (2.0, 0.3)]).unwrap();
//! let st = build_alpha_st(&points, Alpha::TwoThirdsPi).unwrap();
//! assert!(verify_alpha_st(&points, &st).passed);
//! ```

pub mod approx;
pub mod error;
pub mod gadget;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod spanner;

pub use approx::{build_alpha_st, verify_alpha_st, Alpha, AlphaST, AlphaStReport, TourPartition};
pub use error::{Error, Result};
pub use gadget::{orient_pair, orient_quadruplet, orient_triplet, QuadrupletOrientation, TripletOrientation};
pub use generate::Generator;
pub use geom::{angular_spread, direction, wedge_contains, AngleInterval, Direction, Point, PointSet, Wedge};
pub use graph::{cross_edge, euclidean_mst, induced_graph, tsp_tour, unit_disk_graph, CommGraph, Edge, SpanningTree, Tour};
pub use io::{Instance, ResultFile};
pub use spanner::{build_spanner, verify_hop_spanner, SpannerResult};
