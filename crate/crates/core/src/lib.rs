//! Proximity graphs as β-skeletons in lp metrics, under l1/l∞ with
//! sub-cubic sweeps, on edge-weighted graphs, and over segment sites.

pub mod cli;
pub mod error;
pub mod gen;
pub mod metric;
pub mod graph;
pub mod io;
pub mod l1;
pub mod render;
pub mod segments;
pub mod skeleton;

pub use error::{Error, Result};
pub use metric::{Beta, Lens, LensForm, Metric, Point2, Variant};
pub use skeleton::{ChainReport, Edge, InclusionCheck, PointSet, Producer, Setting, SkeletonGraph};
