//! Input parsing and edge-list files.
//!
//! Points are `x y` lines with `#` comments, or a JSON list of `[x, y]`
//! when the file name ends in `.json`. Graphs and segments are JSON.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::metric::{Beta, Point2, Variant};
use crate::segments::{Segment, SegmentSet};
use crate::skeleton::{Edge, PointSet, Producer, Setting, SkeletonGraph};

fn is_json(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_points_text(text: &str) -> Result<Vec<Point2>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        let bad = || Error::Parse(format!("line {}: expected \"x y\", got {raw:?}", no + 1));
        if fields.len() != 2 {
            return Err(bad());
        }
        let x: f64 = fields[0].parse().map_err(|_| bad())?;
        let y: f64 = fields[1].parse().map_err(|_| bad())?;
        out.push(Point2::try_new(x, y)?);
    }
    Ok(out)
}

pub fn parse_points_json(text: &str) -> Result<Vec<Point2>> {
    let raw: Vec<[f64; 2]> = serde_json::from_str(text).map_err(json_err)?;
    raw.into_iter().map(|[x, y]| Point2::try_new(x, y)).collect()
}

pub fn read_points(path: &Path) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)?;
    let pts = if is_json(path) { parse_points_json(&text)? } else { parse_points_text(&text)? };
    PointSet::new(pts)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    sites: Vec<usize>,
    edges: Vec<(usize, usize, f64)>,
    #[serde(default)]
    coordinates: Option<Vec<[f64; 2]>>,
}

pub fn parse_graph_json(text: &str) -> Result<WeightedGraph> {
    let f: GraphFile = serde_json::from_str(text).map_err(json_err)?;
    let g = WeightedGraph::new(f.vertices, f.sites, f.edges)?;
    match f.coordinates {
        Some(c) => {
            let pts = c.into_iter().map(|[x, y]| Point2::try_new(x, y)).collect::<Result<Vec<_>>>()?;
            g.with_coordinates(pts)
        }
        None => Ok(g),
    }
}

pub fn read_graph(path: &Path) -> Result<WeightedGraph> {
    parse_graph_json(&std::fs::read_to_string(path)?)
}

pub fn parse_segments_json(text: &str) -> Result<SegmentSet> {
    let raw: Vec<[[f64; 2]; 2]> = serde_json::from_str(text).map_err(json_err)?;
    let segs = raw
        .into_iter()
        .map(|[[x1, y1], [x2, y2]]| Ok(Segment::new(Point2::try_new(x1, y1)?, Point2::try_new(x2, y2)?)))
        .collect::<Result<Vec<_>>>()?;
    SegmentSet::new(segs)
}

pub fn read_segments(path: &Path) -> Result<SegmentSet> {
    parse_segments_json(&std::fs::read_to_string(path)?)
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error.to_string()))?;
    Ok(())
}

/// Edge list with `#` metadata lines followed by sorted `i j` lines.
pub fn format_edge_list(g: &SkeletonGraph, algorithm: &str) -> String {
    let mut s = String::new();
    s.push_str(&format!("# beta: {}\n", g.beta));
    s.push_str(&format!("# metric: {}\n", g.setting));
    s.push_str(&format!("# variant: {}\n", g.variant));
    s.push_str(&format!("# algorithm: {algorithm}\n"));
    s.push_str(&format!("# sites: {}\n", g.n_sites));
    for &(i, j) in &g.edges {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}

/// An edge list read back from a file, with its metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeFile {
    pub header: BTreeMap<String, String>,
    pub edges: Vec<Edge>,
}

impl EdgeFile {
    /// The skeleton the file describes. Missing metadata is taken from the
    /// arguments; `n_sites` must cover every listed edge.
    pub fn to_skeleton(&self, n_sites: usize, setting: Setting, beta: Beta, variant: Variant) -> Result<SkeletonGraph> {
        let beta = match self.header.get("beta") {
            Some(b) => b.parse()?,
            None => beta,
        };
        let variant = match self.header.get("variant") {
            Some(v) => v.parse()?,
            None => variant,
        };
        if let Some(&(i, j)) = self.edges.iter().find(|&&(i, j)| i == j || j >= n_sites || i >= n_sites) {
            return Err(Error::Parse(format!("edge ({i}, {j}) does not fit {n_sites} sites")));
        }
        Ok(SkeletonGraph::new(n_sites, self.edges.iter().copied(), beta, setting, variant, Producer::EdgeFile))
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeFile> {
    let mut header = BTreeMap::new();
    let mut edges = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(meta) = line.strip_prefix('#') {
            if let Some((k, v)) = meta.split_once(':') {
                header.insert(k.trim().to_string(), v.trim().to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: expected \"i j\", got {raw:?}", no + 1));
        let mut it = line.split_whitespace();
        let i: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let j: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if it.next().is_some() {
            return Err(bad());
        }
        edges.push((i.min(j), i.max(j)));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(EdgeFile { header, edges })
}

pub fn read_edge_list(path: &Path) -> Result<EdgeFile> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
