//! JSON file formats and output formatting.
//!
//! * space: `{"labels": [...], "matrix": [[...], ...]}` (labels optional)
//! * point cloud: `{"metric": "euclidean" | "linf", "points": [[...], ...]}`
//! * graph: `{"n": k, "edges": [[i, j], ...]}`
//! * bipartite graph: `{"p": .., "q": .., "edges": [[l, r], ...]}`
//! * correspondence: `[[i, j], ...]` or any object with a `"witness"` or
//!   `"pairs"` array of that shape

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{BipartiteGraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::gh::Correspondence;
use crate::metric::{index_labels, FiniteMetricSpace, PointMetric};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointCloudFile {
    pub metric: String,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BipartiteFile {
    pub p: usize,
    pub q: usize,
    pub edges: Vec<[usize; 2]>,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.display().to_string()),
        _ => Error::Io(format!("{}: {e}", path.display())),
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub fn parse_metric(name: &str) -> Result<PointMetric> {
    match name {
        "euclidean" => Ok(PointMetric::Euclidean),
        "linf" => Ok(PointMetric::LInf),
        other => Err(Error::Parse(format!("unknown point metric {other:?}"))),
    }
}

/// Space or point cloud from a parsed JSON document.
pub fn space_from_value(v: Value, tol: f64) -> Result<FiniteMetricSpace> {
    let is_cloud = v.get("points").is_some();
    if is_cloud {
        let f: PointCloudFile = from_value(v, "point cloud")?;
        FiniteMetricSpace::from_points(&f.points, parse_metric(&f.metric)?, tol)
    } else {
        let f: SpaceFile = from_value(v, "space")?;
        let labels = f.labels.unwrap_or_else(|| index_labels(f.matrix.len()));
        FiniteMetricSpace::new(labels, &f.matrix, tol)
    }
}

pub fn load_space(path: impl AsRef<Path>, tol: f64) -> Result<FiniteMetricSpace> {
    space_from_value(read_json(path.as_ref())?, tol)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<SimpleGraph> {
    let f: GraphFile = from_value(read_json(path.as_ref())?, "graph")?;
    SimpleGraph::new(f.n, f.edges.into_iter().map(|[i, j]| (i, j)))
}

pub fn load_bipartite(path: impl AsRef<Path>) -> Result<BipartiteGraph> {
    let f: BipartiteFile = from_value(read_json(path.as_ref())?, "bipartite graph")?;
    BipartiteGraph::new(f.p, f.q, f.edges.into_iter().map(|[l, r]| (l, r)))
}

pub fn load_correspondence(path: impl AsRef<Path>, left: usize, right: usize) -> Result<Correspondence> {
    let v = read_json(path.as_ref())?;
    let arr = match v {
        Value::Object(mut m) => m
            .remove("witness")
            .or_else(|| m.remove("pairs"))
            .ok_or_else(|| Error::Parse("correspondence object needs \"witness\" or \"pairs\"".into()))?,
        other => other,
    };
    let pairs: Vec<[usize; 2]> = from_value(arr, "correspondence")?;
    Correspondence::new(left, right, pairs.into_iter().map(|[i, j]| (i, j)))
}

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// JSON number with 12 significant digits; non-finite values become
/// `null`.
pub fn num(x: f64) -> Value {
    let r = round12(x);
    if r.is_finite() {
        json!(r)
    } else {
        Value::Null
    }
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(i, j)| json!([i, j])).collect())
}

pub fn space_to_json(space: &FiniteMetricSpace) -> Value {
    json!({
        "labels": space.labels(),
        "matrix": space.matrix().iter().map(|r| nums(r)).collect::<Vec<_>>(),
    })
}

pub fn points_to_json(metric: &str, points: &[Vec<f64>]) -> Value {
    json!({
        "metric": metric,
        "points": points.iter().map(|p| nums(p)).collect::<Vec<_>>(),
    })
}
