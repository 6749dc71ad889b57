//! Seeded instance families. Every generator is a pure function of its
//! parameters and a `u64` seed (ChaCha8).

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde_json::json;

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet};
use crate::graph::unit_disk_graph;
use crate::io::{Instance, InstanceMeta};
use crate::oracle::{square_grid_reduction, GridGraph};

/// Resampling budget for `connected-udg`.
pub const MAX_UDG_ATTEMPTS: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    UniformSquare { n: usize, side: f64 },
    Clustered { n: usize, k: usize, spread: f64, side: f64 },
    Collinear { n: usize, gap: f64 },
    Equilateral,
    EquilateralCenter,
    /// Random connected square grid graph of maximum degree 3 inside a
    /// `w x h` box, with the pendant points of the hardness reduction.
    SquareGridReduction { w: usize, h: usize, cells: usize },
    /// Vertices of a `rows x cols` patch of unit hexagons.
    HexGrid { rows: usize, cols: usize },
    /// Uniform points resampled until the unit disk graph is connected.
    ConnectedUdg { n: usize, side: f64 },
}

pub const GENERATOR_NAMES: [&str; 8] = [
    "uniform-square",
    "clustered",
    "collinear",
    "equilateral",
    "equilateral-center",
    "square-grid-reduction",
    "hex-grid",
    "connected-udg",
];

fn param(params: &BTreeMap<String, f64>, key: &str, default: f64) -> Result<f64> {
    let v = params.get(key).copied().unwrap_or(default);
    if !v.is_finite() {
        return Err(Error::InvalidParameter(format!("{key} must be finite")));
    }
    Ok(v)
}

fn count(params: &BTreeMap<String, f64>, key: &str, default: usize) -> Result<usize> {
    let v = param(params, key, default as f64)?;
    if v < 0.0 || v.fract() != 0.0 {
        return Err(Error::InvalidParameter(format!("{key} must be a non-negative integer, got {v}")));
    }
    Ok(v as usize)
}

fn positive(params: &BTreeMap<String, f64>, key: &str, default: f64) -> Result<f64> {
    let v = param(params, key, default)?;
    if v <= 0.0 {
        return Err(Error::InvalidParameter(format!("{key} must be positive, got {v}")));
    }
    Ok(v)
}

impl Generator {
    /// Builds a generator from its name and numeric parameters; missing
    /// parameters take defaults.
    pub fn from_name(name: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let g = match name {
            "uniform-square" => Generator::UniformSquare {
                n: count(params, "n", 60)?,
                side: positive(params, "side", 1.0)?,
            },
            "clustered" => Generator::Clustered {
                n: count(params, "n", 60)?,
                k: count(params, "k", 4)?.max(1),
                spread: positive(params, "spread", 0.05)?,
                side: positive(params, "side", 1.0)?,
            },
            "collinear" => Generator::Collinear {
                n: count(params, "n", 5)?,
                gap: positive(params, "gap", 1.0)?,
            },
            "equilateral" => Generator::Equilateral,
            "equilateral-center" | "equilateral+center" => Generator::EquilateralCenter,
            "square-grid-reduction" => {
                let w = count(params, "w", 3)?.max(1);
                let h = count(params, "h", 3)?.max(1);
                Generator::SquareGridReduction {
                    w,
                    h,
                    cells: count(params, "cells", w * h)?.max(1),
                }
            }
            "hex-grid" => {
                let rows = count(params, "rows", 2)?.max(1);
                Generator::HexGrid {
                    rows,
                    cols: count(params, "cols", rows)?.max(1),
                }
            }
            "connected-udg" => Generator::ConnectedUdg {
                n: count(params, "n", 200)?,
                side: positive(params, "side", 10.0)?,
            },
            other => return Err(Error::UnknownGenerator(other.to_string())),
        };
        Ok(g)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::UniformSquare { .. } => "uniform-square",
            Generator::Clustered { .. } => "clustered",
            Generator::Collinear { .. } => "collinear",
            Generator::Equilateral => "equilateral",
            Generator::EquilateralCenter => "equilateral-center",
            Generator::SquareGridReduction { .. } => "square-grid-reduction",
            Generator::HexGrid { .. } => "hex-grid",
            Generator::ConnectedUdg { .. } => "connected-udg",
        }
    }

    fn params(&self) -> BTreeMap<String, serde_json::Value> {
        let pairs: Vec<(&str, serde_json::Value)> = match *self {
            Generator::UniformSquare { n, side } => vec![("n", json!(n)), ("side", json!(side))],
            Generator::Clustered { n, k, spread, side } => vec![
                ("n", json!(n)),
                ("k", json!(k)),
                ("spread", json!(spread)),
                ("side", json!(side)),
            ],
            Generator::Collinear { n, gap } => vec![("n", json!(n)), ("gap", json!(gap))],
            Generator::Equilateral | Generator::EquilateralCenter => vec![],
            Generator::SquareGridReduction { w, h, cells } => {
                vec![("w", json!(w)), ("h", json!(h)), ("cells", json!(cells))]
            }
            Generator::HexGrid { rows, cols } => vec![("rows", json!(rows)), ("cols", json!(cols))],
            Generator::ConnectedUdg { n, side } => vec![("n", json!(n)), ("side", json!(side))],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn generate(&self, seed: u64) -> Result<Instance> {
        let mut rng = rng(seed);
        let mut params = self.params();
        let points = match *self {
            Generator::UniformSquare { n, side } => uniform_square(&mut rng, n, side)?,
            Generator::Clustered { n, k, spread, side } => {
                let centres: Vec<Point> = (0..k)
                    .map(|_| Point::new(rng.gen::<f64>() * side, rng.gen::<f64>() * side))
                    .collect();
                let normal = Normal::new(0.0, spread).expect("spread is positive");
                let pts = (0..n)
                    .map(|i| {
                        let c = centres[i % k];
                        Point::new(c.x + normal.sample(&mut rng), c.y + normal.sample(&mut rng))
                    })
                    .collect();
                PointSet::new(pts)?
            }
            Generator::Collinear { n, gap } => {
                PointSet::new((0..n).map(|i| Point::new(i as f64 * gap, 0.0)).collect())?
            }
            Generator::Equilateral => equilateral(false),
            Generator::EquilateralCenter => equilateral(true),
            Generator::SquareGridReduction { w, h, cells } => {
                let grid = random_square_grid(&mut rng, w, h, cells)?;
                let r = square_grid_reduction(&grid)?;
                params.insert("target_weight".into(), json!(r.target_weight));
                params.insert("grid_vertices".into(), json!(grid.len()));
                r.points
            }
            Generator::HexGrid { rows, cols } => {
                let cells: Vec<(i64, i64)> = (0..cols as i64)
                    .flat_map(|i| (0..rows as i64).map(move |j| (i, j)))
                    .collect();
                GridGraph::hex_cells(&cells)?.point_set()
            }
            Generator::ConnectedUdg { n, side } => {
                let mut attempt = 0;
                loop {
                    let pts = uniform_square(&mut rng, n, side)?;
                    if unit_disk_graph(&pts, 1.0).is_connected() {
                        params.insert("attempts".into(), json!(attempt + 1));
                        break pts;
                    }
                    attempt += 1;
                    if attempt >= MAX_UDG_ATTEMPTS {
                        return Err(Error::InvalidParameter(format!(
                            "no connected unit disk graph after {MAX_UDG_ATTEMPTS} samples"
                        )));
                    }
                }
            }
        };
        Ok(Instance {
            points,
            meta: InstanceMeta {
                generator: Some(self.name().to_string()),
                seed: Some(seed),
                params,
            },
        })
    }
}

pub fn uniform_square(rng: &mut impl Rng, n: usize, side: f64) -> Result<PointSet> {
    PointSet::new(
        (0..n)
            .map(|_| Point::new(rng.gen::<f64>() * side, rng.gen::<f64>() * side))
            .collect(),
    )
}

/// Side-1 triangle, optionally with its centre as a fourth point.
pub fn equilateral(with_center: bool) -> PointSet {
    let h = 3f64.sqrt() / 2.0;
    let mut pts = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, h)];
    if with_center {
        pts.push(Point::new(0.5, h / 3.0));
    }
    PointSet::new(pts).expect("distinct corners")
}

/// Grows a connected induced subgraph of the `w x h` grid from a random cell,
/// adding random frontier cells as long as every degree stays at most 3.
pub fn random_square_grid(rng: &mut impl Rng, w: usize, h: usize, cells: usize) -> Result<GridGraph> {
    let (w, h) = (w as i64, h as i64);
    let start = (rng.gen_range(0..w), rng.gen_range(0..h));
    let mut taken: Vec<(i64, i64)> = vec![start];
    let mut set: HashSet<(i64, i64)> = HashSet::from([start]);
    let degree = |set: &HashSet<(i64, i64)>, (x, y): (i64, i64)| {
        [(1, 0), (0, 1), (-1, 0), (0, -1)]
            .iter()
            .filter(|(dx, dy)| set.contains(&(x + dx, y + dy)))
            .count()
    };
    while taken.len() < cells {
        let mut frontier: Vec<(i64, i64)> = Vec::new();
        for &(x, y) in &taken {
            for (dx, dy) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                let c = (x + dx, y + dy);
                if c.0 < 0 || c.1 < 0 || c.0 >= w || c.1 >= h || set.contains(&c) || frontier.contains(&c) {
                    continue;
                }
                let ok = degree(&set, c) <= 3
                    && [(1, 0), (0, 1), (-1, 0), (0, -1)].iter().all(|(ex, ey)| {
                        let nb = (c.0 + ex, c.1 + ey);
                        !set.contains(&nb) || degree(&set, nb) < 3
                    });
                if ok {
                    frontier.push(c);
                }
            }
        }
        frontier.sort_unstable();
        let Some(&c) = frontier.choose(rng) else {
            break;
        };
        set.insert(c);
        taken.push(c);
    }
    GridGraph::square(&taken)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, kv: &[(&str, f64)], seed: u64) -> Instance {
        let params = kv.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        Generator::from_name(name, &params).unwrap().generate(seed).unwrap()
    }

    #[test]
    fn collinear_example() {
        let i = gen("collinear", &[("n", 3.0), ("gap", 1.0)], 0);
        assert_eq!(
            i.points.points(),
            &[Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)]
        );
    }

    #[test]
    fn equilateral_center() {
        let i = gen("equilateral-center", &[], 0);
        assert_eq!(i.points.len(), 4);
        let c = i.points[3];
        for k in 0..3 {
            assert!((i.points[k].dist(c) - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        for name in GENERATOR_NAMES {
            let a = gen(name, &[("n", 30.0), ("side", 3.0)], 7);
            let b = gen(name, &[("n", 30.0), ("side", 3.0)], 7);
            assert_eq!(a, b, "{name}");
        }
        let a = gen("uniform-square", &[("n", 60.0)], 7);
        let b = gen("uniform-square", &[("n", 60.0)], 8);
        assert_ne!(a.points, b.points);
    }

    #[test]
    fn unknown_and_bad_params() {
        assert_eq!(
            Generator::from_name("spiral", &BTreeMap::new()),
            Err(Error::UnknownGenerator("spiral".into()))
        );
        let bad = BTreeMap::from([("n".to_string(), 2.5)]);
        assert!(matches!(
            Generator::from_name("uniform-square", &bad),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn grid_reduction_is_valid() {
        for seed in 0..20 {
            let mut r = rng(seed);
            let g = random_square_grid(&mut r, 4, 4, 16).unwrap();
            assert!(g.comm_graph().is_connected());
            let i = gen("square-grid-reduction", &[("w", 4.0), ("h", 4.0)], seed);
            assert_eq!(i.points.len(), 2 * i.meta.params["grid_vertices"].as_u64().unwrap() as usize);
        }
    }

    #[test]
    fn connected_udg_is_connected() {
        let i = gen("connected-udg", &[("n", 200.0), ("side", 10.0)], 3);
        assert_eq!(i.points.len(), 200);
        assert!(unit_disk_graph(&i.points, 1.0).is_connected());
    }

    #[test]
    fn hex_grid_counts() {
        assert_eq!(gen("hex-grid", &[("rows", 1.0)], 0).points.len(), 6);
        assert_eq!(gen("hex-grid", &[("rows", 1.0), ("cols", 2.0)], 0).points.len(), 10);
    }
}
