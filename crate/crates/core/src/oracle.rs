//! Exhaustive ground truth for small inputs, plus the grid-graph reduction
//! instances used as hardness fixtures.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{arc_of_directions, direction_unchecked, Point, PointSet, ANGLE_TOL_DEG, DIST_TOL};
use crate::graph::{CommGraph, SpanningTree};

pub const MAX_BRUTE_FORCE_POINTS: usize = 8;
pub const MAX_HAMILTONIAN_VERTICES: usize = 16;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Minimum-weight spanning tree whose every vertex has angular spread at most
/// `alpha` degrees, by enumerating all Prüfer sequences. `None` if no such
/// tree exists.
pub fn brute_force_alpha_mst(points: &PointSet, alpha: f64) -> Result<Option<SpanningTree>> {
    let n = points.len();
    if n > MAX_BRUTE_FORCE_POINTS {
        return Err(Error::TooManyPoints {
            limit: MAX_BRUTE_FORCE_POINTS,
            actual: n,
        });
    }
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, actual: 0 });
    }
    if n == 1 {
        return Ok(Some(SpanningTree::from_edges(points, [])));
    }
    let mut dirs = vec![vec![0.0; n]; n];
    let mut dist = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                dirs[i][j] = direction_unchecked(points[i], points[j]).degrees();
                dist[i][j] = points[i].dist(points[j]);
            }
        }
    }

    let mut best: Option<(f64, Vec<(usize, usize)>)> = None;
    let mut seq = vec![0usize; n - 2];
    let mut edges = Vec::with_capacity(n - 1);
    let mut nbr_dirs: Vec<Vec<f64>> = vec![Vec::with_capacity(n); n];
    loop {
        decode_prufer(&seq, n, &mut edges);
        let weight: f64 = edges.iter().map(|&(a, b)| dist[a][b]).sum();
        if best.as_ref().is_none_or(|(w, _)| weight < *w) {
            for d in nbr_dirs.iter_mut() {
                d.clear();
            }
            for &(a, b) in &edges {
                nbr_dirs[a].push(dirs[a][b]);
                nbr_dirs[b].push(dirs[b][a]);
            }
            let ok = nbr_dirs.iter_mut().all(|d| {
                d.len() < 2 || arc_of_directions(d).is_some_and(|(_, extent)| extent <= alpha + ANGLE_TOL_DEG)
            });
            if ok {
                let mut e = edges.clone();
                for x in e.iter_mut() {
                    *x = (x.0.min(x.1), x.0.max(x.1));
                }
                e.sort_unstable();
                best = Some((weight, e));
            }
        }
        if !next_sequence(&mut seq, n) {
            break;
        }
    }
    Ok(best.map(|(_, e)| SpanningTree::from_edges(points, e)))
}

fn next_sequence(seq: &mut [usize], n: usize) -> bool {
    for s in seq.iter_mut().rev() {
        *s += 1;
        if *s < n {
            return true;
        }
        *s = 0;
    }
    false
}

pub(crate) fn decode_prufer(seq: &[usize], n: usize, edges: &mut Vec<(usize, usize)>) {
    edges.clear();
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
}

fn adjacency_masks(g: &CommGraph) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > MAX_HAMILTONIAN_VERTICES {
        return Err(Error::TooManyPoints {
            limit: MAX_HAMILTONIAN_VERTICES,
            actual: n,
        });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect())
}

/// `reach[mask]` = set of end vertices of paths visiting exactly `mask`.
fn path_table(adj: &[u32], starts: u32) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        if starts & (1 << v) != 0 {
            reach[1 << v] |= 1 << v;
        }
    }
    for mask in 1..(1usize << n) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for (v, &nbrs) in adj.iter().enumerate() {
            if ends & (1 << v) == 0 {
                continue;
            }
            let mut next = nbrs & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    reach
}

pub fn hamiltonian_path_exists(g: &CommGraph) -> Result<bool> {
    let adj = adjacency_masks(g)?;
    let n = adj.len();
    if n == 0 {
        return Ok(false);
    }
    let full = (1usize << n) - 1;
    Ok(path_table(&adj, full as u32)[full] != 0)
}

/// Cycles need at least three vertices.
pub fn hamiltonian_cycle_exists(g: &CommGraph) -> Result<bool> {
    let adj = adjacency_masks(g)?;
    let n = adj.len();
    if n < 3 {
        return Ok(false);
    }
    let full = (1usize << n) - 1;
    let ends = path_table(&adj, 1)[full];
    Ok(ends & adj[0] != 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridKind {
    Square,
    Hexagonal,
}

/// Lattice points joined wherever they are at distance 1.
#[derive(Debug, Clone, PartialEq)]
pub struct GridGraph {
    pub kind: GridKind,
    pub vertices: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
}

fn unit_pairs(points: &[Point]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (points[i].dist(points[j]) - 1.0).abs() <= DIST_TOL {
                out.push((i, j));
            }
        }
    }
    out
}

impl GridGraph {
    /// Square grid graph on integer cells `(x, y)`; duplicates are rejected.
    pub fn square(cells: &[(i64, i64)]) -> Result<Self> {
        let vertices: Vec<Point> = cells.iter().map(|&(x, y)| Point::new(x as f64, y as f64)).collect();
        PointSet::new(vertices.clone())?;
        let edges = unit_pairs(&vertices);
        Ok(Self {
            kind: GridKind::Square,
            vertices,
            edges,
        })
    }

    /// Hexagonal grid graph from lattice coordinates `(X, Y)` meaning the
    /// point `(X / 2, Y * sqrt(3) / 2)`; see [`hex_vertex`].
    pub fn hexagonal(coords: &[(i64, i64)]) -> Result<Self> {
        let mut vertices = Vec::with_capacity(coords.len());
        for (i, &(x, y)) in coords.iter().enumerate() {
            vertices.push(hex_vertex(x, y).ok_or(Error::NotOnLattice { index: i })?);
        }
        PointSet::new(vertices.clone())?;
        let edges = unit_pairs(&vertices);
        Ok(Self {
            kind: GridKind::Hexagonal,
            vertices,
            edges,
        })
    }

    /// Vertices of the hexagonal cells `(i, j)` with centres
    /// `i * (3/2, sqrt(3)/2) + j * (0, sqrt(3))`.
    pub fn hex_cells(cells: &[(i64, i64)]) -> Result<Self> {
        let mut coords: Vec<(i64, i64)> = Vec::new();
        for &(i, j) in cells {
            let (cx, cy) = (3 * i, i + 2 * j);
            for (dx, dy) in [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)] {
                let c = (cx + dx, cy + dy);
                if !coords.contains(&c) {
                    coords.push(c);
                }
            }
        }
        Self::hexagonal(&coords)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn comm_graph(&self) -> CommGraph {
        CommGraph::from_edges(self.len(), &self.vertices, self.edges.iter().copied())
    }

    pub fn point_set(&self) -> PointSet {
        PointSet::new(self.vertices.clone()).expect("grid vertices are distinct")
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }
}

/// Flat-top hexagonal tiling vertex at lattice coordinates `(X, Y)`, or
/// `None` if `(X, Y)` is a cell centre or off the lattice.
pub fn hex_vertex(x: i64, y: i64) -> Option<Point> {
    if (x + y).rem_euclid(2) != 0 || x.rem_euclid(3) == 0 {
        return None;
    }
    Some(Point::new(x as f64 / 2.0, y as f64 * SQRT3_2))
}

fn hex_coords(p: Point) -> Option<(i64, i64)> {
    let x = (2.0 * p.x).round();
    let y = (p.y / SQRT3_2).round();
    let q = hex_vertex(x as i64, y as i64)?;
    q.coincides(p).then_some((x as i64, y as i64))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionInstance {
    /// Grid vertices first (in input order), then `q_v` in the same order.
    pub points: PointSet,
    pub target_weight: f64,
    pub black: usize,
    pub white: usize,
}

/// Adds a pendant point `q_v` next to each grid vertex, on a lattice edge
/// that the graph lacks: at distance 1/4 for black vertices, 1/5 for white.
/// A minimum pi-spanning tree of weight `L = n - 1 + black/4 + white/5`
/// exists iff the grid graph has a Hamiltonian path.
pub fn square_grid_reduction(g: &GridGraph) -> Result<ReductionInstance> {
    let n = g.len();
    for (i, p) in g.vertices.iter().enumerate() {
        if g.kind != GridKind::Square || p.x.fract() != 0.0 || p.y.fract() != 0.0 {
            return Err(Error::NotOnLattice { index: i });
        }
    }
    if let Some((v, &d)) = g.degrees().iter().enumerate().find(|(_, &d)| d > 3) {
        return Err(Error::DegreeTooHigh { vertex: v, degree: d });
    }
    let cg = g.comm_graph();
    if n == 0 || !cg.is_connected() {
        return Err(Error::DisconnectedGrid);
    }

    let mut colour: Vec<Option<bool>> = vec![None; n];
    colour[0] = Some(true);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let c = colour[u].expect("queued vertices are coloured");
        for &w in cg.neighbors(u) {
            match colour[w] {
                None => {
                    colour[w] = Some(!c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return Err(Error::NotBipartiteLayout),
                _ => {}
            }
        }
    }

    let occupied: HashSet<(i64, i64)> = g.vertices.iter().map(|p| (p.x as i64, p.y as i64)).collect();
    let mut points = g.vertices.clone();
    let (mut black, mut white) = (0, 0);
    for (v, p) in g.vertices.iter().enumerate() {
        let is_black = colour[v] == Some(true);
        let len = if is_black { 0.25 } else { 0.2 };
        if is_black {
            black += 1;
        } else {
            white += 1;
        }
        let (x, y) = (p.x as i64, p.y as i64);
        let (dx, dy) = [(1, 0), (0, 1), (-1, 0), (0, -1)]
            .into_iter()
            .find(|&(dx, dy)| !occupied.contains(&(x + dx, y + dy)))
            .expect("degree at most 3 leaves a free lattice edge");
        points.push(Point::new(p.x + dx as f64 * len, p.y + dy as f64 * len));
    }
    for v in 0..n {
        let q = points[n + v];
        for (k, &r) in points.iter().enumerate() {
            if k != v && k != n + v {
                assert!(q.dist(r) > 1.0, "pendant point of vertex {v} is within 1 of point {k}");
            }
        }
    }
    Ok(ReductionInstance {
        points: PointSet::new(points)?,
        target_weight: (n - 1) as f64 + black as f64 / 4.0 + white as f64 / 5.0,
        black,
        white,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct HexAugmentation {
    pub graph: GridGraph,
    /// Index of the top vertex `u` in the original graph.
    pub top: usize,
    /// Indices of the added points in `graph` (`s`, `t`, then `w` if present).
    pub added: Vec<usize>,
}

/// Adds pendant points at the top vertex so that the new graph has a
/// Hamiltonian path iff the old one has a Hamiltonian cycle.
///
/// `u` is the highest vertex (leftmost on ties). Degree 0: unchanged.
/// Degree 2: `s` above `u` and `t` above its horizontal neighbour `v`.
/// Degree 1: a free neighbour `w` of `u` plus the other two neighbours `s`,
/// `t` of `w`, so that `s` and `t` are leaves hanging off `w`.
pub fn hex_grid_reduction(g: &GridGraph) -> Result<HexAugmentation> {
    if g.kind != GridKind::Hexagonal {
        return Err(Error::NotOnLattice { index: 0 });
    }
    if g.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, actual: 0 });
    }
    let mut coords = Vec::with_capacity(g.len());
    for (i, &p) in g.vertices.iter().enumerate() {
        coords.push(hex_coords(p).ok_or(Error::NotOnLattice { index: i })?);
    }
    let index: HashMap<(i64, i64), usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let u = (0..g.len())
        .max_by(|&a, &b| coords[a].1.cmp(&coords[b].1).then(coords[b].0.cmp(&coords[a].0)))
        .expect("non-empty");
    let (ux, uy) = coords[u];
    let present = |c: (i64, i64)| index.contains_key(&c);
    let degree = hex_neighbors(ux, uy).iter().filter(|&&c| present(c)).count();

    let added: Vec<(i64, i64)> = match degree {
        0 => Vec::new(),
        2 => {
            // u has edges at 0 and 240; v is the right neighbour
            let v = (ux + 2, uy);
            if !present(v) {
                return Err(Error::NotOnLattice { index: u });
            }
            vec![(ux - 1, uy + 1), (v.0 + 1, v.1 + 1)]
        }
        1 => {
            let mut found = None;
            for w in hex_neighbors(ux, uy).into_iter().filter(|&c| !present(c)) {
                let st: Vec<(i64, i64)> = hex_neighbors(w.0, w.1).into_iter().filter(|&c| c != (ux, uy)).collect();
                let clean = !st.iter().any(|&c| present(c))
                    && st.iter().all(|&c| {
                        hex_neighbors(c.0, c.1).into_iter().all(|d| d == w || !present(d))
                    });
                if clean {
                    found = Some(vec![st[0], st[1], w]);
                    break;
                }
            }
            found.ok_or(Error::HexAugmentationBlocked)?
        }
        d => return Err(Error::DegreeTooHigh { vertex: u, degree: d }),
    };

    let mut all = coords.clone();
    all.extend(added.iter().copied());
    let graph = GridGraph::hexagonal(&all)?;
    let old: HashSet<(usize, usize)> = g.edges.iter().copied().collect();
    let new_edges: Vec<(usize, usize)> = graph.edges.iter().copied().filter(|e| !old.contains(e)).collect();
    let n = g.len();
    let v_index = index.get(&(ux + 2, uy)).copied();
    let mut expected: Vec<(usize, usize)> = match added.len() {
        0 => Vec::new(),
        2 => vec![(u, n), (v_index.expect("checked above"), n + 1)],
        _ => vec![(n, n + 2), (n + 1, n + 2), (u, n + 2)],
    };
    for e in expected.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    expected.sort_unstable();
    if new_edges != expected {
        return Err(Error::HexAugmentationBlocked);
    }
    Ok(HexAugmentation {
        graph,
        top: u,
        added: (n..n + added.len()).collect(),
    })
}

/// Lattice neighbours in ascending direction order.
fn hex_neighbors(x: i64, y: i64) -> Vec<(i64, i64)> {
    if x.rem_euclid(3) == 2 {
        // edges at 0, 120, 240
        vec![(x + 2, y), (x - 1, y + 1), (x - 1, y - 1)]
    } else {
        // edges at 60, 180, 300
        vec![(x + 1, y + 1), (x - 2, y), (x + 1, y - 1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::euclidean_mst;

    fn set(c: &[(f64, f64)]) -> PointSet {
        PointSet::from_xy(c).unwrap()
    }

    #[test]
    fn prufer_decodes_all_labelled_trees() {
        // Cayley: 4^2 = 16 distinct trees on 4 vertices
        let mut seen = HashSet::new();
        let mut seq = vec![0, 0];
        let mut edges = Vec::new();
        loop {
            decode_prufer(&seq, 4, &mut edges);
            let mut e: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            e.sort_unstable();
            assert!(crate::gadget::is_connected(4, &e));
            seen.insert(e);
            if !next_sequence(&mut seq, 4) {
                break;
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn brute_force_examples() {
        let h = 3f64.sqrt() / 2.0;
        let tri = set(&[(0.0, 0.0), (1.0, 0.0), (0.5, h)]);
        assert_eq!(brute_force_alpha_mst(&tri, 59.0).unwrap(), None);
        assert!(brute_force_alpha_mst(&tri, 60.0).unwrap().is_some());

        let line = set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert_eq!(brute_force_alpha_mst(&line, 180.0).unwrap().unwrap().weight, 2.0);

        let star = set(&[(0.0, 0.0), (1.0, 0.0), (0.5, h), (0.5, h / 3.0)]);
        let t = brute_force_alpha_mst(&star, 200.0).unwrap().unwrap();
        assert!((t.weight - (1.0 + 2.0 / 3f64.sqrt())).abs() < 1e-12);
        let ratio = t.weight / euclidean_mst(&star).weight;
        assert!((ratio - (2.0 + 3f64.sqrt()) / 3.0).abs() < 1e-9);
    }

    #[test]
    fn brute_force_full_angle_is_mst() {
        let ps = set(&[(0.0, 0.0), (2.0, 0.3), (1.1, 1.7), (-0.4, 0.9), (0.7, -1.2)]);
        let t = brute_force_alpha_mst(&ps, 360.0).unwrap().unwrap();
        assert!((t.weight - euclidean_mst(&ps).weight).abs() < 1e-12);
    }

    #[test]
    fn brute_force_limits() {
        let pts: Vec<(f64, f64)> = (0..9).map(|i| (i as f64, 0.0)).collect();
        assert!(matches!(
            brute_force_alpha_mst(&set(&pts), 180.0),
            Err(Error::TooManyPoints { .. })
        ));
        assert_eq!(brute_force_alpha_mst(&set(&[(1.0, 1.0)]), 10.0).unwrap().unwrap().weight, 0.0);
    }

    #[test]
    fn hamiltonian_examples() {
        let line = GridGraph::square(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert!(hamiltonian_path_exists(&line.comm_graph()).unwrap());
        assert!(!hamiltonian_cycle_exists(&line.comm_graph()).unwrap());

        let plus = GridGraph::square(&[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]).unwrap();
        assert!(!hamiltonian_path_exists(&plus.comm_graph()).unwrap());

        let sq = GridGraph::square(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert!(hamiltonian_path_exists(&sq.comm_graph()).unwrap());
        assert!(hamiltonian_cycle_exists(&sq.comm_graph()).unwrap());
    }

    #[test]
    fn hamiltonian_cap() {
        let cells: Vec<(i64, i64)> = (0..17).map(|i| (i, 0)).collect();
        let g = GridGraph::square(&cells).unwrap();
        assert!(matches!(
            hamiltonian_path_exists(&g.comm_graph()),
            Err(Error::TooManyPoints { .. })
        ));
    }

    #[test]
    fn square_reduction_examples() {
        let r = square_grid_reduction(&GridGraph::square(&[(0, 0)]).unwrap()).unwrap();
        assert_eq!(r.target_weight, 0.25);
        assert_eq!(r.points[1], Point::new(0.25, 0.0));

        let r = square_grid_reduction(&GridGraph::square(&[(0, 0), (1, 0)]).unwrap()).unwrap();
        assert!((r.target_weight - 1.45).abs() < 1e-12);

        let path = GridGraph::square(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        let r = square_grid_reduction(&path).unwrap();
        assert_eq!((r.black, r.white), (2, 1));
        assert!((r.target_weight - 2.7).abs() < 1e-12);
        let t = brute_force_alpha_mst(&r.points, 180.0).unwrap().unwrap();
        assert!((t.weight - r.target_weight).abs() < 1e-9);
    }

    #[test]
    fn square_reduction_rejects() {
        let plus = GridGraph::square(&[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]).unwrap();
        assert!(matches!(
            square_grid_reduction(&plus),
            Err(Error::DegreeTooHigh { vertex: 0, degree: 4 })
        ));
        let apart = GridGraph::square(&[(0, 0), (2, 0)]).unwrap();
        assert_eq!(square_grid_reduction(&apart), Err(Error::DisconnectedGrid));
    }

    #[test]
    fn hex_lattice() {
        let g = GridGraph::hex_cells(&[(0, 0)]).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.edges.len(), 6);
        assert!(hex_vertex(0, 0).is_none());
        assert!(hex_vertex(1, 0).is_none());
        assert!(matches!(GridGraph::hexagonal(&[(3, 1)]), Err(Error::NotOnLattice { index: 0 })));
        let two = GridGraph::hex_cells(&[(0, 0), (1, 0)]).unwrap();
        assert_eq!((two.len(), two.edges.len()), (10, 11));
    }

    #[test]
    fn hex_reduction_single_hexagon() {
        let g = GridGraph::hex_cells(&[(0, 0)]).unwrap();
        let aug = hex_grid_reduction(&g).unwrap();
        assert_eq!(aug.added.len(), 2);
        let s = aug.graph.vertices[aug.added[0]];
        let u = g.vertices[aug.top];
        assert!(s.coincides(Point::new(u.x - 0.5, u.y + SQRT3_2)));
        assert!(hamiltonian_cycle_exists(&g.comm_graph()).unwrap());
        assert!(hamiltonian_path_exists(&aug.graph.comm_graph()).unwrap());
    }

    #[test]
    fn hex_reduction_degrees() {
        let lone = GridGraph::hexagonal(&[(2, 0)]).unwrap();
        assert!(hex_grid_reduction(&lone).unwrap().added.is_empty());

        // u of the 0/120/240 type with only its lower-left edge
        let g = GridGraph::hexagonal(&[(2, 0), (1, -1)]).unwrap();
        let aug = hex_grid_reduction(&g).unwrap();
        assert_eq!(aug.added.len(), 3);
        assert!(!hamiltonian_path_exists(&aug.graph.comm_graph()).unwrap());

        // u of the other type: only the 300 edge
        let g = GridGraph::hexagonal(&[(1, 1), (2, 0)]).unwrap();
        let aug = hex_grid_reduction(&g).unwrap();
        assert_eq!(aug.added.len(), 3);
    }

    #[test]
    fn hex_reduction_falls_back_to_left_neighbour() {
        // u = (1, 1) hangs off (2, 0); the upward w would put t next to (5, 1)
        let g = GridGraph::hexagonal(&[(1, 1), (2, 0), (4, 0), (5, 1)]).unwrap();
        let aug = hex_grid_reduction(&g).unwrap();
        let w = aug.graph.vertices[aug.added[2]];
        assert!(w.coincides(hex_vertex(-1, 1).unwrap()));
    }

    #[test]
    fn hex_reduction_blocked() {
        // as above, plus (-1, -1) next to the left candidate's t
        let g = GridGraph::hexagonal(&[(1, 1), (2, 0), (4, 0), (5, 1), (1, -1), (-1, -1)]).unwrap();
        assert_eq!(hex_grid_reduction(&g), Err(Error::HexAugmentationBlocked));
    }
}
