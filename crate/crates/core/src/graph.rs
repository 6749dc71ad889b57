//! Communication graphs, Euclidean MST and the doubled-tree tour.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet, Wedge, DIST_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: usize,
    pub v: usize,
    pub length: f64,
}

impl Edge {
    pub fn new(a: usize, b: usize, length: f64) -> Self {
        Self {
            u: a.min(b),
            v: a.max(b),
            length,
        }
    }

    pub fn key(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// Undirected simple graph over point indices with Euclidean edge lengths.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CommGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl CommGraph {
    /// Builds from an edge list; duplicates and self-loops are dropped.
    pub fn from_edges(n: usize, points: &[Point], pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut keys: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(keys.len());
        for (u, v) in keys {
            adjacency[u].push(v);
            adjacency[v].push(u);
            edges.push(Edge::new(u, v, points[u].dist(points[v])));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { n, adjacency, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn max_edge_length(&self) -> f64 {
        self.edges.iter().map(|e| e.length).fold(0.0, f64::max)
    }

    /// Component label per vertex, labels numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().iter().all(|&c| c == 0)
    }
}

/// Mutual-containment graph: `u ~ v` iff each point lies in the other's
/// wedge (radii included).
pub fn induced_graph(points: &[Point], wedges: &[Wedge]) -> Result<CommGraph> {
    if points.len() != wedges.len() {
        return Err(Error::WedgeCountMismatch {
            expected: points.len(),
            actual: wedges.len(),
        });
    }
    for (i, (p, w)) in points.iter().zip(wedges).enumerate() {
        if !p.coincides(w.apex) {
            return Err(Error::ApexMismatch { index: i });
        }
    }
    let n = points.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if wedges[u].contains(points[v]) && wedges[v].contains(points[u]) {
                pairs.push((u, v));
            }
        }
    }
    Ok(CommGraph::from_edges(n, points, pairs))
}

/// Edge iff `|pq| <= r` (closed, with relative slack).
pub fn unit_disk_graph(points: &[Point], r: f64) -> CommGraph {
    let reach = r + DIST_TOL * r.max(1.0);
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x).then(a.cmp(&b)));
    let mut pairs = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if points[j].x - points[i].x > reach {
                break;
            }
            if points[i].dist(points[j]) <= reach {
                pairs.push((i, j));
            }
        }
    }
    CommGraph::from_edges(points.len(), points, pairs)
}

/// BFS hop count from `u` to `v`; `None` when unreachable or beyond `cap`.
pub fn hop_distance(g: &CommGraph, u: usize, v: usize, cap: Option<usize>) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let limit = cap.unwrap_or(usize::MAX);
    let mut dist = vec![usize::MAX; g.n];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(x) = queue.pop_front() {
        if dist[x] >= limit {
            continue;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == v {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree {
    /// `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub weight: f64,
}

impl SpanningTree {
    pub fn from_edges(points: &[Point], edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        let weight = edges.iter().map(|&(a, b)| points[a].dist(points[b])).sum();
        Self { edges, weight }
    }

    pub fn neighbor_lists(&self, n: usize) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// `n - 1` distinct edges connecting all `n` vertices.
    pub fn spans(&self, n: usize) -> bool {
        if n == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != n - 1 || self.edges.iter().any(|&(a, b)| a == b || b >= n) {
            return false;
        }
        crate::gadget::is_connected(n, &self.edges)
    }
}

/// Dense Prim; ties go to the lowest index.
pub fn euclidean_mst(points: &PointSet) -> SpanningTree {
    let n = points.len();
    if n <= 1 {
        return SpanningTree {
            edges: Vec::new(),
            weight: 0.0,
        };
    }
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    best[0] = 0.0;
    let mut edges = Vec::with_capacity(n - 1);
    for _ in 0..n {
        let mut u = usize::MAX;
        for v in 0..n {
            if !in_tree[v] && (u == usize::MAX || best[v] < best[u]) {
                u = v;
            }
        }
        in_tree[u] = true;
        if parent[u] != usize::MAX {
            edges.push((parent[u], u));
        }
        for v in 0..n {
            if !in_tree[v] {
                let d = points[u].dist(points[v]);
                if d < best[v] {
                    best[v] = d;
                    parent[v] = u;
                }
            }
        }
    }
    SpanningTree::from_edges(points, edges)
}

/// A closed tour; edge `e_i` joins `order[i]` and `order[(i + 1) % n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tour {
    pub order: Vec<usize>,
    pub weight: f64,
}

impl Tour {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        let n = self.order.len();
        (self.order[i % n], self.order[(i + 1) % n])
    }

    pub fn edge_lengths(&self, points: &[Point]) -> Vec<f64> {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                points[a].dist(points[b])
            })
            .collect()
    }
}

/// Preorder walk of the Euclidean MST from vertex 0, children in ascending
/// index order; repeated vertices are shortcut.
pub fn tsp_tour(points: &PointSet) -> Result<Tour> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, actual: n });
    }
    let mst = euclidean_mst(points);
    Ok(tour_from_tree(points, &mst))
}

pub(crate) fn tour_from_tree(points: &PointSet, mst: &SpanningTree) -> Tour {
    let n = points.len();
    let adj = mst.neighbor_lists(n);
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        order.push(u);
        for &w in adj[u].iter().rev() {
            if !seen[w] {
                stack.push(w);
            }
        }
    }
    let mut tour = Tour { order, weight: 0.0 };
    tour.weight = tour.edge_lengths(points).iter().sum();
    assert!(
        tour.weight <= 2.0 * mst.weight * (1.0 + 1e-9) + 1e-12,
        "shortcut tour exceeds twice the MST"
    );
    tour
}

/// Shortest edge of `g` with one endpoint in `a` and the other in `b`;
/// equal lengths resolve to the smaller `(u, v)`.
pub fn cross_edge(g: &CommGraph, a: &[usize], b: &[usize]) -> Option<Edge> {
    let mut in_b = vec![false; g.vertex_count()];
    for &x in b {
        in_b[x] = true;
    }
    let mut best: Option<Edge> = None;
    for &x in a {
        for &y in g.neighbors(x) {
            if !in_b[y] {
                continue;
            }
            let e = Edge::new(x, y, 0.0);
            let length = g
                .edges()
                .binary_search_by(|f| f.key().cmp(&e.key()))
                .map(|k| g.edges()[k].length)
                .expect("adjacency and edge list agree");
            let e = Edge { length, ..e };
            let better = match best {
                None => true,
                Some(cur) => {
                    e.length < cur.length || (e.length == cur.length && e.key() < cur.key())
                }
            };
            if better {
                best = Some(e);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Direction;

    fn set(c: &[(f64, f64)]) -> PointSet {
        PointSet::from_xy(c).unwrap()
    }

    #[test]
    fn udg_examples() {
        let g = unit_disk_graph(&set(&[(0.0, 0.0), (0.5, 0.0), (2.0, 0.0)]), 1.0);
        assert_eq!(g.edges().iter().map(Edge::key).collect::<Vec<_>>(), vec![(0, 1)]);
        let g = unit_disk_graph(&set(&[(0.0, 0.0), (1.0, 0.0)]), 1.0);
        assert_eq!(g.edge_count(), 1);
        let g = unit_disk_graph(&[], 1.0);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn induced_graph_facing_and_back_to_back() {
        let pts = set(&[(0.0, 0.0), (1.0, 0.0)]);
        let facing = [
            Wedge::new(pts[0], Direction::new(0.0), 120.0),
            Wedge::new(pts[1], Direction::new(180.0), 120.0),
        ];
        assert_eq!(induced_graph(&pts, &facing).unwrap().edge_count(), 1);
        let away = [
            Wedge::new(pts[0], Direction::new(180.0), 120.0),
            Wedge::new(pts[1], Direction::new(0.0), 120.0),
        ];
        assert_eq!(induced_graph(&pts, &away).unwrap().edge_count(), 0);
    }

    #[test]
    fn induced_graph_respects_radius() {
        let pts = set(&[(0.0, 0.0), (3.0, 0.0)]);
        let ws = [
            Wedge::new(pts[0], Direction::new(0.0), 120.0).with_radius(2.0),
            Wedge::new(pts[1], Direction::new(180.0), 120.0),
        ];
        assert_eq!(induced_graph(&pts, &ws).unwrap().edge_count(), 0);
    }

    #[test]
    fn induced_graph_checks_shapes() {
        let pts = set(&[(0.0, 0.0), (1.0, 0.0)]);
        let one = [Wedge::new(pts[0], Direction::new(0.0), 90.0)];
        assert!(matches!(
            induced_graph(&pts, &one),
            Err(Error::WedgeCountMismatch { .. })
        ));
        let wrong = [
            Wedge::new(pts[0], Direction::new(0.0), 90.0),
            Wedge::new(pts[0], Direction::new(0.0), 90.0),
        ];
        assert!(matches!(
            induced_graph(&pts, &wrong),
            Err(Error::ApexMismatch { index: 1 })
        ));
    }

    #[test]
    fn hop_examples() {
        let pts = set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (9.0, 9.0)]);
        let g = CommGraph::from_edges(4, &pts, [(0, 1), (1, 2)]);
        assert_eq!(hop_distance(&g, 0, 2, None), Some(2));
        assert_eq!(hop_distance(&g, 1, 1, None), Some(0));
        assert_eq!(hop_distance(&g, 0, 3, None), None);
        assert_eq!(hop_distance(&g, 0, 2, Some(1)), None);
        assert_eq!(hop_distance(&g, 0, 2, Some(2)), Some(2));
    }

    #[test]
    fn mst_examples() {
        assert_eq!(euclidean_mst(&set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).weight, 2.0);
        assert_eq!(
            euclidean_mst(&set(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).weight,
            3.0
        );
        let h = 3f64.sqrt() / 2.0;
        let t = euclidean_mst(&set(&[(0.0, 0.0), (1.0, 0.0), (0.5, h), (0.5, h / 3.0)]));
        // three spokes of length 1/sqrt(3)
        assert!((t.weight - 3f64.sqrt()).abs() < 1e-12);
        assert!(t.spans(4));
    }

    #[test]
    fn tour_examples() {
        let t = tsp_tour(&set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).unwrap();
        assert_eq!(t.order, vec![0, 1, 2]);
        assert_eq!(t.weight, 4.0);
        let t = tsp_tour(&set(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        assert_eq!(t.weight, 4.0);
        let t = tsp_tour(&set(&[(0.0, 0.0), (3.0, 4.0)])).unwrap();
        assert_eq!(t.weight, 10.0);
        assert!(matches!(
            tsp_tour(&set(&[(0.0, 0.0)])),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn cross_edge_picks_shortest() {
        let pts = set(&[(0.0, 0.0), (1.0, 0.0), (0.0, 5.0), (2.0, 0.0)]);
        let g = CommGraph::from_edges(4, &pts, [(0, 1), (0, 3), (2, 3)]);
        let e = cross_edge(&g, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(e.key(), (0, 1));
        assert_eq!(e.length, 1.0);
        assert!(cross_edge(&g, &[1], &[2]).is_none());
    }

    #[test]
    fn cross_edge_ties_lexicographic() {
        let pts = set(&[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (5.0, 5.0)]);
        let g = CommGraph::from_edges(4, &pts, [(0, 1), (0, 2)]);
        assert_eq!(cross_edge(&g, &[0], &[2, 1]).unwrap().key(), (0, 1));
    }
}
