//! Directional-antenna hop spanner for unit disk graphs.
//!
//! Points are grouped greedily into UDG-connected components of at most three
//! points. Triplets get the 120 gadget; the points of smaller components aim
//! at a covering wedge of a nearby triplet. With every wedge capped at radius
//! 7 the induced graph is a 6-hop spanner of the UDG.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::{orient_pair, orient_triplet, TRIPLET_APERTURE};
use crate::geom::{direction_unchecked, Direction, Point, PointSet, Wedge, DIST_TOL};
use crate::graph::{hop_distance, induced_graph, unit_disk_graph, CommGraph};

pub const WEDGE_RADIUS: f64 = 7.0;
pub const HOP_BOUND: usize = 6;
/// Longest edge from a small component to the triplet it aims at.
pub const ATTACH_BOUND: f64 = 4.0;

/// Uniform grid of unit cells answering "some remaining point within
/// distance 1" queries. The answer is always the lowest such index.
#[derive(Debug, Clone)]
pub struct NeighborIndex<'a> {
    points: &'a [Point],
    cells: HashMap<(i64, i64), Vec<usize>>,
    alive: Vec<bool>,
}

fn cell_of(p: Point) -> (i64, i64) {
    (p.x.floor() as i64, p.y.floor() as i64)
}

impl<'a> NeighborIndex<'a> {
    pub fn new(points: &'a [Point]) -> Self {
        let mut cells: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, &p) in points.iter().enumerate() {
            cells.entry(cell_of(p)).or_default().push(i);
        }
        Self {
            points,
            cells,
            alive: vec![true; points.len()],
        }
    }

    pub fn is_alive(&self, i: usize) -> bool {
        self.alive[i]
    }

    pub fn query(&self, q: Point) -> Option<usize> {
        let reach = 1.0 + DIST_TOL;
        let (cx, cy) = cell_of(q);
        let mut best: Option<usize> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(bucket) = self.cells.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                for &i in bucket {
                    if best.is_some_and(|b| i >= b) {
                        break;
                    }
                    if self.alive[i] && self.points[i].dist(q) <= reach {
                        best = Some(i);
                    }
                }
            }
        }
        best
    }

    pub fn remove(&mut self, i: usize) {
        if std::mem::replace(&mut self.alive[i], false) {
            if let Some(bucket) = self.cells.get_mut(&cell_of(self.points[i])) {
                bucket.retain(|&j| j != i);
            }
        }
    }

    pub fn query_remove(&mut self, q: Point) -> Option<usize> {
        let hit = self.query(q)?;
        self.remove(hit);
        Some(hit)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentPartition {
    /// Groups of 1 to 3 indices, in creation order, each listed in pick order.
    pub components: Vec<Vec<usize>>,
    /// Per component: for size < 3, a point of a size-3 component adjacent in
    /// the UDG (`None` for triplets and when no triplet exists).
    pub anchors: Vec<Option<usize>>,
}

impl ComponentPartition {
    /// Component id of every point.
    pub fn membership(&self, n: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; n];
        for (c, comp) in self.components.iter().enumerate() {
            for &p in comp {
                of[p] = c;
            }
        }
        of
    }

    pub fn size_counts(&self) -> [usize; 3] {
        let mut counts = [0; 3];
        for c in &self.components {
            counts[c.len() - 1] += 1;
        }
        counts
    }
}

/// Greedy partition: seed with the lowest remaining index and grow twice by
/// the lowest remaining index within distance 1 of the component.
pub fn greedy_components(points: &PointSet) -> Result<ComponentPartition> {
    let udg = unit_disk_graph(points, 1.0);
    if !udg.is_connected() {
        return Err(Error::DisconnectedUdg);
    }
    greedy_components_in(points, &udg)
}

fn greedy_components_in(points: &PointSet, udg: &CommGraph) -> Result<ComponentPartition> {
    let n = points.len();
    let mut index = NeighborIndex::new(points);
    let mut components = Vec::new();
    for seed in 0..n {
        if !index.is_alive(seed) {
            continue;
        }
        index.remove(seed);
        let mut comp = vec![seed];
        while comp.len() < 3 {
            let Some(next) = comp.iter().filter_map(|&m| index.query(points[m])).min() else {
                break;
            };
            index.remove(next);
            comp.push(next);
        }
        components.push(comp);
    }

    let mut partition = ComponentPartition {
        anchors: vec![None; components.len()],
        components,
    };
    let of = partition.membership(n);
    let sizes: Vec<usize> = partition.components.iter().map(Vec::len).collect();
    let whole_graph = partition.components.len() == 1;
    for (c, comp) in partition.components.iter().enumerate() {
        if comp.len() == 3 || whole_graph {
            continue;
        }
        let mut nearest: Option<(f64, usize)> = None;
        for &p in comp {
            for &q in udg.neighbors(p) {
                if of[q] == c {
                    continue;
                }
                if sizes[of[q]] != 3 {
                    return Err(Error::ClaimViolation { component: c });
                }
                let d = points[p].dist(points[q]);
                if nearest.is_none_or(|(bd, bq)| d < bd || (d == bd && q < bq)) {
                    nearest = Some((d, q));
                }
            }
        }
        // connected UDG with more than one component: every component has an
        // outside neighbour
        let (_, q) = nearest.ok_or(Error::ClaimViolation { component: c })?;
        partition.anchors[c] = Some(q);
    }
    Ok(partition)
}

fn check_partition(n: usize, partition: &ComponentPartition) -> Result<()> {
    if partition.anchors.len() != partition.components.len() {
        return Err(Error::PartitionInvalid("one anchor slot per component expected".into()));
    }
    let mut seen = vec![false; n];
    for comp in &partition.components {
        if comp.is_empty() || comp.len() > 3 {
            return Err(Error::PartitionInvalid(format!("component of size {}", comp.len())));
        }
        for &p in comp {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::PartitionInvalid(format!("point {p} missing or repeated")));
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::PartitionInvalid("not every point is covered".into()));
    }
    Ok(())
}

/// Aperture-120, radius-7 wedges for every point.
pub fn orient_components(points: &PointSet, partition: &ComponentPartition) -> Result<Vec<Wedge>> {
    let n = points.len();
    check_partition(n, partition)?;
    let of = partition.membership(n);
    let mut wedges: Vec<Option<Wedge>> = vec![None; n];

    for comp in partition.components.iter().filter(|c| c.len() == 3) {
        let t = orient_triplet([points[comp[0]], points[comp[1]], points[comp[2]]])?;
        for (i, w) in t.wedges.into_iter().enumerate() {
            wedges[comp[i]] = Some(w);
        }
    }

    for (c, comp) in partition.components.iter().enumerate() {
        if comp.len() == 3 {
            continue;
        }
        let Some(anchor) = partition.anchors[c] else {
            if partition.components.len() != 1 {
                return Err(Error::PartitionInvalid(format!("component {c} has no anchor")));
            }
            // whole graph is this one component
            if comp.len() == 2 {
                let ws = orient_pair([points[comp[0]], points[comp[1]]], TRIPLET_APERTURE)?;
                wedges[comp[0]] = Some(ws[0]);
                wedges[comp[1]] = Some(ws[1]);
            } else {
                wedges[comp[0]] = Some(Wedge::new(points[comp[0]], Direction::new(0.0), TRIPLET_APERTURE));
            }
            continue;
        };
        let target = &partition.components[of.get(anchor).copied().ok_or_else(|| {
            Error::PartitionInvalid(format!("anchor {anchor} out of range"))
        })?];
        if target.len() != 3 {
            return Err(Error::PartitionInvalid(format!(
                "anchor of component {c} is not in a triplet"
            )));
        }
        for &p in comp {
            let mut best: Option<(f64, usize)> = None;
            for &x in target {
                let w = wedges[x].as_ref().expect("triplets oriented first");
                if !w.contains(points[p]) {
                    continue;
                }
                let d = points[x].dist(points[p]);
                if best.is_none_or(|(bd, bx)| d < bd || (d == bd && x < bx)) {
                    best = Some((d, x));
                }
            }
            let (_, x) = best.ok_or_else(|| {
                Error::GadgetInvariant(format!("no wedge of the anchor triplet covers point {p}"))
            })?;
            wedges[p] = Some(Wedge::new(
                points[p],
                direction_unchecked(points[p], points[x]),
                TRIPLET_APERTURE,
            ));
        }
    }

    Ok(wedges
        .into_iter()
        .map(|w| w.expect("every point oriented").with_radius(WEDGE_RADIUS))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HopCase {
    SameTriplet,
    SamePair,
    BothTriplets,
    Mixed,
}

impl HopCase {
    pub const ALL: [HopCase; 4] = [
        HopCase::SameTriplet,
        HopCase::SamePair,
        HopCase::BothTriplets,
        HopCase::Mixed,
    ];

    pub fn bound(self) -> usize {
        match self {
            HopCase::SameTriplet => 2,
            HopCase::SamePair => 4,
            HopCase::BothTriplets => 5,
            HopCase::Mixed => 6,
        }
    }

    pub fn classify(partition: &ComponentPartition, of: &[usize], u: usize, v: usize) -> HopCase {
        let (cu, cv) = (of[u], of[v]);
        let size = |c: usize| partition.components[c].len();
        if cu == cv {
            if size(cu) == 3 {
                HopCase::SameTriplet
            } else {
                HopCase::SamePair
            }
        } else if size(cu) == 3 && size(cv) == 3 {
            HopCase::BothTriplets
        } else {
            HopCase::Mixed
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopViolation {
    pub u: usize,
    pub v: usize,
    /// `None` when no path within the cap exists.
    pub hops: Option<usize>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopReport {
    pub bound: usize,
    pub checked_edges: usize,
    /// Largest hop count over UDG edges; `None` if some edge exceeded the cap.
    pub max_hops: Option<usize>,
    pub violations: Vec<HopViolation>,
    pub passed: bool,
}

/// Checks that every edge of `udg` is bridged by a path of at most `c` hops
/// in `g`.
pub fn verify_hop_spanner(g: &CommGraph, udg: &CommGraph, c: usize) -> HopReport {
    let mut max_hops = Some(0);
    let mut violations = Vec::new();
    for e in udg.edges() {
        let hops = if e.u < g.vertex_count() && e.v < g.vertex_count() {
            hop_distance(g, e.u, e.v, Some(c))
        } else {
            None
        };
        match hops {
            Some(h) => max_hops = max_hops.map(|m: usize| m.max(h)),
            None => {
                max_hops = None;
                violations.push(HopViolation {
                    u: e.u,
                    v: e.v,
                    hops: None,
                    bound: c,
                });
            }
        }
    }
    HopReport {
        bound: c,
        checked_edges: udg.edge_count(),
        max_hops,
        passed: violations.is_empty(),
        violations,
    }
}

/// Per-case maximum hop count over UDG edges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub cases: Vec<CaseStat>,
    pub violations: Vec<HopViolation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseStat {
    pub case: HopCase,
    pub edges: usize,
    pub max_hops: usize,
}

pub fn classify_hops(g: &CommGraph, udg: &CommGraph, partition: &ComponentPartition) -> CaseReport {
    let of = partition.membership(udg.vertex_count());
    let mut cases: Vec<CaseStat> = HopCase::ALL
        .iter()
        .map(|&case| CaseStat {
            case,
            edges: 0,
            max_hops: 0,
        })
        .collect();
    let mut violations = Vec::new();
    for e in udg.edges() {
        let case = HopCase::classify(partition, &of, e.u, e.v);
        let bound = case.bound();
        let stat = cases.iter_mut().find(|s| s.case == case).expect("all cases listed");
        stat.edges += 1;
        match hop_distance(g, e.u, e.v, Some(bound)) {
            Some(h) => stat.max_hops = stat.max_hops.max(h),
            None => violations.push(HopViolation {
                u: e.u,
                v: e.v,
                hops: hop_distance(g, e.u, e.v, None),
                bound,
            }),
        }
    }
    CaseReport { cases, violations }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpannerStats {
    pub udg_edges: usize,
    pub spanner_edges: usize,
    /// Number of components of size 1, 2 and 3.
    pub component_sizes: [usize; 3],
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone)]
pub struct SpannerResult {
    pub wedges: Vec<Wedge>,
    pub graph: CommGraph,
    pub partition: ComponentPartition,
    pub max_edge_length: f64,
    pub hop_stretch: usize,
    pub stats: SpannerStats,
}

pub fn build_spanner(points: &PointSet) -> Result<SpannerResult> {
    let start = Instant::now();
    let udg = unit_disk_graph(points, 1.0);
    if !udg.is_connected() {
        return Err(Error::DisconnectedUdg);
    }
    let partition = greedy_components_in(points, &udg)?;
    let wedges = orient_components(points, &partition)?;
    let graph = induced_graph(points, &wedges)?;

    let bound = WEDGE_RADIUS * (1.0 + DIST_TOL);
    if let Some(e) = graph.edges().iter().find(|e| e.length > bound) {
        return Err(Error::EdgeTooLong {
            u: e.u,
            v: e.v,
            length: e.length,
            bound: WEDGE_RADIUS,
        });
    }
    let report = verify_hop_spanner(&graph, &udg, HOP_BOUND);
    if let Some(v) = report.violations.first() {
        return Err(Error::HopBoundViolation {
            u: v.u,
            v: v.v,
            hops: hop_distance(&graph, v.u, v.v, None),
            bound: HOP_BOUND,
        });
    }

    Ok(SpannerResult {
        max_edge_length: graph.max_edge_length(),
        hop_stretch: report.max_hops.unwrap_or(0),
        stats: SpannerStats {
            udg_edges: udg.edge_count(),
            spanner_edges: graph.edge_count(),
            component_sizes: partition.size_counts(),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        },
        wedges,
        graph,
        partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: &[(f64, f64)]) -> PointSet {
        PointSet::from_xy(c).unwrap()
    }

    #[test]
    fn index_queries() {
        let ps = set(&[(0.5, 0.0), (5.0, 5.0)]);
        let mut idx = NeighborIndex::new(&ps);
        assert_eq!(idx.query(Point::new(0.0, 0.0)), Some(0));
        assert_eq!(idx.query(Point::new(-1.0, 0.0)), None);
        assert_eq!(idx.query_remove(Point::new(0.0, 0.0)), Some(0));
        assert_eq!(idx.query_remove(Point::new(0.0, 0.0)), None);
    }

    #[test]
    fn index_prefers_lowest_index_across_cells() {
        let ps = set(&[(1.05, 0.3), (-0.1, 0.0), (0.2, 0.1)]);
        let idx = NeighborIndex::new(&ps);
        assert_eq!(idx.query(Point::new(0.1, 0.1)), Some(0));
    }

    #[test]
    fn greedy_examples() {
        let p = greedy_components(&set(&[(0.0, 0.0), (0.5, 0.0), (0.2, 0.4)])).unwrap();
        assert_eq!(p.components, vec![vec![0, 1, 2]]);

        let p = greedy_components(&set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)])).unwrap();
        assert_eq!(p.components, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(p.anchors, vec![None, Some(2)]);

        let p = greedy_components(&set(&[(0.0, 0.0), (0.5, 0.5)])).unwrap();
        assert_eq!(p.components, vec![vec![0, 1]]);
        assert_eq!(p.anchors, vec![None]);

        assert_eq!(
            greedy_components(&set(&[(0.0, 0.0), (3.0, 0.0)])),
            Err(Error::DisconnectedUdg)
        );
    }

    #[test]
    fn collinear_four_attaches_within_four() {
        let ps = set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]);
        let r = build_spanner(&ps).unwrap();
        let e: Vec<_> = r.graph.edges().iter().filter(|e| e.u == 3 || e.v == 3).collect();
        assert!(!e.is_empty());
        assert!(e.iter().all(|e| e.length <= ATTACH_BOUND));
        assert!(r.hop_stretch <= HOP_BOUND);
    }

    #[test]
    fn tiny_instances() {
        let r = build_spanner(&set(&[(0.0, 0.0)])).unwrap();
        assert_eq!(r.wedges[0].bisector.degrees(), 0.0);
        assert_eq!(r.hop_stretch, 0);

        let r = build_spanner(&set(&[(0.0, 0.0), (0.6, 0.3)])).unwrap();
        assert_eq!(r.graph.edge_count(), 1);

        let r = build_spanner(&set(&[(0.0, 0.0), (0.5, 0.0), (0.2, 0.4)])).unwrap();
        assert!(r.hop_stretch <= 2);
        assert!(r.wedges.iter().all(|w| w.radius == Some(WEDGE_RADIUS)));
    }

    #[test]
    fn verifier_sensitivity() {
        let ps = set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        let udg = unit_disk_graph(&ps, 1.0);
        assert!(verify_hop_spanner(&udg, &udg, 1).passed);
        let cut = CommGraph::from_edges(3, &ps, [(0, 1)]);
        let r = verify_hop_spanner(&cut, &udg, 6);
        assert!(!r.passed);
        assert_eq!(r.violations[0].u, 1);
        assert_eq!(r.violations[0].v, 2);
    }

    #[test]
    fn orient_rejects_bad_partition() {
        let ps = set(&[(0.0, 0.0), (0.5, 0.0)]);
        let bad = ComponentPartition {
            components: vec![vec![0]],
            anchors: vec![None],
        };
        assert!(matches!(orient_components(&ps, &bad), Err(Error::PartitionInvalid(_))));
    }

    #[test]
    fn dense_cluster_lattice() {
        let mut pts = Vec::new();
        for i in 0..12 {
            for j in 0..12 {
                pts.push((i as f64 * 0.7 + 0.05 * (j % 3) as f64, j as f64 * 0.65));
            }
        }
        let ps = set(&pts);
        let r = build_spanner(&ps).unwrap();
        assert!(r.hop_stretch <= HOP_BOUND);
        assert!(r.max_edge_length <= WEDGE_RADIUS);
        let udg = unit_disk_graph(&ps, 1.0);
        let cases = classify_hops(&r.graph, &udg, &r.partition);
        assert!(cases.violations.is_empty(), "{:?}", cases.violations);
    }
}
