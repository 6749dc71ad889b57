//! Bounded-angle spanning trees for apertures 180, 120 and 90 degrees.
//!
//! All three builders start from the doubled-MST tour. The 180 case drops the
//! heaviest tour edge. The 120 and 90 cases cut the tour into triplets or
//! eight-point sections, orient each group with a gadget, and chain the
//! groups together with mutual edges between tour-consecutive groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::{orient_pair, orient_quadruplet, orient_triplet, QUADRUPLET_APERTURE, TRIPLET_APERTURE};
use crate::geom::{angular_spread, corner_angle, direction_unchecked, witness_wedge, Point, PointSet, Wedge, ANGLE_TOL_DEG};
use crate::graph::{euclidean_mst, tour_from_tree, SpanningTree, Tour};

/// The three supported apertures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alpha {
    Pi,
    TwoThirdsPi,
    HalfPi,
}

impl Alpha {
    pub const ALL: [Alpha; 3] = [Alpha::Pi, Alpha::TwoThirdsPi, Alpha::HalfPi];

    pub fn degrees(self) -> f64 {
        match self {
            Alpha::Pi => 180.0,
            Alpha::TwoThirdsPi => TRIPLET_APERTURE,
            Alpha::HalfPi => QUADRUPLET_APERTURE,
        }
    }

    /// Weight ratio against the MST that the construction guarantees for `n`
    /// points, if any.
    pub fn ratio_bound(self, n: usize) -> Option<f64> {
        match self {
            Alpha::Pi => Some(2.0),
            Alpha::TwoThirdsPi if n.is_multiple_of(3) => Some(6.0),
            Alpha::HalfPi if n.is_multiple_of(8) => Some(16.0),
            _ => None,
        }
    }

    /// Tree weight bound as a multiple of the tour weight, if any.
    pub fn tour_factor(self, n: usize) -> Option<f64> {
        match self {
            Alpha::Pi => Some(1.0),
            Alpha::TwoThirdsPi if n.is_multiple_of(3) => Some(3.0),
            Alpha::HalfPi if n.is_multiple_of(8) => Some(8.0),
            _ => None,
        }
    }

    fn group_size(self) -> usize {
        match self {
            Alpha::Pi => 1,
            Alpha::TwoThirdsPi => 3,
            Alpha::HalfPi => 8,
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Alpha::Pi => "pi",
            Alpha::TwoThirdsPi => "2pi/3",
            Alpha::HalfPi => "pi/2",
        };
        f.write_str(s)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(['π', ' '], "pi");
        match t.as_str() {
            "pi" | "180" => Ok(Alpha::Pi),
            "2pi/3" | "120" => Ok(Alpha::TwoThirdsPi),
            "pi/2" | "90" => Ok(Alpha::HalfPi),
            _ => match t.parse::<f64>() {
                Ok(d) if (d - 180.0).abs() < 1e-9 => Ok(Alpha::Pi),
                Ok(d) if (d - 120.0).abs() < 1e-9 => Ok(Alpha::TwoThirdsPi),
                Ok(d) if (d - 90.0).abs() < 1e-9 => Ok(Alpha::HalfPi),
                _ => Err(Error::InvalidParameter(format!(
                    "alpha must be pi, 2pi/3 or pi/2 (180, 120, 90), got `{s}`"
                ))),
            },
        }
    }
}

/// Consecutive tour groups and the edge class that separates them.
#[derive(Debug, Clone, PartialEq)]
pub struct TourPartition {
    /// Point indices, each group in tour order. The last group may be short.
    pub groups: Vec<Vec<usize>>,
    /// Offset `j` of the heaviest class `E_j = { e_i : i = j mod k }`.
    pub connecting_class: usize,
    pub class_weights: Vec<f64>,
}

impl TourPartition {
    pub fn group_size(&self) -> usize {
        self.class_weights.len()
    }

    /// Number of groups with exactly `group_size` members.
    pub fn full_groups(&self) -> usize {
        let k = self.group_size();
        self.groups.iter().filter(|g| g.len() == k).count()
    }
}

/// Splits a tour into runs of `k` consecutive points. The run boundaries are
/// the edges of the heaviest residue class mod `k` (lowest offset on ties), so
/// the groups start right after edge `e_j`.
pub fn partition_tour(tour: &Tour, points: &[Point], k: usize) -> Result<TourPartition> {
    let n = tour.len();
    if k == 0 {
        return Err(Error::InvalidParameter("group size must be positive".into()));
    }
    if n < k {
        return Err(Error::TooFewPoints { needed: k, actual: n });
    }
    let mut class_weights = vec![0.0; k];
    for (i, len) in tour.edge_lengths(points).into_iter().enumerate() {
        class_weights[i % k] += len;
    }
    let mut j = 0;
    for (c, &w) in class_weights.iter().enumerate() {
        if w > class_weights[j] {
            j = c;
        }
    }
    let total: f64 = class_weights.iter().sum();
    assert!(
        class_weights[j] * k as f64 >= total * (1.0 - 1e-12),
        "pigeonhole class below average"
    );
    let start = (j + 1) % n;
    let rotated: Vec<usize> = (0..n).map(|i| tour.order[(start + i) % n]).collect();
    let groups = rotated.chunks(k).map(<[usize]>::to_vec).collect();
    Ok(TourPartition {
        groups,
        connecting_class: j,
        class_weights,
    })
}

pub fn partition_tour3(tour: &Tour, points: &[Point]) -> Result<TourPartition> {
    partition_tour(tour, points, 3)
}

pub fn partition_tour8(tour: &Tour, points: &[Point]) -> Result<TourPartition> {
    partition_tour(tour, points, 8)
}

/// A spanning tree together with per-point witness wedges of aperture `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaST {
    pub alpha: Alpha,
    pub tree: SpanningTree,
    pub wedges: Vec<Wedge>,
    pub mst_weight: f64,
    pub tour_weight: f64,
    pub partition: Option<TourPartition>,
}

impl AlphaST {
    pub fn ratio(&self) -> f64 {
        if self.mst_weight > 0.0 {
            self.tree.weight / self.mst_weight
        } else {
            1.0
        }
    }
}

pub fn build_alpha_st(points: &PointSet, alpha: Alpha) -> Result<AlphaST> {
    match alpha {
        Alpha::Pi => build_pi_st(points),
        Alpha::TwoThirdsPi => build_two_thirds_st(points),
        Alpha::HalfPi => build_half_pi_st(points),
    }
}

struct Base {
    mst: SpanningTree,
    tour: Tour,
}

fn base(points: &PointSet) -> Result<Base> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, actual: n });
    }
    let mst = euclidean_mst(points);
    let tour = tour_from_tree(points, &mst);
    Ok(Base { mst, tour })
}

/// Tour minus its heaviest edge: a path, so every spread is at most 180.
pub fn build_pi_st(points: &PointSet) -> Result<AlphaST> {
    let Base { mst, tour } = base(points)?;
    let n = points.len();
    let lengths = tour.edge_lengths(points);
    let mut drop = 0;
    for (i, &l) in lengths.iter().enumerate() {
        if l > lengths[drop] {
            drop = i;
        }
    }
    // with two points the tour is the same edge twice
    let tree = if n == 2 {
        SpanningTree::from_edges(points, [(0, 1)])
    } else {
        SpanningTree::from_edges(points, (0..n).filter(|&i| i != drop).map(|i| tour.edge(i)))
    };
    let wedges = witnesses(points, &tree, Alpha::Pi.degrees())?;
    Ok(AlphaST {
        alpha: Alpha::Pi,
        tree,
        wedges,
        mst_weight: mst.weight,
        tour_weight: tour.weight,
        partition: None,
    })
}

fn witnesses(points: &[Point], tree: &SpanningTree, aperture: f64) -> Result<Vec<Wedge>> {
    let adj = tree.neighbor_lists(points.len());
    adj.iter()
        .enumerate()
        .map(|(v, nbrs)| {
            if nbrs.is_empty() {
                Ok(Wedge::new(points[v], Default::default(), aperture))
            } else {
                let ps: Vec<Point> = nbrs.iter().map(|&u| points[u]).collect();
                witness_wedge(points[v], &ps, aperture)
            }
        })
        .collect()
}

fn mutual(points: &[Point], wedges: &[Option<Wedge>], u: usize, v: usize) -> bool {
    match (&wedges[u], &wedges[v]) {
        (Some(a), Some(b)) => a.contains(points[v]) && b.contains(points[u]),
        _ => false,
    }
}

/// Shortest mutual edge between groups `a` and `b`, ties to the smaller
/// `(min, max)` index pair.
fn best_cross(points: &[Point], wedges: &[Option<Wedge>], a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<(f64, (usize, usize))> = None;
    for &x in a {
        for &y in b {
            if !mutual(points, wedges, x, y) {
                continue;
            }
            let key = (x.min(y), x.max(y));
            let len = points[x].dist(points[y]);
            let better = match best {
                None => true,
                Some((bl, bk)) => len < bl || (len == bl && key < bk),
            };
            if better {
                best = Some((len, key));
            }
        }
    }
    best.map(|(_, k)| k)
}

/// Points a leftover point's wedge at the nearest apex among `anchors` whose
/// wedge already contains it, which yields a mutual edge. Returns the anchor.
fn attach(points: &[Point], wedges: &mut [Option<Wedge>], anchors: &[usize], p: usize, aperture: f64) -> Result<usize> {
    let mut best: Option<(f64, usize)> = None;
    for &a in anchors {
        let w = wedges[a].as_ref().expect("anchor is oriented");
        if !w.contains(points[p]) {
            continue;
        }
        let d = points[a].dist(points[p]);
        if best.is_none_or(|(bd, ba)| d < bd || (d == bd && a < ba)) {
            best = Some((d, a));
        }
    }
    let (_, a) = best.ok_or_else(|| {
        Error::GadgetInvariant(format!("no wedge of the anchoring group contains point {p}"))
    })?;
    wedges[p] = Some(Wedge::new(points[p], direction_unchecked(points[p], points[a]), aperture));
    Ok(a)
}

fn finish(
    points: &PointSet,
    alpha: Alpha,
    base: Base,
    edges: Vec<(usize, usize)>,
    wedges: Vec<Option<Wedge>>,
    partition: Option<TourPartition>,
) -> Result<AlphaST> {
    let n = points.len();
    let tree = SpanningTree::from_edges(points, edges);
    if !tree.spans(n) {
        return Err(Error::GadgetInvariant("assembled edges do not form a spanning tree".into()));
    }
    let wedges = wedges
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| Error::GadgetInvariant(format!("point {i} left unoriented"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphaST {
        alpha,
        tree,
        wedges,
        mst_weight: base.mst.weight,
        tour_weight: base.tour.weight,
        partition,
    })
}

fn pair_st(points: &PointSet, alpha: Alpha, base: Base) -> Result<AlphaST> {
    let ws = orient_pair([points[0], points[1]], alpha.degrees())?;
    finish(points, alpha, base, vec![(0, 1)], ws.map(Some).to_vec(), None)
}

/// Triplets along the tour oriented by the 120 gadget, chained by the
/// shortest mutual edge between consecutive triplets.
pub fn build_two_thirds_st(points: &PointSet) -> Result<AlphaST> {
    let alpha = Alpha::TwoThirdsPi;
    let b = base(points)?;
    let n = points.len();
    if n == 2 {
        return pair_st(points, alpha, b);
    }
    let partition = partition_tour(&b.tour, points, alpha.group_size())?;
    let mut wedges: Vec<Option<Wedge>> = vec![None; n];
    let mut edges = Vec::with_capacity(n - 1);
    let full: Vec<&Vec<usize>> = partition.groups.iter().filter(|g| g.len() == 3).collect();

    for g in &full {
        let t = orient_triplet([points[g[0]], points[g[1]], points[g[2]]])?;
        for (i, w) in t.wedges.into_iter().enumerate() {
            wedges[g[i]] = Some(w);
        }
        for (x, y) in t.inner_edges() {
            edges.push((g[x], g[y]));
        }
    }
    for (k, pair) in full.windows(2).enumerate() {
        let e = best_cross(points, &wedges, pair[0], pair[1]).ok_or(Error::TheoremViolation {
            first: k,
            second: k + 1,
        })?;
        edges.push(e);
    }
    attach_leftovers(points, &partition, &mut wedges, &mut edges, alpha)?;
    finish(points, alpha, b, edges, wedges, Some(partition))
}

fn attach_leftovers(
    points: &[Point],
    partition: &TourPartition,
    wedges: &mut [Option<Wedge>],
    edges: &mut Vec<(usize, usize)>,
    alpha: Alpha,
) -> Result<()> {
    let k = partition.group_size();
    let Some(last) = partition.groups.last().filter(|g| g.len() < k) else {
        return Ok(());
    };
    let anchors = partition
        .groups
        .iter()
        .rev()
        .find(|g| g.len() == k)
        .expect("at least one full group");
    for &p in last {
        let a = attach(points, wedges, anchors, p, alpha.degrees())?;
        edges.push((p, a));
    }
    Ok(())
}

/// Eight-point sections along the tour, each split by x into two
/// quadruplets oriented by the 90 gadget.
pub fn build_half_pi_st(points: &PointSet) -> Result<AlphaST> {
    let alpha = Alpha::HalfPi;
    let b = base(points)?;
    let n = points.len();
    let ap = alpha.degrees();
    match n {
        2 => return pair_st(points, alpha, b),
        3 => return small_half_pi_triple(points, b),
        4..=7 => {
            let mut wedges: Vec<Option<Wedge>> = vec![None; n];
            let mut edges = Vec::with_capacity(n - 1);
            let quad: Vec<usize> = b.tour.order[..4].to_vec();
            orient_quad_into(points, &quad, &mut wedges, &mut edges)?;
            for &p in &b.tour.order[4..] {
                let a = attach(points, &mut wedges, &quad, p, ap)?;
                edges.push((p, a));
            }
            return finish(points, alpha, b, edges, wedges, None);
        }
        _ => {}
    }

    let partition = partition_tour(&b.tour, points, alpha.group_size())?;
    let mut wedges: Vec<Option<Wedge>> = vec![None; n];
    let mut edges = Vec::with_capacity(n - 1);
    let sections: Vec<&Vec<usize>> = partition.groups.iter().filter(|g| g.len() == 8).collect();

    for (s, section) in sections.iter().enumerate() {
        let (left, right) = split_section(points, section);
        orient_quad_into(points, &left, &mut wedges, &mut edges)?;
        orient_quad_into(points, &right, &mut wedges, &mut edges)?;
        let e = best_cross(points, &wedges, &left, &right).ok_or_else(|| {
            Error::SeparationConnectivityViolation {
                context: format!("the two quadruplets of section {s}"),
            }
        })?;
        edges.push(e);
    }
    for (s, pair) in sections.windows(2).enumerate() {
        let e = best_cross(points, &wedges, pair[0], pair[1]).ok_or_else(|| {
            Error::SeparationConnectivityViolation {
                context: format!("sections {s} and {}", s + 1),
            }
        })?;
        edges.push(e);
    }
    attach_leftovers(points, &partition, &mut wedges, &mut edges, alpha)?;
    finish(points, alpha, b, edges, wedges, Some(partition))
}

/// Left and right halves of a section by ascending `(x, y, index)`.
pub fn split_section(points: &[Point], section: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut sorted = section.to_vec();
    sorted.sort_by(|&i, &j| {
        points[i]
            .x
            .total_cmp(&points[j].x)
            .then(points[i].y.total_cmp(&points[j].y))
            .then(i.cmp(&j))
    });
    let right = sorted.split_off(sorted.len() / 2);
    (sorted, right)
}

/// Orients a quadruplet and adds the minimum spanning tree of its induced
/// graph (Kruskal, ties by index pair).
fn orient_quad_into(points: &[Point], quad: &[usize], wedges: &mut [Option<Wedge>], edges: &mut Vec<(usize, usize)>) -> Result<()> {
    let q = orient_quadruplet([points[quad[0]], points[quad[1]], points[quad[2]], points[quad[3]]])?;
    for (i, w) in q.wedges.into_iter().enumerate() {
        wedges[quad[i]] = Some(w);
    }
    let mut cand: Vec<(f64, (usize, usize))> = q
        .edges
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (quad[i], quad[j]);
            (points[a].dist(points[b]), (a.min(b), a.max(b)))
        })
        .collect();
    cand.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let mut comp = [0usize, 1, 2, 3];
    let local = |v: usize| quad.iter().position(|&x| x == v).expect("member");
    let mut added = 0;
    for (_, (a, b)) in cand {
        let (ca, cb) = (comp[local(a)], comp[local(b)]);
        if ca == cb {
            continue;
        }
        for c in comp.iter_mut() {
            if *c == cb {
                *c = ca;
            }
        }
        edges.push((a, b));
        added += 1;
    }
    if added != 3 {
        return Err(Error::GadgetInvariant("quadruplet induced graph is not connected".into()));
    }
    Ok(())
}

/// Three points at aperture 90: the vertex with the smallest triangle angle
/// (at most 60) sees both others, which point back at it.
fn small_half_pi_triple(points: &PointSet, b: Base) -> Result<AlphaST> {
    let ap = QUADRUPLET_APERTURE;
    let angles = [
        corner_angle(points[0], points[1], points[2]),
        corner_angle(points[1], points[0], points[2]),
        corner_angle(points[2], points[0], points[1]),
    ];
    let mut m = 0;
    for i in 1..3 {
        if angles[i] < angles[m] - ANGLE_TOL_DEG {
            m = i;
        }
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != m).collect();
    let mut wedges: Vec<Option<Wedge>> = vec![None; 3];
    wedges[m] = Some(witness_wedge(points[m], &[points[others[0]], points[others[1]]], ap)?);
    for &o in &others {
        wedges[o] = Some(Wedge::new(points[o], direction_unchecked(points[o], points[m]), ap));
    }
    let edges = others.iter().map(|&o| (m, o)).collect();
    finish(points, Alpha::HalfPi, b, edges, wedges, None)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotSpanning,
    WedgeCount { expected: usize, actual: usize },
    ApexMismatch { index: usize },
    ApertureMismatch { index: usize },
    Spread { vertex: usize, spread: f64 },
    EdgeNotMutual { u: usize, v: usize },
    RatioExceeded { ratio: f64, bound: f64 },
    TourBoundExceeded { weight: f64, bound: f64 },
}

/// Independent re-check of an `AlphaST` against a freshly computed MST.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaStReport {
    pub alpha_deg: f64,
    pub n: usize,
    pub weight: f64,
    pub mst_weight: f64,
    pub ratio: f64,
    pub ratio_bound: Option<f64>,
    pub max_spread: f64,
    pub max_spread_vertex: Option<usize>,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

pub fn verify_alpha_st(points: &PointSet, st: &AlphaST) -> AlphaStReport {
    let n = points.len();
    let alpha_deg = st.alpha.degrees();
    let mut violations = Vec::new();

    let spanning = st.tree.spans(n);
    if !spanning {
        violations.push(Violation::NotSpanning);
    }
    let in_range = st.tree.edges.iter().all(|&(a, b)| a < n && b < n);
    let weight: f64 = if in_range {
        st.tree.edges.iter().map(|&(a, b)| points[a].dist(points[b])).sum()
    } else {
        f64::NAN
    };

    let mut max_spread = 0.0;
    let mut max_spread_vertex = None;
    if in_range {
        for (v, nbrs) in st.tree.neighbor_lists(n).iter().enumerate() {
            if nbrs.is_empty() {
                continue;
            }
            let ps: Vec<Point> = nbrs.iter().map(|&u| points[u]).collect();
            let s = angular_spread(points[v], &ps).unwrap_or(f64::INFINITY);
            if max_spread_vertex.is_none() || s > max_spread {
                max_spread = s;
                max_spread_vertex = Some(v);
            }
            if s > alpha_deg + ANGLE_TOL_DEG {
                violations.push(Violation::Spread { vertex: v, spread: s });
            }
        }
    }

    if st.wedges.len() != n {
        violations.push(Violation::WedgeCount {
            expected: n,
            actual: st.wedges.len(),
        });
    } else {
        for (i, w) in st.wedges.iter().enumerate() {
            if !points[i].coincides(w.apex) {
                violations.push(Violation::ApexMismatch { index: i });
            }
            if (w.aperture - alpha_deg).abs() > ANGLE_TOL_DEG {
                violations.push(Violation::ApertureMismatch { index: i });
            }
        }
        if in_range {
            for &(a, b) in &st.tree.edges {
                if !(st.wedges[a].contains(points[b]) && st.wedges[b].contains(points[a])) {
                    violations.push(Violation::EdgeNotMutual { u: a, v: b });
                }
            }
        }
    }

    let mst_weight = euclidean_mst(points).weight;
    let ratio = if mst_weight > 0.0 { weight / mst_weight } else { 1.0 };
    let ratio_bound = st.alpha.ratio_bound(n);
    if let Some(bound) = ratio_bound {
        if ratio.is_nan() || ratio > bound * (1.0 + 1e-9) {
            violations.push(Violation::RatioExceeded { ratio, bound });
        }
    }
    if let Some(f) = st.alpha.tour_factor(n) {
        let bound = f * st.tour_weight;
        if n >= 2 && (weight.is_nan() || weight > bound * (1.0 + 1e-9)) {
            violations.push(Violation::TourBoundExceeded { weight, bound });
        }
    }

    AlphaStReport {
        alpha_deg,
        n,
        weight,
        mst_weight,
        ratio,
        ratio_bound,
        max_spread,
        max_spread_vertex,
        passed: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: &[(f64, f64)]) -> PointSet {
        PointSet::from_xy(c).unwrap()
    }

    fn grid(n: usize) -> PointSet {
        // deterministic scattered points
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let t = i as f64;
                ((t * 0.618_034).fract() * 10.0, (t * 0.414_214 + 0.1).fract() * 10.0)
            })
            .collect();
        set(&pts)
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!("pi".parse::<Alpha>().unwrap(), Alpha::Pi);
        assert_eq!("2π/3".parse::<Alpha>().unwrap(), Alpha::TwoThirdsPi);
        assert_eq!("90".parse::<Alpha>().unwrap(), Alpha::HalfPi);
        assert_eq!("120.0".parse::<Alpha>().unwrap(), Alpha::TwoThirdsPi);
        assert!("100".parse::<Alpha>().is_err());
        for a in Alpha::ALL {
            assert_eq!(a.to_string().parse::<Alpha>().unwrap(), a);
        }
    }

    #[test]
    fn pi_collinear_and_square() {
        let st = build_pi_st(&set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).unwrap();
        assert_eq!(st.tree.weight, 2.0);
        assert_eq!(st.ratio(), 1.0);
        let st = build_pi_st(&set(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        assert_eq!(st.tree.weight, 3.0);
        assert!(verify_alpha_st(&set(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]), &st).passed);
    }

    #[test]
    fn pair_ratio_is_one() {
        let ps = set(&[(0.0, 0.0), (2.0, 1.0)]);
        for a in Alpha::ALL {
            let st = build_alpha_st(&ps, a).unwrap();
            let r = verify_alpha_st(&ps, &st);
            assert!(r.passed, "{a}: {:?}", r.violations);
            assert_eq!(r.ratio, 1.0);
        }
    }

    #[test]
    fn partition_picks_heaviest_class() {
        // tour 0..6 with edge lengths 1,2,3,1,2,3 -> classes (2,4,6)
        let xs = [0.0, 1.0, 3.0, 6.0, 7.0, 9.0];
        let ps = set(&xs.map(|x| (x, 0.0)));
        let tour = Tour {
            order: (0..6).collect(),
            weight: 0.0,
        };
        let p = partition_tour3(&tour, &ps).unwrap();
        // wrap edge (5,0) has length 9 and lands in class 2
        assert_eq!(p.class_weights, vec![1.0 + 1.0, 2.0 + 2.0, 3.0 + 9.0]);
        assert_eq!(p.connecting_class, 2);
        assert_eq!(p.groups, vec![vec![3, 4, 5], vec![0, 1, 2]]);
    }

    #[test]
    fn partition_remainder() {
        let ps = grid(7);
        let tour = Tour {
            order: (0..7).collect(),
            weight: 0.0,
        };
        let p = partition_tour3(&tour, &ps).unwrap();
        let sizes: Vec<usize> = p.groups.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 1]);
        assert!(matches!(
            partition_tour3(&Tour { order: vec![0, 1], weight: 0.0 }, &ps),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn two_thirds_single_triplet() {
        let ps = set(&[(0.0, 0.0), (1.0, 0.0), (0.3, 0.8)]);
        let st = build_two_thirds_st(&ps).unwrap();
        assert_eq!(st.tree.edges.len(), 2);
        assert!(verify_alpha_st(&ps, &st).passed);
    }

    #[test]
    fn every_builder_is_valid_on_small_sets() {
        for n in 2..=40 {
            let ps = grid(n);
            for a in Alpha::ALL {
                let st = build_alpha_st(&ps, a).unwrap_or_else(|e| panic!("{a} n={n}: {e}"));
                let r = verify_alpha_st(&ps, &st);
                assert!(r.passed, "{a} n={n}: {:?}", r.violations);
            }
        }
    }

    #[test]
    fn half_pi_two_squares() {
        let ps = set(&[
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (3.0, 0.0),
            (4.0, 0.0),
            (4.0, 1.0),
            (3.0, 1.0),
        ]);
        let st = build_half_pi_st(&ps).unwrap();
        let r = verify_alpha_st(&ps, &st);
        assert!(r.passed, "{:?}", r.violations);
        assert_eq!(st.tree.edges.len(), 7);
    }

    #[test]
    fn corrupted_tree_is_reported() {
        let ps = set(&[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0)]);
        let mut st = build_two_thirds_st(&ps).unwrap();
        st.tree = SpanningTree::from_edges(&ps, [(0, 1), (0, 2), (0, 3)]);
        let r = verify_alpha_st(&ps, &st);
        assert!(!r.passed);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Spread { vertex: 0, .. })));
    }

    #[test]
    fn deterministic() {
        let ps = grid(29);
        for a in Alpha::ALL {
            assert_eq!(build_alpha_st(&ps, a).unwrap(), build_alpha_st(&ps, a).unwrap());
        }
    }
}
