//! Points, directions and wedges.
//!
//! Angles are degrees everywhere; radians only appear at trig call sites.
//! Direction 0 is the +x axis and angles grow counter-clockwise.
//! Wedges are closed: a point on a bounding ray is inside.

use std::fmt;
use std::ops::{Add, Deref, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Angular slack, in degrees, for every containment test.
pub const ANGLE_TOL_DEG: f64 = 1e-9;

/// Relative slack for distance comparisons (radius, duplicates, unit disks).
pub const DIST_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn scale(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    /// Unit vector pointing along `dir`.
    pub fn unit(dir: Direction) -> Point {
        let (s, c) = dir.degrees().to_radians().sin_cos();
        Point::new(c, s)
    }

    /// Rotates counter-clockwise about the origin.
    pub fn rotate(self, degrees: f64) -> Point {
        let (s, c) = degrees.to_radians().sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    fn magnitude(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    /// True when the two points are closer than the duplicate tolerance.
    pub fn coincides(self, other: Point) -> bool {
        let scale = 1f64.max(self.magnitude()).max(other.magnitude());
        self.dist(other) <= DIST_TOL * scale
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// A validated point set: finite coordinates, no two points coincide.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet(Vec<Point>);

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate { index });
        }
        if let Some((first, second)) = find_duplicate(&points) {
            return Err(Error::DuplicatePoint { first, second });
        }
        Ok(Self(points))
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| c.into()).collect())
    }

    /// Drops later copies of coinciding points, keeping first occurrences.
    pub fn dedup(points: Vec<Point>) -> Result<Self> {
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate { index });
        }
        let mut rest = points;
        while let Some((_, second)) = find_duplicate(&rest) {
            rest.remove(second);
        }
        Ok(Self(rest))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Point> {
        self.0
    }

    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet(indices.iter().map(|&i| self.0[i]).collect())
    }

    /// Largest pairwise distance (0 for fewer than two points).
    pub fn diameter(&self) -> f64 {
        diameter(&self.0)
    }
}

impl Deref for PointSet {
    type Target = [Point];
    fn deref(&self) -> &[Point] {
        &self.0
    }
}

pub(crate) fn diameter(points: &[Point]) -> f64 {
    let mut best = 0f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(p.dist(*q));
        }
    }
    best
}

pub(crate) fn centroid(points: &[Point]) -> Point {
    let n = points.len().max(1) as f64;
    let sum = points.iter().fold(Point::new(0.0, 0.0), |acc, p| acc + *p);
    sum.scale(1.0 / n)
}

/// Returns the first coinciding pair `(i, j)` with `i < j`, sweeping by x.
fn find_duplicate(points: &[Point]) -> Option<(usize, usize)> {
    let scale = points
        .iter()
        .map(|p| p.magnitude())
        .fold(1f64, f64::max);
    let window = DIST_TOL * scale;
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x).then(a.cmp(&b)));
    let mut found: Option<(usize, usize)> = None;
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if points[j].x - points[i].x > window {
                break;
            }
            if points[i].coincides(points[j]) {
                let pair = (i.min(j), i.max(j));
                if found.is_none_or(|f| pair < f) {
                    found = Some(pair);
                }
            }
        }
    }
    found
}

/// An orientation in degrees, kept in `[0, 360)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction(f64);

impl Direction {
    pub fn new(degrees: f64) -> Self {
        let mut d = degrees.rem_euclid(360.0);
        // rem_euclid can round tiny negatives up to exactly 360
        if d >= 360.0 {
            d = 0.0;
        }
        Direction(d)
    }

    pub fn degrees(self) -> f64 {
        self.0
    }

    pub fn rotated(self, degrees: f64) -> Self {
        Direction::new(self.0 + degrees)
    }

    pub fn reversed(self) -> Self {
        self.rotated(180.0)
    }

    /// Counter-clockwise sweep from `self` to `other`, in `[0, 360)`.
    pub fn ccw_to(self, other: Direction) -> f64 {
        Direction::new(other.0 - self.0).0
    }

    /// Smallest absolute angle between the two directions, in `[0, 180]`.
    pub fn separation(self, other: Direction) -> f64 {
        let d = self.ccw_to(other);
        d.min(360.0 - d)
    }

    /// Equal modulo 360 within the angular tolerance.
    pub fn approx_eq(self, other: Direction, tol: f64) -> bool {
        self.separation(other) <= tol
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.0)
    }
}

/// Direction of the vector `q - p`.
pub fn direction(p: Point, q: Point) -> Result<Direction> {
    if p.coincides(q) {
        return Err(Error::DuplicatePoint { first: 0, second: 1 });
    }
    Ok(direction_unchecked(p, q))
}

pub(crate) fn direction_unchecked(p: Point, q: Point) -> Direction {
    Direction::new((q.y - p.y).atan2(q.x - p.x).to_degrees())
}

/// A counter-clockwise arc of directions starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleInterval {
    pub start: Direction,
    pub extent: f64,
}

impl AngleInterval {
    pub fn new(start: Direction, extent: f64) -> Self {
        debug_assert!(extent > 0.0 && extent <= 360.0);
        Self { start, extent }
    }

    pub fn end(&self) -> Direction {
        self.start.rotated(self.extent)
    }

    pub fn contains(&self, d: Direction) -> bool {
        if self.extent >= 360.0 - ANGLE_TOL_DEG {
            return true;
        }
        let off = self.start.ccw_to(d);
        off <= self.extent + ANGLE_TOL_DEG || off >= 360.0 - ANGLE_TOL_DEG
    }
}

/// Whether the union of the arcs is the whole circle (up to the angular tolerance).
pub fn covers_full_circle(intervals: &[AngleInterval]) -> bool {
    if intervals.iter().any(|iv| iv.extent >= 360.0 - ANGLE_TOL_DEG) {
        return true;
    }
    let mut pieces: Vec<(f64, f64)> = Vec::with_capacity(intervals.len() * 2);
    for iv in intervals {
        let s = iv.start.degrees();
        let e = s + iv.extent;
        if e <= 360.0 {
            pieces.push((s, e));
        } else {
            pieces.push((s, 360.0));
            pieces.push((0.0, e - 360.0));
        }
    }
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut reach = 0.0;
    for (s, e) in pieces {
        if s > reach + ANGLE_TOL_DEG {
            return false;
        }
        reach = f64::max(reach, e);
    }
    reach >= 360.0 - ANGLE_TOL_DEG
}

/// A directional antenna: a closed circular sector anchored at `apex`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wedge {
    pub apex: Point,
    pub bisector: Direction,
    pub aperture: f64,
    /// `None` means unbounded range.
    pub radius: Option<f64>,
}

impl Wedge {
    pub fn new(apex: Point, bisector: Direction, aperture: f64) -> Self {
        assert!(
            aperture > 0.0 && aperture <= 360.0,
            "aperture must lie in (0, 360]"
        );
        Self {
            apex,
            bisector,
            aperture,
            radius: None,
        }
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        assert!(radius > 0.0, "radius must be positive");
        self.radius = Some(radius);
        self
    }

    pub fn left_ray(&self) -> Direction {
        self.bisector.rotated(self.aperture / 2.0)
    }

    pub fn right_ray(&self) -> Direction {
        self.bisector.rotated(-self.aperture / 2.0)
    }

    pub fn reverse_ray(&self) -> Direction {
        self.bisector.reversed()
    }

    /// Directions covered far from the apex.
    pub fn interval(&self) -> AngleInterval {
        AngleInterval::new(self.right_ray(), self.aperture)
    }

    pub fn contains_direction(&self, d: Direction) -> bool {
        self.interval().contains(d)
    }

    pub fn contains(&self, q: Point) -> bool {
        if self.apex.coincides(q) {
            return true;
        }
        if let Some(r) = self.radius {
            if self.apex.dist(q) > r + DIST_TOL * r.max(1.0) {
                return false;
            }
        }
        self.contains_direction(direction_unchecked(self.apex, q))
    }
}

/// Free-function form of [`Wedge::contains`].
pub fn wedge_contains(w: &Wedge, q: Point) -> bool {
    w.contains(q)
}

/// A wedge with its ray vectors precomputed, for bulk point sampling.
///
/// Agrees with [`Wedge::contains`] except within about `1e-11` radians of a
/// bounding ray.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CompiledWedge {
    apex: Point,
    right: Point,
    left: Point,
    kind: ApertureKind,
    radius_sq: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
enum ApertureKind {
    Full,
    Convex,
    Reflex,
}

const SIN_TOL: f64 = 1.745_329_252e-11; // sin(1e-9 degrees)

impl CompiledWedge {
    pub(crate) fn new(w: &Wedge) -> Self {
        let kind = if w.aperture >= 360.0 - ANGLE_TOL_DEG {
            ApertureKind::Full
        } else if w.aperture <= 180.0 {
            ApertureKind::Convex
        } else {
            ApertureKind::Reflex
        };
        Self {
            apex: w.apex,
            right: Point::unit(w.right_ray()),
            left: Point::unit(w.left_ray()),
            kind,
            radius_sq: w.radius.map(|r| {
                let r = r + DIST_TOL * r.max(1.0);
                r * r
            }),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, q: Point) -> bool {
        let v = q - self.apex;
        let len_sq = v.dot(v);
        if let Some(r2) = self.radius_sq {
            if len_sq > r2 {
                return false;
            }
        }
        let slack = SIN_TOL * len_sq.sqrt();
        match self.kind {
            ApertureKind::Full => true,
            ApertureKind::Convex => {
                self.right.cross(v) >= -slack && v.cross(self.left) >= -slack
            }
            ApertureKind::Reflex => {
                !(self.left.cross(v) > slack && v.cross(self.right) > slack)
            }
        }
    }
}

/// Smallest angle at `center` containing every ray towards `neighbors`.
pub fn angular_spread(center: Point, neighbors: &[Point]) -> Result<f64> {
    Ok(spanning_arc(center, neighbors)?.map_or(0.0, |arc| arc.1))
}

/// The narrowest arc `(start, extent)` holding all neighbour directions,
/// or `None` when `neighbors` is empty.
pub fn spanning_arc(center: Point, neighbors: &[Point]) -> Result<Option<(Direction, f64)>> {
    let mut dirs = Vec::with_capacity(neighbors.len());
    for (k, q) in neighbors.iter().enumerate() {
        if center.coincides(*q) {
            return Err(Error::DuplicatePoint {
                first: 0,
                second: k + 1,
            });
        }
        dirs.push(direction_unchecked(center, *q).degrees());
    }
    Ok(arc_of_directions(&mut dirs))
}

/// Same as [`spanning_arc`] on raw direction values (sorted in place).
pub(crate) fn arc_of_directions(dirs: &mut [f64]) -> Option<(Direction, f64)> {
    if dirs.is_empty() {
        return None;
    }
    dirs.sort_by(f64::total_cmp);
    let n = dirs.len();
    // gap after the last direction wraps to the first
    let mut best_gap = dirs[0] + 360.0 - dirs[n - 1];
    let mut start = dirs[0];
    for k in 1..n {
        let gap = dirs[k] - dirs[k - 1];
        if gap > best_gap {
            best_gap = gap;
            start = dirs[k];
        }
    }
    let extent = (360.0 - best_gap).max(0.0);
    Some((Direction::new(start), extent))
}

/// Wedge of the given aperture at `center` centred on the spanning arc of
/// `neighbors`. Holds every neighbour whenever the spread fits the aperture.
pub fn witness_wedge(center: Point, neighbors: &[Point], aperture: f64) -> Result<Wedge> {
    let bisector = match spanning_arc(center, neighbors)? {
        Some((start, extent)) => start.rotated(extent / 2.0),
        None => Direction::new(0.0),
    };
    Ok(Wedge::new(center, bisector, aperture))
}

/// Sextant `i` in `1..=6` with `d` in `[(i-1)*60, i*60)`.
pub fn sextant_of(d: Direction) -> u8 {
    ((d.degrees() / 60.0).floor() as u8 + 1).min(6)
}

/// Interior angle at `vertex` of the triangle `(vertex, p, q)`, in degrees.
pub(crate) fn corner_angle(vertex: Point, p: Point, q: Point) -> f64 {
    let u = p - vertex;
    let v = q - vertex;
    u.cross(v).abs().atan2(u.dot(v)).to_degrees()
}
