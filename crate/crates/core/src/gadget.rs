//! Orientation recipes for small point groups.
//!
//! A gadget orients the wedges of two, three or four points so that the
//! induced graph of the group is connected and, for triplets and
//! quadruplets, the union of the wedges covers the whole plane.

use crate::error::{Error, Result};
use crate::geom::{
    centroid, corner_angle, covers_full_circle, diameter, direction_unchecked, AngleInterval,
    CompiledWedge, Direction, Point, Wedge, ANGLE_TOL_DEG, DIST_TOL,
};

pub const TRIPLET_APERTURE: f64 = 120.0;
pub const QUADRUPLET_APERTURE: f64 = 90.0;

/// Sample count for the planar half of [`verify_coverage`].
pub const COVERAGE_SAMPLES: usize = 10_000;

/// Default sampling radius for coverage checks, in multiples of the group diameter.
pub const DEFAULT_COVERAGE_BOUND: f64 = 1e3;

/// Bisectors of roles a, b, c in the canonical triplet frame.
pub const CANONICAL_BISECTORS: [f64; 3] = [240.0, 0.0, 120.0];

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653; // pi * (3 - sqrt 5)

/// Input indices playing the roles a, b, c.
///
/// b has the smallest triangle angle and a the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripletRoles {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Maps input coordinates into the canonical triplet frame: b at the origin,
/// c on the positive x axis, a on or above the x axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub origin: Point,
    /// Rotation of the input frame relative to the canonical one, in degrees.
    pub rotation: f64,
    /// Whether the canonical frame is mirrored across the x axis.
    pub reflected: bool,
}

impl RigidMotion {
    pub fn to_canonical(&self, p: Point) -> Point {
        let q = (p - self.origin).rotate(-self.rotation);
        if self.reflected {
            Point::new(q.x, -q.y)
        } else {
            q
        }
    }

    pub fn from_canonical(&self, q: Point) -> Point {
        let q = if self.reflected {
            Point::new(q.x, -q.y)
        } else {
            q
        };
        q.rotate(self.rotation) + self.origin
    }

    /// Input-frame direction of a canonical-frame direction.
    pub fn direction_from_canonical(&self, canonical: f64) -> Direction {
        if self.reflected {
            Direction::new(self.rotation - canonical)
        } else {
            Direction::new(self.rotation + canonical)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TripletOrientation {
    pub roles: TripletRoles,
    pub motion: RigidMotion,
    /// Aperture-120 wedges in input order.
    pub wedges: [Wedge; 3],
}

impl TripletOrientation {
    /// The two edges every triplet gadget guarantees: (a, b) and (b, c).
    pub fn inner_edges(&self) -> [(usize, usize); 2] {
        let r = self.roles;
        [(r.a, r.b), (r.b, r.c)]
    }

    /// Bisector of each input point expressed in the canonical frame.
    pub fn canonical_bisectors(&self) -> [Direction; 3] {
        let m = self.motion;
        self.wedges.map(|w| {
            let rel = w.bisector.degrees() - m.rotation;
            Direction::new(if m.reflected { -rel } else { rel })
        })
    }
}

/// Orients three wedges of aperture 120 so that (a, b) and (b, c) are edges
/// and the wedges cover the plane.
///
/// Roles follow ascending triangle angle (ties by input index). In a frame
/// where b is at the origin, c lies on the positive x axis and a is not below
/// it, the bisectors are 240 for a, 0 for b and 120 for c. Collinear input is
/// fine: the middle point becomes a and the closed wedge boundaries carry the
/// edges.
pub fn orient_triplet(points: [Point; 3]) -> Result<TripletOrientation> {
    check_distinct(&points)?;

    let angles = [
        corner_angle(points[0], points[1], points[2]),
        corner_angle(points[1], points[0], points[2]),
        corner_angle(points[2], points[0], points[1]),
    ];
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| {
        if (angles[i] - angles[j]).abs() <= ANGLE_TOL_DEG {
            i.cmp(&j)
        } else {
            angles[i].total_cmp(&angles[j])
        }
    });
    let roles = TripletRoles {
        b: order[0],
        c: order[1],
        a: order[2],
    };

    let (pa, pb, pc) = (points[roles.a], points[roles.b], points[roles.c]);
    let motion = RigidMotion {
        origin: pb,
        rotation: direction_unchecked(pb, pc).degrees(),
        reflected: (pc - pb).cross(pa - pb) < 0.0,
    };

    let mut bisectors = [Direction::new(0.0); 3];
    for (role_index, &canonical) in [roles.a, roles.b, roles.c]
        .iter()
        .zip(CANONICAL_BISECTORS.iter())
    {
        bisectors[*role_index] = motion.direction_from_canonical(canonical);
    }
    let wedges = [0, 1, 2].map(|i| Wedge::new(points[i], bisectors[i], TRIPLET_APERTURE));

    let out = TripletOrientation {
        roles,
        motion,
        wedges,
    };
    check_triplet(&points, &out)?;
    Ok(out)
}

// b inside the wedges of a and c means those wedges contain copies of
// themselves translated to apex b; with the three directions tiling the
// circle, the translated copies already cover the plane. So the two edge
// checks plus exact directional cover certify planar cover.
fn check_triplet(points: &[Point; 3], t: &TripletOrientation) -> Result<()> {
    let w = &t.wedges;
    for (u, v) in t.inner_edges() {
        if !(w[u].contains(points[v]) && w[v].contains(points[u])) {
            return Err(Error::GadgetInvariant(format!(
                "triplet edge ({u}, {v}) missing"
            )));
        }
    }
    let intervals: Vec<AngleInterval> = w.iter().map(Wedge::interval).collect();
    if !covers_full_circle(&intervals) {
        return Err(Error::GadgetInvariant(
            "triplet directions do not cover the circle".into(),
        ));
    }
    Ok(())
}

/// Two wedges facing each other.
pub fn orient_pair(points: [Point; 2], aperture: f64) -> Result<[Wedge; 2]> {
    check_distinct(&points)?;
    let d = direction_unchecked(points[0], points[1]);
    Ok([
        Wedge::new(points[0], d, aperture),
        Wedge::new(points[1], d.reversed(), aperture),
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadrupletOrientation {
    /// Aperture-90 wedges in input order.
    pub wedges: [Wedge; 4],
    /// Frame rotation: bisectors are `frame + 45 + 90k`.
    pub frame: f64,
    /// Induced edges among the four points, `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
    pub verified: bool,
}

/// Orients four wedges of aperture 90 so that the induced graph is connected
/// and the wedges cover the plane.
///
/// Four closed right angles only tile the circle when their bisectors are
/// 90 apart, so every candidate is an orthant frame `phi + 45 + 90k`. Frames
/// are taken from `phi = 0` and the directions of the six point pairs (mod 90),
/// which lines pairs up on shared boundary rays. All 24 role assignments are
/// tried per frame; among connected, covering candidates the one with the
/// most induced edges wins, then the one with the least total edge length.
pub fn orient_quadruplet(points: [Point; 4]) -> Result<QuadrupletOrientation> {
    check_distinct(&points)?;

    let mut dirs = [[0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                dirs[i][j] = direction_unchecked(points[i], points[j]).degrees();
            }
        }
    }

    let mut frames: Vec<f64> = vec![0.0];
    for (i, row) in dirs.iter().enumerate() {
        for d in &row[i + 1..] {
            let phi = d.rem_euclid(90.0);
            let seen = frames.iter().any(|&f| {
                let d = (phi - f).rem_euclid(90.0);
                d.min(90.0 - d) <= ANGLE_TOL_DEG
            });
            if !seen {
                frames.push(phi);
            }
        }
    }

    struct Candidate {
        edges: Vec<(usize, usize)>,
        length: f64,
        frame: f64,
        quadrant: [usize; 4],
    }

    let mut candidates: Vec<Candidate> = Vec::new();
    for &frame in &frames {
        for quadrant in permutations4() {
            let bisector = |i: usize| frame + 45.0 + 90.0 * quadrant[i] as f64;
            let sees = |i: usize, j: usize| {
                let off = Direction::new(dirs[i][j] - (bisector(i) - 45.0)).degrees();
                off <= 90.0 + ANGLE_TOL_DEG || off >= 360.0 - ANGLE_TOL_DEG
            };
            let mut edges = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    if sees(i, j) && sees(j, i) {
                        edges.push((i, j));
                    }
                }
            }
            if !is_connected(4, &edges) {
                continue;
            }
            if !orthants_cover_plane(&points, frame, &quadrant) {
                continue;
            }
            let length = edges.iter().map(|&(i, j)| points[i].dist(points[j])).sum();
            candidates.push(Candidate {
                edges,
                length,
                frame,
                quadrant,
            });
        }
    }

    // stable sort keeps enumeration order among exact ties
    candidates.sort_by(|x, y| {
        y.edges
            .len()
            .cmp(&x.edges.len())
            .then(x.length.total_cmp(&y.length))
    });

    for cand in candidates {
        let wedges = [0, 1, 2, 3].map(|i| {
            Wedge::new(
                points[i],
                Direction::new(cand.frame + 45.0 + 90.0 * cand.quadrant[i] as f64),
                QUADRUPLET_APERTURE,
            )
        });
        if verify_coverage(&wedges, DEFAULT_COVERAGE_BOUND) {
            return Ok(QuadrupletOrientation {
                wedges,
                frame: cand.frame,
                edges: cand.edges,
                verified: true,
            });
        }
    }
    Err(Error::GadgetSearchFailed)
}

fn permutations4() -> impl Iterator<Item = [usize; 4]> {
    (0..4).flat_map(move |a| {
        (0..4).flat_map(move |b| {
            (0..4).flat_map(move |c| {
                (0..4).filter_map(move |d| {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    for &x in &p {
                        if seen[x] {
                            return None;
                        }
                        seen[x] = true;
                    }
                    Some(p)
                })
            })
        })
    })
}

/// Exact planar cover test for orthant wedges sharing one frame.
///
/// In the rotated frame each wedge is an axis-aligned closed quadrant, so
/// membership is constant on the open cells of the grid drawn through the
/// apex coordinates; the union is closed, so covering every open cell covers
/// the plane.
fn orthants_cover_plane(points: &[Point; 4], frame: f64, quadrant: &[usize; 4]) -> bool {
    let local: Vec<Point> = points.iter().map(|p| p.rotate(-frame)).collect();
    let scale = local
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(1f64, f64::max);
    let tol = DIST_TOL * scale;
    let probes = |mut vals: Vec<f64>| {
        vals.sort_by(f64::total_cmp);
        vals.dedup_by(|b, a| (*b - *a).abs() <= tol);
        let mut out = vec![vals[0] - 1.0];
        out.extend(vals.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        out.push(vals[vals.len() - 1] + 1.0);
        out
    };
    let us = probes(local.iter().map(|p| p.x).collect());
    let vs = probes(local.iter().map(|p| p.y).collect());
    let inside = |k: usize, u: f64, v: f64| {
        let a = local[k];
        let (su, sv) = match quadrant[k] {
            0 => (1.0, 1.0),
            1 => (-1.0, 1.0),
            2 => (-1.0, -1.0),
            _ => (1.0, -1.0),
        };
        su * (u - a.x) >= 0.0 && sv * (v - a.y) >= 0.0
    };
    us.iter()
        .all(|&u| vs.iter().all(|&v| (0..4).any(|k| inside(k, u, v))))
}

pub(crate) fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            parts -= 1;
        }
    }
    parts == 1
}

fn check_distinct(points: &[Point]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].coincides(points[j]) {
                return Err(Error::DuplicatePoint {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// Checks that the wedges cover the plane: the directional union must be the
/// full circle, and every one of [`COVERAGE_SAMPLES`] spiral sample points in
/// the disc of radius `bound` times the apex diameter around the apex
/// centroid must lie in some wedge. Radii are ignored.
pub fn verify_coverage(wedges: &[Wedge], bound: f64) -> bool {
    let intervals: Vec<AngleInterval> = wedges.iter().map(Wedge::interval).collect();
    if !covers_full_circle(&intervals) {
        return false;
    }
    let apexes: Vec<Point> = wedges.iter().map(|w| w.apex).collect();
    let diam = diameter(&apexes);
    let radius = bound * if diam > 0.0 { diam } else { 1.0 };
    let center = centroid(&apexes);
    let compiled: Vec<CompiledWedge> = wedges
        .iter()
        .map(|w| CompiledWedge::new(&Wedge { radius: None, ..*w }))
        .collect();
    spiral_samples(center, radius, COVERAGE_SAMPLES).all(|q| compiled.iter().any(|c| c.contains(q)))
}

/// Golden-angle spiral: `count` well spread points in a disc.
pub fn spiral_samples(center: Point, radius: f64, count: usize) -> impl Iterator<Item = Point> {
    (0..count).map(move |i| {
        let r = radius * ((i as f64 + 0.5) / count as f64).sqrt();
        let (s, c) = (i as f64 * GOLDEN_ANGLE).sin_cos();
        Point::new(center.x + r * c, center.y + r * s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn mutual(a: &Wedge, b: &Wedge) -> bool {
        a.contains(b.apex) && b.contains(a.apex)
    }

    #[test]
    fn canonical_triplet_keeps_textbook_bisectors() {
        let t = orient_triplet([p(0.5, 0.8), p(0.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert_eq!(t.roles, TripletRoles { a: 0, b: 1, c: 2 });
        assert!(!t.motion.reflected);
        let b: Vec<f64> = t.wedges.iter().map(|w| w.bisector.degrees()).collect();
        assert_eq!(b, vec![240.0, 0.0, 120.0]);
    }

    #[test]
    fn equilateral_ties_break_by_index() {
        let h = 3f64.sqrt() / 2.0;
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, h)];
        let t = orient_triplet(pts).unwrap();
        assert_eq!(t.roles, TripletRoles { a: 2, b: 0, c: 1 });
        for (u, v) in t.inner_edges() {
            assert!(mutual(&t.wedges[u], &t.wedges[v]));
        }
        assert!(verify_coverage(&t.wedges, DEFAULT_COVERAGE_BOUND));
    }

    #[test]
    fn collinear_triplet_uses_middle_as_a() {
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)];
        let t = orient_triplet(pts).unwrap();
        assert_eq!(t.roles, TripletRoles { a: 1, b: 0, c: 2 });
        assert!(mutual(&t.wedges[1], &t.wedges[0]));
        assert!(mutual(&t.wedges[0], &t.wedges[2]));
        assert!(verify_coverage(&t.wedges, DEFAULT_COVERAGE_BOUND));
    }

    #[test]
    fn reflected_triplet_maps_back() {
        // a below segment bc
        let pts = [p(0.5, -0.8), p(0.0, 0.0), p(1.0, 0.0)];
        let t = orient_triplet(pts).unwrap();
        assert!(t.motion.reflected);
        let canon: Vec<f64> = t.canonical_bisectors().iter().map(|d| d.degrees()).collect();
        assert_eq!(canon, vec![240.0, 0.0, 120.0]);
        for q in pts {
            let back = t.motion.from_canonical(t.motion.to_canonical(q));
            assert!(back.dist(q) < 1e-12);
        }
        assert!(t.motion.to_canonical(pts[0]).y >= 0.0);
    }

    #[test]
    fn triplet_rejects_duplicates() {
        assert!(matches!(
            orient_triplet([p(0.0, 0.0), p(1.0, 0.0), p(1.0, 0.0)]),
            Err(Error::DuplicatePoint { first: 1, second: 2 })
        ));
    }

    #[test]
    fn pair_examples() {
        let cases = [
            ((0.0, 0.0), (1.0, 0.0), 120.0, 0.0, 180.0),
            ((0.0, 0.0), (0.0, 2.0), 90.0, 90.0, 270.0),
            ((0.0, 0.0), (1.0, 1.0), 120.0, 45.0, 225.0),
        ];
        for (a, b, ap, ba, bb) in cases {
            let w = orient_pair([a.into(), b.into()], ap).unwrap();
            assert!((w[0].bisector.degrees() - ba).abs() < 1e-12);
            assert!((w[1].bisector.degrees() - bb).abs() < 1e-12);
            assert!(mutual(&w[0], &w[1]));
        }
    }

    #[test]
    fn unit_square_quadruplet() {
        let q = orient_quadruplet([p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap();
        let b: Vec<f64> = q.wedges.iter().map(|w| w.bisector.degrees()).collect();
        assert_eq!(b, vec![45.0, 135.0, 225.0, 315.0]);
        assert_eq!(q.edges.len(), 6);
        assert!(q.verified);
    }

    #[test]
    fn collinear_quadruplet() {
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(3.0, 0.0)];
        let q = orient_quadruplet(pts).unwrap();
        assert!(q.verified);
        assert!(is_connected(4, &q.edges));
        for &(i, j) in &q.edges {
            assert!(mutual(&q.wedges[i], &q.wedges[j]));
        }
        assert!(verify_coverage(&q.wedges, DEFAULT_COVERAGE_BOUND));
    }

    #[test]
    fn quadruplet_directions_span_circle() {
        let pts = [p(0.1, 0.7), p(0.9, 0.2), p(0.4, 0.45), p(0.66, 0.95)];
        let q = orient_quadruplet(pts).unwrap();
        let ivs: Vec<_> = q.wedges.iter().map(Wedge::interval).collect();
        assert!(covers_full_circle(&ivs));
    }

    #[test]
    fn coverage_examples() {
        let o = p(0.0, 0.0);
        let single = [Wedge::new(o, Direction::new(0.0), 120.0)];
        assert!(!verify_coverage(&single, 10.0));
        let thirds = [0.0, 120.0, 240.0].map(|b| Wedge::new(o, Direction::new(b), 120.0));
        assert!(verify_coverage(&thirds, 10.0));
    }

    #[test]
    fn coverage_detects_planar_hole() {
        // directions tile the circle but the apexes leave a hole between them
        let ws = [
            Wedge::new(p(0.0, 0.0), Direction::new(180.0), 120.0),
            Wedge::new(p(10.0, 0.0), Direction::new(300.0), 120.0),
            Wedge::new(p(10.0, 10.0), Direction::new(60.0), 120.0),
        ];
        assert!(covers_full_circle(&ws.map(|w| w.interval())));
        assert!(!verify_coverage(&ws, 10.0));
    }

    #[test]
    fn orthant_cover_rejects_bad_assignment() {
        // every wedge pointing inward except one pointing at the others' side
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        assert!(orthants_cover_plane(&pts, 0.0, &[0, 1, 2, 3]));
        assert!(!orthants_cover_plane(&pts, 0.0, &[2, 3, 0, 1]));
    }
}
