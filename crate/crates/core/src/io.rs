//! Instance and result files: JSON, headerless CSV and SVG.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::approx::{verify_alpha_st, Alpha, AlphaST, AlphaStReport};
use crate::error::{Error, Result};
use crate::geom::{Direction, Point, PointSet, Wedge};
use crate::graph::{induced_graph, tsp_tour, unit_disk_graph, Edge, SpanningTree};
use crate::spanner::{verify_hop_spanner, HopReport, SpannerResult, HOP_BOUND, WEDGE_RADIUS};

/// Significant digits kept in every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}`"))),
        }
    }
}

impl Format {
    /// JSON if the text starts with `{`, CSV otherwise.
    pub fn sniff(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Csv
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    #[default]
    Reject,
    Dedup,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct InstanceMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, serde_json::Value>,
}

impl InstanceMeta {
    fn is_empty(&self) -> bool {
        self.generator.is_none() && self.seed.is_none() && self.params.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub points: PointSet,
    pub meta: InstanceMeta,
}

#[derive(Deserialize)]
struct InstanceFile {
    points: Vec<[f64; 2]>,
    #[serde(default)]
    meta: InstanceMeta,
}

pub fn parse_instance(text: &str, format: Option<Format>, policy: DuplicatePolicy) -> Result<Instance> {
    let (coords, meta) = match format.unwrap_or_else(|| Format::sniff(text)) {
        Format::Json => {
            let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            (file.points, file.meta)
        }
        Format::Csv => (parse_csv(text)?, InstanceMeta::default()),
    };
    let points: Vec<Point> = coords.iter().map(|&[x, y]| Point::new(x, y)).collect();
    let points = match policy {
        DuplicatePolicy::Reject => PointSet::new(points)?,
        DuplicatePolicy::Dedup => PointSet::dedup(points)?,
    };
    Ok(Instance { points, meta })
}

fn parse_csv(text: &str) -> Result<Vec<[f64; 2]>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            column: 0,
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("expected 2 columns, found {}", record.len()),
            });
        }
        let mut xy = [0.0; 2];
        for (k, field) in record.iter().enumerate() {
            xy[k] = field.parse().map_err(|_| Error::Parse {
                line,
                column: k + 1,
                message: format!("`{field}` is not a number"),
            })?;
        }
        out.push(xy);
    }
    Ok(out)
}

pub fn emit_instance(instance: &Instance, format: Format) -> String {
    match format {
        Format::Json => {
            let points: Vec<[f64; 2]> = instance.points.iter().map(|p| [round_sig(p.x), round_sig(p.y)]).collect();
            let mut fields = vec![("points", rows(&points))];
            if !instance.meta.is_empty() {
                fields.push(("meta", to_json(&instance.meta)));
            }
            object(&fields)
        }
        Format::Csv => {
            let mut s = String::new();
            for p in instance.points.iter() {
                writeln!(s, "{},{}", round_sig(p.x), round_sig(p.y)).expect("write to string");
            }
            s
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WedgeRecord {
    pub bisector_deg: f64,
    pub aperture_deg: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
}

impl WedgeRecord {
    pub fn from_wedge(w: &Wedge) -> Self {
        Self {
            bisector_deg: w.bisector.degrees(),
            aperture_deg: w.aperture,
            radius: w.radius,
        }
    }

    pub fn to_wedge(&self, apex: Point) -> Wedge {
        let w = Wedge::new(apex, Direction::new(self.bisector_deg), self.aperture_deg);
        match self.radius {
            Some(r) => w.with_radius(r),
            None => w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultKind {
    AlphaSt,
    Spanner,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    /// Wedge aperture in degrees.
    pub alpha: f64,
    pub weight: f64,
    pub mst_weight: f64,
    pub ratio: f64,
    pub max_spread_deg: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hop_stretch: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_edge_len: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Verification {
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub kind: ResultKind,
    pub wedges: Vec<WedgeRecord>,
    pub edges: Vec<[usize; 2]>,
    pub summary: Summary,
    pub verification: Verification,
}

impl ResultFile {
    pub fn from_alpha_st(st: &AlphaST, report: &AlphaStReport) -> Self {
        Self {
            kind: ResultKind::AlphaSt,
            wedges: st.wedges.iter().map(WedgeRecord::from_wedge).collect(),
            edges: st.tree.edges.iter().map(|&(a, b)| [a, b]).collect(),
            summary: Summary {
                alpha: st.alpha.degrees(),
                weight: report.weight,
                mst_weight: report.mst_weight,
                ratio: report.ratio,
                max_spread_deg: report.max_spread,
                hop_stretch: None,
                max_edge_len: None,
            },
            verification: Verification {
                passed: report.passed,
                bound: report.ratio_bound,
                violations: report.violations.iter().map(|v| format!("{v:?}")).collect(),
            },
        }
    }

    pub fn from_spanner(points: &PointSet, result: &SpannerResult, report: &HopReport) -> Self {
        let weight: f64 = result.graph.edges().iter().map(|e| e.length).sum();
        let mst_weight = crate::graph::euclidean_mst(points).weight;
        let max_spread = spanner_max_spread(points, result);
        Self {
            kind: ResultKind::Spanner,
            wedges: result.wedges.iter().map(WedgeRecord::from_wedge).collect(),
            edges: result.graph.edges().iter().map(|e| [e.u, e.v]).collect(),
            summary: Summary {
                alpha: result.wedges.first().map_or(crate::gadget::TRIPLET_APERTURE, |w| w.aperture),
                weight,
                mst_weight,
                ratio: if mst_weight > 0.0 { weight / mst_weight } else { 1.0 },
                max_spread_deg: max_spread,
                hop_stretch: Some(result.hop_stretch),
                max_edge_len: Some(result.max_edge_length),
            },
            verification: Verification {
                passed: report.passed,
                bound: Some(report.bound as f64),
                violations: report
                    .violations
                    .iter()
                    .map(|v| format!("UDG edge ({}, {}) needs more than {} hops", v.u, v.v, v.bound))
                    .collect(),
            },
        }
    }

    /// Every float rounded to the emitted precision.
    pub fn canonical(&self) -> Self {
        let mut r = self.clone();
        for w in &mut r.wedges {
            w.bisector_deg = round_sig(w.bisector_deg);
            w.aperture_deg = round_sig(w.aperture_deg);
            w.radius = w.radius.map(round_sig);
        }
        let s = &mut r.summary;
        s.alpha = round_sig(s.alpha);
        s.weight = round_sig(s.weight);
        s.mst_weight = round_sig(s.mst_weight);
        s.ratio = round_sig(s.ratio);
        s.max_spread_deg = round_sig(s.max_spread_deg);
        s.max_edge_len = s.max_edge_len.map(round_sig);
        r.verification.bound = r.verification.bound.map(round_sig);
        r
    }

    pub fn wedges_at(&self, points: &[Point]) -> Result<Vec<Wedge>> {
        if points.len() != self.wedges.len() {
            return Err(Error::WedgeCountMismatch {
                expected: points.len(),
                actual: self.wedges.len(),
            });
        }
        Ok(self.wedges.iter().zip(points).map(|(w, &p)| w.to_wedge(p)).collect())
    }
}

fn spanner_max_spread(points: &PointSet, result: &SpannerResult) -> f64 {
    (0..points.len())
        .filter_map(|v| {
            let nbrs: Vec<Point> = result.graph.neighbors(v).iter().map(|&u| points[u]).collect();
            (!nbrs.is_empty()).then(|| crate::geom::angular_spread(points[v], &nbrs).unwrap_or(0.0))
        })
        .fold(0.0, f64::max)
}

/// Re-derives everything a result file claims from the instance alone.
pub fn verify_result(points: &PointSet, result: &ResultFile) -> Verification {
    let mut violations = Vec::new();
    let wedges = match result.wedges_at(points) {
        Ok(w) => w,
        Err(e) => {
            return Verification {
                passed: false,
                bound: None,
                violations: vec![e.to_string()],
            }
        }
    };
    let n = points.len();
    if let Some(e) = result.edges.iter().find(|e| e[0] >= n || e[1] >= n || e[0] == e[1]) {
        return Verification {
            passed: false,
            bound: None,
            violations: vec![format!("edge ({}, {}) is not a pair of distinct points", e[0], e[1])],
        };
    }
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0);
    let bound = match result.kind {
        ResultKind::AlphaSt => {
            let Some(alpha) = Alpha::ALL
                .into_iter()
                .find(|a| (a.degrees() - result.summary.alpha).abs() < 1e-9)
            else {
                return Verification {
                    passed: false,
                    bound: None,
                    violations: vec![format!("unsupported alpha {}", result.summary.alpha)],
                };
            };
            let tour_weight = if n >= 2 {
                tsp_tour(points).map(|t| t.weight).unwrap_or(0.0)
            } else {
                0.0
            };
            let st = AlphaST {
                alpha,
                tree: SpanningTree::from_edges(points, result.edges.iter().map(|e| (e[0], e[1]))),
                wedges,
                mst_weight: 0.0,
                tour_weight,
                partition: None,
            };
            let report = verify_alpha_st(points, &st);
            violations.extend(report.violations.iter().map(|v| format!("{v:?}")));
            if !close(report.weight, result.summary.weight) {
                violations.push(format!(
                    "stated weight {} but edges weigh {}",
                    result.summary.weight, report.weight
                ));
            }
            report.ratio_bound
        }
        ResultKind::Spanner => {
            let graph = match induced_graph(points, &wedges) {
                Ok(g) => g,
                Err(e) => {
                    return Verification {
                        passed: false,
                        bound: None,
                        violations: vec![e.to_string()],
                    }
                }
            };
            let stated: Vec<(usize, usize)> = {
                let mut v: Vec<_> = result.edges.iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
                v.sort_unstable();
                v
            };
            let actual: Vec<(usize, usize)> = graph.edges().iter().map(Edge::key).collect();
            if stated != actual {
                violations.push("edge list differs from the graph the wedges induce".into());
            }
            if let Some(e) = graph.edges().iter().find(|e| e.length > WEDGE_RADIUS * (1.0 + 1e-9)) {
                violations.push(format!("edge ({}, {}) has length {}", e.u, e.v, e.length));
            }
            let report = verify_hop_spanner(&graph, &unit_disk_graph(points, 1.0), HOP_BOUND);
            violations.extend(
                report
                    .violations
                    .iter()
                    .map(|v| format!("UDG edge ({}, {}) needs more than {} hops", v.u, v.v, v.bound)),
            );
            Some(HOP_BOUND as f64)
        }
    };
    Verification {
        passed: violations.is_empty(),
        bound,
        violations,
    }
}

pub fn emit_result(result: &ResultFile) -> String {
    let r = result.canonical();
    object(&[
        ("kind", to_json(&r.kind)),
        ("summary", to_json(&r.summary)),
        ("verification", to_json(&r.verification)),
        ("wedges", rows(&r.wedges)),
        ("edges", rows(&r.edges)),
    ])
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// A JSON array with one compact element per line.
fn rows<T: Serialize>(items: &[T]) -> String {
    if items.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = items.iter().map(|x| format!("    {}", to_json(x))).collect();
    format!("[\n{}\n  ]", body.join(",\n"))
}

fn object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  {}: {v}", to_json(*k))).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

pub fn parse_result(text: &str) -> Result<ResultFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Canvas width and height in pixels.
    pub size: f64,
    pub draw_wedges: bool,
    /// Drawn radius for unbounded wedges, in instance units. `None` picks a
    /// tenth of the bounding box.
    pub unbounded_radius: Option<f64>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size: 800.0,
            draw_wedges: true,
            unbounded_radius: None,
        }
    }
}

/// Points, edges and wedge sectors on a square canvas with a 5% margin;
/// y points up.
pub fn emit_svg(points: &[Point], wedges: &[Wedge], edges: &[(usize, usize)], opts: &SvgOptions) -> String {
    let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for p in points {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if points.is_empty() {
        lo = Point::new(0.0, 0.0);
        hi = Point::new(1.0, 1.0);
    }
    let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let inner = opts.size * 0.9;
    let margin = opts.size * 0.05;
    let scale = inner / extent;
    let tx = |p: Point| (margin + (p.x - lo.x) * scale, opts.size - margin - (p.y - lo.y) * scale);
    let dot = (opts.size / 200.0).max(1.5);
    let visual = opts.unbounded_radius.unwrap_or(extent / 10.0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        opts.size
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if opts.draw_wedges && !wedges.is_empty() {
        let _ = writeln!(s, r##"<g fill="#3b7dd8" fill-opacity="0.12" stroke="#3b7dd8" stroke-opacity="0.4" stroke-width="0.5">"##);
        for w in wedges {
            let r = w.radius.unwrap_or(visual) * scale;
            let (cx, cy) = tx(w.apex);
            if w.aperture >= 360.0 {
                let _ = writeln!(s, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}"/>"#);
                continue;
            }
            // screen y is flipped, so angles run clockwise on screen
            let at = |deg: f64| {
                let t = deg.to_radians();
                (cx + r * t.cos(), cy - r * t.sin())
            };
            let (x1, y1) = at(w.right_ray().degrees());
            let (x2, y2) = at(w.right_ray().degrees() + w.aperture);
            let large = u8::from(w.aperture > 180.0);
            let _ = writeln!(
                s,
                r#"<path d="M {cx:.3} {cy:.3} L {x1:.3} {y1:.3} A {r:.3} {r:.3} 0 {large} 0 {x2:.3} {y2:.3} Z"/>"#
            );
        }
        let _ = writeln!(s, "</g>");
    }
    if !edges.is_empty() {
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.2">"#);
        for &(a, b) in edges {
            let ((x1, y1), (x2, y2)) = (tx(points[a]), tx(points[b]));
            let _ = writeln!(s, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, r##"<g fill="#d8453b">"##);
    for &p in points {
        let (x, y) = tx(p);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{dot:.2}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{build_alpha_st, verify_alpha_st, Alpha};

    #[test]
    fn parse_examples() {
        let j = parse_instance(r#"{"points": [[0,0],[1,0]]}"#, None, DuplicatePolicy::Reject).unwrap();
        let c = parse_instance("0,0\n1,0\n", None, DuplicatePolicy::Reject).unwrap();
        assert_eq!(j.points, c.points);
        assert_eq!(j.points.len(), 2);
        assert!(matches!(
            parse_instance(r#"{"points": [[0,0],[0,0]]}"#, None, DuplicatePolicy::Reject),
            Err(Error::DuplicatePoint { first: 0, second: 1 })
        ));
        let d = parse_instance(r#"{"points": [[0,0],[0,0]]}"#, None, DuplicatePolicy::Dedup).unwrap();
        assert_eq!(d.points.len(), 1);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_instance("0,0\n1,x\n", Some(Format::Csv), DuplicatePolicy::Reject) {
            Err(Error::Parse { line: 2, column: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_instance("0,0\n1,2,3\n", Some(Format::Csv), DuplicatePolicy::Reject) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_instance("{\n  \"points\": [[0, 0], [1]]\n}", None, DuplicatePolicy::Reject) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn csv_skips_blank_and_comment_lines() {
        let i = parse_instance("# x,y\n0,0\n\n 2.5 , -1\n", Some(Format::Csv), DuplicatePolicy::Reject).unwrap();
        assert_eq!(i.points[1], Point::new(2.5, -1.0));
    }

    #[test]
    fn instance_round_trip() {
        let inst = Instance {
            points: PointSet::from_xy(&[(0.1, 0.2), (1.0 / 3.0, 5.0)]).unwrap(),
            meta: InstanceMeta {
                generator: Some("uniform-square".into()),
                seed: Some(7),
                params: BTreeMap::from([("n".to_string(), serde_json::json!(2))]),
            },
        };
        for f in [Format::Json, Format::Csv] {
            let text = emit_instance(&inst, f);
            let back = parse_instance(&text, None, DuplicatePolicy::Reject).unwrap();
            assert_eq!(back.points[1].x, round_sig(1.0 / 3.0));
            assert_eq!(emit_instance(&back, f).lines().next(), text.lines().next());
        }
        let text = emit_instance(&inst, Format::Json);
        assert_eq!(parse_instance(&text, None, DuplicatePolicy::Reject).unwrap().meta, inst.meta);
    }

    #[test]
    fn result_round_trip() {
        let ps = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.1), (0.4, 0.9), (2.0, 2.0 / 3.0)]).unwrap();
        let st = build_alpha_st(&ps, Alpha::TwoThirdsPi).unwrap();
        let r = ResultFile::from_alpha_st(&st, &verify_alpha_st(&ps, &st));
        let text = emit_result(&r);
        assert_eq!(parse_result(&text).unwrap(), r.canonical());
        assert_eq!(emit_result(&parse_result(&text).unwrap()), text);
    }

    #[test]
    fn verify_detects_tampering() {
        let ps = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.1), (0.4, 0.9), (2.0, 0.7), (1.5, -0.5)]).unwrap();
        let st = build_alpha_st(&ps, Alpha::HalfPi).unwrap();
        let r = parse_result(&emit_result(&ResultFile::from_alpha_st(&st, &verify_alpha_st(&ps, &st)))).unwrap();
        assert!(verify_result(&ps, &r).passed, "{:?}", verify_result(&ps, &r));

        let mut bad = r.clone();
        bad.wedges[0].bisector_deg += 180.0;
        assert!(!verify_result(&ps, &bad).passed);

        let mut bad = r.clone();
        bad.summary.weight *= 0.5;
        assert!(!verify_result(&ps, &bad).passed);

        let mut bad = r;
        bad.edges.pop();
        assert!(!verify_result(&ps, &bad).passed);
    }

    #[test]
    fn verify_spanner_result() {
        let ps = PointSet::from_xy(&[(0.0, 0.0), (0.8, 0.0), (1.6, 0.0), (2.4, 0.0), (2.4, 0.8)]).unwrap();
        let sp = crate::spanner::build_spanner(&ps).unwrap();
        let udg = crate::graph::unit_disk_graph(&ps, 1.0);
        let r = ResultFile::from_spanner(&ps, &sp, &verify_hop_spanner(&sp.graph, &udg, HOP_BOUND));
        let r = parse_result(&emit_result(&r)).unwrap();
        assert!(verify_result(&ps, &r).passed);
        let mut bad = r;
        bad.edges.clear();
        assert!(!verify_result(&ps, &bad).passed);
    }

    #[test]
    fn round_sig_examples() {
        assert_eq!(round_sig(0.1), 0.1);
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(123_456_789.123_457), 123_456_789.123);
        assert_eq!(round_sig(0.0), 0.0);
    }

    #[test]
    fn svg_points_only() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        let s = emit_svg(&pts, &[], &[], &SvgOptions::default());
        assert!(s.starts_with("<svg"));
        assert_eq!(s.matches("<circle").count(), 2);
        assert!(!s.contains("<line"));
        // lower-left point lands at the bottom-left margin
        assert!(s.contains(r#"cx="40.000" cy="760.000""#));
    }

    #[test]
    fn svg_sectors_for_gadget() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.3, 0.5)];
        let t = crate::gadget::orient_triplet(pts).unwrap();
        let s = emit_svg(&pts, &t.wedges, &[(0, 1)], &SvgOptions::default());
        assert_eq!(s.matches("<path").count(), 3);
        assert_eq!(s.matches("<line").count(), 1);
    }
}
