use bast_core::generate::Generator;
use bast_core::io::{emit_result, emit_svg, parse_result, verify_result, SvgOptions};
use bast_core::spanner::HOP_BOUND;
use bast_core::{
    build_alpha_st, build_spanner, unit_disk_graph, verify_alpha_st, verify_hop_spanner, Alpha, Error, PointSet,
    ResultFile,
};

fn udg_instance(seed: u64) -> PointSet {
    Generator::ConnectedUdg { n: 120, side: 7.0 }.generate(seed).unwrap().points
}

#[test]
fn spanner_result_verifies_after_round_trip() {
    let ps = udg_instance(11);
    let res = build_spanner(&ps).unwrap();
    let report = verify_hop_spanner(&res.graph, &unit_disk_graph(&ps, 1.0), HOP_BOUND);
    assert!(report.passed);
    let file = ResultFile::from_spanner(&ps, &res, &report);
    let back = parse_result(&emit_result(&file)).unwrap();
    assert!(verify_result(&ps, &back).passed);
    assert!(back.summary.hop_stretch.unwrap() <= HOP_BOUND);
}

#[test]
fn tampered_alpha_st_fails_verification() {
    let ps = Generator::UniformSquare { n: 30, side: 1.0 }.generate(5).unwrap().points;
    for alpha in Alpha::ALL {
        let st = build_alpha_st(&ps, alpha).unwrap();
        let mut file = ResultFile::from_alpha_st(&st, &verify_alpha_st(&ps, &st));
        assert!(verify_result(&ps, &file).passed);
        for w in &mut file.wedges {
            w.bisector_deg = (w.bisector_deg + 180.0) % 360.0;
        }
        assert!(!verify_result(&ps, &file).passed, "{alpha}");
    }
}

#[test]
fn dropping_an_edge_breaks_spanning() {
    let ps = Generator::UniformSquare { n: 12, side: 1.0 }.generate(2).unwrap().points;
    let st = build_alpha_st(&ps, Alpha::Pi).unwrap();
    let mut file = ResultFile::from_alpha_st(&st, &verify_alpha_st(&ps, &st));
    file.edges.pop();
    assert!(!verify_result(&ps, &file).passed);
}

#[test]
fn disconnected_udg_is_reported() {
    let ps = PointSet::from_xy(&[(0.0, 0.0), (3.0, 0.0)]).unwrap();
    assert_eq!(build_spanner(&ps).unwrap_err(), Error::DisconnectedUdg);
}

#[test]
fn three_close_points_need_two_hops() {
    let ps = PointSet::from_xy(&[(0.0, 0.0), (0.5, 0.1), (0.2, 0.6)]).unwrap();
    let res = build_spanner(&ps).unwrap();
    assert!(res.hop_stretch <= 2);
}

#[test]
fn svg_shows_every_point_and_edge() {
    let ps = Generator::UniformSquare { n: 9, side: 1.0 }.generate(3).unwrap().points;
    let st = build_alpha_st(&ps, Alpha::TwoThirdsPi).unwrap();
    let svg = emit_svg(&ps, &st.wedges, &st.tree.edges, &SvgOptions::default());
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<circle").count(), 9);
    assert_eq!(svg.matches("<line").count(), 8);
}
