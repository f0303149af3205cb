mod common;

use common::{fixture, restrict, to_table};
use khmr::diagram::*;
use khmr::pipeline::*;
use khmr::Error;

fn kh(d: &MrDiagram, h_min: i32) -> KhResult {
    khovanov_homology(d, &KhOptions::new(h_min)).unwrap()
}

#[test]
fn two_longitudes() {
    let r = kh(&fixture("l1.json"), -6);
    assert_eq!(to_table(&r.table), common::l1_table());
    assert_eq!(r.k, vec![4]);
}

#[test]
fn two_longitudes_short_window() {
    let r = kh(&fixture("l1.json"), -4);
    assert_eq!(to_table(&r.table), restrict(&common::l1_table(), -4));
}

#[test]
fn reversing_a_strand_keeps_the_table() {
    assert_eq!(kh(&fixture("l1_opposite.json"), -6).table, kh(&fixture("l1.json"), -6).table);
}

#[test]
fn knotified_hopf() {
    assert_eq!(to_table(&kh(&fixture("l2.json"), -3).table), common::l2_table());
}

#[test]
fn crossingless_two_gates() {
    assert_eq!(to_table(&kh(&fixture("l3.json"), -5).table), common::l3_table());
    assert_eq!(to_table(&kh(&fixture("l3.json"), -3).table), restrict(&common::l3_table(), -3));
}

#[test]
fn widening_the_window_keeps_reported_cells() {
    for f in ["l1.json", "l2.json", "l3.json"] {
        let d = fixture(f);
        let narrow = kh(&d, -2).table;
        let wide = kh(&d, -5).table;
        assert_eq!(narrow, wide.restrict(-2), "{f}");
    }
}

#[test]
fn classical_links_match_the_cube() {
    for (name, d) in common::classical() {
        let r = kh(&d, -(d.crossings.len() as i32) - 1);
        assert_eq!(to_table(&r.table), common::oracle(&d), "{name}");
    }
}

#[test]
fn unknot_rows() {
    let r = kh(&fixture("classical/unknot.pd"), 0);
    assert_eq!(r.to_tsv(), "h\tq\tfree\ttorsion\n0\t1\t1\t\n0\t-1\t1\t\n");
}

#[test]
fn odd_gate_gives_a_flagged_zero_table() {
    let d = from_json(&std::fs::read_to_string(common::fixture_path("odd_gate.json")).unwrap()).unwrap();
    let r = kh(&d, -4);
    assert_eq!(r.odd_intersection, Some(0));
    assert!(r.table.is_empty());
    assert!(r.to_json().contains("\"odd_intersection\": 0"));
}

#[test]
fn ceiling_is_reported() {
    let mut opts = KhOptions::new(-6);
    opts.k_max = 2;
    match khovanov_homology(&fixture("l1.json"), &opts) {
        Err(Error::Ceiling { kmax, .. }) => assert_eq!(kmax, 2),
        other => panic!("expected a ceiling, got {other:?}"),
    }
}

#[test]
fn json_output_carries_metadata() {
    let r = kh(&fixture("l2.json"), -3);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["h_min"], -3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    assert_eq!(v["rows"][0], serde_json::json!({"h": 0, "q": -1, "free": 1, "torsion": []}));
    assert_eq!(v["shifting_data"][0]["eta"], 0);
}

#[test]
fn first_k_reaches_the_window() {
    let l1 = fixture("l1.json");
    assert_eq!(initial_k(&l1, -6), 4);
    assert_eq!(initial_k(&l1, 0), 1);
}

#[test]
fn finite_complex_is_a_complex() {
    for f in ["l1.json", "l2.json"] {
        let c = finite_complex(&fixture(f), &[2]).unwrap();
        c.validate().unwrap();
        assert!(c.boundary.is_empty());
    }
}

fn reidemeister_variants(d: &MrDiagram) -> Vec<(String, MrDiagram)> {
    let (e, f) = (d.edges[0], d.edges[1]);
    let mut out = vec![];
    for m in [
        Move::R1Add { edge: e, positive: true, left: true },
        Move::R1Add { edge: e, positive: true, left: false },
        Move::R1Add { edge: f, positive: false, left: true },
        Move::R2 { over: e, under: f },
        Move::R2 { over: f, under: e },
    ] {
        out.push((format!("{m:?}"), d.apply_move(m).unwrap()));
    }
    out
}

#[test]
fn reidemeister_invariance() {
    for f in ["l1.json", "l2.json"] {
        let d = fixture(f);
        let base = kh(&d, -4).table;
        for (name, v) in reidemeister_variants(&d) {
            assert_eq!(kh(&v, -4).table, base, "{f} {name}");
        }
    }
}

#[test]
fn finger_move_invariance() {
    let d = fixture("l2.json");
    let base = kh(&d, -4).table;
    for e in 1..=4 {
        let v = d.apply_move(Move::Finger { gate: 0, edge: e }).unwrap();
        let sd = &v.shifting_data()[0];
        assert_eq!((sd.n, sd.n_minus, sd.big_n, sd.eta), (4, 8, 12, 0));
        assert_eq!(kh(&v, -4).table, base, "edge {e}");
    }
}

#[test]
fn wraps_shift_by_eta() {
    let d = fixture("l1.json");
    for positive in [true, false] {
        let r = wrap_shift_check(&d, 0, positive, None, -4).unwrap();
        assert!(r.passed, "{positive}");
        assert_eq!(r.shift, if positive { (2, 6) } else { (-2, -6) });
        assert!(!r.wrapped.table.is_empty());
    }
}

#[test]
fn wraps_on_a_null_homologous_gate_do_nothing() {
    let d = fixture("l1_opposite.json");
    for positive in [true, false] {
        let r = wrap_shift_check(&d, 0, positive, None, -4).unwrap();
        assert_eq!(r.shift, (0, 0));
        assert!(r.passed);
    }
}

fn knotified_tables(name: &str) -> Vec<KhResult> {
    let l = fixture(name);
    let comps = l.components().unwrap();
    let mut out = vec![];
    for &a in &comps[0] {
        for &b in &comps[1] {
            let pair = (Point { edge: a, pos: 0 }, Point { edge: b, pos: 0 });
            if let Ok((k, r)) = knotification_homology(&l, &[pair], &KhOptions::new(-3)) {
                assert_eq!(k.gates.len(), 1);
                out.push(r);
            }
        }
    }
    assert!(!out.is_empty(), "{name}: no admissible pair");
    out
}

#[test]
fn knotified_negative_hopf_gives_the_clasp_table() {
    for r in knotified_tables("classical/hopf_negative.pd") {
        assert_eq!(to_table(&r.table), common::l2_table());
    }
}

#[test]
fn knotified_positive_hopf_is_a_different_knot() {
    // Reversing one component changes the band, and with it the knot.
    let tables = knotified_tables("classical/hopf_positive.pd");
    assert!(tables.iter().all(|r| r.table == tables[0].table));
    assert_ne!(to_table(&tables[0].table), common::l2_table());
}

#[test]
fn knotified_unlink_matches_the_direct_diagram() {
    let l = fixture("classical/unlink2.pd");
    let comps = l.components().unwrap();
    let pair = (Point { edge: comps[0][0], pos: 0 }, Point { edge: comps[1][0], pos: 0 });
    let (_, r) = knotification_homology(&l, &[pair], &KhOptions::new(-4)).unwrap();
    let direct = kh(&fixture("unlink_knotified.json"), -4);
    assert_eq!(r.table, direct.table);
    assert_eq!(to_table(&r.table), common::table(&[((0, 1), 1, &[]), ((0, -1), 1, &[])]));
}

#[test]
fn handle_slide() {
    let chain = fixture("classical/chain3.pd");
    let opts = KhOptions::new(-3);
    let (_, a) = knotification_homology(&chain, &parse_pairs("1-5,3-7").unwrap(), &opts).unwrap();
    let (_, b) = knotification_homology(&chain, &parse_pairs("1-5,2-8").unwrap(), &opts).unwrap();
    assert!(!a.table.is_empty());
    assert_eq!(a.table, b.table);
}
