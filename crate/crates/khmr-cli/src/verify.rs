//! The `verify` suites. Each check prints one `PASS`/`FAIL` line.

use khmr::decat::skein_consistency;
use khmr::diagram::{parse_pairs, Move, MrDiagram, Point};
use khmr::pipeline::{khovanov_homology, knotification_homology, wrap_shift_check, KhOptions};
use khmr::twist::{check_stabilization, check_through_degree_bounds};
use khmr::Result;

use crate::corpus;

#[derive(Default)]
pub struct Tally {
    pub failed: usize,
}

impl Tally {
    fn record(&mut self, name: &str, outcome: Result<Vec<String>>) {
        match outcome {
            Ok(v) if v.is_empty() => println!("PASS {name}"),
            Ok(v) => {
                self.failed += 1;
                println!("FAIL {name}: {}", v.join("; "));
            }
            Err(e) => {
                self.failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
}

fn differ(a: bool, what: &str) -> Vec<String> {
    if a { vec![] } else { vec![what.to_string()] }
}

pub fn twist(t: &mut Tally, n: usize, k: usize) {
    t.record(&format!("through-degree n={n}"), Ok(check_through_degree_bounds(n).violations));
    if n % 2 == 1 {
        return;
    }
    for j in 1..=k {
        t.record(&format!("stabilization n={n} k={j}"), Ok(check_stabilization(n, j).violations));
    }
}

pub fn invariance(t: &mut Tally, opts: &KhOptions) {
    for f in ["l1.json", "l2.json"] {
        let d = corpus::get(f);
        let base = match khovanov_homology(&d, opts) {
            Ok(r) => r.table,
            Err(e) => return t.record(f, Err(e)),
        };
        let (e0, e1) = (d.edges[0], d.edges[1]);
        let mut moves = vec![
            Move::R1Add { edge: e0, positive: true, left: true },
            Move::R1Add { edge: e0, positive: false, left: false },
            Move::R2 { over: e0, under: e1 },
            Move::R2 { over: e1, under: e0 },
        ];
        moves.extend(d.edges.iter().take(4).map(|&edge| Move::Finger { gate: 0, edge }));
        for m in moves {
            let out = d.apply_move(m).and_then(|v| khovanov_homology(&v, opts)).map(|r| differ(r.table == base, "table changed"));
            t.record(&format!("{f} {m:?}"), out);
        }
    }
    for f in ["l1.json", "l1_opposite.json"] {
        for positive in [true, false] {
            let out = wrap_shift_check(&corpus::get(f), 0, positive, None, opts.h_min).map(|r| {
                differ(r.passed, &format!("wrap is not the shift {:?}", r.shift))
            });
            t.record(&format!("{f} wrap positive={positive}"), out);
        }
    }
}

pub fn skein(t: &mut Tally) {
    let mut cases: Vec<(String, MrDiagram, i32, i32)> =
        corpus::classical().into_iter().map(|(n, d)| (n.to_string(), d, -30, 30)).collect();
    for f in ["l2.json", "l1_opposite.json"] {
        cases.push((f.to_string(), corpus::get(f), -9, 1));
    }
    for (name, d, lo, hi) in cases {
        let out = skein_consistency(&d, lo, hi).map(|r| r.mismatches.iter().map(|e| format!("q^{e}")).collect());
        t.record(&format!("skein {name}"), out);
    }
}

fn first_pair(l: &MrDiagram) -> Result<Vec<(Point, Point)>> {
    let c = l.components()?;
    Ok(vec![(Point { edge: c[0][0], pos: 0 }, Point { edge: c[1][0], pos: 0 })])
}

pub fn knotify(t: &mut Tally, opts: &KhOptions) {
    let cases = [("classical/hopf_negative.pd", "l2.json"), ("classical/unlink2.pd", "unlink_knotified.json")];
    for (link, direct) in cases {
        let l = corpus::get(link);
        let out = first_pair(&l).and_then(|p| {
            let (_, a) = knotification_homology(&l, &p, opts)?;
            let b = khovanov_homology(&corpus::get(direct), opts)?;
            Ok(differ(a.table == b.table, "tables differ"))
        });
        t.record(&format!("knotify {link} = {direct}"), out);
    }
    let chain = corpus::get("classical/chain3.pd");
    let out = (|| {
        let (_, a) = knotification_homology(&chain, &parse_pairs("1-5,3-7")?, opts)?;
        let (_, b) = knotification_homology(&chain, &parse_pairs("1-5,2-8")?, opts)?;
        Ok(differ(a.table == b.table, "tables differ"))
    })();
    t.record("handle slide on the 3-chain", out);
}
