//! Diagrams bundled into the binary for the `verify` suites.

use khmr::diagram::{parse, MrDiagram};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../fixtures/", $name)))),*]
    };
}

const FILES: &[(&str, &str)] = fixtures![
    "l1.json",
    "l1_opposite.json",
    "l2.json",
    "l3.json",
    "unlink_knotified.json",
    "classical/unknot.pd",
    "classical/unknot_kink.pd",
    "classical/unlink2.pd",
    "classical/hopf_negative.pd",
    "classical/hopf_positive.pd",
    "classical/trefoil_left.pd",
    "classical/trefoil_right.pd",
    "classical/figure_eight.pd",
    "classical/knot_5_1.pd",
    "classical/knot_5_2.pd",
    "classical/knot_6_1.pd",
    "classical/knot_6_2.pd",
    "classical/knot_6_3.pd",
    "classical/knot_7_1.pd",
    "classical/torus_link_2_4.pd",
    "classical/whitehead.pd",
    "classical/borromean.pd",
    "classical/chain3.pd",
];

pub fn get(name: &str) -> MrDiagram {
    let (_, text) = FILES.iter().find(|(n, _)| *n == name).unwrap_or_else(|| panic!("no bundled {name}"));
    parse(text).expect("bundled diagrams parse")
}

pub fn classical() -> Vec<(&'static str, MrDiagram)> {
    FILES.iter().filter(|(n, _)| n.starts_with("classical/")).map(|(n, _)| (*n, get(n))).collect()
}
