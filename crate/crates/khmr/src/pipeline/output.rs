use serde::Serialize;

use crate::chain::BigradedHomology;
use crate::diagram::{MrDiagram, ShiftingData};

/// One nonzero cell of a homology table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Row {
    pub h: i32,
    pub q: i32,
    pub free: usize,
    pub torsion: Vec<u64>,
}

/// A stabilized table with the data needed to interpret it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KhResult {
    #[serde(skip)]
    pub table: BigradedHomology,
    /// Reported window is `h >= h_min` (and `h <= 0` when gates are present).
    pub h_min: i32,
    /// Twist counts at which two consecutive rounds agreed.
    pub k: Vec<usize>,
    /// Index of a gate of odd width; the table is then zero by definition.
    pub odd_intersection: Option<usize>,
    /// Gradings are fixed only up to shifts depending on each `eta`.
    pub shifting_data: Vec<ShiftingData>,
}

#[derive(Serialize)]
struct JsonOut<'a> {
    rows: Vec<Row>,
    #[serde(flatten)]
    meta: &'a KhResult,
}

impl KhResult {
    pub fn new(table: BigradedHomology, h_min: i32, k: Vec<usize>, shifting_data: Vec<ShiftingData>) -> Self {
        Self { table, h_min, k, odd_intersection: None, shifting_data }
    }

    pub fn odd(d: &MrDiagram, h_min: i32, gate: usize) -> Self {
        Self {
            table: BigradedHomology::default(),
            h_min,
            k: vec![],
            odd_intersection: Some(gate),
            shifting_data: d.shifting_data(),
        }
    }

    pub fn rows(&self) -> Vec<Row> {
        self.table
            .cells
            .iter()
            .rev()
            .map(|(&(h, q), g)| Row { h, q, free: g.free, torsion: g.torsion.clone() })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonOut { rows: self.rows(), meta: self }).expect("result serializes")
    }

    /// `h q free torsion` rows, tab separated, torsion orders joined by commas.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("h\tq\tfree\ttorsion\n");
        for r in self.rows() {
            let t: Vec<String> = r.torsion.iter().map(|x| x.to_string()).collect();
            s += &format!("{}\t{}\t{}\t{}\n", r.h, r.q, r.free, t.join(","));
        }
        s
    }

    /// The table as a grid, `q` down the rows and `h` across, like a
    /// printed homology table.
    pub fn to_grid(&self) -> String {
        let Some(h_hi) = self.table.cells.keys().map(|k| k.0).max() else {
            return String::from("q\\h\n");
        };
        let h_lo = self.table.cells.keys().map(|k| k.0).min().unwrap();
        let q_hi = self.table.cells.keys().map(|k| k.1).max().unwrap();
        let q_lo = self.table.cells.keys().map(|k| k.1).min().unwrap();
        let mut s = String::from("q\\h");
        for h in h_lo..=h_hi {
            s += &format!("\t{h}");
        }
        s.push('\n');
        for q in (q_lo..=q_hi).rev().step_by(2) {
            s += &q.to_string();
            for h in h_lo..=h_hi {
                let g = self.table.get(h, q);
                s.push('\t');
                if !g.is_zero() {
                    s += &g.to_string();
                }
            }
            s.push('\n');
        }
        s
    }
}
