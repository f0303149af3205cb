use std::fmt::Write as _;

use super::complex::Complex;
use crate::error::Error;
use crate::planar::{Cob, Matching, Smoothing};

/// Text serialization of a complex.
///
/// ```text
/// khmr-complex 1
/// engine <tag>
/// boundary <label> ...
/// object <h> <q> <circles> <a>-<b> ...
/// entry <src> <tgt> <mask>:<coef> ...
/// ```
/// Objects are numbered in order of appearance. Masks refer to the boundary
/// circles of `src -> tgt` in the canonical order used by [`Cob`].
pub fn write_complex(c: &Complex, engine: &str) -> String {
    let mut s = String::new();
    writeln!(s, "khmr-complex 1").unwrap();
    writeln!(s, "engine {engine}").unwrap();
    let b: Vec<String> = c.boundary.iter().map(|l| l.to_string()).collect();
    writeln!(s, "boundary {}", b.join(" ")).unwrap();
    for o in &c.objects {
        write!(s, "object {} {} {}", o.h, o.q, o.diagram.circles).unwrap();
        for (a, b) in o.diagram.matching.pairs() {
            write!(s, " {a}-{b}").unwrap();
        }
        s.push('\n');
    }
    for (i, row) in c.d.iter().enumerate() {
        for (j, f) in row {
            write!(s, "entry {i} {j}").unwrap();
            for (m, k) in f.terms() {
                write!(s, " {m}:{k}").unwrap();
            }
            s.push('\n');
        }
    }
    s
}

/// Parse [`write_complex`] output; returns the complex and its engine tag.
pub fn read_complex(text: &str) -> Result<(Complex, String), Error> {
    let bad = |m: &str| Error::Format(m.to_string());
    let mut lines = text.lines();
    if lines.next() != Some("khmr-complex 1") {
        return Err(bad("missing header"));
    }
    let engine = lines
        .next()
        .and_then(|l| l.strip_prefix("engine "))
        .ok_or_else(|| bad("missing engine line"))?
        .to_string();
    let boundary: Vec<u32> = lines
        .next()
        .and_then(|l| l.strip_prefix("boundary"))
        .ok_or_else(|| bad("missing boundary line"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("bad label")))
        .collect::<Result<_, _>>()?;
    let mut c = Complex::new(boundary);
    for line in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("object") => {
                let mut num = || -> Result<i32, Error> {
                    it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("bad object grading"))
                };
                let (h, q, circles) = (num()?, num()?, num()?);
                let pairs = it
                    .map(|t| {
                        let (a, b) = t.split_once('-').ok_or_else(|| bad("bad arc"))?;
                        Ok((a.parse().map_err(|_| bad("bad arc"))?, b.parse().map_err(|_| bad("bad arc"))?))
                    })
                    .collect::<Result<Vec<(u32, u32)>, Error>>()?;
                c.push(Smoothing::with_circles(Matching::from_pairs(pairs), circles as u32), h, q);
            }
            Some("entry") => {
                let mut idx = || -> Result<usize, Error> {
                    it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("bad entry index"))
                };
                let (i, j) = (idx()?, idx()?);
                if i >= c.len() || j >= c.len() {
                    return Err(bad("entry index out of range"));
                }
                let terms = it
                    .map(|t| {
                        let (m, k) = t.split_once(':').ok_or_else(|| bad("bad term"))?;
                        Ok((m.parse().map_err(|_| bad("bad mask"))?, k.parse().map_err(|_| bad("bad coefficient"))?))
                    })
                    .collect::<Result<Vec<(u64, i64)>, Error>>()?;
                c.set(i, j, Cob::from_terms(terms));
            }
            Some(_) => return Err(bad("unknown line")),
            None => {}
        }
    }
    Ok((c, engine))
}
