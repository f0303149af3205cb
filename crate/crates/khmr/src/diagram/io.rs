use serde::{Deserialize, Serialize};

use super::model::{Crossing, Gate, MrDiagram};
use crate::chain::Sign;
use crate::error::{Error, Result};

/// Crossing as written in diagram files.
#[derive(Serialize, Deserialize)]
struct CrossingJson {
    /// Over strand as `[incoming edge, outgoing edge]`.
    over: [u32; 2],
    /// Under strand as `[incoming edge, outgoing edge]`.
    under: [u32; 2],
    /// `+1` or `-1`; fixes the cyclic order of the four edges.
    sign: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign_convention: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    edges: Vec<u32>,
    #[serde(default)]
    crossings: Vec<CrossingJson>,
    #[serde(default)]
    gates: Vec<Gate>,
    #[serde(default, skip_serializing_if = "is_zero")]
    loops: u32,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

pub const SIGN_CONVENTION: &str = "fig-crossing-defs";

/// Serialize to the JSON diagram schema.
pub fn to_json(d: &MrDiagram) -> String {
    let j = DiagramJson {
        edges: d.edges.clone(),
        crossings: d
            .crossings
            .iter()
            .map(|c| CrossingJson {
                over: c.over(),
                under: c.under(),
                sign: if c.sign == Sign::Pos { 1 } else { -1 },
                sign_convention: None,
            })
            .collect(),
        gates: d.gates.clone(),
        loops: d.loops,
    };
    serde_json::to_string_pretty(&j).expect("diagram serializes")
}

/// Parse the JSON diagram schema without validation.
pub fn from_json(text: &str) -> Result<MrDiagram> {
    let j: DiagramJson = serde_json::from_str(text)?;
    let mut crossings = vec![];
    for c in j.crossings {
        if let Some(conv) = &c.sign_convention {
            if conv != SIGN_CONVENTION {
                return Err(Error::Diagram(format!("unknown sign convention {conv:?}")));
            }
        }
        let sign = match c.sign {
            1 => Sign::Pos,
            -1 => Sign::Neg,
            s => return Err(Error::Diagram(format!("crossing sign must be +1 or -1, got {s}"))),
        };
        crossings.push(Crossing::from_strands(c.over, c.under, sign));
    }
    Ok(MrDiagram { edges: j.edges, crossings, gates: j.gates, loops: j.loops })
}

/// Parse a bare planar diagram code such as `X[1,4,2,5], X[3,6,4,1], ...`.
///
/// Each `X[i,j,k,l]` lists edges counterclockwise with the under strand
/// entering on `i` and leaving on `k`. Over-strand directions are inferred by
/// propagating edge orientations; a component that never passes under is
/// oriented so its labels increase. An empty code, or `O`, is the unknot.
pub fn parse_pd(text: &str) -> Result<MrDiagram> {
    let t = text.trim();
    let t = t.strip_prefix("PD[").and_then(|s| s.strip_suffix(']')).unwrap_or(t).trim();
    if t.is_empty() || t == "O" {
        return Ok(MrDiagram { loops: 1, ..Default::default() });
    }
    let mut xs: Vec<[u32; 4]> = vec![];
    let mut rest = t;
    while let Some(start) = rest.find('[') {
        let head = rest[..start].trim().trim_start_matches(',').trim();
        if head != "X" {
            return Err(Error::Diagram(format!("expected X[...], found {head:?}")));
        }
        let end = rest[start..].find(']').ok_or_else(|| Error::Diagram("unclosed bracket".into()))? + start;
        let nums: Vec<u32> = rest[start + 1..end]
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| Error::Diagram(format!("bad edge label {s:?}"))))
            .collect::<Result<_>>()?;
        if nums.len() != 4 {
            return Err(Error::Diagram("a crossing needs four labels".into()));
        }
        xs.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = &rest[end + 1..];
    }
    if !rest.trim().trim_matches(',').trim().is_empty() {
        return Err(Error::Diagram(format!("trailing input {:?}", rest.trim())));
    }
    let over_forward = infer_over_directions(&xs)?;
    let crossings = xs.iter().zip(over_forward).map(|(&x, f)| Crossing::from_ccw(x, true, f)).collect();
    Ok(MrDiagram::classical(crossings))
}

/// For each crossing, whether its over strand runs `x1 -> x3`.
fn infer_over_directions(xs: &[[u32; 4]]) -> Result<Vec<bool>> {
    use std::collections::BTreeMap;
    // head[e] = true once e is known to end at the occurrence (c, slot).
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, x) in xs.iter().enumerate() {
        for (s, &e) in x.iter().enumerate() {
            occ.entry(e).or_default().push((c, s));
        }
    }
    if let Some((e, _)) = occ.iter().find(|(_, v)| v.len() != 2) {
        return Err(Error::Diagram(format!("edge {e} must appear exactly twice")));
    }
    let mut dir: Vec<Option<bool>> = vec![None; xs.len()];
    // Known head/tail status of each occurrence.
    let mut status: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for c in 0..xs.len() {
        status.insert((c, 0), true);
        status.insert((c, 2), false);
    }
    let mut stack: Vec<(usize, usize)> = status.keys().copied().collect();
    let mut fallback = 0;
    loop {
        while let Some((c, s)) = stack.pop() {
            let is_head = status[&(c, s)];
            // The other occurrence of the same edge has the opposite role.
            let e = xs[c][s];
            let other = *occ[&e].iter().find(|&&o| o != (c, s)).unwrap_or(&(c, s));
            if other != (c, s) {
                match status.get(&other) {
                    Some(&v) if v == is_head => return Err(Error::Diagram(format!("edge {e} has inconsistent orientation"))),
                    Some(_) => {}
                    None => {
                        status.insert(other, !is_head);
                        stack.push(other);
                    }
                }
            }
            // Over slots of one crossing have opposite roles.
            if s == 1 || s == 3 {
                let mate = (c, 4 - s);
                match status.get(&mate) {
                    Some(&v) if v == is_head => return Err(Error::Diagram(format!("crossing {c} has inconsistent over strand"))),
                    Some(_) => {}
                    None => {
                        status.insert(mate, !is_head);
                        stack.push(mate);
                    }
                }
                dir[c] = Some(if s == 1 { is_head } else { !is_head });
            }
        }
        // Components passing only over: orient by increasing labels.
        let Some(c) = (fallback..xs.len()).find(|&c| dir[c].is_none()) else { break };
        fallback = c;
        let (b, d) = (xs[c][1], xs[c][3]);
        let forward = d == b + 1 || (b > d + 1);
        status.insert((c, 1), forward);
        stack.push((c, 1));
    }
    Ok(dir.into_iter().map(|d| d.unwrap()).collect())
}

/// Parse either format, deciding by the first non-blank character.
pub fn parse_any(text: &str) -> Result<MrDiagram> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse_pd(text)
    }
}

/// PD code of a classical diagram, one `X[...]` per crossing.
///
/// Free loops have no PD representation; each becomes a kink `X[a,b,b,a]`.
pub fn to_pd(d: &MrDiagram) -> Result<String> {
    if !d.gates.is_empty() {
        return Err(Error::Diagram("PD codes describe classical diagrams only".into()));
    }
    let mut xs: Vec<String> = d
        .crossings
        .iter()
        .map(|c| format!("X[{}]", c.slots.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let mut next = d.max_edge();
    for _ in 0..d.loops {
        xs.push(format!("X[{},{},{},{}]", next + 1, next + 2, next + 2, next + 1));
        next += 2;
    }
    Ok(if xs.is_empty() { "O".into() } else { xs.join(", ") })
}
