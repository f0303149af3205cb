use super::model::{Crossing, MrDiagram};
use crate::error::{Error, Result};
use crate::twist::{braid_crossings, full_twist_word, signed_braid_crossings};

/// Replace every gate `i` by `k[i]` full twists on its strands.
///
/// The result is a classical diagram; with `k[i] = 0` the gate's strands are
/// joined straight through.
pub fn build_lk(d: &MrDiagram, k: &[usize]) -> Result<MrDiagram> {
    if k.len() != d.gates.len() {
        return Err(Error::Diagram(format!("{} twist counts given for {} gates", k.len(), d.gates.len())));
    }
    if let Some(g) = d.gates.iter().position(|g| g.width() % 2 == 1) {
        return Err(Error::OddIntersection { gate: g });
    }
    let mut out = MrDiagram { edges: d.edges.clone(), crossings: d.crossings.clone(), gates: vec![], loops: d.loops };
    let mut next = d.max_edge();
    let mut merges: Vec<(u32, u32)> = vec![];
    for (gate, &kg) in d.gates.iter().zip(k) {
        let bottom: Vec<u32> = gate.strands.iter().map(|s| s.bottom).collect();
        let top: Vec<u32> = gate.strands.iter().map(|s| s.top).collect();
        let up: Vec<bool> = gate.strands.iter().map(|s| s.up).collect();
        if kg == 0 {
            merges.extend(bottom.iter().copied().zip(top.iter().copied()));
            continue;
        }
        let before = next;
        for x in braid_crossings(&full_twist_word(gate.width(), kg), &bottom, &top, &up, &mut next) {
            let slots = if x.under_forward { x.slots } else { [x.slots[2], x.slots[3], x.slots[0], x.slots[1]] };
            out.crossings.push(Crossing { slots, sign: x.sign });
        }
        out.edges.extend(before + 1..=next);
    }
    // Join straight-through strands, tracking renames so chains collapse.
    let mut alias: std::collections::BTreeMap<u32, u32> = Default::default();
    let resolve = |alias: &std::collections::BTreeMap<u32, u32>, mut e: u32| {
        while let Some(&f) = alias.get(&e) {
            e = f;
        }
        e
    };
    for (b, t) in merges {
        let (b, t) = (resolve(&alias, b), resolve(&alias, t));
        if b == t {
            out.loops += 1;
            out.edges.retain(|&e| e != b);
        } else {
            alias.insert(t, b);
            out.edges.retain(|&e| e != t);
        }
    }
    for c in &mut out.crossings {
        for s in &mut c.slots {
            *s = resolve(&alias, *s);
        }
    }
    out.sort_edges();
    Ok(out)
}

/// Closure of a braid word on `n` strands, all oriented upward; `-i`
/// stands for `σ_i^{-1}`.
///
/// Strand positions `1..=n` become the closing edges; untouched positions
/// close up into free loops.
pub fn braid_closure(n: usize, word: &[i32]) -> Result<MrDiagram> {
    if let Some(&g) = word.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize >= n) {
        return Err(Error::Diagram(format!("generator {g} out of range for {n} strands")));
    }
    let ends: Vec<u32> = (1..=n as u32).collect();
    let mut next = n as u32;
    let crossings: Vec<Crossing> = signed_braid_crossings(word, &ends, &ends, &vec![true; n], &mut next)
        .into_iter()
        .map(|x| {
            let slots = if x.under_forward { x.slots } else { [x.slots[2], x.slots[3], x.slots[0], x.slots[1]] };
            Crossing { slots, sign: x.sign }
        })
        .collect();
    let used: std::collections::BTreeSet<usize> =
        word.iter().flat_map(|&g| [g.unsigned_abs() as usize - 1, g.unsigned_abs() as usize]).collect();
    let mut d = MrDiagram::classical(crossings);
    d.loops = (n - used.len()) as u32;
    d.validate()?;
    Ok(d)
}
