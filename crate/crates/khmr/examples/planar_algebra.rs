//! Temperley-Lieb diagrams and dotted cobordisms.

use khmr::planar::{compose, dotted_identity, evaluate_closed, identity, Matching, Smoothing, TLDiagram};

fn main() {
    // e_1 on three strands, stacked on itself: e_1^2 = (q + q^-1) e_1.
    let e1 = TLDiagram::new(3, 3, &[(0, 1), (3, 4), (2, 5)]);
    let sq = e1.stack(&e1);
    println!("e1 * e1: {} circle(s), through-degree {}", sq.circles, sq.through_degree());

    // Closed surfaces: sphere, dotted sphere, torus.
    for (g, dots) in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)] {
        println!("genus {g} with {dots} dot(s) evaluates to {}", evaluate_closed(g, dots));
    }

    // A dot squared is zero; degrees of composites add.
    let m = Matching::from_pairs([(1, 2)]);
    let s = Smoothing::new(m.clone());
    let dot = dotted_identity(&m, 1);
    let dd = compose(&s, &s, &s, &dot, &dot);
    println!("dot degree {:?}, dot twice is zero: {}", dot.degree(&s, &s), dd.is_zero());
    let id = identity(&s);
    println!("identity then dot equals dot: {}", compose(&s, &s, &s, &id, &dot) == dot);
}
