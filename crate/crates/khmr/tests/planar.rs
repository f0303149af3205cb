mod common;

use khmr::planar::*;

fn m(pairs: &[(u32, u32)]) -> Matching {
    Matching::from_pairs(pairs.iter().copied())
}

#[test]
fn glue_closes_circles() {
    // Two caps on the same pair of points make a circle.
    let g = glue(&m(&[(1, 2)]), &m(&[(1, 2)]));
    assert!(g.matching.is_empty());
    assert_eq!(g.circles, vec![vec![1, 2]]);

    let g = glue(&m(&[(1, 2), (3, 4)]), &m(&[(2, 3)]));
    assert_eq!(g.matching, m(&[(1, 4)]));
    assert!(g.circles.is_empty());
}

#[test]
fn cycles_are_numbered_canonically() {
    let s = m(&[(1, 2), (3, 4)]);
    let t = m(&[(1, 4), (2, 3)]);
    assert_eq!(cycles(&s, &t), (vec![0, 0, 0, 0], 1));
    assert_eq!(cycles(&s, &s), (vec![0, 0, 1, 1], 2));
}

#[test]
fn tl_stacking_counts_loops() {
    let cup_cap = TLDiagram::new(2, 2, &[(0, 1), (2, 3)]);
    let e2 = cup_cap.stack(&cup_cap);
    assert_eq!(e2.circles, 1);
    assert_eq!(e2.matching, cup_cap.matching);
    assert_eq!(TLDiagram::identity(3).stack(&TLDiagram::identity(3)), TLDiagram::identity(3));
    assert_eq!(cup_cap.through_degree(), 0);
    assert_eq!(TLDiagram::identity(4).through_degree(), 4);
}

#[test]
fn tl_decomposes_through_its_through_strands() {
    let d = TLDiagram::new(4, 4, &[(0, 1), (2, 4), (3, 5), (6, 7)]);
    let (top, k, bottom) = d.decompose().unwrap();
    assert_eq!(k, 2);
    assert_eq!(bottom.stack(&top), d);
}

#[test]
fn closed_surfaces() {
    assert_eq!(evaluate_closed(0, 0), 0);
    assert_eq!(evaluate_closed(0, 1), 1);
    assert_eq!(evaluate_closed(1, 0), 2);
    assert_eq!(evaluate_closed(0, 2), 0);
    assert_eq!(evaluate_closed(2, 0), 0);
}

#[test]
fn saddle_then_saddle_neck_cuts() {
    // Two arcs, merged into one and split back: the composite is a tube
    // between the two arcs, which neck-cuts into two once-dotted terms.
    let a = Smoothing::new(m(&[(1, 2), (3, 4)]));
    let b = Smoothing::new(m(&[(1, 4), (2, 3)]));
    let twice = compose(&a, &b, &a, &Cob::plain(1), &Cob::plain(1));
    let (c, n) = cycles(&a.matching, &a.matching);
    assert_eq!(n, 2);
    let dot = |l: u32| 1u64 << c[a.matching.index_of(l).unwrap()];
    assert_eq!(twice, Cob::from_terms(vec![(dot(1), 1), (dot(3), 1)]));
    assert_eq!(twice.degree(&a, &a), Some(-2));
}

#[test]
fn saddle_with_a_circle_merges() {
    // Birth of a circle followed by merging it back is the identity.
    let empty = Smoothing::new(Matching::empty());
    let circle = Smoothing::with_circles(Matching::empty(), 1);
    let birth = Cob::plain(1);
    let death_dotted = Cob::from_terms(vec![(1, 1)]);
    let both = compose(&empty, &circle, &empty, &birth, &death_dotted);
    assert_eq!(both, Cob::plain(1));
    // Without a dot the sphere vanishes.
    assert!(compose(&empty, &circle, &empty, &birth, &Cob::plain(1)).is_zero());
}

#[test]
fn identity_is_neutral() {
    let s = Smoothing::with_circles(m(&[(1, 2), (3, 4)]), 1);
    let t = Smoothing::with_circles(m(&[(1, 4), (2, 3)]), 1);
    let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(3);
    for _ in 0..50 {
        let f = common::random_cob(&mut rng, &s, &t);
        assert_eq!(compose(&s, &s, &t, &identity(&s), &f), f);
        assert_eq!(compose(&s, &t, &t, &f, &identity(&t)), f);
    }
}

#[test]
fn dotted_identity_squares_to_zero() {
    let s = m(&[(1, 2)]);
    let sm = Smoothing::new(s.clone());
    let x = dotted_identity(&s, 1);
    assert!(compose(&sm, &sm, &sm, &x, &x).is_zero());
}

#[test]
fn random_triples_associate_and_degrees_add() {
    let bad = common::random_cob_triples(0x5eed, 1000);
    assert!(bad.is_empty(), "{bad:?}");
}
