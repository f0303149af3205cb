mod common;

use khmr::chain::Sign;
use khmr::planar::TLDiagram;
use khmr::twist::*;

#[test]
fn full_twist_word_lengths() {
    assert_eq!(full_twist_word(2, 1), vec![1, 1]);
    assert_eq!(full_twist_word(3, 2).len(), 12);
    assert_eq!(jucys_murphy_word(3), vec![1, 2, 2, 1]);
}

#[test]
fn closed_full_twists_match_the_oracle() {
    // T(2,2) and T(3,3), closed as braids.
    for n in [2usize, 3] {
        let (b, t) = (bottom_labels(n), top_labels(n));
        let mut next = 100;
        let xs = braid_crossings(&full_twist_word(n, 1), &b, &t, &vec![true; n], &mut next);
        let close = |l: u32| if l as usize > n && l as usize <= 2 * n { l - n as u32 } else { l };
        let oracle_in: Vec<([u32; 4], bool)> = xs.iter().map(|x| (x.slots.map(close), x.sign == Sign::Pos)).collect();
        let c = braid_complex(&full_twist_word(n, 1), &b, &t, &vec![true; n], false);
        c.validate().unwrap();
        let ours = closure_homology(&c, &test_closures(n)[0]);
        assert_eq!(common::to_table(&ours), common::cube_homology(&oracle_in), "n={n}");
    }
}

#[test]
fn one_twist_through_degree_bounds() {
    for n in 2..=4 {
        let r = check_through_degree_bounds(n);
        assert!(r.passed(), "n={n}: {:?}", r.violations);
        assert_eq!(r.top_degree.len(), n / 2 + 1);
    }
}

#[test]
fn top_degrees_of_the_even_twist() {
    // th = 0 diagrams fill degrees 2p^2 - 1 and 2p^2.
    let r = check_through_degree_bounds(4);
    assert_eq!(r.top_degree[&2], 8);
    assert_eq!(r.top_degree[&1], 6);
    assert_eq!(r.top_degree[&0], 0);
}

#[test]
fn stabilization() {
    for k in 1..=4 {
        let r = check_stabilization(2, k);
        assert!(r.passed(), "n=2 k={k}: {:?}", r.violations);
    }
    let r = check_stabilization(4, 1);
    assert!(r.passed(), "n=4 k=1: {:?}", r.violations);
    assert!(r.objects > 0);
}

#[test]
fn two_strand_twist_objects() {
    // q^{-1} cup-cap at h = 0, then q^{-3}, q^{-5}, ... one degree lower each.
    let (c, _) = truncated_infinite_twist(2, -4);
    assert_eq!(c.len(), 4);
    let mut grades: Vec<(i32, i32)> = c.objects.iter().map(|o| (o.h, o.q)).collect();
    grades.sort();
    assert_eq!(grades, vec![(-3, -7), (-2, -5), (-1, -3), (0, -1)]);
    for o in &c.objects {
        assert_eq!(as_tl(&o.diagram, 2), TLDiagram::new(2, 2, &[(0, 1), (2, 3)]));
    }
}

#[test]
fn truncated_builds_agree_with_full_ones() {
    for (n, k, floor) in [(2, 3, -4), (4, 1, -2), (4, 2, -3)] {
        // The floor degree itself may keep extra objects; above it the two agree.
        let full = reduced_twist_complex(n, k).truncate(floor);
        let cut = twist_complex_above(n, k, Some(floor)).truncate(floor);
        assert_eq!(object_multiset(&full), object_multiset(&cut), "n={n} k={k}");
    }
}

#[test]
fn crossing_counts_follow_orientation() {
    let spec = |up: &[bool]| TwistSpec { n: up.len(), k: 1, up: up.to_vec() };
    assert_eq!(spec(&[true, true]).crossing_counts(), (2, 0));
    assert_eq!(spec(&[true, false]).crossing_counts(), (0, 2));
    assert_eq!(spec(&[true, true, true, false]).crossing_counts(), (6, 6));
    assert_eq!(spec(&[true, false, true, false]).crossing_counts(), (4, 8));
}

#[test]
fn disk_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TwistCache::new(Some(dir.path().to_path_buf()));
    let spec = TwistSpec::new(2, 2);
    let built = cache.get(&spec).unwrap();
    let path = cache.path(&spec).unwrap();
    assert!(path.exists());
    let again = cache.get(&spec).unwrap();
    assert_eq!(object_multiset(&built), object_multiset(&again));
    // A stale engine tag forces a rebuild.
    let text = std::fs::read_to_string(&path).unwrap().replacen(ENGINE_TAG, "stale", 1);
    std::fs::write(&path, text).unwrap();
    assert_eq!(object_multiset(&cache.get(&spec).unwrap()), object_multiset(&built));
    assert!(std::fs::read_to_string(&path).unwrap().contains(ENGINE_TAG));
}
