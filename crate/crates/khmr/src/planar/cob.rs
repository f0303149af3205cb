use super::matching::{cycles, Matching};

/// A crossingless tangle: a matching plus some disjoint closed circles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Smoothing {
    pub matching: Matching,
    pub circles: u32,
}

impl Smoothing {
    pub fn new(matching: Matching) -> Self {
        Self { matching, circles: 0 }
    }

    pub fn with_circles(matching: Matching, circles: u32) -> Self {
        Self { matching, circles }
    }

    /// Number of boundary circles of a cobordism `self -> t`, which is also
    /// the number of mask bits of its basis.
    pub fn hom_rank_bits(&self, t: &Smoothing) -> usize {
        cycles(&self.matching, &t.matching).1 + (self.circles + t.circles) as usize
    }
}

/// A linear combination of dotted cobordisms between two smoothings `s -> t`.
///
/// In the dotted theory over the integers, `Hom(s, t)` is free with basis
/// indexed by dot patterns: every boundary circle of the cobordism bounds one
/// disk carrying zero or one dot. The boundary circles are the cycles of
/// `s ∪ t` (numbered as in [`cycles`]), then the circles of `s`, then the
/// circles of `t`; bit `i` of a mask is the dot on circle `i`. The smoothings
/// themselves are kept by the caller, which keeps differentials small.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Cob {
    terms: Vec<(u64, i64)>,
}

impl Cob {
    pub fn zero() -> Self {
        Self { terms: vec![] }
    }

    /// `c` times the undotted basis element: the identity when `s == t`,
    /// a saddle when `s` and `t` differ by one arc swap.
    pub fn plain(c: i64) -> Self {
        Self::from_terms(vec![(0, c)])
    }

    pub fn from_terms(mut terms: Vec<(u64, i64)>) -> Self {
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(u64, i64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = checked_add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(±1)` when this is ± the undotted basis element.
    pub fn unit(&self) -> Option<i64> {
        match self.terms.as_slice() {
            [(0, c)] if c.abs() == 1 => Some(*c),
            _ => None,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|&(m, c)| (m, checked_mul(c, k))).collect() }
    }

    pub fn add(&self, other: &Cob) -> Cob {
        let mut t = self.terms.clone();
        t.extend_from_slice(&other.terms);
        Cob::from_terms(t)
    }

    /// Degree of every term, or `None` when terms disagree (inhomogeneous).
    pub fn degree(&self, s: &Smoothing, t: &Smoothing) -> Option<i32> {
        let n = s.hom_rank_bits(t);
        let base = n as i32 - (s.matching.len() / 2) as i32;
        let mut deg = None;
        for &(m, _) in &self.terms {
            let d = base - 2 * m.count_ones() as i32;
            if deg.is_some_and(|x| x != d) {
                return None;
            }
            deg = Some(d);
        }
        deg
    }
}

pub(crate) fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("cobordism coefficient overflow")
}

pub(crate) fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("cobordism coefficient overflow")
}

/// Value of a closed connected dotted surface of genus `g` with `d` dots.
pub fn evaluate_closed(genus: u32, dots: u32) -> i64 {
    match (genus, dots) {
        (0, 1) => 1,
        (1, 0) => 2,
        _ => 0,
    }
}

/// A surface assembled from dotted disks glued along boundary intervals.
///
/// Every disk has Euler characteristic 1 and each interval gluing lowers it
/// by one. After gluing, each final boundary circle lies in one component;
/// components are then reduced to sums of dotted disks by neck cutting.
pub struct Assembly {
    comps: Vec<Comp>,
    ndisks: usize,
}

struct Comp {
    disks: Vec<usize>,
    chi: i32,
    finals: Vec<u32>,
}

impl Assembly {
    /// `glues` are pairs of disk indices joined along one interval each;
    /// `finals[i]` is a disk containing final boundary circle `i`, whose dot
    /// state goes to mask bit `i`.
    pub fn new(ndisks: usize, glues: &[(usize, usize)], finals: &[usize]) -> Self {
        Self::with_circle_glues(ndisks, glues, &[], finals)
    }

    /// As [`Assembly::new`], with extra gluings along whole circles, which
    /// leave the Euler characteristic unchanged.
    pub fn with_circle_glues(
        ndisks: usize,
        glues: &[(usize, usize)],
        circle_glues: &[(usize, usize)],
        finals: &[usize],
    ) -> Self {
        assert!(ndisks <= 128 && finals.len() <= 64);
        let mut parent: Vec<usize> = (0..ndisks).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in glues.iter().chain(circle_glues) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut root_comp = vec![usize::MAX; ndisks];
        let mut comps: Vec<Comp> = vec![];
        for d in 0..ndisks {
            let r = find(&mut parent, d);
            if root_comp[r] == usize::MAX {
                root_comp[r] = comps.len();
                comps.push(Comp { disks: vec![], chi: 0, finals: vec![] });
            }
            let c = &mut comps[root_comp[r]];
            c.disks.push(d);
            c.chi += 1;
        }
        for &(a, _) in glues {
            let r = find(&mut parent, a);
            comps[root_comp[r]].chi -= 1;
        }
        for (i, &d) in finals.iter().enumerate() {
            let r = find(&mut parent, d);
            comps[root_comp[r]].finals.push(i as u32);
        }
        Self { comps, ndisks }
    }

    /// Evaluate with the given dotted disks; returns `(mask, coefficient)`
    /// terms over the final circles.
    pub fn evaluate(&self, dots: u128) -> Vec<(u64, i64)> {
        debug_assert!(self.ndisks == 128 || dots >> self.ndisks == 0);
        let mut acc: Vec<(u64, i64)> = vec![(0, 1)];
        for c in &self.comps {
            let d: u32 = c.disks.iter().filter(|&&i| dots >> i & 1 == 1).count() as u32;
            let m = c.finals.len() as i32;
            let two_g = 2 - m - c.chi;
            assert!(two_g >= 0 && two_g % 2 == 0, "not an orientable surface");
            let g = (two_g / 2) as u32;
            let e = g + d;
            let scale = 1i64 << g;
            let options: Vec<(u64, i64)> = if m == 0 {
                match evaluate_closed(g, d) {
                    0 => return vec![],
                    v => vec![(0, v)],
                }
            } else if e >= 2 {
                return vec![];
            } else {
                let all: u64 = c.finals.iter().fold(0, |acc, &b| acc | 1 << b);
                if e == 1 {
                    vec![(all, scale)]
                } else {
                    c.finals.iter().map(|&b| (all & !(1 << b), 1)).collect()
                }
            };
            if options.len() == 1 {
                let (om, oc) = options[0];
                for t in acc.iter_mut() {
                    t.0 |= om;
                    t.1 = checked_mul(t.1, oc);
                }
            } else {
                let mut next = Vec::with_capacity(acc.len() * options.len());
                for &(am, ac) in &acc {
                    for &(om, oc) in &options {
                        next.push((am | om, checked_mul(ac, oc)));
                    }
                }
                acc = next;
            }
        }
        acc
    }
}


/// Vertical composition: `phi: s -> t` followed by `psi: t -> u`.
pub fn compose(s: &Smoothing, t: &Smoothing, u: &Smoothing, phi: &Cob, psi: &Cob) -> Cob {
    let (sm, tm, um) = (&s.matching, &t.matching, &u.matching);
    assert!(sm.len() == tm.len() && tm.len() == um.len(), "boundary mismatch");
    if phi.is_zero() || psi.is_zero() {
        return Cob::zero();
    }
    let (c1, n1) = cycles(sm, tm);
    let (c2, n2) = cycles(tm, um);
    let (c3, n3) = cycles(sm, um);
    let (cs, ct, cu) = (s.circles as usize, t.circles as usize, u.circles as usize);
    // Disks of phi: n1 cycles, cs source circles, ct target circles.
    let b1 = n1 + cs + ct;
    // Disks of psi start at b1: n2 cycles, ct source circles, cu target circles.
    let mut glues = vec![];
    for (a, _) in tm.pairs() {
        let ia = tm.index_of(a).unwrap();
        glues.push((c1[ia] as usize, b1 + c2[ia] as usize));
    }
    let circle_glues: Vec<(usize, usize)> = (0..ct).map(|j| (n1 + cs + j, b1 + n2 + j)).collect();
    let mut finals = vec![usize::MAX; n3];
    for i in 0..sm.len() {
        let c = c3[i] as usize;
        if finals[c] == usize::MAX {
            finals[c] = c1[i] as usize;
        }
    }
    finals.extend((0..cs).map(|j| n1 + j));
    finals.extend((0..cu).map(|j| b1 + n2 + ct + j));
    let asm = Assembly::with_circle_glues(b1 + n2 + ct + cu, &glues, &circle_glues, &finals);
    let mut out = vec![];
    for &(m1, k1) in phi.terms() {
        for &(m2, k2) in psi.terms() {
            let dots = m1 as u128 | (m2 as u128) << b1;
            let k = checked_mul(k1, k2);
            for (m, c) in asm.evaluate(dots) {
                out.push((m, checked_mul(c, k)));
            }
        }
    }
    Cob::from_terms(out)
}

/// Identity cobordism of `s`. Each circle contributes a cylinder, which
/// neck-cuts into a sum of two dotted pairs of disks.
pub fn identity(s: &Smoothing) -> Cob {
    let (_, n) = cycles(&s.matching, &s.matching);
    let c = s.circles as usize;
    let mut terms = vec![(0u64, 1i64)];
    for j in 0..c {
        let (src, tgt) = (1u64 << (n + j), 1u64 << (n + c + j));
        terms = terms.iter().flat_map(|&(m, k)| [(m | src, k), (m | tgt, k)]).collect();
    }
    Cob::from_terms(terms)
}

/// Identity of a circle-free `s` with one dot on the arc through `label`.
pub fn dotted_identity(s: &Matching, label: u32) -> Cob {
    let (c, _) = cycles(s, s);
    Cob::from_terms(vec![(1 << c[s.index_of(label).unwrap()], 1)])
}
