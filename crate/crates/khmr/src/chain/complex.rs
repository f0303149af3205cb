use std::collections::BTreeMap;

use crate::planar::{compose, Cob, Matching, Smoothing};

/// A smoothing placed in bidegree `(h, q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Object {
    pub diagram: Smoothing,
    pub h: i32,
    pub q: i32,
}

/// A finite bigraded complex over the dotted cobordism category.
///
/// `d[i]` maps target indices to the cobordism from object `i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Complex {
    pub boundary: Vec<u32>,
    pub objects: Vec<Object>,
    pub d: Vec<BTreeMap<usize, Cob>>,
}

impl Complex {
    pub fn new(boundary: Vec<u32>) -> Self {
        let mut boundary = boundary;
        boundary.sort_unstable();
        Self { boundary, objects: vec![], d: vec![] }
    }

    /// The one-object complex of a crossingless tangle.
    pub fn single(m: Matching, h: i32, q: i32) -> Self {
        let mut c = Self::new(m.labels().collect());
        c.push(Smoothing::new(m), h, q);
        c
    }

    /// The delooped complex of one closed circle: two empty objects at q ± 1.
    pub fn circle() -> Self {
        let mut c = Self::new(vec![]);
        c.push(Smoothing::default(), 0, 1);
        c.push(Smoothing::default(), 0, -1);
        c
    }

    pub fn push(&mut self, diagram: Smoothing, h: i32, q: i32) -> usize {
        debug_assert!(diagram.matching.labels().eq(self.boundary.iter().copied()));
        self.objects.push(Object { diagram, h, q });
        self.d.push(BTreeMap::new());
        self.objects.len() - 1
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&Cob> {
        self.d[i].get(&j)
    }

    pub fn set(&mut self, i: usize, j: usize, c: Cob) {
        if c.is_zero() {
            self.d[i].remove(&j);
        } else {
            self.d[i].insert(j, c);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: &Cob) {
        let cur = self.d[i].get(&j).cloned().unwrap_or_default();
        self.set(i, j, cur.add(c));
    }

    pub fn entry_count(&self) -> usize {
        self.d.iter().map(|r| r.len()).sum()
    }

    pub fn max_h(&self) -> Option<i32> {
        self.objects.iter().map(|o| o.h).max()
    }

    pub fn min_h(&self) -> Option<i32> {
        self.objects.iter().map(|o| o.h).min()
    }

    pub fn shift(&self, dh: i32, dq: i32) -> Complex {
        let mut c = self.clone();
        for o in &mut c.objects {
            o.h += dh;
            o.q += dq;
        }
        c
    }

    /// Keep the objects satisfying `keep`, with the induced differential.
    pub fn restrict(&self, keep: impl Fn(&Object) -> bool) -> Complex {
        let idx: Vec<Option<usize>> = {
            let mut k = 0;
            self.objects
                .iter()
                .map(|o| {
                    if keep(o) {
                        k += 1;
                        Some(k - 1)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let mut c = Complex::new(self.boundary.clone());
        for (i, o) in self.objects.iter().enumerate() {
            if idx[i].is_some() {
                c.push(o.diagram.clone(), o.h, o.q);
            }
        }
        for (i, row) in self.d.iter().enumerate() {
            let Some(ni) = idx[i] else { continue };
            for (&j, cob) in row {
                if let Some(nj) = idx[j] {
                    c.d[ni].insert(nj, cob.clone());
                }
            }
        }
        c
    }

    /// The subcomplex `C_{>a}` of objects with `h > a`.
    pub fn truncate(&self, a: i32) -> Complex {
        self.restrict(|o| o.h > a)
    }

    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Complex {
        let mut c = Complex::new(self.boundary.iter().map(|&l| f(l)).collect());
        for o in &self.objects {
            let m = o.diagram.matching.relabel(&f);
            c.push(Smoothing::with_circles(m, o.diagram.circles), o.h, o.q);
        }
        // Relabelling can reorder cycles, so entries are re-expressed.
        for (i, row) in self.d.iter().enumerate() {
            for (&j, cob) in row {
                let moved = relabel_cob(&self.objects[i].diagram, &self.objects[j].diagram, cob, &f);
                c.d[i].insert(j, moved);
            }
        }
        c
    }

    /// Objects grouped by homological degree, in index order.
    pub fn by_degree(&self) -> BTreeMap<i32, Vec<usize>> {
        let mut m: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            m.entry(o.h).or_default().push(i);
        }
        m
    }

    /// Check that `d ∘ d = 0`, that entries raise `h` by one and that every
    /// entry is homogeneous with degree `q_src - q_tgt`.
    pub fn validate(&self) -> Result<(), String> {
        for (i, row) in self.d.iter().enumerate() {
            let a = &self.objects[i];
            for (&j, cob) in row {
                let b = &self.objects[j];
                if b.h != a.h + 1 {
                    return Err(format!("entry {i}->{j} goes from h={} to h={}", a.h, b.h));
                }
                match cob.degree(&a.diagram, &b.diagram) {
                    Some(deg) if deg == a.q - b.q => {}
                    other => {
                        return Err(format!(
                            "entry {i}->{j} has degree {other:?}, expected {}",
                            a.q - b.q
                        ))
                    }
                }
            }
        }
        for (i, row) in self.d.iter().enumerate() {
            let mut sum: BTreeMap<usize, Cob> = BTreeMap::new();
            for (&j, f) in row {
                for (&k, g) in &self.d[j] {
                    let c = compose(&self.objects[i].diagram, &self.objects[j].diagram, &self.objects[k].diagram, f, g);
                    let e = sum.entry(k).or_default();
                    *e = e.add(&c);
                }
            }
            if let Some((k, _)) = sum.iter().find(|(_, c)| !c.is_zero()) {
                return Err(format!("d^2 != 0 from object {i} to object {k}"));
            }
        }
        Ok(())
    }
}

/// Re-express `cob: s -> t` after relabelling boundary points by `f`.
pub fn relabel_cob(s: &Smoothing, t: &Smoothing, cob: &Cob, f: impl Fn(u32) -> u32) -> Cob {
    use crate::planar::cycles;
    let (old, n) = cycles(&s.matching, &t.matching);
    let (s2, t2) = (s.matching.relabel(&f), t.matching.relabel(&f));
    let (new, _) = cycles(&s2, &t2);
    let mut perm = vec![0usize; n];
    for i in 0..s.matching.len() {
        let l = s.matching.label_at(i);
        perm[old[i] as usize] = new[s2.index_of(f(l)).unwrap()] as usize;
    }
    let terms = cob
        .terms()
        .iter()
        .map(|&(m, c)| {
            let mut out = m >> n << n;
            for (b, &p) in perm.iter().enumerate() {
                if m >> b & 1 == 1 {
                    out |= 1 << p;
                }
            }
            (out, c)
        })
        .collect();
    Cob::from_terms(terms)
}
