use std::fmt;

/// A crossingless matching of a finite set of boundary labels.
///
/// Labels are arbitrary `u32`s; planarity is never stored, it is a
/// consequence of how matchings are produced (resolving crossings and
/// gluing planar pieces). Stored as `(label, partner)` sorted by label.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Matching {
    ends: Vec<(u32, u32)>,
}

impl Matching {
    pub fn empty() -> Self {
        Self { ends: vec![] }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut ends = vec![];
        for (a, b) in pairs {
            assert_ne!(a, b, "an arc needs two distinct endpoints");
            ends.push((a, b));
            ends.push((b, a));
        }
        ends.sort_unstable();
        for w in ends.windows(2) {
            assert_ne!(w[0].0, w[1].0, "label {} used twice", w[0].0);
        }
        Self { ends }
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.ends.binary_search_by_key(&label, |e| e.0).ok()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.index_of(label).is_some()
    }

    pub fn partner(&self, label: u32) -> u32 {
        let i = self.index_of(label).unwrap_or_else(|| panic!("label {label} not in matching"));
        self.ends[i].1
    }

    pub fn partner_at(&self, i: usize) -> u32 {
        self.ends[i].1
    }

    pub fn label_at(&self, i: usize) -> u32 {
        self.ends[i].0
    }

    /// Sorted boundary labels.
    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.ends.iter().map(|e| e.0)
    }

    /// Arcs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.ends.iter().filter(|e| e.0 < e.1).copied()
    }

    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Self {
        Self::from_pairs(self.pairs().map(|(a, b)| (f(a), f(b))))
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// Cycle structure of `s ∪ t` for two matchings on the same label set.
///
/// Returns the cycle id of every label (indexed like `s.label_at`) and the
/// number of cycles. Cycles are numbered by their smallest label, which makes
/// the numbering canonical.
pub fn cycles(s: &Matching, t: &Matching) -> (Vec<u8>, usize) {
    debug_assert_eq!(s.len(), t.len());
    let n = s.len();
    let mut id = vec![u8::MAX; n];
    let mut count = 0usize;
    for start in 0..n {
        if id[start] != u8::MAX {
            continue;
        }
        assert!(count < u8::MAX as usize, "too many cycles");
        let c = count as u8;
        count += 1;
        let mut i = start;
        loop {
            id[i] = c;
            let j = s.index_of(s.partner_at(i)).unwrap();
            id[j] = c;
            let k = t.index_of(t.partner_at(j)).unwrap();
            if k == start {
                break;
            }
            i = k;
        }
    }
    (id, count)
}

/// Result of gluing two matchings along their shared labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub matching: Matching,
    /// Closed loops, each given by the shared labels it passes through.
    pub circles: Vec<Vec<u32>>,
}

/// Glue two matchings along every label they have in common.
pub fn glue(a: &Matching, b: &Matching) -> Glued {
    let mut seen_a = vec![false; a.len()];
    let mut pairs = vec![];
    let outer: Vec<(u32, bool)> = {
        let mut v: Vec<(u32, bool)> = a
            .labels()
            .filter(|&l| !b.contains(l))
            .map(|l| (l, true))
            .chain(b.labels().filter(|&l| !a.contains(l)).map(|l| (l, false)))
            .collect();
        v.sort_unstable();
        v
    };
    let mut done = std::collections::HashSet::new();
    for &(l, in_a) in &outer {
        if done.contains(&l) {
            continue;
        }
        let mut x = l;
        let mut on_a = in_a;
        let end = loop {
            let (m, other) = if on_a { (a, b) } else { (b, a) };
            let y = m.partner(x);
            if on_a {
                seen_a[a.index_of(x).unwrap()] = true;
                seen_a[a.index_of(y).unwrap()] = true;
            }
            if !other.contains(y) {
                break y;
            }
            x = y;
            on_a = !on_a;
        };
        done.insert(l);
        done.insert(end);
        pairs.push((l, end));
    }
    let mut circles = vec![];
    for i in 0..a.len() {
        if seen_a[i] {
            continue;
        }
        let mut labels = vec![];
        let mut x = a.label_at(i);
        loop {
            let ix = a.index_of(x).unwrap();
            let y = a.partner_at(ix);
            seen_a[ix] = true;
            seen_a[a.index_of(y).unwrap()] = true;
            labels.push(x);
            labels.push(y);
            x = b.partner(y);
            if x == a.label_at(i) {
                break;
            }
        }
        labels.sort_unstable();
        circles.push(labels);
    }
    Glued { matching: Matching::from_pairs(pairs), circles }
}

/// A Temperley-Lieb diagram with `bottom` points and `top` points.
///
/// Point indexing runs bottom-left to bottom-right, then top-left to
/// top-right, so bottom point `i` is `i` and top point `j` is `bottom + j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TLDiagram {
    pub bottom: usize,
    pub top: usize,
    pub matching: Matching,
    pub circles: usize,
}

impl TLDiagram {
    pub fn new(bottom: usize, top: usize, pairs: &[(u32, u32)]) -> Self {
        let d = Self { bottom, top, matching: Matching::from_pairs(pairs.iter().copied()), circles: 0 };
        assert_eq!(d.matching.len(), bottom + top, "matching must be perfect");
        assert!(d.is_planar(), "matching must be non-crossing");
        d
    }

    pub fn identity(n: usize) -> Self {
        let pairs: Vec<_> = (0..n as u32).map(|i| (i, n as u32 + i)).collect();
        Self::new(n, n, &pairs)
    }

    fn is_top(&self, p: u32) -> bool {
        p as usize >= self.bottom
    }

    /// Position of a point on the boundary circle read counterclockwise:
    /// bottom left to right, then top right to left.
    fn ccw(&self, p: u32) -> usize {
        let p = p as usize;
        if p < self.bottom {
            p
        } else {
            self.bottom + (self.top - 1 - (p - self.bottom))
        }
    }

    pub fn is_planar(&self) -> bool {
        let arcs: Vec<(usize, usize)> = self
            .matching
            .pairs()
            .map(|(a, b)| {
                let (x, y) = (self.ccw(a), self.ccw(b));
                (x.min(y), x.max(y))
            })
            .collect();
        for (i, &(a, b)) in arcs.iter().enumerate() {
            for &(c, d) in &arcs[i + 1..] {
                let c_in = a < c && c < b;
                let d_in = a < d && d < b;
                if c_in != d_in {
                    return false;
                }
            }
        }
        true
    }

    /// Number of strands joining bottom to top.
    pub fn through_degree(&self) -> usize {
        self.matching.pairs().filter(|&(a, b)| self.is_top(a) != self.is_top(b)).count()
    }

    /// Number of turnbacks on the bottom (equal to the top count when square).
    pub fn matchings(&self) -> usize {
        self.matching.pairs().filter(|&(a, b)| !self.is_top(a) && !self.is_top(b)).count()
    }

    /// Split as `top · ι_d · bottom`.
    ///
    /// The returned top half has `d` bottom points and `self.top` top points;
    /// the bottom half has `self.bottom` bottom points and `d` top points.
    pub fn decompose(&self) -> Option<(TLDiagram, usize, TLDiagram)> {
        if self.circles > 0 {
            return None;
        }
        let mut through: Vec<(u32, u32)> = self
            .matching
            .pairs()
            .filter(|&(a, b)| self.is_top(a) != self.is_top(b))
            .collect();
        through.sort_unstable();
        let d = through.len();
        let bt = self.bottom as u32;
        let mut top_pairs = vec![];
        let mut bot_pairs = vec![];
        for (a, b) in self.matching.pairs() {
            match (self.is_top(a), self.is_top(b)) {
                (false, false) => bot_pairs.push((a, b)),
                (true, true) => top_pairs.push((a - bt + d as u32, b - bt + d as u32)),
                _ => {}
            }
        }
        for (i, &(a, b)) in through.iter().enumerate() {
            bot_pairs.push((a, bt + i as u32));
            top_pairs.push((i as u32, b - bt + d as u32));
        }
        Some((
            TLDiagram::new(d, self.top, &top_pairs),
            d,
            TLDiagram::new(self.bottom, d, &bot_pairs),
        ))
    }

    /// Stack `other` on top of `self`; closed loops are counted in `circles`.
    pub fn stack(&self, other: &TLDiagram) -> TLDiagram {
        assert_eq!(self.top, other.bottom);
        // Move self's top points and other's bottom points onto shared labels.
        let off = 1_000_000u32;
        let lower = self.matching.relabel(|p| if self.is_top(p) { off + p - self.bottom as u32 } else { p });
        let upper = other.matching.relabel(|p| {
            if other.is_top(p) {
                p - other.bottom as u32 + 2 * off
            } else {
                off + p
            }
        });
        let g = glue(&lower, &upper);
        let m = g.matching.relabel(|p| if p >= 2 * off { p - 2 * off + self.bottom as u32 } else { p });
        TLDiagram {
            bottom: self.bottom,
            top: other.top,
            matching: m,
            circles: self.circles + other.circles + g.circles.len(),
        }
    }
}
