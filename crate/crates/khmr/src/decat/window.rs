use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

/// A Laurent series in `q` known only on `[q_min, q_max]`.
///
/// Coefficients outside the window are unknown, not zero. A Laurent
/// polynomial is a series known everywhere.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LaurentWindow {
    pub coeffs: BTreeMap<i32, i64>,
    pub q_min: i32,
    pub q_max: i32,
}

impl LaurentWindow {
    /// The zero series on a window.
    pub fn zero(q_min: i32, q_max: i32) -> Self {
        Self { coeffs: BTreeMap::new(), q_min, q_max }
    }

    /// An exact Laurent polynomial.
    pub fn poly(mut coeffs: BTreeMap<i32, i64>) -> Self {
        coeffs.retain(|_, c| *c != 0);
        Self { coeffs, q_min: i32::MIN, q_max: i32::MAX }
    }

    pub fn one() -> Self {
        Self::poly([(0, 1)].into())
    }

    /// `q + q^{-1}`, the value of a circle.
    pub fn circle() -> Self {
        Self::poly([(1, 1), (-1, 1)].into())
    }

    pub fn is_exact(&self) -> bool {
        self.q_min == i32::MIN && self.q_max == i32::MAX
    }

    /// Coefficient of `q^e`, or `None` outside the window.
    pub fn get(&self, e: i32) -> Option<i64> {
        (self.q_min..=self.q_max).contains(&e).then(|| self.coeffs.get(&e).copied().unwrap_or(0))
    }

    /// Add `c q^e`; terms outside the window are dropped.
    pub fn add_term(&mut self, e: i32, c: i64) {
        if !(self.q_min..=self.q_max).contains(&e) {
            return;
        }
        let v = self.coeffs.entry(e).or_insert(0);
        *v = v.checked_add(c).expect("series coefficient overflow");
        if *v == 0 {
            self.coeffs.remove(&e);
        }
    }

    /// Narrow the window; coefficients inside are untouched.
    pub fn restrict(&self, q_min: i32, q_max: i32) -> Self {
        let (lo, hi) = (q_min.max(self.q_min), q_max.min(self.q_max));
        let coeffs = if lo <= hi { self.coeffs.range(lo..=hi).map(|(&e, &c)| (e, c)).collect() } else { BTreeMap::new() };
        Self { coeffs, q_min: lo, q_max: hi }
    }

    /// Multiply by `sign * q^dq`; the window moves along.
    pub fn shift(&self, dq: i32, sign: i64) -> Self {
        let mv = |x: i32| if x == i32::MIN || x == i32::MAX { x } else { x + dq };
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + dq, c * sign)).collect(),
            q_min: mv(self.q_min),
            q_max: mv(self.q_max),
        }
    }

    /// Sum, known on the intersection of the windows.
    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.restrict(other.q_min, other.q_max);
        for (&e, &c) in &other.coeffs {
            s.add_term(e, c);
        }
        s
    }

    /// Product with an exact polynomial `p`.
    ///
    /// A window `[a, b]` times a polynomial of degrees `[lo, hi]` is known on
    /// `[a + hi, b + lo]`.
    pub fn mul(&self, p: &Self) -> Self {
        assert!(p.is_exact(), "the second factor must be a polynomial");
        let (lo, hi) = match (p.coeffs.keys().next(), p.coeffs.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Self { coeffs: BTreeMap::new(), ..self.clone() },
        };
        let q_min = if self.q_min == i32::MIN { i32::MIN } else { self.q_min + hi };
        let q_max = if self.q_max == i32::MAX { i32::MAX } else { self.q_max + lo };
        let mut out = Self::zero(q_min, q_max);
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &p.coeffs {
                out.add_term(a + b, x.checked_mul(y).expect("series coefficient overflow"));
            }
        }
        out
    }

    /// Exponents inside both windows where the coefficients differ.
    pub fn mismatches(&self, other: &Self) -> Vec<i32> {
        let (lo, hi) = (self.q_min.max(other.q_min), self.q_max.min(other.q_max));
        let keys: BTreeSet<i32> =
            self.coeffs.keys().chain(other.coeffs.keys()).copied().filter(|e| (lo..=hi).contains(e)).collect();
        keys.into_iter().filter(|&e| self.get(e) != other.get(e)).collect()
    }

    /// `exponent<TAB>coefficient` lines for the nonzero terms, ascending.
    pub fn to_lines(&self) -> String {
        self.coeffs.iter().map(|(e, c)| format!("{e}\t{c}\n")).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let bound = |x: i32, inf: i32| if x == inf { serde_json::Value::Null } else { x.into() };
        serde_json::json!({
            "q_min": bound(self.q_min, i32::MIN),
            "q_max": bound(self.q_max, i32::MAX),
            "terms": self.coeffs.iter().map(|(e, c)| serde_json::json!({"q": e, "coeff": c})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for LaurentWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let terms: Vec<String> = self.coeffs.iter().rev().map(|(e, c)| format!("{c}q^{e}")).collect();
            write!(f, "{}", terms.join(" + "))?;
        }
        if !self.is_exact() {
            write!(f, " on [{}, {}]", self.q_min, self.q_max)?;
        }
        Ok(())
    }
}
