//! Opt-in self-checking: when enabled, every complex built by
//! [`glue_reduce`](super::glue_reduce) or passed to
//! [`homology`](super::homology) is validated and failures are recorded.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::Complex;

static ENABLED: AtomicBool = AtomicBool::new(false);
static CHECKED: AtomicUsize = AtomicUsize::new(0);
static FAILURES: Mutex<Vec<String>> = Mutex::new(Vec::new());

pub fn enable(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

pub fn enabled() -> bool {
    ENABLED.load(Ordering::Relaxed)
}

/// `(complexes checked, failure messages)` since the last reset.
pub fn report() -> (usize, Vec<String>) {
    (CHECKED.load(Ordering::SeqCst), FAILURES.lock().unwrap().clone())
}

pub fn reset() {
    CHECKED.store(0, Ordering::SeqCst);
    FAILURES.lock().unwrap().clear();
}

pub(crate) fn check(c: &Complex, site: &str) {
    if !enabled() {
        return;
    }
    CHECKED.fetch_add(1, Ordering::Relaxed);
    if let Err(e) = c.validate() {
        FAILURES.lock().unwrap().push(format!("{site}: {e}"));
    }
}
