//! Temperley-Lieb diagrams and dotted cobordisms over the integers.

mod cob;
mod matching;

pub(crate) use cob::checked_mul;
pub use cob::{compose, dotted_identity, evaluate_closed, identity, Assembly, Cob, Smoothing};
pub use matching::{cycles, glue, Glued, Matching, TLDiagram};
