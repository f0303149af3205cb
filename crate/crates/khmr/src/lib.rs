//! Exact Khovanov homology for links in `#^r(S^2 x S^1)`.
//!
//! Links are drawn in the plane with surgery gates; each gate is filled with
//! a finite approximation of the infinite full twist, and the resulting
//! complex is simplified by delooping and Gaussian elimination before taking
//! integer homology.

pub mod chain;
pub mod decat;
pub mod diagram;
pub mod error;
pub mod pipeline;
pub mod planar;
pub mod twist;

pub use error::{Error, Result};
