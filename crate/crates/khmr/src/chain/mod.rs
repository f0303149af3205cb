//! Bigraded complexes over the cobordism category: crossing complexes,
//! planar tensor products, delooping, Gaussian elimination and homology.

pub mod audit;
mod complex;
mod gauss;
mod homology;
mod serial;
mod snf;
mod tensor;

pub use complex::{relabel_cob, Complex, Object};
pub use gauss::gaussian_eliminate;
pub use homology::{homology, BigradedHomology, Group};
pub use serial::{read_complex, write_complex};
pub use snf::smith_diagonal;
pub use tensor::{crossing_complex, deloop, raw_crossing, tensor, Sign};

/// Tensor, deloop and eliminate in one step.
pub fn glue_reduce(a: &Complex, b: &Complex) -> Complex {
    let c = gaussian_eliminate(&deloop(&tensor(a, b)));
    audit::check(&c, "glue");
    c
}
