//! Exact arithmetic for `C(SU_q(2))` with complex `q`, its braided tensor square,
//! the coproduct, the spin-one representation `V`, the braided quantum spheres,
//! and a truncated Hilbert-space representation for numeric cross-checks.

pub mod algebra;
pub mod braided;
pub mod circle;
pub mod coproduct;
pub mod expr;
pub mod numrep;
pub mod oracle;
pub mod repmat;
pub mod report;
pub mod rewrite;
pub mod ring;
pub mod scalar;
pub mod sphere;
pub mod suites;
pub mod suq2;
