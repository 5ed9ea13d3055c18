//! Exact scalars, parameter points and q-special functions.

mod params;
mod scalar;
mod special;

pub use params::{certificate_violation, sample_params, Admissibility, ParamPoint, SCALAR_NAMES, SPECTRAL_NAMES};
pub use scalar::Scalar;
pub use special::{q_pochhammer, q_pochhammer_inv, qexp_big_nilpotent, qexp_nilpotent};
