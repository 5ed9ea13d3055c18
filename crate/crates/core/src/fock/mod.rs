//! Truncated Fock spaces, q-oscillator operators and exactness windows.

mod block;
mod dump;
mod generators;
mod op;
mod space;
mod window;

pub use block::{block_exact, qexp_big_blocks, qexp_blocks};
pub use dump::{dump, parse_dump};
pub use generators::{diag_fn, make_generator, two_leg, Generator};
pub use op::{Agreement, FockOp, Witness};
pub use space::{FockSpace, Leg};
pub use window::Window;
