//! Test support: canonical graph fixtures, brute-force oracles, and random
//! generators. Public because the CLI exposes fixtures (`@petersen`, ...) and
//! the oracle solver.

mod fixtures;
mod oracle;
mod random;

pub use fixtures::{gen_named, named_fixtures, subdivide, FixtureError};
pub use oracle::{chromatic_number_exact, exact_list_color, is_k_choosable_bounded};
pub use random::{gen_random_cubic, gen_random_subcubic, random_lists, RandomGraphError};
