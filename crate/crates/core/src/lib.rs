//! List-coloring the square of a subcubic graph.
//!
//! A constructive solver that properly colors `G²` (vertices at distance at
//! most 2 in `G` get distinct colors) from per-vertex color lists:
//!
//! - lists of size 8 suffice for every connected subcubic graph except the
//!   Petersen graph ([`solver8::solve8`]);
//! - lists of size 7 suffice when the maximum average degree is below 14/5
//!   ([`discharging::solve7`]);
//! - lists of size 6 suffice when additionally the girth is at least 7 and
//!   the maximum average degree is below 18/7 ([`discharging::solve6`]).
//!
//! Supporting machinery: exact maximum average degree ([`mad`]), systems of
//! distinct representatives ([`sdr`]), decision traces ([`trace`]),
//! brute-force oracles and graph fixtures ([`testkit`]), and text I/O
//! ([`io`]).

pub mod coloring;
pub mod discharging;
pub mod graph;
pub mod io;
pub mod mad;
pub mod sdr;
pub mod solver8;
pub mod testkit;
pub mod trace;

pub use coloring::{
    color_all_but_edge, verify_square_coloring, Color, ColoringError, ExtensionOrder,
    ListAssignment, PartialColoring, Violation,
};
pub use graph::{CycleWitness, Graph, GraphError};
pub use mad::{mad_exact, Rational};
