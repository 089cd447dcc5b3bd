//! Block-ascending permutations that avoid increasing patterns.
//!
//! * [`perm`]: the data model, parsing, LIS and standardization.
//! * [`bijections`]: the W and V moves and everything built from them.
//! * [`enumeration`]: exhaustive generation and closed-form counts.
//! * [`tableaux`]: Young diagrams and the tableau arrangements.
//! * [`verify`]: exhaustive verification suites used by `blockperm verify`.

pub mod bijections;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod perm;
pub mod tableaux;
pub mod verify;

pub use bijections::{
    delete_max, insert_max, majorize_inject, map_v, map_w, reorder_blocks, ridge_indices, swap_adjacent,
    transfer_step, BijectionTrace, RidgePair,
};
pub use enumeration::{catalan_triangle, count, count_d_two, gen_ascending, gen_d, gen_l, CountTable, Selector};
pub use error::{Error, Result};
pub use perm::{classify, descent_set, lis_length, parse, standardize, substitute, Avoidance, BlockPermutation, Composition, TwoBlockView, ValueMap};
pub use tableaux::{hook_count, skew_count, Shape, SkewShape, Tableau};
