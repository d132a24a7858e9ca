//! Fixed-weight m-ary Gray codes and s-overlap cycles.
//!
//! * [`fwm`]: a reflected Gray code for the words of length `n` over
//!   `{0, …, m-1}` with digit sum `k`, in which consecutive words differ in
//!   exactly two positions, plus its closed-form endpoints and a verifier.
//! * [`ocycle`] and [`digraph`]: cyclic orderings of fixed-weight and
//!   weight-range word sets where each word's last `s` digits start the next
//!   word, built as Euler tours of the transition digraph.
//! * [`enumerate`], [`blocks`], [`word`]: words, exact counting and
//!   enumeration, and the block-weight invariant that separates components
//!   of the transition digraph.

pub mod blocks;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod fwm;
pub mod ocycle;
pub mod word;

pub use blocks::{block_profile, is_cyclic_rotation, witness_non_rotation, BlockProfile};
pub use digraph::{build_transition_digraph, export_dot, TransitionDigraph};
pub use enumerate::{
    count, count_fixed_weight, enumerate, enumerate_fixed_weight, enumerate_weight_range,
    DEFAULT_MATERIALIZATION_CAP,
};
pub use error::{Error, EulerFailure, Result};
pub use fwm::{
    first_word, fwm_list, fwm_stream, last_word, verify_gray, FwmStream, GrayList, GrayReport,
    GrayViolation,
};
pub use ocycle::{
    compress_cycle, construct_ocycle, decompress_cycle, exists_fixed_weight_ocycle,
    exists_weight_range_ocycle, fixed_weight_ocycle, verify_ocycle, verify_ocycle_self,
    weight_range_ocycle, ExistenceVerdict, OcycleReport, OcycleSolution, OcycleViolation,
    VerdictReason,
};
pub use word::{weight, GenParams, WeightDecomposition, WeightSpec, Word};
