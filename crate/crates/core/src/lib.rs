//! Exact enumeration of alternating words over the alphabet `{1, .., k}`.
//!
//! An up-down word satisfies `w1 < w2 > w3 < w4 > ...` and a down-up word the
//! mirror image. This crate counts and constructs such words — with or
//! without a forbidden length-3 permutation pattern — by several independent
//! routes that are cross-checked against each other:
//!
//! * [`words`] — the vocabulary: [`Word`], [`Direction`], [`Pattern3`],
//!   alternation tests, letterwise symmetries, linear-time pattern scans, a
//!   pruned lexicographic generator and the brute-force counting oracle.
//! * [`formulas`] — exact closed forms and recurrences: the alternating-word
//!   recurrence, the zigzag-ideal recurrence, Narayana-product formulas for
//!   pattern avoiders, generating-function coefficients and cross-identities.
//! * [`posets`] — the zigzag-times-chain poset, its order ideals as column
//!   height profiles, streaming enumeration and a transfer-matrix count.
//! * [`bijections`] — constructive maps: words <-> order ideals, the
//!   recursive 132 -> 123 bijection and its inverse, its odd-length
//!   extension, the 312 -> 123 composition and the 123 <-> 321 length shift.
//! * [`table`] — count grids rendered as CSV or JSON.
//! * [`poly`] — exact integer polynomials and truncated power series.
//!
//! All counts are arbitrary-precision ([`num_bigint::BigUint`]); closed-form
//! divisions are checked to be exact and abort loudly otherwise.

pub mod bijections;
pub mod fixtures;
pub mod formulas;
pub mod poly;
pub mod posets;
pub mod table;
pub mod words;

pub use poly::PolySeries;
pub use posets::{IdealProfile, ProfileError, ZigzagChainPoset};
pub use table::{compute_count, CountMethod, CountTable};
pub use words::{
    brute_count, contains_pattern_naive, generate, Direction, Pattern3, Word, WordError,
};

pub use bijections::BijectionError;
