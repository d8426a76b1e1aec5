//! Palindromic length and minimum palindromic factorization.
//!
//! [`pl_fast`] computes the palindromic length of every prefix in
//! `O(n log n)` time and `O(n)` space by keeping the starts of all
//! palindromic suffixes as a short list of arithmetic progressions
//! ([`GapList`]). [`FastState`] exposes the same algorithm online.
//! [`pl_quadratic`] and [`pl_oracle`] are slower references, and
//! [`factorize`] recovers an explicit factorization from either result.

pub mod bench;
pub mod error;
pub mod fast;
pub mod gaps;
pub mod generators;
pub mod naive;
pub mod reconstruct;
pub mod text;
pub mod update;

pub use error::{Error, Result};
pub use fast::{pl_fast, pl_fast_counted, FastRun, FastState, GplSlot};
pub use gaps::{decode_gap_list, validate_gap_list, GapList, GapTriple, Violation};
pub use generators::{bitcount, random_text, zimin_prefix};
pub use naive::{is_palindrome, pl_oracle, pl_quadratic, suffix_palindrome_starts, DEFAULT_ORACLE_CAP};
pub use reconstruct::{factorize, verify_factorization, Factorization, Part};
pub use text::{pl_values, PlRecord, Text};
