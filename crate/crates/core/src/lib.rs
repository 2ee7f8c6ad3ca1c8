//! Minimal-interval semantics.
//!
//! Finite antichains of integer intervals, ordered by "every interval of the
//! first contains some interval of the second", form a distributive lattice.
//! This crate implements that lattice and its derived operators in closed
//! form (mostly as linear merges over normal forms), the normal forms and
//! rank function of the finite lattices `𝓔ₙ`, their enumeration, a
//! brute-force oracle used to check all of the above, and a small positional
//! search engine whose query operators are the lattice operators.
//!
//! ```
//! use mininterval::{join, meet, Antichain};
//!
//! let pease: Antichain = "{[0],[3]}".parse().unwrap();
//! let hot: Antichain = "{[2]}".parse().unwrap();
//! assert_eq!(meet(&pease, &hot).to_string(), "{[0..2], [2..3]}");
//! assert_eq!(join(&pease, &hot).to_string(), "{[0..0], [2..2], [3..3]}");
//! ```

pub mod antichain;
pub mod enumeration;
pub mod error;
pub mod general;
pub mod interval;
pub mod ir;
pub mod normal_form;
pub mod ops;
pub mod oracle;
pub mod rank;
pub mod residual;
pub mod verify;

pub use antichain::{normalize, Antichain};
pub use enumeration::{cardinality, enumerate_all, level_profile, width, Enumerator, LevelProfile};
pub use error::{LatticeError, Result};
pub use general::{materialize, GeneralAntichain};
pub use interval::{ExtendedInterval, Interval, Universe};
pub use normal_form::{critical_intervals, ep, meet_of_irreducibles, tilde, CritSet};
pub use ops::{
    block, filter_containment, intersect, join, leq, meet, ordered_meet, pseudo_difference, strict_containment,
    sym_difference, ContainmentMode, StrictMode,
};
pub use rank::{height, rank};
pub use residual::relative_pseudo_complement;
