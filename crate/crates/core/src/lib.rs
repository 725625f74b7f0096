//! Finite right near-rings stored as Cayley tables.
//!
//! The crate validates and builds near-rings ([`nearring`], [`construct`],
//! [`builtin`]), reads and writes them as JSON ([`table_format`]), works with
//! modules over them ([`modules`]), classifies their elements
//! ([`classify`]) and checks known results about them on concrete
//! instances ([`theorems`]).
//!
//! ```
//! use nearring_core::builtin::builtin;
//! use nearring_core::classify::Analysis;
//!
//! let n = builtin("klein4_ring").unwrap();
//! let an = Analysis::new(&n, true).unwrap();
//! let a = n.element("a").unwrap();
//! assert_eq!(an.morphic(a).unwrap().witness(), n.element("c"));
//! ```

pub mod builtin;
pub mod classify;
pub mod construct;
pub mod error;
pub mod group;
pub mod modules;
pub mod nearring;
pub mod subset;
pub mod table;
pub mod table_format;
pub mod theorems;

pub use error::{Error, Result};
pub use group::{validate_group, FiniteGroup};
pub use modules::NModule;
pub use nearring::{validate_nearring, AxiomViolation, Flag, Flags, Law, NearRing};
pub use subset::Subset;
pub use table::Table;
