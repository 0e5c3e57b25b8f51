//! Exact combinatorics of plane curve cusps.
//!
//! - [`chain`]: weighted linear chains, discriminants, inductance, adjoints
//!   and the `*`-product.
//! - [`graph`]: weighted dual graphs with blow-ups and blow-downs, and a
//!   contraction simulator.
//! - [`cusp`]: characteristic sequences, multiplicity sequences, Puiseux
//!   pairs and resolution graphs of cusps.
//! - [`classify`]: numerical data of rational bicuspidal curves with
//!   `(C')^2 = -1`.
//! - [`cli`]: the `cuspcalc` command line.
//!
//! ```
//! use cuspcalc::cusp::{mult_from_char, resolution_graph};
//! use cuspcalc::{adjoint, CharacteristicSequence, LinearChain};
//!
//! let a: LinearChain = "[3]".parse()?;
//! assert_eq!(adjoint(&a)?.to_string(), "[2,2]");
//!
//! let ch: CharacteristicSequence = "(4;6,7)".parse()?;
//! assert_eq!(mult_from_char(&ch).to_string(), "(4,2,2)");
//! assert_eq!(resolution_graph(&ch)?.vertex_count(), 5);
//! # Ok::<(), cuspcalc::Error>(())
//! ```

pub mod chain;
pub mod classify;
pub mod cli;
pub mod cusp;
pub mod error;
pub mod graph;

pub use chain::{adjoint, discriminant, inductance, star, tw, Fraction, LinearChain};
pub use classify::{FamilyParams, NumericalData};
pub use cusp::{CharacteristicSequence, CuspResolutionGraph, MultiplicitySequence, PuiseuxPairs};
pub use error::{Error, Result};
pub use graph::{ContractionTrace, DualGraph, StepKind, VertexId};
