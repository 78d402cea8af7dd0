//! First homology of cyclic branched covers of 2-bridge knots of genus one
//! and two, computed from the Alexander polynomial by closed formulas and
//! checked against Smith normal forms of two independent presentations.
//!
//! ```
//! use knotcover::{homology, AbelianGroup, AlexanderPoly};
//!
//! // 6_2: A(z) = -1 + 3z - 3z^2 + 3z^3 - z^4
//! let knot = AlexanderPoly::genus2(-1, 2).unwrap();
//! let (group, _certificate) = homology(&knot, 5).unwrap();
//! assert_eq!(group, AbelianGroup::from_i64s(&[2, 2, 2, 2]));
//! ```

pub mod error;
pub mod group;
pub mod homology;
pub mod knotmodel;
pub mod oracle;
pub mod sequences;
pub mod sweep;
pub mod zmat;

pub use error::{Error, Result};
pub use group::AbelianGroup;
pub use homology::{homology, Branch, HomologyCertificate};
pub use knotmodel::{AlexanderPoly, Genus, KnotRecord};
pub use oracle::{cross_check, CrossCheckReport};
pub use sweep::Execution;
pub use zmat::{IntMatrix, SnfResult};
