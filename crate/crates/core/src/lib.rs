//! Symbolic lattice arithmetic on wonderful compactifications.
//!
//! The crate models the curve/divisor intersection combinatorics of
//! wonderful compactifications of adjoint semisimple groups, and of
//! declaratively supplied wonderful symmetric varieties, entirely over
//! exact integer and rational arithmetic:
//!
//! * [`rootsys`] — root systems of types A–G with Cartan pairings and
//!   fundamental (co)weights;
//! * [`spherical`] — spherical data: group compactifications, datum
//!   files, and induced data of boundary orbit closures;
//! * [`lattice`] — ρ-values, boundary-divisor expansions, the
//!   intersection pairing, cone membership, closed-orbit pushforward
//!   and color pullback;
//! * [`reducibility`] — reducibility certificates for moduli of stable
//!   maps, the dimension-gap bound, and certificate search;
//! * [`limit`] — class-level limit maps and degeneration chains on
//!   group compactifications;
//! * [`oracle`] — hand-entered fixtures and independent recomputations
//!   backing the test suites.

pub mod error;
pub mod lattice;
pub mod limit;
pub mod oracle;
pub mod reducibility;
pub mod rootsys;
pub mod spherical;

pub use error::{Error, Result, Violation};
pub use lattice::{CurveClass, DivisorClass, Rat, SchubertClass};
pub use rootsys::{build_root_system, DynkinType, RootSystem, Series};
pub use spherical::{BasisElem, ColorType, DatumKind, SphericalDatum};
