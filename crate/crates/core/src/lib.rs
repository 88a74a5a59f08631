//! Decision engine for nonvanishing of category 𝒪 of Cherednik algebras
//! attached to orbifold curves.
//!
//! The engine works with exact cyclotomic arithmetic throughout and answers
//! with a three-valued [`Decision`]: `Yes` with a replayable certificate, a
//! total `No`, or `UnknownUpTo` an explicit search bound.

pub mod exactnum;
pub mod linalg;
pub mod error;
pub mod orbifold;

pub use error::{EngineError, Result};
pub mod decision;
pub mod point_support;
pub mod star_roots;

pub use decision::Decision;
pub mod certificate;
pub mod deligne_simpson;
pub mod genus;

pub use certificate::Certificate;
pub mod numeric;
pub mod gdaha;
pub mod input;
pub mod cli;
