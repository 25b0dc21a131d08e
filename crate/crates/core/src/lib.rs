//! Exact character tables of finite groups and exhaustive search for
//! Sylow-regular, Steinberg-like and p-vanishing characters.
//!
//! Character values are exact cyclotomic numbers ([`cyclo`]). Tables come from
//! the symmetric/alternating group constructions ([`symmchar`]), the generic
//! SL₂(q)/PSL₂(q) tables ([`psl2gen`]) or JSON files ([`ctable`]). Sylow orders
//! and minimal degrees of classical groups live in [`sylow`].

pub mod ctable;
pub mod cyclo;
pub mod error;
pub mod hookfam;
pub mod numth;
pub mod psl2gen;
pub mod search;
pub mod sylow;
pub mod symmchar;
pub mod weil;

pub use ctable::{CharacterTable, ClassInfo, ValidatedTable, VirtualCharacter};
pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
