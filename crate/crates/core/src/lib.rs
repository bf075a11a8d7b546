//! Exact big Witt vector arithmetic.
//!
//! - [`ring`]: exact coefficient rings ℤ, ℚ, ℤ/m and 𝔽_p.
//! - [`series`]: truncated unit power series and unit polynomials.
//! - [`witt`]: the big Witt ring `W_N(R)` with Frobenius, Verschiebung,
//!   coordinates and ghost components.
//! - [`rational`]: rational Witt vectors `W_0(R)` with exact operations.
//! - [`endo`]: matrix endomorphisms, characteristic series and K₀ classes.

pub mod endo;
pub mod error;
mod parse;
pub mod rational;
pub mod ring;
pub mod series;
pub mod witt;

pub use endo::{K0Class, MatrixEndo};
pub use error::{Error, Result};
pub use rational::RationalWitt;
pub use ring::{RingElement, RingSpec};
pub use series::{UnitPolynomial, UnitSeries};
pub use witt::{inverse_of_integer, WittCoordinates, WittVector};
