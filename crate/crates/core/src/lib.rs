//! Exact Alexander polynomials of 2-bridge knots and related families, and
//! classification of their zero sets.

pub mod cli;
pub mod error;
pub mod families;
pub mod interlace;
pub mod linalg;
pub mod moebius;
pub mod multivar;
pub mod polyring;
pub mod reppoly;
pub mod seifert;
pub mod stability;

pub use error::{Error, Result};
