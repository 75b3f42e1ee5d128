pub mod error;
pub mod exactalg;

pub use error::{Error, Result};
pub mod cli;
pub mod curves;
pub mod cyclestats;
pub mod degrees;
pub mod eisenstein;
pub mod lfunctions;
