pub mod catalan;
pub mod coxeter;
pub mod deodhar;
pub mod error;
pub mod flagoracle;
pub mod hecke;
pub mod noncrossing;
pub mod homfly;
pub mod par;
pub mod poly;
pub mod symfunc;

pub use error::{Error, Result};
