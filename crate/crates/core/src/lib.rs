pub mod cli;
pub mod error;
pub mod matq;
pub mod ncpoly;
pub mod osc;
pub mod qgroup;
pub mod report;
pub mod rmat;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
