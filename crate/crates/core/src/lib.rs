pub mod cascade;
pub mod classify;
pub mod error;
pub mod golden;
pub mod lab;
pub mod nilradical;
pub mod oracle;
pub mod report;
pub mod rootsys;
pub mod stabiliser;

pub use error::{Error, Result};
