//! Errors shared across the core crate.
use alloc::string::String;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    Config(String),
}

pub type Result<T> = core::result::Result<T, Error>;
