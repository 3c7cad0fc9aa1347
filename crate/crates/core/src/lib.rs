pub mod cli;
pub mod error;
pub mod fq;
pub mod loop_group;
pub mod networks;
pub mod partitions;
pub mod phi;
pub mod poly;
pub mod ring;
pub mod shapemod;
pub mod tableaux;
pub mod toeplitz;
pub mod verify;

pub use error::{Error, Result};
