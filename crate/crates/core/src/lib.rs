pub mod algebra;
pub mod bounds;
pub mod brace;
pub mod catalog;
pub mod embedding;
pub mod error;
pub mod group;
pub mod json;
pub mod multibrace;
pub mod report;
pub mod rota_baxter;
pub mod worked;
pub mod ybe;

pub use bounds::Bounds;
pub use error::{Error, Result};
