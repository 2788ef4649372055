//! File formats, dataset manifests, feature export and the command
//! implementations behind the `reachtop` binary.

pub mod commands;
pub mod error;
pub mod export;
pub mod formats;
pub mod manifest;
pub mod synth;

pub use error::CliError;
pub use formats::{load_adjacency, AdjacencyFormat};
