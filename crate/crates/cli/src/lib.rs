//! File formats and command implementations behind the `hardy` binary.
//!
//! State files are UTF-8 JSON with complex numbers written as `[re, im]`
//! pairs:
//!
//! ```json
//! { "kind": "pure", "dims": [2, 2],
//!   "amplitudes": [[0.447, 0.0], [0.0, 0.0], [0.0, 0.0], [0.894, 0.0]] }
//! ```
//!
//! Mixed states use `"kind": "mixed"` and a row-major `"matrix"` of rows of
//! `[re, im]` pairs instead of `"amplitudes"`.

pub mod commands;
pub mod error;
pub mod generate;
pub mod report;
pub mod statefile;

pub use error::CliError;
