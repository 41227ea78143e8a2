//! Command-line front end for `kgscatter-core`: single-point reports,
//! energy sweeps, oracle verification and wavefunction dumps, all written
//! as flat CSV/text.

pub mod error;
pub mod format;
pub mod report;
pub mod sweep;
pub mod verify;
pub mod wave;

pub use error::CliError;

/// Default potential: `a = 5`, `b = 2`, `m = 1`.
pub const DEFAULT_A: f64 = 5.0;
pub const DEFAULT_B: f64 = 2.0;
pub const DEFAULT_M: f64 = 1.0;
