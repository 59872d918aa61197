//! Partitions with fixed points in their sequence of first-column hook
//! lengths.
//!
//! The crate has four layers that are meant to check one another:
//!
//! * [`partition`]: partitions, hook lengths, fixed hooks, mex;
//! * [`qseries`]: exact truncated q-series and the generating functions;
//! * [`bijections`]: the slide-insertion map, the fixed-hook bijection and the
//!   mex bijection, each with its inverse;
//! * [`oracle`]: brute-force counts that never touch `qseries`.
//!
//! [`verify`] ties them together into per-identity verification reports.

pub mod bijections;
pub mod oracle;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use partition::{generate_partitions, FixedHookReport, Partition, PartitionError};
pub use qseries::{Series, SeriesError};
