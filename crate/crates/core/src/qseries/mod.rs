//! Exact truncated q-series and the generating functions built from them.

mod gf;
mod products;
mod series;

pub use gf::*;
pub use products::{
    inv_finite_pochhammer, inv_pochhammer_tail, partition_numbers, pentagonal_series, q_binomial, truncated_pentagonal,
};
pub use series::{Series, SeriesError};
