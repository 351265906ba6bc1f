//! Slopes of maps `U → W`: difference quotients, their extensions to
//! non-invertible parameters through cubic rings, and law checks.

pub mod full;
mod laws;
mod limit;
mod mapfn;
mod points;
mod slope;

pub use full::{FullParams, FullScalar, MAX_FULL_ORDER};
pub use laws::{check_additivity, check_chain_rule, check_schwarz};
pub use limit::{estimate_limit_slope, LimitRow, LimitTable};
pub use mapfn::{Body, MapFn};
pub use points::{extended_contains, sym_contains, HyperPoint, SymPoint};
pub use slope::{apply, lift_sym, slope1, slope2_full, slope2_sym, slope_n_full, slope_n_nested, slope_sym, tangent_map_t};

#[cfg(test)]
mod tests;
