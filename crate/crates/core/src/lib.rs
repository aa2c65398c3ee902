//! Exact and asymptotic enumeration of interval orders.

pub mod asymptotics;
pub mod counts;
pub mod distributions;
pub mod oracle;
pub mod real;
pub mod report;
pub mod series;
pub mod tolerances;
