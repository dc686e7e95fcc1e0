// index loops mirror the matrix formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod fusion_ring;
pub mod premodular;
pub mod quotient;
pub mod report;
pub mod schema;
pub mod spin;
