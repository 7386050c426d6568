pub mod aggregation;
pub mod encoders;
pub mod logic;
pub mod safety;
