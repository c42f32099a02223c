pub mod algebra;
pub mod bounds;
pub mod chains;
pub mod cli;
pub mod codes;
pub mod distance;
pub mod matrix;
