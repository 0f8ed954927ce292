pub mod bounds;
pub mod cyclotomic;
pub mod lefschetz;
pub mod local;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod spectrum;
pub mod weights;
