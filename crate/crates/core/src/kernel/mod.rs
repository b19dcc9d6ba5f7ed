pub mod category;
pub mod iso;
pub mod label;
pub mod map;
pub mod ops;
pub mod search;
pub mod sset;
pub mod standard;
pub mod subcomplex;
pub mod validate;
