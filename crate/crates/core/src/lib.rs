pub mod cli;
pub mod compositions;
pub mod lift;
pub mod monoids;
pub mod oracle;
pub mod orders;
pub mod par;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod scalar;
pub mod universe;
