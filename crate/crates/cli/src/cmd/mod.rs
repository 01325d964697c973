pub mod analyze;
pub mod bounds;
pub mod convert;
pub mod generate;
pub mod verify;
