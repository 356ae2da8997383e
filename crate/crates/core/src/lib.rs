pub mod actions;
pub mod algebra;
pub mod error;
pub mod semidirect;
pub mod words;
pub mod free_restriction;
pub mod terms;
pub mod sample;
pub mod chains;
pub mod cover;
pub mod partial;
pub mod verify;
pub mod cli;
