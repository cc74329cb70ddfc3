//! One module per subcommand.

pub mod compare;
pub mod evaluate;
pub mod extract;
pub mod predict;
pub mod segment;
pub mod train;
