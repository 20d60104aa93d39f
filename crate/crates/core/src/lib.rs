pub mod algebra;
pub mod cli;
pub mod engine;
pub mod frontend;
pub mod logic;
pub mod oracle;
