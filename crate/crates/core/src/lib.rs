pub mod budget;
pub mod coalg;
pub mod error;
pub mod exactlin;
pub mod finset;
pub mod oracle;
pub mod polycoalg;
pub mod report;
pub mod set_comodule;
pub mod set_contramodule;
pub mod set_correspondence;

pub use budget::Budget;
pub use error::{Error, Result};
pub use report::Report;
