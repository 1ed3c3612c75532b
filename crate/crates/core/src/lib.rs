pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod errata;
pub mod error;
pub mod exactnum;
pub mod oscillator;
pub mod phasespace;
pub mod realizations;
