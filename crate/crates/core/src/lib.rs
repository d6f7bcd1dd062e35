pub mod classify;
pub mod cli;
pub mod groebner;
pub mod pencil;
pub mod polycore;
pub mod radgen;
