pub mod diffop;
pub mod harness;
pub mod phi;
pub mod quiver;
pub mod ring;
pub mod shuffle;
