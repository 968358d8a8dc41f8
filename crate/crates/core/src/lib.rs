//! Exact computations of extended quotients, Springer data and L-packet
//! partitions for split reductive groups of small rank.

pub mod cyclotomic;
pub mod lattice;
pub mod rootdata;
pub mod torus;
pub mod extquot;
pub mod bernstein;
pub mod unipotent;
pub mod parameters;
pub mod lpackets;
