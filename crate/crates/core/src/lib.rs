#![allow(clippy::manual_is_multiple_of)]

pub mod arith;
pub mod cli;
pub mod cyclic_orbits;
pub mod equivalence;
pub mod multiset;
pub mod numfield;
pub mod permgroup;
pub mod statistics;
