//! Generalized minors on type B double Bruhat cells.

pub mod laurent;
pub mod rootdata;
pub mod repb;
pub mod pathsum;
pub mod closedform;
pub mod factorize;
pub mod cluster;
pub mod cli;
