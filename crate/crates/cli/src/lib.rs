//! Report schemas shared between the `srg` binary and its integration
//! tests.

pub mod report;
