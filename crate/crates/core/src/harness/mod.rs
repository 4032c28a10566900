//! Test support: exact oracles, instance generators, rendering and timing.

pub mod bench;
pub mod gadgets;
pub mod generators;
pub mod oracle;
pub mod svg;

pub use gadgets::{gen_vc_disks, gen_vc_segments, DiskGadget, GadgetParams};
pub use generators::{random_balls, random_disks, random_intervals, random_unit_disks};
pub use oracle::brute_force_opt;
