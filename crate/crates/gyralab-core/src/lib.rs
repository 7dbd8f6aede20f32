//! Exact-arithmetic laboratory for the dense O(1) loop model and fully-packed
//! loops on dihedral domains: link-pattern spaces, Temperley-Lieb operators,
//! scattering-equation ground states as integer polynomial vectors in t,
//! exhaustive FPL enumeration, Wieland gyration, and the K-factor formulas
//! relating the two sides.

pub mod correspondence;
pub mod domains;
pub mod exactmath;
pub mod fplenum;
pub mod gyration;
pub mod linkpat;
pub mod report;
pub mod tlops;
