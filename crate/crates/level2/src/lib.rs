//! Point counts and equivariant cohomology of moduli of plane quartics with level 2 structure.

pub mod brute;
pub mod closedform;
pub mod gf;
pub mod gysin;
pub mod poly;
pub mod projgeom;
pub mod reptheory;
pub mod sp6;
