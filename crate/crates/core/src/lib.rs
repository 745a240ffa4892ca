pub mod bounds;
pub mod groebner;
pub mod gs;
pub mod instance;
pub mod math;
pub mod matrix;
pub mod poly;
pub mod resolutions;
