//! Function theory on the unit circle: grids, Fourier data, Riesz
//! projections, the outer function `T_e` and the Blaschke product `B`.

mod blaschke;
pub mod expr;
mod fourier;
mod grid;
mod masses;
mod outer;
mod riesz;
mod symbol;
mod szego;

pub use blaschke::{blaschke_derivative, blaschke_value, build_blaschke, BlaschkeData};
pub use fourier::FourierCoeffs;
pub use grid::CircleGrid;
pub use masses::MassSet;
pub use outer::{build_outer, OuterData};
pub use riesz::{riesz_project, riesz_project_values, Projection};
pub use symbol::SymbolData;
pub use szego::{validate_szego, SzegoReport};
