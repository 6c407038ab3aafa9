//! Nerve-type constructions: the binerve, the homotopy coherent nerve, the
//! classifying space, the classification diagram, the comparison map and θ.

mod binerve;
mod cls;
mod coherent;
mod comparison;
mod cube;
mod theta;

pub use binerve::{binerve, binerve_marked, classifying_space, Binerve, Chain};
pub use cls::{cls_diagram, codegeneracy, coface, map_chain, ClsDiagram, Grid, GridChain};
pub use coherent::{hc_nerve, pair_index, pairs, CoherentNerve, HcSimplex};
pub use comparison::{comparison_map, comparison_simplex, ComparisonMap};
pub use cube::{cube_chain_count, MAX_GAP};
pub use theta::{theta_images, theta_into_cls, theta_value, verify_theta};
