//! Finite categories, simplicial categories and the cosimplicial gadgets
//! built from them.

mod cosimplicial;
mod finite;
mod simplicial;

pub use cosimplicial::{
    bar_map, bar_vertex, comparison_functor, comparison_vertex, frak_c_map, frak_c_vertex, mask_of, subset_of, tuple_leq,
    ChiComposite, CubeFunctor,
};
pub use finite::{nerve_cat, nerve_cat_labeled, FiniteCategory};
pub use simplicial::{
    frak_b, frak_c, interval_power_cat, RelativeSimplicialCategory, SimplicialCategory, SimplicialFunctor,
};
