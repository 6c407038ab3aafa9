pub mod pi0;
pub mod smith;
pub use pi0::{component_labels, pi0, UnionFind};
pub mod homology;
pub use homology::{homology, induced_chain_iso, ChainMapReport, Coefficients, HomologyGroup, HomologyReport};
pub mod horn;
pub use horn::{horn_check, horn_check_all, horn_check_homs};
pub mod segal;
pub use segal::{column_check, segal_check_on, segal_column_check};
pub mod fiber;
pub use fiber::fiber_check;
pub mod uniqueness;
pub use uniqueness::{uniqueness_search, Elimination, UniquenessReport};
pub mod consistency;
pub use consistency::{consistency_check, discrete_collapse_check};
