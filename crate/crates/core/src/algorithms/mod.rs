//! Exact graph algorithms: clique counts, longest cycles and paths,
//! disintegration cores, and k-closure.

mod cliques;
mod closure;
mod disintegration;
mod lemma;
mod search;

pub use cliques::{clique_vector, count_cliques, CliqueVector};
pub use closure::{closure, closure_with_budget, is_k_closed};
pub use disintegration::{core, core_in_order, CoreResult};
pub use lemma::{kopylov_lemma_check, kopylov_lemma_check_with, path_degree, random_maximal_path, PathWitness};
pub use search::{
    circumference, circumference_with_budget, has_cycle_at_least, has_path_on, longest_path_between,
    longest_path_vertices,
};
