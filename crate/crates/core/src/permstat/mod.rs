//! Permutations, derangements, decorated and alternating permutations,
//! their statistics, and the Eulerian polynomial families built from them.

mod gen;
mod polys;
mod stats;

pub use gen::{
    gen_alternating, gen_decorated, gen_derangements, gen_permutations, gen_reverse_alternating,
    gen_updown,
};
pub use polys::{
    eulerian_a, eulerian_a_q, eulerian_binomial, eulerian_binomial_q, eulerian_binomial_q_from_a,
    eulerian_binomial_q_from_decorated, eulerian_d, eulerian_d_q,
};
pub use stats::{DecoratedPermutation, PermStats, Permutation};
