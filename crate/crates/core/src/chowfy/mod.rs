//! Matroids as lattices of flats, Feichtner–Yuzvinsky bases, Hilbert series
//! and graded Frobenius series.

mod fy;
pub mod identities;
mod matroid;
mod uniform;

pub use fy::{cd, cd_of_hilbert, for_each_fy, fy_basis, hilb, FYMonomial};
pub use matroid::{Flat, FlatMask, MatroidError, MatroidFlats, MAX_GROUND};
pub use uniform::{grfrob_refined, grfrob_uniform, hilb_q_uniform};
