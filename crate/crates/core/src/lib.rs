//! Exact computations for Chow rings and augmented Chow rings of uniform,
//! q-uniform and user-supplied matroids.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: big-integer polynomials in `q`, Laurent polynomials in `t`
//!   over `Z[q]`, q-integers and determinants over `Q(q)`.
//! * [`permstat`]: permutations, derangements, decorated and alternating
//!   permutations with their statistics and Eulerian polynomials.
//! * [`qsym`]: quasisymmetric functions in the fundamental basis.
//! * [`eulerian`]: Eulerian and binomial Eulerian quasisymmetric functions.
//! * [`chowfy`]: lattices of flats, Feichtner–Yuzvinsky bases, Hilbert and
//!   Frobenius series.
//! * [`rankselect`]: rank-selected subposets and character-level equivariant
//!   Charney–Davis checks.
//! * [`charney`]: the independent routes to Charney–Davis quantities of
//!   q-uniform matroids.
//! * [`verify`]: named identity suites used by the `mcq verify` command.

pub mod charney;
pub mod chowfy;
pub mod error;
pub mod eulerian;
pub mod exactalg;
pub mod guard;
pub mod permstat;
pub mod qsym;
pub mod rankselect;
pub mod render;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{LaurentQT, QFrac, QPoly};
pub use subset::Subset;

/// Which of the two rings attached to a matroid is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Chow,
    Augmented,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::Chow, Variant::Augmented];

    /// Degree of the (palindromic) Hilbert series of a rank-`r` matroid.
    pub fn top_degree(self, r: usize) -> usize {
        match self {
            Variant::Chow => r.saturating_sub(1),
            Variant::Augmented => r,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Chow => "chow",
            Variant::Augmented => "aug",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chow" => Ok(Variant::Chow),
            "aug" | "augmented" => Ok(Variant::Augmented),
            other => Err(Error::Argument(format!("unknown variant `{other}`"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
