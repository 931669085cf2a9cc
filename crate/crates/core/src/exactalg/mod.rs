//! Exact arithmetic: integer polynomials in `q`, Laurent polynomials in `t`
//! over `Z[q]`, q-integers and determinants over `Q(q)`.

mod det;
mod laurent;
mod qfrac;
mod qnumbers;
pub(crate) mod qpoly;

pub use det::det_qfrac;
pub use laurent::LaurentQT;
pub use qfrac::QFrac;
pub use qnumbers::{q_binomial, q_factorial, q_int, q_multinomial};
pub use qpoly::QPoly;
