//! Closed-form expressions for Hilbert and Frobenius series of (q-)uniform
//! matroids, each built from Eulerian data rather than from chains of
//! flats. They are compared against [`super::hilb_q_uniform`] and
//! [`super::grfrob_uniform`].

use crate::error::Result;
use crate::eulerian::{q0, q_eulerian, qtilde};
use crate::exactalg::{q_binomial, LaurentQT, QPoly};
use crate::permstat::{
    eulerian_a_q, eulerian_binomial_q, eulerian_d_q, gen_decorated, gen_permutations,
};
use crate::qsym::{h_complete, QSymElem};

fn geometric(len: usize) -> LaurentQT {
    LaurentQT::t_range(0, len as i32 - 1)
}

/// `sum over σ in S_n with fix >= n-j of q^{maj-exc} t^{j-exc}`.
fn perm_correction_q(n: usize, j: usize) -> Result<LaurentQT> {
    let mut out = LaurentQT::zero();
    for p in gen_permutations(n)?.filter(|p| p.fix() + j >= n) {
        out.add_term(
            j as i32 - p.exc() as i32,
            &QPoly::q_pow((p.maj() - p.exc()) as u32),
        );
    }
    Ok(out)
}

/// The decorated analogue, filtering on `fix2 >= n-j`.
fn decorated_correction_q(n: usize, j: usize) -> Result<LaurentQT> {
    let mut out = LaurentQT::zero();
    for p in gen_decorated(n)?.filter(|p| p.fix2() + j >= n) {
        out.add_term(
            j as i32 - p.exc() as i32,
            &QPoly::q_pow((p.maj() - p.exc()) as u32),
        );
    }
    Ok(out)
}

/// `A_n(q,t) - sum_{j=r}^{n-1} sum_{fix >= n-j} q^{maj-exc} t^{j-exc}`.
pub fn hilb_chow_by_permutations(r: usize, n: usize) -> Result<LaurentQT> {
    let mut out = eulerian_a_q(n)?;
    for j in r..n {
        out -= &perm_correction_q(n, j)?;
    }
    Ok(out)
}

/// `sum_{j=0}^{r-1} [n choose j]_q d_j(q,t) (1 + t + ... + t^{r-j-1})`.
pub fn hilb_chow_by_derangements(r: usize, n: usize) -> Result<LaurentQT> {
    let mut out = LaurentQT::zero();
    for j in 0..r {
        out += &(&eulerian_d_q(j)? * &geometric(r - j)).scale(&q_binomial(n, j));
    }
    Ok(out)
}

/// `1 + t sum_{j=0}^{r-1} [n choose j]_q A_j(q,t) (1 + ... + t^{r-j-1})`.
pub fn hilb_aug_by_eulerian(r: usize, n: usize) -> Result<LaurentQT> {
    let mut tail = LaurentQT::zero();
    for j in 0..r {
        tail += &(&eulerian_a_q(j)? * &geometric(r - j)).scale(&q_binomial(n, j));
    }
    Ok(LaurentQT::one() + tail.shift_t(1))
}

/// `Ã_n(q,t) - sum_{j=r}^{n-1} sum_{fix2 >= n-j} q^{maj-exc} t^{j-exc}`.
pub fn hilb_aug_by_decorated(r: usize, n: usize) -> Result<LaurentQT> {
    let mut out = eulerian_binomial_q(n)?;
    for j in r..n {
        out -= &decorated_correction_q(n, j)?;
    }
    Ok(out)
}

/// Difference of consecutive-rank Chow Hilbert series of q-uniform
/// matroids: `sum_{i=0}^r [n choose i]_q d_i t^{r-i}` and the permutation sum.
pub fn hilb_chow_difference(n: usize, r: usize) -> Result<(LaurentQT, LaurentQT)> {
    let mut by_d = LaurentQT::zero();
    for i in 0..=r {
        by_d += &eulerian_d_q(i)?
            .scale(&q_binomial(n, i))
            .shift_t((r - i) as i32);
    }
    Ok((by_d, perm_correction_q(n, r)?))
}

/// Augmented analogue: `sum_{i=0}^r [n choose i]_q A_i t^{r+1-i}` and the
/// decorated permutation sum.
pub fn hilb_aug_difference(n: usize, r: usize) -> Result<(LaurentQT, LaurentQT)> {
    let mut by_a = LaurentQT::zero();
    for i in 0..=r {
        by_a += &eulerian_a_q(i)?
            .scale(&q_binomial(n, i))
            .shift_t((r + 1 - i) as i32);
    }
    Ok((by_a, decorated_correction_q(n, r)?))
}

fn perm_correction_f(n: usize, j: usize) -> Result<QSymElem> {
    let mut out = QSymElem::zero();
    for p in gen_permutations(n)?.filter(|p| p.fix() + j >= n) {
        out.add_term(n, p.dex(), &LaurentQT::t_pow(j as i32 - p.exc() as i32));
    }
    Ok(out)
}

fn decorated_correction_f(n: usize, j: usize) -> Result<QSymElem> {
    let mut out = QSymElem::zero();
    for p in gen_decorated(n)?.filter(|p| p.fix2() + j >= n) {
        out.add_term(n, p.dex(), &LaurentQT::t_pow(j as i32 - p.exc() as i32));
    }
    Ok(out)
}

/// `sum_{j=0}^{r-1} h_{n-j} Q^0_j (1 + ... + t^{r-j-1})`.
pub fn frob_chow_by_h(r: usize, n: usize) -> Result<QSymElem> {
    let mut out = QSymElem::zero();
    for j in 0..r {
        out += &h_complete(n - j)
            .multiply(&q0(j)?)?
            .scale(&geometric(r - j));
    }
    Ok(out)
}

/// `Q_n - sum_{j=r}^{n-1} sum_{fix >= n-j} F_{DEX} t^{j-exc}`.
pub fn frob_chow_by_permutations(r: usize, n: usize) -> Result<QSymElem> {
    let mut out = q_eulerian(n)?;
    for j in r..n {
        out -= &perm_correction_f(n, j)?;
    }
    Ok(out)
}

/// `h_n + t sum_{j=0}^{r-1} h_{n-j} Q_j (1 + ... + t^{r-j-1})`.
pub fn frob_aug_by_h(r: usize, n: usize) -> Result<QSymElem> {
    let mut tail = QSymElem::zero();
    for j in 0..r {
        tail += &h_complete(n - j)
            .multiply(&q_eulerian(j)?)?
            .scale(&geometric(r - j));
    }
    Ok(h_complete(n) + tail.shift_t(1))
}

/// `Q̃_n - sum_{j=r}^{n-1} sum_{fix2 >= n-j} F_{DEX} t^{j-exc}`.
pub fn frob_aug_by_decorated(r: usize, n: usize) -> Result<QSymElem> {
    let mut out = qtilde(n)?;
    for j in r..n {
        out -= &decorated_correction_f(n, j)?;
    }
    Ok(out)
}

/// The recurrence `Q_n = h_n + t sum_{j=0}^{n-2} h_{n-j} Q_j (1 + ... + t^{n-j-2})`.
pub fn q_by_recurrence(n: usize) -> Result<QSymElem> {
    if n == 0 {
        return Ok(QSymElem::one());
    }
    let mut tail = QSymElem::zero();
    for j in 0..n.saturating_sub(1) {
        tail += &h_complete(n - j)
            .multiply(&q_eulerian(j)?)?
            .scale(&geometric(n - j - 1));
    }
    Ok(h_complete(n) + tail.shift_t(1))
}
