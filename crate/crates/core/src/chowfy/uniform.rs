//! Hilbert series of q-uniform matroids and graded Frobenius series of
//! uniform matroids, both by summing over chain types.
//!
//! A chain of proper flats of `U_{r,n}` (or of subspaces of `F_q^n`) is
//! determined up to symmetry by its rank sequence `0 < d_1 < ... < d_l < r`.
//! The number of such chains is a (q-)multinomial coefficient and the
//! symmetric group acts on them by the permutation module `h_ν`.

use super::fy::max_exponent;
use crate::error::{Error, Result};
use crate::eulerian::{q_njk, qtilde_njk};
use crate::exactalg::{q_multinomial, LaurentQT};
use crate::guard::Guard;
use crate::qsym::{h_of_composition, QSymElem};
use crate::subset::Subset;
use crate::Variant;

fn step_weight(variant: Variant, first: bool, prev: usize, next: usize) -> LaurentQT {
    LaurentQT::t_range(1, max_exponent(variant, first, prev, next) as i32)
}

/// For each rank sequence of proper flats: the composition of `n` it cuts
/// out and the generating polynomial of its FY exponents, including the
/// optional top flat.
fn chain_types(r: usize, n: usize, variant: Variant) -> Vec<(Vec<usize>, LaurentQT)> {
    Subset::all_of(r - 1)
        .map(|dims| {
            let mut weight = LaurentQT::one();
            let mut prev = 0;
            for d in dims.iter() {
                weight = &weight * &step_weight(variant, prev == 0, prev, d);
                prev = d;
            }
            let to_top = step_weight(variant, prev == 0, prev, r);
            weight = &weight * &(LaurentQT::one() + to_top);
            (dims.composition(n), weight)
        })
        .collect()
}

fn check_rank(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::arg(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// Hilbert series of the (augmented) Chow ring of `U_{r,n}(q)` with `q`
/// symbolic, by counting flags of subspaces.
pub fn hilb_q_uniform(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check_rank(r, n)?;
    Guard::QUniform.check(n)?;
    Ok(chain_types(r, n, variant)
        .into_iter()
        .map(|(nu, w)| w.scale(&q_multinomial(&nu)))
        .sum())
}

/// Graded Frobenius series of the (augmented) Chow ring of `U_{r,n}` in the
/// fundamental basis.
pub fn grfrob_uniform(r: usize, n: usize, variant: Variant) -> Result<QSymElem> {
    check_rank(r, n)?;
    Guard::QFamily.check(n)?;
    let mut out = QSymElem::zero();
    for (nu, w) in chain_types(r, n, variant) {
        out += &h_of_composition(&nu)?.scale(&w);
    }
    Ok(out)
}

/// Frobenius characteristic of the span of degree-`j` FY monomials of the
/// Boolean matroid on `[n]` whose top flat misses exactly `k` elements.
///
/// Checked against the enumerated `Q_{n,j,k}` (Chow) or `Q̃_{n,j,k}`
/// (augmented).
pub fn grfrob_refined(n: usize, j: usize, k: usize, variant: Variant) -> Result<QSymElem> {
    if j > n + 1 || k > n {
        return Err(Error::arg(format!(
            "need j, k <= n, got n = {n}, j = {j}, k = {k}"
        )));
    }
    Guard::QFamily.check(n)?;
    let mut out = QSymElem::zero();
    if k == n {
        if j == 0 {
            out = h_of_composition(&[n])?;
        }
    } else {
        let top = n - k;
        // sizes strictly between 0 and the top flat
        for inner in Subset::all_of(top.saturating_sub(1)) {
            let mut weight = LaurentQT::one();
            let mut prev = 0;
            for s in inner.iter().chain(std::iter::once(top)) {
                weight = &weight * &step_weight(variant, prev == 0, prev, s);
                prev = s;
            }
            let c = weight.coeff(j as i32);
            if c.is_zero() {
                continue;
            }
            let mut nu = inner.composition(top);
            nu.push(k);
            out += &h_of_composition(&nu)?.scale(&LaurentQT::from_qpoly(c));
        }
    }
    let expect = match variant {
        Variant::Chow => q_njk(n, j, k)?,
        Variant::Augmented => qtilde_njk(n, j, k)?,
    };
    if out != expect {
        return Err(Error::identity(
            "refined FY orbit count",
            format!("n = {n}, j = {j}, k = {k}, {variant}: orbits give {out}, permutations give {expect}"),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chowfy::{hilb, MatroidFlats};
    use crate::eulerian::{q_eulerian, qtilde};
    use crate::qsym::h_complete;

    #[test]
    fn q_uniform_values() {
        assert_eq!(
            hilb_q_uniform(3, 3, Variant::Chow).unwrap().to_string(),
            "1+(2+q+q^2)t+t^2"
        );
        assert_eq!(
            hilb_q_uniform(2, 2, Variant::Chow).unwrap(),
            LaurentQT::from_t_dense(&[1, 1])
        );
        for n in 1..=6 {
            for r in 1..=n {
                let m = MatroidFlats::uniform(r, n).unwrap();
                for v in Variant::BOTH {
                    let q = hilb_q_uniform(r, n, v).unwrap().eval_q_one();
                    assert_eq!(q, hilb(&m, v).unwrap(), "U({r},{n}) {v}");
                }
            }
        }
    }

    #[test]
    fn frobenius_values() {
        assert_eq!(
            grfrob_uniform(3, 3, Variant::Chow).unwrap(),
            q_eulerian(3).unwrap()
        );
        assert_eq!(
            grfrob_uniform(2, 3, Variant::Chow).unwrap(),
            h_complete(3).scale(&LaurentQT::from_t_dense(&[1, 1]))
        );
        assert_eq!(
            grfrob_uniform(2, 2, Variant::Augmented).unwrap(),
            qtilde(2).unwrap()
        );
    }

    #[test]
    fn refined_orbits() {
        assert_eq!(
            grfrob_refined(3, 1, 1, Variant::Chow).unwrap(),
            q_njk(3, 1, 1).unwrap()
        );
        assert_eq!(
            grfrob_refined(4, 0, 4, Variant::Chow).unwrap(),
            h_complete(4)
        );
        assert_eq!(
            grfrob_refined(2, 1, 0, Variant::Augmented).unwrap(),
            h_complete(2)
        );
        for n in 0..=5 {
            for k in 0..=n {
                for j in 0..=n + 1 {
                    for v in Variant::BOTH {
                        grfrob_refined(n, j, k, v).unwrap();
                    }
                }
            }
        }
    }
}
