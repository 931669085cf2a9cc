use super::gen::{gen_decorated, gen_derangements, gen_permutations};
use super::stats::Permutation;
use crate::error::{Error, Result};
use crate::exactalg::{q_binomial, LaurentQT, QPoly};

fn q_weight(maj_minus_exc: i64, t_exp: i64) -> (u32, i32) {
    (maj_minus_exc as u32, t_exp as i32)
}

fn sum_over_perms(perms: impl Iterator<Item = Permutation>) -> LaurentQT {
    let mut out = LaurentQT::zero();
    for p in perms {
        let (qe, te) = q_weight(p.maj() as i64 - p.exc() as i64, p.exc() as i64);
        out.add_term(te, &QPoly::q_pow(qe));
    }
    out
}

/// `A_n(q,t)`: `q^(maj-exc) t^exc` summed over all permutations of `[n]`.
pub fn eulerian_a_q(n: usize) -> Result<LaurentQT> {
    Ok(sum_over_perms(gen_permutations(n)?))
}

/// `d_n(q,t)`: the same sum over derangements.
pub fn eulerian_d_q(n: usize) -> Result<LaurentQT> {
    Ok(sum_over_perms(gen_derangements(n)?))
}

/// `1 + t * sum_k [n choose k]_q A_k(q,t)`.
pub fn eulerian_binomial_q_from_a(n: usize) -> Result<LaurentQT> {
    let mut tail = LaurentQT::zero();
    for k in 1..=n {
        tail += &eulerian_a_q(k)?.scale(&q_binomial(n, k));
    }
    Ok(LaurentQT::one() + tail.shift_t(1))
}

/// `q^(maj-exc) t^(exc+1)` summed over decorated permutations of `[n]`.
pub fn eulerian_binomial_q_from_decorated(n: usize) -> Result<LaurentQT> {
    let mut out = LaurentQT::zero();
    for p in gen_decorated(n)? {
        let (qe, te) = q_weight(p.maj() - p.exc(), p.exc() + 1);
        out.add_term(te, &QPoly::q_pow(qe));
    }
    Ok(out)
}

/// `Ã_n(q,t)`, computed both ways; the routes must agree.
pub fn eulerian_binomial_q(n: usize) -> Result<LaurentQT> {
    let from_a = eulerian_binomial_q_from_a(n)?;
    let from_dec = eulerian_binomial_q_from_decorated(n)?;
    if from_a != from_dec {
        return Err(Error::identity(
            "binomial Eulerian routes",
            format!("n = {n}: via A_k gives {from_a}, via decorated permutations gives {from_dec}"),
        ));
    }
    Ok(from_a)
}

pub fn eulerian_a(n: usize) -> Result<LaurentQT> {
    Ok(eulerian_a_q(n)?.eval_q_one())
}

pub fn eulerian_d(n: usize) -> Result<LaurentQT> {
    Ok(eulerian_d_q(n)?.eval_q_one())
}

pub fn eulerian_binomial(n: usize) -> Result<LaurentQT> {
    Ok(eulerian_binomial_q(n)?.eval_q_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(eulerian_a_q(3).unwrap().to_string(), "1+(2+q+q^2)t+t^2");
        assert_eq!(eulerian_d_q(3).unwrap().to_string(), "t+t^2");
        assert_eq!(eulerian_binomial_q(2).unwrap().to_string(), "1+(2+q)t+t^2");
        assert_eq!(eulerian_a(0).unwrap(), LaurentQT::one());
        assert_eq!(eulerian_d(0).unwrap(), LaurentQT::one());
        assert!(eulerian_d(1).unwrap().is_zero());
        assert_eq!(
            eulerian_a(4).unwrap(),
            LaurentQT::from_t_dense(&[1, 11, 11, 1])
        );
        assert_eq!(eulerian_binomial(0).unwrap(), LaurentQT::one());
    }

    #[test]
    fn binomial_routes_agree() {
        for n in 0..=6 {
            eulerian_binomial_q(n).unwrap();
        }
    }

    #[test]
    fn palindromic_at_q_one() {
        for n in 1..=8 {
            assert!(eulerian_a(n).unwrap().is_palindromic(n as i32 - 1), "A_{n}");
            let d = eulerian_d(n).unwrap();
            // t^{-1} d_n is palindromic of degree n-2, so d_n is symmetric about n/2
            assert_eq!(d.reflect(n as i32), d, "d_{n}");
        }
        for n in 1..=6 {
            assert!(
                eulerian_binomial(n).unwrap().is_palindromic(n as i32),
                "binomial {n}"
            );
        }
    }
}
