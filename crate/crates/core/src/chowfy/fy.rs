use std::fmt;

use rayon::prelude::*;

use super::matroid::{Flat, FlatMask, MatroidFlats};
use crate::error::Result;
use crate::exactalg::LaurentQT;
use crate::guard::Guard;
use crate::Variant;

/// A chain of nonempty flats with one exponent per flat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FYMonomial {
    pub chain: Vec<FlatMask>,
    pub exponents: Vec<usize>,
}

impl FYMonomial {
    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// The largest flat of the chain, or the empty flat for the unit.
    pub fn top(&self) -> FlatMask {
        self.chain.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for FYMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return f.write_str("1");
        }
        for (i, (&flat, &a)) in self.chain.iter().zip(&self.exponents).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x_{}", Flat(flat))?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// Largest admissible exponent on a flat of rank `rank_next` placed right
/// after a flat of rank `rank_prev` (`first` when it is the first flat).
pub(crate) fn max_exponent(
    variant: Variant,
    first: bool,
    rank_prev: usize,
    rank_next: usize,
) -> usize {
    match variant {
        Variant::Augmented if first => rank_next,
        _ => (rank_next - rank_prev).saturating_sub(1),
    }
}

fn walk(
    m: &MatroidFlats,
    variant: Variant,
    mono: &mut FYMonomial,
    rank: usize,
    visit: &mut dyn FnMut(&FYMonomial),
) {
    visit(mono);
    let first = mono.chain.is_empty();
    for (g, rg) in m.flats_above(mono.top()) {
        for a in 1..=max_exponent(variant, first, rank, rg) {
            mono.chain.push(g);
            mono.exponents.push(a);
            walk(m, variant, mono, rg, visit);
            mono.chain.pop();
            mono.exponents.pop();
        }
    }
}

/// Visit every FY monomial, the unit first, in depth-first order.
pub fn for_each_fy(
    m: &MatroidFlats,
    variant: Variant,
    mut visit: impl FnMut(&FYMonomial),
) -> Result<()> {
    Guard::Flats.check(m.num_flats())?;
    let mut mono = FYMonomial {
        chain: vec![],
        exponents: vec![],
    };
    walk(m, variant, &mut mono, 0, &mut visit);
    Ok(())
}

/// All FY monomials, sorted by degree (stable within a degree).
pub fn fy_basis(m: &MatroidFlats, variant: Variant) -> Result<Vec<FYMonomial>> {
    let mut out = Vec::new();
    for_each_fy(m, variant, |x| out.push(x.clone()))?;
    out.sort_by_key(FYMonomial::degree);
    Ok(out)
}

/// Hilbert series: FY monomials counted by degree.
pub fn hilb(m: &MatroidFlats, variant: Variant) -> Result<LaurentQT> {
    Guard::Flats.check(m.num_flats())?;
    // the subtrees below each first step are independent
    let firsts: Vec<(FlatMask, usize, usize)> = m
        .flats_above(0)
        .flat_map(|(g, rg)| (1..=max_exponent(variant, true, 0, rg)).map(move |a| (g, rg, a)))
        .collect();
    let counts: Vec<Vec<u64>> = firsts
        .par_iter()
        .map(|&(g, rg, a)| {
            let mut counts = vec![0u64; m.rank() + 2];
            let mut mono = FYMonomial {
                chain: vec![g],
                exponents: vec![a],
            };
            walk(m, variant, &mut mono, rg, &mut |x| counts[x.degree()] += 1);
            counts
        })
        .collect();
    let mut total = vec![0u64; m.rank() + 2];
    total[0] = 1;
    for c in counts {
        for (t, v) in total.iter_mut().zip(c) {
            *t += v;
        }
    }
    Ok(LaurentQT::from_t_dense(&total))
}

/// `(-1)^{floor(deg/2)} h(-1)` for a Hilbert series `h` of degree `deg`.
pub fn cd_of_hilbert(h: &LaurentQT, deg: usize) -> LaurentQT {
    let v = LaurentQT::from_qpoly(h.eval_t_neg_one());
    if (deg / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Charney–Davis quantity of the (augmented) Chow ring of `m`.
pub fn cd(m: &MatroidFlats, variant: Variant) -> Result<LaurentQT> {
    Ok(cd_of_hilbert(
        &hilb(m, variant)?,
        variant.top_degree(m.rank()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_counts(m: &MatroidFlats, v: Variant) -> Vec<usize> {
        let basis = fy_basis(m, v).unwrap();
        let top = basis.iter().map(FYMonomial::degree).max().unwrap();
        (0..=top)
            .map(|d| basis.iter().filter(|x| x.degree() == d).count())
            .collect()
    }

    #[test]
    fn small_bases() {
        let b3 = MatroidFlats::boolean(3).unwrap();
        assert_eq!(degree_counts(&b3, Variant::Chow), [1, 4, 1]);
        let u23 = MatroidFlats::uniform(2, 3).unwrap();
        assert_eq!(degree_counts(&u23, Variant::Augmented), [1, 4, 1]);
        let u14 = MatroidFlats::uniform(1, 4).unwrap();
        assert_eq!(fy_basis(&u14, Variant::Chow).unwrap().len(), 1);
        let basis = fy_basis(&b3, Variant::Chow).unwrap();
        assert_eq!(basis[0].to_string(), "1");
        assert!(basis.iter().any(|x| x.to_string() == "x_{1,2,3}^2"));
    }

    #[test]
    fn hilbert_series() {
        let b3 = MatroidFlats::boolean(3).unwrap();
        assert_eq!(
            hilb(&b3, Variant::Chow).unwrap(),
            LaurentQT::from_t_dense(&[1, 4, 1])
        );
        let u23 = MatroidFlats::uniform(2, 3).unwrap();
        assert_eq!(
            hilb(&u23, Variant::Augmented).unwrap(),
            LaurentQT::from_t_dense(&[1, 4, 1])
        );
        assert_eq!(
            hilb(&MatroidFlats::uniform(1, 5).unwrap(), Variant::Chow).unwrap(),
            LaurentQT::one()
        );
        for n in 1..=5 {
            for r in 1..=n {
                let m = MatroidFlats::uniform(r, n).unwrap();
                for v in Variant::BOTH {
                    let h = hilb(&m, v).unwrap();
                    let by_walk = fy_basis(&m, v).unwrap().len();
                    assert_eq!(h.eval_t(1), crate::QPoly::constant(by_walk as i64));
                    assert!(
                        h.is_palindromic(v.top_degree(r) as i32),
                        "U({r},{n}) {v}: {h}"
                    );
                }
            }
        }
    }

    #[test]
    fn charney_davis() {
        let b3 = MatroidFlats::boolean(3).unwrap();
        assert_eq!(cd(&b3, Variant::Chow).unwrap(), LaurentQT::constant(2));
        let u23 = MatroidFlats::uniform(2, 3).unwrap();
        assert_eq!(
            cd(&u23, Variant::Augmented).unwrap(),
            LaurentQT::constant(2)
        );
        for n in 2..=5 {
            let u2n = MatroidFlats::uniform(2, n).unwrap();
            assert!(cd(&u2n, Variant::Chow).unwrap().is_zero());
        }
    }
}
