//! Young tableaux: Schur functions, ribbon shapes and Kostka numbers.

use std::collections::BTreeMap;

use super::{h_of_composition, QSymElem};
use crate::error::{Error, Result};
use crate::exactalg::LaurentQT;
use crate::guard::Guard;
use crate::subset::Subset;

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Descent sets of all standard fillings of a (skew) diagram given by its
/// cells `(row, col)`, English convention, with multiplicities.
///
/// `i` is a descent when `i + 1` sits in a lower row than `i`.
pub fn standard_tableaux_descents(cells: &[(usize, usize)]) -> BTreeMap<Subset, u64> {
    let n = cells.len();
    let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
    // predecessors that must be filled first
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(r, c)| {
            let mut p = Vec::new();
            if c > 0 {
                p.extend(index(r, c - 1));
            }
            if r > 0 {
                p.extend(index(r - 1, c));
            }
            p
        })
        .collect();

    fn go(
        cells: &[(usize, usize)],
        preds: &[Vec<usize>],
        filled: u64,
        rows: &mut Vec<usize>,
        out: &mut BTreeMap<Subset, u64>,
    ) {
        if rows.len() == cells.len() {
            let mut s = Subset::empty();
            for i in 1..rows.len() {
                if rows[i] > rows[i - 1] {
                    s.insert(i);
                }
            }
            *out.entry(s).or_default() += 1;
            return;
        }
        for (k, &(r, _)) in cells.iter().enumerate() {
            if filled >> k & 1 == 1 || preds[k].iter().any(|&p| filled >> p & 1 == 0) {
                continue;
            }
            rows.push(r);
            go(cells, preds, filled | 1 << k, rows, out);
            rows.pop();
        }
    }

    let mut out = BTreeMap::new();
    assert!(n <= 64);
    go(cells, &preds, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

fn from_descents(n: usize, d: BTreeMap<Subset, u64>) -> QSymElem {
    let mut out = QSymElem::zero();
    for (s, c) in d {
        out.add_term(n, s, &LaurentQT::constant(c));
    }
    out
}

/// Schur function `s_λ` as the sum of `F_{DES(T)}` over standard tableaux.
pub fn schur(lambda: &[usize]) -> Result<QSymElem> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::arg(format!("{lambda:?} is not a partition")));
    }
    let n: usize = lambda.iter().sum();
    Guard::ShuffleDegree.check(n)?;
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    Ok(from_descents(n, standard_tableaux_descents(&cells)))
}

/// Cells of the ribbon with `n` cells where cell `i + 1` sits directly above
/// cell `i` for `i ∈ r` and directly right of it otherwise.
pub(crate) fn ribbon_cells(r: Subset, n: usize) -> Vec<(usize, usize)> {
    let rows = r.len();
    let (mut row, mut col) = (rows, 0usize);
    let mut cells = Vec::with_capacity(n);
    for i in 1..=n {
        if i > 1 {
            if r.contains(i - 1) {
                row -= 1;
            } else {
                col += 1;
            }
        }
        cells.push((row, col));
    }
    cells
}

pub(crate) fn ribbon_by_tableaux(r: Subset, n: usize) -> Result<QSymElem> {
    if r.max().is_some_and(|m| m >= n) {
        return Err(Error::arg(format!(
            "{r} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    Guard::ShuffleDegree.check(n)?;
    Ok(from_descents(
        n,
        standard_tableaux_descents(&ribbon_cells(r, n)),
    ))
}

/// Number of semistandard tableaux of shape `lambda` and content `nu`.
pub fn kostka(lambda: &[usize], nu: &[usize]) -> u64 {
    // strip the largest value as a horizontal strip of size nu.last()
    fn go(shape: &[usize], nu: &[usize]) -> u64 {
        let Some((&last, rest)) = nu.split_last() else {
            return u64::from(shape.iter().all(|&p| p == 0));
        };
        let mut total = 0;
        let mut inner = shape.to_vec();
        strips(shape, 0, last, &mut inner, &mut |mu| total += go(mu, rest));
        total
    }
    // all mu with shape/mu a horizontal strip of `size` cells:
    // shape[i+1] <= mu[i] <= shape[i]
    fn strips(
        shape: &[usize],
        i: usize,
        size: usize,
        mu: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if i == shape.len() {
            if size == 0 {
                f(mu);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for m in (lo..=shape[i]).rev() {
            let take = shape[i] - m;
            if take > size {
                break;
            }
            mu[i] = m;
            strips(shape, i + 1, size - take, mu, f);
        }
        mu[i] = shape[i];
    }
    let total: usize = lambda.iter().sum();
    if total != nu.iter().sum::<usize>() {
        return 0;
    }
    go(lambda, nu)
}

/// `h_nu - sum_λ K_{λ,nu} s_λ`; zero when the decomposition holds.
pub(crate) fn kostka_defect(nu: &[usize]) -> Result<QSymElem> {
    let n: usize = nu.iter().sum();
    let mut rhs = QSymElem::zero();
    for lambda in partitions(n) {
        let k = kostka(&lambda, nu);
        if k > 0 {
            rhs += &schur(&lambda)?.scale(&LaurentQT::constant(k));
        }
    }
    Ok(&h_of_composition(nu)? - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn ribbon_shape() {
        // cells 1, 2 in the bottom row, cell 3 above cell 2
        assert_eq!(
            ribbon_cells(Subset::from_elems([2]), 3),
            [(1, 0), (1, 1), (0, 1)]
        );
        assert_eq!(ribbon_cells(Subset::empty(), 3), [(0, 0), (0, 1), (0, 2)]);
    }

    #[test]
    fn schur_small() {
        let s21 = schur(&[2, 1]).unwrap();
        let mut expect = QSymElem::zero();
        expect.add_term(3, Subset::from_elems([1]), &LaurentQT::one());
        expect.add_term(3, Subset::from_elems([2]), &LaurentQT::one());
        assert_eq!(s21, expect);
        assert_eq!(
            schur(&[1, 1, 1])
                .unwrap()
                .coeff(3, Subset::from_elems([1, 2])),
            LaurentQT::one()
        );
        assert!(schur(&[1, 2]).is_err());
        // f^λ: number of standard tableaux
        let f: u64 = standard_tableaux_descents(&[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)])
            .values()
            .sum();
        assert_eq!(f, 5);
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[3], &[1, 2]), 1);
        assert_eq!(kostka(&[2, 2], &[2, 1, 1]), 1);
        assert_eq!(kostka(&[3, 1], &[2, 2]), 1);
        assert_eq!(kostka(&[1, 1], &[2]), 0);
        assert_eq!(kostka(&[2, 2, 1], &[1, 1, 1, 1, 1]), 5);
    }

    #[test]
    fn complete_homogeneous_decomposes() {
        for n in 0..=5 {
            for lam in partitions(n) {
                assert!(kostka_defect(&lam).unwrap().is_zero(), "{lam:?}");
            }
        }
        assert!(kostka_defect(&[1, 3]).unwrap().is_zero());
    }
}
