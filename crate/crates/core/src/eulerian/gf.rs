//! The generating function `(1-t)H(z) / (H(tz) - tH(z))` and its refinement
//! with `H(rz)` in the numerator, expanded as a power series in `z`.

use std::collections::BTreeMap;

use super::{q_eulerian, q_njk};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentQT, QPoly};
use crate::guard::Guard;
use crate::qsym::{h_of_composition, QSymElem};

/// A polynomial in commuting `h_1, h_2, ...` and a marker `r`, with
/// coefficients in `Z[q][t, 1/t]`. Keys are (sorted h-indices, r-exponent).
type HPoly = BTreeMap<(Vec<usize>, usize), LaurentQT>;

fn add_into(acc: &mut HPoly, key: (Vec<usize>, usize), c: LaurentQT) {
    let slot = acc.entry(key.clone()).or_default();
    *slot += &c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

/// `p / (1 - t)` for a polynomial `p` in `t` vanishing at `t = 1`.
fn div_one_minus_t(p: &LaurentQT) -> Result<LaurentQT> {
    let lo = p.min_t().unwrap_or(0);
    let hi = p.max_t().unwrap_or(0);
    // (1 - t) * sum_k c_k t^k = p  gives  c_k = sum_{i <= k} p_i
    let mut out = LaurentQT::zero();
    let mut run = QPoly::zero();
    for e in lo..=hi {
        run += &p.coeff(e);
        if e < hi {
            out.add_term(e, &run);
        }
    }
    if !run.is_zero() {
        return Err(Error::Internal(format!("{p} is not divisible by 1-t")));
    }
    Ok(out)
}

/// Coefficients `z^0..z^big_n` of the series; the numerator uses `H(rz)`
/// when `refined`, otherwise `r` never appears.
fn expand(big_n: usize, refined: bool) -> Result<Vec<HPoly>> {
    Guard::GeneratingFunction.check(big_n)?;
    // denominator (H(tz) - tH(z)) / (1 - t): z^k coefficient is
    // h_k (t^k - t) / (1 - t), and the constant term is 1
    let mut den: Vec<LaurentQT> = Vec::with_capacity(big_n + 1);
    for k in 0..=big_n {
        let raw = match k {
            0 => LaurentQT::one() - LaurentQT::t_pow(1),
            _ => LaurentQT::t_pow(k as i32) - LaurentQT::t_pow(1),
        };
        den.push(div_one_minus_t(&raw)?);
    }
    if !den[0].is_one() {
        return Err(Error::Internal(
            "series divisor has non-unit constant term".into(),
        ));
    }
    let mut g: Vec<HPoly> = Vec::with_capacity(big_n + 1);
    for n in 0..=big_n {
        let mut gn = HPoly::new();
        let h_n: Vec<usize> = if n == 0 { vec![] } else { vec![n] };
        add_into(
            &mut gn,
            (h_n, if refined { n } else { 0 }),
            LaurentQT::one(),
        );
        for k in 1..=n {
            if den[k].is_zero() {
                continue;
            }
            for ((parts, r), c) in &g[n - k] {
                let mut key = parts.clone();
                key.push(k);
                key.sort_unstable();
                add_into(&mut gn, (key, *r), -(c * &den[k]));
            }
        }
        g.push(gn);
    }
    Ok(g)
}

fn to_fundamental(p: &HPoly) -> Result<BTreeMap<usize, QSymElem>> {
    let mut out: BTreeMap<usize, QSymElem> = BTreeMap::new();
    for ((parts, r), c) in p {
        *out.entry(*r).or_default() += &h_of_composition(parts)?.scale(c);
    }
    out.retain(|_, x| !x.is_zero());
    Ok(out)
}

/// `z^n` coefficients of `(1-t)H(z)/(H(tz)-tH(z))` in the fundamental basis.
pub fn gf_series(big_n: usize) -> Result<Vec<QSymElem>> {
    expand(big_n, false)?
        .iter()
        .map(|p| Ok(to_fundamental(p)?.into_values().sum()))
        .collect()
}

/// `z^n` coefficients of `(1-t)H(rz)/(H(tz)-tH(z))`, split by the exponent
/// of `r`.
pub fn gf_series_refined(big_n: usize) -> Result<Vec<BTreeMap<usize, QSymElem>>> {
    expand(big_n, true)?.iter().map(to_fundamental).collect()
}

/// Compare both generating functions with the enumerated `Q_n` and
/// `Q_{n,j,k}` for `n <= big_n`.
pub fn gf_check(big_n: usize) -> Result<bool> {
    let plain = gf_series(big_n)?;
    let refined = gf_series_refined(big_n)?;
    for n in 0..=big_n {
        if plain[n] != q_eulerian(n)? {
            return Ok(false);
        }
        for k in 0..=n {
            let mut expect = QSymElem::zero();
            for j in 0..=n {
                expect += &q_njk(n, j, k)?.shift_t(j as i32);
            }
            if refined[n].get(&k).cloned().unwrap_or_default() != expect {
                return Ok(false);
            }
        }
        if refined[n].keys().any(|&k| k > n) {
            return Ok(false);
        }
    }
    Ok(true)
}
