//! Charney–Davis quantities of (augmented) Chow rings of q-uniform
//! matroids by four independent routes: evaluating the Hilbert series,
//! descent classes, alternating sums of (q-)secant numbers, and
//! determinants of inverse q-factorials.
//!
//! Every route returns the raw value `Hilb(-1)`; the normalized column of a
//! [`CdReport`] applies the sign `(-1)^{floor(deg/2)}`.

use serde_json::{json, Value};

use crate::chowfy::{cd_of_hilbert, hilb_q_uniform};
use crate::error::{Error, Result};
use crate::exactalg::{det_qfrac, q_binomial, q_factorial, LaurentQT, QFrac, QPoly};
use crate::permstat::{gen_alternating, gen_permutations, gen_reverse_alternating, gen_updown};
use crate::subset::Subset;
use crate::Variant;

fn check(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::arg(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// Whether the raw value is forced to vanish by parity.
fn vanishes(r: usize, variant: Variant) -> bool {
    match variant {
        Variant::Chow => r.is_multiple_of(2),
        Variant::Augmented => !r.is_multiple_of(2),
    }
}

fn signed(p: QPoly, negate: bool) -> LaurentQT {
    let v = LaurentQT::from_qpoly(p);
    if negate {
        -v
    } else {
        v
    }
}

/// The descent class the Charney–Davis quantity counts: `Even(r-1)` for the
/// Chow ring, `Odd(r-1)` for the augmented ring.
pub fn descent_class(r: usize, variant: Variant) -> Subset {
    match variant {
        Variant::Chow => Subset::evens_up_to(r - 1),
        Variant::Augmented => Subset::odds_up_to(r - 1),
    }
}

/// Sign relating the raw value to the descent-class count.
fn class_sign_negative(r: usize, variant: Variant) -> bool {
    match variant {
        Variant::Chow => ((r - 1) / 2) % 2 == 1,
        Variant::Augmented => (r / 2) % 2 == 1,
    }
}

/// `sum of q^{inv}` over permutations of `[n]` with descent set exactly `s`.
pub fn inv_by_descent_class(s: Subset, n: usize) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for p in gen_permutations(n)?.filter(|p| p.des_set() == s) {
        out += &QPoly::q_pow(p.inv() as u32);
    }
    Ok(out)
}

/// `Hilb(-1)` as a signed descent-class count.
pub fn cd_descents(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check(r, n)?;
    if vanishes(r, variant) {
        return Ok(LaurentQT::zero());
    }
    let count = inv_by_descent_class(descent_class(r, variant), n)?;
    Ok(signed(count, class_sign_negative(r, variant)))
}

fn inv_sum(perms: impl Iterator<Item = crate::permstat::Permutation>) -> QPoly {
    perms.map(|p| QPoly::q_pow(p.inv() as u32)).sum()
}

/// `E_{2k}(q)` over reverse alternating permutations and `E*_{2k+1}(q)` over
/// alternating permutations, with the complementation relation
/// `E*_m(q) = q^{C(m,2)} E_m(1/q)` checked at `m = 2k+1`.
pub fn secant_numbers(k: usize) -> Result<(QPoly, QPoly)> {
    let even = inv_sum(gen_reverse_alternating(2 * k)?);
    let odd_star = inv_sum(gen_alternating(2 * k + 1)?);
    let m = 2 * k + 1;
    let odd = inv_sum(gen_updown(m, true)?);
    let reflected = odd.reflect((m * (m - 1) / 2) as u32);
    if reflected != odd_star {
        return Err(Error::identity(
            "alternating and reverse alternating inversion polynomials",
            format!("m = {m}: E*_m = {odd_star}, q^C(m,2) E_m(1/q) = {reflected}"),
        ));
    }
    Ok((even, odd_star))
}

/// Alternating sums of q-binomials times q-secant numbers.
pub fn cd_secant(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check(r, n)?;
    if vanishes(r, variant) {
        return Ok(LaurentQT::zero());
    }
    let mut out = QPoly::zero();
    match variant {
        Variant::Chow => {
            for k in 0..=(r - 1) / 2 {
                let term = &q_binomial(n, 2 * k) * &secant_numbers(k)?.0;
                if k.is_multiple_of(2) {
                    out += &term;
                } else {
                    out -= &term;
                }
            }
        }
        Variant::Augmented => {
            out = QPoly::one();
            for k in 0..=(r - 2) / 2 {
                let term = &q_binomial(n, 2 * k + 1) * &secant_numbers(k)?.1;
                if !k.is_multiple_of(2) {
                    out += &term;
                } else {
                    out -= &term;
                }
            }
        }
    }
    Ok(LaurentQT::from_qpoly(out))
}

fn inv_factorial(m: usize) -> QFrac {
    QFrac::recip_of(q_factorial(m))
}

/// The matrix `(1/[s_i - s_{j-1}]_q!)` for `i, j = 1..=l+1`, where
/// `s_0 = 0`, `s_{l+1} = n` and entries with a negative index vanish.
/// Its determinant times `[n]_q!` is the inversion polynomial of the
/// descent class `s`.
pub fn descent_class_matrix(s: Subset, n: usize) -> Vec<Vec<QFrac>> {
    let mut pts = vec![0];
    pts.extend(s.iter());
    pts.push(n);
    let size = pts.len() - 1;
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let (hi, lo) = (pts[i], pts[j - 1]);
                    if hi < lo {
                        QFrac::zero()
                    } else {
                        inv_factorial(hi - lo)
                    }
                })
                .collect()
        })
        .collect()
}

fn times_factorial(n: usize, x: &QFrac) -> Result<QPoly> {
    let y = &QFrac::from_poly(q_factorial(n)) * x;
    y.as_poly()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("[{n}]_q! times {x} is not a polynomial")))
}

/// The single-determinant form, with the sign making it a raw value.
pub fn cd_single_determinant(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check(r, n)?;
    parity_defined(r, variant)?;
    let det = det_qfrac(&descent_class_matrix(descent_class(r, variant), n))?;
    Ok(signed(
        times_factorial(n, &det)?,
        class_sign_negative(r, variant),
    ))
}

/// The alternating sum of determinants: for the Chow ring
/// `1 + sum_{k>=1} (-1)^k [n]!/[n-2k]! det_k` with `det_k` the size-`k`
/// determinant for reverse alternating permutations of `[2k]`; for the
/// augmented ring `1 + sum_{k>=0} (-1)^{k+1} [n]!/[n-2k-1]! det*_k` with the
/// descent class of alternating permutations of `[2k+1]`.
pub fn cd_determinant_sum(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check(r, n)?;
    parity_defined(r, variant)?;
    let mut total = QFrac::one();
    let ks: Vec<(usize, usize, bool)> = match variant {
        // (block size m, descent class, subtract?)
        Variant::Chow => (1..=(r - 1) / 2)
            .map(|k| (2 * k, k, !k.is_multiple_of(2)))
            .collect(),
        Variant::Augmented => (0..=(r - 2) / 2)
            .map(|k| (2 * k + 1, k, k.is_multiple_of(2)))
            .collect(),
    };
    for (m, k, negative) in ks {
        let class = match variant {
            Variant::Chow => Subset::evens_up_to(2 * k - 1),
            Variant::Augmented => Subset::odds_up_to(2 * k),
        };
        let det = det_qfrac(&descent_class_matrix(class, m))?;
        let ratio = QFrac::new(q_factorial(n), q_factorial(n - m));
        let term = &ratio * &det;
        total = if negative {
            &total - &term
        } else {
            &total + &term
        };
    }
    let p = total.as_poly().cloned().ok_or_else(|| {
        Error::Internal(format!(
            "alternating determinant sum {total} is not a polynomial"
        ))
    })?;
    Ok(LaurentQT::from_qpoly(p))
}

fn parity_defined(r: usize, variant: Variant) -> Result<()> {
    if vanishes(r, variant) {
        return Err(Error::arg(format!(
            "the determinant forms need r {} for the {variant} ring, got r = {r}",
            if variant == Variant::Chow {
                "odd"
            } else {
                "even"
            }
        )));
    }
    Ok(())
}

/// Both determinant forms; they must agree.
pub fn cd_determinant(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    let single = cd_single_determinant(r, n, variant)?;
    let sum = cd_determinant_sum(r, n, variant)?;
    if single != sum {
        return Err(Error::identity(
            "determinant forms of the Charney–Davis quantity",
            format!(
                "r = {r}, n = {n}, {variant}: single determinant {single}, alternating sum {sum}"
            ),
        ));
    }
    Ok(single)
}

/// `Hilb(-1)` of the q-uniform Hilbert series.
pub fn cd_eval(r: usize, n: usize, variant: Variant) -> Result<LaurentQT> {
    check(r, n)?;
    Ok(LaurentQT::from_qpoly(
        hilb_q_uniform(r, n, variant)?.eval_t_neg_one(),
    ))
}

/// All routes side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdReport {
    pub r: usize,
    pub n: usize,
    pub variant: Variant,
    pub eval: LaurentQT,
    pub descents: LaurentQT,
    pub secant: LaurentQT,
    /// Absent when the parity makes the value vanish.
    pub determinant: Option<LaurentQT>,
    /// `(-1)^{floor(deg/2)}` times the raw value.
    pub normalized: LaurentQT,
    pub agreement: bool,
}

impl CdReport {
    pub fn compute(r: usize, n: usize, variant: Variant) -> Result<Self> {
        let eval = cd_eval(r, n, variant)?;
        let descents = cd_descents(r, n, variant)?;
        let secant = cd_secant(r, n, variant)?;
        let determinant = if vanishes(r, variant) {
            None
        } else {
            Some(cd_determinant(r, n, variant)?)
        };
        let agreement =
            eval == descents && eval == secant && determinant.as_ref().is_none_or(|d| *d == eval);
        let normalized = cd_of_hilbert(&eval, variant.top_degree(r));
        Ok(CdReport {
            r,
            n,
            variant,
            eval,
            descents,
            secant,
            determinant,
            normalized,
            agreement,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "n": self.n,
            "variant": self.variant.name(),
            "routes": {
                "eval": self.eval.to_json(),
                "descents": self.descents.to_json(),
                "secant": self.secant.to_json(),
                "determinant": self.determinant.as_ref().map(LaurentQT::to_json),
            },
            "normalized": self.normalized.to_json(),
            "agreement": self.agreement,
        })
    }
}
