use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::qpoly::{forward_owned, QPoly};
use crate::error::{Error, Result};

/// A Laurent polynomial in `t` whose coefficients lie in `Z[q]`.
///
/// This is the common answer type for Hilbert series, Eulerian polynomials
/// and Charney–Davis values. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQT {
    coeffs: BTreeMap<i32, QPoly>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT::default()
    }

    pub fn one() -> Self {
        LaurentQT::from_qpoly(QPoly::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentQT::from_qpoly(QPoly::constant(c))
    }

    pub fn from_qpoly(p: QPoly) -> Self {
        LaurentQT::monomial(0, p)
    }

    /// `p(q) t^e`.
    pub fn monomial(e: i32, p: QPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(e, p);
        }
        LaurentQT { coeffs }
    }

    /// `t^e`.
    pub fn t_pow(e: i32) -> Self {
        LaurentQT::monomial(e, QPoly::one())
    }

    /// `t^lo + t^(lo+1) + ... + t^hi`; zero when `lo > hi`.
    pub fn t_range(lo: i32, hi: i32) -> Self {
        let mut out = LaurentQT::zero();
        for e in lo..=hi {
            out.add_term(e, &QPoly::one());
        }
        out
    }

    /// Builds a q-free polynomial from integer coefficients of `t^0, t^1, ...`.
    pub fn from_t_dense<C: Into<BigInt> + Clone>(cs: &[C]) -> Self {
        let mut out = LaurentQT::zero();
        for (i, c) in cs.iter().enumerate() {
            out.add_term(i as i32, &QPoly::constant(c.clone()));
        }
        out
    }

    pub fn add_term(&mut self, e: i32, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += p;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(QPoly::is_one)
    }

    pub fn coeff(&self, e: i32) -> QPoly {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &QPoly)> + '_ {
        self.coeffs.iter().map(|(e, p)| (*e, p))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_t(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_t(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// True when no coefficient mentions `q`.
    pub fn is_q_free(&self) -> bool {
        self.coeffs.values().all(|p| p.as_constant().is_some())
    }

    /// True when every coefficient of every `q^i t^j` is nonnegative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(QPoly::has_nonnegative_coeffs)
    }

    /// The single coefficient of a `t`-constant, if that is all there is.
    pub fn as_qpoly(&self) -> Option<QPoly> {
        match self.coeffs.len() {
            0 => Some(QPoly::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_t(&self, k: i32) -> LaurentQT {
        LaurentQT {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| (e + k, p.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, p: &QPoly) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (e, c) in &self.coeffs {
            out.add_term(*e, &(c * p));
        }
        out
    }

    pub fn scale_int(&self, c: &BigInt) -> LaurentQT {
        self.scale(&QPoly::constant(c.clone()))
    }

    /// Substitute an integer for `t`; negative exponents need `t = ±1`.
    pub fn eval_t(&self, t: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (e, p) in &self.coeffs {
            let v: BigInt = if *e >= 0 {
                num_traits::pow(BigInt::from(t), *e as usize)
            } else {
                assert!(
                    t == 1 || t == -1,
                    "negative t-exponent evaluated at t = {t}"
                );
                num_traits::pow(BigInt::from(t), e.unsigned_abs() as usize)
            };
            out += &p.scale(&v);
        }
        out
    }

    pub fn eval_t_neg_one(&self) -> QPoly {
        self.eval_t(-1)
    }

    /// Substitute `q = 1`, leaving a q-free Laurent polynomial in `t`.
    pub fn eval_q_one(&self) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (e, p) in &self.coeffs {
            out.add_term(*e, &QPoly::constant(p.eval_one()));
        }
        out
    }

    /// Apply a map to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (e, p) in &self.coeffs {
            out.add_term(*e, &f(p));
        }
        out
    }

    /// `t^d f(1/t)`.
    pub fn reflect(&self, d: i32) -> LaurentQT {
        LaurentQT {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| (d - e, p.clone()))
                .collect(),
        }
    }

    /// Coefficients supported in `0..=d` and symmetric about `d/2`.
    pub fn is_palindromic(&self, d: i32) -> bool {
        self.min_t().is_none_or(|lo| lo >= 0)
            && self.max_t().is_none_or(|hi| hi <= d)
            && self.reflect(d) == *self
    }

    pub fn pow(&self, k: u32) -> LaurentQT {
        let mut acc = LaurentQT::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// JSON form: `[{"t": e, "q": [[exp, "coeff"], ...]}, ...]`, sorted.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(e, p)| {
                    let qs: Vec<Value> = p
                        .terms()
                        .map(|(qe, c)| json!([qe, c.to_string()]))
                        .collect();
                    json!({ "t": e, "q": qs })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<LaurentQT> {
        let bad = || Error::arg(format!("malformed Laurent polynomial JSON: {v}"));
        let mut out = LaurentQT::zero();
        for term in v.as_array().ok_or_else(bad)? {
            let e = term.get("t").and_then(Value::as_i64).ok_or_else(bad)?;
            let e = i32::try_from(e).map_err(|_| bad())?;
            let mut p = QPoly::zero();
            for pair in term.get("q").and_then(Value::as_array).ok_or_else(bad)? {
                let pair = pair.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
                let qe = pair[0].as_u64().and_then(|x| u32::try_from(x).ok());
                let c = pair[1].as_str().and_then(|s| s.parse::<BigInt>().ok());
                match (qe, c) {
                    (Some(qe), Some(c)) => p.add_term(qe, c),
                    _ => return Err(bad()),
                }
            }
            out.add_term(e, &p);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentQT {
    /// LaTeX-style, `t` ascending and `q` ascending within coefficients:
    /// `1+(2+q+q^2)t+t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, p)) in self.coeffs.iter().enumerate() {
            let mut body = String::new();
            let mut neg = false;
            if *e == 0 && i > 0 && p.len() > 1 {
                body = format!("({p})");
            } else if *e == 0 {
                body = p.to_string();
                if let Some(rest) = body.strip_prefix('-') {
                    if p.len() == 1 {
                        neg = true;
                        body = rest.to_string();
                    }
                }
            } else {
                if p.len() == 1 {
                    let (qe, c) = p.terms().next().unwrap();
                    neg = c.is_negative();
                    let mono = QPoly::monomial(qe, c.abs());
                    if !mono.is_one() {
                        body = mono.to_string();
                    }
                } else {
                    body = format!("({p})");
                }
                body.push('t');
                if *e != 1 {
                    if (0..10).contains(e) {
                        body.push_str(&format!("^{e}"));
                    } else {
                        body.push_str(&format!("^{{{e}}}"));
                    }
                }
            }
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({self})")
    }
}

impl<'a> Add<&'a LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &'a LaurentQT) {
        for (e, p) in &rhs.coeffs {
            self.add_term(*e, p);
        }
    }
}

impl<'a> Sub<&'a LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &'a LaurentQT) {
        for (e, p) in &rhs.coeffs {
            self.add_term(*e, &-p);
        }
    }
}

impl<'a> Mul<&'a LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (ea, pa) in &self.coeffs {
            for (eb, pb) in &rhs.coeffs {
                out.add_term(ea + eb, &(pa * pb));
            }
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            coeffs: self.coeffs.iter().map(|(e, p)| (*e, -p)).collect(),
        }
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

forward_owned!(LaurentQT; Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentQT {
    fn sum<I: Iterator<Item = LaurentQT>>(iter: I) -> LaurentQT {
        iter.fold(LaurentQT::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<QPoly> for LaurentQT {
    fn from(p: QPoly) -> Self {
        LaurentQT::from_qpoly(p)
    }
}

impl Zero for LaurentQT {
    fn zero() -> Self {
        LaurentQT::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentQT::is_zero(self)
    }
}

impl One for LaurentQT {
    fn one() -> Self {
        LaurentQT::one()
    }
}
