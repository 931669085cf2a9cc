use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// The zero polynomial is the empty map; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::monomial(0, c)
    }

    /// `c * q^e`.
    pub fn monomial(e: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPoly { coeffs }
    }

    /// `q^e`.
    pub fn q_pow(e: u32) -> Self {
        QPoly::monomial(e, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds from a dense coefficient list, lowest degree first.
    pub fn from_dense<C: Into<BigInt> + Clone>(cs: &[C]) -> Self {
        QPoly::from_terms(cs.iter().enumerate().map(|(i, c)| (i as u32, c.clone())))
    }

    pub fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial has no positive-degree terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// A single term `c q^e` with `|c| = 1`.
    pub fn is_unit_monomial(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().all(|c| c.abs().is_one())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> QPoly {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Horner from the top degree down
        let Some(top) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for e in (0..=top).rev() {
            acc *= q;
            if let Some(c) = self.coeffs.get(&e) {
                acc += c;
            }
        }
        acc
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `q^d p(1/q)`; requires `d >= deg p`.
    pub fn reflect(&self, d: u32) -> QPoly {
        assert!(
            self.degree().is_none_or(|top| top <= d),
            "reflect below degree"
        );
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (d - e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x / &c)).collect(),
        }
    }

    pub fn div_by_integer(&self, c: &BigInt) -> Option<QPoly> {
        if c.is_zero() {
            return None;
        }
        let mut out = BTreeMap::new();
        for (e, x) in &self.coeffs {
            let (quot, rem) = x.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            out.insert(*e, quot);
        }
        Some(QPoly { coeffs: out })
    }

    /// Exact division in `Z[q]`; `None` if `d` is zero or does not divide.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (quot, rem) = self.div_rem_over_z(d)?;
        rem.is_zero().then_some(quot)
    }

    /// Long division keeping integer coefficients; fails (returns `None`)
    /// as soon as a leading coefficient does not divide exactly.
    fn div_rem_over_z(&self, d: &QPoly) -> Option<(QPoly, QPoly)> {
        let dd = d.degree()?;
        let lc = d.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (c, r) = rem.coeff(rd).div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let term = QPoly::monomial(rd - dd, c);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some((quot, rem))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
    fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
        let bd = b.degree().expect("pseudo-remainder by zero");
        let lc = b.leading_coeff().unwrap().clone();
        let mut r = a.clone();
        while let Some(rd) = r.degree() {
            if rd < bd {
                break;
            }
            let c = r.coeff(rd);
            r = &r.scale(&lc) - &b.shift(rd - bd).scale(&c);
        }
        r
    }

    /// Greatest common divisor in `Z[q]`, normalized with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = QPoly::pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            f.write_str(var)?;
            if *e > 1 {
                if *e >= 10 {
                    write!(f, "^{{{e}}}")?;
                } else {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPoly {
    /// LaTeX-style, ascending in `q`: `1+2q+q^{10}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, "q")
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl<'a> Add<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &'a QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &'a QPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &'a QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &'a QPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Mul<&'a QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &'a QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty; $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(&self, &rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t { $tr::$m(&self, rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(self, &rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(QPoly; Add add, Sub sub, Mul mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_dense(cs)
    }

    #[test]
    fn zero_has_no_terms() {
        let a = p(&[1, 2]);
        assert!((&a - &a).is_zero());
        assert_eq!(p(&[0, 0, 0]), QPoly::zero());
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "1+2q+q^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q+3q^3");
        assert_eq!(QPoly::q_pow(12).to_string(), "q^{12}");
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]);
        let b = p(&[1, 1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(p(&[2]).div_exact(&p(&[4])), None);
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]);
        let b = p(&[1, 0, 1]);
        let c = p(&[2, 1]);
        let x = (&a * &b).scale(&BigInt::from(6));
        let y = (&a * &c).scale(&BigInt::from(-4));
        assert_eq!(x.gcd(&y), a.scale(&BigInt::from(2)));
        assert_eq!(QPoly::zero().gcd(&p(&[-3, -3])), p(&[3, 3]));
    }

    #[test]
    fn eval_and_reflect() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(17));
        assert_eq!(a.eval_one(), BigInt::from(6));
        assert_eq!(a.reflect(3), p(&[0, 3, 2, 1]));
    }
}
