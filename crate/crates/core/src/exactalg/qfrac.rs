use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::qpoly::{forward_owned, QPoly};

/// An element of the fraction field `Q(q)`, kept in lowest terms.
///
/// The numerator and denominator share no nonunit factor in `Z[q]` and the
/// denominator has a positive leading coefficient, so structural equality is
/// equality of fractions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFrac {
    num: QPoly,
    den: QPoly,
}

impl QFrac {
    /// Panics if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "QFrac with zero denominator");
        if num.is_zero() {
            return QFrac::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QFrac { num, den }
    }

    pub fn zero() -> Self {
        QFrac {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QFrac::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QFrac {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `1 / p`; panics on zero.
    pub fn recip_of(p: QPoly) -> Self {
        QFrac::new(QPoly::one(), p)
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Option<QFrac> {
        (!self.is_zero()).then(|| QFrac::new(self.den.clone(), self.num.clone()))
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }
}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFrac({self})")
    }
}

impl<'a> Add<&'a QFrac> for &QFrac {
    type Output = QFrac;
    fn add(self, rhs: &'a QFrac) -> QFrac {
        QFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a QFrac> for &QFrac {
    type Output = QFrac;
    fn sub(self, rhs: &'a QFrac) -> QFrac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QFrac> for &QFrac {
    type Output = QFrac;
    fn mul(self, rhs: &'a QFrac) -> QFrac {
        QFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a QFrac> for &QFrac {
    type Output = QFrac;
    /// Panics on division by zero.
    fn div(self, rhs: &'a QFrac) -> QFrac {
        assert!(!rhs.is_zero(), "QFrac division by zero");
        QFrac::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QFrac {
    type Output = QFrac;
    fn neg(self) -> QFrac {
        QFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(QFrac; Add add, Sub sub, Mul mul, Div div);
