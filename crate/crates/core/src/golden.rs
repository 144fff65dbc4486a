//! Exact arithmetic in `Q(√5)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `a + b√5` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QSqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt5 { a, b }
    }

    /// `(an/ad) + (bn/bd)√5`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QSqrt5::new(rat(an, ad), rat(bn, bd))
    }

    pub fn integer(n: i64) -> Self {
        QSqrt5::from_ratios(n, 1, 0, 1)
    }

    pub fn zero() -> Self {
        QSqrt5::integer(0)
    }

    pub fn one() -> Self {
        QSqrt5::integer(1)
    }

    /// `φ = (1 + √5)/2`.
    pub fn phi() -> Self {
        QSqrt5::from_ratios(1, 2, 1, 2)
    }

    /// `(1 - √5)/2`.
    pub fn phi_conj() -> Self {
        QSqrt5::from_ratios(1, 2, -1, 2)
    }

    pub fn sqrt5() -> Self {
        QSqrt5::from_ratios(0, 1, 1, 1)
    }

    pub fn conj(&self) -> Self {
        QSqrt5::new(self.a.clone(), -self.b.clone())
    }

    /// `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigInt::from(5)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QSqrt5::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√5", self.a, self.b)
    }
}

impl Add for &QSqrt5 {
    type Output = QSqrt5;
    fn add(self, o: &QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, o: &QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, o: &QSqrt5) -> QSqrt5 {
        let five = BigRational::from_integer(BigInt::from(5));
        QSqrt5::new(
            &self.a * &o.a + &self.b * &o.b * five,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Div for &QSqrt5 {
    type Output = QSqrt5;
    /// # Panics
    ///
    /// On division by zero.
    fn div(self, o: &QSqrt5) -> QSqrt5 {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(√5)");
        let num = self * &o.conj();
        QSqrt5::new(num.a / &n, num.b / &n)
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QSqrt5 {
            type Output = QSqrt5;
            fn $m(self, o: QSqrt5) -> QSqrt5 { (&self).$m(&o) }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl From<BigInt> for QSqrt5 {
    fn from(n: BigInt) -> Self {
        QSqrt5::new(BigRational::from_integer(n), BigRational::zero())
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        QSqrt5::integer(1)
    }
}
