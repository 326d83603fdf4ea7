//! Scalar tower: arbitrary-precision rationals and the real quadratic field Q(√2).
//!
//! Every witness point carries entries in (1/√2)·{0, ±1, ±e_i}, so Q(√2) is the
//! smallest field in which all exact checks can run. Float scalars share the same
//! generic interface for sampled, non-certifying computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact square root of a rational, when it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let ns = num.sqrt();
    let ds = den.sqrt();
    if &(&ns * &ns) == num && &(&ds * &ds) == den {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Element a + b·√2 of the field Q(√2), with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    a: Rational,
    b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat(v, 1))
    }

    /// The rational pair (a, b) with value a + b√2.
    pub fn parts(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// 1/√2 = (1/2)·√2.
    pub fn inv_sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: rat(1, 2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of the real value a + b√2, by comparing a² against 2b².
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // a and b of opposite sign: a + b√2 has the sign of a iff a² > 2b².
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = (&self.b * &self.b) * rat(2, 1);
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => -sa,
                    Ordering::Equal => 0, // impossible for nonzero b (√2 irrational)
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Galois conjugate a − b√2.
    pub fn conjugate(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a² − 2b²; zero iff the value is zero.
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - (&self.b * &self.b) * rat(2, 1)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.field_norm();
        Some(QSqrt2 {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Exact nonnegative square root within Q(√2), when one exists.
    ///
    /// Solving (x + y√2)² = a + b√2 reduces to rational square roots:
    /// x² + 2y² = a and 2xy = b.
    pub fn sqrt(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.b.is_zero() {
            if let Some(x) = rational_sqrt(&self.a) {
                return Some(Self::from_rational(x));
            }
            // a = 2y² branch: y = sqrt(a/2).
            if let Some(y) = rational_sqrt(&(&self.a / rat(2, 1))) {
                return Some(QSqrt2 {
                    a: Rational::zero(),
                    b: y,
                });
            }
            return None;
        }
        // Mixed case: y² = (a ± √(a² − 2b²))/4 with x = b/(2y).
        let disc = self.field_norm();
        let d = rational_sqrt(&disc)?;
        for y2 in [(&self.a + &d) / rat(4, 1), (&self.a - &d) / rat(4, 1)] {
            if y2.is_negative() {
                continue;
            }
            if let Some(y) = rational_sqrt(&y2) {
                if y.is_zero() {
                    continue;
                }
                let x = &self.b / (&y * rat(2, 1));
                let root = QSqrt2 { a: x, b: y };
                if &root * &root == *self {
                    return Some(if root.is_negative() { -root } else { root });
                }
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Good enough for reporting; exact decisions never go through f64.
    let n = r.numer();
    let d = r.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) => nf / df,
        _ => f64::NAN,
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let b_abs = self.b.abs();
        let radical = if b_abs.is_one() {
            "√2".to_string()
        } else {
            format!("{}√2", fmt_rational(&b_abs))
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}", radical)
            } else {
                write!(f, "{}", radical)
            }
        } else if self.b.is_negative() {
            write!(f, "{}-{}", fmt_rational(&self.a), radical)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.a), radical)
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid Q(√2) literal `{0}`")]
pub struct ParseQSqrt2Error(String);

impl FromStr for QSqrt2 {
    type Err = ParseQSqrt2Error;

    /// Parses "p/q", "r/s√2", "p/q+r/s√2", "p/q-r/s√2" (denominators optional,
    /// "sqrt2" accepted for the radical).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseQSqrt2Error(s.to_string());
        let t = s.trim().replace("sqrt2", "√2").replace(' ', "");
        let parse_rat = |x: &str| -> Result<Rational, ParseQSqrt2Error> {
            if x.is_empty() || x == "+" {
                Ok(Rational::one())
            } else if x == "-" {
                Ok(-Rational::one())
            } else {
                Rational::from_str(x).map_err(|_| err())
            }
        };
        match t.find("√2") {
            None => Ok(QSqrt2::from_rational(parse_rat(&t)?)),
            Some(pos) => {
                if !t.ends_with("√2") {
                    return Err(err());
                }
                let head = &t[..pos];
                // Split off the radical coefficient at the last interior sign.
                let split = head
                    .char_indices()
                    .filter(|(i, ch)| *i > 0 && (*ch == '+' || *ch == '-'))
                    .map(|(i, _)| i)
                    .last();
                match split {
                    None => Ok(QSqrt2 {
                        a: Rational::zero(),
                        b: parse_rat(head)?,
                    }),
                    Some(i) => {
                        let a = parse_rat(&head[..i])?;
                        let sign = if head[i..].starts_with('-') { -1 } else { 1 };
                        let b = parse_rat(&head[i + 1..])? * rat(sign, 1);
                        Ok(QSqrt2 { a, b })
                    }
                }
            }
        }
    }
}

impl Serialize for QSqrt2 {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QSqrt2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait for QSqrt2 {
            type Output = QSqrt2;
            fn $method(self, rhs: QSqrt2) -> QSqrt2 {
                $imp(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $method(self, rhs: &'a QSqrt2) -> QSqrt2 {
                $imp(&self, rhs)
            }
        }
        impl<'a> $trait<QSqrt2> for &'a QSqrt2 {
            type Output = QSqrt2;
            fn $method(self, rhs: QSqrt2) -> QSqrt2 {
                $imp(self, &rhs)
            }
        }
        impl<'a, 'b> $trait<&'b QSqrt2> for &'a QSqrt2 {
            type Output = QSqrt2;
            fn $method(self, rhs: &'b QSqrt2) -> QSqrt2 {
                $imp(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x: &QSqrt2, y: &QSqrt2| QSqrt2 {
    a: &x.a + &y.a,
    b: &x.b + &y.b,
});
forward_binop!(Sub, sub, |x: &QSqrt2, y: &QSqrt2| QSqrt2 {
    a: &x.a - &y.a,
    b: &x.b - &y.b,
});
forward_binop!(Mul, mul, |x: &QSqrt2, y: &QSqrt2| QSqrt2 {
    a: &x.a * &y.a + (&x.b * &y.b) * rat(2, 1),
    b: &x.a * &y.b + &x.b * &y.a,
});
forward_binop!(Div, div, |x: &QSqrt2, y: &QSqrt2| {
    x * y.recip().expect("division by zero in Q(√2)")
});

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -self.clone()
    }
}

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &QSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, rhs: &QSqrt2) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Sum for QSqrt2 {
    fn sum<I: Iterator<Item = QSqrt2>>(iter: I) -> QSqrt2 {
        iter.fold(QSqrt2::zero(), |acc, x| acc + x)
    }
}

/// How scalar decisions are made: exactly, or numerically with a tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Exact,
    Float { eps: f64 },
}

impl ScalarMode {
    pub fn float_default() -> Self {
        ScalarMode::Float { eps: 1e-9 }
    }
}

/// Numeric tolerances for float-mode computations. Exact computations ignore it.
///
/// Residual noise (Gram-Schmidt roundoff) and rank decisions need different
/// thresholds, hence the two tiers.
#[derive(Clone, Copy, Debug)]
pub struct Tol {
    /// Allowed residual for membership/constraint checks.
    pub residual: f64,
    /// Pivot threshold for rank decisions.
    pub pivot: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            residual: 1e-9,
            pivot: 1e-7,
        }
    }
}

impl Tol {
    pub fn from_eps(eps: f64) -> Self {
        Tol {
            residual: eps,
            pivot: eps.max(1e-7),
        }
    }
}

/// Common interface of the two scalar backends (exact Q(√2) and f64).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Sum
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Whether equality and sign decisions on this scalar are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_rat(r: &Rational) -> Self;
    fn inv_sqrt2() -> Self;
    fn from_qsqrt2(q: &QSqrt2) -> Self;

    fn recip(&self) -> Option<Self>;
    fn sqrt(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// Negligible under the given tolerance. Exact scalars ignore `eps`.
    fn within(&self, eps: f64) -> bool;
    fn to_f64(&self) -> f64;
}

impl Scalar for QSqrt2 {
    const EXACT: bool = true;

    fn zero() -> Self {
        QSqrt2::zero()
    }
    fn one() -> Self {
        QSqrt2::one()
    }
    fn from_int(v: i64) -> Self {
        QSqrt2::from_int(v)
    }
    fn from_rat(r: &Rational) -> Self {
        QSqrt2::from_rational(r.clone())
    }
    fn inv_sqrt2() -> Self {
        QSqrt2::inv_sqrt2()
    }
    fn from_qsqrt2(q: &QSqrt2) -> Self {
        q.clone()
    }
    fn recip(&self) -> Option<Self> {
        QSqrt2::recip(self)
    }
    fn sqrt(&self) -> Option<Self> {
        QSqrt2::sqrt(self)
    }
    fn is_zero(&self) -> bool {
        QSqrt2::is_zero(self)
    }
    fn within(&self, _eps: f64) -> bool {
        self.is_zero()
    }
    fn to_f64(&self) -> f64 {
        QSqrt2::to_f64(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_rat(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn inv_sqrt2() -> Self {
        std::f64::consts::FRAC_1_SQRT_2
    }
    fn from_qsqrt2(q: &QSqrt2) -> Self {
        q.to_f64()
    }
    fn recip(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(f64::sqrt(*self))
        }
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn within(&self, eps: f64) -> bool {
        self.abs() <= eps
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}
