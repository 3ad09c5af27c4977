//! Exact scalars: rationals and elements `a + b*sqrt(d)` of a quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// A rational number or an element of `Q(sqrt(d))`.
///
/// `d` is a squarefree integer different from 0 and 1. Elements with `b = 0`
/// are stored as plain rationals (`d = 0`), so a rational can be combined with
/// any quadratic element. Combining elements of two different quadratic
/// fields is an error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    d: i64,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Squarefree decomposition of a nonzero integer: `n = k^2 * s` with `s` squarefree.
pub fn squarefree_split(n: &BigInt) -> (BigInt, i64) {
    assert!(!n.is_zero(), "squarefree_split of zero");
    let sign: i64 = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= &p;
            }
        }
        p += 1;
    }
    s *= m;
    let s = s.to_i64().expect("squarefree part fits in i64") * sign;
    (k, s)
}

fn is_squarefree(d: i64) -> bool {
    d != 0 && d != 1 && squarefree_split(&BigInt::from(d)).1 == d
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Square root of a nonnegative rational square, if it is one.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = exact_int_sqrt(q.numer())?;
    let d = exact_int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::zero(), d: 0 }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::rational(rat(n, d))
    }

    pub fn rational(a: BigRational) -> Self {
        Scalar { a, b: BigRational::zero(), d: 0 }
    }

    /// `a + b*sqrt(d)`; `d` must be squarefree and not 0 or 1.
    pub fn quadratic(a: BigRational, b: BigRational, d: i64) -> Result<Self, AlgebraError> {
        if !is_squarefree(d) {
            return Err(AlgebraError::BadField(d));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() {
            Scalar { a, b, d: 0 }
        } else {
            Scalar { a, b, d }
        }
    }

    /// `sqrt(d)` for a squarefree `d`.
    pub fn sqrt_of(d: i64) -> Self {
        Self::sqrt_rational(&BigRational::from_integer(BigInt::from(d)))
    }

    /// The square root of a rational `q`, written as `c*sqrt(s)` with `s`
    /// squarefree, or a rational if `q` is a square. Negative `q` gives an
    /// imaginary quadratic element.
    pub fn sqrt_rational(q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        // sqrt(n/m) = sqrt(n*m)/m
        let nm = q.numer() * q.denom();
        let (k, s) = squarefree_split(&nm);
        let c = BigRational::new(k, q.denom().clone());
        if s == 1 {
            Self::rational(c)
        } else {
            Self::normalized(BigRational::zero(), c, s)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.d == 0 {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Rational part `a`.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `sqrt(d)`.
    pub fn im(&self) -> &BigRational {
        &self.b
    }

    /// Field discriminant `d`, or 0 for a rational.
    pub fn field(&self) -> i64 {
        self.d
    }

    /// Integer value if this is an integer.
    pub fn to_i64(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            q.numer().to_i64()
        } else {
            None
        }
    }

    fn join_field(&self, other: &Self) -> Result<i64, AlgebraError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(AlgebraError::FieldMismatch(d1, d2)),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.d == 0 && o.d == 0 {
            return Ok(Self::rational(&self.a + &o.a));
        }
        let d = self.join_field(o)?;
        Ok(Self::normalized(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.d == 0 && o.d == 0 {
            return Ok(Self::rational(&self.a - &o.a));
        }
        let d = self.join_field(o)?;
        Ok(Self::normalized(&self.a - &o.a, &self.b - &o.b, d))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.d == 0 && o.d == 0 {
            return Ok(Self::rational(&self.a * &o.a));
        }
        let d = self.join_field(o)?;
        let dq = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &o.a + &self.b * &o.b * dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(&o.inv()?)
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> Self {
        Self::normalized(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.d == 0 {
            return Ok(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -(&self.b / &n), self.d))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root inside the field of `self` (or inside Q for rationals).
    pub fn sqrt_in_field(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.d == 0 {
            return rational_sqrt(&self.a).map(Self::rational);
        }
        // (x + y sqrt d)^2 = a + b sqrt d  with  x^2 + d y^2 = a, 2xy = b.
        let n = rational_sqrt(&self.norm())?;
        let two = rat(2, 1);
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(x) = rational_sqrt(&cand) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let r = Self::normalized(x, y, self.d);
                if &(&r * &r) == self {
                    return Some(r);
                }
            }
        }
        // purely "imaginary" root: (y sqrt d)^2 = d y^2 requires b = 0, handled above
        None
    }

    /// Sign of a real element (used for ordering rational data only).
    pub fn rational_cmp(&self, o: &Self) -> Option<Ordering> {
        match (self.as_rational(), o.as_rational()) {
            (Some(x), Some(y)) => Some(x.cmp(y)),
            _ => None,
        }
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            return f.write_str(&fmt_rat(&self.a));
        }
        let mut s = String::from("(");
        if !self.a.is_zero() {
            s.push_str(&fmt_rat(&self.a));
            s.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            s.push('-');
        }
        let babs = self.b.abs();
        if !babs.is_one() {
            s.push_str(&fmt_rat(&babs));
            s.push('*');
        }
        s.push_str(&format!("sqrt({}))", self.d));
        f.write_str(&s)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::rational(BigRational::from_integer(n))
    }
}

/// Operators panic on a field mismatch; use the `try_*` methods where mixed
/// fields can legitimately occur.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, o: &'a Scalar) -> Scalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, o: Scalar) -> Scalar {
                (&self).$try(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, o: &'a Scalar) -> Scalar {
                (&self).$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(-self.a, -self.b, self.d)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(-self.a.clone(), -self.b.clone(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_arithmetic() {
        let w = (Scalar::int(-1) + Scalar::sqrt_of(-3)) / Scalar::int(2);
        // omega^3 = 1, 1 + omega + omega^2 = 0
        assert!(w.pow(3).is_one());
        assert!((Scalar::one() + w.clone() + w.pow(2)).is_zero());
        assert_eq!(w.to_string(), "(-1/2+1/2*sqrt(-3))");
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let r5 = Scalar::sqrt_of(5);
        let r3 = Scalar::sqrt_of(-3);
        assert!(matches!(r5.try_add(&r3), Err(AlgebraError::FieldMismatch(5, -3))));
        assert!(r5.try_add(&Scalar::int(2)).is_ok());
    }

    #[test]
    fn sqrt_of_rationals() {
        let x = Scalar::sqrt_rational(&rat(-3, 5));
        assert_eq!(x.field(), -15);
        assert_eq!(&x * &x, Scalar::ratio(-3, 5));
        assert_eq!(Scalar::sqrt_rational(&rat(9, 4)), Scalar::ratio(3, 2));
        let y = Scalar::sqrt_rational(&rat(1, 125));
        assert_eq!(&y * &y, Scalar::ratio(1, 125));
        assert_eq!(y.field(), 5);
    }

    #[test]
    fn sqrt_in_quadratic_field() {
        let s5 = Scalar::sqrt_of(5);
        let x = Scalar::int(3) + Scalar::int(2) * s5.clone();
        let sq = &x * &x;
        let r = sq.sqrt_in_field().unwrap();
        assert!(r == x || r == -x);
        assert!(s5.sqrt_in_field().is_none());
    }
}
