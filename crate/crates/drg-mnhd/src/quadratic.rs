//! Exact arithmetic in real quadratic extensions `Q(sqrt(D))`.
//!
//! Values are kept in the canonical form `a + c*sqrt(D)` with `a, c`
//! rational and `D` a square-free integer, `D >= 2` whenever `c != 0`.
//! Rational values carry `radicand = 0`. Because every operation
//! re-normalizes, structural equality coincides with numeric equality, and
//! comparisons are decided exactly by squaring (never through floats).
//!
//! Two irrational values with different radicands cannot be combined; the
//! operations panic on such a mix. Certification of a single parameter set
//! only ever works inside one fixed extension, so the restriction is not a
//! limitation in practice.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `rational + coefficient * sqrt(radicand)`, canonicalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticNumber {
    rational: BigRational,
    coefficient: BigRational,
    radicand: u64,
}

/// Splits `m` as `s^2 * d` with `d` square-free; returns `(s, d)`.
fn square_free_decompose(mut m: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 2u64;
    while f * f <= m {
        while m.is_multiple_of(f * f) {
            m /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, m)
}

impl QuadraticNumber {
    fn normalized(rational: BigRational, coefficient: BigRational, radicand: u64) -> Self {
        if coefficient.is_zero() || radicand == 0 {
            return Self { rational, coefficient: BigRational::zero(), radicand: 0 };
        }
        let (s, d) = square_free_decompose(radicand);
        let coefficient = coefficient * BigRational::from_integer(BigInt::from(s));
        if d == 1 {
            Self { rational: rational + coefficient, coefficient: BigRational::zero(), radicand: 0 }
        } else {
            Self { rational, coefficient, radicand: d }
        }
    }

    pub fn new(rational: BigRational, coefficient: BigRational, radicand: u64) -> Self {
        Self::normalized(rational, coefficient, radicand)
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { rational: r, coefficient: BigRational::zero(), radicand: 0 }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `sqrt(radicand)` as an exact value.
    pub fn sqrt(radicand: u64) -> Self {
        Self::normalized(BigRational::zero(), BigRational::one(), radicand)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 0
    }

    /// Unwraps a value known to be rational.
    ///
    /// # Panics
    /// If the value has a nonzero irrational part.
    pub fn expect_rational(self) -> BigRational {
        assert!(self.is_rational(), "value is irrational: {self}");
        self.rational
    }

    /// Common radicand of two operands.
    ///
    /// # Panics
    /// If both are irrational with different radicands.
    fn join(&self, other: &Self) -> u64 {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => d,
            (a, b) if a == b => a,
            (a, b) => panic!("incompatible radicands: sqrt({a}) vs sqrt({b})"),
        }
    }

    /// Exact sign: -1, 0, or +1.
    pub fn signum(&self) -> i8 {
        let ra = match self.rational.cmp(&BigRational::zero()) {
            Ordering::Less => -1i8,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
        if self.radicand == 0 {
            return ra;
        }
        let rc = if self.coefficient.is_negative() { -1i8 } else { 1 };
        if ra == 0 {
            return rc;
        }
        if ra == rc {
            return ra;
        }
        // Opposite signs: compare a^2 against c^2 D. sqrt(D) is irrational,
        // so equality would force a = c = 0, already excluded.
        let a2 = &self.rational * &self.rational;
        let c2d = &self.coefficient
            * &self.coefficient
            * BigRational::from_integer(BigInt::from(self.radicand));
        match a2.cmp(&c2d) {
            Ordering::Greater => ra,
            Ordering::Less => rc,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().expect("rational part out of f64 range");
        if self.radicand == 0 {
            return a;
        }
        let c = self.coefficient.to_f64().expect("coefficient out of f64 range");
        a + c * (self.radicand as f64).sqrt()
    }
}

impl From<BigRational> for QuadraticNumber {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let radicand = self.join(&rhs);
        Self::normalized(
            self.rational + rhs.rational,
            self.coefficient + rhs.coefficient,
            radicand,
        )
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self { rational: -self.rational, coefficient: -self.coefficient, radicand: self.radicand }
    }
}

impl Mul for QuadraticNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let radicand = self.join(&rhs);
        let d = BigRational::from_integer(BigInt::from(radicand));
        let rational = &self.rational * &rhs.rational + &self.coefficient * &rhs.coefficient * d;
        let coefficient = &self.rational * &rhs.coefficient + &self.coefficient * &rhs.rational;
        Self::normalized(rational, coefficient, radicand)
    }
}

impl Div for QuadraticNumber {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let radicand = self.join(&rhs);
        let d = BigRational::from_integer(BigInt::from(radicand));
        // 1/(a + c sqrt(D)) = (a - c sqrt(D)) / (a^2 - c^2 D)
        let norm = &rhs.rational * &rhs.rational - &rhs.coefficient * &rhs.coefficient * d;
        assert!(!norm.is_zero(), "division by zero");
        let inverse = Self::normalized(
            &rhs.rational / &norm,
            -(&rhs.coefficient / &norm),
            radicand,
        );
        self * inverse
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.coefficient.is_zero()
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    /// Exact order inside one extension.
    ///
    /// # Panics
    /// If the operands are irrational with different radicands.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.clone() - other.clone();
        match diff.signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 0 {
            return write!(f, "{}", self.rational);
        }
        let root = |c: &BigRational, f: &mut fmt::Formatter<'_>| {
            if c == &BigRational::one() {
                write!(f, "sqrt({})", self.radicand)
            } else {
                write!(f, "{}*sqrt({})", c, self.radicand)
            }
        };
        if self.rational.is_zero() {
            if self.coefficient.is_negative() {
                write!(f, "-")?;
            }
            return root(&self.coefficient.abs(), f);
        }
        write!(f, "{}", self.rational)?;
        write!(f, "{}", if self.coefficient.is_negative() { " - " } else { " + " })?;
        root(&self.coefficient.abs(), f)
    }
}
