//! Exact rational numbers.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are stored
//! inline and combined with `i128` intermediates; everything else falls back
//! to `num_rational::BigRational`. The representation is canonical, so
//! structural equality and hashing agree with numeric equality.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Reduced; never representable as `Small`.
    Big(BigRational),
}

/// An exact rational number in canonical form.
#[derive(Clone)]
pub struct Rational(Repr);

/// Error returned when parsing a [`Rational`] from text fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}` (expected `p` or `p/q` with q != 0)", self.input)
    }
}

impl core::error::Error for ParseRationalError {}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small { num: 0, den: 1 });
    pub const ONE: Rational = Rational(Repr::Small { num: 1, den: 1 });

    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub const fn from_integer(value: i64) -> Rational {
        Rational(Repr::Small { num: value, den: 1 })
    }

    pub fn from_big(value: BigRational) -> Rational {
        // BigRational keeps itself reduced with a positive denominator.
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(value)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => b.clone(),
        }
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let negative = (num < 0) != (den < 0);
        let un = num.unsigned_abs();
        let ud = den.unsigned_abs();
        let g = un.gcd(&ud);
        let (un, ud) = if g > 1 { (un / g, ud / g) } else { (un, ud) };
        if ud <= i64::MAX as u128 {
            let small = if negative {
                if un <= (i64::MAX as u128) + 1 {
                    Some((un as i128).wrapping_neg() as i64)
                } else {
                    None
                }
            } else if un <= i64::MAX as u128 {
                Some(un as i64)
            } else {
                None
            };
            if let Some(num) = small {
                return Rational(Repr::Small { num, den: ud as i64 });
            }
        }
        let mut n = BigInt::from(un);
        if negative {
            n = -n;
        }
        Rational(Repr::Big(BigRational::new_raw(n, BigInt::from(ud))))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// `Some(n)` when the value is an integer fitting in `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small { num, den: 1 } => Some(num),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    /// Sign as an ordering relative to zero.
    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small { num, .. } => num.cmp(&0),
            Repr::Big(b) => {
                if b.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn abs(&self) -> Rational {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Arithmetic mean of `self` and `other`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        (self + other) / Rational::from_integer(2)
    }

    /// Nearest `f64`; only meant for display purposes such as rendering.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn min<'a>(&'a self, other: &'a Rational) -> &'a Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max<'a>(&'a self, other: &'a Rational) -> &'a Rational {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<i32> for Rational {
    fn from(value: i32) -> Self {
        Rational::from_integer(value as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(value))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    a.cmp(c)
                } else {
                    (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
                }
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError { input: s.into() };
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = n.parse().map_err(|_| err())?;
        let den: BigInt = match d {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Rational::from_i128(-(*num as i128), *den as i128),
            },
            Repr::Big(b) => Rational::from_big(-b.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        -&self
    }
}

fn add_ref(x: &Rational, y: &Rational) -> Rational {
    if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&x.0, &y.0) {
        if *b == 1 && *d == 1 {
            if let Some(s) = a.checked_add(*c) {
                return Rational::from_integer(s);
            }
        }
        let lhs = *a as i128 * *d as i128;
        let rhs = *c as i128 * *b as i128;
        if let Some(num) = lhs.checked_add(rhs) {
            return Rational::from_i128(num, *b as i128 * *d as i128);
        }
    }
    Rational::from_big(x.to_big() + y.to_big())
}

fn sub_ref(x: &Rational, y: &Rational) -> Rational {
    if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&x.0, &y.0) {
        if *b == 1 && *d == 1 {
            if let Some(s) = a.checked_sub(*c) {
                return Rational::from_integer(s);
            }
        }
        let lhs = *a as i128 * *d as i128;
        let rhs = *c as i128 * *b as i128;
        if let Some(num) = lhs.checked_sub(rhs) {
            return Rational::from_i128(num, *b as i128 * *d as i128);
        }
    }
    Rational::from_big(x.to_big() - y.to_big())
}

fn mul_ref(x: &Rational, y: &Rational) -> Rational {
    if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&x.0, &y.0) {
        return Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
    }
    Rational::from_big(x.to_big() * y.to_big())
}

fn div_ref(x: &Rational, y: &Rational) -> Rational {
    assert!(!y.is_zero(), "rational division by zero");
    if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&x.0, &y.0) {
        return Rational::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128);
    }
    Rational::from_big(x.to_big() / y.to_big())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $func(self, rhs)
            }
        }
        impl<'b> $trait<&'b Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $func(&self, rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $func(self, &rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $func(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);
