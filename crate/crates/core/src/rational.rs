//! Exact rational numbers with an unbounded range.
//!
//! Values that fit a reduced `i64` fraction are stored inline and combined
//! through `i128` intermediates; anything larger is promoted to a
//! [`BigRational`]. Every value is kept in lowest terms with a positive
//! denominator, and the representation is canonical (a value is never held as
//! `Big` when it fits the inline form), so equality is structural.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone)]
enum Repr {
    /// Reduced fraction, `den > 0`, `num != i64::MIN`.
    Small { num: i64, den: i64 },
    /// Reduced fraction that does not fit `Small`.
    Big(BigRational),
}

/// An exact rational number in lowest terms.
#[derive(Clone)]
pub struct Rational(Repr);

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
        return gcd_u64(a as u64, b as u64) as u128;
    }
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    /// `num / den` for small constants.
    ///
    /// Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    /// `num / den`, rejecting a zero denominator.
    pub fn try_new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_bigints(num, den))
    }

    pub fn integer(v: i64) -> Self {
        Self::from_i128(v as i128, 1)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        if den == 1 && num > i64::MIN as i128 && num <= i64::MAX as i128 {
            return Rational(Repr::Small {
                num: num as i64,
                den: 1,
            });
        }
        let negative = (num < 0) != (den < 0);
        let (un, ud) = (num.unsigned_abs(), den.unsigned_abs());
        if un <= u64::MAX as u128 && ud <= u64::MAX as u128 {
            let (un, ud) = (un as u64, ud as u64);
            let g = gcd_u64(un, ud);
            let (un, ud) = (un / g, ud / g);
            if un <= i64::MAX as u64 && ud <= i64::MAX as u64 {
                let n = un as i64;
                return Rational(Repr::Small {
                    num: if negative { -n } else { n },
                    den: ud as i64,
                });
            }
        }
        Self::from_wide(negative, un, ud)
    }

    #[cold]
    fn from_wide(negative: bool, un: u128, ud: u128) -> Self {
        let g = gcd_u128(un, ud);
        let (un, ud) = (un / g, ud / g);
        if un <= i64::MAX as u128 && ud <= i64::MAX as u128 {
            let n = un as i64;
            Rational(Repr::Small {
                num: if negative { -n } else { n },
                den: ud as i64,
            })
        } else {
            let sign = if negative { Sign::Minus } else { Sign::Plus };
            let n = BigInt::from_biguint(sign, un.into());
            let d = BigInt::from(ud);
            Rational(Repr::Big(BigRational::new_raw(n, d)))
        }
    }

    fn from_bigints(num: BigInt, den: BigInt) -> Self {
        if let (Some(n), Some(d)) = (num.to_i128(), den.to_i128()) {
            if n != i128::MIN && d != i128::MIN {
                return Self::from_i128(n, d);
            }
        }
        Self::from_big(BigRational::new(num, den))
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small { num: n, den: d });
            }
        }
        Rational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// True when the value is an integer `>= 1`.
    pub fn is_positive_integer(&self) -> bool {
        self.is_integer() && self.is_positive()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Option<Self> {
        Rational::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Self::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Self::from_big(self.to_big() / rhs.to_big()),
        })
    }

    /// True when `divisor` divides this value, which must be an integer.
    pub fn divisible_by(&self, divisor: i64) -> bool {
        if divisor == 0 || !self.is_integer() {
            return false;
        }
        match &self.0 {
            Repr::Small { num, .. } => (*num as i128 % divisor as i128) == 0,
            Repr::Big(r) => r.numer().is_multiple_of(&BigInt::from(divisor)),
        }
    }

    /// Decimal rendering with `digits` significant digits, rounded half away
    /// from zero. Computed exactly; intended for display only.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let num = self.numer();
        let den = self.denom();
        if num.is_zero() {
            let mut out = String::from("0");
            if digits > 1 {
                out.push('.');
                out.extend(core::iter::repeat('0').take(digits - 1));
            }
            return out;
        }
        let negative = num.is_negative();
        let num = num.abs();
        let ten = BigInt::from(10u8);
        let pow10 = |e: usize| num_traits::pow(ten.clone(), e);

        // exponent e with 10^e <= num/den < 10^(e+1)
        let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
        let below = |e: i64| -> bool {
            if e >= 0 {
                num < &den * pow10(e as usize)
            } else {
                &num * pow10((-e) as usize) < den
            }
        };
        if below(exp) {
            exp -= 1;
        }

        let shift = digits as i64 - 1 - exp;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&num * pow10(shift as usize), den.clone())
        } else {
            (num.clone(), &den * pow10((-shift) as usize))
        };
        let (mut mantissa, rem) = scaled_num.div_rem(&scaled_den);
        if rem * 2u8 >= scaled_den {
            mantissa += 1u8;
        }
        if mantissa == pow10(digits) {
            mantissa /= 10u8;
            exp += 1;
        }
        let body = mantissa.to_string();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if exp >= digits as i64 - 1 {
            out.push_str(&body);
            out.extend(core::iter::repeat('0').take((exp - (digits as i64 - 1)) as usize));
        } else if exp >= 0 {
            let split = exp as usize + 1;
            out.push_str(&body[..split]);
            out.push('.');
            out.push_str(&body[split..]);
        } else {
            out.push_str("0.");
            out.extend(core::iter::repeat('0').take((-exp - 1) as usize));
            out.push_str(&body);
        }
        out
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::integer(v)
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Self::from_i128(v as i128, 1)
    }
}

impl From<i128> for Rational {
    fn from(v: i128) -> Self {
        if v == i128::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(v)));
        }
        Self::from_i128(v, 1)
    }
}

impl From<u128> for Rational {
    fn from(v: u128) -> Self {
        match i128::try_from(v) {
            Ok(v) => Self::from(v),
            Err(_) => Self::from_big(BigRational::from_integer(BigInt::from(v))),
        }
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_bigints(v, BigInt::one())
    }
}

impl From<&BigInt> for Rational {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(n) if n != i64::MIN => Rational(Repr::Small { num: n, den: 1 }),
            _ => Self::from_big(BigRational::from_integer(v.clone())),
        }
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

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        matches!(self.0, Repr::Small { num, den: 1 } if num == *other)
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
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

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::integer(*other)))
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, including `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| -> Result<BigInt, Error> {
            BigInt::from_str(part.trim()).map_err(|_| Error::ParseRational(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::try_new(parse(n)?, parse(d)?),
            None => Ok(Rational::from(parse(s)?)),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small {
                num: -num,
                den: *den,
            }),
            Repr::Big(r) => Rational::from_big(-r.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

fn add_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    match (&lhs.0, &rhs.0) {
        (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_add(*c)
        {
            Some(v) if v != i64::MIN => Rational(Repr::Small { num: v, den: 1 }),
            _ => Rational::from_i128(*a as i128 + *c as i128, 1),
        },
        (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
            if b == d {
                Rational::from_i128(*a as i128 + *c as i128, *b as i128)
            } else {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
        }
        _ => Rational::from_big(lhs.to_big() + rhs.to_big()),
    }
}

fn sub_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    add_ref(lhs, &-rhs)
}

fn mul_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    match (&lhs.0, &rhs.0) {
        (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_mul(*c)
        {
            Some(v) if v != i64::MIN => Rational(Repr::Small { num: v, den: 1 }),
            _ => Rational::from_i128(*a as i128 * *c as i128, 1),
        },
        (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
            Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
        }
        _ => Rational::from_big(lhs.to_big() * rhs.to_big()),
    }
}

fn div_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    lhs.checked_div(rhs)
        .expect("division of a rational by zero")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(self, &rhs)
            }
        }
        impl $trait<i64> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                $imp(self, &Rational::integer(rhs))
            }
        }
        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                $imp(&self, &Rational::integer(rhs))
            }
        }
        impl $trait<Rational> for i64 {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(&Rational::integer(self), &rhs)
            }
        }
        impl $trait<&Rational> for i64 {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(&Rational::integer(self), rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, v| acc + v)
    }
}
