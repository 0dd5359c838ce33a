//! Scalar fields: exact rationals and prime fields.
//!
//! Every linear-algebra routine in the crate is generic over [`Field`].
//! [`Q`] keeps small numerators and denominators inline and only spills to
//! a big rational when an operation overflows 64 bits.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A commutative field with exact arithmetic.
///
/// The arithmetic methods take references so that big rationals are not
/// cloned on every operation.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational number; fails when the denominator vanishes.
    fn from_q(q: &Q) -> Result<Self>;
    /// 0 for the rationals.
    fn characteristic() -> u64;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// `self -= a * b`, the inner step of every elimination.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub(&a.mul(b));
    }

    fn add_assign(&mut self, rhs: &Self) {
        if !rhs.is_zero() {
            *self = self.add(rhs);
        }
    }
}

/// Exact rational number.
#[derive(Clone)]
pub enum Q {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q {
    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q::from_i128(num as i128, den as i128)
    }

    pub fn integer(v: i64) -> Q {
        Q::Small(v, 1)
    }

    fn from_i128(num: i128, den: i128) -> Q {
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Q::Small(0, 1);
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Q::Small(n, d),
            _ => Q::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Q {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Q::Small(n, d);
        }
        Q::Big(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(n, _) => BigInt::from(*n),
            Q::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(_, d) => BigInt::from(*d),
            Q::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(_, d) => *d == 1,
            Q::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(n, _) => n.signum() as i32,
            Q::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    fn binop(
        &self,
        rhs: &Q,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Q {
        if let (Q::Small(a, b), Q::Small(c, d)) = (self, rhs) {
            if let Some((n, den)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Q::from_i128(n, den);
            }
        }
        Q::from_big(big(self.to_big(), rhs.to_big()))
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q::Small(0, 1)
    }
    fn one() -> Self {
        Q::Small(1, 1)
    }
    fn from_i64(v: i64) -> Self {
        Q::Small(v, 1)
    }
    fn from_q(q: &Q) -> Result<Self> {
        Ok(q.clone())
    }
    fn characteristic() -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }
    fn add(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.binop(
            rhs,
            |a, b, c, d| {
                if b == d {
                    return Some((a + c, b));
                }
                (a * d).checked_add(c * b).map(|n| (n, b * d))
            },
            |x, y| x + y,
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        self.binop(
            rhs,
            |a, b, c, d| {
                if b == d {
                    return Some((a - c, b));
                }
                (a * d).checked_sub(c * b).map(|n| (n, b * d))
            },
            |x, y| x - y,
        )
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Q::zero();
        }
        self.binop(rhs, |a, b, c, d| Some((a * c, b * d)), |x, y| x * y)
    }
    fn neg(&self) -> Self {
        match self {
            Q::Small(n, d) => match n.checked_neg() {
                Some(m) => Q::Small(m, *d),
                None => Q::from_big(-self.to_big()),
            },
            Q::Big(b) => Q::from_big(-(**b).clone()),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            Q::Small(0, _) => None,
            Q::Small(n, d) => Some(Q::from_i128(*d as i128, *n as i128)),
            Q::Big(b) => Some(Q::from_big(b.recip())),
        }
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => a == c && b == d,
            (Q::Big(x), Q::Big(y)) => x == y,
            // canonical form keeps representable values small
            _ => false,
        }
    }
}

impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Q::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Q::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = Error;

    fn from_str(s: &str) -> Result<Q> {
        let s = s.trim();
        let bad = || Error::Parse { line: 0, col: 0, msg: format!("invalid rational literal `{s}`") };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::from_big(BigRational::new(n, d)))
    }
}

impl serde::Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Q {
        Q::Small(v, 1)
    }
}

/// Prime field `GF(P)`; `P` must be prime and below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn from_q(q: &Q) -> Result<Self> {
        let p = BigInt::from(P);
        let n = q.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let d = q.denom().mod_floor(&p).to_u64().unwrap_or(0);
        Fp(n)
            .div(&Fp(d))
            .ok_or_else(|| Error::Field(format!("{q} has no image in GF({P})")))
    }
    fn characteristic() -> u64 {
        P
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_arithmetic() {
        let a = Q::new(1, 2);
        let b = Q::new(1, 3);
        assert_eq!(a.add(&b), Q::new(5, 6));
        assert_eq!(a.sub(&b), Q::new(1, 6));
        assert_eq!(a.mul(&b), Q::new(1, 6));
        assert_eq!(a.div(&b).unwrap(), Q::new(3, 2));
        assert_eq!(Q::new(2, -4), Q::new(-1, 2));
        assert!(Q::zero().inv().is_none());
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Q::integer(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.div(&big).unwrap();
        assert_eq!(back, Q::integer(i64::MAX));
        assert!(matches!(back, Q::Small(..)));
        let m = Q::integer(i64::MIN);
        assert_eq!(m.neg().neg(), m);
    }

    #[test]
    fn parse_literals() {
        assert_eq!("3/6".parse::<Q>().unwrap(), Q::new(1, 2));
        assert_eq!("-7".parse::<Q>().unwrap(), Q::integer(-7));
        assert!("1/0".parse::<Q>().is_err());
    }

    #[test]
    fn prime_field() {
        type F7 = Fp<7>;
        let a = F7::new(3);
        assert_eq!(a.mul(&a.inv().unwrap()), F7::one());
        assert_eq!(F7::from_q(&Q::new(1, 2)).unwrap(), F7::new(4));
        assert!(F7::from_q(&Q::new(1, 7)).is_err());
        assert_eq!(F7::new(-1), F7::new(6));
    }

    proptest! {
        #[test]
        fn q_matches_bigrational(a in -1_000_000i64..1_000_000, b in 1i64..1000, c in i64::MIN/2..i64::MAX/2, d in 1i64..1_000_000) {
            let x = Q::new(a, b);
            let y = Q::new(c, d);
            let bx = x.to_big();
            let by = y.to_big();
            prop_assert_eq!(x.add(&y).to_big(), &bx + &by);
            prop_assert_eq!(x.sub(&y).to_big(), &bx - &by);
            prop_assert_eq!(x.mul(&y).to_big(), &bx * &by);
            prop_assert_eq!(Q::from_big(&bx * &by), x.mul(&y));
        }
    }
}
