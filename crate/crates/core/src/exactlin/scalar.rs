//! Field elements: unbounded rationals with an inline small representation,
//! and residues modulo a prime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Input {
                field: "field".into(),
                message: format!("{p} is not a prime"),
            })
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::Small { num: v, den: 1 }),
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses `"n"` or `"n/d"`. Over a prime field the fraction is reduced modulo p.
    pub fn parse(self, s: &str) -> Result<Scalar, String> {
        let q: Rational = s.parse()?;
        self.from_rational(&q)
    }

    pub fn from_rational(self, q: &Rational) -> Result<Scalar, String> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let big = q.to_big();
                let pm = BigInt::from(p);
                let num = big.numer().mod_floor(&pm).to_u64().unwrap();
                let den = big.denom().mod_floor(&pm).to_u64().unwrap();
                if den == 0 {
                    return Err(format!("denominator of {q} vanishes modulo {p}"));
                }
                let n = Scalar::Fp { value: num, modulus: p };
                let d = Scalar::Fp { value: den, modulus: p };
                Ok(&n / &d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field, Error> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        let rest = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("Fp"))
            .ok_or_else(|| Error::Input {
                field: "field".into(),
                message: format!("expected \"Q\" or \"Fp:<p>\", found {s:?}"),
            })?;
        let p: u64 = rest.parse().map_err(|_| Error::Input {
            field: "field".into(),
            message: format!("cannot read prime from {s:?}"),
        })?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Field, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i.saturating_mul(i) <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// A rational number kept in lowest terms. Values that fit in `i64` stay
/// inline; anything larger spills to a heap `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rational {
    pub fn zero() -> Rational {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational::Small { num: n, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        if num == 0 {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small { num: n, den: d },
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(b: BigRational) -> Rational {
        // BigRational arithmetic keeps lowest terms with positive denominator.
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small { num: n, den: d },
            _ => Rational::Big(Box::new(b)),
        }
    }

    pub fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg(&self) -> Rational {
        match self {
            Rational::Small { num, den } => Rational::from_i128(-(*num as i128), *den as i128),
            Rational::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }

    pub fn sub(&self, o: &Rational) -> Rational {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rational::Small { num, den } => Rational::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small { num, .. } => num.signum() as i32,
            Rational::Big(b) => {
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
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Rational, String> {
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("malformed rational {s:?}"))?;
        let d: BigInt = d.parse().map_err(|_| format!("malformed rational {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

/// An element of the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => {
                assert!(*value != 0, "division by zero");
                Scalar::Fp {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut r = 1u128;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    r as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {:?} vs {:?}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) if p == q => {
                Scalar::Fp {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, o),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rational_overflow_spills_to_big() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let s = &big + &big;
        assert!(matches!(&s, Scalar::Q(Rational::Big(_))));
        let back = &s - &big;
        assert_eq!(back, big);
        assert!(matches!(&back, Scalar::Q(Rational::Small { .. })));
        let m = q.from_i64(i64::MIN);
        assert_eq!(-(-&m), m);
    }

    #[test]
    fn parse_and_display() {
        let q = Field::Rational;
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse(" 7 ").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
        let f7 = Field::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f7.parse("1/2").unwrap(), f7.from_i64(4));
        assert!(f7.parse("1/7").is_err());
        assert!(Field::prime(9).is_err());
        assert_eq!("Fp:13".parse::<Field>().unwrap(), Field::Prime(13));
    }

    #[test]
    fn rational_field_axioms() {
        let q = |n: i64, d: i64| Field::Rational.from_rational(&Rational::from_big(BigRational::new(n.into(), d.into()))).unwrap();
        let values = [q(0, 1), q(1, 1), q(-3, 7), q(i64::MAX, 1), q(i64::MIN, 3), q(5, i64::MAX), q(-1, i64::MAX - 1)];
        for a in &values {
            for b in &values {
                for c in &values {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
                assert_eq!(&(a - b) + b, a.clone());
                if !b.is_zero() {
                    assert_eq!(&(a / b) * b, a.clone());
                }
            }
        }
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(1_000_003);
        for v in [1, 2, 3, 999_983, 1_000_002] {
            let x = f.from_i64(v);
            assert!((&x * &x.inv()).is_one());
        }
    }
}
