//! Exact coefficient domains: the rationals, the integers and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A coefficient domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Rational,
    Integer,
    /// Integers modulo a prime. Construct with [`Domain::prime`].
    Prime(u64),
}

impl Domain {
    /// `Z/p` for a prime `p`; composite moduli are rejected.
    pub fn prime(p: u64) -> Result<Domain> {
        if is_prime(p) {
            Ok(Domain::Prime(p))
        } else {
            Err(Error::CompositeModulus(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integer)
    }

    /// 0 for the rationals and integers, `p` for `Z/p`.
    pub fn characteristic(self) -> u64 {
        match self {
            Domain::Prime(p) => p,
            _ => 0,
        }
    }

    /// Whether every integer in `1..=k` is a unit of the domain.
    pub fn inverts_up_to(self, k: u64) -> bool {
        match self {
            Domain::Rational => true,
            Domain::Integer => k <= 1,
            Domain::Prime(p) => k < p,
        }
    }

    pub fn zero(self) -> Coeff {
        Coeff::from_i64(self, 0)
    }

    pub fn one(self) -> Coeff {
        Coeff::from_i64(self, 1)
    }

    pub fn require_field(self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self))
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "Q"),
            Domain::Integer => write!(f, "Z"),
            Domain::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `Q`, `Z` and `Fp:<p>`.
    fn from_str(s: &str) -> Result<Domain> {
        let t = s.trim();
        match t {
            "Q" | "q" => Ok(Domain::Rational),
            "Z" | "z" => Ok(Domain::Integer),
            _ => {
                let rest = t
                    .strip_prefix("Fp:")
                    .or_else(|| t.strip_prefix("fp:"))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown ring `{t}`")))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad modulus `{rest}`")))?;
                Domain::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar tagged with its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Integer(BigInt),
    Modular { value: u64, modulus: u64 },
}

fn mod_reduce(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let p = p as u128;
    let mut acc = 1u128;
    let mut base = b as u128 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u64
}

impl Coeff {
    pub fn from_i64(domain: Domain, v: i64) -> Coeff {
        Coeff::from_bigint(domain, &BigInt::from(v))
    }

    pub fn from_bigint(domain: Domain, v: &BigInt) -> Coeff {
        match domain {
            Domain::Rational => Coeff::Rational(BigRational::from_integer(v.clone())),
            Domain::Integer => Coeff::Integer(v.clone()),
            Domain::Prime(p) => Coeff::Modular {
                value: mod_reduce(v, p),
                modulus: p,
            },
        }
    }

    /// The fraction `num/den` in `domain`. Fails when `den` is not a unit.
    pub fn from_fraction(domain: Domain, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        match domain {
            Domain::Rational => Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone()))),
            Domain::Integer => {
                let (q, r) = num.div_rem(den);
                if r.is_zero() {
                    Ok(Coeff::Integer(q))
                } else {
                    Err(Error::InvalidArgument(format!(
                        "{num}/{den} is not an integer"
                    )))
                }
            }
            Domain::Prime(_) => {
                let d = Coeff::from_bigint(domain, den);
                let inv = d.inv().ok_or_else(|| {
                    Error::UnsupportedCharacteristic(format!("{den} is zero in {domain}"))
                })?;
                Ok(Coeff::from_bigint(domain, num).mul(&inv))
            }
        }
    }

    /// Parses `a` or `a/b` (optionally signed) into `domain`.
    pub fn parse(domain: Domain, s: &str) -> Result<Coeff> {
        let t = s.trim();
        let bad = || Error::InvalidArgument(format!("bad scalar `{t}`"));
        match t.split_once('/') {
            Some((a, b)) => {
                let num: BigInt = a.trim().parse().map_err(|_| bad())?;
                let den: BigInt = b.trim().parse().map_err(|_| bad())?;
                Coeff::from_fraction(domain, &num, &den)
            }
            None => {
                let v: BigInt = t.parse().map_err(|_| bad())?;
                Ok(Coeff::from_bigint(domain, &v))
            }
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Coeff::Rational(_) => Domain::Rational,
            Coeff::Integer(_) => Domain::Integer,
            Coeff::Modular { modulus, .. } => Domain::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Integer(i) => i.is_zero(),
            Coeff::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Integer(i) => i.is_one(),
            Coeff::Modular { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Coeff) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.domain(),
                right: other.domain(),
            })
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    /// Sum. Panics if the domains differ; see [`Coeff::checked_add`].
    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Integer(a), Coeff::Integer(b)) => Coeff::Integer(a + b),
            (
                Coeff::Modular { value: a, modulus: p },
                Coeff::Modular { value: b, modulus: p2 },
            ) if p == p2 => Coeff::Modular {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("coefficient domain mismatch: {} vs {}", self.domain(), other.domain()),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Integer(a) => Coeff::Integer(-a),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    /// Product. Panics if the domains differ; see [`Coeff::checked_mul`].
    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Integer(a), Coeff::Integer(b)) => Coeff::Integer(a * b),
            (
                Coeff::Modular { value: a, modulus: p },
                Coeff::Modular { value: b, modulus: p2 },
            ) if p == p2 => Coeff::Modular {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => panic!("coefficient domain mismatch: {} vs {}", self.domain(), other.domain()),
        }
    }

    /// Multiplicative inverse, if it exists in the domain.
    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coeff::Rational(a) => Some(Coeff::Rational(a.recip())),
            Coeff::Integer(a) => {
                if a.abs().is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
            Coeff::Modular { value, modulus } => Some(Coeff::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// `self / other`; `None` when `other` is not a unit.
    pub fn div(&self, other: &Coeff) -> Option<Coeff> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Converts to another domain. Rationals map into `Z/p` when the
    /// denominator is invertible and into `Z` when integral.
    pub fn convert(&self, target: Domain) -> Result<Coeff> {
        match self {
            Coeff::Rational(r) => Coeff::from_fraction(target, r.numer(), r.denom()),
            Coeff::Integer(i) => Ok(Coeff::from_bigint(target, i)),
            Coeff::Modular { modulus, .. } => {
                if target == Domain::Prime(*modulus) {
                    Ok(self.clone())
                } else {
                    Err(Error::DomainMismatch {
                        left: self.domain(),
                        right: target,
                    })
                }
            }
        }
    }

    /// Integer value when the coefficient is integral (modular values use
    /// the representative in `[0, p)`).
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Coeff::Rational(r) => r.is_integer().then(|| r.to_integer()),
            Coeff::Integer(i) => Some(i.clone()),
            Coeff::Modular { value, .. } => Some(BigInt::from(*value)),
        }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Coeff::Rational(r) => Some(r.clone()),
            Coeff::Integer(i) => Some(BigRational::from_integer(i.clone())),
            Coeff::Modular { .. } => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Integer(i) => i.is_negative(),
            Coeff::Modular { .. } => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Integer(i) => write!(f, "{i}"),
            Coeff::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl serde::Serialize for Coeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `k!` as an arbitrary-precision integer.
pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(Domain::prime(6), Err(Error::CompositeModulus(6)));
        assert_eq!(Domain::prime(1), Err(Error::CompositeModulus(1)));
        assert_eq!(Domain::prime(7), Ok(Domain::Prime(7)));
    }

    #[test]
    fn canonical_forms() {
        let q = Coeff::parse(Domain::Rational, "4/-6").unwrap();
        assert_eq!(q.to_string(), "-2/3");
        let m = Coeff::from_i64(Domain::Prime(5), -1);
        assert_eq!(m.to_string(), "4");
        let half = Coeff::parse(Domain::Prime(7), "1/2").unwrap();
        assert_eq!(half.mul(&Coeff::from_i64(Domain::Prime(7), 2)), Domain::Prime(7).one());
    }

    #[test]
    fn mixed_domains_are_an_error() {
        let a = Domain::Rational.one();
        let b = Domain::Integer.one();
        assert!(matches!(a.checked_add(&b), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn integer_inverses() {
        assert!(Coeff::from_i64(Domain::Integer, 2).inv().is_none());
        assert_eq!(
            Coeff::from_i64(Domain::Integer, -1).inv(),
            Some(Coeff::from_i64(Domain::Integer, -1))
        );
    }

    #[test]
    fn parse_domains() {
        assert_eq!("Q".parse::<Domain>().unwrap(), Domain::Rational);
        assert_eq!("Fp:3".parse::<Domain>().unwrap(), Domain::Prime(3));
        assert!("Fp:4".parse::<Domain>().is_err());
        assert!("R".parse::<Domain>().is_err());
    }
}
