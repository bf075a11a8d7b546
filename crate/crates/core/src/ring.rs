//! Exact arithmetic over the supported coefficient rings.
//!
//! A [`RingSpec`] names one of ℤ, ℚ, ℤ/m or 𝔽_p; a [`RingElement`] carries its
//! spec alongside a canonical representative (an arbitrary-precision integer,
//! a reduced fraction, or a residue in `[0, m)`), so structural equality is
//! ring equality.
//!
//! The `try_*` methods check that both operands live in the same ring. The
//! operator impls on references skip that check outside debug builds; they
//! are meant for code that has already established a common ring, such as the
//! coefficient loops of series and matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersMod(u64),
    PrimeField(u64),
}

impl RingSpec {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(RingSpec::IntegersMod(m))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(RingSpec::PrimeField(p))
    }

    /// The modulus of ℤ/m or 𝔽_p; `None` for ℤ and ℚ.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingSpec::IntegersMod(m) | RingSpec::PrimeField(m) => Some(m),
            RingSpec::Integers | RingSpec::Rationals => None,
        }
    }

    /// Additive order of 1, with 0 standing for "infinite".
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.modulus().is_none()
    }

    /// True when the ring has no zero divisors.
    pub fn is_domain(&self) -> bool {
        match *self {
            RingSpec::Integers | RingSpec::Rationals | RingSpec::PrimeField(_) => true,
            RingSpec::IntegersMod(m) => is_prime(m),
        }
    }

    /// The prime `p` when this ring is an 𝔽_p-algebra of prime characteristic.
    pub fn prime_characteristic(&self) -> Option<u64> {
        self.modulus().filter(|&m| is_prime(m))
    }

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        let value = match *self {
            RingSpec::Integers => Value::Int(BigInt::from(n)),
            RingSpec::Rationals => Value::Rat(BigRational::from_integer(BigInt::from(n))),
            RingSpec::IntegersMod(m) | RingSpec::PrimeField(m) => {
                Value::Mod((n as i128).rem_euclid(m as i128) as u64)
            }
        };
        RingElement { ring: *self, value }
    }

    /// The image of an integer under ℤ → R. For ℤ/m this is reduction mod m.
    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        let value = match *self {
            RingSpec::Integers => Value::Int(n.clone()),
            RingSpec::Rationals => Value::Rat(BigRational::from_integer(n.clone())),
            RingSpec::IntegersMod(m) | RingSpec::PrimeField(m) => {
                let r = n.mod_floor(&BigInt::from(m));
                Value::Mod(r.to_u64().expect("residue fits in u64"))
            }
        };
        RingElement { ring: *self, value }
    }

    /// Reduction ℤ → ℤ/m applied to an element of ℤ.
    pub fn reduce(&self, x: &RingElement) -> Result<RingElement> {
        match &x.value {
            Value::Int(n) => Ok(self.from_bigint(n)),
            _ => Err(Error::SpecMismatch {
                left: RingSpec::Integers,
                right: x.ring,
            }),
        }
    }

    /// Parses a literal in this ring: an integer, or `a/b` when `b` is a unit.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let parse_int = |t: &str| {
            BigInt::from_str(t).map_err(|_| Error::parse(t, "expected an integer literal"))
        };
        let n = self.from_bigint(&parse_int(num)?);
        match den {
            None => Ok(n),
            Some(d) => {
                let d_int = parse_int(d)?;
                if d_int.is_zero() {
                    return Err(Error::parse(s, "zero denominator"));
                }
                let d = self.from_bigint(&d_int);
                let inv = d
                    .inverse()
                    .map_err(|_| Error::parse(s, format!("denominator is not a unit in {self}")))?;
                Ok(&n * &inv)
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntegersMod(m) => write!(f, "Zmod:{m}"),
            RingSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z`, `Q`, `Zmod:<m>` and `Fp:<p>`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "z" => return Ok(RingSpec::Integers),
            "q" => return Ok(RingSpec::Rationals),
            _ => {}
        }
        let (kind, arg) = lower
            .split_once(':')
            .ok_or_else(|| Error::parse(t, "expected Z, Q, Zmod:<m> or Fp:<p>"))?;
        let n: u64 = arg
            .trim()
            .parse()
            .map_err(|_| Error::parse(arg.trim(), "expected a positive integer"))?;
        match kind.trim() {
            "zmod" => RingSpec::integers_mod(n),
            "fp" => RingSpec::prime_field(n),
            other => Err(Error::parse(other, "unknown ring kind")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingSpec,
    value: Value,
}

impl RingElement {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_zero(),
            Value::Rat(q) => q.is_zero(),
            Value::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_one(),
            Value::Rat(q) => q.is_one(),
            Value::Mod(r) => *r == 1,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SpecMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.abs().is_one(),
            Value::Rat(q) => !q.is_zero(),
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring");
                r.gcd(&m) == 1
            }
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let value = match &self.value {
            Value::Int(n) if n.abs().is_one() => Value::Int(n.clone()),
            Value::Rat(q) if !q.is_zero() => Value::Rat(q.recip()),
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring");
                match mod_inverse(*r, m) {
                    Some(inv) => Value::Mod(inv),
                    None => return Err(Error::NotAUnit(self.to_string(), self.ring)),
                }
            }
            _ => return Err(Error::NotAUnit(self.to_string(), self.ring)),
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        match &self.value {
            Value::Int(n) => RingElement {
                ring: self.ring,
                value: Value::Int(num_traits::pow::Pow::pow(n, e)),
            },
            Value::Rat(q) => RingElement {
                ring: self.ring,
                value: Value::Rat(num_traits::pow::Pow::pow(q, e)),
            },
            Value::Mod(r) => {
                let m = self.ring.modulus().expect("modular ring") as u128;
                let mut base = *r as u128 % m;
                let mut acc = 1u128 % m;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                RingElement {
                    ring: self.ring,
                    value: Value::Mod(acc as u64),
                }
            }
        }
    }

    /// The canonical integer lift of an element of ℤ/m or 𝔽_p (or ℤ itself).
    /// `None` for ℚ.
    pub fn lift(&self) -> Option<RingElement> {
        match &self.value {
            Value::Int(_) => Some(self.clone()),
            Value::Mod(r) => Some(RingSpec::Integers.from_bigint(&BigInt::from(*r))),
            Value::Rat(_) => None,
        }
    }

    /// Integer value for ℤ, the residue for modular rings, and the value of an
    /// integral fraction in ℚ.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.value {
            Value::Int(n) => Some(n.clone()),
            Value::Mod(r) => Some(BigInt::from(*r)),
            Value::Rat(q) if q.is_integer() => Some(q.to_integer()),
            Value::Rat(_) => None,
        }
    }

    /// Numerator and denominator of an element of ℚ.
    pub(crate) fn fraction(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.value {
            Value::Rat(q) => Some((q.numer(), q.denom())),
            _ => None,
        }
    }

    pub(crate) fn rational(numer: BigInt, denom: BigInt) -> RingElement {
        RingElement {
            ring: RingSpec::Rationals,
            value: Value::Rat(BigRational::new(numer, denom)),
        }
    }

    /// True when the printed form starts with a minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_negative(),
            Value::Rat(q) => q.is_negative(),
            Value::Mod(_) => false,
        }
    }

    #[cfg(debug_assertions)]
    fn assert_same(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "ring mismatch in coefficient arithmetic");
    }

    #[cfg(not(debug_assertions))]
    fn assert_same(&self, _other: &Self) {}
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(q) => write!(f, "{q}"),
            Value::Mod(r) => write!(f, "{r}"),
        }
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn add(self, other: &RingElement) -> RingElement {
        self.assert_same(other);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let m = self.ring.modulus().expect("modular ring") as u128;
                Value::Mod(((*a as u128 + *b as u128) % m) as u64)
            }
            _ => panic!("ring mismatch: {} vs {}", self.ring, other.ring),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn sub(self, other: &RingElement) -> RingElement {
        self + &(-other)
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn mul(self, other: &RingElement) -> RingElement {
        self.assert_same(other);
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let m = self.ring.modulus().expect("modular ring") as u128;
                Value::Mod(((*a as u128 * *b as u128) % m) as u64)
            }
            _ => panic!("ring mismatch: {} vs {}", self.ring, other.ring),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        let value = match &self.value {
            Value::Int(a) => Value::Int(-a),
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let m = self.ring.modulus().expect("modular ring");
                Value::Mod(if *a == 0 { 0 } else { m - a })
            }
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
