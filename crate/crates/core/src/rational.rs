//! Rational Witt vectors: fractions `num/den` of unit polynomials.
//!
//! Witt addition multiplies fractions and negation swaps numerator and
//! denominator. Fractions are never reduced (polynomial gcds need not exist
//! over ℤ/m), so equality is cross-multiplication.
//!
//! Witt multiplication and Frobenius are computed exactly by realizing each
//! unit polynomial as the characteristic series of its companion matrix and
//! using `char(φ) ·_W char(ψ) = char(φ ⊗ ψ)` and `F_n char(φ) = char(φ^n)`.

use std::fmt;

use crate::endo::MatrixEndo;
use crate::error::{Error, Result};
use crate::parse;
use crate::ring::RingSpec;
use crate::series::{UnitPolynomial, UnitSeries};
use crate::witt::WittVector;

#[derive(Clone, Debug)]
pub struct RationalWitt {
    num: UnitPolynomial,
    den: UnitPolynomial,
}

impl RationalWitt {
    pub fn new(num: UnitPolynomial, den: UnitPolynomial) -> Result<Self> {
        if num.ring() != den.ring() {
            return Err(Error::SpecMismatch {
                left: num.ring(),
                right: den.ring(),
            });
        }
        Ok(RationalWitt { num, den })
    }

    pub fn from_polynomial(num: UnitPolynomial) -> Self {
        let den = UnitPolynomial::one(num.ring());
        RationalWitt { num, den }
    }

    /// Parses `(<poly>)/(<poly>)`, or a bare `<poly>` over denominator 1.
    pub fn parse(ring: RingSpec, s: &str) -> Result<Self> {
        let (num, den) = parse::split_fraction(s)?;
        let num = UnitPolynomial::parse(ring, num)?;
        let den = match den {
            Some(d) => UnitPolynomial::parse(ring, d)?,
            None => UnitPolynomial::one(ring),
        };
        Ok(RationalWitt { num, den })
    }

    pub fn zero(ring: RingSpec) -> Self {
        Self::from_polynomial(UnitPolynomial::one(ring))
    }

    pub fn one(ring: RingSpec) -> Self {
        Self::from_polynomial(UnitPolynomial::from_i64s(ring, &[-1]))
    }

    pub fn ring(&self) -> RingSpec {
        self.num.ring()
    }

    pub fn numerator(&self) -> &UnitPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &UnitPolynomial {
        &self.den
    }

    /// Largest of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.num == self.den
    }

    /// Cross-multiplication test `num₁·den₂ = num₂·den₁`.
    pub fn witt_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(RationalWitt {
            num: self.num.mul(&other.num)?,
            den: self.den.mul(&other.den)?,
        })
    }

    pub fn neg(&self) -> Self {
        RationalWitt {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn int_scalar(&self, m: i64) -> Self {
        let base = if m < 0 { self.neg() } else { self.clone() };
        let mut acc = Self::zero(self.ring());
        for _ in 0..m.unsigned_abs() {
            acc = acc.add(&base).expect("same ring");
        }
        acc
    }

    /// Witt product via Kronecker products of companion realizations.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring() != other.ring() {
            return Err(Error::SpecMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        let tensor_char = |p: &UnitPolynomial, q: &UnitPolynomial| -> Result<UnitPolynomial> {
            if p.is_one() || q.is_one() {
                return Ok(UnitPolynomial::one(p.ring()));
            }
            let m = MatrixEndo::companion(p).tensor(&MatrixEndo::companion(q))?;
            Ok(m.char_series())
        };
        // ([a] - [b])([c] - [d]) = [ac] + [bd] - [ad] - [bc]
        let num = tensor_char(&self.num, &other.num)?.mul(&tensor_char(&self.den, &other.den)?)?;
        let den = tensor_char(&self.num, &other.den)?.mul(&tensor_char(&self.den, &other.num)?)?;
        Ok(RationalWitt { num, den })
    }

    /// `F_n` as `char(φ_num^n) / char(φ_den^n)`.
    pub fn frobenius(&self, n: usize) -> Result<Self> {
        let f = |p: &UnitPolynomial| -> Result<UnitPolynomial> {
            Ok(MatrixEndo::companion(p).frobenius(n)?.char_series())
        };
        Ok(RationalWitt {
            num: f(&self.num)?,
            den: f(&self.den)?,
        })
    }

    /// `V_n` as `num(t^n) / den(t^n)`.
    pub fn verschiebung(&self, n: usize) -> Result<Self> {
        Ok(RationalWitt {
            num: self.num.substitute(n)?,
            den: self.den.substitute(n)?,
        })
    }

    /// The power series `num · den⁻¹` at the given precision.
    pub fn expand(&self, precision: usize) -> WittVector {
        let num = UnitSeries::from_polynomial(&self.num, precision);
        let den = UnitSeries::from_polynomial(&self.den, precision);
        WittVector::from_series(num.mul(&den.inverse()).expect("same ring"))
    }
}

impl PartialEq for RationalWitt {
    fn eq(&self, other: &Self) -> bool {
        self.witt_eq(other).unwrap_or(false)
    }
}

impl Eq for RationalWitt {}

impl fmt::Display for RationalWitt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
