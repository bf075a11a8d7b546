//! Truncated power series and polynomials with constant term 1.
//!
//! [`UnitSeries`] is an element of `(1 + tR[[t]])^×` known modulo `t^(N+1)`,
//! stored densely. Binary operations return the smaller of the two
//! precisions; substitution `t -> t^n` returns precision `n·N` because every
//! coefficient up to that index is determined. Nothing is ever padded with
//! zeros to raise precision.
//!
//! [`UnitPolynomial`] is an exact polynomial with constant term 1 and no
//! trailing zero coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::parse;
use crate::ring::{RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitSeries {
    ring: RingSpec,
    // coeffs[0] is always one; coeffs.len() == precision + 1
    coeffs: Vec<RingElement>,
}

impl UnitSeries {
    /// The series 1 at precision `precision`.
    pub fn one(ring: RingSpec, precision: usize) -> Self {
        let mut coeffs = vec![ring.zero(); precision + 1];
        coeffs[0] = ring.one();
        UnitSeries { ring, coeffs }
    }

    /// Builds `1 + c_1 t + … + c_N t^N` from `c_1, …, c_N`.
    pub fn from_coefficients(ring: RingSpec, tail: Vec<RingElement>) -> Result<Self> {
        if let Some(bad) = tail.iter().find(|c| c.ring() != ring) {
            return Err(Error::SpecMismatch {
                left: ring,
                right: bad.ring(),
            });
        }
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ring.one());
        coeffs.extend(tail);
        Ok(UnitSeries { ring, coeffs })
    }

    /// Convenience constructor from small integers `c_1, …, c_N`.
    pub fn from_i64s(ring: RingSpec, tail: &[i64]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ring.one());
        coeffs.extend(tail.iter().map(|&c| ring.from_i64(c)));
        UnitSeries { ring, coeffs }
    }

    /// Parses `1 - 3*t + 2*t^2` at the given precision; terms beyond it are
    /// dropped.
    pub fn parse(ring: RingSpec, precision: usize, s: &str) -> Result<Self> {
        let dense = parse::parse_unit_dense(ring, s)?;
        let mut out = UnitSeries::one(ring, precision);
        for (k, c) in dense.into_iter().enumerate().skip(1).take(precision) {
            out.coeffs[k] = c;
        }
        Ok(out)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; `k = 0` gives one.
    ///
    /// Panics when `k` exceeds the precision.
    pub fn coeff(&self, k: usize) -> &RingElement {
        &self.coeffs[k]
    }

    /// `c_1, …, c_N`.
    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs[1..]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[1..].iter().all(RingElement::is_zero)
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

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.precision().min(other.precision());
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.ring.zero();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            coeffs.push(acc);
        }
        Ok(UnitSeries {
            ring: self.ring,
            coeffs,
        })
    }

    /// The multiplicative inverse; always exists since the constant term is 1.
    pub fn inverse(&self) -> Self {
        let n = self.precision();
        let mut inv: Vec<RingElement> = Vec::with_capacity(n + 1);
        inv.push(self.ring.one());
        for k in 1..=n {
            let mut acc = self.ring.zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = &acc + &(a * &inv[k - i]);
                }
            }
            inv.push(-acc);
        }
        UnitSeries {
            ring: self.ring,
            coeffs: inv,
        }
    }

    /// `x^e` for any integer `e`; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = UnitSeries::one(self.ring, self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// `x(t^n)`, at precision `n·N`.
    pub fn substitute(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        let mut out = UnitSeries::one(self.ring, n * self.precision());
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.coeffs[n * k] = c.clone();
        }
        Ok(out)
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision > self.precision() {
            return Err(Error::PrecisionTooHigh {
                have: self.precision(),
                want: precision,
            });
        }
        Ok(UnitSeries {
            ring: self.ring,
            coeffs: self.coeffs[..=precision].to_vec(),
        })
    }

    /// Multiplies in place by `1 - a·t^i`.
    pub(crate) fn mul_by_factor_in_place(&mut self, a: &RingElement, i: usize) {
        if a.is_zero() || i > self.precision() {
            return;
        }
        for k in (i..self.coeffs.len()).rev() {
            let prev = &self.coeffs[k - i];
            if !prev.is_zero() {
                let d = a * prev;
                self.coeffs[k] = &self.coeffs[k] - &d;
            }
        }
    }

    /// Divides in place by `1 - a·t^i`.
    pub(crate) fn divide_by_factor_in_place(&mut self, a: &RingElement, i: usize) {
        if a.is_zero() || i > self.precision() {
            return;
        }
        for k in i..self.coeffs.len() {
            let prev = &self.coeffs[k - i];
            if !prev.is_zero() {
                let d = a * prev;
                self.coeffs[k] = &self.coeffs[k] + &d;
            }
        }
    }

    /// The exact truncated quotient `x / (1 - a·t^i)`.
    pub fn divide_by_factor(&self, a: &RingElement, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidIndex(i));
        }
        if a.ring() != self.ring {
            return Err(Error::SpecMismatch {
                left: self.ring,
                right: a.ring(),
            });
        }
        let mut out = self.clone();
        out.divide_by_factor_in_place(a, i);
        Ok(out)
    }

    /// The product `x·(1 - a·t^i)`.
    pub fn mul_by_factor(&self, a: &RingElement, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidIndex(i));
        }
        if a.ring() != self.ring {
            return Err(Error::SpecMismatch {
                left: self.ring,
                right: a.ring(),
            });
        }
        let mut out = self.clone();
        out.mul_by_factor_in_place(a, i);
        Ok(out)
    }

    pub fn from_polynomial(p: &UnitPolynomial, precision: usize) -> Self {
        let mut out = UnitSeries::one(p.ring, precision);
        for (k, c) in p.coeffs.iter().enumerate().skip(1).take(precision) {
            out.coeffs[k] = c.clone();
        }
        out
    }
}

impl fmt::Display for UnitSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_dense(&self.coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitPolynomial {
    ring: RingSpec,
    // coeffs[0] is one; no trailing zeros beyond it
    coeffs: Vec<RingElement>,
}

impl UnitPolynomial {
    pub fn one(ring: RingSpec) -> Self {
        UnitPolynomial {
            ring,
            coeffs: vec![ring.one()],
        }
    }

    /// Builds `1 + c_1 t + … + c_d t^d`, stripping trailing zeros.
    pub fn from_coefficients(ring: RingSpec, tail: Vec<RingElement>) -> Result<Self> {
        if let Some(bad) = tail.iter().find(|c| c.ring() != ring) {
            return Err(Error::SpecMismatch {
                left: ring,
                right: bad.ring(),
            });
        }
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ring.one());
        coeffs.extend(tail);
        Ok(Self::normalized(ring, coeffs))
    }

    pub fn from_i64s(ring: RingSpec, tail: &[i64]) -> Self {
        let mut coeffs = vec![ring.one()];
        coeffs.extend(tail.iter().map(|&c| ring.from_i64(c)));
        Self::normalized(ring, coeffs)
    }

    /// `dense[0]` must be one.
    pub(crate) fn normalized(ring: RingSpec, mut dense: Vec<RingElement>) -> Self {
        debug_assert!(dense[0].is_one());
        while dense.len() > 1 && dense.last().is_some_and(RingElement::is_zero) {
            dense.pop();
        }
        UnitPolynomial {
            ring,
            coeffs: dense,
        }
    }

    pub fn parse(ring: RingSpec, s: &str) -> Result<Self> {
        let dense = parse::parse_unit_dense(ring, s)?;
        Ok(Self::normalized(ring, dense))
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `c_1, …, c_d`.
    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs[1..]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::SpecMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        let mut out = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::normalized(self.ring, out))
    }

    /// `p(t^n)`.
    pub fn substitute(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        let mut out = vec![self.ring.zero(); n * self.degree() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[n * k] = c.clone();
        }
        Ok(Self::normalized(self.ring, out))
    }

    pub fn to_series(&self, precision: usize) -> UnitSeries {
        UnitSeries::from_polynomial(self, precision)
    }
}

impl fmt::Display for UnitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_dense(&self.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Z: RingSpec = RingSpec::Integers;

    fn s(ring: RingSpec, tail: &[i64]) -> UnitSeries {
        UnitSeries::from_i64s(ring, tail)
    }

    #[test]
    fn product() {
        let x = s(Z, &[-1, 0]);
        let y = s(Z, &[-2, 0]);
        assert_eq!(x.mul(&y).unwrap(), s(Z, &[-3, 2]));
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(s(Z, &[-1, 0, 0]).inverse(), s(Z, &[1, 1, 1]));
    }

    #[test]
    fn square_mod_two() {
        let f2 = RingSpec::PrimeField(2);
        assert_eq!(s(f2, &[-1, 0]).pow(2), s(f2, &[0, 1]));
    }

    #[test]
    fn mixed_precision_takes_minimum() {
        let x = s(Z, &[1, 2, 3, 4]);
        let y = s(Z, &[1]);
        assert_eq!(x.mul(&y).unwrap().precision(), 1);
        let q = UnitSeries::one(RingSpec::Rationals, 2);
        assert!(matches!(x.mul(&q), Err(Error::SpecMismatch { .. })));
    }

    #[test]
    fn substitution() {
        let x = s(Z, &[-3]);
        let v = x.substitute(2).unwrap();
        assert_eq!(v, s(Z, &[0, -3]));
        assert_eq!(v.precision(), 2);
        assert_eq!(x.substitute(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn divide_by_linear_factor() {
        // (1 - t)(1 - t^2) = 1 - t - t^2 + t^3
        let x = s(Z, &[-1, -1]);
        let q = x.divide_by_factor(&Z.from_i64(1), 1).unwrap();
        assert_eq!(q, s(Z, &[0, -1]));
        assert_eq!(x.divide_by_factor(&Z.one(), 0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn truncation() {
        let x = s(Z, &[-3, 2]);
        assert_eq!(x.truncate(1).unwrap(), s(Z, &[-3]));
        assert!(x.truncate(3).is_err());
    }

    #[test]
    fn negative_powers() {
        let x = s(Z, &[2, -1, 5]);
        assert_eq!(x.pow(-3), x.inverse().pow(3));
        assert!(x.pow(3).mul(&x.pow(-3)).unwrap().is_one());
        assert_eq!(x.pow(0), UnitSeries::one(Z, 3));
    }

    #[test]
    fn polynomial_basics() {
        let p = UnitPolynomial::from_i64s(Z, &[-3, 2, 0, 0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "1 - 3*t + 2*t^2");
        let q = UnitPolynomial::parse(Z, "1 - 5*t").unwrap();
        assert_eq!(p.mul(&q).unwrap().to_string(), "1 - 8*t + 17*t^2 - 10*t^3");
        assert_eq!(q.substitute(3).unwrap().to_string(), "1 - 5*t^3");
        assert_eq!(p.to_series(1), s(Z, &[-3]));
        assert_eq!(p.to_series(4), s(Z, &[-3, 2, 0, 0]));
        assert!(UnitPolynomial::parse(Z, "1 - t + t").unwrap().is_one());
    }

    #[test]
    fn series_text_roundtrip() {
        let x = UnitSeries::parse(Z, 4, "1 - 3*t + 2*t^2").unwrap();
        assert_eq!(x, s(Z, &[-3, 2, 0, 0]));
        assert_eq!(UnitSeries::parse(Z, 4, &x.to_string()).unwrap(), x);
        assert_eq!(UnitSeries::parse(Z, 1, "1 - 3*t + 2*t^2").unwrap(), s(Z, &[-3]));
        assert!(UnitSeries::parse(Z, 4, "2 - 3*t").is_err());
    }

    fn rings() -> Vec<RingSpec> {
        vec![Z, RingSpec::integers_mod(6).unwrap(), RingSpec::PrimeField(5)]
    }

    fn tail(len: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-9i64..=9, len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn group_laws(a in tail(8), b in tail(8), c in tail(8)) {
            for r in rings() {
                let (x, y, z) = (s(r, &a), s(r, &b), s(r, &c));
                prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
                prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
                prop_assert_eq!(x.mul(&UnitSeries::one(r, 8)).unwrap(), x.clone());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn inverse_laws(a in tail(16), n in 0usize..=16) {
            for r in rings() {
                let x = s(r, &a[..n]);
                prop_assert_eq!(x.inverse().inverse(), x.clone());
                prop_assert!(x.mul(&x.inverse()).unwrap().is_one());
            }
        }

        #[test]
        fn divide_undoes_factor(a in tail(10), c in -9i64..=9, i in 1usize..=10) {
            for r in rings() {
                let x = s(r, &a);
                let c = r.from_i64(c);
                let y = x.mul_by_factor(&c, i).unwrap();
                prop_assert_eq!(y.divide_by_factor(&c, i).unwrap(), x);
            }
        }

        #[test]
        fn pow_is_repeated_product(a in tail(6), e in 0i64..6) {
            let x = s(Z, &a);
            let mut acc = UnitSeries::one(Z, 6);
            for _ in 0..e {
                acc = acc.mul(&x).unwrap();
            }
            prop_assert_eq!(x.pow(e), acc);
        }
    }
}
