//! The big Witt ring `W_N(R)`, modeled on unit series modulo `t^(N+1)`.
//!
//! Addition is multiplication of series, negation is series inversion, the
//! zero is `1` and the one is `1 - t`. Every element factors uniquely as
//! `∏_{i=1..N} (1 - a_i t^i) = Σ_i V_i([a_i])`, and ring multiplication and
//! Frobenius are computed on that factorization with
//!
//! ```text
//! V_m([a]) · V_n([b]) = d · V_{mn/d}([a^{n/d} b^{m/d}])
//! F_n V_m([a])        = d · V_{m/d}([a^{n/d}])              d = gcd(m, n)
//! ```
//!
//! which hold over every commutative ring. Ghost components are provided as
//! an independent check only; they are not injective over rings with torsion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingSpec};
use crate::series::UnitSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittVector {
    series: UnitSeries,
}

/// The coordinates `a_1, …, a_N` with `x = ∏ (1 - a_i t^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittCoordinates {
    ring: RingSpec,
    coords: Vec<RingElement>,
}

impl WittCoordinates {
    pub fn new(ring: RingSpec, coords: Vec<RingElement>) -> Result<Self> {
        if let Some(bad) = coords.iter().find(|c| c.ring() != ring) {
            return Err(Error::SpecMismatch {
                left: ring,
                right: bad.ring(),
            });
        }
        Ok(WittCoordinates { ring, coords })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn precision(&self) -> usize {
        self.coords.len()
    }

    /// `a_i` for `1 <= i <= N`.
    pub fn get(&self, i: usize) -> &RingElement {
        &self.coords[i - 1]
    }

    pub fn as_slice(&self) -> &[RingElement] {
        &self.coords
    }

    /// Iterates `(i, a_i)` over the nonzero coordinates.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &RingElement)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (i + 1, a))
    }

    pub fn reconstruct(&self) -> WittVector {
        let mut series = UnitSeries::one(self.ring, self.coords.len());
        for (i, a) in self.nonzero() {
            series.mul_by_factor_in_place(a, i);
        }
        WittVector { series }
    }
}

impl WittVector {
    pub fn from_series(series: UnitSeries) -> Self {
        WittVector { series }
    }

    pub fn series(&self) -> &UnitSeries {
        &self.series
    }

    pub fn into_series(self) -> UnitSeries {
        self.series
    }

    pub fn ring(&self) -> RingSpec {
        self.series.ring()
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }

    pub fn zero(ring: RingSpec, precision: usize) -> Self {
        WittVector::from_series(UnitSeries::one(ring, precision))
    }

    pub fn one(ring: RingSpec, precision: usize) -> Self {
        Self::teichmuller(&ring.one(), precision)
    }

    /// The Teichmüller lift `[a] = 1 - a·t`.
    pub fn teichmuller(a: &RingElement, precision: usize) -> Self {
        let mut series = UnitSeries::one(a.ring(), precision);
        series.mul_by_factor_in_place(a, 1);
        WittVector { series }
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_one()
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        Ok(WittVector::from_series(self.series.truncate(precision)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(WittVector::from_series(self.series.mul(&other.series)?))
    }

    pub fn neg(&self) -> Self {
        WittVector::from_series(self.series.inverse())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The `m`-fold Witt sum, i.e. the series power `x(t)^m`.
    pub fn int_scalar(&self, m: i64) -> Self {
        WittVector::from_series(self.series.pow(m))
    }

    /// `V_n`: the substitution `t -> t^n`, at precision `n·N`.
    pub fn verschiebung(&self, n: usize) -> Result<Self> {
        Ok(WittVector::from_series(self.series.substitute(n)?))
    }

    /// Factors `x = ∏ (1 - a_i t^i)` by peeling off one factor per degree.
    pub fn decompose(&self) -> WittCoordinates {
        let n = self.precision();
        let mut residual = self.series.clone();
        let mut coords = Vec::with_capacity(n);
        for i in 1..=n {
            let a = -residual.coeff(i);
            residual.divide_by_factor_in_place(&a, i);
            coords.push(a);
        }
        debug_assert!(residual.is_one());
        WittCoordinates {
            ring: self.ring(),
            coords,
        }
    }

    /// Witt multiplication, at the smaller of the two precisions.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring() != other.ring() {
            return Err(Error::SpecMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        let n = self.precision().min(other.precision());
        if self.ring() == RingSpec::Rationals {
            let (x, y) = (self.truncate(n)?, other.truncate(n)?);
            let lambda = common_denominator(&[&x.series, &y.series]);
            let prod = rescale_to_integers(&x.series, &lambda)
                .mul(&rescale_to_integers(&y.series, &lambda))?;
            return Ok(rescale_from_integers(&prod.series, &(&lambda * &lambda)));
        }
        Ok(self.mul_on_coordinates(other, n))
    }

    fn mul_on_coordinates(&self, other: &Self, n: usize) -> Self {
        let a = self.truncate(n).expect("n within precision").decompose();
        let b = other.truncate(n).expect("n within precision").decompose();
        let mut acc = UnitSeries::one(self.ring(), n);
        for (i, ai) in a.nonzero() {
            for (j, bj) in b.nonzero() {
                let d = i.gcd(&j);
                let l = i / d * j;
                // pairs with lcm > N only touch t^(N+1) and beyond
                if l > n {
                    continue;
                }
                let c = &ai.pow((j / d) as u64) * &bj.pow((i / d) as u64);
                for _ in 0..d {
                    acc.mul_by_factor_in_place(&c, l);
                }
            }
        }
        WittVector::from_series(acc)
    }

    /// `F_n`, keeping the input precision `N`.
    ///
    /// The result is `F_n` of the element whose coordinates past `N` vanish.
    /// Only the first `⌊N/n⌋` coefficients are independent of those missing
    /// coordinates, so callers who need `F_n(x)` to precision `K` should pass
    /// `x` at precision `n·K`.
    pub fn frobenius(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        if self.ring() == RingSpec::Rationals {
            let lambda = common_denominator(&[&self.series]);
            let image = rescale_to_integers(&self.series, &lambda).frobenius(n)?;
            return Ok(rescale_from_integers(&image.series, &Pow::pow(&lambda, n)));
        }
        Ok(self.frobenius_on_coordinates(n))
    }

    /// `F_n` truncated to its exact part, precision `⌊N/n⌋`.
    ///
    /// Equal to `frobenius(n)` followed by truncation, but coordinates whose
    /// image starts past `⌊N/n⌋` are never raised to powers.
    pub fn frobenius_exact(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        let k = self.precision() / n;
        if self.ring() == RingSpec::Rationals {
            let lambda = common_denominator(&[&self.series]);
            let image = rescale_to_integers(&self.series, &lambda).frobenius_exact(n)?;
            return Ok(rescale_from_integers(&image.series, &Pow::pow(&lambda, n)));
        }
        Ok(self.frobenius_on_coordinates_to(n, k))
    }

    fn frobenius_on_coordinates(&self, n: usize) -> Self {
        self.frobenius_on_coordinates_to(n, self.precision())
    }

    fn frobenius_on_coordinates_to(&self, n: usize, precision: usize) -> Self {
        let coords = self.decompose();
        let mut acc = UnitSeries::one(self.ring(), precision);
        for (m, a) in coords.nonzero() {
            let d = n.gcd(&m);
            if m / d > precision {
                continue;
            }
            let c = a.pow((n / d) as u64);
            for _ in 0..d {
                acc.mul_by_factor_in_place(&c, m / d);
            }
        }
        WittVector::from_series(acc)
    }

    /// Ghost components `gh_k = Σ_{d | k} d·a_d^{k/d}` for `k = 1..N`.
    pub fn ghost(&self) -> Vec<RingElement> {
        let ring = self.ring();
        let coords = self.decompose();
        (1..=self.precision())
            .map(|k| {
                let mut acc = ring.zero();
                for d in (1..=k).filter(|d| k % d == 0) {
                    let a = coords.get(d);
                    if !a.is_zero() {
                        let term = &ring.from_i64(d as i64) * &a.pow((k / d) as u64);
                        acc = &acc + &term;
                    }
                }
                acc
            })
            .collect()
    }

    /// Ghost components read off `-t·x'(t)/x(t)`, without factoring `x`.
    pub fn ghost_log_derivative(&self) -> Vec<RingElement> {
        let ring = self.ring();
        let n = self.precision();
        // x · g = -t x'  =>  g_k = -k x_k - Σ_{i=1}^{k-1} x_i g_{k-i}
        let mut g: Vec<RingElement> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut acc = -&(&ring.from_i64(k as i64) * self.series.coeff(k));
            for i in 1..k {
                let x = self.series.coeff(i);
                if !x.is_zero() {
                    acc = &acc - &(x * &g[k - i - 1]);
                }
            }
            g.push(acc);
        }
        g
    }

    /// Least `i` with a nonzero coordinate `a_i`, or `None` for the zero vector.
    pub fn filtration_degree(&self) -> Option<usize> {
        self.decompose().nonzero().next().map(|(i, _)| i)
    }
}

// Over ℚ, `σ_λ: x(t) ↦ x(λt)` sends `V_m[a]` to `V_m[λ^m a]`, so
// `σ_λ x · σ_λ y = σ_{λ²}(x · y)` and `F_n σ_λ x = σ_{λ^n} F_n x`. Products
// and Frobenius are computed on an integral rescaling and mapped back.

fn common_denominator(series: &[&UnitSeries]) -> BigInt {
    series
        .iter()
        .flat_map(|s| s.coefficients())
        .filter_map(|c| c.fraction().map(|(_, d)| d))
        .fold(BigInt::one(), |acc, d| acc.lcm(d))
}

fn rescale_to_integers(x: &UnitSeries, lambda: &BigInt) -> WittVector {
    let mut scale = BigInt::one();
    let tail = x.coefficients()
        .iter()
        .map(|c| {
            scale *= lambda;
            let (num, den) = c.fraction().expect("rational coefficient");
            RingSpec::Integers.from_bigint(&(num * &scale / den))
        })
        .collect();
    WittVector::from_series(UnitSeries::from_coefficients(RingSpec::Integers, tail).expect("integers"))
}

fn rescale_from_integers(x: &UnitSeries, mu: &BigInt) -> WittVector {
    let mut scale = BigInt::one();
    let tail = x.coefficients()
        .iter()
        .map(|c| {
            scale *= mu;
            RingElement::rational(c.to_bigint().expect("integer coefficient"), scale.clone())
        })
        .collect();
    WittVector::from_series(UnitSeries::from_coefficients(RingSpec::Rationals, tail).expect("rationals"))
}

/// The inverse of the integer `l` in `W_N(R)`: the series `a` with
/// `a(t)^l ≡ 1 - t (mod t^(N+1))`.
///
/// Coefficients follow `a_0 = 1`, `a_1 = -1/l` and
/// `a_n = -(1/l) Σ a_{i_1}⋯a_{i_l}` over compositions of `n` into `l` parts
/// each below `n`. The inner sum is the `t^n` coefficient of the `l`-th power
/// of the series known so far, which is how it is evaluated here.
pub fn inverse_of_integer(l: i64, precision: usize, ring: RingSpec) -> Result<WittVector> {
    let lr = ring.from_i64(l.unsigned_abs() as i64);
    let inv = lr
        .inverse()
        .map_err(|_| Error::NotAUnit(l.to_string(), ring))?;
    let mut coeffs: Vec<RingElement> = Vec::with_capacity(precision);
    if precision >= 1 {
        coeffs.push(-&inv);
    }
    for n in 2..=precision {
        let mut partial = coeffs.clone();
        partial.push(ring.zero());
        let power = UnitSeries::from_coefficients(ring, partial)?.pow(l.unsigned_abs() as i64);
        coeffs.push(-&(&inv * power.coeff(n)));
    }
    let a = WittVector::from_series(UnitSeries::from_coefficients(ring, coeffs)?);
    Ok(if l < 0 { a.neg() } else { a })
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}

impl fmt::Display for WittCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: RingSpec = RingSpec::Integers;
    const Q: RingSpec = RingSpec::Rationals;

    fn w(ring: RingSpec, tail: &[i64]) -> WittVector {
        WittVector::from_series(UnitSeries::from_i64s(ring, tail))
    }

    fn elems(ring: RingSpec, v: &[i64]) -> Vec<RingElement> {
        v.iter().map(|&c| ring.from_i64(c)).collect()
    }

    #[test]
    fn rescaled_rational_path_matches_direct_arithmetic() {
        let parse = |s| WittVector::from_series(UnitSeries::parse(Q, 7, s).unwrap());
        let x = parse("1 - 1/2*t + 2/3*t^2 - 5/7*t^5");
        let y = parse("1 + 3/4*t - 1/9*t^3 + t^7");
        assert_eq!(x.mul(&y).unwrap(), x.mul_on_coordinates(&y, 7));
        assert_eq!(y.mul(&x.truncate(4).unwrap()).unwrap(), y.mul_on_coordinates(&x, 4));
        for n in 1..=4 {
            assert_eq!(x.frobenius(n).unwrap(), x.frobenius_on_coordinates(n));
        }
    }

    #[test]
    fn exact_frobenius_is_truncated_frobenius() {
        let f4 = RingSpec::PrimeField(3);
        for ring in [Z, Q, RingSpec::IntegersMod(12), f4] {
            let x = w(ring, &[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5]);
            for n in 1..=12 {
                let full = x.frobenius(n).unwrap();
                let exact = x.frobenius_exact(n).unwrap();
                assert_eq!(exact, full.truncate(11 / n).unwrap(), "{ring}, n = {n}");
            }
        }
        assert_eq!(w(Z, &[1]).frobenius_exact(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn group_structure() {
        assert_eq!(w(Z, &[-2, 0]).add(&w(Z, &[-3, 0])).unwrap(), w(Z, &[-5, 6]));
        let f2 = RingSpec::PrimeField(2);
        assert_eq!(w(f2, &[1, 0]).int_scalar(2), w(f2, &[0, 1]));
        assert_eq!(w(Z, &[-1, 0, 0, 0]).neg(), w(Z, &[1, 1, 1, 1]));
        assert!(w(Z, &[3, 1, 4]).sub(&w(Z, &[3, 1, 4])).unwrap().is_zero());
        assert_eq!(w(Z, &[2, 7]).int_scalar(-1), w(Z, &[2, 7]).neg());
    }

    #[test]
    fn teichmuller_elements() {
        assert_eq!(WittVector::teichmuller(&Z.one(), 3), WittVector::one(Z, 3));
        assert_eq!(WittVector::teichmuller(&Z.zero(), 3), WittVector::zero(Z, 3));
        let prod = WittVector::teichmuller(&Z.from_i64(2), 6)
            .mul(&WittVector::teichmuller(&Z.from_i64(3), 6))
            .unwrap();
        assert_eq!(prod, WittVector::teichmuller(&Z.from_i64(6), 6));
        // ghost oracle: ghosts of [a] are the powers of a
        assert_eq!(
            WittVector::teichmuller(&Z.from_i64(2), 5).ghost(),
            elems(Z, &[2, 4, 8, 16, 32])
        );
    }

    #[test]
    fn verschiebung() {
        assert_eq!(w(Z, &[-3]).verschiebung(2).unwrap(), w(Z, &[0, -3]));
        let x = w(Z, &[-1, -1, 4]);
        assert_eq!(x.verschiebung(1).unwrap(), x);
        assert_eq!(
            x.verschiebung(3).unwrap().verschiebung(2).unwrap(),
            x.verschiebung(6).unwrap()
        );
        assert_eq!(x.verschiebung(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn decomposition() {
        let c = w(Z, &[-1, -1]).decompose();
        assert_eq!(c.as_slice(), elems(Z, &[1, 1]).as_slice());
        let c = WittVector::teichmuller(&Z.from_i64(7), 5).decompose();
        assert_eq!(c.as_slice(), elems(Z, &[7, 0, 0, 0, 0]).as_slice());
        let c = WittCoordinates::new(Z, elems(Z, &[0, 0, 0, 4])).unwrap();
        assert_eq!(c.reconstruct(), w(Z, &[0, 0, 0, -4]));
    }

    #[test]
    fn frobenius() {
        assert_eq!(w(Z, &[-3]).frobenius(2).unwrap(), w(Z, &[-9]));
        let x = w(Z, &[-1, -1, 4, 2]);
        assert_eq!(x.frobenius(1).unwrap(), x);
        let x = w(Z, &[-5, 0, 0, 0]);
        let fv = x.verschiebung(2).unwrap().frobenius(2).unwrap();
        assert_eq!(fv.truncate(4).unwrap(), x.int_scalar(2));
        assert_eq!(x.frobenius(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn multiplication() {
        assert_eq!(w(Z, &[-2]).mul(&w(Z, &[-3])).unwrap(), w(Z, &[-6]));
        let x = w(Z, &[-1, -1]);
        assert_eq!(x.mul(&WittVector::one(Z, 2)).unwrap(), x);
        let (a, b) = (Z.from_i64(2), Z.from_i64(3));
        let lhs = WittVector::teichmuller(&a, 3)
            .verschiebung(2)
            .unwrap()
            .mul(&WittVector::teichmuller(&b, 2).verschiebung(3).unwrap())
            .unwrap();
        let rhs = WittVector::teichmuller(&Z.from_i64(8 * 9), 1).verschiebung(6).unwrap();
        assert_eq!(lhs, rhs);
        // ghost_k vanishes unless 6 | k, and ghost_6 = 6·a^3·b^2
        let mut expected = vec![Z.zero(); 6];
        expected[5] = Z.from_i64(6 * 72);
        assert_eq!(lhs.ghost(), expected);
        assert!(w(Z, &[1]).mul(&w(Q, &[1])).is_err());
    }

    #[test]
    fn ghost_routes_agree_on_example() {
        // (1 - t)(1 - t^2) truncated at N = 2
        let x = w(Z, &[-1, -1]);
        assert_eq!(x.ghost(), elems(Z, &[1, 3]));
        assert_eq!(x.ghost_log_derivative(), elems(Z, &[1, 3]));
        let v = w(Z, &[5, 2]).verschiebung(2).unwrap();
        assert!(v.ghost()[0].is_zero());
    }

    #[test]
    fn filtration() {
        assert_eq!(w(Z, &[0, 0, -1]).filtration_degree(), Some(3));
        assert_eq!(WittVector::zero(Z, 4).filtration_degree(), None);
        assert_eq!(w(Z, &[-2]).verschiebung(4).unwrap().filtration_degree(), Some(4));
    }

    #[test]
    fn integer_inverses() {
        let half = inverse_of_integer(2, 2, Q).unwrap();
        let expected = UnitSeries::from_coefficients(
            Q,
            vec![Q.parse_element("-1/2").unwrap(), Q.parse_element("-1/8").unwrap()],
        )
        .unwrap();
        assert_eq!(half.series(), &expected);
        assert_eq!(half.int_scalar(2), WittVector::one(Q, 2));
        assert_eq!(inverse_of_integer(1, 5, Z).unwrap(), WittVector::one(Z, 5));
        let f2 = RingSpec::PrimeField(2);
        let third = inverse_of_integer(3, 8, f2).unwrap();
        assert_eq!(third.int_scalar(3), WittVector::one(f2, 8));
        assert!(matches!(inverse_of_integer(2, 4, Z), Err(Error::NotAUnit(..))));
        assert!(matches!(inverse_of_integer(0, 4, Q), Err(Error::NotAUnit(..))));
        assert!(matches!(inverse_of_integer(3, 4, RingSpec::PrimeField(3)), Err(Error::NotAUnit(..))));
        let neg = inverse_of_integer(-3, 8, Q).unwrap();
        assert_eq!(neg.int_scalar(-3), WittVector::one(Q, 8));
        assert_eq!(inverse_of_integer(-1, 6, Z).unwrap(), WittVector::one(Z, 6).neg());
    }
}
