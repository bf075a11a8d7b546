//! Endomorphisms of free modules, their characteristic series and K₀ classes.
//!
//! A [`MatrixEndo`] is a square matrix `φ` over a [`RingSpec`], standing for
//! the pair `(R^r, φ)`. Its characteristic series `det(1 - tφ)` is computed
//! with Berkowitz's division-free algorithm, so it is exact over rings with
//! zero divisors. The categorical Frobenius is `φ ↦ φ^l`; the categorical
//! Verschiebung is the `lr × lr` block companion matrix with identity blocks
//! on the subdiagonal and `φ` in the top-right corner, whose characteristic
//! series is `det(1 - t^l φ)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::parse;
use crate::rational::RationalWitt;
use crate::ring::{RingElement, RingSpec};
use crate::series::UnitPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixEndo {
    ring: RingSpec,
    size: usize,
    // row-major, size * size entries
    entries: Vec<RingElement>,
}

impl MatrixEndo {
    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    size,
                });
            }
            if let Some(bad) = r.iter().find(|e| e.ring() != ring) {
                return Err(Error::SpecMismatch {
                    left: ring,
                    right: bad.ring(),
                });
            }
            entries.extend(r);
        }
        Ok(MatrixEndo {
            ring,
            size,
            entries,
        })
    }

    pub fn from_i64_rows(ring: RingSpec, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_rows(ring, rows)
    }

    /// Parses `[[1,1],[0,2]]`.
    pub fn parse(ring: RingSpec, s: &str) -> Result<Self> {
        Self::from_rows(ring, parse::parse_rows(ring, s)?)
    }

    pub fn zero(ring: RingSpec, size: usize) -> Self {
        MatrixEndo {
            ring,
            size,
            entries: vec![ring.zero(); size * size],
        }
    }

    pub fn identity(ring: RingSpec, size: usize) -> Self {
        let mut m = Self::zero(ring, size);
        for i in 0..size {
            m.entries[i * size + i] = ring.one();
        }
        m
    }

    /// A `d × d` matrix whose characteristic series is `p` (degree `d`).
    ///
    /// This is the companion matrix of the monic reversal
    /// `λ^d + c_1 λ^(d-1) + … + c_d`: ones on the subdiagonal and
    /// `-c_d, …, -c_1` down the last column.
    pub fn companion(p: &UnitPolynomial) -> Self {
        let ring = p.ring();
        let d = p.degree();
        let c = p.coefficients();
        let mut m = Self::zero(ring, d);
        for i in 1..d {
            m.entries[i * d + i - 1] = ring.one();
        }
        for i in 0..d {
            m.entries[i * d + d - 1] = -&c[d - 1 - i];
        }
        m
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
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

    /// Matrix product; panics if the sizes differ.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        assert_eq!(self.size, other.size, "size mismatch in matrix product");
        let n = self.size;
        let mut out = Self::zero(self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.ring, self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base).expect("same ring");
            }
        }
        acc
    }

    /// Coefficients of `det(λ - φ)`, highest degree first, by Berkowitz's
    /// algorithm.
    pub fn characteristic_polynomial(&self) -> Vec<RingElement> {
        let ring = self.ring;
        let n = self.size;
        let mut poly = vec![ring.one()];
        for r in 0..n {
            // leading r×r block A, column C = φ[0..r][r], row R = φ[r][0..r]
            let a = self.get(r, r);
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(ring.one());
            toeplitz.push(-a);
            let mut col: Vec<RingElement> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                // -R·A^k·C
                let mut dot = ring.zero();
                for (j, c) in col.iter().enumerate() {
                    let rj = self.get(r, j);
                    if !rj.is_zero() && !c.is_zero() {
                        dot = &dot + &(rj * c);
                    }
                }
                toeplitz.push(-dot);
                col = (0..r)
                    .map(|i| {
                        let mut acc = ring.zero();
                        for (j, c) in col.iter().enumerate() {
                            let aij = self.get(i, j);
                            if !aij.is_zero() && !c.is_zero() {
                                acc = &acc + &(aij * c);
                            }
                        }
                        acc
                    })
                    .collect();
            }
            // lower-triangular Toeplitz (r+2)×(r+1) times poly
            let mut next = vec![ring.zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, p) in poly.iter().enumerate().take(i + 1) {
                    let t = &toeplitz[i - j];
                    if !t.is_zero() && !p.is_zero() {
                        *slot = &*slot + &(t * p);
                    }
                }
            }
            poly = next;
        }
        poly
    }

    /// `det(1 - tφ)`.
    pub fn char_series(&self) -> UnitPolynomial {
        // t^r · det(1/t - φ) lists the same coefficients in ascending order
        UnitPolynomial::normalized(self.ring, self.characteristic_polynomial())
    }

    /// The categorical Frobenius `(P, φ) ↦ (P, φ^l)`.
    pub fn frobenius(&self, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidIndex(l));
        }
        Ok(self.pow(l as u64))
    }

    /// The categorical Verschiebung: an `lr × lr` block matrix with identity
    /// blocks below the diagonal and `φ` in the top-right block.
    pub fn verschiebung(&self, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidIndex(l));
        }
        let r = self.size;
        let n = l * r;
        let mut out = Self::zero(self.ring, n);
        for b in 1..l {
            for i in 0..r {
                out.entries[(b * r + i) * n + (b - 1) * r + i] = self.ring.one();
            }
        }
        for i in 0..r {
            for j in 0..r {
                out.entries[i * n + (l - 1) * r + j] = self.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Kronecker product `φ ⊗ ψ`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (r, s) = (self.size, other.size);
        let n = r * s;
        let mut out = Self::zero(self.ring, n);
        for i in 0..r {
            for j in 0..r {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..s {
                    for l in 0..s {
                        out.entries[(i * s + k) * n + j * s + l] = a * other.get(k, l);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block diagonal `φ ⊕ ψ`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (r, s) = (self.size, other.size);
        let n = r + s;
        let mut out = Self::zero(self.ring, n);
        for i in 0..r {
            for j in 0..r {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..s {
            for j in 0..s {
                out.entries[(r + i) * n + r + j] = other.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Search bound used when no cutoff is given: the size `r` over domains,
    /// `4·r·⌈log₂ m⌉` over ℤ/m for composite m.
    pub fn default_nilpotency_cutoff(&self) -> usize {
        let r = self.size.max(1);
        match self.ring {
            RingSpec::IntegersMod(m) if !self.ring.is_domain() => {
                let log2 = (64 - (m - 1).leading_zeros()) as usize;
                4 * r * log2.max(1)
            }
            _ => r,
        }
    }

    /// Least `n <= cutoff` with `φ^n = 0`, or `None` if there is none.
    /// The empty matrix has index 0.
    pub fn nilpotency_index(&self, cutoff: Option<usize>) -> Option<usize> {
        if self.size == 0 {
            return Some(0);
        }
        let cutoff = cutoff.unwrap_or_else(|| self.default_nilpotency_cutoff());
        let mut power = self.clone();
        for n in 1..=cutoff {
            if power.is_zero() {
                return Some(n);
            }
            if n < cutoff {
                power = power.compose(self).expect("same ring");
            }
        }
        None
    }

    pub fn k0_class(&self) -> K0Class {
        K0Class {
            rank: self.size as i64,
            witt: RationalWitt::from_polynomial(self.char_series()),
        }
    }
}

impl fmt::Display for MatrixEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.size {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.size {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A class `(rank, char series)` in `ℤ ⊕ W_0(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Class {
    pub rank: i64,
    pub witt: RationalWitt,
}

impl K0Class {
    /// The class of the identity on `R`: `(1, 1 - t)`.
    pub fn unit(ring: RingSpec) -> Self {
        K0Class {
            rank: 1,
            witt: RationalWitt::one(ring),
        }
    }

    pub fn zero(ring: RingSpec) -> Self {
        K0Class {
            rank: 0,
            witt: RationalWitt::zero(ring),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.witt.ring()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(K0Class {
            rank: self.rank + other.rank,
            witt: self.witt.add(&other.witt)?,
        })
    }

    pub fn neg(&self) -> Self {
        K0Class {
            rank: -self.rank,
            witt: self.witt.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(K0Class {
            rank: self.rank * other.rank,
            witt: self.witt.mul(&other.witt)?,
        })
    }

    pub fn int_scalar(&self, m: i64) -> Self {
        K0Class {
            rank: m * self.rank,
            witt: self.witt.int_scalar(m),
        }
    }

    /// `(P, φ) - (P, 0)`: drops the rank summand.
    pub fn end0_projection(&self) -> Self {
        K0Class {
            rank: 0,
            witt: self.witt.clone(),
        }
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rank, self.witt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: RingSpec = RingSpec::Integers;

    fn m(rows: &[&[i64]]) -> MatrixEndo {
        MatrixEndo::from_i64_rows(Z, rows).unwrap()
    }

    fn poly(tail: &[i64]) -> UnitPolynomial {
        UnitPolynomial::from_i64s(Z, tail)
    }

    #[test]
    fn characteristic_series_examples() {
        assert!(m(&[&[0, 1], &[0, 0]]).char_series().is_one());
        assert_eq!(m(&[&[1, 1], &[0, 2]]).char_series(), poly(&[-3, 2]));
        assert_eq!(m(&[&[7]]).char_series(), poly(&[-7]));
        assert!(MatrixEndo::zero(Z, 0).char_series().is_one());
    }

    #[test]
    fn berkowitz_on_a_dense_3x3() {
        // det(λ - A) for A = [[2,1,0],[1,3,1],[0,1,4]] is λ^3 - 9λ^2 + 24λ - 18
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let cp: Vec<String> = a.characteristic_polynomial().iter().map(|c| c.to_string()).collect();
        assert_eq!(cp, ["1", "-9", "24", "-18"]);
    }

    #[test]
    fn companions() {
        assert_eq!(MatrixEndo::companion(&poly(&[-5])), m(&[&[5]]));
        let p = poly(&[-3, 2]);
        let c = MatrixEndo::companion(&p);
        assert_eq!(c.size(), 2);
        assert_eq!(c.char_series(), p);
        let e = MatrixEndo::companion(&UnitPolynomial::one(Z));
        assert_eq!(e.size(), 0);
        assert!(e.char_series().is_one());
    }

    #[test]
    fn frobenius() {
        assert_eq!(m(&[&[3]]).frobenius(2).unwrap(), m(&[&[9]]));
        let a = m(&[&[1, 1], &[0, 2]]);
        assert_eq!(a.frobenius(1).unwrap(), a);
        let f = a.frobenius(2).unwrap();
        assert_eq!(f, m(&[&[1, 3], &[0, 4]]));
        assert_eq!(f.char_series(), poly(&[-5, 4]));
        assert_eq!(a.frobenius(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn verschiebung() {
        let v = m(&[&[5]]).verschiebung(2).unwrap();
        assert_eq!(v, m(&[&[0, 5], &[1, 0]]));
        assert_eq!(v.char_series(), poly(&[0, -5]));
        let a = m(&[&[1, 1], &[0, 2]]);
        assert_eq!(a.verschiebung(1).unwrap(), a);
        let v3 = a.verschiebung(3).unwrap();
        assert_eq!(v3.size(), 6);
        assert_eq!(v3.char_series(), poly(&[0, 0, -3, 0, 0, 2]));
        assert_eq!(a.verschiebung(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn tensor_and_sum() {
        let t = m(&[&[2]]).tensor(&m(&[&[3]])).unwrap();
        assert_eq!(t, m(&[&[6]]));
        let a = m(&[&[1, 1], &[0, 2]]);
        let s = a.direct_sum(&MatrixEndo::zero(Z, 1)).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.char_series(), a.char_series());
        assert_eq!(a.tensor(&m(&[&[5]])).unwrap().char_series(), poly(&[-15, 50]));
        let q = MatrixEndo::identity(RingSpec::Rationals, 1);
        assert!(a.tensor(&q).is_err());
    }

    #[test]
    fn nilpotency() {
        assert_eq!(m(&[&[0, 1], &[0, 0]]).nilpotency_index(None), Some(2));
        let z4 = RingSpec::integers_mod(4).unwrap();
        let two = MatrixEndo::from_i64_rows(z4, &[&[2]]).unwrap();
        assert_eq!(two.default_nilpotency_cutoff(), 8);
        assert_eq!(two.nilpotency_index(None), Some(2));
        assert_eq!(MatrixEndo::identity(Z, 1).nilpotency_index(Some(8)), None);
        assert_eq!(MatrixEndo::zero(Z, 3).nilpotency_index(None), Some(1));
        assert_eq!(MatrixEndo::zero(Z, 0).nilpotency_index(None), Some(0));
        // index 3 but cutoff 2
        let j3 = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(j3.nilpotency_index(None), Some(3));
        assert_eq!(j3.nilpotency_index(Some(2)), None);
    }

    #[test]
    fn k0_classes() {
        let k = m(&[&[0, 1], &[0, 0]]).k0_class();
        assert_eq!(k.rank, 2);
        assert!(k.witt.is_zero());
        let a = m(&[&[1, 1], &[0, 2]]).k0_class();
        assert_eq!(a.mul(&K0Class::unit(Z)).unwrap(), a);
        assert_eq!(MatrixEndo::identity(Z, 1).k0_class(), K0Class::unit(Z));
        // V_2 of the zero endomorphism of R^3 is nilpotent: class (6, 0)
        let zero3 = MatrixEndo::zero(Z, 3);
        let v = zero3.verschiebung(2).unwrap().k0_class();
        assert_eq!(v, K0Class { rank: 6, witt: RationalWitt::zero(Z) });
        assert_eq!(v, zero3.k0_class().int_scalar(2));
        assert_eq!(a.end0_projection().rank, 0);
    }

    #[test]
    fn matrix_text() {
        let a = MatrixEndo::parse(Z, "[[1, 1], [0, 2]]").unwrap();
        assert_eq!(a.to_string(), "[[1,1],[0,2]]");
        assert_eq!(MatrixEndo::parse(Z, &a.to_string()).unwrap(), a);
        assert_eq!(MatrixEndo::parse(Z, "[]").unwrap().size(), 0);
        assert!(matches!(
            MatrixEndo::parse(Z, "[[1,2],[3]]"),
            Err(Error::NotSquare { row: 1, .. })
        ));
    }
}
