//! Random inputs for the verification suites.
//!
//! Integers are drawn from `[-9, 9]`, rationals as `n/d` with `n` in `[-9, 9]`
//! and `d` in `[1, 9]`, and modular residues from the full range `[0, m)`.

use rand::Rng;
use wittkit::{MatrixEndo, RationalWitt, RingElement, RingSpec, UnitPolynomial, UnitSeries, WittVector};

pub fn element<R: Rng>(ring: RingSpec, rng: &mut R) -> RingElement {
    match ring {
        RingSpec::Integers => ring.from_i64(rng.gen_range(-9..=9)),
        RingSpec::Rationals => {
            let n = ring.from_i64(rng.gen_range(-9..=9));
            let d = ring.from_i64(rng.gen_range(1..=9));
            &n * &d.inverse().expect("nonzero")
        }
        RingSpec::IntegersMod(m) | RingSpec::PrimeField(m) => {
            ring.from_bigint(&rng.gen_range(0..m).into())
        }
    }
}

pub fn series<R: Rng>(ring: RingSpec, precision: usize, rng: &mut R) -> UnitSeries {
    let tail = (0..precision).map(|_| element(ring, rng)).collect();
    UnitSeries::from_coefficients(ring, tail).expect("same ring")
}

pub fn witt<R: Rng>(ring: RingSpec, precision: usize, rng: &mut R) -> WittVector {
    WittVector::from_series(series(ring, precision, rng))
}

/// A unit polynomial of degree at most `max_degree`.
pub fn polynomial<R: Rng>(ring: RingSpec, max_degree: usize, rng: &mut R) -> UnitPolynomial {
    let d = rng.gen_range(0..=max_degree);
    let tail = (0..d).map(|_| element(ring, rng)).collect();
    UnitPolynomial::from_coefficients(ring, tail).expect("same ring")
}

pub fn rational<R: Rng>(ring: RingSpec, max_degree: usize, rng: &mut R) -> RationalWitt {
    let num = polynomial(ring, max_degree, rng);
    let den = polynomial(ring, max_degree, rng);
    RationalWitt::new(num, den).expect("same ring")
}

pub fn matrix<R: Rng>(ring: RingSpec, size: usize, rng: &mut R) -> MatrixEndo {
    let rows = (0..size)
        .map(|_| (0..size).map(|_| element(ring, rng)).collect())
        .collect();
    MatrixEndo::from_rows(ring, rows).expect("square")
}

/// Block-diagonal nilpotent Jordan matrix with the given block sizes.
pub fn jordan_nilpotent(ring: RingSpec, blocks: &[usize]) -> MatrixEndo {
    let n: usize = blocks.iter().sum();
    let mut rows = vec![vec![ring.zero(); n]; n];
    let mut start = 0;
    for &b in blocks {
        for i in start..start + b - 1 {
            rows[i][i + 1] = ring.one();
        }
        start += b;
    }
    MatrixEndo::from_rows(ring, rows).expect("square")
}

/// All partitions of `n` into positive parts, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
