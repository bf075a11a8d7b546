//! Cross-checks against independent reference computations.

use proptest::prelude::*;
use wittkit::{
    inverse_of_integer, MatrixEndo, RationalWitt, RingElement, RingSpec, UnitPolynomial,
    UnitSeries, WittVector,
};

const Z: RingSpec = RingSpec::Integers;
const Q: RingSpec = RingSpec::Rationals;

fn rings() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(Z),
        Just(Q),
        Just(RingSpec::IntegersMod(6)),
        Just(RingSpec::IntegersMod(8)),
        Just(RingSpec::PrimeField(5)),
    ]
}

fn witt(ring: RingSpec, tail: &[i64]) -> WittVector {
    WittVector::from_series(UnitSeries::from_i64s(ring, tail))
}

// Polynomials as dense coefficient vectors, for the Leibniz oracle.

fn poly_mul(ring: RingSpec, a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_add(ring: RingSpec, a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
    let mut out = vec![ring.zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = &out[i] + x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] + y;
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        // insert n-1 at position k; moving it past (n-1-k) entries
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push((q, odd ^ ((n - 1 - k) % 2 == 1)));
        }
    }
    out
}

/// `det(I - tM)` by the Leibniz formula, entries linear polynomials in `t`.
fn leibniz_char(m: &[Vec<i64>], ring: RingSpec) -> Vec<RingElement> {
    let n = m.len();
    let entry = |i: usize, j: usize| -> Vec<RingElement> {
        let c = -&ring.from_i64(m[i][j]);
        if i == j {
            vec![ring.one(), c]
        } else {
            vec![ring.zero(), c]
        }
    };
    let mut det = vec![ring.zero()];
    for (perm, odd) in permutations(n) {
        let mut term = vec![ring.one()];
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(ring, &term, &entry(i, j));
        }
        if odd {
            term = term.iter().map(|c| -c).collect();
        }
        det = poly_add(ring, &det, &term);
    }
    while det.len() > 1 && det.last().is_some_and(|c| c.is_zero()) {
        det.pop();
    }
    det
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
}

fn endo(ring: RingSpec, m: &[Vec<i64>]) -> MatrixEndo {
    let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
    MatrixEndo::from_i64_rows(ring, &rows).unwrap()
}

/// Multiplication over a ℚ-algebra through the ghost isomorphism: ghosts by
/// the power-sum recursion, product pointwise, back by Newton's identities.
fn ghost_mul_over_q(x: &UnitSeries, y: &UnitSeries) -> UnitSeries {
    let n = x.precision();
    let ghosts = |s: &UnitSeries| -> Vec<RingElement> {
        let mut g: Vec<RingElement> = Vec::new();
        for k in 1..=n {
            let mut acc = -&(&Q.from_i64(k as i64) * s.coeff(k));
            for i in 1..k {
                acc = &acc - &(s.coeff(i) * &g[k - i - 1]);
            }
            g.push(acc);
        }
        g
    };
    let (gx, gy) = (ghosts(x), ghosts(y));
    let g: Vec<RingElement> = gx.iter().zip(&gy).map(|(a, b)| a * b).collect();
    let mut c = vec![Q.one()];
    for k in 1..=n {
        let mut acc = Q.zero();
        for i in 0..k {
            acc = &acc + &(&c[i] * &g[k - i - 1]);
        }
        c.push(-&(&acc * &Q.from_i64(k as i64).inverse().unwrap()));
    }
    UnitSeries::from_coefficients(Q, c[1..].to_vec()).unwrap()
}

/// `a_n = -(1/l) Σ a_{i_1}⋯a_{i_l}` over ordered `l`-tuples summing to `n`
/// with every part below `n`, enumerated literally; `a_1 = -1/l`.
fn inverse_by_compositions(l: usize, n: usize, ring: RingSpec) -> Vec<RingElement> {
    let inv = ring.from_i64(l as i64).inverse().unwrap();
    let mut a = vec![ring.one(), -&inv];
    for target in 2..=n {
        let mut sum = ring.zero();
        let mut parts = vec![0usize; l];
        loop {
            if parts.iter().sum::<usize>() == target {
                let mut prod = ring.one();
                for &p in &parts {
                    prod = &prod * &a[p];
                }
                sum = &sum + &prod;
            }
            // odometer over parts in 0..target
            let mut i = 0;
            while i < l {
                parts[i] += 1;
                if parts[i] < target {
                    break;
                }
                parts[i] = 0;
                i += 1;
            }
            if i == l {
                break;
            }
        }
        a.push(-&(&inv * &sum));
    }
    a
}

#[test]
fn permutation_signs() {
    let perms = permutations(4);
    assert_eq!(perms.len(), 24);
    assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 12);
}

#[test]
fn inverse_of_integer_matches_composition_sum() {
    for (ring, ls) in [
        (Q, &[2usize, 3, 5][..]),
        (RingSpec::PrimeField(7), &[2, 3, 5][..]),
        (RingSpec::IntegersMod(25), &[2, 3][..]),
    ] {
        for &l in ls {
            let n = if l == 5 { 7 } else { 9 };
            let expected = inverse_by_compositions(l, n, ring);
            let got = inverse_of_integer(l as i64, n, ring).unwrap();
            assert_eq!(got.series().coefficients(), &expected[1..], "{ring}, l = {l}");
        }
    }
}

#[test]
fn inverse_of_integer_rejects_non_units() {
    assert!(inverse_of_integer(2, 4, Z).is_err());
    assert!(inverse_of_integer(3, 4, RingSpec::IntegersMod(6)).is_err());
    assert!(inverse_of_integer(0, 4, Q).is_err());
    assert!(inverse_of_integer(-1, 4, Z).is_ok());
}

#[test]
fn ghost_vectors_of_known_elements() {
    // V_2[2] V_3[3] = V_6[72]: ghosts vanish off multiples of 6
    let x = witt(Z, &[0, -2, 0, 0, 0, 0]).mul(&witt(Z, &[0, 0, -3, 0, 0, 0])).unwrap();
    let g: Vec<String> = x.ghost().iter().map(|c| c.to_string()).collect();
    assert_eq!(g, ["0", "0", "0", "0", "0", "432"]);
    assert_eq!(x.ghost(), x.ghost_log_derivative());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn char_series_matches_leibniz(ring in rings(), m in square(4)) {
        let phi = endo(ring, &m);
        let expected = leibniz_char(&m, ring);
        let got = phi.char_series();
        let mut dense = vec![ring.one()];
        dense.extend(got.coefficients().iter().cloned());
        prop_assert_eq!(dense, expected);
    }

    #[test]
    fn mul_matches_ghost_isomorphism_over_q(
        a in prop::collection::vec(-9i64..=9, 8),
        b in prop::collection::vec(-9i64..=9, 8),
        d in 1i64..=6,
    ) {
        let scale = Q.from_i64(d).inverse().unwrap();
        let series = |v: &[i64]| {
            let tail = v.iter().map(|&c| &Q.from_i64(c) * &scale).collect();
            UnitSeries::from_coefficients(Q, tail).unwrap()
        };
        let (x, y) = (series(&a), series(&b));
        let prod = WittVector::from_series(x.clone()).mul(&WittVector::from_series(y.clone())).unwrap();
        prop_assert_eq!(prod.series(), &ghost_mul_over_q(&x, &y));
    }

    #[test]
    fn ghosts_agree_and_are_multiplicative(
        a in prop::collection::vec(-9i64..=9, 10),
        b in prop::collection::vec(-9i64..=9, 10),
    ) {
        let (x, y) = (witt(Z, &a), witt(Z, &b));
        prop_assert_eq!(x.ghost(), x.ghost_log_derivative());
        let pointwise: Vec<RingElement> =
            x.ghost().iter().zip(y.ghost()).map(|(g, h)| g * &h).collect();
        prop_assert_eq!(x.mul(&y).unwrap().ghost_log_derivative(), pointwise);
    }

    #[test]
    fn frobenius_shifts_ghosts(a in prop::collection::vec(-9i64..=9, 12), n in 1usize..=4) {
        let x = witt(Z, &a);
        let f = x.frobenius(n).unwrap().ghost();
        let g = x.ghost();
        for m in 1..=12 / n {
            prop_assert_eq!(&f[m - 1], &g[n * m - 1]);
        }
    }

    #[test]
    fn modular_mul_is_reduction_of_integer_mul(
        m in 2u64..=30,
        a in prop::collection::vec(0i64..=29, 8),
        b in prop::collection::vec(0i64..=29, 8),
    ) {
        let ring = RingSpec::IntegersMod(m);
        let direct = witt(ring, &a).mul(&witt(ring, &b)).unwrap();
        let over_z = witt(Z, &a).mul(&witt(Z, &b)).unwrap();
        let reduced: Vec<RingElement> =
            over_z.series().coefficients().iter().map(|c| ring.reduce(c).unwrap()).collect();
        prop_assert_eq!(direct.series().coefficients(), reduced.as_slice());
    }

    #[test]
    fn expand_is_a_ring_homomorphism(
        ring in rings(),
        p in prop::collection::vec(prop::collection::vec(-9i64..=9, 0..=3), 4),
    ) {
        let poly = |v: &[i64]| UnitPolynomial::from_i64s(ring, v);
        let x = RationalWitt::new(poly(&p[0]), poly(&p[1])).unwrap();
        let y = RationalWitt::new(poly(&p[2]), poly(&p[3])).unwrap();
        let n = 8;
        prop_assert_eq!(
            x.add(&y).unwrap().expand(n),
            x.expand(n).add(&y.expand(n)).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y).unwrap().expand(n),
            x.expand(n).mul(&y.expand(n)).unwrap()
        );
        prop_assert_eq!(x.neg().expand(n), x.expand(n).neg());
    }

    #[test]
    fn k0_class_additive_and_multiplicative(
        ring in rings(),
        a in square(4),
        b in square(3),
    ) {
        let (phi, psi) = (endo(ring, &a), endo(ring, &b));
        let sum = phi.k0_class().add(&psi.k0_class()).unwrap();
        prop_assert_eq!(phi.direct_sum(&psi).unwrap().k0_class(), sum);
        let prod = phi.k0_class().mul(&psi.k0_class()).unwrap();
        prop_assert_eq!(phi.tensor(&psi).unwrap().k0_class(), prod);
    }

    #[test]
    fn nilpotent_over_domain_has_trivial_char_series(
        ring in prop_oneof![Just(Z), Just(RingSpec::PrimeField(3))],
        upper in prop::collection::vec(-9i64..=9, 10),
        size in 0usize..=4,
    ) {
        // strictly upper triangular, conjugated by an elementary matrix
        let mut m = vec![vec![0i64; size]; size];
        let mut it = upper.iter();
        for (i, row) in m.iter_mut().enumerate() {
            for entry in row.iter_mut().skip(i + 1) {
                *entry = *it.next().unwrap();
            }
        }
        let phi = endo(ring, &m);
        let index = phi.nilpotency_index(None);
        prop_assert!(index.is_some_and(|k| k <= size));
        prop_assert!(phi.char_series().is_one());
        if size >= 2 {
            let mut e = vec![vec![0i64; size]; size];
            for (i, row) in e.iter_mut().enumerate() {
                row[i] = 1;
            }
            e[size - 1][0] = upper[0];
            let mut e_inv = e.clone();
            e_inv[size - 1][0] = -upper[0];
            let conj = endo(ring, &e).compose(&phi).unwrap().compose(&endo(ring, &e_inv)).unwrap();
            prop_assert_eq!(conj.nilpotency_index(None), index);
            prop_assert!(conj.char_series().is_one());
        }
    }
}
