//! Named verification suites.
//!
//! Each suite is a list of properties checked on random (or exhaustively
//! enumerated) inputs. Every property draws from its own ChaCha stream seeded
//! by the invocation seed and the property name, so reports depend only on
//! the invocation.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wittkit::{inverse_of_integer, K0Class, MatrixEndo, RingSpec, UnitSeries, WittVector};

use crate::gen;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    WittAxioms,
    FrobeniusVerschiebung,
    ProjectionFormula,
    VerfrobFp,
    InvertInt,
    AlmkvistFunctoriality,
    GhostOracle,
    TorsionMechanism,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::WittAxioms,
        Suite::FrobeniusVerschiebung,
        Suite::ProjectionFormula,
        Suite::VerfrobFp,
        Suite::InvertInt,
        Suite::AlmkvistFunctoriality,
        Suite::GhostOracle,
        Suite::TorsionMechanism,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::WittAxioms => "witt-axioms",
            Suite::FrobeniusVerschiebung => "frobenius-verschiebung",
            Suite::ProjectionFormula => "projection-formula",
            Suite::VerfrobFp => "verfrob-fp",
            Suite::InvertInt => "invert-int",
            Suite::AlmkvistFunctoriality => "almkvist-functoriality",
            Suite::GhostOracle => "ghost-oracle",
            Suite::TorsionMechanism => "torsion-mechanism",
            Suite::All => "all",
        }
    }

    /// Why the suite cannot run over `ring`, if it cannot.
    pub fn unsupported(&self, ring: RingSpec) -> Option<String> {
        match self {
            Suite::VerfrobFp | Suite::TorsionMechanism if ring.prime_characteristic().is_none() => {
                Some(format!("{} needs a ring of prime characteristic, got {ring}", self.name()))
            }
            _ => None,
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub ring: RingSpec,
    pub precision: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub ring: String,
    pub precision: usize,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
    pub skipped: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

type Outcome = Result<(), String>;

fn lib<T>(r: wittkit::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

fn same<T: PartialEq + Display>(lhs: &T, rhs: &T, ctx: impl FnOnce() -> String) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}; lhs = {lhs}; rhs = {rhs}", ctx()))
    }
}

fn check(cond: bool, ctx: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(ctx())
    }
}

fn stream(seed: u64, name: &str) -> ChaCha8Rng {
    // FNV-1a over the property name, mixed into the seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

struct Runner {
    cfg: SuiteConfig,
    suite: &'static str,
    out: Vec<PropertyReport>,
}

impl Runner {
    fn new(suite: Suite, cfg: SuiteConfig) -> Self {
        Runner {
            cfg,
            suite: suite.name(),
            out: Vec::new(),
        }
    }

    fn record(&mut self, name: String, results: impl Iterator<Item = Outcome>) {
        let mut report = PropertyReport {
            name,
            trials: 0,
            passed: 0,
            failed: 0,
            counterexample: None,
        };
        for r in results {
            report.trials += 1;
            match r {
                Ok(()) => report.passed += 1,
                Err(e) => {
                    report.failed += 1;
                    report.counterexample.get_or_insert(e);
                }
            }
        }
        self.out.push(report);
    }

    /// Runs `check` on `cfg.trials` random draws.
    fn random(&mut self, name: impl Into<String>, check: impl Fn(&mut ChaCha8Rng) -> Outcome) {
        let name = name.into();
        let mut rng = stream(self.cfg.seed, &format!("{}/{}", self.suite, name));
        let trials = self.cfg.trials;
        self.record(name, (0..trials).map(|_| check(&mut rng)));
    }

    /// Runs `check` once per enumerated case.
    fn cases<C>(&mut self, name: impl Into<String>, cases: Vec<C>, check: impl Fn(&C) -> Outcome) {
        self.record(name.into(), cases.iter().map(check));
    }
}

pub fn run(suite: Suite, cfg: SuiteConfig) -> SuiteReport {
    let mut properties = Vec::new();
    let mut skipped = Vec::new();
    let selected: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in selected {
        if let Some(reason) = s.unsupported(cfg.ring) {
            skipped.push(reason);
            continue;
        }
        let mut runner = Runner::new(s, cfg);
        match s {
            Suite::WittAxioms => witt_axioms(&mut runner),
            Suite::FrobeniusVerschiebung => frobenius_verschiebung(&mut runner),
            Suite::ProjectionFormula => projection_formula(&mut runner),
            Suite::VerfrobFp => verfrob_fp(&mut runner),
            Suite::InvertInt => invert_int(&mut runner),
            Suite::AlmkvistFunctoriality => almkvist_functoriality(&mut runner),
            Suite::GhostOracle => ghost_oracle(&mut runner),
            Suite::TorsionMechanism => torsion_mechanism(&mut runner),
            Suite::All => unreachable!(),
        }
        let prefix = suite == Suite::All;
        properties.extend(runner.out.into_iter().map(|mut p| {
            if prefix {
                p.name = format!("{}/{}", s.name(), p.name);
            }
            p
        }));
    }
    SuiteReport {
        suite: suite.name().to_string(),
        ring: cfg.ring.to_string(),
        precision: cfg.precision,
        trials: cfg.trials,
        seed: cfg.seed,
        passed: properties.iter().all(PropertyReport::ok),
        properties,
        skipped,
        duration_ms: None,
    }
}

fn witt_axioms(r: &mut Runner) {
    let ring = r.cfg.ring;
    let n = r.cfg.precision;
    let triple = |rng: &mut ChaCha8Rng| {
        (gen::witt(ring, n, rng), gen::witt(ring, n, rng), gen::witt(ring, n, rng))
    };
    r.random("add-associative", |rng| {
        let (x, y, z) = triple(rng);
        let lhs = lib(lib(x.add(&y))?.add(&z))?;
        let rhs = lib(x.add(&lib(y.add(&z))?))?;
        same(&lhs, &rhs, || format!("x = {x}; y = {y}; z = {z}"))
    });
    r.random("add-commutative", |rng| {
        let (x, y, _) = triple(rng);
        same(&lib(x.add(&y))?, &lib(y.add(&x))?, || format!("x = {x}; y = {y}"))
    });
    r.random("add-identity-and-inverse", |rng| {
        let x = gen::witt(ring, n, rng);
        same(&lib(x.add(&WittVector::zero(ring, n)))?, &x, || format!("x = {x}"))?;
        check(lib(x.add(&x.neg()))?.is_zero(), || format!("x + (-x) != 0 for x = {x}"))
    });
    r.random("mul-associative", |rng| {
        let (x, y, z) = triple(rng);
        let lhs = lib(lib(x.mul(&y))?.mul(&z))?;
        let rhs = lib(x.mul(&lib(y.mul(&z))?))?;
        same(&lhs, &rhs, || format!("x = {x}; y = {y}; z = {z}"))
    });
    r.random("mul-commutative", |rng| {
        let (x, y, _) = triple(rng);
        same(&lib(x.mul(&y))?, &lib(y.mul(&x))?, || format!("x = {x}; y = {y}"))
    });
    r.random("mul-identity", |rng| {
        let x = gen::witt(ring, n, rng);
        same(&lib(x.mul(&WittVector::one(ring, n)))?, &x, || format!("x = {x}"))?;
        check(lib(x.mul(&WittVector::zero(ring, n)))?.is_zero(), || format!("x * 0 != 0 for x = {x}"))
    });
    r.random("distributive", |rng| {
        let (x, y, z) = triple(rng);
        let lhs = lib(x.mul(&lib(y.add(&z))?))?;
        let rhs = lib(lib(x.mul(&y))?.add(&lib(x.mul(&z))?))?;
        same(&lhs, &rhs, || format!("x = {x}; y = {y}; z = {z}"))
    });
    r.random("teichmuller-multiplicative", |rng| {
        let (a, b) = (gen::element(ring, rng), gen::element(ring, rng));
        let lhs = lib(WittVector::teichmuller(&a, n).mul(&WittVector::teichmuller(&b, n)))?;
        same(&lhs, &WittVector::teichmuller(&(&a * &b), n), || format!("a = {a}; b = {b}"))
    });
    r.random("decompose-roundtrip", |rng| {
        let x = gen::witt(ring, n, rng);
        same(&x.decompose().reconstruct(), &x, || format!("x = {x}"))
    });
}

fn index<R: Rng>(rng: &mut R) -> usize {
    rng.gen_range(1..=6)
}

fn frobenius_verschiebung(r: &mut Runner) {
    let ring = r.cfg.ring;
    let k = r.cfg.precision;
    r.random("F_n V_n = n", |rng| {
        let n = index(rng);
        let x = gen::witt(ring, k, rng);
        let lhs = lib(lib(x.verschiebung(n))?.frobenius_exact(n))?;
        same(&lhs, &x.int_scalar(n as i64), || format!("n = {n}; x = {x}"))
    });
    r.random("F_m V_n = V_n F_m for coprime m, n", |rng| {
        let (m, n) = loop {
            let (m, n) = (index(rng), index(rng));
            if m.gcd(&n) == 1 {
                break (m, n);
            }
        };
        // F_m needs m-fold input precision to be exact to K
        let x = gen::witt(ring, m * k, rng);
        let lhs = lib(lib(x.verschiebung(n))?.frobenius_exact(m))?;
        let rhs = lib(lib(x.frobenius_exact(m))?.verschiebung(n))?;
        same(&lhs, &rhs, || format!("m = {m}; n = {n}; x = {x}"))
    });
    r.random("F_m F_n = F_mn", |rng| {
        let (m, n) = (index(rng), index(rng));
        let x = gen::witt(ring, m * n * k, rng);
        let lhs = lib(lib(x.frobenius_exact(n))?.frobenius_exact(m))?;
        let rhs = lib(x.frobenius_exact(m * n))?;
        same(&lhs, &rhs, || format!("m = {m}; n = {n}; x = {x}"))
    });
    r.random("V_m V_n = V_mn", |rng| {
        let (m, n) = (index(rng), index(rng));
        let x = gen::witt(ring, k, rng);
        let lhs = lib(lib(x.verschiebung(n))?.verschiebung(m))?;
        same(&lhs, &lib(x.verschiebung(m * n))?, || format!("m = {m}; n = {n}; x = {x}"))
    });
    r.random("F_n [a] = [a^n]", |rng| {
        let n = index(rng);
        let a = gen::element(ring, rng);
        let lhs = lib(WittVector::teichmuller(&a, k).frobenius(n))?;
        same(&lhs, &WittVector::teichmuller(&a.pow(n as u64), k), || format!("n = {n}; a = {a}"))
    });
    r.random("V_n additive", |rng| {
        let n = index(rng);
        let (x, y) = (gen::witt(ring, k, rng), gen::witt(ring, k, rng));
        let lhs = lib(lib(x.add(&y))?.verschiebung(n))?;
        let rhs = lib(lib(x.verschiebung(n))?.add(&lib(y.verschiebung(n))?))?;
        same(&lhs, &rhs, || format!("n = {n}; x = {x}; y = {y}"))
    });
    r.random("F_n ring homomorphism", |rng| {
        let n = index(rng);
        let (x, y) = (gen::witt(ring, n * k, rng), gen::witt(ring, n * k, rng));
        let f = |w: &WittVector| -> Result<WittVector, String> { lib(w.frobenius_exact(n)) };
        let ctx = || format!("n = {n}; x = {x}; y = {y}");
        same(&f(&lib(x.add(&y))?)?, &lib(f(&x)?.add(&f(&y)?))?, ctx)?;
        same(&f(&lib(x.mul(&y))?)?, &lib(f(&x)?.mul(&f(&y)?))?, ctx)?;
        same(&f(&WittVector::one(ring, n * k))?, &WittVector::one(ring, k), ctx)
    });
}

fn verfrob_fp(r: &mut Runner) {
    let ring = r.cfg.ring;
    let n = r.cfg.precision;
    let p = ring.prime_characteristic().expect("checked by caller") as usize;
    for l in 1..=2u32 {
        let q = p.pow(l);
        r.random(format!("V_q F_q = q for q = {p}^{l}"), |rng| {
            let x = gen::witt(ring, n, rng);
            let lhs = lib(lib(lib(x.frobenius(q))?.verschiebung(q))?.truncate(n))?;
            same(&lhs, &x.int_scalar(q as i64), || format!("x = {x}"))
        });
    }
}

fn invert_int(r: &mut Runner) {
    let ring = r.cfg.ring;
    let n = r.cfg.precision;
    let candidates: Vec<i64> = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11]
        .into_iter()
        .filter(|&l| ring.from_i64(l).is_unit())
        .collect();
    let one = WittVector::one(ring, n);
    let target = UnitSeries::from_i64s(ring, &{
        let mut t = vec![0; n];
        if n > 0 {
            t[0] = -1;
        }
        t
    });
    r.cases("a^l = 1 - t", candidates.clone(), |&l| {
        let a = lib(inverse_of_integer(l, n, ring))?;
        same(&a.series().pow(l), &target, || format!("l = {l}; a = {a}"))
    });
    r.cases("a * l = 1 in the Witt ring", candidates, |&l| {
        let a = lib(inverse_of_integer(l, n, ring))?;
        let l_witt = one.int_scalar(l);
        same(&lib(a.mul(&l_witt))?, &one, || format!("l = {l}; a = {a}"))
    });
}

fn almkvist_functoriality(r: &mut Runner) {
    let ring = r.cfg.ring;
    let k = r.cfg.precision;
    let draw = |rng: &mut ChaCha8Rng| {
        let size = rng.gen_range(0..=5);
        let l = rng.gen_range(1..=4);
        (gen::matrix(ring, size, rng), l)
    };
    r.random("char(F_l phi) = F_l char(phi)", |rng| {
        let (phi, l) = draw(rng);
        let lhs = lib(phi.frobenius(l))?.char_series().to_series(k);
        let expanded = phi.char_series().to_series(l * k);
        let rhs = lib(WittVector::from_series(expanded).frobenius_exact(l))?;
        same(&lhs, rhs.series(), || format!("l = {l}; phi = {phi}"))
    });
    r.random("char(V_l phi) = V_l char(phi)", |rng| {
        let (phi, l) = draw(rng);
        let lhs = lib(phi.verschiebung(l))?.char_series();
        let rhs = lib(phi.char_series().substitute(l))?;
        same(&lhs, &rhs, || format!("l = {l}; phi = {phi}"))?;
        let witt_side = lib(WittVector::from_series(phi.char_series().to_series(k)).verschiebung(l))?;
        same(&lhs.to_series(l * k), witt_side.series(), || format!("l = {l}; phi = {phi}"))
    });
    r.random("rational F_l matches matrix power", |rng| {
        let (phi, l) = draw(rng);
        let lhs = lib(phi.k0_class().witt.frobenius(l))?;
        same(&lhs, &lib(phi.frobenius(l))?.k0_class().witt, || format!("l = {l}; phi = {phi}"))
    });
}

fn projection_formula(r: &mut Runner) {
    let ring = r.cfg.ring;
    let k = r.cfg.precision;
    let draw = |rng: &mut ChaCha8Rng| {
        let (s, t) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let l = rng.gen_range(1..=3);
        (gen::matrix(ring, s, rng), gen::matrix(ring, t, rng), l)
    };
    r.random("F_l(X (x) Y) = F_l X (x) F_l Y", |rng| {
        let (x, y, l) = draw(rng);
        let lhs = lib(lib(x.tensor(&y))?.frobenius(l))?.k0_class();
        let rhs = lib(lib(x.frobenius(l))?.tensor(&lib(y.frobenius(l))?))?.k0_class();
        same(&lhs, &rhs, || format!("l = {l}; X = {x}; Y = {y}"))
    });
    r.random("X (x) V_l Y = V_l(F_l X (x) Y)", |rng| {
        let (x, y, l) = draw(rng);
        let lhs = lib(x.tensor(&lib(y.verschiebung(l))?))?.k0_class();
        let rhs = lib(lib(lib(x.frobenius(l))?.tensor(&y))?.verschiebung(l))?.k0_class();
        same(&lhs, &rhs, || format!("l = {l}; X = {x}; Y = {y}"))
    });
    r.random("x * V_n y = V_n(F_n x * y) in W_N", |rng| {
        let n = rng.gen_range(1..=3);
        let x = gen::witt(ring, n * k, rng);
        let y = gen::witt(ring, k, rng);
        let lhs = lib(x.mul(&lib(y.verschiebung(n))?))?;
        let fx = lib(x.frobenius_exact(n))?;
        let rhs = lib(lib(fx.mul(&y))?.verschiebung(n))?;
        same(&lhs, &rhs, || format!("n = {n}; x = {x}; y = {y}"))
    });
}

fn ghost_oracle(r: &mut Runner) {
    let ring = r.cfg.ring;
    let n = r.cfg.precision;
    let pair = |rng: &mut ChaCha8Rng| (gen::witt(ring, n, rng), gen::witt(ring, n, rng));
    let show = |v: &[wittkit::RingElement]| {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    };
    r.random("divisor-sum and log-derivative ghosts agree", |rng| {
        let x = gen::witt(ring, n, rng);
        let (a, b) = (x.ghost(), x.ghost_log_derivative());
        check(a == b, || format!("x = {x}; divisor sum = ({}); log derivative = ({})", show(&a), show(&b)))
    });
    if ring.is_torsion_free() {
        r.random("ghost(x + y) = ghost(x) + ghost(y)", |rng| {
            let (x, y) = pair(rng);
            let lhs = lib(x.add(&y))?.ghost();
            let rhs: Vec<_> = x.ghost_log_derivative().iter().zip(y.ghost_log_derivative()).map(|(a, b)| a + &b).collect();
            check(lhs == rhs, || format!("x = {x}; y = {y}"))
        });
        r.random("ghost(x * y) = ghost(x) * ghost(y)", |rng| {
            let (x, y) = pair(rng);
            let prod = lib(x.mul(&y))?;
            let rhs: Vec<_> = x.ghost_log_derivative().iter().zip(y.ghost_log_derivative()).map(|(a, b)| a * &b).collect();
            check(prod.ghost() == rhs && prod.ghost_log_derivative() == rhs, || {
                format!("x = {x}; y = {y}; x*y = {prod}")
            })
        });
        r.random("ghost(V_n x)_m = n ghost(x)_(m/n)", |rng| {
            let k = rng.gen_range(1..=4);
            let x = gen::witt(ring, n, rng);
            let v = lib(x.verschiebung(k))?.ghost_log_derivative();
            let gx = x.ghost();
            let ok = v.iter().enumerate().all(|(i, g)| {
                let m = i + 1;
                if m % k == 0 {
                    *g == &ring.from_i64(k as i64) * &gx[m / k - 1]
                } else {
                    g.is_zero()
                }
            });
            check(ok, || format!("n = {k}; x = {x}"))
        });
        r.random("ghost(F_n x)_m = ghost(x)_(nm)", |rng| {
            let k = rng.gen_range(1..=4);
            let x = gen::witt(ring, n, rng);
            let f = lib(x.frobenius(k))?.ghost_log_derivative();
            let gx = x.ghost();
            let ok = (1..=n / k).all(|m| f[m - 1] == gx[k * m - 1]);
            check(ok, || format!("n = {k}; x = {x}"))
        });
    } else {
        let lift = |w: &WittVector| -> WittVector {
            let tail = w.series().coefficients().iter().map(|c| c.lift().expect("modular")).collect();
            WittVector::from_series(UnitSeries::from_coefficients(RingSpec::Integers, tail).expect("Z"))
        };
        let reduce = |w: &WittVector| -> Result<WittVector, String> {
            let tail = w
                .series()
                .coefficients()
                .iter()
                .map(|c| lib(ring.reduce(c)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(WittVector::from_series(lib(UnitSeries::from_coefficients(ring, tail))?))
        };
        r.random("mul agrees with lift, multiply over Z, reduce", |rng| {
            let (x, y) = pair(rng);
            let direct = lib(x.mul(&y))?;
            let transported = reduce(&lib(lift(&x).mul(&lift(&y)))?)?;
            same(&direct, &transported, || format!("x = {x}; y = {y}"))
        });
        r.random("F_n agrees with lift, apply over Z, reduce", |rng| {
            let k = rng.gen_range(1..=4);
            let x = gen::witt(ring, n, rng);
            let direct = lib(x.frobenius(k))?;
            let transported = reduce(&lib(lift(&x).frobenius(k))?)?;
            same(&direct, &transported, || format!("n = {k}; x = {x}"))
        });
    }
}

fn torsion_mechanism(r: &mut Runner) {
    let ring = r.cfg.ring;
    let p = ring.prime_characteristic().expect("checked by caller");
    let mut nilpotents = Vec::new();
    for size in 1..=4 {
        for blocks in gen::partitions(size) {
            nilpotents.push(blocks);
        }
    }
    for l in 1..=2u32 {
        let q = p.pow(l) as usize;
        let cases: Vec<Vec<usize>> = nilpotents.iter().filter(|b| b[0] <= q).cloned().collect();
        r.cases(format!("F_q kills index <= q nilpotents, q = {p}^{l}"), cases.clone(), |blocks| {
            let phi = gen::jordan_nilpotent(ring, blocks);
            check(phi.nilpotency_index(None) == Some(blocks[0]), || format!("phi = {phi}: wrong index"))?;
            check(phi.char_series().is_one() || !ring.is_domain(), || format!("phi = {phi}: char != 1"))?;
            check(lib(phi.frobenius(q))?.is_zero(), || format!("phi = {phi}: F_q(phi) != 0"))
        });
        r.cases(format!("V_q F_q = q on nilpotents, q = {p}^{l}"), cases, |blocks| {
            let phi = gen::jordan_nilpotent(ring, blocks);
            multn(&phi, q)
        });
        r.random(format!("V_q F_q = q on End_0 classes, q = {p}^{l}"), |rng| {
            let size = rng.gen_range(1..=3);
            multn(&gen::matrix(ring, size, rng), q)
        });
    }
}

fn multn(phi: &MatrixEndo, q: usize) -> Outcome {
    let lhs: K0Class = lib(lib(phi.frobenius(q))?.verschiebung(q))?.k0_class().end0_projection();
    let rhs = phi.k0_class().end0_projection().int_scalar(q as i64);
    same(&lhs, &rhs, || format!("q = {q}; phi = {phi}"))
}
