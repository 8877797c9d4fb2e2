//! Cross-module verification suites, each a batch of exact identity checks
//! on deterministic pseudo-random inputs.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_bounds, Result};
use crate::lattice::{
    convolve_lattice, fourier_multiplicativity, random_unital, verify_theorem_seeded,
    MultiplicativeFunction, Theorem, VerificationReport, DEFAULT_SEED, MAX_VERIFY_N,
};
use crate::parking::{
    count_by_type, enumerate_parking, moments_via_volume, orbit_count, orbit_size,
    volume_bruteforce, volume_shape_eval, volume_symmetric_bruteforce, MAX_PARKING_N,
};
use crate::partitions::Lattice;
use crate::rational::{factorial, from_bigint, int, pow, random_rational};
use crate::transforms::oracles::{
    abel_expectation, boolean_parametrization, classical_parametrization, free_parametrization,
};
use crate::transforms::{
    abel_copy_oracle, abel_oracle, boolean_convolve, boolean_free_transport, boolean_from_moments,
    classical_from_moments, dot_power_moments, free_convolve, free_from_moments,
    generalized_cumulants, MomentSequence, MultiplierSequence,
};

/// Random cases per suite invocation.
const TRIALS: usize = 10;

pub const MAX_ABEL_N: usize = 10;
pub const MAX_TRANSPORT_N: usize = 16;
pub const MAX_PARAMETRIZATION_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lattice,
    Abel,
    Volume,
    Transport,
    Parametrization,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Lattice,
        Suite::Abel,
        Suite::Volume,
        Suite::Transport,
        Suite::Parametrization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Abel => "abel",
            Suite::Volume => "volume",
            Suite::Transport => "transport",
            Suite::Parametrization => "parametrization",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn max_n(self) -> usize {
        match self {
            Suite::Lattice => MAX_VERIFY_N,
            Suite::Abel => MAX_ABEL_N,
            Suite::Volume => MAX_PARKING_N,
            Suite::Transport => MAX_TRANSPORT_N,
            Suite::Parametrization => MAX_PARAMETRIZATION_N,
        }
    }
}

pub fn random_sequence<R: Rng>(order: usize, rng: &mut R) -> MomentSequence {
    MomentSequence::new((0..order).map(|_| random_rational(rng)).collect())
}

pub fn run_suite(suite: Suite, n: usize) -> Result<Vec<VerificationReport>> {
    run_suite_seeded(suite, n, DEFAULT_SEED)
}

pub fn run_suite_seeded(suite: Suite, n: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    check_bounds("verify n", n, 1, suite.max_n())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Lattice => lattice_suite(n, seed, &mut rng),
        Suite::Abel => Ok(vec![abel_suite(n, &mut rng)?]),
        Suite::Volume => Ok(vec![volume_suite(n, &mut rng)?]),
        Suite::Transport => Ok(vec![transport_suite(n, &mut rng)?]),
        Suite::Parametrization => Ok(vec![parametrization_suite(n, &mut rng)]),
    }
}

fn lattice_suite(n: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<VerificationReport>> {
    let mut reports = Theorem::ALL
        .into_iter()
        .map(|t| verify_theorem_seeded(n, t, seed))
        .collect::<Result<Vec<_>>>()?;

    let mu = MultiplicativeFunction::mobius(n);
    let zeta = MultiplicativeFunction::zeta(n);
    let elements = Lattice::All.elements(n)?.len();
    let mut identity = VerificationReport::new("MOBIUS_ZETA", n, elements);
    for k in 1..=n {
        let delta = int((k == 1) as i64);
        identity.check(
            "mu * zeta",
            &convolve_lattice(&mu, &zeta, k, Lattice::All)?,
            &delta,
        );
        identity.check(
            "zeta * mu",
            &convolve_lattice(&zeta, &mu, k, Lattice::All)?,
            &delta,
        );
    }
    reports.push(identity);

    if n >= 2 {
        let mut fourier = VerificationReport::new("FOURIER", n, TRIALS);
        for _ in 0..TRIALS {
            let f = random_unital(n, rng);
            let g = random_unital(n, rng);
            if !fourier_multiplicativity(&f, &g, n)? {
                fourier.fail(format!("f = {:?}, g = {:?}", f.values(), g.values()));
            }
        }
        reports.push(fourier);
    }
    Ok(reports)
}

fn abel_suite(n: usize, rng: &mut ChaCha8Rng) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("ABEL", n, TRIALS);
    for _ in 0..TRIALS {
        let a = random_sequence(n, rng);
        for k in 0..=4usize {
            let g = MultiplierSequence::constant(n, &int(k as i64));
            let c = generalized_cumulants(&a, &g)?;
            for m in 1..=n {
                report.check(
                    &format!("series oracle, g = {k}, n = {m}"),
                    &abel_oracle(&a, &g, m)?,
                    &c.get(m),
                );
                report.check(
                    &format!("copy oracle, g = {k}, n = {m}"),
                    &abel_copy_oracle(&a, k, m)?,
                    &c.get(m),
                );
            }
        }
        let g = MultiplierSequence::index(n);
        let c = generalized_cumulants(&a, &g)?;
        for m in 1..=n {
            report.check(
                &format!("series oracle, g_n = n, n = {m}"),
                &abel_oracle(&a, &g, m)?,
                &c.get(m),
            );
        }
    }
    Ok(report)
}

fn volume_suite(n: usize, rng: &mut ChaCha8Rng) -> Result<VerificationReport> {
    let parking = enumerate_parking(n)?;
    let mut report = VerificationReport::new("VOLUME", n, parking.len());
    let n_fact = from_bigint(factorial(n));

    let ones = volume_bruteforce(&vec![int(1); n])? * &n_fact;
    report.check("n! V_n(1, ..., 1)", &ones, &pow(&int(n as i64 + 1), n - 1));

    for _ in 0..TRIALS {
        let a = random_sequence(n, rng);
        report.check(
            "symmetric evaluation",
            &volume_symmetric_bruteforce(&a, n)?,
            &volume_shape_eval(&a, n)?,
        );
        report.check("moments via volume", &moments_via_volume(&a), &a);
    }

    // n! C_n = E[ū(ū + n.ū)^{n-1}]
    let ubar = MomentSequence::boolean_unity(n);
    let nu = dot_power_moments(&ubar, &int(n as i64), n - 1);
    let catalan = MomentSequence::catalan(n).get(n);
    report.check(
        "n! C_n",
        &abel_expectation(&ubar, &nu, n),
        &(&n_fact * &catalan),
    );

    for (lambda, count) in count_by_type(n)? {
        report.check(
            &format!("parking functions of type {lambda}"),
            &int(count as i64),
            &(orbit_size(&lambda) * lambda.noncrossing_count()),
        );
    }
    report.check("orbit count", &int(orbit_count(n)? as i64), &catalan);
    Ok(report.with_value(&ones))
}

fn transport_suite(n: usize, rng: &mut ChaCha8Rng) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("TRANSPORT", n, TRIALS);
    for _ in 0..TRIALS {
        let a = random_sequence(n, rng);
        let b = random_sequence(n, rng);
        let left = boolean_free_transport(&free_convolve(&a, &b)?);
        let right = boolean_convolve(&boolean_free_transport(&a), &boolean_free_transport(&b))?;
        report.check("L(a ⊞ b) = L(a) ⊎ L(b)", &left, &right);
    }
    Ok(report)
}

fn parametrization_suite(n: usize, rng: &mut ChaCha8Rng) -> VerificationReport {
    let mut report = VerificationReport::new("PARAMETRIZATION", n, TRIALS);
    let two = MultiplierSequence::constant(n, &int(2));
    let index = MultiplierSequence::index(n);
    for _ in 0..TRIALS {
        let a = random_sequence(n, rng);
        let bar = a.bar();
        let c = classical_from_moments(&a);
        let h_bar = boolean_from_moments(&a).bar();
        let r_bar = free_from_moments(&a).bar();
        report.check("classical moments", &classical_parametrization(&c), &a);
        report.check("boolean moments", &boolean_parametrization(&h_bar), &bar);
        report.check("free moments", &free_parametrization(&r_bar), &bar);
        report.check(
            "boolean cumulants",
            &generalized_cumulants(&bar, &two).expect("covers"),
            &h_bar,
        );
        report.check(
            "free cumulants",
            &generalized_cumulants(&bar, &index).expect("covers"),
            &r_bar,
        );
    }
    report
}
