//! Incidence-algebra computations on `Π_n`, `NC_n` and `I_n`, done by
//! literal summation over enumerated lattices.
//!
//! This module is deliberately naive: it is the ground truth that the
//! closed forms in [`crate::transforms`] are checked against.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_bounds, Result};
use crate::partitions::{
    interval_type, kreweras_complement, leq_refinement, IntervalType, Lattice, SetPartition,
};
use crate::rational::{
    factorial, format_rational, from_bigint, int, pow, random_rational, Rational,
};
use crate::series::TruncatedSeries;
use crate::transforms::{
    boolean_free_transport, free_from_moments, moments_from_free, MomentSequence,
};

/// Largest `n` for literal sums over `Π_n` or `NC_n`.
pub const MAX_LATTICE_N: usize = 7;
/// Largest `n` for literal sums over `I_n`.
pub const MAX_INTERVAL_LATTICE_N: usize = 12;
/// Largest `n` accepted by [`verify_theorem`].
pub const MAX_VERIFY_N: usize = 6;

/// Seed used by the deterministic verifiers.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A multiplicative function, stored as `f_n = f(0_n, 1_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicativeFunction {
    values: Vec<Rational>,
}

impl MultiplicativeFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        MultiplicativeFunction { values }
    }

    pub fn zeta(order: usize) -> Self {
        Self::new(vec![Rational::one(); order])
    }

    pub fn delta(order: usize) -> Self {
        Self::new((1..=order).map(|n| int((n == 1) as i64)).collect())
    }

    /// Möbius function of `Π_n`: `μ_n = (-1)^{n-1} (n-1)!`.
    pub fn mobius(order: usize) -> Self {
        Self::new(
            (1..=order)
                .map(|n| {
                    let sign = if n % 2 == 1 { 1 } else { -1 };
                    int(sign) * from_bigint(factorial(n - 1))
                })
                .collect(),
        )
    }

    pub fn from_moments(a: &MomentSequence) -> Self {
        Self::new(a.values().to_vec())
    }

    pub fn to_moments(&self) -> MomentSequence {
        MomentSequence::new(self.values.clone())
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n - 1]
    }

    /// `Π f_i^{k_i}`.
    pub fn value_on(&self, k: &IntervalType) -> Rational {
        k.counts()
            .iter()
            .enumerate()
            .filter(|(_, &ki)| ki > 0)
            .fold(Rational::one(), |acc, (i, &ki)| {
                acc * pow(&self.values[i], ki)
            })
    }

    /// `f_π = Π_{B ∈ π} f_{|B|}`, the value on `[0_n, π]`.
    pub fn on_blocks(&self, pi: &SetPartition) -> Rational {
        pi.blocks()
            .iter()
            .fold(Rational::one(), |acc, b| acc * &self.values[b.len() - 1])
    }

    fn random<R: Rng>(order: usize, rng: &mut R) -> Self {
        Self::new((0..order).map(|_| random_rational(rng)).collect())
    }
}

pub fn eval_interval(
    f: &MultiplicativeFunction,
    sigma: &SetPartition,
    pi: &SetPartition,
) -> Result<Rational> {
    Ok(f.value_on(&interval_type(sigma, pi)?))
}

fn lattice_bound(lattice: Lattice) -> usize {
    match lattice {
        Lattice::Interval => MAX_INTERVAL_LATTICE_N,
        Lattice::All | Lattice::NonCrossing => MAX_LATTICE_N,
    }
}

/// `(f · g)(0_n, 1_n)` for the convolution of the given lattice.
///
/// On `Π_n` and `I_n` both factors are evaluated from interval types; on
/// `NC_n` the upper factor is `g` on the Kreweras complement.
pub fn convolve_lattice(
    f: &MultiplicativeFunction,
    g: &MultiplicativeFunction,
    n: usize,
    lattice: Lattice,
) -> Result<Rational> {
    check_bounds("convolve_lattice n", n, 1, lattice_bound(lattice))?;
    check_bounds("convolve_lattice f order", n, 1, f.order())?;
    check_bounds("convolve_lattice g order", n, 1, g.order())?;
    let bottom = SetPartition::finest(n);
    let top = SetPartition::coarsest(n);
    let mut total = Rational::zero();
    for tau in lattice.elements(n)? {
        let upper = match lattice {
            Lattice::NonCrossing => g.on_blocks(&kreweras_complement(&tau)?),
            _ => eval_interval(g, &tau, &top)?,
        };
        total += eval_interval(f, &bottom, &tau)? * upper;
    }
    Ok(total)
}

/// `(h_1, ..., h_n)` with `h_k = (f · g)(0_k, 1_k)`.
pub fn convolve_sequence(
    f: &MultiplicativeFunction,
    g: &MultiplicativeFunction,
    n: usize,
    lattice: Lattice,
) -> Result<MultiplicativeFunction> {
    let values = (1..=n)
        .map(|k| convolve_lattice(f, g, k, lattice))
        .collect::<Result<_>>()?;
    Ok(MultiplicativeFunction::new(values))
}

/// `μ(0_n, 1_n)` on the given lattice from `Σ_{0 ≤ τ ≤ π} μ(0, τ) = δ(0, π)`,
/// finest partitions first.
pub fn mobius_by_recursion(n: usize, lattice: Lattice) -> Result<Rational> {
    check_bounds("mobius_by_recursion n", n, 1, lattice_bound(lattice))?;
    let mut elements = lattice.elements(n)?;
    elements.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let mut mu: HashMap<&SetPartition, Rational> = HashMap::with_capacity(elements.len());
    for (i, pi) in elements.iter().enumerate() {
        let value = if i == 0 {
            Rational::one()
        } else {
            let mut below = Rational::zero();
            for tau in &elements[..i] {
                if tau.len() > pi.len() && leq_refinement(tau, pi)? {
                    below += &mu[tau];
                }
            }
            -below
        };
        mu.insert(pi, value);
    }
    Ok(mu[&SetPartition::coarsest(n)].clone())
}

/// `μ_L(0_k, 1_k)` for `k = 1..=n`.
pub fn mobius_sequence(n: usize, lattice: Lattice) -> Result<MultiplicativeFunction> {
    let values = (1..=n)
        .map(|k| mobius_by_recursion(k, lattice))
        .collect::<Result<_>>()?;
    Ok(MultiplicativeFunction::new(values))
}

/// Free cumulants as `m ∗ μ_NC`, with `μ_NC` from the recursion.
pub fn speicher_cumulants(m: &MomentSequence) -> Result<MomentSequence> {
    let n = m.order();
    let mu = mobius_sequence(n, Lattice::NonCrossing)?;
    Ok(convolve_sequence(
        &MultiplicativeFunction::from_moments(m),
        &mu,
        n,
        Lattice::NonCrossing,
    )?
    .to_moments())
}

/// Moments as `r ∗ ζ_NC`.
pub fn speicher_moments(r: &MomentSequence) -> Result<MomentSequence> {
    let n = r.order();
    let zeta = MultiplicativeFunction::zeta(n);
    Ok(convolve_sequence(
        &MultiplicativeFunction::from_moments(r),
        &zeta,
        n,
        Lattice::NonCrossing,
    )?
    .to_moments())
}

/// The lattice identities [`verify_theorem`] knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// EGF composition `h = f[g - 1]` is `h = g ⋆ f` on `Π_n`.
    T1,
    /// Free cumulants are `m ∗ μ_NC` and moments are `r ∗ ζ_NC`.
    T2,
    /// OGF composition is `h = g ⋄ f` on `I_n`.
    T3,
    /// `f ∗ g = g ∗ f` on `NC_n`.
    Commutativity,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::T1,
        Theorem::T2,
        Theorem::T3,
        Theorem::Commutativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T1 => "T1",
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::Commutativity => "COMMUTATIVITY",
        }
    }

    fn lattice(self) -> Lattice {
        match self {
            Theorem::T1 => Lattice::All,
            Theorem::T3 => Lattice::Interval,
            Theorem::T2 | Theorem::Commutativity => Lattice::NonCrossing,
        }
    }
}

/// Outcome of one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub n: usize,
    pub pass: bool,
    /// Number of lattice elements (or objects) summed over at size `n`.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, n: usize, checked: usize) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            n,
            pass: true,
            checked,
            counterexample: None,
            value: None,
        }
    }

    /// Records the first failure only.
    pub fn fail(&mut self, what: impl Into<String>) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(what.into());
        }
    }

    pub fn check<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, left: &T, right: &T) {
        if left != right {
            self.fail(format!("{what}: {left:?} != {right:?}"));
        }
    }

    pub fn with_value(mut self, value: &Rational) -> Self {
        self.value = Some(format_rational(value));
        self
    }
}

pub fn verify_theorem(n: usize, which: Theorem) -> Result<VerificationReport> {
    verify_theorem_seeded(n, which, DEFAULT_SEED)
}

/// Checks `which` at every size `1..=n` on random rational inputs drawn from
/// a ChaCha stream seeded with `seed`.
pub fn verify_theorem_seeded(n: usize, which: Theorem, seed: u64) -> Result<VerificationReport> {
    check_bounds("verify_theorem n", n, 1, MAX_VERIFY_N)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checked = which.lattice().elements(n)?.len();
    let mut report = VerificationReport::new(which.name(), n, checked);
    let f = MultiplicativeFunction::random(n, &mut rng);
    let g = MultiplicativeFunction::random(n, &mut rng);
    match which {
        Theorem::T1 | Theorem::T3 => {
            let series = |m: &MultiplicativeFunction| {
                let s = m.to_moments();
                if which == Theorem::T1 {
                    s.egf()
                } else {
                    s.ogf()
                }
            };
            let inner = series(&g).sub(&TruncatedSeries::one(n))?;
            let composed = series(&f).delta_compose(&inner)?;
            let h = if which == Theorem::T1 {
                MomentSequence::from_egf(&composed)
            } else {
                MomentSequence::from_ogf(&composed)
            };
            let conv = convolve_sequence(&g, &f, n, which.lattice())?.to_moments();
            report.check("composition vs convolution", &h, &conv);
        }
        Theorem::T2 => {
            let m = f.to_moments();
            report.check(
                "m * mu_NC",
                &speicher_cumulants(&m)?,
                &free_from_moments(&m),
            );
            let r = g.to_moments();
            report.check(
                "r * zeta_NC",
                &speicher_moments(&r)?,
                &moments_from_free(&r),
            );
            let catalan = MomentSequence::catalan(n);
            report.check(
                "catalan free cumulants",
                &speicher_cumulants(&catalan)?,
                &MomentSequence::unity(n),
            );
        }
        Theorem::Commutativity => {
            let fg = convolve_sequence(&f, &g, n, Lattice::NonCrossing)?;
            let gf = convolve_sequence(&g, &f, n, Lattice::NonCrossing)?;
            report.check("f * g vs g * f", &fg, &gf);
        }
    }
    Ok(report)
}

/// For unital `f`, `g` (`f_1 = g_1 = 1`) read as shifted moment sequences
/// `a_{k} = f_{k+1}`, checks that `1 + L` of `f ∗ g` is the product of the
/// `1 + L` series of `f` and `g`, where `L` is
/// [`boolean_free_transport`]. Requires `2 <= n`.
pub fn fourier_multiplicativity(
    f: &MultiplicativeFunction,
    g: &MultiplicativeFunction,
    n: usize,
) -> Result<bool> {
    check_bounds("fourier_multiplicativity n", n, 2, MAX_LATTICE_N)?;
    let h = convolve_sequence(f, g, n, Lattice::NonCrossing)?;
    let transported = |m: &MultiplicativeFunction| {
        let shifted = MomentSequence::new(m.values()[1..n].to_vec());
        boolean_free_transport(&shifted).ogf()
    };
    let product = transported(f).mul(&transported(g))?;
    Ok(h.get(1).is_one() && product == transported(&h))
}

/// A random unital multiplicative function.
pub fn random_unital<R: Rng>(order: usize, rng: &mut R) -> MultiplicativeFunction {
    let mut f = MultiplicativeFunction::random(order, rng);
    f.values[0] = Rational::one();
    f
}
