//! Composition and dot-product umbrae, expressed on moment sequences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, from_bigint, Rational};

use super::{partition_sum, MomentSequence};

/// Which generating-function reading a composition uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `h_n = Σ_λ d_λ g_ℓ a_λ`: coefficients of `f_g(f_a(t) - 1)` on EGFs.
    Egf,
    /// `h_n = Σ_λ ℓ!/m(λ)! g_ℓ a_λ`: the same on OGFs.
    Ogf,
}

fn check_covers(g: &MomentSequence, order: usize) -> Result<()> {
    if g.order() < order {
        return Err(Error::OrderMismatch {
            left: order,
            right: g.order(),
        });
    }
    Ok(())
}

/// Moments of the composition umbra of `g` and `a`.
pub fn umbral_composition(
    g: &MomentSequence,
    a: &MomentSequence,
    flavor: Flavor,
) -> Result<MomentSequence> {
    check_covers(g, a.order())?;
    Ok(partition_sum(a, |_, lambda| {
        let count = match flavor {
            Flavor::Egf => from_bigint(lambda.set_partition_count()),
            Flavor::Ogf => lambda.interval_count(),
        };
        count * g.get(lambda.len())
    }))
}

/// Signed Stirling numbers of the first kind `s(n, k)` for `0 <= k <= n <= max`.
pub fn stirling_first_signed(max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
    s[0][0] = BigInt::one();
    for n in 0..max {
        for k in 1..=n + 1 {
            s[n + 1][k] = &s[n][k - 1] - BigInt::from(n) * &s[n][k];
        }
    }
    s
}

/// `a_(n) = E[(α)_n] = Σ_k s(n, k) a_k`.
pub fn factorial_moments(a: &MomentSequence) -> MomentSequence {
    let s = stirling_first_signed(a.order());
    MomentSequence::from_fn(a.order(), |n| {
        (1..=n)
            .map(|k| from_bigint(s[n][k].clone()) * a.get(k))
            .sum()
    })
}

/// Moments of `γ.α`: `Σ_λ d_λ γ_(ℓ) a_λ`, with `γ_(ℓ)` the factorial
/// moments of `g`.
pub fn dot_operation(g: &MomentSequence, a: &MomentSequence) -> Result<MomentSequence> {
    check_covers(g, a.order())?;
    let gf = factorial_moments(&g.truncate(a.order()));
    umbral_composition(&gf, a, Flavor::Egf)
}

/// `E[(g.α)^j]` for `j = 0..=order`: EGF coefficients of `f(α, t)^g`.
/// Works for any rational `g`, negative included; moments past `a.order()`
/// are read as zero.
pub fn dot_power_moments(a: &MomentSequence, g: &Rational, order: usize) -> Vec<Rational> {
    let f = a.truncate(order).egf();
    let f = crate::series::TruncatedSeries::from_coeffs(order, f.coeffs());
    let p = f.pow_rational(g).expect("EGF has constant term 1");
    p.egf_to_ogf().into_coeffs()
}

/// `E[(α' + ... + α^(k))^j]` for `j = 0..=order`, expanding the sum of `k`
/// uncorrelated copies one copy at a time with the binomial theorem. Needs
/// `order <= a.order()`.
pub fn copies_power_moments(a: &MomentSequence, k: usize, order: usize) -> Vec<Rational> {
    let mut s: Vec<Rational> = (0..=order)
        .map(|j| {
            if j == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    for _ in 0..k {
        s = (0..=order)
            .map(|j| {
                (0..=j)
                    .map(|i| from_bigint(binomial(j, i)) * &s[i] * a.get(j - i))
                    .sum()
            })
            .collect();
    }
    s
}
