//! Independent evaluation routes for the closed forms in this module.
//!
//! Nothing here is used by the closed forms themselves; these exist so tests
//! and the verification suites can compare two genuinely different
//! computations.

use num_traits::{One, Zero};

use crate::error::{check_bounds, Result};
use crate::rational::{binomial, from_bigint, int, Rational};
use crate::series::TruncatedSeries;

use super::umbral::{copies_power_moments, dot_power_moments};
use super::{MomentSequence, MultiplierSequence};

/// Classical cumulants as the EGF coefficients of `log f(α, t)`.
pub fn classical_via_log(m: &MomentSequence) -> MomentSequence {
    MomentSequence::from_egf(&m.egf().log().expect("constant term is 1"))
}

/// Boolean cumulants from `H = 1 - 1/M` on OGFs.
pub fn boolean_via_reciprocal(m: &MomentSequence) -> MomentSequence {
    let inv = m.ogf().reciprocal().expect("constant term is 1");
    MomentSequence::from_ogf(&inv.neg())
}

/// Moments from free cumulants by iterating `M ← R(t M(t))` exactly `N`
/// times, starting from `M = 1`. Each pass fixes one more coefficient.
pub fn free_moments_fixed_point(r: &MomentSequence) -> MomentSequence {
    let order = r.order();
    let big_r = r.ogf();
    let t = TruncatedSeries::identity(order);
    let mut m = TruncatedSeries::one(order);
    for _ in 0..order {
        let tm = t.mul(&m).expect("same order");
        m = big_r.delta_compose(&tm).expect("tM is a delta series");
    }
    MomentSequence::from_ogf(&m)
}

/// Free cumulants from `R(z) = z / w(z)`, where `w` reverts `t M(t)`.
pub fn free_cumulants_via_reversion(m: &MomentSequence) -> MomentSequence {
    let order = m.order();
    // Work one order higher so dividing by z loses nothing.
    let padded = TruncatedSeries::from_coeffs(order + 1, m.ogf().coeffs());
    let tm = TruncatedSeries::identity(order + 1)
        .mul(&padded)
        .expect("same order");
    let w = tm.reversion().expect("linear coefficient is 1");
    let w_over_z = TruncatedSeries::from_coeffs(order, &w.coeffs()[1..]);
    MomentSequence::from_ogf(&w_over_z.reciprocal().expect("constant term is 1"))
}

/// `Σ_j C(n-1, j) E[δ^{j+1}] ν_{n-1-j}`: the expectation of `δ(δ + X)^{n-1}`
/// where `δ` has moments `delta` and the uncorrelated letter `X` has power
/// sequence `nu` (`nu[0] = 1`).
pub fn abel_expectation(delta: &MomentSequence, nu: &[Rational], n: usize) -> Rational {
    (0..n)
        .map(|j| from_bigint(binomial(n - 1, j)) * delta.get(j + 1) * &nu[n - 1 - j])
        .sum()
}

/// `E[α(α - g_n.α)^{n-1}]`, with the power sequence of `-g_n.α` read off
/// `f(α, t)^{-g_n}`.
pub fn abel_oracle(a: &MomentSequence, g: &MultiplierSequence, n: usize) -> Result<Rational> {
    check_bounds("abel_oracle n", n, 1, a.order())?;
    g.check_covers(n)?;
    let nu = dot_power_moments(a, &-g.get(n), n - 1);
    Ok(abel_expectation(a, &nu, n))
}

/// The same expectation for `g_n = k`, building `S = α' + ... + α^(k)` out of
/// `k` uncorrelated copies and taking the power sequence of `-1.S` (the
/// reciprocal of its EGF).
pub fn abel_copy_oracle(a: &MomentSequence, k: usize, n: usize) -> Result<Rational> {
    check_bounds("abel_copy_oracle n", n, 1, a.order())?;
    let s = copies_power_moments(a, k, n - 1);
    let s_egf = TruncatedSeries::new(s).ogf_to_egf();
    let nu = s_egf.reciprocal().expect("constant term is 1").egf_to_ogf();
    Ok(abel_expectation(a, nu.coeffs(), n))
}

/// Moments from classical cumulants through `α^n ≃ κ(κ + α)^{n-1}`, with
/// `κ` and `α` uncorrelated.
pub fn classical_parametrization(c: &MomentSequence) -> MomentSequence {
    let mut a = vec![Rational::one()];
    for n in 1..=c.order() {
        let next = abel_expectation(c, &a, n);
        a.push(next);
    }
    MomentSequence::new(a.split_off(1))
}

/// Barred moments from barred boolean cumulants through
/// `ᾱ^n ≃ η̄(η̄ + 2.ᾱ)^{n-1}`, solved degree by degree.
pub fn boolean_parametrization(h_bar: &MomentSequence) -> MomentSequence {
    let mut a: Vec<Rational> = Vec::new();
    for n in 1..=h_bar.order() {
        let known = MomentSequence::new(a.clone());
        let nu = dot_power_moments(&known, &int(2), n - 1);
        a.push(abel_expectation(h_bar, &nu, n));
    }
    MomentSequence::new(a)
}

/// Barred moments from barred free cumulants through
/// `ᾱ^n ≃ K̄(K̄ + n.K̄)^{n-1}`.
pub fn free_parametrization(r_bar: &MomentSequence) -> MomentSequence {
    MomentSequence::from_fn(r_bar.order(), |n| {
        let nu = dot_power_moments(r_bar, &int(n as i64), n - 1);
        abel_expectation(r_bar, &nu, n)
    })
}

/// `Σ_j C(n, j) c^{n-j} a_j`: moments of `α + c`.
pub fn translate(a: &MomentSequence, c: &Rational) -> MomentSequence {
    MomentSequence::from_fn(a.order(), |n| {
        let mut total = Rational::zero();
        let mut power = Rational::one();
        for j in (0..=n).rev() {
            total += from_bigint(binomial(n, j)) * &power * a.get(j);
            power *= c;
        }
        total
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{
        boolean_from_moments, classical_from_moments, free_from_moments, generalized_cumulants,
        moments_from_free,
    };

    fn seq(v: &[i64]) -> MomentSequence {
        MomentSequence::from_ints(v)
    }

    #[test]
    fn series_routes_agree() {
        let a = seq(&[2, -1, 3, 0, 5, -2]);
        assert_eq!(classical_via_log(&a), classical_from_moments(&a));
        assert_eq!(boolean_via_reciprocal(&a), boolean_from_moments(&a));
        assert_eq!(free_moments_fixed_point(&a), moments_from_free(&a));
        assert_eq!(free_cumulants_via_reversion(&a), free_from_moments(&a));
        assert_eq!(
            free_moments_fixed_point(&seq(&[1, 1, 1, 1, 1])),
            seq(&[1, 2, 5, 14, 42])
        );
    }

    #[test]
    fn abel_examples() {
        let g = MultiplierSequence::new(vec![int(0), int(0), int(2)]);
        assert_eq!(abel_oracle(&seq(&[1, 1, 1]), &g, 3).unwrap(), int(1));
        let g = MultiplierSequence::constant(2, &int(2));
        assert_eq!(abel_oracle(&seq(&[1, 3]), &g, 2).unwrap(), int(1));
        let a = seq(&[4, -1, 2, 7]);
        let zero = MultiplierSequence::constant(4, &int(0));
        for n in 1..=4 {
            assert_eq!(abel_oracle(&a, &zero, n).unwrap(), a.get(n));
        }
    }

    #[test]
    fn abel_routes_agree() {
        let a = seq(&[3, -2, 1, 4, -1, 2]);
        for k in 0..=4 {
            let g = MultiplierSequence::constant(6, &int(k));
            let c = generalized_cumulants(&a, &g).unwrap();
            for n in 1..=6 {
                assert_eq!(abel_oracle(&a, &g, n).unwrap(), c.get(n));
                assert_eq!(abel_copy_oracle(&a, k as usize, n).unwrap(), c.get(n));
            }
        }
        let g = MultiplierSequence::index(6);
        let c = generalized_cumulants(&a, &g).unwrap();
        for n in 1..=6 {
            assert_eq!(abel_oracle(&a, &g, n).unwrap(), c.get(n));
        }
    }

    #[test]
    fn parametrizations() {
        let a = seq(&[1, -2, 3, 5, 0, 1]);
        assert_eq!(classical_parametrization(&classical_from_moments(&a)), a);
        assert_eq!(
            boolean_parametrization(&boolean_from_moments(&a).bar()),
            a.bar()
        );
        assert_eq!(free_parametrization(&free_from_moments(&a).bar()), a.bar());
    }

    #[test]
    fn translation_shifts_first_cumulant() {
        let a = seq(&[1, 4, -2, 3]);
        let c = classical_from_moments(&a);
        let shifted = classical_from_moments(&translate(&a, &int(3)));
        assert_eq!(shifted.get(1), c.get(1) + int(3));
        assert_eq!(&shifted.values()[1..], &c.values()[1..]);
    }
}
