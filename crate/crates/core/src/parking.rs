//! Parking functions and the volume polynomials built from them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{check_bounds, Error, Result};
use crate::partitions::{integer_partitions, IntegerPartition};
use crate::rational::{factorial, falling_factorial, from_bigint, int, Rational};
use crate::transforms::{free_from_moments, MomentSequence};

/// Largest `n` for which parking functions are enumerated.
pub const MAX_PARKING_N: usize = 7;

/// `p` parks iff its nondecreasing rearrangement satisfies `p_(j) <= j`.
pub fn is_parking(p: &[usize]) -> bool {
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(j, &x)| x >= 1 && x <= j + 1)
}

/// All parking functions of length `n`, in lexicographic order.
pub fn enumerate_parking(n: usize) -> Result<Vec<Vec<usize>>> {
    check_bounds("enumerate_parking", n, 1, MAX_PARKING_N)?;
    let mut out = Vec::new();
    // below[j] = number of chosen entries <= j
    let mut below = vec![0usize; n + 1];
    let mut cur = Vec::with_capacity(n);
    extend(n, &mut cur, &mut below, &mut out);
    Ok(out)
}

fn extend(n: usize, cur: &mut Vec<usize>, below: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let remaining = n - cur.len() - 1;
    for x in 1..=n {
        for b in below.iter_mut().skip(x) {
            *b += 1;
        }
        // Every j still needs j entries <= j once the remaining slots are filled.
        if (1..=n).all(|j| below[j] + remaining >= j) {
            cur.push(x);
            extend(n, cur, below, out);
            cur.pop();
        }
        for b in below.iter_mut().skip(x) {
            *b -= 1;
        }
    }
}

/// `m_j = |{i : p_i = j}|` for `j = 1..=n`.
pub fn multiplicities(p: &[usize]) -> Vec<usize> {
    let mut m = vec![0; p.len()];
    for &x in p {
        m[x - 1] += 1;
    }
    m
}

/// The nonzero multiplicities, as a partition of `n`.
pub fn parking_type(p: &[usize]) -> Result<IntegerPartition> {
    if !is_parking(p) {
        return Err(Error::NotParking(p.to_vec()));
    }
    Ok(IntegerPartition::new(multiplicities(p)))
}

/// Size of the `S_n`-orbit of a parking function of type `λ`: `n!/λ!`.
pub fn orbit_size(lambda: &IntegerPartition) -> Rational {
    Rational::new(factorial(lambda.size()), lambda.parts_factorial())
}

/// How many parking functions of length `n` have each type.
pub fn count_by_type(n: usize) -> Result<BTreeMap<IntegerPartition, usize>> {
    let mut counts = BTreeMap::new();
    for p in enumerate_parking(n)? {
        *counts.entry(parking_type(&p)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Number of `S_n`-orbits, i.e. nondecreasing parking functions.
pub fn orbit_count(n: usize) -> Result<usize> {
    Ok(enumerate_parking(n)?
        .iter()
        .filter(|p| p.windows(2).all(|w| w[0] <= w[1]))
        .count())
}

/// `V_n(x) = (1/n!) Σ_{p ∈ park(n)} x_{p_1} ⋯ x_{p_n}`.
pub fn volume_bruteforce(x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    let total: Rational = enumerate_parking(n)?
        .iter()
        .map(|p| p.iter().fold(Rational::one(), |acc, &i| acc * &x[i - 1]))
        .sum();
    Ok(total / from_bigint(factorial(n)))
}

/// `V_n` with each variable replaced by an uncorrelated copy of `α`: the
/// monomial `x_1^{m_1} ⋯ x_n^{m_n}` evaluates to `Π a_{m_j}`.
pub fn volume_symmetric_bruteforce(a: &MomentSequence, n: usize) -> Result<Rational> {
    check_bounds("volume_symmetric_bruteforce n", n, 1, a.order())?;
    let total: Rational = enumerate_parking(n)?
        .iter()
        .map(|p| {
            multiplicities(p)
                .into_iter()
                .fold(Rational::one(), |acc, m| acc * a.get(m))
        })
        .sum();
    Ok(total / from_bigint(factorial(n)))
}

/// `Σ_{λ ⊢ n} (1/λ!) (n)_{ℓ-1} / m(λ)! · a_λ`.
pub fn volume_shape_eval(a: &MomentSequence, n: usize) -> Result<Rational> {
    check_bounds("volume_shape_eval n", n, 1, a.order())?;
    Ok(integer_partitions(n)
        .iter()
        .map(|lambda| {
            lambda.noncrossing_count() * a.monomial(lambda) / from_bigint(lambda.parts_factorial())
        })
        .sum())
}

/// `Σ_{λ ⊢ n} (n)_{ℓ-1} r_λ / m(λ)!`: one parking function per orbit.
pub fn orbit_moment_eval(r: &MomentSequence, n: usize) -> Result<Rational> {
    check_bounds("orbit_moment_eval n", n, 1, r.order())?;
    Ok(integer_partitions(n)
        .iter()
        .map(|lambda| {
            falling_factorial(&int(n as i64), lambda.len() - 1) * r.monomial(lambda)
                / from_bigint(lambda.multiplicity_factorial())
        })
        .sum())
}

/// Rebuilds `a` from the volume polynomials evaluated at its barred free
/// cumulants: `ā_n = n! V_n(r̄)`, then unbar.
pub fn moments_via_volume(a: &MomentSequence) -> MomentSequence {
    let r_bar = free_from_moments(a).bar();
    let barred = MomentSequence::from_fn(a.order(), |n| {
        from_bigint(factorial(n)) * volume_shape_eval(&r_bar, n).expect("n <= order")
    });
    barred.unbar()
}

/// `Π a_{m_j}` summed over one representative per orbit, weighted by orbit
/// size; equals `n! V_n` under symmetric substitution.
pub fn volume_by_orbits(a: &MomentSequence, n: usize) -> Result<Rational> {
    let mut total = Rational::zero();
    for (lambda, count) in count_by_type(n)? {
        total += int(count as i64) * a.monomial(&lambda);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn parking_predicate() {
        assert!(is_parking(&[2, 1, 1]));
        assert!(is_parking(&[1, 1, 1, 1]));
        assert!(!is_parking(&[2, 2]));
        assert!(!is_parking(&[0, 1]));
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_parking(2).unwrap(),
            vec![vec![1, 1], vec![1, 2], vec![2, 1]]
        );
        let sizes: Vec<usize> = (1..=6)
            .map(|n| enumerate_parking(n).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![1, 3, 16, 125, 1296, 16807]);
        assert!(enumerate_parking(8).is_err());
        let orbits: Vec<usize> = (1..=6).map(|n| orbit_count(n).unwrap()).collect();
        assert_eq!(orbits, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn types_and_orbits() {
        assert_eq!(
            parking_type(&[1, 1, 2]).unwrap(),
            IntegerPartition::new(vec![2, 1])
        );
        assert_eq!(
            parking_type(&[1, 2, 3]).unwrap(),
            IntegerPartition::new(vec![1, 1, 1])
        );
        assert!(parking_type(&[3, 3, 1]).is_err());
        assert_eq!(orbit_size(&IntegerPartition::new(vec![2, 1])), int(3));
        for n in 1..=6 {
            for (lambda, count) in count_by_type(n).unwrap() {
                assert_eq!(
                    int(count as i64),
                    orbit_size(&lambda) * lambda.noncrossing_count()
                );
            }
        }
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume_bruteforce(&[int(1), int(1)]).unwrap(), ratio(3, 2));
        assert_eq!(volume_bruteforce(&[int(3), int(0)]).unwrap(), ratio(9, 2));
        assert_eq!(
            volume_bruteforce(&vec![int(1); 3]).unwrap() * int(6),
            int(16)
        );
        let ubar = MomentSequence::boolean_unity(3);
        assert_eq!(volume_shape_eval(&ubar, 3).unwrap() * int(6), int(30));
        let ones = MomentSequence::unity(4);
        for n in 1..=4 {
            assert_eq!(
                volume_shape_eval(&ones, n).unwrap(),
                volume_bruteforce(&vec![int(1); n]).unwrap()
            );
        }
        let a = MomentSequence::from_ints(&[3, 8]);
        assert_eq!(volume_shape_eval(&a, 2).unwrap(), int(4) + int(9));
    }

    #[test]
    fn shape_matches_bruteforce() {
        let a = MomentSequence::new(vec![
            ratio(1, 2),
            int(-3),
            ratio(2, 3),
            int(5),
            int(1),
            ratio(-1, 4),
        ]);
        for n in 1..=6 {
            let shape = volume_shape_eval(&a, n).unwrap();
            assert_eq!(volume_symmetric_bruteforce(&a, n).unwrap(), shape);
            assert_eq!(
                volume_by_orbits(&a, n).unwrap(),
                shape * from_bigint(factorial(n))
            );
        }
    }

    #[test]
    fn moments_round_trip() {
        for a in [
            MomentSequence::catalan(4),
            MomentSequence::from_ints(&[0, 1, 0, 2]),
            MomentSequence::new(vec![ratio(1, 3), int(2), ratio(-5, 2), int(0), int(7)]),
        ] {
            assert_eq!(moments_via_volume(&a), a);
        }
    }

    #[test]
    fn orbit_moments() {
        let ones = MomentSequence::unity(4);
        assert_eq!(orbit_moment_eval(&ones, 3).unwrap(), int(5));
        assert_eq!(
            orbit_moment_eval(&MomentSequence::from_ints(&[7]), 1).unwrap(),
            int(7)
        );
        assert_eq!(
            orbit_moment_eval(&MomentSequence::from_ints(&[0, 2, 0, 0]), 4).unwrap(),
            int(8)
        );
        let a = MomentSequence::from_ints(&[2, -1, 4, 3, 0]);
        let r = free_from_moments(&a);
        for n in 1..=5 {
            assert_eq!(orbit_moment_eval(&r, n).unwrap(), a.get(n));
        }
    }
}
