//! Cumulants induced by a multiplier sequence `g`, from the generalized Abel
//! polynomials `δ(δ - g_n.α)^{n-1}`:
//!
//! `c_n = Σ_{λ ⊢ n} d_λ (-g_n)_{ℓ(λ)-1} a_λ`.
//!
//! The `λ = (n)` term is always `a_n` with coefficient 1, so the map is
//! triangular and invertible for any rational `g`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{check_bounds, Result};
use crate::partitions::{integer_partitions, IntegerPartition};
use crate::rational::{falling_factorial, format_rational, from_bigint, int, Rational};

use super::{partition_sum, MomentSequence, MultiplierSequence};

fn abel_weight(n: usize, lambda: &IntegerPartition, g: &MultiplierSequence) -> Rational {
    from_bigint(lambda.set_partition_count()) * falling_factorial(&-g.get(n), lambda.len() - 1)
}

pub fn generalized_cumulants(a: &MomentSequence, g: &MultiplierSequence) -> Result<MomentSequence> {
    g.check_covers(a.order())?;
    Ok(partition_sum(a, |n, lambda| abel_weight(n, lambda, g)))
}

/// Solves `generalized_cumulants(a, g) = c` for `a`, degree by degree.
pub fn moments_from_generalized(
    c: &MomentSequence,
    g: &MultiplierSequence,
) -> Result<MomentSequence> {
    g.check_covers(c.order())?;
    let mut a: Vec<Rational> = Vec::with_capacity(c.order());
    for n in 1..=c.order() {
        let known = MomentSequence::new(a.clone());
        let mut rest = Rational::zero();
        for lambda in integer_partitions(n).iter().skip(1) {
            rest += abel_weight(n, lambda, g) * known.monomial(lambda);
        }
        a.push(c.get(n) - rest);
    }
    Ok(MomentSequence::new(a))
}

/// The matrix `C(a)` with entry `(n, k)` the `n`-th cumulant induced by the
/// constant multiplier `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "MatrixJson")]
pub struct CumulantMatrix {
    entries: Vec<Vec<Rational>>,
    cols: usize,
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl From<CumulantMatrix> for MatrixJson {
    fn from(m: CumulantMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols,
            entries: m
                .entries
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl CumulantMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `c_{n,k}`, both 1-based.
    pub fn entry(&self, n: usize, k: usize) -> &Rational {
        &self.entries[n - 1][k - 1]
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.entries[n - 1]
    }

    pub fn column(&self, k: usize) -> MomentSequence {
        MomentSequence::new(self.entries.iter().map(|row| row[k - 1].clone()).collect())
    }

    /// Recovers the source moments from column `k`.
    pub fn moments_from_column(&self, k: usize) -> MomentSequence {
        let g = MultiplierSequence::constant(self.rows(), &int(k as i64));
        moments_from_generalized(&self.column(k), &g).expect("multiplier covers every row")
    }
}

pub fn cumulant_matrix(a: &MomentSequence, nmax: usize, kmax: usize) -> Result<CumulantMatrix> {
    check_bounds("cumulant_matrix rows", nmax, 1, a.order())?;
    check_bounds("cumulant_matrix cols", kmax, 1, usize::MAX)?;
    let a = a.truncate(nmax);
    let columns: Vec<MomentSequence> = (1..=kmax)
        .map(|k| generalized_cumulants(&a, &MultiplierSequence::constant(nmax, &int(k as i64))))
        .collect::<Result<_>>()?;
    let entries = (1..=nmax)
        .map(|n| columns.iter().map(|col| col.get(n)).collect())
        .collect();
    Ok(CumulantMatrix {
        entries,
        cols: kmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{boolean_from_moments, classical_from_moments, free_from_moments};

    fn seq(v: &[i64]) -> MomentSequence {
        MomentSequence::from_ints(v)
    }

    #[test]
    fn unit_multiplier_is_classical() {
        let a = seq(&[2, -1, 3, 5, 0]);
        let g = MultiplierSequence::constant(5, &int(1));
        assert_eq!(
            generalized_cumulants(&a, &g).unwrap(),
            classical_from_moments(&a)
        );
    }

    #[test]
    fn multiplier_two_on_barred_is_boolean() {
        let m = seq(&[1, 2, 4]);
        assert_eq!(m.bar(), seq(&[1, 4, 24]));
        let g = MultiplierSequence::constant(3, &int(2));
        let c = generalized_cumulants(&m.bar(), &g).unwrap();
        assert_eq!(c, seq(&[1, 2, 6]));
        assert_eq!(c, boolean_from_moments(&m).bar());
    }

    #[test]
    fn index_multiplier_on_barred_is_free() {
        let m = seq(&[1, -2, 0, 3, 1]);
        let g = MultiplierSequence::index(5);
        assert_eq!(
            generalized_cumulants(&m.bar(), &g).unwrap(),
            free_from_moments(&m).bar()
        );
    }

    #[test]
    fn inversion_examples() {
        let g = MultiplierSequence::constant(4, &int(1));
        assert_eq!(
            moments_from_generalized(&seq(&[1, 1, 1, 1]), &g).unwrap(),
            seq(&[1, 2, 5, 15])
        );
        let g = MultiplierSequence::index(4);
        assert_eq!(
            moments_from_generalized(&seq(&[1, 2, 6, 24]), &g).unwrap(),
            seq(&[1, 4, 30, 336])
        );
    }

    #[test]
    fn short_multiplier_is_rejected() {
        let g = MultiplierSequence::constant(2, &int(1));
        assert!(generalized_cumulants(&seq(&[1, 1, 1]), &g).is_err());
    }

    #[test]
    fn matrix_examples() {
        let bell = seq(&[1, 2, 5, 15]);
        let m = cumulant_matrix(&bell, 4, 3).unwrap();
        assert_eq!(m.column(1), seq(&[1, 1, 1, 1]));
        assert_eq!(m.entry(2, 2), &int(0));
        assert!(m.row(1).iter().all(|x| x == &int(1)));
        assert_eq!(m.column(2), seq(&[1, 0, -1, -1]));
        for k in 1..=3 {
            assert_eq!(m.moments_from_column(k), bell);
        }
        assert!(cumulant_matrix(&bell, 5, 2).is_err());
    }
}
