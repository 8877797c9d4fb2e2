use crate::rational::{falling_factorial, from_bigint, int};

use super::{partition_sum, MomentSequence};

/// Free cumulants: `r_n = Σ_λ (-n)_{ℓ-1} m_λ / m(λ)!`.
pub fn free_from_moments(moments: &MomentSequence) -> MomentSequence {
    partition_sum(moments, |n, lambda| {
        falling_factorial(&int(-(n as i64)), lambda.len() - 1)
            / from_bigint(lambda.multiplicity_factorial())
    })
}

/// Moments from free cumulants: `m_n = Σ_λ (n)_{ℓ-1} r_λ / m(λ)!`.
pub fn moments_from_free(cumulants: &MomentSequence) -> MomentSequence {
    partition_sum(cumulants, |_, lambda| lambda.noncrossing_count())
}
