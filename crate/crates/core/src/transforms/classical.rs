use crate::rational::{factorial, from_bigint, Rational};

use super::{partition_sum, MomentSequence};

/// Classical cumulants: `c_n = Σ_λ d_λ (-1)^{ℓ-1} (ℓ-1)! m_λ`.
pub fn classical_from_moments(moments: &MomentSequence) -> MomentSequence {
    partition_sum(moments, |_, lambda| {
        let l = lambda.len();
        let sign = if l % 2 == 1 { 1 } else { -1 };
        from_bigint(lambda.set_partition_count() * factorial(l - 1) * sign)
    })
}

/// Complete Bell polynomials: `m_n = Σ_λ d_λ c_λ`.
pub fn moments_from_classical(cumulants: &MomentSequence) -> MomentSequence {
    partition_sum(cumulants, |_, lambda| {
        Rational::from_integer(lambda.set_partition_count())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let bell = MomentSequence::from_ints(&[1, 2, 5, 15]);
        assert_eq!(
            classical_from_moments(&bell),
            MomentSequence::from_ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            classical_from_moments(&MomentSequence::from_ints(&[1, 1])),
            MomentSequence::from_ints(&[1, 0])
        );
        let eps = MomentSequence::from_ints(&[0, 0, 0]);
        assert_eq!(classical_from_moments(&eps), eps);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            moments_from_classical(&MomentSequence::from_ints(&[1, 1, 1, 1, 1])),
            MomentSequence::from_ints(&[1, 2, 5, 15, 52])
        );
        assert_eq!(
            moments_from_classical(&MomentSequence::from_ints(&[2, 0, 0])),
            MomentSequence::from_ints(&[2, 4, 8])
        );
        let a = MomentSequence::from_ints(&[3, -1, 4, 1, -5]);
        assert_eq!(moments_from_classical(&classical_from_moments(&a)), a);
    }
}
