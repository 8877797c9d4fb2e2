use num_traits::Zero;

use crate::rational::Rational;

use super::{partition_sum, MomentSequence};

/// Boolean cumulants: `h_n = Σ_λ ℓ!/m(λ)! (-1)^{ℓ-1} m_λ`.
pub fn boolean_from_moments(moments: &MomentSequence) -> MomentSequence {
    partition_sum(moments, |_, lambda| {
        let count = lambda.interval_count();
        if lambda.len() % 2 == 1 {
            count
        } else {
            -count
        }
    })
}

/// Inverse of [`boolean_from_moments`] through `M = 1 + H M`:
/// `m_n = Σ_{k=1}^n h_k m_{n-k}`.
pub fn moments_from_boolean(cumulants: &MomentSequence) -> MomentSequence {
    let n_max = cumulants.order();
    let mut m: Vec<Rational> = Vec::with_capacity(n_max + 1);
    m.push(Rational::from_integer(1.into()));
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        for k in 1..=n {
            acc += cumulants.get(k) * &m[n - k];
        }
        m.push(acc);
    }
    MomentSequence::new(m.split_off(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            boolean_from_moments(&MomentSequence::from_ints(&[1, 2, 4, 8])),
            MomentSequence::from_ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            boolean_from_moments(&MomentSequence::from_ints(&[1, 1, 1])),
            MomentSequence::from_ints(&[1, 0, 0])
        );
        assert_eq!(
            boolean_from_moments(&MomentSequence::from_ints(&[0, 1, 0])),
            MomentSequence::from_ints(&[0, 1, 0])
        );
    }

    #[test]
    fn inverse() {
        assert_eq!(
            moments_from_boolean(&MomentSequence::from_ints(&[1, 1, 1, 1, 1])),
            MomentSequence::from_ints(&[1, 2, 4, 8, 16])
        );
        let a = MomentSequence::from_ints(&[2, -3, 0, 7, 1]);
        assert_eq!(moments_from_boolean(&boolean_from_moments(&a)), a);
    }
}
