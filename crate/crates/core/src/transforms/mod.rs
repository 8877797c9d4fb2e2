//! Moment ↔ cumulant transforms and the convolutions they linearize.
//!
//! Every family is a sum over integer partitions `λ ⊢ n` of a weight times
//! `a_λ = Π a_{λ_i}`:
//!
//! | family      | moments → cumulants weight            |
//! |-------------|---------------------------------------|
//! | classical   | `d_λ (-1)^{ℓ-1} (ℓ-1)!`               |
//! | boolean     | `ℓ!/m(λ)! (-1)^{ℓ-1}`                 |
//! | free        | `(-n)_{ℓ-1} / m(λ)!`                  |
//! | generalized | `d_λ (-g_n)_{ℓ-1}`                    |
//!
//! Boolean and free transforms take and return unbarred sequences; the
//! generalized family reproduces them on barred sequences (`g ≡ 2` and
//! `g_n = n`).

mod boolean;
mod classical;
mod convolution;
mod free;
mod generalized;
pub mod oracles;
mod sequence;
mod umbral;

pub use boolean::{boolean_from_moments, moments_from_boolean};
pub use classical::{classical_from_moments, moments_from_classical};
pub use convolution::{
    boolean_convolve, boolean_free_transport, classical_convolve, free_convolve, gamma_convolve,
};
pub use free::{free_from_moments, moments_from_free};
pub use generalized::{
    cumulant_matrix, generalized_cumulants, moments_from_generalized, CumulantMatrix,
};
pub use oracles::{abel_copy_oracle, abel_oracle};
pub use sequence::{MomentSequence, MultiplierSequence};
pub use umbral::{
    copies_power_moments, dot_operation, dot_power_moments, factorial_moments,
    stirling_first_signed, umbral_composition, Flavor,
};

use crate::partitions::{integer_partitions, IntegerPartition};
use crate::rational::Rational;

/// `Σ_{λ ⊢ n} weight(n, λ) · seq_λ` for `n = 1..=order`.
fn partition_sum(
    seq: &MomentSequence,
    weight: impl Fn(usize, &IntegerPartition) -> Rational,
) -> MomentSequence {
    MomentSequence::from_fn(seq.order(), |n| {
        integer_partitions(n)
            .iter()
            .map(|lambda| weight(n, lambda) * seq.monomial(lambda))
            .sum()
    })
}
