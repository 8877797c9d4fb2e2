//! Each convolution adds cumulants: transform both inputs, take the
//! disjoint sum, invert.

use crate::error::Result;

use super::sequence::check_same_order;
use super::{
    boolean_from_moments, classical_from_moments, free_from_moments, generalized_cumulants,
    moments_from_boolean, moments_from_classical, moments_from_free, moments_from_generalized,
    MomentSequence, MultiplierSequence,
};

fn convolve_with(
    a: &MomentSequence,
    b: &MomentSequence,
    forward: impl Fn(&MomentSequence) -> MomentSequence,
    inverse: impl Fn(&MomentSequence) -> MomentSequence,
) -> Result<MomentSequence> {
    check_same_order(a, b)?;
    Ok(inverse(&forward(a).disjoint_sum(&forward(b))?))
}

/// Moments of the sum of independent variables.
pub fn classical_convolve(a: &MomentSequence, b: &MomentSequence) -> Result<MomentSequence> {
    convolve_with(a, b, classical_from_moments, moments_from_classical)
}

/// `⊎`: boolean cumulants add.
pub fn boolean_convolve(a: &MomentSequence, b: &MomentSequence) -> Result<MomentSequence> {
    convolve_with(a, b, boolean_from_moments, moments_from_boolean)
}

/// `⊞`: free cumulants add.
pub fn free_convolve(a: &MomentSequence, b: &MomentSequence) -> Result<MomentSequence> {
    convolve_with(a, b, free_from_moments, moments_from_free)
}

/// Convolution linearized by the cumulants induced by `g`.
pub fn gamma_convolve(
    a: &MomentSequence,
    b: &MomentSequence,
    g: &MultiplierSequence,
) -> Result<MomentSequence> {
    check_same_order(a, b)?;
    let ca = generalized_cumulants(a, g)?;
    let cb = generalized_cumulants(b, g)?;
    moments_from_generalized(&ca.disjoint_sum(&cb)?, g)
}

/// Coefficients `l_1..l_N` of `1 / (1 + Σ r_n t^n)`, where `r` are the free
/// cumulants of `a`. Maps free convolution to boolean convolution.
pub fn boolean_free_transport(a: &MomentSequence) -> MomentSequence {
    let r = free_from_moments(a).ogf();
    let l = r.reciprocal().expect("constant term is 1");
    MomentSequence::from_ogf(&l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn seq(v: &[i64]) -> MomentSequence {
        MomentSequence::from_ints(v)
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(
            classical_convolve(&seq(&[1, 1]), &seq(&[1, 1])).unwrap(),
            seq(&[2, 4])
        );
        let sc = seq(&[0, 1, 0, 2]);
        assert_eq!(free_convolve(&sc, &sc).unwrap(), seq(&[0, 2, 0, 8]));
        let b = seq(&[1, 2, 4, 8]);
        assert_eq!(boolean_convolve(&b, &b).unwrap(), seq(&[2, 6, 18, 54]));
        assert!(classical_convolve(&seq(&[1]), &seq(&[1, 1])).is_err());
    }

    #[test]
    fn classical_matches_egf_product() {
        let a = seq(&[1, 3, -2, 5]);
        let b = seq(&[0, 2, 1, -1]);
        let product = a.egf().mul(&b.egf()).unwrap();
        assert_eq!(
            classical_convolve(&a, &b).unwrap(),
            MomentSequence::from_egf(&product)
        );
    }

    #[test]
    fn gamma_specializations() {
        let a = seq(&[1, -1, 2, 0, 3]);
        let b = seq(&[2, 1, 1, -3, 1]);
        let one = MultiplierSequence::constant(5, &int(1));
        let two = MultiplierSequence::constant(5, &int(2));
        let idx = MultiplierSequence::index(5);
        assert_eq!(
            gamma_convolve(&a, &b, &one).unwrap(),
            classical_convolve(&a, &b).unwrap()
        );
        assert_eq!(
            gamma_convolve(&a.bar(), &b.bar(), &two).unwrap().unbar(),
            boolean_convolve(&a, &b).unwrap()
        );
        assert_eq!(
            gamma_convolve(&a.bar(), &b.bar(), &idx).unwrap().unbar(),
            free_convolve(&a, &b).unwrap()
        );
    }

    #[test]
    fn transport_examples() {
        assert_eq!(
            boolean_free_transport(&seq(&[1, 2, 5, 14])),
            seq(&[-1, 0, 0, 0])
        );
        let eps = seq(&[0, 0, 0]);
        assert_eq!(boolean_free_transport(&eps), eps);
        let a = seq(&[1, 0, 2, -1, 3]);
        let b = seq(&[-2, 1, 1, 4, 0]);
        assert_eq!(
            boolean_free_transport(&free_convolve(&a, &b).unwrap()),
            boolean_convolve(&boolean_free_transport(&a), &boolean_free_transport(&b)).unwrap()
        );
    }
}
