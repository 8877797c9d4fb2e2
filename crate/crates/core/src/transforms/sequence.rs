use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::IntegerPartition;
use crate::rational::{
    binomial, factorial, format_rational, from_bigint, int, parse_rational, pow, Rational,
};
use crate::series::TruncatedSeries;

/// Moments `a_1..a_N` of a sequence with implicit `a_0 = 1`.
///
/// This is how an umbra is represented here: by its moment sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SequenceJson", into = "SequenceJson")]
pub struct MomentSequence {
    values: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SequenceJson {
    order: usize,
    values: Vec<String>,
}

impl TryFrom<SequenceJson> for MomentSequence {
    type Error = Error;

    fn try_from(raw: SequenceJson) -> Result<Self> {
        if raw.values.len() != raw.order {
            return Err(Error::Parse(format!(
                "order {} but {} values",
                raw.order,
                raw.values.len()
            )));
        }
        let values = raw
            .values
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(MomentSequence { values })
    }
}

impl From<MomentSequence> for SequenceJson {
    fn from(s: MomentSequence) -> Self {
        SequenceJson {
            order: s.order(),
            values: s.values.iter().map(format_rational).collect(),
        }
    }
}

impl MomentSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        MomentSequence { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        MomentSequence {
            values: values.iter().map(|&v| int(v)).collect(),
        }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        MomentSequence {
            values: (1..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// `a_n`, with `a_0 = 1`.
    pub fn get(&self, n: usize) -> Rational {
        if n == 0 {
            Rational::one()
        } else {
            self.values[n - 1].clone()
        }
    }

    /// `a_λ = Π a_{λ_i}`.
    pub fn monomial(&self, lambda: &IntegerPartition) -> Rational {
        lambda
            .parts()
            .iter()
            .fold(Rational::one(), |acc, &p| acc * &self.values[p - 1])
    }

    pub fn truncate(&self, order: usize) -> Self {
        MomentSequence {
            values: self.values[..order.min(self.order())].to_vec(),
        }
    }

    /// `ā_n = n! a_n`: turns the EGF reading into the OGF reading.
    pub fn bar(&self) -> Self {
        Self::from_fn(self.order(), |n| {
            &self.values[n - 1] * from_bigint(factorial(n))
        })
    }

    pub fn unbar(&self) -> Self {
        Self::from_fn(self.order(), |n| {
            &self.values[n - 1] / from_bigint(factorial(n))
        })
    }

    /// `(j^n a_n)`, the moments of `jα`.
    pub fn dilate(&self, j: &Rational) -> Self {
        Self::from_fn(self.order(), |n| &self.values[n - 1] * pow(j, n))
    }

    /// Elementwise sum: the disjoint sum of two sequences.
    pub fn disjoint_sum(&self, other: &Self) -> Result<Self> {
        check_same_order(self, other)?;
        Ok(MomentSequence {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `1 + Σ a_n t^n / n!`.
    pub fn egf(&self) -> TruncatedSeries {
        self.ogf().ogf_to_egf()
    }

    /// `1 + Σ a_n t^n`.
    pub fn ogf(&self) -> TruncatedSeries {
        let mut c = Vec::with_capacity(self.order() + 1);
        c.push(Rational::one());
        c.extend(self.values.iter().cloned());
        TruncatedSeries::new(c)
    }

    /// Reads `a_n` off an EGF (ignores the constant term).
    pub fn from_egf(series: &TruncatedSeries) -> Self {
        Self::from_ogf(&series.egf_to_ogf())
    }

    pub fn from_ogf(series: &TruncatedSeries) -> Self {
        MomentSequence {
            values: series.coeffs()[1..].to_vec(),
        }
    }

    /// The all-ones sequence: unity umbra `u`.
    pub fn unity(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::one())
    }

    /// `(1, 0, 0, ...)`: singleton umbra `χ`.
    pub fn singleton(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// All zeros: augmentation `ε`.
    pub fn augmentation(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    /// `n!`: boolean unity `ū`.
    pub fn boolean_unity(order: usize) -> Self {
        Self::from_fn(order, |n| from_bigint(factorial(n)))
    }

    /// `g_n = n`: derivative of the unity umbra, `u_D`.
    pub fn unity_derivative(order: usize) -> Self {
        Self::from_fn(order, |n| int(n as i64))
    }

    /// `c^n`: the umbra `c u`.
    pub fn scaled_unity(order: usize, c: &Rational) -> Self {
        Self::from_fn(order, |n| pow(c, n))
    }

    /// Bell numbers from `B_{n+1} = Σ_k C(n,k) B_k`.
    pub fn bell(order: usize) -> Self {
        let mut b = vec![num_bigint::BigInt::one()];
        for n in 0..order {
            let next = (0..=n).map(|k| binomial(n, k) * &b[k]).sum();
            b.push(next);
        }
        MomentSequence {
            values: b.into_iter().skip(1).map(from_bigint).collect(),
        }
    }

    /// Catalan numbers `C(2n, n) / (n + 1)`.
    pub fn catalan(order: usize) -> Self {
        Self::from_fn(order, |n| {
            Rational::new(binomial(2 * n, n), num_bigint::BigInt::from(n + 1))
        })
    }

    /// Named constants: `u`, `chi`, `epsilon`, `ubar`, `uD`, `bell`, `catalan`.
    pub fn named(name: &str, order: usize) -> Result<Self> {
        Ok(match name {
            "u" => Self::unity(order),
            "chi" => Self::singleton(order),
            "epsilon" => Self::augmentation(order),
            "ubar" => Self::boolean_unity(order),
            "uD" => Self::unity_derivative(order),
            "bell" => Self::bell(order),
            "catalan" => Self::catalan(order),
            other => return Err(Error::Parse(format!("unknown named sequence {other:?}"))),
        })
    }
}

pub(crate) fn check_same_order(a: &MomentSequence, b: &MomentSequence) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(())
}

/// The multipliers `g_1, g_2, ...` that select a cumulant family.
///
/// `g ≡ 1` gives classical cumulants, `g ≡ 2` boolean (on barred moments),
/// `g_n = n` free (on barred moments).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplierSequence {
    values: Vec<Rational>,
}

impl MultiplierSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        MultiplierSequence { values }
    }

    pub fn constant(order: usize, k: &Rational) -> Self {
        MultiplierSequence {
            values: vec![k.clone(); order],
        }
    }

    /// `g_n = n`.
    pub fn index(order: usize) -> Self {
        Self::diagonal(order, 1)
    }

    /// `g_n = n + k - 1`: the `k`-th diagonal of the cumulant matrix.
    pub fn diagonal(order: usize, k: i64) -> Self {
        MultiplierSequence {
            values: (1..=order).map(|n| int(n as i64 + k - 1)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `g_n`, 1-based.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n - 1]
    }

    pub(crate) fn check_covers(&self, order: usize) -> Result<()> {
        if self.order() < order {
            return Err(Error::OrderMismatch {
                left: order,
                right: self.order(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_constants() {
        assert_eq!(
            MomentSequence::bell(8),
            MomentSequence::from_ints(&[1, 2, 5, 15, 52, 203, 877, 4140])
        );
        assert_eq!(
            MomentSequence::catalan(5),
            MomentSequence::from_ints(&[1, 2, 5, 14, 42])
        );
        assert_eq!(
            MomentSequence::named("ubar", 4).unwrap(),
            MomentSequence::from_ints(&[1, 2, 6, 24])
        );
        assert_eq!(
            MomentSequence::named("chi", 3).unwrap(),
            MomentSequence::from_ints(&[1, 0, 0])
        );
        assert_eq!(
            MomentSequence::named("uD", 3).unwrap(),
            MomentSequence::from_ints(&[1, 2, 3])
        );
        assert!(MomentSequence::named("nope", 3).is_err());
    }

    #[test]
    fn bar_round_trip() {
        let a = MomentSequence::from_ints(&[1, 1, 1]);
        assert_eq!(a.bar(), MomentSequence::from_ints(&[1, 2, 6]));
        assert_eq!(a.bar().unbar(), a);
    }

    #[test]
    fn json_shape() {
        let a = MomentSequence::new(vec![int(1), crate::rational::ratio(1, 2)]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"order":2,"values":["1","1/2"]}"#);
        assert_eq!(serde_json::from_str::<MomentSequence>(&text).unwrap(), a);
        assert!(serde_json::from_str::<MomentSequence>(r#"{"order":3,"values":["1"]}"#).is_err());
        assert!(serde_json::from_str::<MomentSequence>(r#"{"order":1,"values":["1/0"]}"#).is_err());
    }
}
