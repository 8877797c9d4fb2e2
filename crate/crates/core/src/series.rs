//! Truncated formal power series over exact rationals.
//!
//! A series of order `N` carries coefficients `c_0..=c_N`. Every binary
//! operation requires equal orders and returns a series of the same order;
//! anything past `t^N` is dropped. Whether the coefficients are read as an
//! exponential or ordinary generating function is up to the caller.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, format_rational, from_bigint, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = Error;

    fn try_from(raw: SeriesJson) -> Result<Self> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs.iter().map(format_rational).collect(),
        }
    }
}

impl TruncatedSeries {
    /// Builds a series from `c_0..=c_N`. An empty list is read as the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs }
    }

    /// Pads with zeros (or truncates) to exactly `order + 1` coefficients.
    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs: c }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity delta series `t`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// EGF of the all-ones sequence, `e^t`.
    pub fn exp_t(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| Rational::new(1.into(), factorial(n)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `e^{ct}` truncated.
    pub fn exp_scaled(order: usize, c: &Rational) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rational::one();
        for n in 0..=order {
            coeffs.push(&power / from_bigint(factorial(n)));
            power *= c;
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn is_unit_constant(&self) -> bool {
        self.coeffs[0].is_one()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut acc = Self::one(self.order());
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// `f^e` for rational `e`, defined as `exp(e log f)`; needs `f_0 = 1`.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Composition `f(d(t))` by Horner's rule; `d` must be a delta series.
    pub fn delta_compose(&self, d: &Self) -> Result<Self> {
        self.check_order(d)?;
        if !d.is_delta() {
            return Err(Error::NotDeltaSeries);
        }
        let n = self.order();
        let mut acc = Self::constant(n, self.coeffs[n].clone());
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_unchecked(d);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `w` with `self(w(t)) = t`, found one coefficient
    /// at a time. The `t^k` coefficient of `w^j` for `j >= 2` only involves
    /// `w_1..w_{k-1}`, so a table of partial powers lets `d_1 w_k` cancel
    /// everything else at degree `k`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NotDeltaSeries);
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let d = &self.coeffs;
        if d[1].is_zero() {
            return Err(Error::NoCompositionalInverse);
        }
        // powers[j][k] = [t^k] w^j, filled column by column
        let mut powers = vec![vec![Rational::zero(); n + 1]; n + 1];
        powers[1][1] = d[1].recip();
        for j in 2..=n {
            powers[j][j] = &powers[j - 1][j - 1] * &powers[1][1];
        }
        for k in 2..=n {
            for j in (2..k).rev() {
                let mut acc = Rational::zero();
                for i in 1..=k - j + 1 {
                    if !powers[1][i].is_zero() && !powers[j - 1][k - i].is_zero() {
                        acc += &powers[1][i] * &powers[j - 1][k - i];
                    }
                }
                powers[j][k] = acc;
            }
            let mut rest = Rational::zero();
            for j in 2..=k {
                if !d[j].is_zero() {
                    rest += &d[j] * &powers[j][k];
                }
            }
            powers[1][k] = -rest / &d[1];
        }
        Ok(TruncatedSeries {
            coeffs: std::mem::take(&mut powers[1]),
        })
    }

    /// Formal logarithm of a series with constant term 1, via `f g' = f'`.
    pub fn log(&self) -> Result<Self> {
        if !self.is_unit_constant() {
            return Err(Error::NotUnitConstant);
        }
        let n = self.order();
        let f = &self.coeffs;
        let mut g = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            let mut acc = Rational::from_integer(k.into()) * &f[k];
            for j in 1..k {
                if !g[j].is_zero() && !f[k - j].is_zero() {
                    acc -= Rational::from_integer(j.into()) * &g[j] * &f[k - j];
                }
            }
            g[k] = acc / Rational::from_integer(k.into());
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Formal exponential of a delta series, via `f' = d' f`.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NotDeltaSeries);
        }
        let n = self.order();
        let d = &self.coeffs;
        let mut f = vec![Rational::zero(); n + 1];
        f[0] = Rational::one();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !d[j].is_zero() && !f[k - j].is_zero() {
                    acc += Rational::from_integer(j.into()) * &d[j] * &f[k - j];
                }
            }
            f[k] = acc / Rational::from_integer(k.into());
        }
        Ok(TruncatedSeries { coeffs: f })
    }

    /// Multiplies coefficient `n` by `n!` (EGF reading to OGF reading).
    pub fn egf_to_ogf(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * from_bigint(factorial(n)))
                .collect(),
        }
    }

    /// Divides coefficient `n` by `n!`.
    pub fn ogf_to_egf(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / from_bigint(factorial(n)))
                .collect(),
        }
    }
}
