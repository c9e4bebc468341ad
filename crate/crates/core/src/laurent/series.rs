//! Truncated expansions under the substitution `q = exp(delta)`.

use num_traits::Zero;

use super::rational::{factorial, pow, Rational};
use super::LaurentPoly;
use crate::error::{Error, Result};

/// Highest order accepted by [`exp_series`].
pub const MAX_SERIES_ORDER: usize = 64;

/// `sum_k coeffs[k] * delta^k`, truncated after `coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeries {
    pub coeffs: Vec<Rational>,
}

impl DeltaSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Expands `a(exp(delta))` up to `delta^order`:
/// `c_k = sum_e a_e * e^k / k!`.
pub fn exp_series(a: &LaurentPoly, order: usize) -> Result<DeltaSeries> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::InvalidArgument(format!(
            "series order {order} exceeds the cap of {MAX_SERIES_ORDER}"
        )));
    }
    let coeffs = (0..=order)
        .map(|k| {
            let kf = Rational::from_integer(factorial(k));
            let sum = a.terms().fold(Rational::zero(), |acc, (e, c)| {
                acc + c * pow(&Rational::from_integer(e.into()), k as i64)
            });
            sum / kf
        })
        .collect();
    Ok(DeltaSeries { coeffs })
}
