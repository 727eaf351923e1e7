//! Scalar types the d-invariant formulas can be evaluated over.
//!
//! Every formula in this crate has integer inputs and is closed under field
//! operations, so it is written once against [`Scalar`]. Verdicts compare
//! values against a threshold and require an ordered exact field, which is
//! what [`ExactScalar`] marks; floats are only good for display.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_int(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn approx(&self) -> f64;
}

/// Scalars whose arithmetic and comparisons are exact.
pub trait ExactScalar: Scalar + Ord {
    /// Reduced numerator and positive denominator, when they fit in `i64`.
    fn to_fraction(&self) -> Option<(i64, i64)>;
}

macro_rules! impl_float {
    ($f:ty) => {
        impl Scalar for $f {
            fn from_int(v: i64) -> Self {
                v as $f
            }

            fn approx(&self) -> f64 {
                *self as f64
            }
        }
    };
}

impl_float!(f32);
impl_float!(f64);

macro_rules! impl_ratio {
    ($i:ty) => {
        impl Scalar for Ratio<$i> {
            fn from_int(v: i64) -> Self {
                Ratio::from_integer(<$i>::from(v))
            }

            fn ratio(num: i64, den: i64) -> Self {
                Ratio::new(<$i>::from(num), <$i>::from(den))
            }

            fn approx(&self) -> f64 {
                self.to_f64().unwrap_or(f64::NAN)
            }
        }

        impl ExactScalar for Ratio<$i> {
            fn to_fraction(&self) -> Option<(i64, i64)> {
                Some((self.numer().to_i64()?, self.denom().to_i64()?))
            }
        }
    };
}

impl_ratio!(i64);
impl_ratio!(i128);

impl Scalar for Ratio<BigInt> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl ExactScalar for Ratio<BigInt> {
    fn to_fraction(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_are_reduced() {
        let r = <Ratio<i64> as Scalar>::ratio(156, 52);
        assert_eq!(r.to_fraction(), Some((3, 1)));
        let r = <Ratio<i128> as Scalar>::ratio(-12, 52);
        assert_eq!(r.to_fraction(), Some((-3, 13)));
        let r = <Ratio<BigInt> as Scalar>::ratio(6, -4);
        assert_eq!(r.to_fraction(), Some((-3, 2)));
    }

    #[test]
    fn floats_are_scalars() {
        assert_eq!(<f64 as Scalar>::ratio(1, 4), 0.25);
        assert_eq!(<f32 as Scalar>::from_int(-3).approx(), -3.0);
    }
}
