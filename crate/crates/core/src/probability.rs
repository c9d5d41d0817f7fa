use std::fmt;

use num_rational::Ratio;

/// Signed exact fraction used for both sides of checked identities.
pub type Fraction = Ratio<i64>;

/// Always `num/den`, including `0/1` and `1/1`.
pub fn format_fraction(f: &Fraction) -> String {
    format!("{}/{}", f.numer(), f.denom())
}

/// A probability held as a reduced fraction in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactProbability(Fraction);

impl ExactProbability {
    /// `favourable / total`, reduced.
    ///
    /// Panics if `total` is zero or `favourable > total`.
    pub fn new(favourable: u64, total: u64) -> Self {
        assert!(total > 0 && favourable <= total, "{favourable}/{total} is not a probability");
        ExactProbability(Ratio::new(favourable as i64, total as i64))
    }

    pub fn from_fraction(f: Fraction) -> Option<Self> {
        (f >= Fraction::from_integer(0) && f <= Fraction::from_integer(1)).then_some(ExactProbability(f))
    }

    pub fn zero() -> Self {
        ExactProbability(Fraction::from_integer(0))
    }

    pub fn one() -> Self {
        ExactProbability(Fraction::from_integer(1))
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer() as u64
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom() as u64
    }

    pub fn value(&self) -> Fraction {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }
}

impl std::ops::Mul for ExactProbability {
    type Output = ExactProbability;

    fn mul(self, rhs: Self) -> Self {
        ExactProbability(self.0 * rhs.0)
    }
}

impl fmt::Display for ExactProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}
