//! Lower and upper bounds on `Pr_r(R)` in terms of the center and the smallest prime
//! dividing `|R|`.

use crate::commutators::{center, pr_spectrum, Spectrum};
use crate::error::{Error, Result};
use crate::probability::{ExactProbability, Fraction};
use crate::ring::{FiniteRing, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Pass,
    Fail,
    /// Precondition of the bound does not hold; nothing was compared.
    Gated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub lhs: Fraction,
    pub rhs: Fraction,
    pub status: BoundStatus,
    /// Whether `lhs == rhs`.
    pub equality: bool,
}

impl BoundCheck {
    fn compare(lhs: Fraction, rhs: Fraction, holds: bool) -> Self {
        BoundCheck {
            lhs,
            rhs,
            status: if holds { BoundStatus::Pass } else { BoundStatus::Fail },
            equality: lhs == rhs,
        }
    }
}

/// One report per target element `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub r: RingElement,
    pub pr_r: ExactProbability,
    /// `Pr_r >= 3 / |R : Z(R)|^2`, compared only when `Pr_r > 0`.
    pub central_index_lower: Result<BoundCheck>,
    /// `Pr_r <= Pr`, with equality exactly when `r = 0`.
    pub below_commuting: BoundCheck,
    /// `Pr_r <= (|R| - |Z(R)|) / (p |R|)`; `smallest_prime_cap` carries the strict
    /// comparison against `1/p`.
    pub smallest_prime_upper: Result<BoundCheck>,
    pub smallest_prime_cap: Result<BoundCheck>,
}

/// Ring-wide quantities shared by every bound check.
#[derive(Debug, Clone)]
pub struct BoundContext {
    order: i64,
    center_order: i64,
    smallest_prime: i64,
    commutative: bool,
    spectrum: Spectrum,
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    (2..)
        .take_while(|p| p * p <= n)
        .find(|p| n.is_multiple_of(*p))
        .unwrap_or(n)
}

impl BoundContext {
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        Ok(BoundContext {
            order: ring.order() as i64,
            center_order: center(ring).len() as i64,
            smallest_prime: smallest_prime_factor(ring.order() as u64) as i64,
            commutative: ring.is_commutative(),
            spectrum: pr_spectrum(ring)?,
        })
    }

    pub fn smallest_prime(&self) -> u64 {
        self.smallest_prime as u64
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn check(&self, r: &RingElement) -> Result<BoundReport> {
        let pr_r = self
            .spectrum
            .get(r)
            .ok_or_else(|| Error::ShapeMismatch {
                expected: self.spectrum.entries()[0].0.rank(),
                found: r.clone(),
            })?;
        let pr = self.spectrum.entries()[0].1;
        let lhs = pr_r.value();

        let nonzero_noncommutative = || {
            if self.commutative {
                Err(Error::CommutativeRing)
            } else if r.is_zero() {
                Err(Error::ZeroR)
            } else {
                Ok(())
            }
        };

        let central_index_lower = nonzero_noncommutative().map(|()| {
            let index = self.order / self.center_order;
            let rhs = Fraction::new(3, index * index);
            if pr_r.is_zero() {
                BoundCheck {
                    lhs,
                    rhs,
                    status: BoundStatus::Gated,
                    equality: false,
                }
            } else {
                BoundCheck::compare(lhs, rhs, lhs >= rhs)
            }
        });

        let below_commuting = {
            let rhs = pr.value();
            let holds = lhs <= rhs && ((lhs == rhs) == r.is_zero());
            BoundCheck::compare(lhs, rhs, holds)
        };

        let smallest_prime_upper = nonzero_noncommutative().map(|()| {
            let rhs = Fraction::new(
                self.order - self.center_order,
                self.smallest_prime * self.order,
            );
            BoundCheck::compare(lhs, rhs, lhs <= rhs)
        });
        let smallest_prime_cap = nonzero_noncommutative().map(|()| {
            let middle = Fraction::new(
                self.order - self.center_order,
                self.smallest_prime * self.order,
            );
            let cap = Fraction::new(1, self.smallest_prime);
            BoundCheck::compare(middle, cap, middle < cap)
        });

        Ok(BoundReport {
            r: r.clone(),
            pr_r,
            central_index_lower,
            below_commuting,
            smallest_prime_upper,
            smallest_prime_cap,
        })
    }
}

pub fn check_bounds(ring: &FiniteRing, r: &RingElement) -> Result<BoundReport> {
    ring.shape().check(r)?;
    BoundContext::new(ring)?.check(r)
}
