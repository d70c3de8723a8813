//! Exact unit phases `exp(i pi q)` and square roots of positive rationals.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Div, Mul, Neg};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `exp(i pi q)` with `q` kept exactly in `[0, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseRatPi {
    q: Rational,
}

impl PhaseRatPi {
    pub fn new(q: Rational) -> Self {
        PhaseRatPi {
            q: rational::rem_euclid(&q, &rational::int(2)),
        }
    }

    pub fn identity() -> Self {
        PhaseRatPi {
            q: Rational::zero(),
        }
    }

    /// `exp(2 pi i t)`, i.e. `q = 2t`.
    pub fn from_turns(t: &Rational) -> Self {
        Self::new(t * rational::int(2))
    }

    /// The exponent `q` in units of `pi`, in `[0, 2)`.
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_identity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.q.clone())
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::new(&self.q * rational::int(n))
    }

    /// `"q*pi"`, e.g. `"1/6*pi"`.
    pub fn render(&self) -> String {
        format!("{}*pi", rational::render(&self.q))
    }
}

impl Default for PhaseRatPi {
    fn default() -> Self {
        Self::identity()
    }
}

impl Mul for &PhaseRatPi {
    type Output = PhaseRatPi;

    // Multiplying unit phases adds their exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &PhaseRatPi) -> PhaseRatPi {
        PhaseRatPi::new(&self.q + &rhs.q)
    }
}

impl Mul for PhaseRatPi {
    type Output = PhaseRatPi;

    fn mul(self, rhs: PhaseRatPi) -> PhaseRatPi {
        &self * &rhs
    }
}

impl fmt::Display for PhaseRatPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `sqrt(r)` for a positive rational `r`, carried exactly as `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    radicand: Rational,
}

impl SqrtRational {
    pub fn new(radicand: Rational) -> Result<Self> {
        if !radicand.is_positive() {
            return Err(Error::Domain(format!(
                "square root of non-positive {}",
                rational::render(&radicand)
            )));
        }
        Ok(SqrtRational { radicand })
    }

    /// `sqrt(q^2) = |q|` for nonzero `q`.
    pub fn from_rational(q: &Rational) -> Result<Self> {
        Self::new(q * q)
    }

    pub fn one() -> Self {
        SqrtRational {
            radicand: Rational::one(),
        }
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// The square, which is always rational.
    pub fn square(&self) -> Rational {
        self.radicand.clone()
    }

    /// The value itself when it is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        rational::exact_sqrt(&self.radicand)
    }

    pub fn recip(&self) -> Self {
        SqrtRational {
            radicand: self.radicand.recip(),
        }
    }

    /// `"num/den"` when rational, else `"sqrt(num/den)"`.
    pub fn render(&self) -> String {
        match self.to_rational() {
            Some(q) => rational::render(&q),
            None => format!("sqrt({})", rational::render(&self.radicand)),
        }
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational {
            radicand: &self.radicand * &rhs.radicand,
        }
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Div for &SqrtRational {
    type Output = SqrtRational;

    fn div(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational {
            radicand: &self.radicand / &rhs.radicand,
        }
    }
}

impl Neg for &PhaseRatPi {
    type Output = PhaseRatPi;

    fn neg(self) -> PhaseRatPi {
        self.inverse()
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn phase_reduces_mod_two() {
        assert_eq!(PhaseRatPi::new(ratio(7, 2)).q(), &ratio(3, 2));
        assert_eq!(PhaseRatPi::new(ratio(-1, 3)).q(), &ratio(5, 3));
        assert!(PhaseRatPi::new(int(4)).is_identity());
        assert_eq!(PhaseRatPi::from_turns(&ratio(1, 4)).q(), &ratio(1, 2));
        assert_eq!(PhaseRatPi::new(ratio(1, 6)).render(), "1/6*pi");
    }

    #[test]
    fn sqrt_rational_algebra() {
        let a = SqrtRational::new(ratio(1, 4)).unwrap();
        assert_eq!(a.to_rational(), Some(ratio(1, 2)));
        let b = SqrtRational::new(int(2)).unwrap();
        assert_eq!(b.render(), "sqrt(2)");
        assert_eq!((&b * &b).to_rational(), Some(int(2)));
        assert_eq!((&a / &b).square(), ratio(1, 8));
        assert_eq!(b.recip().square(), ratio(1, 2));
        assert!(SqrtRational::new(int(0)).is_err());
        assert!(SqrtRational::new(int(-3)).is_err());
    }

    proptest! {
        #[test]
        fn phase_group_laws(a in -500i64..500, b in 1i64..60, c in -500i64..500, d in 1i64..60) {
            let x = PhaseRatPi::new(ratio(a, b));
            let y = PhaseRatPi::new(ratio(c, d));
            prop_assert_eq!(&x * &y, PhaseRatPi::new(ratio(a, b) + ratio(c, d)));
            prop_assert!((&x * &x.inverse()).is_identity());
            prop_assert_eq!(x.pow(3), &(&x * &x) * &x);
        }
    }
}
