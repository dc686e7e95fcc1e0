//! Complex algebraic numbers as pairs of real algebraic numbers.

use std::fmt;

use super::real::{AlgebraicReal, RatInterval};
use super::AlgebraError;

/// `re + i·im` with both parts exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexAlgebraic {
    pub re: AlgebraicReal,
    pub im: AlgebraicReal,
}

impl ComplexAlgebraic {
    pub fn new(re: AlgebraicReal, im: AlgebraicReal) -> Self {
        ComplexAlgebraic { re, im }
    }

    pub fn real(re: AlgebraicReal) -> Self {
        ComplexAlgebraic { re, im: AlgebraicReal::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(AlgebraicReal::from_int(v))
    }

    pub fn i() -> Self {
        ComplexAlgebraic { re: AlgebraicReal::zero(), im: AlgebraicReal::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexAlgebraic { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexAlgebraic { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        ComplexAlgebraic { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        ComplexAlgebraic { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // skip work on real operands; most entries in practice are real
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => Self::real(self.re.mul(&o.re)),
            (true, false) => ComplexAlgebraic { re: self.re.mul(&o.re), im: self.re.mul(&o.im) },
            (false, true) => ComplexAlgebraic { re: self.re.mul(&o.re), im: self.im.mul(&o.re) },
            (false, false) => ComplexAlgebraic {
                re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
                im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
            },
        }
    }

    /// |z|².
    pub fn norm_sqr(&self) -> AlgebraicReal {
        if self.im.is_zero() {
            return self.re.mul(&self.re);
        }
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.im.is_zero() {
            return Ok(Self::real(self.re.recip()?));
        }
        let n = self.norm_sqr().recip()?;
        Ok(ComplexAlgebraic { re: self.re.mul(&n), im: self.im.neg().mul(&n) })
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        if o.im.is_zero() {
            let r = o.re.recip()?;
            return Ok(ComplexAlgebraic { re: self.re.mul(&r), im: self.im.mul(&r) });
        }
        Ok(self.mul(&o.recip()?))
    }

    pub fn enclosure(&self, bits: u32) -> (RatInterval, RatInterval) {
        (self.re.enclosure(bits), self.im.enclosure(bits))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ComplexAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            let (a, b) = self.to_f64_pair();
            write!(f, "({}) + i·({}) (≈ {a:.6}{b:+.6}i)", self.re, self.im)
        }
    }
}
