//! Rational interval arithmetic: closed real intervals and axis-aligned
//! complex boxes with rational corners. These drive the exact exclusion
//! predicates of root isolation and algebraic-number refinement; no floating
//! point is involved.

use num_traits::{One, Zero};

use crate::num::{OrderedField, Rational, Sign};
use crate::poly::Poly;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != Sign::Positive && self.hi.sign() != Sign::Negative
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign of every point in the interval, if uniform.
    pub fn uniform_sign(&self) -> Option<Sign> {
        if self.hi.sign() == Sign::Negative {
            Some(Sign::Negative)
        } else if self.lo.sign() == Sign::Positive {
            Some(Sign::Positive)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn add_rat(&self, r: &Rational) -> RatInterval {
        RatInterval::new(&self.lo + r, &self.hi + r)
    }

    pub fn mul_rat(&self, r: &Rational) -> RatInterval {
        match r.sign() {
            Sign::Negative => RatInterval::new(&self.hi * r, &self.lo * r),
            _ => RatInterval::new(&self.lo * r, &self.hi * r),
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> RatInterval {
        assert!(!self.contains_zero(), "recip of interval containing zero");
        RatInterval::new(Rational::one() / &self.hi, Rational::one() / &self.lo)
    }
}

/// Axis-aligned rectangle `re + i*im` in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct CBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl CBox {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        CBox { re, im }
    }

    pub fn real(re: RatInterval) -> Self {
        CBox {
            re,
            im: RatInterval::point(Rational::zero()),
        }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        CBox {
            re: RatInterval::point(re),
            im: RatInterval::point(im),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, other: &CBox) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    pub fn conj(&self) -> CBox {
        CBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> CBox {
        CBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    /// Reciprocal; the box must exclude zero in at least one component.
    pub fn recip(&self) -> CBox {
        // 1/(a+bi) = (a - bi) / (a^2 + b^2)
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        assert!(
            !norm.contains_zero(),
            "recip of complex box containing zero"
        );
        let inv_norm = norm.recip();
        CBox {
            re: self.re.mul(&inv_norm),
            im: self.im.neg().mul(&inv_norm),
        }
    }

    pub fn div(&self, o: &CBox) -> CBox {
        self.mul(&o.recip())
    }

    /// Half of the box diagonal, overestimated rationally
    /// (`sqrt(a^2+b^2) <= a + b`).
    pub fn half_diameter(&self) -> Rational {
        (self.re.width() + self.im.width()) / Rational::from_integer(2.into())
    }

    pub fn center(&self) -> (Rational, Rational) {
        (self.re.mid(), self.im.mid())
    }
}

/// Interval Horner evaluation of a rational polynomial over a real interval.
pub fn eval_interval(p: &Poly<Rational>, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add_rat(c);
    }
    acc
}

/// Interval Horner evaluation over a complex box.
pub fn eval_cbox(p: &Poly<Rational>, z: &CBox) -> CBox {
    let mut acc = CBox::point(Rational::zero(), Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re = acc.re.add_rat(c);
    }
    acc
}
