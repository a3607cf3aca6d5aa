//! Canonical-representation algebraic numbers: an irreducible minimal
//! polynomial over the rationals together with an isolating region that
//! contains exactly one of its roots. Real numbers carry an isolating
//! interval; non-real numbers carry separately isolated real and imaginary
//! parts, so refinement is always interval bisection with exact rational
//! predicates.
//!
//! All values are immutable: refinement returns a new value. Equality is
//! structural (identical minimal polynomial plus overlapping isolating
//! regions), which is decidable because construction always refines below a
//! quarter of the Mignotte root-separation bound.

mod arith;
mod isolate;

pub use isolate::isolate_roots;

use std::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::interval::{CBox, RatInterval};
use crate::num::{rat_int, BigInt, Rational, Ring, Sign};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgnumError {
    #[error("cannot operate on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a real algebraic number")]
    NonRealInput,
    #[error("root separation bound requires degree >= 2")]
    DegreeTooLow,
}

/// One isolated real root of a squarefree rational polynomial.
///
/// Either an exact rational point (`lo == hi`) or an interval with
/// `poly(lo)` and `poly(hi)` nonzero and of opposite signs, containing
/// exactly one root.
#[derive(Clone, Debug)]
pub(crate) struct RealRoot {
    poly: Poly<Rational>,
    lo: Rational,
    hi: Rational,
    sign_lo: Sign,
}

impl RealRoot {
    pub(crate) fn exact(v: Rational) -> Self {
        let poly = Poly::new(vec![-v.clone(), Rational::one()]);
        RealRoot {
            poly,
            lo: v.clone(),
            hi: v,
            sign_lo: Sign::Zero,
        }
    }

    /// Interval isolation; requires a sign change across `(lo, hi)` and a
    /// single contained root (callers establish this via Sturm counts).
    pub(crate) fn isolated(poly: Poly<Rational>, lo: Rational, hi: Rational) -> Self {
        use crate::num::OrderedField;
        debug_assert!(lo < hi);
        let sign_lo = poly.eval(&lo).sign();
        debug_assert!(sign_lo != Sign::Zero);
        debug_assert!(poly.eval(&hi).sign() == sign_lo.flip());
        RealRoot {
            poly,
            lo,
            hi,
            sign_lo,
        }
    }

    pub(crate) fn as_exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub(crate) fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub(crate) fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn collapse(&mut self, v: Rational) {
        self.lo = v.clone();
        self.hi = v;
        self.sign_lo = Sign::Zero;
    }

    /// One bisection step.
    pub(crate) fn refine_step(&mut self) {
        use crate::num::OrderedField;
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat_int(2);
        match self.poly.eval(&mid).sign() {
            Sign::Zero => self.collapse(mid),
            s if s == self.sign_lo => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    pub(crate) fn refine_below(&mut self, width: &Rational) {
        while &self.width() > width {
            self.refine_step();
        }
    }

    /// Exact sign of the root value; terminates because the callers only
    /// ask when the value is known nonzero or the poly excludes 0.
    pub(crate) fn sign_value(&mut self) -> Sign {
        use crate::num::OrderedField;
        loop {
            if let Some(v) = self.as_exact() {
                return v.sign();
            }
            let iv = self.interval();
            if let Some(s) = iv.uniform_sign() {
                return s;
            }
            if !iv.contains_zero() {
                // endpoints straddle in sign convention but zero outside
                return if iv.lo.sign() == Sign::Positive {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
            }
            if self.poly.eval(&Rational::zero()).is_zero() {
                // zero is a root of the carrier; it must be this one
                self.collapse(Rational::zero());
                return Sign::Zero;
            }
            self.refine_step();
        }
    }

    pub(crate) fn negated(&self) -> RealRoot {
        let poly = self.poly.negate_arg();
        let lo = -self.hi.clone();
        let hi = -self.lo.clone();
        let sign_lo = if lo == hi {
            Sign::Zero
        } else {
            poly_sign_at(&poly, &lo)
        };
        RealRoot {
            poly,
            lo,
            hi,
            sign_lo,
        }
    }

    pub(crate) fn shifted(&self, r: &Rational) -> RealRoot {
        let poly = self.poly.shift_arg(&-r.clone());
        RealRoot {
            poly,
            lo: &self.lo + r,
            hi: &self.hi + r,
            sign_lo: self.sign_lo,
        }
    }

    /// Root scaled by a nonzero rational.
    pub(crate) fn scaled(&self, r: &Rational) -> RealRoot {
        use crate::num::OrderedField;
        assert!(!r.is_zero());
        let inv = Rational::one() / r;
        let poly = self.poly.scale_arg(&inv);
        let (lo, hi) = if r.sign() == Sign::Negative {
            (&self.hi * r, &self.lo * r)
        } else {
            (&self.lo * r, &self.hi * r)
        };
        let sign_lo = if lo == hi {
            Sign::Zero
        } else {
            poly_sign_at(&poly, &lo)
        };
        RealRoot { poly, lo, hi, sign_lo }
    }
}

fn poly_sign_at(p: &Poly<Rational>, x: &Rational) -> Sign {
    use crate::num::OrderedField;
    p.eval(x).sign()
}

/// Algebraic number in canonical representation: irreducible monic minimal
/// polynomial plus isolating data for exactly one of its roots.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: Poly<Rational>,
    re: RealRoot,
    im: Option<RealRoot>,
}

impl AlgebraicNumber {
    pub(crate) fn new_real(minpoly: Poly<Rational>, re: RealRoot) -> Self {
        AlgebraicNumber {
            minpoly,
            re,
            im: None,
        }
    }

    pub(crate) fn new_complex(minpoly: Poly<Rational>, re: RealRoot, im: RealRoot) -> Self {
        AlgebraicNumber {
            minpoly,
            re,
            im: Some(im),
        }
    }

    /// Refine until the serialized `(approx, radius)` disk is certified to
    /// contain no other root: radius below a quarter of the Mignotte
    /// separation bound.
    pub fn certify_separation(&self) -> AlgebraicNumber {
        if self.minpoly.deg0() < 2 {
            return self.clone();
        }
        let sep = mignotte_bound(&self.minpoly).expect("degree >= 2");
        self.refine(&(sep / rat_int(4)))
    }

    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber {
            minpoly: Poly::new(vec![-r.clone(), Rational::one()]),
            re: RealRoot::exact(r),
            im: None,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn minpoly(&self) -> &Poly<Rational> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg0()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_none()
    }

    pub fn is_rational(&self) -> Option<Rational> {
        (self.minpoly.deg0() == 1).then(|| -self.minpoly.coeff(0))
    }

    pub(crate) fn re_root(&self) -> &RealRoot {
        &self.re
    }

    pub(crate) fn im_root(&self) -> Option<&RealRoot> {
        self.im.as_ref()
    }

    /// Current isolating box (degenerate in the imaginary direction for
    /// real numbers).
    pub fn isolating_box(&self) -> CBox {
        match &self.im {
            None => CBox::real(self.re.interval()),
            Some(im) => CBox::new(self.re.interval(), im.interval()),
        }
    }

    /// Same number with the isolating region refined to half-diameter at
    /// most `target`; the root identity is unchanged.
    pub fn refine(&self, target: &Rational) -> AlgebraicNumber {
        let mut out = self.clone();
        out.refine_in_place(target);
        out
    }

    pub(crate) fn refine_in_place(&mut self, target: &Rational) {
        let half = target / rat_int(2);
        // half-diameter <= (w_re + w_im)/2, so push both widths below target
        self.re.refine_below(&half);
        if let Some(im) = &mut self.im {
            im.refine_below(&half);
        }
    }

    pub(crate) fn refine_step(&mut self) {
        self.re.refine_step();
        if let Some(im) = &mut self.im {
            im.refine_step();
        }
    }

    /// Rational center of the isolating region.
    pub fn approx(&self) -> (Rational, Rational) {
        let re = self.re.interval().mid();
        let im = self
            .im
            .as_ref()
            .map_or_else(Rational::zero, |r| r.interval().mid());
        (re, im)
    }

    /// Rational upper bound on the distance from [`Self::approx`] to the
    /// root. After [`Self::certify_separation`] the disk of this radius
    /// contains no other root of the minimal polynomial.
    pub fn radius(&self) -> Rational {
        let hd = self.isolating_box().half_diameter();
        if hd.is_zero() {
            // exact rational point: any positive radius isolates
            rat_int(1) / rat_int(1_000_000)
        } else {
            hd
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let refined = self.refine(&Rational::new(BigInt::one(), BigInt::from(10u64).pow(17)));
        let (re, im) = refined.approx();
        (
            crate::num::rational_to_f64(&re),
            crate::num::rational_to_f64(&im),
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.to_f64_pair().0
    }

    /// Exact sign of a real algebraic number; `Zero` iff the minimal
    /// polynomial is `x`.
    pub fn sign_real(&self) -> Result<Sign, AlgnumError> {
        if !self.is_real() {
            return Err(AlgnumError::NonRealInput);
        }
        if let Some(r) = self.is_rational() {
            use crate::num::OrderedField;
            return Ok(r.sign());
        }
        // irreducible minpoly of degree >= 2 never vanishes at 0
        let mut re = self.re.clone();
        Ok(re.sign_value())
    }

    /// Exact total order on real algebraic numbers.
    pub fn compare_real(&self, other: &AlgebraicNumber) -> Result<Ordering, AlgnumError> {
        if !self.is_real() || !other.is_real() {
            return Err(AlgnumError::NonRealInput);
        }
        if self == other {
            return Ok(Ordering::Equal);
        }
        // distinct values: refine until the intervals separate
        let mut a = self.re.clone();
        let mut b = other.re.clone();
        loop {
            if a.hi < b.lo {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo {
                return Ok(Ordering::Greater);
            }
            a.refine_step();
            b.refine_step();
        }
    }

    /// Sign of the imaginary part, straight from the isolation data.
    pub fn imag_sign(&self) -> Sign {
        match &self.im {
            None => Sign::Zero,
            Some(im) => im.clone().sign_value(),
        }
    }

    /// Complex conjugate (same minimal polynomial).
    pub fn conj(&self) -> AlgebraicNumber {
        match &self.im {
            None => self.clone(),
            Some(im) => AlgebraicNumber {
                minpoly: self.minpoly.clone(),
                re: self.re.clone(),
                im: Some(im.negated()),
            },
        }
    }
}

/// Structural equality: identical minimal polynomial plus a decision that
/// both isolating regions surround the same root. Identical regions decide
/// immediately (each region holds exactly one root); otherwise the regions
/// are refined until they separate, or a Sturm count over the hull (real
/// case) / a separation-bound refinement (complex case) certifies sameness.
impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        if self.is_real() != other.is_real() {
            return false;
        }
        if self.minpoly.deg0() == 1 {
            return true; // single root
        }
        // bit-identical regions isolate the same root
        if self.re.interval() == other.re.interval()
            && self.im.as_ref().map(|r| r.interval()) == other.im.as_ref().map(|r| r.interval())
        {
            return true;
        }
        match (&self.im, &other.im) {
            (None, None) => {
                let mut a = self.re.clone();
                let mut b = other.re.clone();
                let chain = isolate::sturm_chain_public(&self.minpoly);
                loop {
                    let (ia, ib) = (a.interval(), b.interval());
                    if !ia.intersects(&ib) {
                        return false;
                    }
                    let lo = if ia.lo < ib.lo { ia.lo } else { ib.lo };
                    let hi = if ia.hi > ib.hi { ia.hi } else { ib.hi };
                    if lo == hi || isolate::sturm_count(&chain, &lo, &hi) == 1 {
                        return true;
                    }
                    a.refine_step();
                    b.refine_step();
                }
            }
            (Some(_), Some(_)) => {
                let sep = mignotte_bound(&self.minpoly).expect("degree >= 2");
                let quarter = sep / rat_int(4);
                let mut a = self.clone();
                let mut b = other.clone();
                loop {
                    if !a.isolating_box().intersects(&b.isolating_box()) {
                        return false;
                    }
                    if a.isolating_box().half_diameter() <= quarter
                        && b.isolating_box().half_diameter() <= quarter
                    {
                        // overlapping regions within a quarter separation
                        // must share their root
                        return true;
                    }
                    a.refine_step();
                    b.refine_step();
                }
            }
            _ => false,
        }
    }
}

impl Eq for AlgebraicNumber {}

/// Positive rational strictly below the Mignotte separation bound
/// `sqrt(6) / (d^((d+1)/2) * H^(d-1))`: any two distinct roots of the
/// polynomial are farther apart than the returned value.
pub fn mignotte_bound(p: &Poly<Rational>) -> Result<Rational, AlgnumError> {
    let d = p.degree().ok_or(AlgnumError::ZeroPolynomial)?;
    if d < 2 {
        return Err(AlgnumError::DegreeTooLow);
    }
    let ints = crate::factor::integer_primitive(p);
    let height = ints
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::one);
    // 2 < sqrt(6), and d^ceil((d+1)/2) >= d^((d+1)/2)
    let exp = (d + 2) / 2; // ceil((d+1)/2)
    let denom = BigInt::from(d).pow(exp as u32) * height.pow((d - 1) as u32);
    Ok(Rational::new(BigInt::from(2), denom))
}

/// Serialization helpers for the `{minpoly, approx, radius}` wire format.
impl AlgebraicNumber {
    pub fn minpoly_strings(&self) -> Vec<String> {
        self.minpoly
            .coeffs()
            .iter()
            .map(crate::num::format_rational)
            .collect()
    }

    /// Decimal expansion of the real part with the given number of digits
    /// (non-real numbers render as `re+im*i`).
    pub fn decimal_string(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let target = Rational::new(BigInt::one(), &scale * BigInt::from(4));
        let refined = self.refine(&target);
        let (re, im) = refined.approx();
        let fmt = |v: &Rational| -> String {
            let scaled = v * Rational::from_integer(scale.clone());
            let rounded = scaled.round().to_integer();
            let neg = rounded.is_negative();
            let mag = rounded.abs();
            let s = mag.to_string();
            let digits = digits as usize;
            let padded = format!("{s:0>width$}", width = digits + 1);
            let (int_part, frac_part) = padded.split_at(padded.len() - digits);
            format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
        };
        if self.is_real() {
            fmt(&re)
        } else {
            let im_s = fmt(&im);
            if im_s.starts_with('-') {
                format!("{}{}i", fmt(&re), im_s)
            } else {
                format!("{}+{}i", fmt(&re), im_s)
            }
        }
    }
}

impl std::fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.is_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{}", self.decimal_string(6))?;
        write!(f, "~")
    }
}

impl num_traits::Zero for AlgebraicNumber {
    fn zero() -> Self {
        AlgebraicNumber::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.is_rational().map_or(false, |r| r.is_zero())
    }
}

impl num_traits::One for AlgebraicNumber {
    fn one() -> Self {
        AlgebraicNumber::from_int(1)
    }
}

impl Ring for AlgebraicNumber {
    fn from_i64(n: i64) -> Self {
        AlgebraicNumber::from_int(n)
    }
}

impl crate::num::Field for AlgebraicNumber {}

impl crate::num::OrderedField for AlgebraicNumber {
    fn sign(&self) -> Sign {
        self.sign_real()
            .expect("ordered-field sign on a non-real algebraic number")
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        self.compare_real(rhs)
            .expect("ordered-field compare on a non-real algebraic number")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_i64;

    #[test]
    fn mignotte_examples() {
        // x^2 - 2: d=2, H=2 -> below sqrt6/(2^1.5 * 2) ~ 0.433
        let p = Poly::new(vec![rat_int(-2), rat_int(0), rat_int(1)]);
        let b = mignotte_bound(&p).unwrap();
        use crate::num::OrderedField;
        assert_eq!(b.sign(), Sign::Positive);
        // b^2 * d^(d+1) * H^(2(d-1)) < 6 certifies b < sqrt6/(d^((d+1)/2) H^(d-1))
        assert!(&b * &b * rat_int(8) * rat_int(4) < rat_int(6));

        // x^2 - x: H=1 -> below sqrt6/2^1.5 ~ 0.866
        let p = Poly::new(vec![rat_int(0), rat_int(-1), rat_int(1)]);
        let b = mignotte_bound(&p).unwrap();
        assert!(b > Rational::zero());
        assert!(&b * &b * rat_int(8) < rat_int(6));

        // x^3 - 2: below sqrt6/36
        let p = Poly::new(vec![rat_int(-2), rat_int(0), rat_int(0), rat_int(1)]);
        let b = mignotte_bound(&p).unwrap();
        assert!(b > Rational::zero());
        assert!(&b * &b * rat_int(81) * rat_int(16) < rat_int(6));
    }

    #[test]
    fn mignotte_rejects_low_degree() {
        let p = Poly::new(vec![rat_int(1), rat_int(1)]);
        assert_eq!(mignotte_bound(&p), Err(AlgnumError::DegreeTooLow));
    }

    #[test]
    fn rational_fast_paths() {
        let a = AlgebraicNumber::from_rational(rat_i64(3, 2));
        assert_eq!(a.is_rational(), Some(rat_i64(3, 2)));
        assert!(a.is_real());
        assert_eq!(a.sign_real().unwrap(), Sign::Positive);
        assert_eq!(a, a.clone());
        assert_eq!(a.conj(), a);
    }

    #[test]
    fn decimal_rendering() {
        let a = AlgebraicNumber::from_rational(rat_i64(1, 8));
        assert_eq!(a.decimal_string(3), "0.125");
        let b = AlgebraicNumber::from_rational(rat_i64(-1, 3));
        assert_eq!(b.decimal_string(3), "-0.333");
    }
}
