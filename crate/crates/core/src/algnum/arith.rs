//! Exact field arithmetic on canonical algebraic numbers.
//!
//! Rational operands take direct minimal-polynomial transforms (shift,
//! scale, reversal), which preserve irreducibility and cost nothing. Mixed
//! algebraic operands go through resultants: the result's value is trapped
//! in a shrinking interval box and matched against the isolated roots of the
//! resultant's irreducible factors, so every produced number is canonical
//! immediately.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::isolate::{isolate_irreducible, isolate_real_irreducible};
use super::{AlgebraicNumber, AlgnumError};
use crate::interval::CBox;
use crate::num::Rational;
use crate::poly::{prod_poly, resultant_y, sum_poly, Poly};

impl AlgebraicNumber {
    pub fn add_alg(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        match (self.is_rational(), other.is_rational()) {
            (Some(a), Some(b)) => AlgebraicNumber::from_rational(a + b),
            (Some(a), None) => other.shift_by(&a),
            (None, Some(b)) => self.shift_by(&b),
            (None, None) => {
                let m = sum_poly(self.minpoly(), other.minpoly());
                let mut a = self.clone();
                let mut b = other.clone();
                resolve(m, move || {
                    a.refine_step();
                    b.refine_step();
                    a.isolating_box().add(&b.isolating_box())
                })
            }
        }
    }

    pub fn sub_alg(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        self.add_alg(&other.neg_alg())
    }

    pub fn mul_alg(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        if self.is_zero() || other.is_zero() {
            return AlgebraicNumber::from_int(0);
        }
        match (self.is_rational(), other.is_rational()) {
            (Some(a), Some(b)) => AlgebraicNumber::from_rational(a * b),
            (Some(a), None) => other.scale_by(&a),
            (None, Some(b)) => self.scale_by(&b),
            (None, None) => {
                let m = prod_poly(self.minpoly(), other.minpoly());
                let mut a = self.clone();
                let mut b = other.clone();
                resolve(m, move || {
                    a.refine_step();
                    b.refine_step();
                    a.isolating_box().mul(&b.isolating_box())
                })
            }
        }
    }

    pub fn neg_alg(&self) -> AlgebraicNumber {
        if let Some(r) = self.is_rational() {
            return AlgebraicNumber::from_rational(-r);
        }
        let mut minpoly = self.minpoly.negate_arg();
        if !minpoly.leading().is_one() {
            minpoly = minpoly.monic();
        }
        AlgebraicNumber {
            minpoly,
            re: self.re.negated(),
            im: self.im.clone(),
        }
    }

    pub fn try_inv(&self) -> Result<AlgebraicNumber, AlgnumError> {
        if let Some(r) = self.is_rational() {
            if r.is_zero() {
                return Err(AlgnumError::DivisionByZero);
            }
            return Ok(AlgebraicNumber::from_rational(Rational::one() / r));
        }
        // roots of the reversed polynomial are the reciprocals; the reversal
        // of an irreducible polynomial (other than x) stays irreducible
        let minpoly = self.minpoly.reverse().monic();
        let mut a = self.clone();
        // the value is nonzero, so its box eventually excludes zero
        while a
            .isolating_box()
            .re
            .mul(&a.isolating_box().re)
            .add(&a.isolating_box().im.mul(&a.isolating_box().im))
            .contains_zero()
        {
            a.refine_step();
        }
        Ok(select_root(&minpoly, move || {
            a.refine_step();
            a.isolating_box().recip()
        }))
    }

    pub fn try_div(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber, AlgnumError> {
        if other.is_zero() {
            return Err(AlgnumError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(AlgebraicNumber::from_int(0));
        }
        if let Some(b) = other.is_rational() {
            return Ok(self.scale_by(&(Rational::one() / b)));
        }
        Ok(self.mul_alg(&other.try_inv()?))
    }

    /// `self + r` by shifting the minimal polynomial.
    fn shift_by(&self, r: &Rational) -> AlgebraicNumber {
        if r.is_zero() {
            return self.clone();
        }
        AlgebraicNumber {
            minpoly: self.minpoly.shift_arg(&-r.clone()),
            re: self.re.shifted(r),
            im: self.im.clone(),
        }
    }

    /// `self * r` for nonzero rational `r` by rescaling the argument.
    fn scale_by(&self, r: &Rational) -> AlgebraicNumber {
        if r.is_one() {
            return self.clone();
        }
        let inv = Rational::one() / r;
        let minpoly = self.minpoly.scale_arg(&inv).monic();
        AlgebraicNumber {
            minpoly,
            re: self.re.scaled(r),
            im: self.im.as_ref().map(|im| im.scaled(r)),
        }
    }

    /// Evaluate a rational polynomial at this number, producing a canonical
    /// algebraic number.
    pub fn eval_poly(&self, g: &Poly<Rational>) -> AlgebraicNumber {
        if let Some(r) = self.is_rational() {
            return AlgebraicNumber::from_rational(g.eval(&r));
        }
        let g = g.rem(&self.minpoly);
        if g.is_zero_poly() {
            return AlgebraicNumber::from_int(0);
        }
        if g.deg0() == 0 {
            return AlgebraicNumber::from_rational(g.coeff(0));
        }
        if g.deg0() == 1 {
            // a + b*x: pure shift/scale
            return self.scale_by(&g.coeff(1)).shift_by(&g.coeff(0));
        }
        // Res_z(minpoly(z), x - g(z)) vanishes at g(root)
        let mut coeffs_y: Vec<Poly<Rational>> = Vec::with_capacity(g.deg0() + 1);
        coeffs_y.push(Poly::new(vec![-g.coeff(0), Rational::one()]));
        for k in 1..=g.deg0() {
            coeffs_y.push(Poly::constant(-g.coeff(k)));
        }
        let m = resultant_y(&self.minpoly, &coeffs_y);
        let mut a = self.clone();
        let g2 = g.clone();
        resolve(m, move || {
            a.refine_step();
            crate::interval::eval_cbox(&g2, &a.isolating_box())
        })
    }

    /// Real part as a real algebraic number.
    pub fn real_part(&self) -> AlgebraicNumber {
        if self.is_real() {
            return self.clone();
        }
        if let Some(re) = self.re.as_exact() {
            return AlgebraicNumber::from_rational(re.clone());
        }
        // (z + conj z)/2 is a root of S(2x) with S the root-sum resultant
        let carrier = sum_poly(&self.minpoly, &self.minpoly).scale_arg(&crate::num::rat_int(2));
        let mut re = self.re.clone();
        let out = resolve(carrier, move || {
            re.refine_step();
            CBox::real(re.interval())
        });
        debug_assert!(out.is_real());
        out
    }

    /// Imaginary part as a real algebraic number (zero for real inputs).
    pub fn imag_part(&self) -> AlgebraicNumber {
        let Some(im) = &self.im else {
            return AlgebraicNumber::from_int(0);
        };
        if let Some(v) = im.as_exact() {
            return AlgebraicNumber::from_rational(v.clone());
        }
        // carrier from the root-difference construction: W(y^2) vanishes at
        // +-Im(z) for conjugate differences z - conj z = 2i Im(z)
        let dpoly = {
            let d = crate::poly::diff_poly(&self.minpoly, &self.minpoly);
            let coeffs = d.coeffs();
            let k = coeffs
                .iter()
                .position(|c| !c.is_zero())
                .unwrap_or(coeffs.len());
            Poly::new(coeffs[k..].to_vec())
        };
        let wpoly = resultant_y(
            &dpoly,
            &[
                Poly::new(vec![Rational::zero(), crate::num::rat_int(4)]),
                Poly::zero_poly(),
                Poly::one(),
            ],
        );
        let carrier = wpoly.compose_square();
        let mut imr = im.clone();
        let out = resolve(carrier, move || {
            imr.refine_step();
            CBox::real(imr.interval())
        });
        debug_assert!(out.is_real());
        out
    }
}

/// Canonicalize the root of `carrier` designated by a shrinking value box:
/// factor, isolate the roots of every factor, and refine until exactly one
/// isolated root remains consistent with the box. A degenerate-real first
/// box proves the value real, in which case complex isolation of the
/// carrier is skipped entirely.
fn resolve(carrier: Poly<Rational>, mut boxfn: impl FnMut() -> CBox) -> AlgebraicNumber {
    assert!(!carrier.is_zero_poly(), "resolve on zero carrier");
    let first = boxfn();
    let real_value = first.im.lo.is_zero() && first.im.hi.is_zero();
    let factors = crate::factor::factor_poly(&carrier).expect("nonzero carrier");
    let mut candidates: Vec<AlgebraicNumber> = Vec::new();
    for (f, _) in &factors {
        if real_value {
            candidates.extend(isolate_real_irreducible(f));
        } else {
            candidates.extend(isolate_irreducible(f));
        }
    }
    select_among(candidates, first, boxfn)
}

/// Like [`resolve`] but for a carrier already known to be irreducible.
fn select_root(minpoly: &Poly<Rational>, mut boxfn: impl FnMut() -> CBox) -> AlgebraicNumber {
    let first = boxfn();
    let real_value = first.im.lo.is_zero() && first.im.hi.is_zero();
    let candidates = if real_value {
        isolate_real_irreducible(minpoly)
    } else {
        isolate_irreducible(minpoly)
    };
    select_among(candidates, first, boxfn)
}

fn select_among(
    mut candidates: Vec<AlgebraicNumber>,
    first: CBox,
    mut boxfn: impl FnMut() -> CBox,
) -> AlgebraicNumber {
    assert!(!candidates.is_empty(), "no candidate roots");
    if candidates.len() == 1 {
        return candidates.pop().unwrap();
    }
    let mut vbox = first;
    let mut guard = 0;
    loop {
        let mut hits = candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| c.isolating_box().intersects(&vbox));
        if let Some((idx, _)) = hits.next() {
            if hits.next().is_none() {
                return candidates.swap_remove(idx);
            }
        }
        for c in candidates.iter_mut() {
            c.refine_step();
        }
        vbox = boxfn();
        guard += 1;
        assert!(guard < 500, "root selection failed to converge");
    }
}

impl Add for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, rhs: Self) -> Self {
        self.add_alg(&rhs)
    }
}

impl Sub for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, rhs: Self) -> Self {
        self.sub_alg(&rhs)
    }
}

impl Mul for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, rhs: Self) -> Self {
        self.mul_alg(&rhs)
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> Self {
        self.neg_alg()
    }
}

/// Panics on division by zero; use [`AlgebraicNumber::try_div`] where the
/// divisor is not known nonzero.
impl Div for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn div(self, rhs: Self) -> Self {
        self.try_div(&rhs).expect("algebraic division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::isolate_roots;
    use crate::num::{rat_i64, rat_int, Sign};

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    fn sqrt(n: i64) -> AlgebraicNumber {
        isolate_roots(&p(&[-n, 0, 1]))
            .unwrap()
            .into_iter()
            .find(|r| r.sign_real() == Ok(Sign::Positive))
            .unwrap()
    }

    #[test]
    fn sqrt2_plus_sqrt2_is_2sqrt2() {
        let s = sqrt(2);
        let sum = s.add_alg(&s);
        assert_eq!(sum.minpoly(), &p(&[-8, 0, 1]));
        assert!((sum.to_f64() - 2.828427).abs() < 1e-5);
    }

    #[test]
    fn sqrt2_times_sqrt2_is_2() {
        let s = sqrt(2);
        let prod = s.mul_alg(&s);
        assert_eq!(prod.is_rational(), Some(rat_int(2)));
    }

    #[test]
    fn sqrt2_plus_sqrt3_has_quartic_minpoly() {
        let sum = sqrt(2).add_alg(&sqrt(3));
        assert_eq!(sum.minpoly(), &p(&[1, 0, -10, 0, 1]));
        assert!((sum.to_f64() - 3.1462643).abs() < 1e-6);
    }

    #[test]
    fn division_round_trips() {
        let a = sqrt(2);
        let b = sqrt(3);
        let q = a.try_div(&b).unwrap();
        let back = q.mul_alg(&b);
        assert_eq!(back, a);
        // sqrt(2/3) = sqrt(6)/3
        assert!((q.to_f64() - (2f64 / 3.0).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn division_by_zero_rejected() {
        let z = AlgebraicNumber::from_int(0);
        assert_eq!(sqrt(2).try_div(&z), Err(AlgnumError::DivisionByZero));
        assert_eq!(z.try_inv(), Err(AlgnumError::DivisionByZero));
    }

    #[test]
    fn field_laws_on_samples() {
        let samples = [
            AlgebraicNumber::from_rational(rat_i64(3, 7)),
            sqrt(2),
            sqrt(5).neg_alg(),
            sqrt(2).add_alg(&AlgebraicNumber::from_int(1)),
        ];
        for a in &samples {
            for b in &samples {
                // a + (b - b) == a
                assert_eq!(a.add_alg(&b.sub_alg(b)), *a);
                if !b.is_zero() {
                    // a * (b / b) == a
                    assert_eq!(a.mul_alg(&b.try_div(b).unwrap()), *a);
                }
            }
        }
    }

    #[test]
    fn rational_shift_and_scale_fast_paths() {
        let s = sqrt(2);
        let shifted = s.add_alg(&AlgebraicNumber::from_rational(rat_i64(1, 2)));
        assert!((shifted.to_f64() - 1.914213562).abs() < 1e-8);
        assert_eq!(shifted.degree(), 2);
        let scaled = s.mul_alg(&AlgebraicNumber::from_rational(rat_i64(-3, 2)));
        assert!((scaled.to_f64() + 2.121320343).abs() < 1e-8);
        assert_eq!(scaled.degree(), 2);
        assert_eq!(scaled.sign_real().unwrap(), Sign::Negative);
    }

    #[test]
    fn compare_real_examples() {
        use std::cmp::Ordering;
        let s2 = sqrt(2);
        let s3 = sqrt(3);
        let three_halves = AlgebraicNumber::from_rational(rat_i64(3, 2));
        assert_eq!(s2.compare_real(&three_halves), Ok(Ordering::Less));
        assert_eq!(s2.compare_real(&s2), Ok(Ordering::Equal));
        assert_eq!(s3.compare_real(&s2), Ok(Ordering::Greater));
    }

    #[test]
    fn compare_consistent_with_sign_of_difference() {
        use std::cmp::Ordering;
        let vals = [
            AlgebraicNumber::from_int(0),
            AlgebraicNumber::from_rational(rat_i64(7, 5)),
            sqrt(2),
            sqrt(3),
        ];
        for a in &vals {
            for b in &vals {
                let cmp = a.compare_real(b).unwrap();
                let diff_sign = a.sub_alg(b).sign_real().unwrap();
                match cmp {
                    Ordering::Less => assert_eq!(diff_sign, Sign::Negative),
                    Ordering::Equal => assert_eq!(diff_sign, Sign::Zero),
                    Ordering::Greater => assert_eq!(diff_sign, Sign::Positive),
                }
            }
        }
    }

    #[test]
    fn complex_real_and_imag_parts() {
        // roots of x^2 + x + 1: -1/2 +- sqrt(3)/2 i
        let roots = isolate_roots(&p(&[1, 1, 1])).unwrap();
        let z = roots
            .iter()
            .find(|r| r.to_f64_pair().1 > 0.0)
            .unwrap()
            .clone();
        let re = z.real_part();
        assert_eq!(re.is_rational(), Some(rat_i64(-1, 2)));
        let im = z.imag_part();
        assert!(im.is_real());
        assert!((im.to_f64() - 0.8660254).abs() < 1e-6);
        // Im is sqrt(3)/2: minpoly 4x^2 - 3 normalized monic x^2 - 3/4
        assert_eq!(im.minpoly(), &Poly::new(vec![rat_i64(-3, 4), rat_int(0), rat_int(1)]));
        // conjugate has negated imaginary part
        let zc = z.conj();
        assert_eq!(zc.imag_part(), im.neg_alg());
        assert_eq!(zc.real_part(), re);
    }

    #[test]
    fn eval_poly_at_algebraic() {
        let s = sqrt(2);
        // g(x) = x^2 + x + 1 at sqrt2 = 3 + sqrt2
        let v = s.eval_poly(&p(&[1, 1, 1]));
        assert!((v.to_f64() - (3.0 + 1.4142135624)).abs() < 1e-8);
        assert_eq!(v.degree(), 2);
        // annihilation: minpoly evaluated at the number is zero
        let z = s.eval_poly(&p(&[-2, 0, 1]));
        assert!(z.is_zero());
    }

    #[test]
    fn golden_ratio_arithmetic() {
        // phi root of x^2 - x - 1; phi^2 = phi + 1
        let phi = isolate_roots(&p(&[-1, -1, 1]))
            .unwrap()
            .into_iter()
            .find(|r| r.sign_real() == Ok(Sign::Positive))
            .unwrap();
        let sq = phi.mul_alg(&phi);
        let plus_one = phi.add_alg(&AlgebraicNumber::from_int(1));
        assert_eq!(sq, plus_one);
    }
}
