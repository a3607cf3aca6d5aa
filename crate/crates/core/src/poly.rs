//! Univariate polynomials over a generic ring, plus the handful of exact
//! algebra routines the rest of the crate leans on: division, gcd,
//! squarefree parts, argument transforms, fraction-free determinants and
//! bivariate resultants.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::num::{ExactDivRing, Field, Rational, Ring};

/// Polynomial with coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero_poly() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree treating the zero polynomial as degree 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate after mapping coefficients into another ring.
    pub fn eval_map<U: Ring>(&self, x: &U, embed: impl Fn(&T) -> U) -> U {
        let mut acc = U::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Poly<T> {
        if self.coeffs.len() <= 1 {
            return Poly::zero_poly();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.clone() * T::from_i64(k as i64));
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `p(x + c)` via repeated Horner steps.
    pub fn shift_arg(&self, c: &T) -> Poly<T> {
        let mut acc = Poly::zero_poly();
        let shift = Poly::new(vec![c.clone(), T::one()]);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Poly::constant(a.clone());
        }
        acc
    }

    /// `p(c * x)`
    pub fn scale_arg(&self, c: &T) -> Poly<T> {
        let mut pw = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pw.clone());
            pw = pw * c.clone();
        }
        Poly::new(out)
    }

    /// `x^deg * p(1/x)`: reverses the coefficient order.
    pub fn reverse(&self) -> Poly<T> {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// `p(x^2)`
    pub fn compose_square(&self) -> Poly<T> {
        let mut out = Vec::with_capacity(self.coeffs.len() * 2);
        for c in &self.coeffs {
            out.push(c.clone());
            out.push(T::zero());
        }
        out.pop();
        Poly::new(out)
    }

    /// `p(-x)`
    pub fn negate_arg(&self) -> Poly<T> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero_poly() || rhs.is_zero_poly() {
            return Poly::zero_poly();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero_poly()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_poly()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(T::from_i64(n))
    }
}

impl<T: Field> ExactDivRing for Poly<T> {
    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero_poly(), "exact_div with nonzero remainder");
        q
    }
}

impl<T: Field> Poly<T> {
    pub fn monic(&self) -> Poly<T> {
        if self.is_zero_poly() {
            return self.clone();
        }
        let lc = self.leading();
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() / lc.clone())
                .collect(),
        )
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divrem(&self, d: &Poly<T>) -> (Poly<T>, Poly<T>) {
        assert!(!d.is_zero_poly(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (Poly::zero_poly(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        let lc = d.leading();
        let mut quot = vec![T::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].clone() / lc.clone();
            quot[k - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].clone() - q.clone() * dc.clone();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly<T>) -> Poly<T> {
        self.divrem(d).1
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly<T>) -> Poly<T> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero_poly() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly<T>) -> (Poly<T>, Poly<T>, Poly<T>) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut s0, mut s1) = (Poly::one(), Poly::zero_poly());
        let (mut t0, mut t1) = (Poly::zero_poly(), Poly::one());
        while !r1.is_zero_poly() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let s = &s0 - &(&q * &s1);
            s0 = s1;
            s1 = s;
            let t = &t0 - &(&q * &t1);
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero_poly() {
            return (r0, s0, t0);
        }
        let lc = r0.leading();
        let inv = lc.inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Largest squarefree divisor: `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Poly<T> {
        if self.is_zero_poly() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// `base^exp mod m`
    pub fn pow_mod(&self, exp: usize, m: &Poly<T>) -> Poly<T> {
        let mut result = Poly::one().rem(m);
        let mut base = self.rem(m);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(m);
            }
            base = (&base * &base).rem(m);
            e >>= 1;
        }
        result
    }

    pub fn pow(&self, exp: usize) -> Poly<T> {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }
}

impl Poly<crate::num::BigInt> {
    /// Exact division over `Z[x]`; panics if the division is not exact.
    fn exact_div_int(&self, d: &Self) -> Self {
        use crate::num::BigInt;
        assert!(!d.is_zero_poly());
        let dd = d.degree().unwrap();
        if self.is_zero_poly() {
            return Poly::zero_poly();
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        assert!(n >= dd, "exact_div_int: degree underflow");
        let lc = d.leading();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(rem[k].clone(), lc.clone());
            debug_assert!(r.is_zero(), "exact_div_int: leading coefficient");
            quot[k - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].clone() - q.clone() * dc.clone();
            }
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "exact_div_int: remainder");
        Poly::new(quot)
    }
}

impl ExactDivRing for Poly<crate::num::BigInt> {
    fn exact_div(&self, d: &Self) -> Self {
        self.exact_div_int(d)
    }
}

/// Fraction-free (Bareiss) determinant over an exact-division ring.
/// Consumes the matrix given as rows; returns the exact determinant.
pub fn det_bareiss<R: ExactDivRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search below row k
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Resultant in `y` of `p(y)` and `q(y)` where the coefficients of `q` live
/// in `Q[x]` (given ascending in `y`). Computed as the Bareiss determinant of
/// the Sylvester matrix over `Z[x]` after clearing denominators; the
/// clearing rescales the resultant by a positive constant, which callers
/// only using its root set never see.
pub fn resultant_y(p: &Poly<Rational>, q: &[Poly<Rational>]) -> Poly<Rational> {
    use crate::num::BigInt;
    let q = {
        let mut v = q.to_vec();
        while v.last().map_or(false, |c| c.is_zero_poly()) {
            v.pop();
        }
        v
    };
    assert!(!p.is_zero_poly() && !q.is_empty(), "resultant of zero");
    let m = p.degree().unwrap();
    let n = q.len() - 1;
    if m == 0 {
        return Poly::constant(p.leading()).pow(n);
    }
    if n == 0 {
        return q[0].pow(m);
    }

    // clear denominators with one global constant per input
    let p_int: Poly<BigInt> = clear_denominators(std::slice::from_ref(p))
        .pop()
        .unwrap();
    let q_int: Vec<Poly<BigInt>> = clear_denominators(&q);

    let size = m + n;
    let mut rows: Vec<Vec<Poly<BigInt>>> = Vec::with_capacity(size);
    // n rows of p's coefficients (constants), m rows of q's
    for shift in 0..n {
        let mut row = vec![Poly::zero_poly(); size];
        for (k, c) in p_int.coeffs().iter().enumerate() {
            // descending order placement
            row[shift + (m - k)] = Poly::constant(c.clone());
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Poly::zero_poly(); size];
        for (k, c) in q_int.iter().enumerate() {
            row[shift + (n - k)] = c.clone();
        }
        rows.push(row);
    }
    let det = det_bareiss(rows);
    det.map(|c| Rational::from_integer(c.clone()))
}

/// Scale a family of rational polynomials by the single lcm of all their
/// denominators, returning integer polynomials.
fn clear_denominators(polys: &[Poly<Rational>]) -> Vec<Poly<crate::num::BigInt>> {
    use crate::num::BigInt;
    let mut lcm = BigInt::one();
    for p in polys {
        for c in p.coeffs() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
    }
    polys
        .iter()
        .map(|p| p.map(|c| c.numer() * (&lcm / c.denom())))
        .collect()
}

/// Positive-primitive image of a rational polynomial: same roots, integer
/// coefficients with content 1 and positive leading coefficient.
pub fn primitive_int(p: &Poly<Rational>) -> Poly<crate::num::BigInt> {
    use crate::num::BigInt;
    use num_traits::Signed;
    if p.is_zero_poly() {
        return Poly::zero_poly();
    }
    let ints = clear_denominators(std::slice::from_ref(p)).pop().unwrap();
    let mut content = BigInt::zero();
    for c in ints.coeffs() {
        content = num_integer::gcd(content, c.clone());
    }
    if ints.leading().is_negative() {
        content = -content;
    }
    ints.map(|c| c / &content)
}

/// Gcd of rational polynomials through a primitive polynomial remainder
/// sequence over the integers, which avoids the coefficient explosion of
/// naive rational Euclid on large inputs. Result is monic.
pub fn rational_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if a.is_zero_poly() {
        return b.monic();
    }
    if b.is_zero_poly() {
        return a.monic();
    }
    let mut x = primitive_int(a);
    let mut y = primitive_int(b);
    if x.deg0() < y.deg0() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero_poly() {
        let r = pseudo_rem_primitive(&x, &y);
        x = y;
        y = r;
    }
    x.map(|c| Rational::from_integer(c.clone())).monic()
}

/// Primitive part of the pseudo-remainder `prem(a, b)` over `Z[x]`.
fn pseudo_rem_primitive(
    a: &Poly<crate::num::BigInt>,
    b: &Poly<crate::num::BigInt>,
) -> Poly<crate::num::BigInt> {
    use crate::num::BigInt;
    use num_traits::Signed;
    let db = b.deg0();
    let mut rem = a.clone();
    let lc = b.leading();
    while !rem.is_zero_poly() && rem.deg0() >= db {
        let k = rem.deg0();
        let factor = rem.leading();
        // rem = lc*rem - factor * x^(k-db) * b
        let scaled = rem.map(|c| c * &lc);
        let shift = Poly::monomial(factor, k - db);
        rem = &scaled - &(&shift * b);
        debug_assert!(rem.is_zero_poly() || rem.deg0() < k);
    }
    if rem.is_zero_poly() {
        return rem;
    }
    let mut content = BigInt::zero();
    for c in rem.coeffs() {
        content = num_integer::gcd(content, c.clone());
    }
    if rem.leading().is_negative() {
        content = -content;
    }
    rem.map(|c| c / &content)
}

/// Squarefree part of a rational polynomial, monic, via the primitive-PRS
/// gcd.
pub fn rational_squarefree_part(p: &Poly<Rational>) -> Poly<Rational> {
    if p.is_zero_poly() {
        return p.clone();
    }
    let g = rational_gcd(p, &p.derivative());
    if g.deg0() == 0 {
        return p.monic();
    }
    p.divrem(&g).0.monic()
}

/// Resultant in `y` of `p(y)` and `q(x - y)`: vanishes at sums
/// `alpha + beta` of roots of `p` and `q`.
pub fn sum_poly(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    // q(x - y) as a polynomial in y with Q[x] coefficients
    let n = q.deg0();
    let mut coeffs_y: Vec<Poly<Rational>> = vec![Poly::zero_poly(); n + 1];
    // expand q(x - y) = sum_k q_k (x - y)^k
    let mut binom: Vec<Poly<Rational>> = vec![Poly::one()]; // (x - y)^0 in y
    for k in 0..=n {
        let qk = q.coeff(k);
        if !qk.is_zero() {
            for (j, c) in binom.iter().enumerate() {
                coeffs_y[j] = &coeffs_y[j] + &c.scale(&qk);
            }
        }
        if k < n {
            // multiply binom by (x - y): in y-representation, coefficient j of
            // the product is x*b_j - b_{j-1}
            let mut next: Vec<Poly<Rational>> = vec![Poly::zero_poly(); binom.len() + 1];
            for (j, c) in binom.iter().enumerate() {
                next[j] = &next[j] + &(&Poly::x() * c);
                next[j + 1] = &next[j + 1] - c;
            }
            binom = next;
        }
    }
    resultant_y(p, &coeffs_y)
}

/// Resultant in `y` of `p(y)` and `q(y - x)`: vanishes at differences
/// `alpha - beta` with `p(alpha) = 0`, `q(beta) = 0`... see callers.
pub fn diff_poly(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    sum_poly(p, &q.negate_arg())
}

/// Resultant in `y` of `p(y)` and `y^n q(x/y)`: vanishes at products
/// `alpha * beta`. Requires `q(0) != 0` (guaranteed for irreducible `q != x`).
pub fn prod_poly(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    let n = q.deg0();
    // y^n q(x/y) = sum_k q_k x^k y^{n-k}: as poly in y, coefficient of y^j is
    // q_{n-j} x^{n-j}
    let mut coeffs_y: Vec<Poly<Rational>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let k = n - j;
        coeffs_y.push(Poly::monomial(q.coeff(k), k));
    }
    resultant_y(p, &coeffs_y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_i64, rat_int};

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn mul_and_divrem_round_trip() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-4, 1]);
        let prod = &a * &b;
        let (q, r) = prod.divrem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero_poly());
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = &p(&[-1, 1]) * &p(&[1, 1]); // (x-1)(x+1)
        let b = &p(&[-1, 1]) * &p(&[2, 1]); // (x-1)(x+2)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let a = p(&[-2, 0, 1]); // x^2 - 2
        let b = p(&[1, 1]); // x + 1
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(&(&s * &a) + &(&t * &b), Poly::one());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let a = &p(&[-1, 1]) * &(&p(&[-1, 1]) * &p(&[3, 1]));
        assert_eq!(a.squarefree_part(), &p(&[-1, 1]) * &p(&[3, 1]));
    }

    #[test]
    fn shift_and_scale_arg() {
        let a = p(&[0, 0, 1]); // x^2
        assert_eq!(a.shift_arg(&rat_int(1)), p(&[1, 2, 1]));
        assert_eq!(a.scale_arg(&rat_int(3)), p(&[0, 0, 9]));
        assert_eq!(p(&[1, 2, 3]).negate_arg(), p(&[1, -2, 3]));
    }

    #[test]
    fn bareiss_determinant() {
        let m: Vec<Vec<Rational>> = vec![
            vec![rat_int(2), rat_int(1), rat_int(0)],
            vec![rat_int(1), rat_int(3), rat_int(1)],
            vec![rat_int(0), rat_int(1), rat_int(4)],
        ];
        assert_eq!(det_bareiss(m), rat_int(18)); // 2(12-1) - 1(4-0) = 18... 2*11-4=18
    }

    #[test]
    fn sum_poly_sqrt2_plus_sqrt3() {
        // minimal polynomial of sqrt2 + sqrt3 divides this resultant
        let a = p(&[-2, 0, 1]);
        let b = p(&[-3, 0, 1]);
        let s = sum_poly(&a, &b);
        // x^4 - 10x^2 + 1 must divide s
        let target = p(&[1, 0, -10, 0, 1]);
        let (_, r) = s.divrem(&target);
        assert!(r.is_zero_poly(), "sum_poly should vanish on sqrt2+sqrt3");
    }

    #[test]
    fn prod_poly_sqrt2_times_sqrt3() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[-3, 0, 1]);
        let s = prod_poly(&a, &b);
        // sqrt6 has minimal polynomial x^2 - 6
        let target = p(&[-6, 0, 1]);
        let (_, r) = s.divrem(&target);
        assert!(r.is_zero_poly());
    }

    #[test]
    fn eval_rational() {
        let a = p(&[1, -3, 2]); // 2x^2 - 3x + 1
        assert_eq!(a.eval(&rat_i64(1, 2)), rat_int(0));
        assert_eq!(a.eval(&rat_int(2)), rat_int(3));
    }
}
