//! Root isolation with exact rational predicates: Sturm sequences for real
//! roots, resultant-built carrier polynomials plus box-exclusion counting
//! for complex conjugate pairs.

use num_traits::{One, Signed, Zero};

use super::{AlgebraicNumber, AlgnumError, RealRoot};
use crate::interval::{eval_cbox, CBox};
use crate::num::{rat_int, OrderedField, Rational, Sign};
use crate::poly::{diff_poly, resultant_y, sum_poly, Poly};

/// One canonical algebraic number per distinct complex root of the input
/// polynomial. Real roots come first, ascending; conjugate pairs follow in
/// factor order (factors sorted by degree then coefficients), the `+i`
/// member before its conjugate.
pub fn isolate_roots(p: &Poly<Rational>) -> Result<Vec<AlgebraicNumber>, AlgnumError> {
    if p.is_zero_poly() {
        return Err(AlgnumError::ZeroPolynomial);
    }
    let factors = crate::factor::factor_poly(p).map_err(|_| AlgnumError::ZeroPolynomial)?;
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for (f, _mult) in factors {
        for root in isolate_irreducible(&f) {
            if root.is_real() {
                real.push(root);
            } else {
                complex.push(root);
            }
        }
    }
    // distinct real values, so exact comparison always terminates
    real.sort_by(|a, b| a.compare_real(b).expect("real roots"));
    real.extend(complex);
    Ok(real)
}

/// Only the real roots of a monic irreducible rational polynomial
/// (ascending), skipping all complex-pair machinery.
pub(crate) fn isolate_real_irreducible(f: &Poly<Rational>) -> Vec<AlgebraicNumber> {
    let n = f.deg0();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![AlgebraicNumber::from_rational(-f.coeff(0))];
    }
    sturm_isolate(f)
        .into_iter()
        .map(|r| AlgebraicNumber::new_real(f.clone(), r))
        .collect()
}

pub(crate) fn sturm_chain_public(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    sturm_chain(p)
}

/// Distinct real roots of a squarefree polynomial in `(lo, hi]`; endpoints
/// must not be roots.
pub(crate) fn sturm_count(chain: &[Poly<Rational>], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

/// All roots of a monic irreducible rational polynomial.
pub(crate) fn isolate_irreducible(f: &Poly<Rational>) -> Vec<AlgebraicNumber> {
    let n = f.deg0();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![AlgebraicNumber::from_rational(-f.coeff(0))];
    }
    let real_roots = sturm_isolate(f);
    let pair_count = (n - real_roots.len()) / 2;
    let mut out: Vec<AlgebraicNumber> = real_roots
        .into_iter()
        .map(|r| AlgebraicNumber::new_real(f.clone(), r))
        .collect();
    if pair_count == 0 {
        return out;
    }
    if n == 2 {
        // x^2 + bx + c with negative discriminant: exact real part -b/2,
        // imaginary part sqrt(c - b^2/4)
        let b = f.coeff(1);
        let c = f.coeff(0);
        let re = -&b / rat_int(2);
        let im_sq = &c - &(&b * &b / rat_int(4));
        debug_assert!(im_sq.sign() == Sign::Positive);
        let im_poly = Poly::new(vec![-im_sq, Rational::zero(), Rational::one()]);
        let im = positive_roots(&im_poly)
            .into_iter()
            .next()
            .expect("positive imaginary root");
        out.push(AlgebraicNumber::new_complex(
            f.clone(),
            RealRoot::exact(re.clone()),
            im.clone(),
        ));
        out.push(AlgebraicNumber::new_complex(
            f.clone(),
            RealRoot::exact(re),
            im.negated(),
        ));
        return out;
    }

    // candidate real parts: real roots of the squarefree part of S(2x),
    // S = Res_y(f(y), f(2x - y)) vanishing on all (z_i + z_j)/2
    let s2 = sum_poly(f, f);
    let apoly = crate::poly::rational_squarefree_part(&s2.scale_arg(&rat_int(2)));
    let re_cands = sturm_isolate(&apoly);

    // candidate imaginary parts: beta with beta^2 = -(z_i - z_j)^2/4 over
    // the nonzero root differences. The stripped difference polynomial is
    // even (its roots are a symmetric multiset), so the squared-difference
    // polynomial reads off its even coefficients directly.
    let dpoly = strip_zero_roots(&diff_poly(f, f));
    let c_even = even_part(&dpoly);
    let wpoly = c_even.scale_arg(&rat_int(-4));
    let im_carrier = crate::poly::rational_squarefree_part(&wpoly).compose_square();
    let im_cands = positive_roots(&im_carrier);

    // prune candidate pairs by exact box exclusion until the count matches
    let mut res: Vec<RealRoot> = re_cands;
    let mut ims: Vec<RealRoot> = im_cands;
    let mut active: Vec<(usize, usize)> = (0..res.len())
        .flat_map(|i| (0..ims.len()).map(move |j| (i, j)))
        .collect();
    let mut guard = 0;
    loop {
        active.retain(|&(i, j)| {
            let bx = CBox::new(res[i].interval(), ims[j].interval());
            eval_cbox(f, &bx).contains_zero()
        });
        assert!(
            active.len() >= pair_count,
            "isolation lost a conjugate pair of {f:?}"
        );
        if active.len() == pair_count {
            break;
        }
        for r in res.iter_mut() {
            r.refine_step();
            r.refine_step();
        }
        for r in ims.iter_mut() {
            r.refine_step();
            r.refine_step();
        }
        guard += 1;
        assert!(guard < 500, "complex isolation failed to converge for {f:?}");
    }
    for (i, j) in active {
        out.push(AlgebraicNumber::new_complex(
            f.clone(),
            res[i].clone(),
            ims[j].clone(),
        ));
        out.push(AlgebraicNumber::new_complex(
            f.clone(),
            res[i].clone(),
            ims[j].negated(),
        ));
    }
    out
}

/// `C` with `C(x^2) = p(x)` for an even polynomial.
fn even_part(p: &Poly<Rational>) -> Poly<Rational> {
    let coeffs = p.coeffs();
    debug_assert!(
        coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero()),
        "even_part of a non-even polynomial"
    );
    Poly::new(coeffs.iter().step_by(2).cloned().collect())
}

/// Divide out the factor `x^k`.
fn strip_zero_roots(p: &Poly<Rational>) -> Poly<Rational> {
    let coeffs = p.coeffs();
    let k = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(coeffs.len());
    Poly::new(coeffs[k..].to_vec())
}

/// Positive real roots of a squarefree polynomial, ascending.
fn positive_roots(p: &Poly<Rational>) -> Vec<RealRoot> {
    sturm_isolate(p)
        .into_iter()
        .filter(|r| {
            let mut r = r.clone();
            r.sign_value() == Sign::Positive
        })
        .collect()
}

/// Sturm chain of a squarefree polynomial. Elements are normalized to
/// primitive integer coefficients by positive constants, which preserves
/// all evaluation signs while keeping coefficient growth tame.
fn sturm_chain(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let p0 = crate::poly::primitive_int(p);
    let p1 = crate::poly::primitive_int(&p.derivative());
    let mut chain_int = vec![p0, p1];
    loop {
        let n = chain_int.len();
        if chain_int[n - 1].is_zero_poly() {
            chain_int.pop();
            break;
        }
        let r = sturm_rem_neg(&chain_int[n - 2], &chain_int[n - 1]);
        if r.is_zero_poly() {
            break;
        }
        chain_int.push(r);
    }
    chain_int
        .into_iter()
        .map(|q| q.map(|c| Rational::from_integer(c.clone())))
        .collect()
}

/// `-rem(a, b)` scaled by a positive constant and made primitive.
fn sturm_rem_neg(
    a: &Poly<crate::num::BigInt>,
    b: &Poly<crate::num::BigInt>,
) -> Poly<crate::num::BigInt> {
    use crate::num::BigInt;
    use num_traits::Signed;
    let db = b.deg0();
    let lc = b.leading();
    let mut rem = a.clone();
    let mut steps = 0usize;
    while !rem.is_zero_poly() && rem.deg0() >= db {
        let k = rem.deg0();
        let factor = rem.leading();
        rem = &rem.map(|c| c * &lc) - &(&Poly::monomial(factor, k - db) * b);
        steps += 1;
        if rem.is_zero_poly() {
            break;
        }
        debug_assert!(rem.deg0() < k || rem.is_zero_poly());
    }
    if rem.is_zero_poly() {
        return rem;
    }
    // undo any negative sign introduced by lc^steps, then negate for Sturm
    let mut negate = lc.is_negative() && steps % 2 == 1;
    negate = !negate;
    let mut content = BigInt::zero();
    for c in rem.coeffs() {
        content = num_integer::gcd(content, c.clone());
    }
    let out = rem.map(|c| c / &content);
    if negate {
        -&out
    } else {
        out
    }
}

fn sign_variations(chain: &[Poly<Rational>], x: &Rational) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for q in chain {
        let s = q.eval(x).sign();
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Strict upper bound on the magnitude of all roots (Cauchy bound
/// `1 + max |a_k/a_n|`), rounded up to a power of two so that all bisection
/// endpoints stay small dyadic rationals.
fn root_bound(p: &Poly<Rational>) -> Rational {
    let lc = p.leading();
    let mut max = Rational::zero();
    for c in p.coeffs() {
        let r = (c / &lc).abs();
        if r > max {
            max = r;
        }
    }
    let bound = Rational::one() + max;
    // smallest power of two strictly above the bound
    let ceil = bound.ceil().to_integer();
    let bits = ceil.bits();
    Rational::from_integer(crate::num::BigInt::from(1) << (bits + 1))
}

/// Isolate every real root of a squarefree rational polynomial into
/// pairwise-disjoint intervals with dyadic rational endpoints, ascending
/// order. Descartes / Vincent-Collins-Akritas bisection: sign-variation
/// counts of integer Taylor transforms, no remainder sequences.
pub(crate) fn sturm_isolate(p: &Poly<Rational>) -> Vec<RealRoot> {
    use crate::num::BigInt;
    assert!(!p.is_zero_poly());
    if p.deg0() == 0 {
        return vec![];
    }
    let mut work = crate::poly::primitive_int(p);
    let mut out: Vec<RealRoot> = Vec::new();

    // exact zero root
    if work.coeff(0).is_zero() {
        out.push(RealRoot::exact(Rational::zero()));
        let coeffs = work.coeffs().to_vec();
        let k = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        work = Poly::new(coeffs[k..].to_vec());
    }

    loop {
        if work.deg0() == 0 {
            break;
        }
        if work.deg0() == 1 {
            let root = -Rational::new(work.coeff(0), work.coeff(1));
            out.push(RealRoot::exact(root));
            break;
        }
        let bound = root_bound(&work.map(|c| Rational::from_integer(c.clone())));
        // positive roots of f(bound * x) on (0,1), negative via x -> -x;
        // intervals go into a local buffer so an exact bisection hit can
        // discard them, deflate, and restart cleanly
        let mut local: Vec<RealRoot> = Vec::new();
        let mut exact_hit: Option<Rational> = None;
        for negative in [false, true] {
            let mut g: Vec<BigInt> = work.coeffs().to_vec();
            if negative {
                for (k, c) in g.iter_mut().enumerate() {
                    if k % 2 == 1 {
                        *c = -c.clone();
                    }
                }
            }
            // scale argument by the power-of-two bound
            let bnum = bound.numer().clone();
            let mut pw = BigInt::from(1);
            for c in g.iter_mut() {
                *c *= &pw;
                pw *= &bnum;
            }
            reduce_content(&mut g);
            if let Some(hit) =
                descartes_01(&g, &mut local, &bound, negative, p_for_interval(&work))
            {
                exact_hit = Some(if negative { -hit } else { hit });
                break;
            }
        }
        match exact_hit {
            None => {
                out.extend(local);
                break;
            }
            Some(r) => {
                // deflate the exact rational root and restart
                out.push(RealRoot::exact(r.clone()));
                let rq = work.map(|c| Rational::from_integer(c.clone()));
                let lin = Poly::new(vec![-r, Rational::one()]);
                let (q, rem) = rq.divrem(&lin);
                debug_assert!(rem.is_zero_poly());
                work = crate::poly::primitive_int(&q);
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

fn p_for_interval(work: &Poly<crate::num::BigInt>) -> Poly<Rational> {
    work.map(|c| Rational::from_integer(c.clone()))
}

fn reduce_content(g: &mut Vec<crate::num::BigInt>) {
    use crate::num::BigInt;
    let mut content = BigInt::zero();
    for c in g.iter() {
        content = num_integer::gcd(content, c.clone());
    }
    if content > BigInt::from(1) {
        for c in g.iter_mut() {
            *c = &*c / &content;
        }
    }
}

/// Descartes bisection on the unit interval: `g` holds the image of the
/// (possibly reflected) polynomial on `(0,1)`; emitted roots are mapped back
/// through `bound` and the reflection. Returns an exact rational root if a
/// bisection point hits one (the caller deflates and restarts).
fn descartes_01(
    g: &[crate::num::BigInt],
    out: &mut Vec<RealRoot>,
    bound: &Rational,
    negative: bool,
    carrier: Poly<Rational>,
) -> Option<Rational> {
    use crate::num::BigInt;
    let n = g.len() - 1;
    // stack entries: (coeffs on (0,1) window, window offset numer, depth)
    let mut stack: Vec<(Vec<BigInt>, BigInt, u32)> = vec![(g.to_vec(), BigInt::zero(), 0)];
    while let Some((f, offset, depth)) = stack.pop() {
        let v = variations_01(&f);
        if v == 0 {
            continue;
        }
        if v == 1 {
            // exactly one root in the open window
            let denom = BigInt::from(1) << depth;
            let lo_frac = Rational::new(offset.clone(), denom.clone());
            let hi_frac = Rational::new(&offset + BigInt::from(1), denom);
            let (mut lo, mut hi) = (lo_frac * bound, hi_frac * bound);
            if negative {
                std::mem::swap(&mut lo, &mut hi);
                lo = -lo;
                hi = -hi;
            }
            out.push(RealRoot::isolated(carrier.clone(), lo, hi));
            continue;
        }
        // split at the window midpoint; check for an exact hit first
        let left: Vec<BigInt> = {
            let mut pw = BigInt::from(1) << n;
            f.iter()
                .map(|c| {
                    let v = c * &pw;
                    pw >>= 1;
                    v
                })
                .collect()
        };
        let mid_val: BigInt = left.iter().sum();
        if mid_val.is_zero() {
            let denom = BigInt::from(1) << (depth + 1);
            let frac = Rational::new(&offset * BigInt::from(2) + BigInt::from(1), denom);
            return Some(frac * bound);
        }
        let mut left = left;
        reduce_content(&mut left);
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        reduce_content(&mut right);
        let two_offset = &offset * BigInt::from(2);
        stack.push((left, two_offset.clone(), depth + 1));
        stack.push((right, two_offset + BigInt::from(1), depth + 1));
    }
    None
}

/// Sign variations of `(1+x)^n f(1/(1+x))`: bounds the number of roots of
/// `f` in `(0,1)` and matches it when 0 or 1.
fn variations_01(f: &[crate::num::BigInt]) -> usize {
    let mut r: Vec<crate::num::BigInt> = f.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    let mut count = 0;
    let mut last = Sign::Zero;
    for c in &r {
        use num_traits::Signed;
        let s = if c.is_zero() {
            Sign::Zero
        } else if c.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        };
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// In-place Taylor shift `f(x) -> f(x+1)` over the integers.
fn taylor_shift_one(c: &mut [crate::num::BigInt]) {
    let n = c.len();
    if n < 2 {
        return;
    }
    for i in 0..n - 1 {
        for j in (i..=n - 2).rev() {
            let t = c[j + 1].clone();
            c[j] += t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_i64;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn isolates_sqrt2() {
        let roots = isolate_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.is_real()));
        let vals: Vec<f64> = roots.iter().map(|r| r.to_f64()).collect();
        assert!((vals[0] + 1.41421356).abs() < 1e-7);
        assert!((vals[1] - 1.41421356).abs() < 1e-7);
    }

    #[test]
    fn isolates_cube_root_of_two() {
        let roots = isolate_roots(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        let real: Vec<_> = roots.iter().filter(|r| r.is_real()).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].to_f64() - 1.2599210).abs() < 1e-6);
        let complex: Vec<_> = roots.iter().filter(|r| !r.is_real()).collect();
        assert_eq!(complex.len(), 2);
        for c in complex {
            let (re, im) = c.to_f64_pair();
            assert!((re + 0.6299605).abs() < 1e-6);
            assert!((im.abs() - 1.0911236).abs() < 1e-6);
        }
    }

    #[test]
    fn linear_gives_exact_rational() {
        let roots = isolate_roots(&Poly::new(vec![rat_i64(-3, 2), rat_int(1)])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].is_rational(), Some(rat_i64(3, 2)));
        assert!(roots[0].is_real());
    }

    #[test]
    fn pure_imaginary_pair() {
        let roots = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(!r.is_real());
            let (re, im) = r.to_f64_pair();
            assert!(re.abs() < 1e-9);
            assert!((im.abs() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn quartic_with_two_conjugate_pairs_sharing_real_part() {
        // x^4 + 3x^2 + 1: all roots pure imaginary, two distinct pairs
        let roots = isolate_roots(&p(&[1, 0, 3, 0, 1])).unwrap();
        assert_eq!(roots.len(), 4);
        assert!(roots.iter().all(|r| !r.is_real()));
        let mut ims: Vec<f64> = roots.iter().map(|r| r.to_f64_pair().1).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // beta^2 = (3 +- sqrt5)/2 -> beta ~ 0.618, 1.618
        assert!((ims[0] + 1.618034).abs() < 1e-5);
        assert!((ims[1] + 0.618034).abs() < 1e-5);
        assert!((ims[2] - 0.618034).abs() < 1e-5);
        assert!((ims[3] - 1.618034).abs() < 1e-5);
    }

    #[test]
    fn mixed_real_and_complex_quartic() {
        // (x^2 - 2)(x^2 + x + 1)
        let f = &p(&[-2, 0, 1]) * &p(&[1, 1, 1]);
        let roots = isolate_roots(&f).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.is_real()).count(), 2);
        let c: Vec<_> = roots.iter().filter(|r| !r.is_real()).collect();
        for r in c {
            let (re, im) = r.to_f64_pair();
            assert!((re + 0.5).abs() < 1e-9);
            assert!((im.abs() - 0.8660254).abs() < 1e-6);
        }
    }

    #[test]
    fn many_close_real_roots() {
        // Wilkinson-lite: roots 1..6
        let mut f = Poly::one();
        for k in 1..=6 {
            f = &f * &p(&[-k, 1]);
        }
        let roots = isolate_roots(&f).unwrap();
        assert_eq!(roots.len(), 6);
        for (i, r) in roots.iter().enumerate() {
            assert_eq!(r.is_rational(), Some(rat_int(i as i64 + 1)));
        }
    }

    #[test]
    fn zero_poly_rejected() {
        assert!(isolate_roots(&Poly::zero_poly()).is_err());
    }

    #[test]
    fn refine_narrows_and_preserves_identity() {
        let roots = isolate_roots(&p(&[-2, 0, 1])).unwrap();
        let sqrt2 = roots[1].clone();
        let target = Rational::new(1.into(), 1_000_000.into());
        let fine = sqrt2.refine(&target);
        assert!(fine.radius() <= target);
        assert_eq!(fine, sqrt2);
        assert!((fine.to_f64() - 1.414213562373).abs() < 1e-6);
    }
}
