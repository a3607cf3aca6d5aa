//! Exact factorization of rational polynomials into irreducibles:
//! Yun squarefree decomposition, Berlekamp factorization modulo a small
//! prime, Hensel lifting, and subset recombination against a
//! Landau-Mignotte coefficient bound.

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::num::{BigInt, Rational, Ring};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
}

/// Factor a nonzero rational polynomial as a product of monic irreducible
/// polynomials with multiplicities; the product equals the input up to a
/// rational constant. Deterministic output order (degree, then
/// coefficients).
pub fn factor_poly(p: &Poly<Rational>) -> Result<Vec<(Poly<Rational>, usize)>, FactorError> {
    if p.is_zero_poly() {
        return Err(FactorError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let mut out: Vec<(Poly<Rational>, usize)> = Vec::new();
    for (part, mult) in yun_squarefree(p) {
        let f = integer_primitive(&part);
        for g in factor_squarefree_integer(&f) {
            out.push((integer_to_monic_rational(&g), mult));
        }
    }
    out.sort_by(|a, b| poly_order_key(&a.0).cmp(&poly_order_key(&b.0)));
    Ok(out)
}

fn poly_order_key(p: &Poly<Rational>) -> (usize, Vec<Rational>) {
    (p.deg0(), p.coeffs().to_vec())
}

/// Yun's squarefree decomposition over a field of characteristic zero:
/// returns pairwise-coprime squarefree parts with their multiplicities.
pub fn yun_squarefree(p: &Poly<Rational>) -> Vec<(Poly<Rational>, usize)> {
    let f = p.monic();
    if f.deg0() == 0 {
        return vec![];
    }
    let df = f.derivative();
    let a0 = crate::poly::rational_gcd(&f, &df);
    let mut b = f.divrem(&a0).0;
    let mut d = &df.divrem(&a0).0 - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg0() > 0 {
        let a = crate::poly::rational_gcd(&b, &d);
        if a.deg0() > 0 {
            out.push((a.clone(), i));
        }
        b = b.divrem(&a).0;
        d = &d.divrem(&a).0 - &b.derivative();
        i += 1;
    }
    out
}

/// Clear denominators and content: primitive integer polynomial with
/// positive leading coefficient, same roots as the input.
pub fn integer_primitive(p: &Poly<Rational>) -> Vec<BigInt> {
    assert!(!p.is_zero_poly());
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    if ints.last().map_or(false, |lc| lc.is_negative()) {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

fn integer_to_monic_rational(f: &[BigInt]) -> Poly<Rational> {
    Poly::new(
        f.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    )
    .monic()
}

fn int_deg(f: &[BigInt]) -> usize {
    f.len().saturating_sub(1)
}

fn int_eval(f: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Factor a squarefree primitive integer polynomial into irreducible
/// primitive integer factors.
fn factor_squarefree_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = int_deg(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // strip rational roots cheaply first; keeps Hensel inputs small
    let mut rest = f.to_vec();
    let mut linear = Vec::new();
    loop {
        match find_linear_factor(&rest) {
            Some(lf) => {
                linear.push(lf.clone());
                rest = int_div_exact(&rest, &lf);
            }
            None => break,
        }
    }
    if int_deg(&rest) == 0 {
        return linear;
    }
    if int_deg(&rest) == 1 {
        linear.push(primitive_of(&rest));
        return linear;
    }
    linear.extend(factor_squarefree_core(&rest));
    linear.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    linear
}

/// Rational-root search via divisor pairs of constant and leading
/// coefficients; returns a primitive linear factor `q*x - p` if one exists.
/// Skipped for huge coefficients, where the Hensel path is cheaper than
/// divisor enumeration.
fn find_linear_factor(f: &[BigInt]) -> Option<Vec<BigInt>> {
    let c0 = &f[0];
    let lc = f.last().unwrap();
    if c0.is_zero() {
        return Some(vec![BigInt::zero(), BigInt::one()]);
    }
    if c0.bits() > 20 || lc.bits() > 20 {
        return None;
    }
    let p_divs = small_divisors(c0);
    let q_divs = small_divisors(lc);
    for q in &q_divs {
        for p in &p_divs {
            if num_integer::gcd(p.clone(), q.clone()) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let pp = p * BigInt::from(sign);
                // test f(pp/q) = 0 via integer substitution
                if eval_at_fraction_is_zero(f, &pp, q) {
                    return Some(vec![-pp, q.clone()]);
                }
            }
        }
    }
    None
}

fn eval_at_fraction_is_zero(f: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    // sum_k f_k p^k q^(n-k)
    let n = int_deg(f);
    let mut acc = BigInt::zero();
    for (k, c) in f.iter().enumerate() {
        acc += c * p.pow(k as u32) * q.pow((n - k) as u32);
    }
    acc.is_zero()
}

fn small_divisors(v: &BigInt) -> Vec<BigInt> {
    // enumerate divisors via trial division; inputs are gated to < 2^48
    let a = v.abs().to_u64().expect("gated magnitude");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= a {
        if a % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(a / d));
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn primitive_of(f: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in f {
        content = num_integer::gcd(content, c.clone());
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    if f.last().map_or(false, |lc| lc.is_negative()) {
        content = -content;
    }
    f.iter().map(|c| c / &content).collect()
}

fn int_div_exact(f: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    // divide primitive polynomials over Q and restore primitivity
    let fr = Poly::new(
        f.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    );
    let dr = Poly::new(
        d.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    );
    let (q, r) = fr.divrem(&dr);
    assert!(r.is_zero_poly(), "int_div_exact: not a divisor");
    integer_primitive(&q)
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// Zassenhaus on a squarefree primitive integer polynomial with no linear
/// factors left to strip.
fn factor_squarefree_core(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = int_deg(f);
    let lc = f.last().unwrap().clone();

    // monic transform: fm(x) = lc^(n-1) f(x/lc) is monic over Z
    let fm = monic_transform(f, &lc);

    // pick a prime keeping fm squarefree, preferring few modular factors
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod(&fm, p);
        if int_deg_u64(&fp) != n {
            continue;
        }
        if !is_squarefree_mod(&fp, p) {
            continue;
        }
        let factors = berlekamp(&fp, p);
        let count = factors.len();
        if best.as_ref().map_or(true, |(_, b)| count < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 4 || count == 1 {
            break;
        }
    }
    let (p, mod_factors) = best.expect("no usable prime found for factorization");
    if mod_factors.len() == 1 {
        return vec![f.to_vec()];
    }

    // lift to p^k beyond twice the Landau-Mignotte bound
    let bound = landau_mignotte(&fm);
    let target = BigInt::from(2) * &bound + BigInt::one();
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= target {
        modulus *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift_tree(&fm, &mod_factors, p, k);

    // recombine subsets of lifted factors into true integer factors of fm
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut remaining = fm.clone();
    let mut monic_factors: Vec<Vec<BigInt>> = Vec::new();
    let mut card = 1;
    while 2 * card <= pool.len() {
        let mut advanced = false;
        for subset in subsets(pool.len(), card) {
            let mut cand = vec![BigInt::one()];
            for &i in &subset {
                cand = poly_mul_mod(&cand, &pool[i], &modulus);
            }
            symmetric_range(&mut cand, &modulus);
            if int_deg(&cand) == 0 {
                continue;
            }
            if divides_int(&cand, &remaining) {
                remaining = int_div_exact(&remaining, &cand);
                monic_factors.push(cand);
                let mut keep = Vec::new();
                for (i, h) in pool.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(h);
                    }
                }
                pool = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            card += 1;
        }
    }
    if int_deg(&remaining) > 0 {
        monic_factors.push(remaining);
    }

    // undo the monic transform: factor of f = primitive(h(lc * x))
    monic_factors
        .into_iter()
        .map(|h| {
            let hr = Poly::new(
                h.iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect::<Vec<_>>(),
            );
            let back = hr.scale_arg(&Rational::from_integer(lc.clone()));
            integer_primitive(&back)
        })
        .collect()
}

fn monic_transform(f: &[BigInt], lc: &BigInt) -> Vec<BigInt> {
    // fm_k = f_k * lc^(n-1-k) for k < n, fm_n = 1
    let n = int_deg(f);
    let mut out = Vec::with_capacity(n + 1);
    for (k, c) in f.iter().enumerate() {
        if k == n {
            out.push(BigInt::one());
        } else {
            out.push(c * lc.pow((n - 1 - k) as u32));
        }
    }
    out
}

fn landau_mignotte(f: &[BigInt]) -> BigInt {
    // ||h||_inf <= 2^n ||f||_2 for any monic factor h of monic f
    let n = int_deg(f);
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    (BigInt::one() << n) * norm
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn divides_int(d: &[BigInt], f: &[BigInt]) -> bool {
    if int_deg(d) > int_deg(f) {
        return false;
    }
    // quick check at a point before full division
    let two = BigInt::from(2);
    let dv = int_eval(d, &two);
    if !dv.is_zero() && !(&int_eval(f, &two) % &dv).is_zero() {
        return false;
    }
    let fr = Poly::new(
        f.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    );
    let dr = Poly::new(
        d.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
    );
    fr.divrem(&dr).1.is_zero_poly()
}

// ---- arithmetic mod p over u64 ----

fn trim_u64(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn int_deg_u64(f: &[u64]) -> usize {
    f.len().saturating_sub(1)
}

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = ((c % &bp) + &bp) % &bp;
            r.to_u64().unwrap()
        })
        .collect();
    trim_u64(&mut out);
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn poly_mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim_u64(&mut out);
    out
}

fn poly_divrem_p(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    let db = int_deg_u64(b);
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - b.len() + 1];
    let lc_inv = invmod(*b.last().unwrap(), p);
    for k in (db..rem.len()).rev() {
        if rem[k] == 0 {
            continue;
        }
        let q = mulmod(rem[k], lc_inv, p);
        quot[k - db] = q;
        for (j, &bc) in b.iter().enumerate() {
            let idx = k - db + j;
            let sub = mulmod(q, bc, p);
            rem[idx] = (rem[idx] + p - sub) % p;
        }
    }
    trim_u64(&mut rem);
    trim_u64(&mut quot);
    (quot, rem)
}

fn poly_gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim_u64(&mut x);
    trim_u64(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem_p(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lc) = x.last() {
        let inv = invmod(lc, p);
        for c in &mut x {
            *c = mulmod(*c, inv, p);
        }
    }
    x
}

fn poly_deriv_p(a: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| mulmod(c, (k as u64) % p, p))
        .collect();
    trim_u64(&mut out);
    out
}

fn is_squarefree_mod(f: &[u64], p: u64) -> bool {
    let d = poly_deriv_p(f, p);
    if d.is_empty() {
        return false;
    }
    int_deg_u64(&poly_gcd_p(f, &d, p)) == 0
}

fn poly_powmod_p(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_divrem_p(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_divrem_p(&poly_mul_p(&result, &b, p), m, p).1;
        }
        b = poly_divrem_p(&poly_mul_p(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Berlekamp factorization of a squarefree monic polynomial mod p.
/// Deterministic: splits with gcd(f, v - c) over all c in F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = int_deg_u64(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Q matrix: column i is x^(i*p) mod f
    let xp = poly_powmod_p(&[0, 1], p, f, p);
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut col = cur.clone();
        col.resize(n, 0);
        cols.push(col);
        cur = poly_divrem_p(&poly_mul_p(&cur, &xp, p), f, p).1;
    }
    // kernel of (Q - I): row-major matrix m[r][c] = Q[r][c] - delta
    let mut m = vec![vec![0u64; n]; n];
    for (c, col) in cols.iter().enumerate() {
        for r in 0..n {
            m[r][c] = col[r] % p;
        }
    }
    for i in 0..n {
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let basis = nullspace_mod_p(&mut m, p);
    let r = basis.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut factors = vec![f.to_vec()];
    'outer: for v in &basis {
        let mut vpoly = v.clone();
        trim_u64(&mut vpoly);
        if int_deg_u64(&vpoly) == 0 {
            continue; // constant vector splits nothing
        }
        let mut next = Vec::new();
        for w in factors.drain(..) {
            if int_deg_u64(&w) <= 1 {
                next.push(w);
                continue;
            }
            let mut pieces = Vec::new();
            let mut rest = w.clone();
            for c in 0..p {
                let mut shifted = vpoly.clone();
                if shifted.is_empty() {
                    shifted = vec![0];
                }
                shifted[0] = (shifted[0] + p - c % p) % p;
                trim_u64(&mut shifted);
                let g = if shifted.is_empty() {
                    rest.clone()
                } else {
                    poly_gcd_p(&rest, &shifted, p)
                };
                if int_deg_u64(&g) > 0 && g.len() < rest.len() {
                    rest = poly_divrem_p(&rest, &g, p).0;
                    pieces.push(g);
                }
                if int_deg_u64(&rest) == 0 {
                    break;
                }
            }
            if int_deg_u64(&rest) > 0 {
                pieces.push(rest);
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    // normalize monic
    for f in &mut factors {
        if let Some(&lc) = f.last() {
            let inv = invmod(lc, p);
            for c in f.iter_mut() {
                *c = mulmod(*c, inv, p);
            }
        }
    }
    factors.sort();
    factors
}

fn nullspace_mod_p(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = invmod(m[r][c], p);
        for j in 0..cols {
            m[r][j] = mulmod(m[r][j], inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for fc in 0..cols {
        if pivot_cols.contains(&fc) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for &(pr, pc) in &pivots {
            v[pc] = (p - m[pr][fc] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- Hensel lifting over BigInt ----

fn poly_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + x * y) % m;
        }
    }
    for c in &mut out {
        *c = ((&*c % m) + m) % m;
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn poly_sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).unwrap_or(&zero);
        let y = b.get(k).unwrap_or(&zero);
        out.push((((x - y) % m) + m) % m);
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Division with remainder by a monic polynomial, all mod m.
fn poly_divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let db = int_deg(b);
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let mut rem: Vec<BigInt> = a.iter().map(|c| ((c % m) + m) % m).collect();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = rem[k].clone();
        quot[k - db] = q.clone();
        for (j, bc) in b.iter().enumerate() {
            let idx = k - db + j;
            rem[idx] = ((&rem[idx] - &q * bc) % m + m) % m;
        }
    }
    while rem.last().map_or(false, |c| c.is_zero()) {
        rem.pop();
    }
    while quot.last().map_or(false, |c| c.is_zero()) {
        quot.pop();
    }
    (quot, rem)
}

fn symmetric_range(f: &mut [BigInt], m: &BigInt) {
    let half = m / BigInt::from(2);
    for c in f.iter_mut() {
        let mut r = ((&*c % m) + m) % m;
        if r > half {
            r -= m;
        }
        *c = r;
    }
}

fn u64_poly_to_big(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `f = prod(factors) mod p` to the same congruence mod `p^k`,
/// splitting the factor list recursively into pairs. `f` must be monic; the
/// factors are monic mod p.
fn hensel_lift_tree(f: &[BigInt], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let modulus = BigInt::from(p).pow(k);
        let mut out: Vec<BigInt> = f.iter().map(|c| ((c % &modulus) + &modulus) % &modulus).collect();
        while out.last().map_or(false, |c| c.is_zero()) {
            out.pop();
        }
        return vec![out];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let mut g = vec![1u64];
    for fac in left {
        g = poly_mul_p(&g, fac, p);
    }
    let mut h = vec![1u64];
    for fac in right {
        h = poly_mul_p(&h, fac, p);
    }
    let (g_lift, h_lift) = hensel_lift_pair(f, &g, &h, p, k);
    let mut out = hensel_lift_tree(&g_lift, left, p, k);
    out.extend(hensel_lift_tree(&h_lift, right, p, k));
    out
}

/// Linear Hensel lifting of a monic coprime pair from mod p to mod p^k.
fn hensel_lift_pair(
    f: &[BigInt],
    g0: &[u64],
    h0: &[u64],
    p: u64,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    // Bezout a*g + b*h = 1 mod p
    let (a0, b0) = poly_xgcd_p(g0, h0, p);
    let bp = BigInt::from(p);
    let mut g = u64_poly_to_big(g0);
    let mut h = u64_poly_to_big(h0);
    let a = u64_poly_to_big(&a0);
    let b = u64_poly_to_big(&b0);
    let mut modulus = bp.clone();
    for _ in 1..k {
        let next = &modulus * &bp;
        // e = (f - g*h) / modulus  mod p
        let gh = poly_mul_plain(&g, &h);
        let diff = poly_sub_plain(f, &gh);
        let e: Vec<BigInt> = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &modulus).is_zero(), "hensel drift");
                let q = c / &modulus;
                ((q % &bp) + &bp) % &bp
            })
            .collect();
        // b*e = q*g + r mod p; g += modulus*r, h += modulus*(a*e + q*h mod p)
        let be = poly_mul_mod(&b, &e, &bp);
        let (q, r) = poly_divrem_monic_mod(&be, &g_mod(&g, &bp), &bp);
        let ae = poly_mul_mod(&a, &e, &bp);
        let qh = poly_mul_mod(&q, &h_mod(&h, &bp), &bp);
        let s = poly_add_mod(&ae, &qh, &bp);
        g = poly_add_scaled(&g, &r, &modulus);
        h = poly_add_scaled(&h, &s, &modulus);
        modulus = next;
        for c in g.iter_mut() {
            *c = ((&*c % &modulus) + &modulus) % &modulus;
        }
        for c in h.iter_mut() {
            *c = ((&*c % &modulus) + &modulus) % &modulus;
        }
    }
    (g, h)
}

fn g_mod(g: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = g.iter().map(|c| ((c % p) + p) % p).collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn h_mod(h: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    g_mod(h, p)
}

fn poly_add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).unwrap_or(&zero);
        let y = b.get(k).unwrap_or(&zero);
        out.push(((x + y) % m + m) % m);
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn poly_mul_plain(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub_plain(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
        .collect()
}

fn poly_add_scaled(a: &[BigInt], b: &[BigInt], scale: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero) * scale)
        .collect()
}

fn poly_xgcd_p(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    // returns (s, t) with s*a + t*b = 1 mod p; inputs must be coprime mod p
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    trim_u64(&mut r0);
    trim_u64(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem_p(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let qs = poly_mul_p(&q, &s1, p);
        let new_s = poly_sub_p(&s0, &qs, p);
        s0 = std::mem::replace(&mut s1, new_s);
        let qt = poly_mul_p(&q, &t1, p);
        let new_t = poly_sub_p(&t0, &qt, p);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    assert_eq!(int_deg_u64(&r0), 0, "xgcd of non-coprime polynomials");
    let inv = invmod(r0[0], p);
    for c in s0.iter_mut() {
        *c = mulmod(*c, inv, p);
    }
    for c in t0.iter_mut() {
        *c = mulmod(*c, inv, p);
    }
    (s0, t0)
}

fn poly_sub_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out.push((x + p - y % p) % p);
    }
    trim_u64(&mut out);
    out
}
