//! Eigenstructure of a rational matrix, exactly: eigenvalues with their
//! indices, spectral projections onto generalized eigenspaces, and the
//! coefficient vectors of `b^T exp(At)`.
//!
//! The projections are built without Jordan bases. The minimal polynomial
//! splits as a product of irreducible powers; Chinese-remainder idempotents
//! give a rational projection per factor, and Bezout inversion inside the
//! number field `Q[x]/(p_i)` splits each factor projection per root. All
//! per-root data is computed once symbolically (polynomials in the root) and
//! evaluated into canonical algebraic numbers on demand.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algnum::{isolate_roots, AlgebraicNumber, AlgnumError};
use crate::matrix::{min_poly, Matrix, MatrixError};
use crate::num::{Field, Rational, Ring};
use crate::poly::Poly;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("dominance order requires real first components")]
    NonRealPair,
}

// ---- number field arithmetic Q[theta]/(p) ----

/// Element of a number field, represented by its reduced polynomial in the
/// generator. A missing modulus means a plain rational constant; it is
/// promoted on first contact with a field-aware operand.
#[derive(Clone, Debug)]
pub(crate) struct NfElem {
    rep: Poly<Rational>,
    modulus: Option<Poly<Rational>>,
}

impl NfElem {
    fn rational(r: Rational) -> Self {
        NfElem {
            rep: Poly::constant(r),
            modulus: None,
        }
    }

    fn in_field(rep: Poly<Rational>, modulus: &Poly<Rational>) -> Self {
        NfElem {
            rep: rep.rem(modulus),
            modulus: Some(modulus.clone()),
        }
    }

    fn generator(modulus: &Poly<Rational>) -> Self {
        NfElem::in_field(Poly::x(), modulus)
    }

    pub(crate) fn rep(&self) -> &Poly<Rational> {
        &self.rep
    }

    fn join_modulus(&self, other: &NfElem) -> Option<Poly<Rational>> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => {
                debug_assert_eq!(a, b, "mixed number fields");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        }
    }

    fn reduce(rep: Poly<Rational>, modulus: Option<Poly<Rational>>) -> NfElem {
        match modulus {
            Some(m) => NfElem {
                rep: rep.rem(&m),
                modulus: Some(m),
            },
            None => NfElem { rep, modulus: None },
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Add for NfElem {
    type Output = NfElem;
    fn add(self, rhs: Self) -> Self {
        let m = self.join_modulus(&rhs);
        NfElem::reduce(&self.rep + &rhs.rep, m)
    }
}

impl Sub for NfElem {
    type Output = NfElem;
    fn sub(self, rhs: Self) -> Self {
        let m = self.join_modulus(&rhs);
        NfElem::reduce(&self.rep - &rhs.rep, m)
    }
}

impl Mul for NfElem {
    type Output = NfElem;
    fn mul(self, rhs: Self) -> Self {
        let m = self.join_modulus(&rhs);
        NfElem::reduce(&self.rep * &rhs.rep, m)
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> Self {
        NfElem {
            rep: -&self.rep,
            modulus: self.modulus,
        }
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero_poly()
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem::rational(Rational::one())
    }
}

impl Ring for NfElem {
    fn from_i64(n: i64) -> Self {
        NfElem::rational(crate::num::rat_int(n))
    }
}

impl Div for NfElem {
    type Output = NfElem;
    fn div(self, rhs: Self) -> Self {
        let m = self.join_modulus(&rhs);
        match &m {
            None => NfElem::rational(self.rep.coeff(0) / rhs.rep.coeff(0)),
            Some(modulus) => {
                // invert via Bezout: s*rep + t*modulus = 1
                let (g, s, _t) = rhs.rep.xgcd(modulus);
                assert_eq!(g.deg0(), 0, "non-invertible number field element");
                let inv = s.scale(&(Rational::one() / g.coeff(0)));
                NfElem::reduce(&self.rep * &inv, m)
            }
        }
    }
}

impl Field for NfElem {}

// ---- spectral data ----

/// One eigenvalue with its index (multiplicity as a root of the minimal
/// polynomial) and the irreducible factor it roots.
#[derive(Clone, Debug)]
pub struct EigenvalueRecord {
    pub value: AlgebraicNumber,
    pub index: usize,
    pub real: bool,
    pub factor_id: usize,
}

/// Per-irreducible-factor spectral data: the rational factor idempotent and
/// the symbolic per-root projection (entries are polynomials in the root).
#[derive(Clone, Debug)]
pub(crate) struct FactorData {
    pub(crate) poly: Poly<Rational>,
    pub(crate) index: usize,
    pub(crate) e_proj: Matrix<Rational>,
    pub(crate) proj_sym: Matrix<NfElem>,
}

/// Exact eigenstructure of a rational square matrix.
#[derive(Clone, Debug)]
pub struct SpectralData {
    matrix: Matrix<Rational>,
    minpoly: Poly<Rational>,
    factors: Vec<FactorData>,
    eigenvalues: Vec<EigenvalueRecord>,
    nu_max: usize,
}

/// Compute the full eigenstructure: minimal polynomial, factor idempotents,
/// symbolic per-root projections, and isolated eigenvalues with indices.
pub fn eigen_structure(a: &Matrix<Rational>) -> Result<SpectralData, SpectralError> {
    let minpoly = min_poly(a)?;
    let factors = crate::factor::factor_poly(&minpoly).expect("nonzero minimal polynomial");
    let n = a.rows();

    let mut factor_data = Vec::with_capacity(factors.len());
    let mut eigenvalues = Vec::new();
    let mut nu_max = 0;

    for (fid, (p, e)) in factors.iter().enumerate() {
        let e = *e;
        nu_max = nu_max.max(e);
        let pe = p.pow(e);
        let cofactor = minpoly.divrem(&pe).0;
        // E_i = (t * cofactor)(A) with s*pe + t*cofactor = 1
        let (g, _s, t) = pe.xgcd(&cofactor);
        debug_assert_eq!(g.deg0(), 0);
        let idem_poly = (&t * &cofactor).rem(&minpoly);
        let e_proj = a.poly_eval(&idem_poly);

        // per-root splitting inside K = Q[theta]/(p): Bezout of (x-theta)^e
        // against (p(x)/(x-theta))^e
        let proj_sym = if p.deg0() == 1 {
            // rational eigenvalue: the factor projection is the root projection
            e_proj.map(|r| NfElem::in_field(Poly::constant(r.clone()), p))
        } else {
            let theta = NfElem::generator(p);
            let p_k: Poly<NfElem> = p.map(|c| NfElem::rational(c.clone()));
            let x_minus_theta = Poly::new(vec![-theta.clone(), NfElem::one()]);
            let quotient = p_k.divrem(&x_minus_theta).0;
            let lin_pow = x_minus_theta.pow(e);
            let quo_pow = quotient.pow(e);
            let (g, _u, v) = lin_pow.xgcd(&quo_pow);
            debug_assert_eq!(g.deg0(), 0);
            let w = &v * &quo_pow;
            // P_theta = w(A) * E_i = sum_k w_k (A^k E_i)
            let mut acc: Matrix<NfElem> = Matrix::zero(n, n);
            let mut ak_e = e_proj.clone();
            for k in 0..w.coeffs().len() {
                let wk = w.coeff(k);
                if !wk.is_zero() {
                    let term =
                        ak_e.map(|r| NfElem::in_field(Poly::constant(r.clone()), p) * wk.clone());
                    acc = acc.add(&term);
                }
                if k + 1 < w.coeffs().len() {
                    ak_e = a.mul(&ak_e);
                }
            }
            acc
        };

        for root in isolate_roots(p).expect("irreducible factor") {
            eigenvalues.push(EigenvalueRecord {
                real: root.is_real(),
                value: root,
                index: e,
                factor_id: fid,
            });
        }
        factor_data.push(FactorData {
            poly: p.clone(),
            index: e,
            e_proj,
            proj_sym,
        });
    }

    Ok(SpectralData {
        matrix: a.clone(),
        minpoly,
        factors: factor_data,
        eigenvalues,
        nu_max,
    })
}

impl SpectralData {
    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn minpoly(&self) -> &Poly<Rational> {
        &self.minpoly
    }

    pub fn eigenvalues(&self) -> &[EigenvalueRecord] {
        &self.eigenvalues
    }

    pub fn nu_max(&self) -> usize {
        self.nu_max
    }

    pub(crate) fn factors(&self) -> &[FactorData] {
        &self.factors
    }

    /// Materialize the spectral projection of one eigenvalue as a matrix of
    /// canonical algebraic numbers.
    pub fn projection(&self, eig: usize) -> Matrix<AlgebraicNumber> {
        let rec = &self.eigenvalues[eig];
        let fd = &self.factors[rec.factor_id];
        fd.proj_sym.map(|elem| rec.value.eval_poly(elem.rep()))
    }

    /// Components `v_lambda = P_lambda v` of a real vector, one per
    /// eigenvalue, aligned with [`Self::eigenvalues`].
    pub fn decompose_real_vector(
        &self,
        v: &[Rational],
    ) -> Result<Vec<Vec<AlgebraicNumber>>, MatrixError> {
        if v.len() != self.matrix.cols() {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector length {} vs dimension {}",
                v.len(),
                self.matrix.cols()
            )));
        }
        let mut out = Vec::with_capacity(self.eigenvalues.len());
        for rec in self.eigenvalues.iter() {
            let fd = &self.factors[rec.factor_id];
            let vk: Vec<NfElem> = v.iter().map(|r| NfElem::rational(r.clone())).collect();
            let sym = fd.proj_sym.mul_vec(&vk);
            out.push(
                sym.iter()
                    .map(|elem| rec.value.eval_poly(elem.rep()))
                    .collect(),
            );
        }
        Ok(out)
    }

    /// Rational sum of all per-root projections of one factor, computed via
    /// traces over the factor's root set (power sums, no algebraic numbers).
    pub(crate) fn factor_trace_projection(&self, fid: usize) -> Matrix<Rational> {
        let fd = &self.factors[fid];
        let sums = power_sums(&fd.poly, fd.poly.deg0().saturating_sub(1));
        fd.proj_sym.map(|elem| trace_of(elem.rep(), &sums))
    }
}

/// Power sums `s_k = sum_roots root^k` of a monic polynomial, `k = 0..=upto`,
/// via Newton's identities.
pub(crate) fn power_sums(p: &Poly<Rational>, upto: usize) -> Vec<Rational> {
    let m = p.deg0();
    let a = |i: usize| p.coeff(i); // p = x^m + a_{m-1} x^{m-1} + ... + a_0
    let mut s = vec![Rational::zero(); upto + 1];
    s[0] = crate::num::rat_int(m as i64);
    for k in 1..=upto {
        let mut acc = Rational::zero();
        for i in 1..k {
            if i <= m {
                acc += &a(m - i) * &s[k - i];
            }
        }
        if k <= m {
            acc += crate::num::rat_int(k as i64) * a(m - k);
        } else {
            // recurrence for k > m uses all m previous sums
            acc = Rational::zero();
            for i in 1..=m {
                acc += &a(m - i) * &s[k - i];
            }
        }
        s[k] = -acc;
    }
    s
}

/// Trace (sum over the factor's roots) of a represented element.
pub(crate) fn trace_of(rep: &Poly<Rational>, power_sums: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (k, c) in rep.coeffs().iter().enumerate() {
        acc += c * &power_sums[k];
    }
    acc
}

// ---- coefficient tables ----

/// Real dominance pair `(eta, j)` with its coefficient vector.
#[derive(Clone, Debug)]
pub struct RealPairEntry {
    pub eta: AlgebraicNumber,
    pub j: usize,
    pub u: Vec<AlgebraicNumber>,
}

/// One representative per conjugate eigenvalue pair (`Im > 0`), with the
/// real and imaginary parts of its coefficient vector as real algebraic
/// rows.
#[derive(Clone, Debug)]
pub struct ComplexPairEntry {
    pub eta: AlgebraicNumber,
    pub j: usize,
    pub u_re: Vec<AlgebraicNumber>,
    pub u_im: Vec<AlgebraicNumber>,
}

/// Coefficient vectors `u_(lambda, j)` of `b^T exp(At)`: symbolic per-factor
/// rows plus the materialized real/complex split used by the escape
/// reduction.
#[derive(Debug)]
pub struct CoefficientTable {
    pub observable: Vec<Rational>,
    /// real pairs sorted dominance-descending
    pub real_pairs: Vec<RealPairEntry>,
    /// per factor: rows `u_sym[j] = (1/j!) b^T (A - theta)^j P_theta`
    sym_rows: Vec<Vec<Vec<NfElem>>>,
    factor_polys: Vec<(Poly<Rational>, usize)>,
    matrix: Matrix<Rational>,
    /// conjugate-pair representatives, materialized on first use
    complex_reps: Vec<EigenvalueRecord>,
    complex_cache: std::sync::OnceLock<Vec<ComplexPairEntry>>,
}

/// Build the coefficient table of observable row `b` against the
/// eigenstructure of `A`.
pub fn coefficient_table(
    b: &[Rational],
    spec: &SpectralData,
) -> Result<CoefficientTable, MatrixError> {
    let n = spec.matrix().rows();
    if b.len() != n {
        return Err(MatrixError::DimensionMismatch(format!(
            "observable length {} vs dimension {}",
            b.len(),
            n
        )));
    }
    let a = spec.matrix();
    let a_k: Matrix<NfElem> = a.map(|r| NfElem::rational(r.clone()));
    let mut sym_rows: Vec<Vec<Vec<NfElem>>> = Vec::with_capacity(spec.factors().len());

    for fd in spec.factors() {
        let p = &fd.poly;
        let theta = NfElem::generator(p);
        let bk: Vec<NfElem> = b.iter().map(|r| NfElem::rational(r.clone())).collect();
        // r_0 = b^T P_theta; r_{j+1} = r_j (A - theta I); u_j = r_j / j!
        let mut row = Matrix::vec_mul(&bk, &fd.proj_sym);
        let mut rows_for_factor = Vec::with_capacity(fd.index);
        let mut factorial = Rational::one();
        for j in 0..fd.index {
            if j > 0 {
                factorial *= crate::num::rat_int(j as i64);
            }
            let inv = NfElem::rational(Rational::one() / &factorial);
            rows_for_factor.push(
                row.iter()
                    .map(|e| e.clone() * inv.clone())
                    .collect::<Vec<_>>(),
            );
            if j + 1 < fd.index {
                let ra = Matrix::vec_mul(&row, &a_k);
                row = ra
                    .into_iter()
                    .zip(row.iter())
                    .map(|(x, r)| x - r.clone() * theta.clone())
                    .collect();
            }
        }
        sym_rows.push(rows_for_factor);
    }

    // materialize real rows now; keep conjugate-pair representatives for
    // lazy materialization (their real/imag split is only needed by the
    // escape reduction)
    let mut real_pairs = Vec::new();
    let mut complex_reps = Vec::new();
    for rec in spec.eigenvalues() {
        let rows_for_factor = &sym_rows[rec.factor_id];
        if rec.real {
            for (j, row) in rows_for_factor.iter().enumerate() {
                let u: Vec<AlgebraicNumber> =
                    row.iter().map(|e| rec.value.eval_poly(e.rep())).collect();
                debug_assert!(u.iter().all(|x| x.is_real()));
                real_pairs.push(RealPairEntry {
                    eta: rec.value.clone(),
                    j,
                    u,
                });
            }
        } else {
            // one representative per conjugate pair: the Im > 0 member
            if rec.value.imag_sign() == crate::num::Sign::Positive {
                complex_reps.push(rec.clone());
            }
        }
    }
    // dominance-descending order for the escape reduction
    real_pairs.sort_by(|x, y| {
        dominance_order(&(y.eta.clone(), y.j), &(x.eta.clone(), x.j)).expect("real pairs")
    });

    Ok(CoefficientTable {
        observable: b.to_vec(),
        real_pairs,
        sym_rows,
        factor_polys: spec
            .factors()
            .iter()
            .map(|fd| (fd.poly.clone(), fd.index))
            .collect(),
        matrix: a.clone(),
        complex_reps,
        complex_cache: std::sync::OnceLock::new(),
    })
}

impl CoefficientTable {
    /// Real and imaginary parts of the coefficient rows of each conjugate
    /// eigenvalue pair (one representative per pair, `Im > 0`), materialized
    /// on first use.
    pub fn complex_pairs(&self) -> &[ComplexPairEntry] {
        self.complex_cache.get_or_init(|| {
            let mut out = Vec::new();
            for rec in &self.complex_reps {
                let rows_for_factor = &self.sym_rows[rec.factor_id];
                for (j, row) in rows_for_factor.iter().enumerate() {
                    let vals: Vec<AlgebraicNumber> =
                        row.iter().map(|e| rec.value.eval_poly(e.rep())).collect();
                    let u_re = vals.iter().map(|v| v.real_part()).collect();
                    let u_im = vals.iter().map(|v| v.imag_part()).collect();
                    out.push(ComplexPairEntry {
                        eta: rec.value.clone(),
                        j,
                        u_re,
                        u_im,
                    });
                }
            }
            out
        })
    }

    /// Exact moment identity
    /// `b^T A^k = sum_(lambda,j) u_(lambda,j)^T lambda^(k-j) k!/(k-j)!`
    /// for `k = 0..=upto_k`, verified rationally through traces over each
    /// factor's root set.
    pub fn moment_identity_holds(&self, upto_k: usize) -> bool {
        let n = self.matrix.cols();
        let mut lhs_row: Vec<Rational> = self.observable.clone();
        for k in 0..=upto_k {
            if k > 0 {
                lhs_row = Matrix::vec_mul(&lhs_row, &self.matrix);
            }
            let mut rhs = vec![Rational::zero(); n];
            for (fid, (p, index)) in self.factor_polys.iter().enumerate() {
                let sums = power_sums(p, p.deg0().saturating_sub(1) + k);
                for j in 0..*index {
                    if j > k {
                        continue;
                    }
                    // k!/(k-j)!
                    let mut coef = Rational::one();
                    for t in (k - j + 1)..=k {
                        coef *= crate::num::rat_int(t as i64);
                    }
                    for (comp, elem) in self.sym_rows[fid][j].iter().enumerate() {
                        // trace( rep * theta^(k-j) mod p )
                        let shifted =
                            (&Poly::monomial(Rational::one(), k - j) * elem.rep()).rem(p);
                        rhs[comp] += &coef * &trace_of(&shifted, &sums);
                    }
                }
            }
            if lhs_row != rhs {
                return false;
            }
        }
        true
    }

    /// Raw coefficient vector for one eigenvalue record (complex entries
    /// for non-real eigenvalues); `None` when `j` exceeds the index.
    pub fn u_vector(&self, rec: &EigenvalueRecord, j: usize) -> Option<Vec<AlgebraicNumber>> {
        let rows = self.sym_rows.get(rec.factor_id)?;
        let row = rows.get(j)?;
        Some(row.iter().map(|e| rec.value.eval_poly(e.rep())).collect())
    }
}

/// Lexicographic dominance order on pairs `(real eigenvalue, power of t)`.
pub fn dominance_order(
    p: &(AlgebraicNumber, usize),
    q: &(AlgebraicNumber, usize),
) -> Result<Ordering, SpectralError> {
    let ord = p
        .0
        .compare_real(&q.0)
        .map_err(|_: AlgnumError| SpectralError::NonRealPair)?;
    Ok(match ord {
        Ordering::Equal => p.1.cmp(&q.1),
        other => other,
    })
}

// ---- exact structural checks used by tests and the acceptance suite ----

impl SpectralData {
    /// `sum_lambda P_lambda = I`, checked rationally via factor traces.
    pub fn projections_sum_to_identity(&self) -> bool {
        let n = self.matrix.rows();
        let mut acc: Matrix<Rational> = Matrix::zero(n, n);
        for fid in 0..self.factors.len() {
            acc = acc.add(&self.factor_trace_projection(fid));
        }
        acc == Matrix::identity(n)
    }

    /// Factor idempotents: `E_i^2 = E_i`, `E_i E_j = 0`, `sum E_i = I`, and
    /// each factor's root projections sum to its idempotent.
    pub fn factor_idempotents_check(&self) -> bool {
        let n = self.matrix.rows();
        let mut total: Matrix<Rational> = Matrix::zero(n, n);
        for (i, fd) in self.factors.iter().enumerate() {
            if fd.e_proj.mul(&fd.e_proj) != fd.e_proj {
                return false;
            }
            for (j, other) in self.factors.iter().enumerate() {
                if i != j && !fd.e_proj.mul(&other.e_proj).is_zero_matrix() {
                    return false;
                }
            }
            if self.factor_trace_projection(i) != fd.e_proj {
                return false;
            }
            total = total.add(&fd.e_proj);
        }
        total == Matrix::identity(n)
    }

    /// Symbolic idempotence `P^2 = P` per root representative.
    pub fn projections_idempotent(&self) -> bool {
        self.factors
            .iter()
            .all(|fd| fd.proj_sym.mul(&fd.proj_sym) == fd.proj_sym)
    }

    /// Symbolic nilpotency `(A - lambda I)^nu P_lambda = 0` per root
    /// representative.
    pub fn projections_nilpotent(&self) -> bool {
        for fd in self.factors.iter() {
            let p = &fd.poly;
            let theta = NfElem::generator(p);
            let n = self.matrix.rows();
            let mut shifted: Matrix<NfElem> = self.matrix.map(|r| NfElem::rational(r.clone()));
            for i in 0..n {
                let t = shifted.get(i, i).clone() - theta.clone();
                shifted.set(i, i, t);
            }
            let mut acc = fd.proj_sym.clone();
            for _ in 0..fd.index {
                acc = shifted.mul(&acc);
            }
            if !acc.is_zero_matrix() {
                return false;
            }
        }
        true
    }

    /// Orthogonality of projections belonging to different roots of the
    /// same irreducible factor: each entry of `P(s) P(t)` must reduce to
    /// zero modulo the ideal `(p(s), (p(s)-p(t))/(s-t))`, whose variety is
    /// exactly the off-diagonal root pairs. Cross-factor orthogonality is
    /// covered by the rational idempotent checks.
    pub fn projections_cross_orthogonal(&self) -> bool {
        for fd in &self.factors {
            let p = &fd.poly;
            let m = p.deg0();
            if m <= 1 {
                continue; // single root per factor
            }
            // psi(s,t) = (p(s)-p(t))/(s-t) as a polynomial in t over K_s;
            // leading t-coefficient is lc(p) = 1, so division is exact
            let psi: Poly<NfElem> = {
                let mut coeffs = Vec::with_capacity(m);
                for i in 0..m {
                    let mut c = Poly::zero_poly();
                    for j in (i + 1)..=m {
                        c = &c + &Poly::monomial(p.coeff(j), j - 1 - i);
                    }
                    coeffs.push(NfElem::in_field(c, p));
                }
                Poly::new(coeffs)
            };
            let n = self.matrix.rows();
            let ps = &fd.proj_sym;
            for r in 0..n {
                for c in 0..n {
                    // entry (r,c) of P(s)P(t) as a polynomial in t with
                    // coefficients in K_s
                    let mut tpoly: Poly<NfElem> = Poly::zero_poly();
                    for mid in 0..n {
                        let a_s = ps.get(r, mid).clone();
                        let rep_t = ps.get(mid, c).rep();
                        let lifted: Poly<NfElem> = rep_t.map(|co| {
                            NfElem::in_field(Poly::constant(co.clone()), p) * a_s.clone()
                        });
                        tpoly = &tpoly + &lifted;
                    }
                    let reduced = tpoly.rem(&psi);
                    if reduced.coeffs().iter().any(|e| !e.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_i64, rat_int, Sign};

    fn qmat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    fn qvec(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn power_sums_match_roots() {
        // p = (x-1)(x-2) = x^2 - 3x + 2: s0=2, s1=3, s2=5, s3=9, s4=17
        let p = Poly::new(vec![rat_int(2), rat_int(-3), rat_int(1)]);
        let s = power_sums(&p, 4);
        assert_eq!(s, qvec(&[2, 3, 5, 9, 17]));
    }

    #[test]
    fn diagonal_matrix_structure() {
        let a = qmat(&[&[1, 0], &[0, 2]]);
        let s = eigen_structure(&a).unwrap();
        assert_eq!(s.eigenvalues().len(), 2);
        assert!(s.eigenvalues().iter().all(|e| e.real && e.index == 1));
        let mut vals: Vec<Rational> = s
            .eigenvalues()
            .iter()
            .map(|e| e.value.is_rational().unwrap())
            .collect();
        vals.sort();
        assert_eq!(vals, qvec(&[1, 2]));
        for (idx, rec) in s.eigenvalues().iter().enumerate() {
            let p = s.projection(idx).map(|x| x.is_rational().unwrap());
            let expect = if rec.value.is_rational() == Some(rat_int(1)) {
                qmat(&[&[1, 0], &[0, 0]])
            } else {
                qmat(&[&[0, 0], &[0, 1]])
            };
            assert_eq!(p, expect);
        }
    }

    #[test]
    fn jordan_block_structure() {
        let a = qmat(&[&[1, 1], &[0, 1]]);
        let s = eigen_structure(&a).unwrap();
        assert_eq!(s.eigenvalues().len(), 1);
        let rec = &s.eigenvalues()[0];
        assert_eq!(rec.index, 2);
        assert_eq!(rec.value.is_rational(), Some(rat_int(1)));
        assert_eq!(s.nu_max(), 2);
        let p = s.projection(0).map(|x| x.is_rational().unwrap());
        assert_eq!(p, qmat(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rotation_structure() {
        let a = qmat(&[&[0, 1], &[-1, 0]]);
        let s = eigen_structure(&a).unwrap();
        assert_eq!(s.eigenvalues().len(), 2);
        assert!(s.eigenvalues().iter().all(|e| !e.real && e.index == 1));
        assert_eq!(
            s.minpoly(),
            &Poly::new(vec![rat_int(1), rat_int(0), rat_int(1)])
        );
    }

    #[test]
    fn structural_identities_on_examples() {
        for a in [
            qmat(&[&[1, 0], &[0, 2]]),
            qmat(&[&[1, 1], &[0, 1]]),
            qmat(&[&[0, 1], &[-1, 0]]),
            qmat(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]),
            qmat(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]),
            qmat(&[&[0, 2], &[1, 0]]), // eigenvalues +-sqrt2
        ] {
            let s = eigen_structure(&a).unwrap();
            assert!(s.projections_sum_to_identity(), "{a:?}");
            assert!(s.factor_idempotents_check(), "{a:?}");
            assert!(s.projections_idempotent(), "{a:?}");
            assert!(s.projections_nilpotent(), "{a:?}");
            assert!(s.projections_cross_orthogonal(), "{a:?}");
        }
    }

    #[test]
    fn coefficient_table_diagonal() {
        let a = qmat(&[&[1, 0], &[0, 2]]);
        let s = eigen_structure(&a).unwrap();
        let t = coefficient_table(&qvec(&[1, 1]), &s).unwrap();
        assert_eq!(t.real_pairs.len(), 2);
        assert!(t.complex_pairs().is_empty());
        // dominance-descending: eta=2 first
        assert_eq!(t.real_pairs[0].eta.is_rational(), Some(rat_int(2)));
        let u2: Vec<Rational> = t.real_pairs[0]
            .u
            .iter()
            .map(|x| x.is_rational().unwrap())
            .collect();
        assert_eq!(u2, qvec(&[0, 1]));
        let u1: Vec<Rational> = t.real_pairs[1]
            .u
            .iter()
            .map(|x| x.is_rational().unwrap())
            .collect();
        assert_eq!(u1, qvec(&[1, 0]));
        assert!(t.moment_identity_holds(4));
    }

    #[test]
    fn coefficient_table_jordan() {
        let a = qmat(&[&[1, 1], &[0, 1]]);
        let s = eigen_structure(&a).unwrap();
        let t = coefficient_table(&qvec(&[1, 0]), &s).unwrap();
        // u_(1,0) = (1,0), u_(1,1) = (0,1): b^T exp(At) = (e^t, t e^t)
        assert_eq!(t.real_pairs.len(), 2);
        let by_j = |j: usize| {
            t.real_pairs
                .iter()
                .find(|e| e.j == j)
                .unwrap()
                .u
                .iter()
                .map(|x| x.is_rational().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(by_j(0), qvec(&[1, 0]));
        assert_eq!(by_j(1), qvec(&[0, 1]));
        assert!(t.moment_identity_holds(4));
    }

    #[test]
    fn coefficient_table_rotation_conjugacy() {
        let a = qmat(&[&[0, 1], &[-1, 0]]);
        let s = eigen_structure(&a).unwrap();
        let t = coefficient_table(&qvec(&[1, 0]), &s).unwrap();
        assert!(t.real_pairs.is_empty());
        assert_eq!(t.complex_pairs().len(), 1);
        let cp = &t.complex_pairs()[0];
        // u_(i,0) = (1/2, -i/2): re = (1/2, 0), im = (0, -1/2)
        assert_eq!(cp.u_re[0].is_rational(), Some(rat_i64(1, 2)));
        assert_eq!(cp.u_re[1].is_rational(), Some(rat_int(0)));
        assert_eq!(cp.u_im[0].is_rational(), Some(rat_int(0)));
        assert_eq!(cp.u_im[1].is_rational(), Some(rat_i64(-1, 2)));
        assert!(t.moment_identity_holds(4));
        // conjugate u-vectors are componentwise conjugates
        let plus = s
            .eigenvalues()
            .iter()
            .find(|e| e.value.imag_sign() == Sign::Positive)
            .unwrap();
        let minus = s
            .eigenvalues()
            .iter()
            .find(|e| e.value.imag_sign() == Sign::Negative)
            .unwrap();
        let up = t.u_vector(plus, 0).unwrap();
        let um = t.u_vector(minus, 0).unwrap();
        for (x, y) in up.iter().zip(um.iter()) {
            assert_eq!(x.conj(), *y);
        }
    }

    #[test]
    fn decompose_real_vector_examples() {
        let a = qmat(&[&[1, 0], &[0, 2]]);
        let s = eigen_structure(&a).unwrap();
        let comps = s.decompose_real_vector(&qvec(&[1, 0])).unwrap();
        for (rec, comp) in s.eigenvalues().iter().zip(&comps) {
            let vals: Vec<Rational> = comp.iter().map(|x| x.is_rational().unwrap()).collect();
            if rec.value.is_rational() == Some(rat_int(1)) {
                assert_eq!(vals, qvec(&[1, 0]));
            } else {
                assert_eq!(vals, qvec(&[0, 0]));
            }
        }

        // rotation: v = (1,0) splits into conjugate halves (1/2, +-i/2) with
        // the +i eigenspace spanned by (1, i), so v_i = (1/2, i/2)
        let a = qmat(&[&[0, 1], &[-1, 0]]);
        let s = eigen_structure(&a).unwrap();
        let comps = s.decompose_real_vector(&qvec(&[1, 0])).unwrap();
        let mut sum_first = AlgebraicNumber::from_int(0);
        for (rec, comp) in s.eigenvalues().iter().zip(&comps) {
            assert_eq!(comp[0].is_rational(), Some(rat_i64(1, 2)));
            assert_eq!(
                comp[1].imag_sign(),
                rec.value.imag_sign(),
                "component lies in its own eigenspace"
            );
            sum_first = sum_first.add_alg(&comp[0]);
        }
        assert_eq!(sum_first.is_rational(), Some(rat_int(1)));

        // zero vector decomposes to zeros
        let comps = s.decompose_real_vector(&qvec(&[0, 0])).unwrap();
        assert!(comps.iter().all(|c| c.iter().all(|x| x.is_zero())));
    }

    #[test]
    fn dominance_order_examples() {
        let one = AlgebraicNumber::from_int(1);
        let two = AlgebraicNumber::from_int(2);
        assert_eq!(
            dominance_order(&(one.clone(), 0), &(two.clone(), 0)).unwrap(),
            Ordering::Less
        );
        let sqrt2 = isolate_roots(&Poly::new(vec![rat_int(-2), rat_int(0), rat_int(1)]))
            .unwrap()
            .into_iter()
            .find(|r| r.sign_real() == Ok(Sign::Positive))
            .unwrap();
        assert_eq!(
            dominance_order(&(sqrt2.clone(), 3), &(sqrt2.clone(), 1)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            dominance_order(
                &(sqrt2, 0),
                &(AlgebraicNumber::from_rational(rat_i64(3, 2)), 5)
            )
            .unwrap(),
            Ordering::Less
        );
        let rot = eigen_structure(&qmat(&[&[0, 1], &[-1, 0]])).unwrap();
        let i_val = rot.eigenvalues()[0].value.clone();
        assert!(dominance_order(&(i_val, 0), &(one, 0)).is_err());
    }

    #[test]
    fn moment_identity_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..8 {
            let d = rng.gen_range(2..=4);
            let a = Matrix::from_rows(
                (0..d)
                    .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            let b: Vec<Rational> = (0..d).map(|_| rat_int(rng.gen_range(-2..=2))).collect();
            let s = eigen_structure(&a).unwrap();
            let t = coefficient_table(&b, &s).unwrap();
            assert!(t.moment_identity_holds(2 * d), "A = {a:?}, b = {b:?}");
        }
    }
}
