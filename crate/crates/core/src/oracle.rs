//! Untrusted validation machinery: floating-point trajectory simulation,
//! sampling checks of the density and liminf phenomena the decision
//! procedure rests on, and an independent exact decider for instances whose
//! homogenized dynamics are diagonalizable with rational eigenvalues.
//!
//! Nothing in this module ever decides the escape problem on the trusted
//! path; scans validate, the closed-form decider cross-checks.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algnum::AlgebraicNumber;
use crate::escape::{
    homogenize, EscapeInstance, MemberKind, Outcome, RowCertificate, Verdict, Witness,
    WitnessSpace,
};
use crate::lpalg::{fm_core, ConjunctiveSystem, FeasibilityResult, LinearRow, Relation};
use crate::matrix::Matrix;
use crate::num::{rational_to_f64, BigInt, Rational};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("floating-point overflow in simulation")]
    Overflow,
}

// ---- floating-point matrix exponential ----

/// Scaling-and-squaring matrix exponential with a (6,6) Pade approximant;
/// ample accuracy at desk scale after scaling the 1-norm below 1/2.
pub fn expm(a: &Matrix<f64>) -> Matrix<f64> {
    let n = a.rows();
    let mut norm: f64 = 0.0;
    for j in 0..n {
        let col: f64 = (0..n).map(|i| a.get(i, j).abs()).sum();
        norm = norm.max(col);
    }
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let a_scaled = a.map(|v| v * scale);

    // Pade(6,6): N = sum c_j A^j, D = sum (-1)^j c_j A^j
    let mut coeffs = [0.0f64; 7];
    coeffs[0] = 1.0;
    let (p, q) = (6.0, 6.0);
    for j in 0..6 {
        let jf = j as f64;
        coeffs[j + 1] = coeffs[j] * (p - jf) / ((p + q - jf) * (jf + 1.0));
    }
    let mut num = Matrix::<f64>::zero(n, n);
    let mut den = Matrix::<f64>::zero(n, n);
    let mut pw = Matrix::<f64>::identity(n);
    for (j, &c) in coeffs.iter().enumerate() {
        num = num.add(&pw.map(|v| v * c));
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        den = den.add(&pw.map(|v| v * c * sign));
        if j < 6 {
            pw = pw.mul(&a_scaled);
        }
    }
    let mut result = solve_f64(&den, &num);
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// Dense `A X = B` solve with partial pivoting.
fn solve_f64(a: &Matrix<f64>, b: &Matrix<f64>) -> Matrix<f64> {
    let n = a.rows();
    let mut m = a.clone();
    let mut rhs = b.clone();
    for k in 0..n {
        let (pivot, _) = (k..n)
            .map(|i| (i, m.get(i, k).abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot != k {
            for j in 0..n {
                let t = *m.get(k, j);
                m.set(k, j, *m.get(pivot, j));
                m.set(pivot, j, t);
                let t = *rhs.get(k, j);
                rhs.set(k, j, *rhs.get(pivot, j));
                rhs.set(pivot, j, t);
            }
        }
        let d = *m.get(k, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m.get(i, k) / d;
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                let t = m.get(i, j) - f * m.get(k, j);
                m.set(i, j, t);
                let t = rhs.get(i, j) - f * rhs.get(k, j);
                rhs.set(i, j, t);
            }
        }
    }
    for i in 0..n {
        let d = *m.get(i, i);
        for j in 0..n {
            let t = rhs.get(i, j) / d;
            rhs.set(i, j, t);
        }
    }
    rhs
}

/// Sampled trajectory of a linear system.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub points: Vec<Vec<f64>>,
    pub escape_time: Option<f64>,
}

/// Sample `exp(A t) x0` at `samples` uniform times on `[0, horizon]`.
pub fn simulate(
    a: &Matrix<Rational>,
    x0: &[f64],
    horizon: f64,
    samples: usize,
) -> Result<Trajectory, OracleError> {
    if !(horizon > 0.0) {
        return Err(OracleError::Precondition("horizon must be positive".into()));
    }
    if samples < 2 {
        return Err(OracleError::Precondition("need at least 2 samples".into()));
    }
    if x0.len() != a.rows() {
        return Err(OracleError::Precondition(format!(
            "x0 has {} coordinates, matrix is {}x{}",
            x0.len(),
            a.rows(),
            a.cols()
        )));
    }
    let af = a.map(|r| rational_to_f64(r));
    let mut times = Vec::with_capacity(samples);
    let mut points = Vec::with_capacity(samples);
    for k in 0..samples {
        let t = horizon * (k as f64) / ((samples - 1) as f64);
        let e = expm(&af.map(|v| v * t));
        let p = e.mul_vec(&x0.to_vec());
        if p.iter().any(|v| !v.is_finite()) {
            return Err(OracleError::Overflow);
        }
        times.push(t);
        points.push(p);
    }
    Ok(Trajectory {
        times,
        points,
        escape_time: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScanOutcome {
    /// no sampled violation up to the horizon; explicitly not a proof
    Stays,
    /// first sampled constraint violation beyond tolerance, refined by
    /// bisection in time
    Escapes { time: f64 },
}

/// Largest constraint violation of the instance polytope at a point
/// (positive means outside by that margin).
pub fn violation(inst: &EscapeInstance, x: &[f64]) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for (coeffs, _rel, rhs) in inst.constraint_rows() {
        let lhs: f64 = coeffs
            .iter()
            .zip(x)
            .map(|(c, v)| rational_to_f64(&c) * v)
            .sum();
        worst = worst.max(rational_to_f64(&rhs) - lhs);
    }
    worst
}

/// Scan a trajectory for its first sampled exit from the polytope.
pub fn escape_scan(
    inst: &EscapeInstance,
    x0: &[f64],
    horizon: f64,
    tolerance: f64,
) -> Result<ScanOutcome, OracleError> {
    if x0.len() != inst.dim {
        return Err(OracleError::Precondition(format!(
            "x0 has {} coordinates, instance dimension is {}",
            x0.len(),
            inst.dim
        )));
    }
    // simulate the homogenized linear system so affine flows are exact
    let hom = homogenize(inst);
    let mut start = x0.to_vec();
    start.push(1.0);
    let samples = ((horizon * 64.0).ceil() as usize).clamp(64, 20_000);
    let af = hom.a_mat.map(|r| rational_to_f64(r));
    let point_at = |t: f64| -> Vec<f64> {
        let e = expm(&af.map(|v| v * t));
        let p = e.mul_vec(&start);
        p[..inst.dim].to_vec()
    };
    let mut prev_t = 0.0;
    for k in 0..samples {
        let t = horizon * (k as f64) / ((samples - 1) as f64);
        let p = point_at(t);
        if p.iter().any(|v| !v.is_finite()) {
            return Err(OracleError::Overflow);
        }
        if violation(inst, &p) > tolerance {
            // bisect back to the crossing, 1e-6 resolution in t
            let (mut lo, mut hi) = (prev_t, t);
            while hi - lo > 1e-6 {
                let mid = 0.5 * (lo + hi);
                if violation(inst, &point_at(mid)) > tolerance {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Ok(ScanOutcome::Escapes { time: hi });
        }
        prev_t = t;
    }
    Ok(ScanOutcome::Stays)
}

// ---- density and liminf scans ----

/// Smallest `n <= n_max` whose torus orbit point lands within `eps` of the
/// target phases: `dist(n theta_i - psi_i, Z) < eps` for all `i`.
pub fn kronecker_scan(theta: &[f64], psi: &[f64], eps: f64, n_max: u64) -> Option<u64> {
    assert_eq!(theta.len(), psi.len(), "phase count mismatch");
    assert!(eps > 0.0);
    'outer: for n in 1..=n_max {
        for (t, p) in theta.iter().zip(psi) {
            let x = (n as f64) * t - p;
            let frac = (x - x.round()).abs();
            if frac >= eps {
                continue 'outer;
            }
        }
        return Some(n);
    }
    None
}

/// One self-conjugate term `c z_i^k + conj(c) z_i^-k` of a simple Laurent
/// polynomial.
#[derive(Clone, Debug)]
pub struct LaurentTerm {
    pub coeff_re: f64,
    pub coeff_im: f64,
    pub var: usize,
    pub exponent: i64,
}

/// Simple self-conjugate Laurent polynomial evaluated along the orbit
/// `z_i = exp(i theta_i n)`; real-valued by construction.
#[derive(Clone, Debug)]
pub struct LaurentSpec {
    pub terms: Vec<LaurentTerm>,
    pub freqs: Vec<f64>,
}

impl LaurentSpec {
    pub fn eval_at(&self, n: u64) -> f64 {
        let mut acc = 0.0;
        for t in &self.terms {
            let phase = self.freqs[t.var] * (t.exponent as f64) * (n as f64);
            // c e^{i phase} + conj: 2 Re(c e^{i phase})
            acc += 2.0 * (t.coeff_re * phase.cos() - t.coeff_im * phase.sin());
        }
        acc
    }

    pub fn is_syntactically_zero(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.coeff_re == 0.0 && t.coeff_im == 0.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LiminfScan {
    IdenticallyZero,
    MinValue { min: f64, at: u64 },
}

/// Minimum of the self-conjugate evaluation over integer samples
/// `n = 1..=n_max`; empirical confirmation that a negative value shows up.
pub fn liminf_scan(spec: &LaurentSpec, n_max: u64) -> LiminfScan {
    assert!(n_max >= 1);
    if spec.is_syntactically_zero() {
        return LiminfScan::IdenticallyZero;
    }
    let mut best = f64::INFINITY;
    let mut best_n = 1;
    for n in 1..=n_max {
        let v = spec.eval_at(n);
        if v < best {
            best = v;
            best_n = n;
        }
    }
    LiminfScan::MinValue {
        min: best,
        at: best_n,
    }
}

// ---- independent closed-form decider ----

/// Decide trappedness for instances whose homogenized dynamics are
/// diagonalizable with all-rational eigenvalues (checked), dimension at
/// most 3. Fully rational and independent of the spectral/simplex pipeline:
/// eigenvalues by rational root search on the characteristic polynomial,
/// projections by Lagrange interpolation, feasibility by Fourier-Motzkin.
pub fn closed_form_decide(inst: &EscapeInstance) -> Result<Verdict, OracleError> {
    if inst.dim > 3 {
        return Err(OracleError::Precondition(format!(
            "closed-form oracle limited to dimension 3, got {}",
            inst.dim
        )));
    }
    let hom = homogenize(inst);
    let a = &hom.a_mat;
    let n = hom.dim;
    let cp = a.char_poly().expect("square");
    let roots = rational_roots_with_multiplicity(&cp).ok_or_else(|| {
        OracleError::Precondition("characteristic polynomial has irrational roots".into())
    })?;
    // diagonalizability: geometric multiplicities match algebraic ones
    for (root, mult) in &roots {
        let shifted = shift_diag(a, root);
        if shifted.kernel_basis().len() != *mult {
            return Err(OracleError::Precondition(format!(
                "eigenvalue {root} is defective"
            )));
        }
    }
    // Lagrange projections: P_eta = prod_{rho != eta} (A - rho I)/(eta - rho)
    let mut etas: Vec<Rational> = roots.iter().map(|(r, _)| r.clone()).collect();
    etas.sort_by(|x, y| y.cmp(x)); // dominance-descending
    let mut projections = Vec::with_capacity(etas.len());
    for eta in &etas {
        let mut p = Matrix::<Rational>::identity(n);
        for rho in &etas {
            if rho == eta {
                continue;
            }
            let factor = shift_diag(a, rho);
            let denom = eta - rho;
            p = p.mul(&factor).map(|v| v / &denom);
        }
        projections.push(p);
    }

    // per-row members over the rationals, dominant eigenvalue first
    let rows = hom.rows();
    let mut members: Vec<Vec<(Option<usize>, Vec<LinearRow<Rational>>)>> = Vec::new();
    for (coeffs, rel) in &rows {
        let u_rows: Vec<Vec<Rational>> = projections
            .iter()
            .map(|p| Matrix::vec_mul(coeffs, p))
            .collect();
        let mut row_members = Vec::new();
        for (k, u) in u_rows.iter().enumerate() {
            if u.iter().all(|c| c.is_zero()) {
                continue;
            }
            let mut sys = vec![LinearRow::new(u.clone(), Relation::Gt, Rational::zero())];
            for higher in &u_rows[..k] {
                if !higher.iter().all(|c| c.is_zero()) {
                    sys.push(LinearRow::new(
                        higher.clone(),
                        Relation::Eq,
                        Rational::zero(),
                    ));
                }
            }
            row_members.push((Some(k), sys));
        }
        if *rel == Relation::Ge {
            let sys = u_rows
                .iter()
                .filter(|u| !u.iter().all(|c| c.is_zero()))
                .map(|u| LinearRow::new(u.clone(), Relation::Eq, Rational::zero()))
                .collect();
            row_members.push((None, sys));
        }
        members.push(row_members);
    }

    // depth-first member choice, Fourier-Motzkin feasibility
    fn dfs(
        members: &[Vec<(Option<usize>, Vec<LinearRow<Rational>>)>],
        depth: usize,
        acc: &mut ConjunctiveSystem<Rational>,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if depth == members.len() {
            return Some(chosen.clone());
        }
        for (mi, (_, rows)) in members[depth].iter().enumerate() {
            let saved = acc.rows.len();
            acc.rows.extend(rows.iter().cloned());
            let open = matches!(fm_core(acc, 2_000_000), Ok(FeasibilityResult::Feasible(_)));
            if open {
                chosen.push(mi);
                if let Some(hit) = dfs(members, depth + 1, acc, chosen) {
                    return Some(hit);
                }
                chosen.pop();
            }
            acc.rows.truncate(saved);
        }
        None
    }
    let mut acc = ConjunctiveSystem::new(n);
    let mut chosen = Vec::new();
    let Some(selection) = dfs(&members, 0, &mut acc, &mut chosen) else {
        return Ok(Verdict {
            outcome: Outcome::AllEscape,
            witness: None,
            certificate: vec![],
            degenerate_observable: false,
        });
    };

    // witness: re-solve the winning branch with y = 1
    let mut sys = ConjunctiveSystem::new(n);
    for (ri, &mi) in selection.iter().enumerate() {
        sys.rows.extend(members[ri][mi].1.iter().cloned());
    }
    let mut y_eq = vec![Rational::zero(); n];
    y_eq[n - 1] = Rational::one();
    sys.rows
        .push(LinearRow::new(y_eq, Relation::Eq, Rational::one()));
    let point = match fm_core(&sys, 2_000_000) {
        Ok(FeasibilityResult::Feasible(p)) => p,
        _ => unreachable!("winning branch with unit scaling must stay feasible"),
    };

    let mut certificate = Vec::new();
    let mut degenerate = false;
    for (ri, ((_, rel), &mi)) in rows.iter().zip(&selection).enumerate() {
        let kind = match members[ri][mi].0 {
            Some(k) => MemberKind::Dominant {
                eta: AlgebraicNumber::from_rational(etas[k].clone()),
                j: 0,
            },
            None => {
                degenerate = true;
                MemberKind::AllZero
            }
        };
        let zeroed_real = match members[ri][mi].0 {
            Some(k) => etas[..k]
                .iter()
                .map(|e| (AlgebraicNumber::from_rational(e.clone()), 0))
                .collect(),
            None => etas
                .iter()
                .map(|e| (AlgebraicNumber::from_rational(e.clone()), 0))
                .collect(),
        };
        certificate.push(RowCertificate {
            row_index: ri,
            relation: *rel,
            chosen: kind,
            zeroed_real,
            zeroed_complex: vec![],
        });
    }

    Ok(Verdict {
        outcome: Outcome::TrappedExists,
        witness: Some(Witness {
            point: point[..n - 1]
                .iter()
                .map(|r| AlgebraicNumber::from_rational(r.clone()))
                .collect(),
            space: WitnessSpace::Original,
        }),
        certificate,
        degenerate_observable: degenerate,
    })
}

fn shift_diag(a: &Matrix<Rational>, lambda: &Rational) -> Matrix<Rational> {
    let mut m = a.clone();
    for i in 0..a.rows() {
        let t = m.get(i, i).clone() - lambda.clone();
        m.set(i, i, t);
    }
    m
}

/// All rational roots with multiplicities; `None` if they do not exhaust
/// the polynomial's degree.
fn rational_roots_with_multiplicity(
    p: &crate::poly::Poly<Rational>,
) -> Option<Vec<(Rational, usize)>> {
    let mut rest = p.monic();
    let mut out: Vec<(Rational, usize)> = Vec::new();
    while rest.deg0() > 0 {
        let root = find_rational_root(&rest)?;
        let lin = crate::poly::Poly::new(vec![-root.clone(), Rational::one()]);
        let mut mult = 0;
        loop {
            let (q, r) = rest.divrem(&lin);
            if !r.is_zero_poly() {
                break;
            }
            rest = q;
            mult += 1;
        }
        out.push((root, mult));
    }
    Some(out)
}

fn find_rational_root(p: &crate::poly::Poly<Rational>) -> Option<Rational> {
    let ints = crate::factor::integer_primitive(p);
    let c0 = ints.first()?.clone();
    let lc = ints.last()?.clone();
    if c0.is_zero() {
        return Some(Rational::zero());
    }
    let p_divs = divisors_u64(&c0)?;
    let q_divs = divisors_u64(&lc)?;
    for q in &q_divs {
        for pp in &p_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(*pp as i64 * sign), BigInt::from(*q));
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors_u64(v: &BigInt) -> Option<Vec<u64>> {
    use num_traits::ToPrimitive;
    let a = v.abs().to_u64()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= a {
        if a % d == 0 {
            out.push(d);
            out.push(a / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::escape::ConstraintBlock;
    use crate::num::rat_int;

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

    fn nonstrict(a: &[&[i64]], off: &[i64], b2: &[&[i64]], rhs: &[i64]) -> EscapeInstance {
        EscapeInstance::new(
            qmat(a),
            qvec(off),
            ConstraintBlock::empty(a.len()),
            ConstraintBlock {
                mat: qmat(b2),
                rhs: qvec(rhs),
            },
        )
        .unwrap()
    }

    #[test]
    fn expm_rotation_quarter_turn() {
        let a = Matrix::from_rows(vec![vec![0.0, 1.0], vec![-1.0, 0.0]]);
        let t = std::f64::consts::FRAC_PI_2;
        let e = expm(&a.map(|v| v * t));
        let p = e.mul_vec(&[1.0, 0.0]);
        assert!((p[0] - 0.0).abs() < 1e-12, "{p:?}");
        assert!((p[1] + 1.0).abs() < 1e-12, "{p:?}");
    }

    #[test]
    fn simulate_examples() {
        // constant trajectory
        let tr = simulate(&qmat(&[&[0, 0], &[0, 0]]), &[2.0, -1.0], 5.0, 6).unwrap();
        assert_eq!(tr.times[0], 0.0);
        assert!(tr.points.iter().all(|p| p == &vec![2.0, -1.0]));
        // scalar growth hits e at t = 1
        let tr = simulate(&qmat(&[&[1]]), &[1.0], 1.0, 11).unwrap();
        assert!((tr.points[10][0] - std::f64::consts::E).abs() < 1e-9);
        // diagonal system matches closed form to 1e-8 relative for t <= 10
        let tr = simulate(&qmat(&[&[-2, 0], &[0, 3]]), &[1.0, 1.0], 10.0, 101).unwrap();
        for (t, p) in tr.times.iter().zip(&tr.points) {
            let e0 = (-2.0 * t).exp();
            let e1 = (3.0 * t).exp();
            assert!((p[0] - e0).abs() <= 1e-8 * e0.abs().max(1.0));
            assert!((p[1] - e1).abs() <= 1e-8 * e1.abs().max(1.0));
        }
    }

    #[test]
    fn simulate_validation() {
        assert!(simulate(&qmat(&[&[1]]), &[1.0], 0.0, 5).is_err());
        assert!(simulate(&qmat(&[&[1]]), &[1.0], 1.0, 1).is_err());
        assert!(simulate(&qmat(&[&[1]]), &[1.0, 2.0], 1.0, 5).is_err());
    }

    #[test]
    fn escape_scan_rotation_exits_at_pi_third() {
        let inst = nonstrict(&[&[0, 1], &[-1, 0]], &[0, 0], &[&[1, 0]], &[1]);
        match escape_scan(&inst, &[2.0, 0.0], 10.0, 1e-9).unwrap() {
            ScanOutcome::Escapes { time } => {
                assert!((time - std::f64::consts::FRAC_PI_3).abs() < 1e-3, "{time}");
            }
            ScanOutcome::Stays => panic!("rotation must escape"),
        }
    }

    #[test]
    fn escape_scan_growth_stays() {
        let inst = nonstrict(&[&[1]], &[0], &[&[1]], &[1]);
        assert_eq!(
            escape_scan(&inst, &[1.0], 20.0, 1e-9).unwrap(),
            ScanOutcome::Stays
        );
    }

    #[test]
    fn escape_scan_constant_stays() {
        let inst = nonstrict(&[&[0, 0], &[0, 0]], &[0, 0], &[&[1, 0]], &[0]);
        assert_eq!(
            escape_scan(&inst, &[1.0, 5.0], 50.0, 1e-9).unwrap(),
            ScanOutcome::Stays
        );
    }

    #[test]
    fn kronecker_examples() {
        // sqrt2 orbit first reaches 0.5 within 0.05 at n = 6
        // (frac(6 sqrt2) ~ 0.4853); n = 76 (frac ~ 0.4802) also qualifies
        let hit = kronecker_scan(&[2f64.sqrt()], &[0.5], 0.05, 100);
        assert_eq!(hit, Some(6));
        let x = 76.0 * 2f64.sqrt() - 0.5;
        assert!((x - x.round()).abs() < 0.05);
        // loose tolerance hits immediately
        let hit = kronecker_scan(&[2f64.sqrt()], &[0.0], 0.5, 100);
        assert_eq!(hit, Some(1));
        // rational frequency orbit {0, 1/2} never gets near 1/3
        let hit = kronecker_scan(&[0.5], &[1.0 / 3.0], 0.01, 100_000);
        assert_eq!(hit, None);
    }

    #[test]
    fn liminf_examples() {
        // z + conj z at theta = 1: values 2 cos n, minimum near -2
        let spec = LaurentSpec {
            terms: vec![LaurentTerm {
                coeff_re: 1.0,
                coeff_im: 0.0,
                var: 0,
                exponent: 1,
            }],
            freqs: vec![1.0],
        };
        match liminf_scan(&spec, 100) {
            LiminfScan::MinValue { min, .. } => {
                assert!(min < -1.97, "{min}");
            }
            _ => panic!(),
        }
        // empty spec is syntactically zero
        let zero = LaurentSpec {
            terms: vec![],
            freqs: vec![1.0],
        };
        assert_eq!(liminf_scan(&zero, 10), LiminfScan::IdenticallyZero);
        // i z - i conj z: values -2 sin(n sqrt2)
        let spec = LaurentSpec {
            terms: vec![LaurentTerm {
                coeff_re: 0.0,
                coeff_im: 1.0,
                var: 0,
                exponent: 1,
            }],
            freqs: vec![2f64.sqrt()],
        };
        match liminf_scan(&spec, 200) {
            LiminfScan::MinValue { min, .. } => assert!(min < 0.0, "{min}"),
            _ => panic!(),
        }
    }

    #[test]
    fn closed_form_examples() {
        // x' = x, P = {x >= 1}: trapped
        let inst = nonstrict(&[&[1]], &[0], &[&[1]], &[1]);
        let v = closed_form_decide(&inst).unwrap();
        assert_eq!(v.outcome, Outcome::TrappedExists);
        assert!(v.witness.is_some());
        // x' = -x, P = {x >= 1}: all escape
        let inst = nonstrict(&[&[-1]], &[0], &[&[1]], &[1]);
        assert_eq!(
            closed_form_decide(&inst).unwrap().outcome,
            Outcome::AllEscape
        );
        // diag(1,-1), P = first quadrant: trapped
        let inst = nonstrict(&[&[1, 0], &[0, -1]], &[0, 0], &[&[1, 0], &[0, 1]], &[0, 0]);
        assert_eq!(
            closed_form_decide(&inst).unwrap().outcome,
            Outcome::TrappedExists
        );
    }

    #[test]
    fn closed_form_preconditions() {
        // rotation has non-real eigenvalues
        let inst = nonstrict(&[&[0, 1], &[-1, 0]], &[0, 0], &[&[1, 0]], &[1]);
        assert!(closed_form_decide(&inst).is_err());
        // shear is defective
        let inst = nonstrict(&[&[1, 1], &[0, 1]], &[0, 0], &[&[1, 0]], &[1]);
        assert!(closed_form_decide(&inst).is_err());
        // dimension 4 out of oracle range
        let inst = nonstrict(
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            &[0, 0, 0, 0],
            &[&[1, 0, 0, 0]],
            &[0],
        );
        assert!(closed_form_decide(&inst).is_err());
    }

    #[test]
    fn closed_form_agrees_with_decide_on_examples() {
        use crate::escape::{decide_escape, Limits};
        let instances = [
            nonstrict(&[&[1]], &[0], &[&[1]], &[1]),
            nonstrict(&[&[-1]], &[0], &[&[1]], &[1]),
            nonstrict(&[&[1, 0], &[0, -1]], &[0, 0], &[&[1, 0], &[0, 1]], &[0, 0]),
            nonstrict(&[&[1, 0], &[0, -1]], &[0, 0], &[&[1, 0], &[0, 1]], &[1, 1]),
            nonstrict(&[&[2]], &[1], &[&[1]], &[3]),
            nonstrict(&[&[-1]], &[1], &[&[1]], &[0]),
            nonstrict(&[&[-2]], &[-1], &[&[1]], &[1]),
        ];
        for inst in &instances {
            let a = decide_escape(inst, &Limits::default()).unwrap();
            let b = closed_form_decide(inst).unwrap();
            assert_eq!(a.outcome, b.outcome, "{inst:?}");
        }
    }
}
