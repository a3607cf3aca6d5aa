//! Exact feasibility of conjunctions of linear constraints (`=`, `>=`, `>`)
//! over an ordered exact field, typically real algebraic numbers.
//!
//! Two independent deciders live here: [`feasible`], a two-phase dense
//! simplex with Bland's rule where strict rows share one slack scalar that
//! is then maximized, and [`fm_eliminate`], Fourier-Motzkin elimination with
//! strict/non-strict bookkeeping, kept at oracle scale. Both return exact
//! witness points that are re-verified symbolically before they escape.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::num::{OrderedField, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("system too large for elimination: {vars} vars, {rows} rows")]
    ScaleLimit { vars: usize, rows: usize },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

#[derive(Clone, Debug)]
pub struct LinearRow<T> {
    pub coeffs: Vec<T>,
    pub rel: Relation,
    pub rhs: T,
}

impl<T: OrderedField> LinearRow<T> {
    pub fn new(coeffs: Vec<T>, rel: Relation, rhs: T) -> Self {
        LinearRow { coeffs, rel, rhs }
    }

    fn eval(&self, x: &[T]) -> T {
        let mut acc = T::zero();
        for (c, v) in self.coeffs.iter().zip(x) {
            acc = acc + c.clone() * v.clone();
        }
        acc
    }

    pub fn satisfied_by(&self, x: &[T]) -> bool {
        let lhs = self.eval(x);
        let diff = lhs - self.rhs.clone();
        match self.rel {
            Relation::Eq => diff.sign() == Sign::Zero,
            Relation::Ge => diff.sign() != Sign::Negative,
            Relation::Gt => diff.sign() == Sign::Positive,
        }
    }
}

/// Conjunction of linear constraint rows over `n_vars` free real variables.
#[derive(Clone, Debug)]
pub struct ConjunctiveSystem<T> {
    pub n_vars: usize,
    pub rows: Vec<LinearRow<T>>,
}

impl<T: OrderedField> ConjunctiveSystem<T> {
    pub fn new(n_vars: usize) -> Self {
        ConjunctiveSystem {
            n_vars,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<T>, rel: Relation, rhs: T) {
        debug_assert_eq!(coeffs.len(), self.n_vars);
        self.rows.push(LinearRow::new(coeffs, rel, rhs));
    }

    pub fn satisfied_by(&self, x: &[T]) -> bool {
        self.rows.iter().all(|r| r.satisfied_by(x))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityResult<T> {
    Infeasible,
    Feasible(Vec<T>),
}

impl<T> FeasibilityResult<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }
}

/// Exact feasibility over the reals via two-phase simplex.
///
/// Strict rows `c^T x > r` become `c^T x - s >= r` with one shared slack
/// `s in [0, 1]` whose maximum is computed exactly; the system has a point
/// satisfying all strict rows strictly iff that maximum is positive.
/// Returned points satisfy every row exactly (checked before returning).
pub fn feasible<T: OrderedField>(sys: &ConjunctiveSystem<T>) -> FeasibilityResult<T> {
    let n = sys.n_vars;
    // constant rows decide immediately
    let mut rows: Vec<&LinearRow<T>> = Vec::new();
    for row in &sys.rows {
        if row.coeffs.iter().all(|c| c.sign() == Sign::Zero) {
            let ok = match row.rel {
                Relation::Eq => row.rhs.sign() == Sign::Zero,
                Relation::Ge => row.rhs.sign() != Sign::Positive,
                Relation::Gt => row.rhs.sign() == Sign::Negative,
            };
            if !ok {
                return FeasibilityResult::Infeasible;
            }
        } else {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        let point = vec![T::zero(); n];
        return FeasibilityResult::Feasible(point);
    }
    let has_strict = rows.iter().any(|r| r.rel == Relation::Gt);

    // columns: p_0..p_{n-1}, n_0..n_{n-1}, [s], slack per inequality row,
    // [s-cap slack]; artificials appended by the tableau
    let s_col = 2 * n;
    let mut ncols = 2 * n + usize::from(has_strict);
    let mut slack_cols: Vec<Option<usize>> = Vec::with_capacity(rows.len());
    for row in &rows {
        match row.rel {
            Relation::Eq => slack_cols.push(None),
            _ => {
                slack_cols.push(Some(ncols));
                ncols += 1;
            }
        }
    }
    let cap_slack = if has_strict {
        let c = ncols;
        ncols += 1;
        Some(c)
    } else {
        None
    };

    let mut a: Vec<Vec<T>> = Vec::with_capacity(rows.len() + 1);
    let mut b: Vec<T> = Vec::with_capacity(rows.len() + 1);
    for (i, row) in rows.iter().enumerate() {
        let mut r = vec![T::zero(); ncols];
        for (j, c) in row.coeffs.iter().enumerate() {
            r[j] = c.clone();
            r[n + j] = -c.clone();
        }
        if row.rel == Relation::Gt {
            r[s_col] = -T::one();
        }
        if let Some(sc) = slack_cols[i] {
            r[sc] = -T::one(); // surplus: c^T x - sigma = r
        }
        a.push(r);
        b.push(row.rhs.clone());
    }
    if let (true, Some(cs)) = (has_strict, cap_slack) {
        let mut r = vec![T::zero(); ncols];
        r[s_col] = T::one();
        r[cs] = T::one();
        a.push(r);
        b.push(T::one());
    }

    let mut tab = Tableau::new(a, b, ncols);
    if !tab.phase_one() {
        return FeasibilityResult::Infeasible;
    }
    if has_strict {
        // maximize s, bounded by the cap row
        tab.optimize_max(s_col);
        let s_val = tab.value_of(s_col);
        if s_val.sign() != Sign::Positive {
            return FeasibilityResult::Infeasible;
        }
    }
    let mut point = Vec::with_capacity(n);
    for j in 0..n {
        point.push(tab.value_of(j) - tab.value_of(n + j));
    }
    assert!(
        sys.satisfied_by(&point),
        "simplex produced a point that fails symbolic verification"
    );
    FeasibilityResult::Feasible(point)
}

/// Dense exact simplex tableau in equality form `Az = b, z >= 0` with
/// artificial variables and Bland's anti-cycling rule.
struct Tableau<T> {
    a: Vec<Vec<T>>,
    b: Vec<T>,
    basis: Vec<usize>,
    ncols: usize,     // structural columns (artificials come after)
    total_cols: usize,
}

impl<T: OrderedField> Tableau<T> {
    fn new(mut a: Vec<Vec<T>>, mut b: Vec<T>, ncols: usize) -> Self {
        let m = a.len();
        // normalize rhs nonnegative, add artificial basis
        for i in 0..m {
            if b[i].sign() == Sign::Negative {
                for c in a[i].iter_mut() {
                    *c = -c.clone();
                }
                b[i] = -b[i].clone();
            }
        }
        let total_cols = ncols + m;
        let mut basis = Vec::with_capacity(m);
        for (i, row) in a.iter_mut().enumerate() {
            row.resize(total_cols, T::zero());
            row[ncols + i] = T::one();
            basis.push(ncols + i);
        }
        Tableau {
            a,
            b,
            basis,
            ncols,
            total_cols,
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].inv();
        for c in self.a[row].iter_mut() {
            *c = c.clone() * inv.clone();
        }
        self.b[row] = self.b[row].clone() * inv;
        for i in 0..self.a.len() {
            if i == row {
                continue;
            }
            let f = self.a[i][col].clone();
            if f.sign() == Sign::Zero {
                continue;
            }
            for j in 0..self.total_cols {
                let upd = self.a[i][j].clone() - f.clone() * self.a[row][j].clone();
                self.a[i][j] = upd;
            }
            self.b[i] = self.b[i].clone() - f * self.b[row].clone();
        }
        self.basis[row] = col;
    }

    /// Reduced cost of column `j` for objective `c` (sparse over columns).
    fn reduced_cost(&self, obj: &dyn Fn(usize) -> T, j: usize) -> T {
        let mut acc = obj(j);
        for (i, &bv) in self.basis.iter().enumerate() {
            let cb = obj(bv);
            if cb.sign() != Sign::Zero {
                acc = acc - cb * self.a[i][j].clone();
            }
        }
        acc
    }

    /// Bland-rule minimization of the given objective over allowed columns.
    fn minimize(&mut self, obj: &dyn Fn(usize) -> T, allowed: &dyn Fn(usize) -> bool) {
        loop {
            let mut entering = None;
            for j in 0..self.total_cols {
                if !allowed(j) || self.basis.contains(&j) {
                    continue;
                }
                if self.reduced_cost(obj, j).sign() == Sign::Negative {
                    entering = Some(j);
                    break; // Bland: lowest index
                }
            }
            let Some(col) = entering else {
                return;
            };
            // ratio test, Bland ties by lowest basis variable
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.a.len() {
                if self.a[i][col].sign() != Sign::Positive {
                    continue;
                }
                let ratio = self.b[i].clone() / self.a[i][col].clone();
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((bi, best)) => {
                        use std::cmp::Ordering;
                        match ratio.compare(best) {
                            Ordering::Less => leave = Some((i, ratio)),
                            Ordering::Equal => {
                                if self.basis[i] < self.basis[*bi] {
                                    leave = Some((i, ratio));
                                }
                            }
                            Ordering::Greater => {}
                        }
                    }
                }
            }
            let Some((row, _)) = leave else {
                // unbounded in this direction; callers bound their
                // objectives, so this only happens for phase-1 bugs
                panic!("unbounded exact LP objective");
            };
            self.pivot(row, col);
        }
    }

    /// Drive the artificial-variable sum to zero; false means infeasible.
    fn phase_one(&mut self) -> bool {
        let ncols = self.ncols;
        let obj = move |j: usize| {
            if j >= ncols {
                T::one()
            } else {
                T::zero()
            }
        };
        self.minimize(&obj, &|_| true);
        // optimum value = sum of basic artificial values
        let mut total = T::zero();
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv >= self.ncols {
                total = total + self.b[i].clone();
            }
        }
        if total.sign() != Sign::Zero {
            return false;
        }
        // pivot lingering zero-level artificials out where possible
        for i in 0..self.basis.len() {
            if self.basis[i] < self.ncols {
                continue;
            }
            if let Some(col) = (0..self.ncols).find(|&j| self.a[i][j].sign() != Sign::Zero) {
                self.pivot(i, col);
            }
        }
        true
    }

    /// Maximize a single structural variable (artificials barred).
    fn optimize_max(&mut self, var: usize) {
        let ncols = self.ncols;
        let obj = move |j: usize| {
            if j == var {
                -T::one()
            } else {
                T::zero()
            }
        };
        self.minimize(&obj, &move |j: usize| j < ncols);
    }

    fn value_of(&self, col: usize) -> T {
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv == col {
                return self.b[i].clone();
            }
        }
        T::zero()
    }
}

/// Fourier-Motzkin elimination with strict/non-strict bookkeeping,
/// restricted to oracle scale (`n <= 6`, `rows <= 12`). Independent of the
/// simplex path; same outcome contract.
pub fn fm_eliminate<T: OrderedField>(
    sys: &ConjunctiveSystem<T>,
) -> Result<FeasibilityResult<T>, LpError> {
    if sys.n_vars > 6 || sys.rows.len() > 12 {
        return Err(LpError::ScaleLimit {
            vars: sys.n_vars,
            rows: sys.rows.len(),
        });
    }
    fm_core(sys, 100_000)
}

/// Elimination core with a configurable intermediate-row cap; used directly
/// by the closed-form oracle at slightly larger sizes.
pub(crate) fn fm_core<T: OrderedField>(
    sys: &ConjunctiveSystem<T>,
    row_cap: usize,
) -> Result<FeasibilityResult<T>, LpError> {
    let n = sys.n_vars;
    let mut rows: Vec<LinearRow<T>> = sys.rows.clone();

    // substitute equalities away first; record for back-substitution
    let mut eq_stack: Vec<(usize, Vec<T>, T)> = Vec::new(); // var = expr . x + const
    loop {
        let Some(pos) = rows.iter().position(|r| {
            r.rel == Relation::Eq && r.coeffs.iter().any(|c| c.sign() != Sign::Zero)
        }) else {
            break;
        };
        let row = rows.remove(pos);
        let var = row
            .coeffs
            .iter()
            .rposition(|c| c.sign() != Sign::Zero)
            .unwrap();
        let pivot = row.coeffs[var].clone();
        // x_var = (rhs - sum_{j != var} c_j x_j) / pivot
        let mut expr = vec![T::zero(); n];
        for (j, c) in row.coeffs.iter().enumerate() {
            if j != var {
                expr[j] = -(c.clone() / pivot.clone());
            }
        }
        let cnst = row.rhs.clone() / pivot;
        for r in rows.iter_mut() {
            let f = std::mem::replace(&mut r.coeffs[var], T::zero());
            if f.sign() == Sign::Zero {
                continue;
            }
            for j in 0..n {
                let upd = r.coeffs[j].clone() + f.clone() * expr[j].clone();
                r.coeffs[j] = upd;
            }
            r.rhs = r.rhs.clone() - f * cnst.clone();
        }
        eq_stack.push((var, expr, cnst));
    }

    // check and drop constant rows as they appear
    let check_constants = |rows: &mut Vec<LinearRow<T>>| -> bool {
        let mut ok = true;
        rows.retain(|r| {
            if r.coeffs.iter().any(|c| c.sign() != Sign::Zero) {
                return true;
            }
            let sat = match r.rel {
                Relation::Eq => r.rhs.sign() == Sign::Zero,
                Relation::Ge => r.rhs.sign() != Sign::Positive,
                Relation::Gt => r.rhs.sign() == Sign::Negative,
            };
            ok &= sat;
            false
        });
        ok
    };
    if !check_constants(&mut rows) {
        return Ok(FeasibilityResult::Infeasible);
    }

    // eliminate inequality variables; remember each level for the
    // back-substitution pass
    struct Level<T> {
        var: usize,
        bounds: Vec<LinearRow<T>>, // rows mentioning var at this level
    }
    let mut levels: Vec<Level<T>> = Vec::new();
    loop {
        // deterministic choice: fewest lower*upper products, then lowest idx
        let mut choice: Option<(usize, usize)> = None;
        for v in 0..n {
            if eq_stack.iter().any(|(ev, _, _)| *ev == v)
                || levels.iter().any(|l| l.var == v)
            {
                continue;
            }
            let lowers = rows
                .iter()
                .filter(|r| r.coeffs[v].sign() == Sign::Positive)
                .count();
            let uppers = rows
                .iter()
                .filter(|r| r.coeffs[v].sign() == Sign::Negative)
                .count();
            if lowers + uppers == 0 {
                continue;
            }
            let cost = lowers * uppers;
            if choice.map_or(true, |(_, c)| cost < c) {
                choice = Some((v, cost));
            }
        }
        let Some((var, _)) = choice else {
            break;
        };
        let (mentioning, neutral): (Vec<_>, Vec<_>) = rows
            .into_iter()
            .partition(|r| r.coeffs[var].sign() != Sign::Zero);
        let mut new_rows = neutral;
        for low in mentioning
            .iter()
            .filter(|r| r.coeffs[var].sign() == Sign::Positive)
        {
            for up in mentioning
                .iter()
                .filter(|r| r.coeffs[var].sign() == Sign::Negative)
            {
                // low: c_v > 0, up: c_v' < 0; combine to cancel var
                let lo_c = low.coeffs[var].clone();
                let up_c = up.coeffs[var].clone();
                let mut coeffs = Vec::with_capacity(n);
                for j in 0..n {
                    let v1 = low.coeffs[j].clone() * (-up_c.clone());
                    let v2 = up.coeffs[j].clone() * lo_c.clone();
                    coeffs.push(v1 + v2);
                }
                let rhs = low.rhs.clone() * (-up_c) + up.rhs.clone() * lo_c;
                let rel = if low.rel == Relation::Gt || up.rel == Relation::Gt {
                    Relation::Gt
                } else {
                    Relation::Ge
                };
                new_rows.push(LinearRow::new(coeffs, rel, rhs));
            }
        }
        if new_rows.len() > row_cap {
            return Err(LpError::ScaleLimit {
                vars: n,
                rows: new_rows.len(),
            });
        }
        rows = new_rows;
        if !check_constants(&mut rows) {
            return Ok(FeasibilityResult::Infeasible);
        }
        levels.push(Level {
            var,
            bounds: mentioning,
        });
    }
    debug_assert!(rows.is_empty(), "only constant rows can remain");

    // feasible: rebuild a point, most recently eliminated variable first
    let mut point = vec![T::zero(); n];
    for level in levels.iter().rev() {
        let mut lower: Option<(T, bool)> = None; // (value, strict)
        let mut upper: Option<(T, bool)> = None;
        for row in &level.bounds {
            let c = row.coeffs[level.var].clone();
            let mut rest = row.rhs.clone();
            for j in 0..n {
                if j != level.var {
                    rest = rest - row.coeffs[j].clone() * point[j].clone();
                }
            }
            let bound = rest / c.clone();
            let strict = row.rel == Relation::Gt;
            if c.sign() == Sign::Positive {
                let better = lower
                    .as_ref()
                    .map_or(true, |(b, bs)| match bound.compare(b) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Equal => strict && !bs,
                        std::cmp::Ordering::Less => false,
                    });
                if better {
                    lower = Some((bound, strict));
                }
            } else {
                let better = upper
                    .as_ref()
                    .map_or(true, |(b, bs)| match bound.compare(b) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => strict && !bs,
                        std::cmp::Ordering::Greater => false,
                    });
                if better {
                    upper = Some((bound, strict));
                }
            }
        }
        let two = T::from_i64(2);
        point[level.var] = match (lower, upper) {
            (None, None) => T::zero(),
            (Some((l, ls)), None) => {
                if ls {
                    l + T::one()
                } else {
                    l
                }
            }
            (None, Some((u, us))) => {
                if us {
                    u - T::one()
                } else {
                    u
                }
            }
            (Some((l, ls)), Some((u, us))) => {
                use std::cmp::Ordering;
                match l.compare(&u) {
                    Ordering::Less => (l + u) / two,
                    Ordering::Equal => {
                        debug_assert!(!ls && !us, "FM emitted an empty interval");
                        l
                    }
                    Ordering::Greater => unreachable!("FM guarantees projected feasibility"),
                }
            }
        };
    }
    for (var, expr, cnst) in eq_stack.iter().rev() {
        let mut v = cnst.clone();
        for j in 0..n {
            v = v + expr[j].clone() * point[j].clone();
        }
        point[*var] = v;
    }
    assert!(
        sys.satisfied_by(&point),
        "elimination produced a point that fails symbolic verification"
    );
    Ok(FeasibilityResult::Feasible(point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::{isolate_roots, AlgebraicNumber};
    use crate::num::{rat_i64, rat_int, Rational};
    use crate::poly::Poly;

    fn qsys(n: usize, rows: &[(&[i64], Relation, i64)]) -> ConjunctiveSystem<Rational> {
        let mut s = ConjunctiveSystem::new(n);
        for (c, rel, r) in rows {
            s.push(c.iter().map(|&v| rat_int(v)).collect(), *rel, rat_int(*r));
        }
        s
    }

    fn sqrt_n(n: i64) -> AlgebraicNumber {
        isolate_roots(&Poly::new(vec![rat_int(-n), rat_int(0), rat_int(1)]))
            .unwrap()
            .into_iter()
            .find(|r| r.sign_real() == Ok(Sign::Positive))
            .unwrap()
    }

    #[test]
    fn contradiction_is_infeasible() {
        let s = qsys(1, &[(&[1], Relation::Gt, 0), (&[1], Relation::Eq, 0)]);
        assert_eq!(feasible(&s), FeasibilityResult::Infeasible);
        assert_eq!(fm_eliminate(&s).unwrap(), FeasibilityResult::Infeasible);
    }

    #[test]
    fn interval_is_feasible() {
        let s = qsys(1, &[(&[1], Relation::Ge, 1), (&[-1], Relation::Ge, -2)]);
        let FeasibilityResult::Feasible(p) = feasible(&s) else {
            panic!("expected feasible");
        };
        assert!(s.satisfied_by(&p));
        assert!(fm_eliminate(&s).unwrap().is_feasible());
    }

    #[test]
    fn algebraic_strict_system() {
        // sqrt2 * x > 1, -x > -1: satisfied on (1/sqrt2, 1)
        let mut s: ConjunctiveSystem<AlgebraicNumber> = ConjunctiveSystem::new(1);
        s.push(vec![sqrt_n(2)], Relation::Gt, AlgebraicNumber::from_int(1));
        s.push(
            vec![AlgebraicNumber::from_int(-1)],
            Relation::Gt,
            AlgebraicNumber::from_int(-1),
        );
        let FeasibilityResult::Feasible(p) = feasible(&s) else {
            panic!("expected feasible");
        };
        assert!(s.satisfied_by(&p));
        // the candidate point 3/4 from the contract works too
        assert!(s.satisfied_by(&[AlgebraicNumber::from_rational(rat_i64(3, 4))]));
        assert!(fm_eliminate(&s).unwrap().is_feasible());
    }

    #[test]
    fn fm_substitution_example() {
        let s = qsys(
            2,
            &[
                (&[1, 1], Relation::Eq, 1),
                (&[1, 0], Relation::Ge, 0),
                (&[0, 1], Relation::Ge, 0),
                (&[1, 0], Relation::Gt, 1),
            ],
        );
        assert_eq!(fm_eliminate(&s).unwrap(), FeasibilityResult::Infeasible);
        assert_eq!(feasible(&s), FeasibilityResult::Infeasible);
    }

    #[test]
    fn empty_system_is_feasible_at_origin() {
        let s = qsys(2, &[]);
        assert_eq!(
            fm_eliminate(&s).unwrap(),
            FeasibilityResult::Feasible(vec![rat_int(0), rat_int(0)])
        );
        assert!(feasible(&s).is_feasible());
    }

    #[test]
    fn strict_interior_required() {
        // x >= 0, -x >= 0 pins x = 0; x > 0 then fails
        let s = qsys(
            1,
            &[
                (&[1], Relation::Ge, 0),
                (&[-1], Relation::Ge, 0),
                (&[1], Relation::Gt, 0),
            ],
        );
        assert_eq!(feasible(&s), FeasibilityResult::Infeasible);
        assert_eq!(fm_eliminate(&s).unwrap(), FeasibilityResult::Infeasible);
    }

    #[test]
    fn equality_only_system() {
        let s = qsys(
            2,
            &[(&[1, 1], Relation::Eq, 3), (&[1, -1], Relation::Eq, 1)],
        );
        let FeasibilityResult::Feasible(p) = feasible(&s) else {
            panic!();
        };
        assert_eq!(p, vec![rat_int(2), rat_int(1)]);
        assert!(fm_eliminate(&s).unwrap().is_feasible());
    }

    #[test]
    fn scale_limit_reported() {
        let s = qsys(7, &[(&[1, 0, 0, 0, 0, 0, 0], Relation::Ge, 0)]);
        assert!(matches!(
            fm_eliminate(&s),
            Err(LpError::ScaleLimit { vars: 7, .. })
        ));
    }

    #[test]
    fn zero_coefficient_strict_row() {
        // "0 > 0" must be infeasible, "0 >= 0" feasible
        let s = qsys(1, &[(&[0], Relation::Gt, 0)]);
        assert_eq!(feasible(&s), FeasibilityResult::Infeasible);
        let s = qsys(1, &[(&[0], Relation::Ge, 0)]);
        assert!(feasible(&s).is_feasible());
    }

    #[test]
    fn random_oracle_agreement_rational() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..80 {
            let n = rng.gen_range(1..=4);
            let m = rng.gen_range(1..=8);
            let mut s = ConjunctiveSystem::new(n);
            for _ in 0..m {
                let coeffs: Vec<Rational> =
                    (0..n).map(|_| rat_int(rng.gen_range(-3..=3))).collect();
                let rel = match rng.gen_range(0..3) {
                    0 => Relation::Eq,
                    1 => Relation::Ge,
                    _ => Relation::Gt,
                };
                s.push(coeffs, rel, rat_int(rng.gen_range(-3..=3)));
            }
            let a = feasible(&s);
            let b = fm_eliminate(&s).unwrap();
            assert_eq!(
                a.is_feasible(),
                b.is_feasible(),
                "simplex and elimination disagree on {s:?}"
            );
        }
    }

    #[test]
    fn adding_rows_never_helps() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let n = rng.gen_range(1..=3);
            let m = rng.gen_range(1..=5);
            let mut s = ConjunctiveSystem::new(n);
            for _ in 0..m {
                let coeffs: Vec<Rational> =
                    (0..n).map(|_| rat_int(rng.gen_range(-2..=2))).collect();
                let rel = if rng.gen_bool(0.5) {
                    Relation::Ge
                } else {
                    Relation::Gt
                };
                s.push(coeffs, rel, rat_int(rng.gen_range(-2..=2)));
            }
            let before = feasible(&s).is_feasible();
            s.push(
                (0..n).map(|_| rat_int(rng.gen_range(-2..=2))).collect(),
                Relation::Ge,
                rat_int(rng.gen_range(-2..=2)),
            );
            let after = feasible(&s).is_feasible();
            assert!(!(!before && after), "adding a row made a system feasible");
        }
    }

    #[test]
    fn positive_row_scaling_preserves_outcome() {
        let base = qsys(
            2,
            &[
                (&[1, 1], Relation::Ge, 1),
                (&[1, -1], Relation::Gt, 0),
                (&[-1, 0], Relation::Ge, -5),
            ],
        );
        let before = feasible(&base).is_feasible();
        let mut scaled = base.clone();
        for (i, row) in scaled.rows.iter_mut().enumerate() {
            let f = rat_i64(3 + i as i64, 2);
            for c in row.coeffs.iter_mut() {
                *c = c.clone() * f.clone();
            }
            row.rhs = row.rhs.clone() * f;
        }
        assert_eq!(feasible(&scaled).is_feasible(), before);
    }
}
