//! The escape decision: homogenize the affine instance, expand each
//! polytope row into its candidate dominance members, and search for a
//! choice of one member per row whose conjunction is feasible over the
//! reals. A feasible choice yields an eventually-trapped witness and a
//! per-row spectral certificate; exhaustion of all choices proves that
//! every initial point escapes.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algnum::AlgebraicNumber;
use crate::lpalg::{feasible, ConjunctiveSystem, FeasibilityResult, LinearRow, Relation};
use crate::matrix::Matrix;
use crate::num::{Rational, Sign};
use crate::spectral::{coefficient_table, eigen_structure, CoefficientTable, SpectralError};

#[derive(Debug, Error)]
pub enum EscapeError {
    #[error("invalid instance: {0}")]
    Instance(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("resource limit exceeded after {calls} feasibility calls in {elapsed:?}")]
    ResourceLimit { calls: u64, elapsed: Duration },
}

/// Constraint block `M x (rel) rhs`, one relation for the whole block.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintBlock {
    pub mat: Matrix<Rational>,
    pub rhs: Vec<Rational>,
}

impl ConstraintBlock {
    pub fn empty(dim: usize) -> Self {
        ConstraintBlock {
            mat: Matrix::zero(0, dim),
            rhs: vec![],
        }
    }

    pub fn rows(&self) -> usize {
        self.mat.rows()
    }
}

/// Affine escape instance: dynamics `x' = A x + a` and polytope
/// `B1 x > b1 /\ B2 x >= b2`.
#[derive(Clone, Debug, PartialEq)]
pub struct EscapeInstance {
    pub dim: usize,
    pub a_mat: Matrix<Rational>,
    pub offset: Vec<Rational>,
    pub strict: ConstraintBlock,
    pub nonstrict: ConstraintBlock,
}

impl EscapeInstance {
    pub fn new(
        a_mat: Matrix<Rational>,
        offset: Vec<Rational>,
        strict: ConstraintBlock,
        nonstrict: ConstraintBlock,
    ) -> Result<Self, EscapeError> {
        let dim = a_mat.rows();
        if dim == 0 {
            return Err(EscapeError::Instance("dimension must be positive".into()));
        }
        if !a_mat.is_square() {
            return Err(EscapeError::Instance(format!(
                "dynamics matrix is {}x{}, not square",
                a_mat.rows(),
                a_mat.cols()
            )));
        }
        if offset.len() != dim {
            return Err(EscapeError::Instance(format!(
                "offset length {} does not match dimension {dim}",
                offset.len()
            )));
        }
        for (name, block) in [("strict", &strict), ("nonstrict", &nonstrict)] {
            if block.rows() > 0 && block.mat.cols() != dim {
                return Err(EscapeError::Instance(format!(
                    "{name} block has {} columns, expected {dim}",
                    block.mat.cols()
                )));
            }
            if block.rhs.len() != block.rows() {
                return Err(EscapeError::Instance(format!(
                    "{name} block has {} rows but {} right-hand sides",
                    block.rows(),
                    block.rhs.len()
                )));
            }
        }
        if strict.rows() + nonstrict.rows() == 0 {
            return Err(EscapeError::Instance(
                "at least one constraint row is required".into(),
            ));
        }
        Ok(EscapeInstance {
            dim,
            a_mat,
            offset,
            strict,
            nonstrict,
        })
    }

    /// Rows as `(coefficients, relation, rhs)`, strict block first.
    pub fn constraint_rows(&self) -> Vec<(Vec<Rational>, Relation, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.strict.rows() {
            out.push((
                self.strict.mat.row(i),
                Relation::Gt,
                self.strict.rhs[i].clone(),
            ));
        }
        for i in 0..self.nonstrict.rows() {
            out.push((
                self.nonstrict.mat.row(i),
                Relation::Ge,
                self.nonstrict.rhs[i].clone(),
            ));
        }
        out
    }
}

/// Linear instance on a polyhedral cone in dimension `d+1`; the last
/// coordinate is the homogenizing variable `y`, constrained `y > 0` by the
/// final strict row.
#[derive(Clone, Debug)]
pub struct HomogeneousInstance {
    pub dim: usize,
    pub a_mat: Matrix<Rational>,
    /// strict rows, original strict block first, the `y > 0` row last
    pub strict_rows: Vec<Vec<Rational>>,
    pub nonstrict_rows: Vec<Vec<Rational>>,
}

impl HomogeneousInstance {
    /// All rows in decision order (strict first), each with its relation.
    pub fn rows(&self) -> Vec<(Vec<Rational>, Relation)> {
        self.strict_rows
            .iter()
            .map(|r| (r.clone(), Relation::Gt))
            .chain(
                self.nonstrict_rows
                    .iter()
                    .map(|r| (r.clone(), Relation::Ge)),
            )
            .collect()
    }
}

/// Append the homogenizing coordinate:
/// `A' = [[A, a], [0, 0]]`, `B1' = [[B1, -b1], [0, 1]]`, `B2' = [B2, -b2]`.
/// The homogeneous instance is positive iff the original is; a trapped
/// point maps as `x0 <-> (x0, 1)` with positive rescaling in the converse.
pub fn homogenize(inst: &EscapeInstance) -> HomogeneousInstance {
    let d = inst.dim;
    let mut a = Matrix::zero(d + 1, d + 1);
    for i in 0..d {
        for j in 0..d {
            a.set(i, j, inst.a_mat.get(i, j).clone());
        }
        a.set(i, d, inst.offset[i].clone());
    }
    let mut strict_rows = Vec::with_capacity(inst.strict.rows() + 1);
    for i in 0..inst.strict.rows() {
        let mut row = inst.strict.mat.row(i);
        row.push(-inst.strict.rhs[i].clone());
        strict_rows.push(row);
    }
    let mut y_row = vec![Rational::zero(); d + 1];
    y_row[d] = Rational::one();
    strict_rows.push(y_row);
    let mut nonstrict_rows = Vec::with_capacity(inst.nonstrict.rows());
    for i in 0..inst.nonstrict.rows() {
        let mut row = inst.nonstrict.mat.row(i);
        row.push(-inst.nonstrict.rhs[i].clone());
        nonstrict_rows.push(row);
    }
    HomogeneousInstance {
        dim: d + 1,
        a_mat: a,
        strict_rows,
        nonstrict_rows,
    }
}

/// Identity of a dominance pair in a certificate.
#[derive(Clone, Debug)]
pub enum MemberKind {
    /// `u_(eta,j)^T x > 0` with all dominating real pairs zeroed
    Dominant { eta: AlgebraicNumber, j: usize },
    /// every coefficient of the row's observable zeroed (`>=` rows only)
    AllZero,
}

/// One member of a row's eventually-trapped union: a conjunction of linear
/// rows over the homogeneous space.
#[derive(Clone, Debug)]
pub struct MemberSystem {
    pub kind: MemberKind,
    pub rows: Vec<LinearRow<AlgebraicNumber>>,
    /// real pairs forced to zero (the pairs dominating the chosen one)
    pub zeroed_real: Vec<(AlgebraicNumber, usize)>,
    /// conjugate-pair representatives forced to zero
    pub zeroed_complex: Vec<(AlgebraicNumber, usize)>,
    /// `u^T x >= 0` rows of the real pairs below the chosen one; these are
    /// not part of the member, only of the trapped-witness ladder
    lower_nonneg: Vec<LinearRow<AlgebraicNumber>>,
}

fn is_zero_vec(v: &[AlgebraicNumber]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn alg_row(u: &[AlgebraicNumber], rel: Relation) -> LinearRow<AlgebraicNumber> {
    LinearRow::new(u.to_vec(), rel, AlgebraicNumber::zero())
}

/// Expand one polytope row into its candidate members, dominance-descending;
/// for `>=` rows the all-zero member comes last. Members whose strict pair
/// has an identically-zero coefficient vector are unsatisfiable and skipped.
pub fn per_constraint_members(table: &CoefficientTable, rel: Relation) -> Vec<MemberSystem> {
    debug_assert!(rel != Relation::Eq);
    let complex = table.complex_pairs();
    let mut complex_rows = Vec::new();
    let mut zeroed_complex = Vec::new();
    for cp in complex {
        let mut vacuous = true;
        if !is_zero_vec(&cp.u_re) {
            complex_rows.push(alg_row(&cp.u_re, Relation::Eq));
            vacuous = false;
        }
        if !is_zero_vec(&cp.u_im) {
            complex_rows.push(alg_row(&cp.u_im, Relation::Eq));
            vacuous = false;
        }
        if !vacuous {
            zeroed_complex.push((cp.eta.clone(), cp.j));
        }
    }

    let mut out = Vec::new();
    for (idx, entry) in table.real_pairs.iter().enumerate() {
        if is_zero_vec(&entry.u) {
            continue; // `0 > 0` can never hold
        }
        let mut rows = vec![alg_row(&entry.u, Relation::Gt)];
        let mut zeroed_real = Vec::new();
        for higher in &table.real_pairs[..idx] {
            if !is_zero_vec(&higher.u) {
                rows.push(alg_row(&higher.u, Relation::Eq));
                zeroed_real.push((higher.eta.clone(), higher.j));
            }
        }
        rows.extend(complex_rows.iter().cloned());
        let lower_nonneg = table.real_pairs[idx + 1..]
            .iter()
            .filter(|low| !is_zero_vec(&low.u))
            .map(|low| alg_row(&low.u, Relation::Ge))
            .collect();
        out.push(MemberSystem {
            kind: MemberKind::Dominant {
                eta: entry.eta.clone(),
                j: entry.j,
            },
            rows,
            zeroed_real,
            zeroed_complex: zeroed_complex.clone(),
            lower_nonneg,
        });
    }
    if rel == Relation::Ge {
        let mut rows = Vec::new();
        let mut zeroed_real = Vec::new();
        for entry in &table.real_pairs {
            if !is_zero_vec(&entry.u) {
                rows.push(alg_row(&entry.u, Relation::Eq));
                zeroed_real.push((entry.eta.clone(), entry.j));
            }
        }
        rows.extend(complex_rows.iter().cloned());
        out.push(MemberSystem {
            kind: MemberKind::AllZero,
            rows,
            zeroed_real,
            zeroed_complex,
            lower_nonneg: vec![],
        });
    }
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    TrappedExists,
    AllEscape,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WitnessSpace {
    Original,
    Homogeneous,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub point: Vec<AlgebraicNumber>,
    pub space: WitnessSpace,
}

#[derive(Clone, Debug)]
pub struct RowCertificate {
    pub row_index: usize,
    pub relation: Relation,
    pub chosen: MemberKind,
    pub zeroed_real: Vec<(AlgebraicNumber, usize)>,
    pub zeroed_complex: Vec<(AlgebraicNumber, usize)>,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub certificate: Vec<RowCertificate>,
    pub degenerate_observable: bool,
}

/// Branch budget (counted in feasibility calls) and wall-clock limit.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_feasibility_calls: u64,
    pub timeout: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_feasibility_calls: 1_000_000,
            timeout: Duration::from_secs(300),
        }
    }
}

struct Search<'a> {
    members: &'a [Vec<MemberSystem>],
    limits: &'a Limits,
    started: Instant,
    calls: u64,
}

impl Search<'_> {
    fn check_budget(&mut self) -> Result<(), EscapeError> {
        self.calls += 1;
        if self.calls > self.limits.max_feasibility_calls
            || self.started.elapsed() > self.limits.timeout
        {
            return Err(EscapeError::ResourceLimit {
                calls: self.calls,
                elapsed: self.started.elapsed(),
            });
        }
        Ok(())
    }

    /// Depth-first choice of one member per row with incremental pruning;
    /// returns the canonically first feasible selection.
    fn dfs(
        &mut self,
        depth: usize,
        acc: &mut ConjunctiveSystem<AlgebraicNumber>,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>, EscapeError> {
        if depth == self.members.len() {
            return Ok(Some(chosen.clone()));
        }
        for (mi, member) in self.members[depth].iter().enumerate() {
            let saved = acc.rows.len();
            acc.rows.extend(member.rows.iter().cloned());
            self.check_budget()?;
            if feasible(acc).is_feasible() {
                chosen.push(mi);
                if let Some(hit) = self.dfs(depth + 1, acc, chosen)? {
                    return Ok(Some(hit));
                }
                chosen.pop();
            }
            acc.rows.truncate(saved);
        }
        Ok(None)
    }
}

/// Decide the polytope escape problem for an affine instance.
///
/// `TrappedExists` comes with an eventually-trapped witness in the original
/// space (accepted by [`verify_witness`]) and a per-row certificate naming
/// the chosen dominant pair and every zeroed pair. Exceeding the budget is
/// an error, never a verdict.
pub fn decide_escape(inst: &EscapeInstance, limits: &Limits) -> Result<Verdict, EscapeError> {
    let hom = homogenize(inst);
    let spec = eigen_structure(&hom.a_mat)?;
    let rows = hom.rows();
    let mut members = Vec::with_capacity(rows.len());
    for (coeffs, rel) in &rows {
        let table = coefficient_table(coeffs, &spec)
            .map_err(|e| EscapeError::Instance(e.to_string()))?;
        members.push(per_constraint_members(&table, *rel));
    }

    let mut search = Search {
        members: &members,
        limits,
        started: Instant::now(),
        calls: 0,
    };
    let mut acc = ConjunctiveSystem::new(hom.dim);
    let mut chosen = Vec::new();
    let hit = search.dfs(0, &mut acc, &mut chosen)?;

    let Some(selection) = hit else {
        return Ok(Verdict {
            outcome: Outcome::AllEscape,
            witness: None,
            certificate: vec![],
            degenerate_observable: false,
        });
    };

    let mut certificate = Vec::with_capacity(rows.len());
    let mut degenerate = false;
    for (ri, ((_, rel), &mi)) in rows.iter().zip(&selection).enumerate() {
        let m = &members[ri][mi];
        if matches!(m.kind, MemberKind::AllZero) {
            degenerate = true;
        }
        certificate.push(RowCertificate {
            row_index: ri,
            relation: *rel,
            chosen: m.kind.clone(),
            zeroed_real: m.zeroed_real.clone(),
            zeroed_complex: m.zeroed_complex.clone(),
        });
    }

    let witness = extract_witness(&hom, &rows, &members, &selection);
    Ok(Verdict {
        outcome: Outcome::TrappedExists,
        witness: Some(witness),
        certificate,
        degenerate_observable: degenerate,
    })
}

/// Pull a witness point out of the winning branch. The branch system is
/// augmented in a deterministic ladder: first demanding nonnegative
/// subdominant coefficients plus membership at time zero (each row
/// observable is then a sum of nonnegative terms, so the point is trapped
/// outright), then membership at time zero alone, then the bare member
/// system. All candidate rows are homogeneous, so the cone scales freely
/// and the normalization `y = 1` costs nothing; back-mapping drops the last
/// coordinate.
fn extract_witness(
    hom: &HomogeneousInstance,
    rows: &[(Vec<Rational>, Relation)],
    members: &[Vec<MemberSystem>],
    selection: &[usize],
) -> Witness {
    let n = hom.dim;
    let base: Vec<LinearRow<AlgebraicNumber>> = selection
        .iter()
        .enumerate()
        .flat_map(|(ri, &mi)| members[ri][mi].rows.iter().cloned())
        .collect();

    let mut y_eq = vec![AlgebraicNumber::zero(); n];
    y_eq[n - 1] = AlgebraicNumber::one();
    let y_row = LinearRow::new(y_eq, Relation::Eq, AlgebraicNumber::one());

    let t0_rows: Vec<LinearRow<AlgebraicNumber>> = rows
        .iter()
        .map(|(coeffs, rel)| {
            let c = coeffs
                .iter()
                .map(|r| AlgebraicNumber::from_rational(r.clone()))
                .collect();
            LinearRow::new(c, *rel, AlgebraicNumber::zero())
        })
        .collect();

    let mut ladder: Vec<Vec<LinearRow<AlgebraicNumber>>> = Vec::new();
    // level 2: subdominant coefficients nonnegative + membership at t = 0
    {
        let mut lvl = base.clone();
        for (ri, &mi) in selection.iter().enumerate() {
            lvl.extend(members[ri][mi].lower_nonneg.iter().cloned());
        }
        lvl.extend(t0_rows.iter().cloned());
        lvl.push(y_row.clone());
        ladder.push(lvl);
    }
    // level 1: membership at t = 0 only
    {
        let mut lvl = base.clone();
        lvl.extend(t0_rows.iter().cloned());
        lvl.push(y_row.clone());
        ladder.push(lvl);
    }
    // level 0: the bare member system
    {
        let mut lvl = base.clone();
        lvl.push(y_row.clone());
        ladder.push(lvl);
    }

    for rows_lvl in ladder {
        let sys = ConjunctiveSystem {
            n_vars: n,
            rows: rows_lvl,
        };
        if let FeasibilityResult::Feasible(point) = feasible(&sys) {
            return finish_witness(point);
        }
    }

    // contingency: solve the branch alone and rescale by hand; only
    // reachable if the y > 0 row were ever absent
    let sys = ConjunctiveSystem {
        n_vars: n,
        rows: base,
    };
    match feasible(&sys) {
        FeasibilityResult::Feasible(point) => {
            let y = point[n - 1].clone();
            if y.sign_real() == Ok(Sign::Positive) {
                let scaled: Vec<AlgebraicNumber> = point
                    .iter()
                    .take(n - 1)
                    .map(|c| c.try_div(&y).expect("y positive"))
                    .collect();
                Witness {
                    point: scaled,
                    space: WitnessSpace::Original,
                }
            } else {
                Witness {
                    point,
                    space: WitnessSpace::Homogeneous,
                }
            }
        }
        FeasibilityResult::Infeasible => unreachable!("winning branch must stay feasible"),
    }
}

fn finish_witness(point: Vec<AlgebraicNumber>) -> Witness {
    let n = point.len();
    debug_assert!(point[n - 1].is_rational() == Some(Rational::one()));
    Witness {
        point: point.into_iter().take(n - 1).collect(),
        space: WitnessSpace::Original,
    }
}

/// Outcome of a symbolic witness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessCheck {
    Accepted,
    Rejected(String),
}

impl WitnessCheck {
    pub fn is_accepted(&self) -> bool {
        matches!(self, WitnessCheck::Accepted)
    }
}

/// Accept iff the point is eventually trapped, symbolically: for every
/// constraint row of the homogenized instance, all conjugate-pair
/// coefficients of `b^T exp(At) (x,1)` vanish exactly and the dominant
/// nonzero real pair has a positive coefficient, or all coefficients vanish
/// on a nonstrict row.
pub fn verify_witness(
    x: &[AlgebraicNumber],
    inst: &EscapeInstance,
) -> Result<WitnessCheck, EscapeError> {
    if x.len() != inst.dim {
        return Err(EscapeError::Instance(format!(
            "witness has {} coordinates, instance dimension is {}",
            x.len(),
            inst.dim
        )));
    }
    let hom = homogenize(inst);
    let spec = eigen_structure(&hom.a_mat)?;
    let mut xh: Vec<AlgebraicNumber> = x.to_vec();
    xh.push(AlgebraicNumber::one());

    for (ri, (coeffs, rel)) in hom.rows().iter().enumerate() {
        let table = coefficient_table(coeffs, &spec)
            .map_err(|e| EscapeError::Instance(e.to_string()))?;
        for cp in table.complex_pairs() {
            let re = dot(&cp.u_re, &xh);
            let im = dot(&cp.u_im, &xh);
            if !re.is_zero() || !im.is_zero() {
                return Ok(WitnessCheck::Rejected(format!(
                    "row {ri}: conjugate-pair coefficient at (eta = {}, j = {}) is nonzero",
                    cp.eta, cp.j
                )));
            }
        }
        // real pairs are dominance-descending: the first nonzero
        // coefficient belongs to the dominant pair
        let mut dominant_positive = false;
        for entry in &table.real_pairs {
            let c = dot(&entry.u, &xh);
            if c.is_zero() {
                continue;
            }
            if c.sign_real().expect("real coefficient") == Sign::Positive {
                dominant_positive = true;
                break;
            }
            return Ok(WitnessCheck::Rejected(format!(
                "row {ri}: dominant coefficient at (eta = {}, j = {}) is not positive",
                entry.eta, entry.j
            )));
        }
        if !dominant_positive && *rel == Relation::Gt {
            return Ok(WitnessCheck::Rejected(format!(
                "row {ri}: observable identically zero on a strict row"
            )));
        }
    }
    Ok(WitnessCheck::Accepted)
}

fn dot(u: &[AlgebraicNumber], x: &[AlgebraicNumber]) -> AlgebraicNumber {
    let mut acc = AlgebraicNumber::zero();
    for (a, b) in u.iter().zip(x) {
        acc = acc.add_alg(&a.mul_alg(b));
    }
    acc
}
