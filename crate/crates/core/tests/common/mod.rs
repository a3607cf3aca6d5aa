//! Shared test fixtures: the curated verdict corpus with hand-derived
//! closed-form answers, plus small builders used across integration tests.

use polyescape_core::escape::{ConstraintBlock, EscapeInstance, Outcome};
use polyescape_core::matrix::Matrix;
use polyescape_core::num::{rat_i64, rat_int, Rational};

pub fn qmat(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect(),
    )
}

pub fn qvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn block(rows: &[&[i64]], rhs: &[i64]) -> ConstraintBlock {
    ConstraintBlock {
        mat: qmat(rows),
        rhs: qvec(rhs),
    }
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub instance: EscapeInstance,
    pub expected: Outcome,
}

fn entry(
    name: &'static str,
    a: &[&[i64]],
    offset: &[i64],
    strict: (&[&[i64]], &[i64]),
    nonstrict: (&[&[i64]], &[i64]),
    expected: Outcome,
) -> CorpusEntry {
    let dim = a.len();
    let sb = if strict.0.is_empty() {
        ConstraintBlock::empty(dim)
    } else {
        block(strict.0, strict.1)
    };
    let nb = if nonstrict.0.is_empty() {
        ConstraintBlock::empty(dim)
    } else {
        block(nonstrict.0, nonstrict.1)
    };
    CorpusEntry {
        name,
        instance: EscapeInstance::new(qmat(a), qvec(offset), sb, nb).unwrap(),
        expected,
    }
}

/// Curated instances (d <= 4) with closed-form-known verdicts. Each carries
/// its one-line derivation.
pub fn corpus() -> Vec<CorpusEntry> {
    use Outcome::{AllEscape, TrappedExists};
    let t = TrappedExists;
    let e = AllEscape;
    let none: (&[&[i64]], &[i64]) = (&[], &[]);
    vec![
        // e^t x0 >= 1 for x0 >= 1
        entry("growth_ge1", &[&[1]], &[0], none, (&[&[1]], &[1]), t),
        // e^t x0 > 0 for x0 > 0
        entry("growth_gt0", &[&[1]], &[0], (&[&[1]], &[0]), none, t),
        // e^-t x0 decays through 1 for every start
        entry("decay_ge1", &[&[-1]], &[0], none, (&[&[1]], &[1]), e),
        // e^-t x0 stays positive for x0 > 0
        entry("decay_gt0", &[&[-1]], &[0], (&[&[1]], &[0]), none, t),
        // e^-t x0 stays nonnegative
        entry("decay_ge0", &[&[-1]], &[0], none, (&[&[1]], &[0]), t),
        // constants: any x0 >= 1 works
        entry("constant_ge1", &[&[0]], &[0], none, (&[&[1]], &[1]), t),
        // constants with a strict row: x0 = 4
        entry("constant_gt3", &[&[0]], &[0], (&[&[1]], &[3]), none, t),
        // -x0 e^t >= 1 for x0 <= -1 (growth trapped on the negative side)
        entry("growth_neg_side", &[&[1]], &[0], none, (&[&[-1]], &[1]), t),
        // x0 + t >= 0 for x0 >= 0 (pure drift up)
        entry("drift_up_ok", &[&[0]], &[1], none, (&[&[1]], &[0]), t),
        // x0 + t <= 0 fails at t = -x0 (drift crosses the wall)
        entry("drift_up_bad", &[&[0]], &[1], none, (&[&[-1]], &[0]), e),
        // x0 - t >= 0 fails at t = x0
        entry("drift_down_bad", &[&[0]], &[-1], none, (&[&[1]], &[0]), e),
        // affine growth: (x0 + 1/2) e^2t - 1/2 increases; x0 = 4 stays > 3
        entry("affine_growth_gt3", &[&[2]], &[1], (&[&[1]], &[3]), none, t),
        // decay out of the band [1, 2]
        entry(
            "decay_band",
            &[&[-1]],
            &[0],
            none,
            (&[&[1], &[-1]], &[1, -2]),
            e,
        ),
        // constants inside the open unit interval
        entry(
            "constant_open_band",
            &[&[0]],
            &[0],
            (&[&[1], &[-1]], &[0, -1]),
            none,
            t,
        ),
        // saddle, first quadrant: (1,1) -> (e^t, e^-t) keeps both signs
        entry(
            "saddle_quadrant",
            &[&[1, 0], &[0, -1]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, 1]], &[0, 0]),
            t,
        ),
        // saddle with floor 1 on the decaying coordinate: x2 sinks below 1
        entry(
            "saddle_box",
            &[&[1, 0], &[0, -1]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, 1]], &[1, 1]),
            e,
        ),
        // two growing modes, trap on the invariant axis x2 = 0
        entry(
            "diag_growth_axis",
            &[&[1, 0], &[0, 2]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, -1]], &[1, 0]),
            t,
        ),
        // stable node, first quadrant is invariant
        entry(
            "stable_quadrant",
            &[&[-1, 0], &[0, -2]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, 1], &[1, 1]], &[0, 0, 0]),
            t,
        ),
        // equal growth: e^t (x1 - x2) >= 1 from (1, 0)
        entry(
            "equal_growth_diff",
            &[&[1, 0], &[0, 1]],
            &[0, 0],
            none,
            (&[&[1, -1]], &[1]),
            t,
        ),
        // Jordan shear: (1,0) gives x1(t) = e^t
        entry(
            "shear_ge1",
            &[&[1, 1], &[0, 1]],
            &[0, 0],
            none,
            (&[&[1, 0]], &[1]),
            t,
        ),
        // shear with x2 <= -1: x1(t) = e^t (x1 + t x2) -> -inf
        entry(
            "shear_down",
            &[&[1, 1], &[0, 1]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, -1]], &[1, 1]),
            e,
        ),
        // double integrator keeps the closed first quadrant invariant
        entry(
            "integrator_quadrant",
            &[&[0, 1], &[0, 0]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, 1]], &[0, 0]),
            t,
        ),
        // double integrator with x2 <= -1: x1 drifts to -inf
        entry(
            "integrator_conflict",
            &[&[0, 1], &[0, 0]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, -1]], &[0, 1]),
            e,
        ),
        // pure rotation leaves every half-plane at distance 1
        entry(
            "rotation_ge1",
            &[&[0, 1], &[-1, 0]],
            &[0, 0],
            none,
            (&[&[1, 0]], &[1]),
            e,
        ),
        // closed quadrant contains the trapped origin
        entry(
            "rotation_quadrant_closed",
            &[&[0, 1], &[-1, 0]],
            &[0, 0],
            none,
            (&[&[1, 0], &[0, 1]], &[0, 0]),
            t,
        ),
        // open quadrant: nonzero orbits rotate out, origin excluded
        entry(
            "rotation_quadrant_strict",
            &[&[0, 1], &[-1, 0]],
            &[0, 0],
            (&[&[1, 0], &[0, 1]], &[0, 0]),
            none,
            e,
        ),
        // expanding spiral sweeps every direction
        entry(
            "spiral_out",
            &[&[1, 1], &[-1, 1]],
            &[0, 0],
            none,
            (&[&[1, 0]], &[1]),
            e,
        ),
        // contracting spiral: the origin sits inside the open half-plane
        entry(
            "spiral_in_open",
            &[&[-1, 1], &[-1, -1]],
            &[0, 0],
            (&[&[1, 0]], &[-1]),
            none,
            t,
        ),
        // faster rotation, same escape
        entry(
            "rotation_speed2",
            &[&[0, 2], &[-2, 0]],
            &[0, 0],
            none,
            (&[&[1, 0]], &[1]),
            e,
        ),
        // rotation plus growing third axis: trap on the axis
        entry(
            "rot_growth_axis",
            &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]],
            &[0, 0, 0],
            none,
            (&[&[0, 0, 1]], &[1]),
            t,
        ),
        // same dynamics, wall on a rotating coordinate
        entry(
            "rot_growth_wall",
            &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]],
            &[0, 0, 0],
            none,
            (&[&[1, 0, 0]], &[1]),
            e,
        ),
        // mixed: axis trap with an extra nonnegativity row satisfied at 0
        entry(
            "rot_growth_mixed",
            &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]],
            &[0, 0, 0],
            none,
            (&[&[0, 0, 1], &[1, 0, 0]], &[1, 0]),
            t,
        ),
        // affine stable node with fixed point (1, 0) on the wall
        entry(
            "affine_fixed_point",
            &[&[-1, 0], &[0, -1]],
            &[1, 0],
            none,
            (&[&[1, 0]], &[1]),
            t,
        ),
        // rotation about center (0,-1): every orbit dips below x2 = -1-r
        entry(
            "affine_rotation_drift",
            &[&[0, 1], &[-1, 0]],
            &[1, 0],
            none,
            (&[&[0, 1]], &[0]),
            e,
        ),
        // d = 4: shear block traps the first axis, rotation block idles
        entry(
            "shear4_mixed",
            &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
            &[0, 0, 0, 0],
            none,
            (&[&[1, 0, 0, 0]], &[1]),
            t,
        ),
        // decay with a strict floor above the fixed point
        entry("decay_strict_above", &[&[-1]], &[0], (&[&[1]], &[1]), none, e),
        // constraint row 0*x >= -1 holds everywhere
        entry("zero_row_true", &[&[1]], &[0], none, (&[&[0]], &[-1]), t),
        // constraint row 0*x >= 1 holds nowhere
        entry("zero_row_false", &[&[1]], &[0], none, (&[&[0]], &[1]), e),
    ]
}

/// Positive scaling of a single corpus entry, for invariance tests: the
/// entry with every constraint row multiplied by the given positive factor.
pub fn scale_rows(inst: &EscapeInstance, factor: &Rational) -> EscapeInstance {
    assert!(factor > &Rational::from_integer(0.into()));
    let scale_block = |b: &ConstraintBlock| ConstraintBlock {
        mat: b.mat.map(|v| v * factor),
        rhs: b.rhs.iter().map(|v| v * factor).collect(),
    };
    EscapeInstance::new(
        inst.a_mat.clone(),
        inst.offset.clone(),
        scale_block(&inst.strict),
        scale_block(&inst.nonstrict),
    )
    .unwrap()
}

/// Similarity transform `A -> S A S^-1`, `a -> S a`, rows `-> rows S^-1`.
pub fn similarity(inst: &EscapeInstance, s: &Matrix<Rational>, s_inv: &Matrix<Rational>) -> EscapeInstance {
    let a = s.mul(&inst.a_mat).mul(s_inv);
    let offset = s.mul_vec(&inst.offset);
    let tf_block = |b: &ConstraintBlock| {
        if b.rows() == 0 {
            return ConstraintBlock::empty(inst.dim);
        }
        ConstraintBlock {
            mat: b.mat.mul(s_inv),
            rhs: b.rhs.clone(),
        }
    };
    EscapeInstance::new(a, offset, tf_block(&inst.strict), tf_block(&inst.nonstrict)).unwrap()
}

/// Drop one constraint row (index over strict rows then nonstrict rows);
/// `None` if that would leave the instance without rows.
pub fn remove_row(inst: &EscapeInstance, idx: usize) -> Option<EscapeInstance> {
    let total = inst.strict.rows() + inst.nonstrict.rows();
    if total <= 1 {
        return None;
    }
    let drop_from = |b: &ConstraintBlock, k: usize| -> ConstraintBlock {
        let rows: Vec<Vec<Rational>> = (0..b.rows()).filter(|&i| i != k).map(|i| b.mat.row(i)).collect();
        let rhs: Vec<Rational> = b
            .rhs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, v)| v.clone())
            .collect();
        if rows.is_empty() {
            ConstraintBlock::empty(inst.dim)
        } else {
            ConstraintBlock {
                mat: Matrix::from_rows(rows),
                rhs,
            }
        }
    };
    let (strict, nonstrict) = if idx < inst.strict.rows() {
        (drop_from(&inst.strict, idx), inst.nonstrict.clone())
    } else {
        (
            inst.strict.clone(),
            drop_from(&inst.nonstrict, idx - inst.strict.rows()),
        )
    };
    EscapeInstance::new(inst.a_mat.clone(), inst.offset.clone(), strict, nonstrict).ok()
}

/// A random small unimodular matrix with its exact inverse, built from
/// elementary shears and swaps.
pub fn random_unimodular(
    dim: usize,
    rng: &mut impl rand::Rng,
) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut s = Matrix::<Rational>::identity(dim);
    let mut s_inv = Matrix::<Rational>::identity(dim);
    for _ in 0..3 {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim);
        if dim > 1 {
            while j == i {
                j = rng.gen_range(0..dim);
            }
            let c = rat_i64(rng.gen_range(-2..=2), 1);
            // shear: row_i += c * row_j; inverse applies the opposite shear
            // on the right side accumulator
            let mut e = Matrix::<Rational>::identity(dim);
            e.set(i, j, c.clone());
            let mut e_inv = Matrix::<Rational>::identity(dim);
            e_inv.set(i, j, -c);
            s = e.mul(&s);
            s_inv = s_inv.mul(&e_inv);
        }
    }
    (s, s_inv)
}
