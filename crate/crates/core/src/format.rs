//! Wire formats: the instance document consumed by the CLI and the verdict
//! document it emits. All numbers travel as exact strings (`"p/q"` or
//! `"p"`); algebraic numbers as `{minpoly, approx, radius}` with the
//! serialized disk certified to isolate its root.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algnum::AlgebraicNumber;
use crate::escape::{ConstraintBlock, EscapeInstance, MemberKind, Outcome, Verdict, WitnessSpace};
use crate::lpalg::Relation;
use crate::matrix::Matrix;
use crate::num::{format_rational, parse_rational, Rational};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("invalid number: {0}")]
    Number(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InstanceDocument {
    pub dimension: usize,
    pub dynamics: DynamicsDoc,
    pub polytope: PolytopeDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DynamicsDoc {
    #[serde(rename = "A")]
    pub a_matrix: Vec<Vec<String>>,
    pub a: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolytopeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<BlockDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonstrict: Option<BlockDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BlockDoc {
    #[serde(rename = "B")]
    pub b_matrix: Vec<Vec<String>>,
    pub b: Vec<String>,
}

fn parse_matrix(
    rows: &[Vec<String>],
    cols: usize,
    what: &str,
) -> Result<Matrix<Rational>, FormatError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != cols {
            return Err(FormatError::Malformed(format!(
                "{what}: row has {} entries, expected {cols}",
                row.len()
            )));
        }
        let mut r = Vec::with_capacity(cols);
        for s in row {
            r.push(parse_rational(s).map_err(FormatError::Number)?);
        }
        parsed.push(r);
    }
    if parsed.is_empty() {
        return Ok(Matrix::zero(0, cols));
    }
    Ok(Matrix::from_rows(parsed))
}

fn parse_vector(v: &[String]) -> Result<Vec<Rational>, FormatError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(FormatError::Number))
        .collect()
}

impl InstanceDocument {
    pub fn to_instance(&self) -> Result<EscapeInstance, FormatError> {
        let d = self.dimension;
        if d == 0 {
            return Err(FormatError::Malformed("dimension must be positive".into()));
        }
        if self.dynamics.a_matrix.len() != d {
            return Err(FormatError::Malformed(format!(
                "dynamics.A has {} rows, expected {d}",
                self.dynamics.a_matrix.len()
            )));
        }
        let a = parse_matrix(&self.dynamics.a_matrix, d, "dynamics.A")?;
        let offset = parse_vector(&self.dynamics.a)?;
        if offset.len() != d {
            return Err(FormatError::Malformed(format!(
                "dynamics.a has {} entries, expected {d}",
                offset.len()
            )));
        }
        let block = |doc: &Option<BlockDoc>, what: &str| -> Result<ConstraintBlock, FormatError> {
            match doc {
                None => Ok(ConstraintBlock::empty(d)),
                Some(b) => {
                    let mat = parse_matrix(&b.b_matrix, d, what)?;
                    let rhs = parse_vector(&b.b)?;
                    if rhs.len() != mat.rows() {
                        return Err(FormatError::Malformed(format!(
                            "{what}: {} rows but {} right-hand sides",
                            mat.rows(),
                            rhs.len()
                        )));
                    }
                    Ok(ConstraintBlock { mat, rhs })
                }
            }
        };
        let strict = block(&self.polytope.strict, "polytope.strict")?;
        let nonstrict = block(&self.polytope.nonstrict, "polytope.nonstrict")?;
        EscapeInstance::new(a, offset, strict, nonstrict)
            .map_err(|e| FormatError::Malformed(e.to_string()))
    }

    pub fn from_instance(inst: &EscapeInstance) -> InstanceDocument {
        let mat_doc = |m: &Matrix<Rational>| -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(format_rational).collect())
                .collect()
        };
        let vec_doc = |v: &[Rational]| -> Vec<String> { v.iter().map(format_rational).collect() };
        let block_doc = |b: &ConstraintBlock| -> Option<BlockDoc> {
            (b.rows() > 0).then(|| BlockDoc {
                b_matrix: mat_doc(&b.mat),
                b: vec_doc(&b.rhs),
            })
        };
        InstanceDocument {
            dimension: inst.dim,
            dynamics: DynamicsDoc {
                a_matrix: mat_doc(&inst.a_mat),
                a: vec_doc(&inst.offset),
            },
            polytope: PolytopeDoc {
                strict: block_doc(&inst.strict),
                nonstrict: block_doc(&inst.nonstrict),
            },
        }
    }
}

/// Canonical-representation algebraic number on the wire.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgNumDoc {
    pub minpoly: Vec<String>,
    pub approx: [String; 2],
    pub radius: String,
}

impl AlgNumDoc {
    pub fn from_number(x: &AlgebraicNumber) -> AlgNumDoc {
        // certify that the serialized disk isolates its root, then tighten
        // the approximation for readability
        let tight = Rational::new(1.into(), 1_000_000u64.into());
        let target = if x.radius() < tight { x.radius() } else { tight };
        let refined = x.certify_separation().refine(&target);
        let (re, im) = refined.approx();
        AlgNumDoc {
            minpoly: refined.minpoly_strings(),
            approx: [format_rational(&re), format_rational(&im)],
            radius: format_rational(&refined.radius()),
        }
    }

    /// Reconstruct the canonical number: isolate the minimal polynomial's
    /// roots and pick the one inside the serialized disk.
    pub fn to_number(&self) -> Result<AlgebraicNumber, FormatError> {
        let coeffs = parse_vector(&self.minpoly)?;
        let poly = crate::poly::Poly::new(coeffs);
        if poly.deg0() == 0 {
            return Err(FormatError::Malformed(
                "minpoly must have positive degree".into(),
            ));
        }
        let re = parse_rational(&self.approx[0]).map_err(FormatError::Number)?;
        let im = parse_rational(&self.approx[1]).map_err(FormatError::Number)?;
        let radius = parse_rational(&self.radius).map_err(FormatError::Number)?;
        let roots = crate::algnum::isolate_roots(&poly)
            .map_err(|e| FormatError::Malformed(e.to_string()))?;
        let target = crate::interval::CBox::new(
            crate::interval::RatInterval::new(&re - &radius, &re + &radius),
            crate::interval::RatInterval::new(&im - &radius, &im + &radius),
        );
        let mut hits: Vec<AlgebraicNumber> = Vec::new();
        for root in roots {
            let refined = root.refine(&radius);
            if refined.isolating_box().intersects(&target) {
                hits.push(refined);
            }
        }
        match hits.len() {
            1 => Ok(hits.pop().unwrap()),
            0 => Err(FormatError::Malformed(
                "no root of minpoly inside the serialized disk".into(),
            )),
            _ => Err(FormatError::Malformed(
                "serialized disk does not isolate a root".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub space: String,
    pub coordinates: Vec<AlgNumDoc>,
    /// decimal approximations, 12 digits
    pub decimals: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DominantDoc {
    pub eta: AlgNumDoc,
    pub j: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairDoc {
    pub eta: AlgNumDoc,
    pub j: usize,
    pub kind: String, // "real" | "conjugate-pair"
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowCertDoc {
    pub row_index: usize,
    pub relation: String, // ">" | ">="
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominant: Option<DominantDoc>,
    pub all_zero: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub zeroed: Vec<PairDoc>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TimingsDoc {
    pub parse_ms: u128,
    pub decide_ms: u128,
    pub total_ms: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub certificate: Vec<RowCertDoc>,
    pub degenerate_observable: bool,
    pub timings: TimingsDoc,
}

impl VerdictDocument {
    /// Render a decided verdict; `full_certificate` controls whether the
    /// zeroed-pair lists are included.
    pub fn from_verdict(v: &Verdict, full_certificate: bool, timings: TimingsDoc) -> Self {
        let witness = v.witness.as_ref().map(|w| WitnessDoc {
            space: match w.space {
                WitnessSpace::Original => "original".into(),
                WitnessSpace::Homogeneous => "homogeneous".into(),
            },
            coordinates: w.point.iter().map(AlgNumDoc::from_number).collect(),
            decimals: w.point.iter().map(|x| x.decimal_string(12)).collect(),
        });
        let certificate = v
            .certificate
            .iter()
            .map(|rc| {
                let (dominant, all_zero) = match &rc.chosen {
                    MemberKind::Dominant { eta, j } => (
                        Some(DominantDoc {
                            eta: AlgNumDoc::from_number(eta),
                            j: *j,
                        }),
                        false,
                    ),
                    MemberKind::AllZero => (None, true),
                };
                let mut zeroed = Vec::new();
                if full_certificate {
                    for (eta, j) in &rc.zeroed_real {
                        zeroed.push(PairDoc {
                            eta: AlgNumDoc::from_number(eta),
                            j: *j,
                            kind: "real".into(),
                        });
                    }
                    for (eta, j) in &rc.zeroed_complex {
                        zeroed.push(PairDoc {
                            eta: AlgNumDoc::from_number(eta),
                            j: *j,
                            kind: "conjugate-pair".into(),
                        });
                    }
                }
                RowCertDoc {
                    row_index: rc.row_index,
                    relation: match rc.relation {
                        Relation::Gt => ">".into(),
                        _ => ">=".into(),
                    },
                    dominant,
                    all_zero,
                    zeroed,
                }
            })
            .collect();
        VerdictDocument {
            verdict: match v.outcome {
                Outcome::TrappedExists => "trapped-exists".into(),
                Outcome::AllEscape => "all-escape".into(),
            },
            witness,
            certificate,
            degenerate_observable: v.degenerate_observable,
            timings,
        }
    }

    pub fn resource_limit(timings: TimingsDoc) -> Self {
        VerdictDocument {
            verdict: "resource-limit".into(),
            witness: None,
            certificate: vec![],
            degenerate_observable: false,
            timings,
        }
    }
}
