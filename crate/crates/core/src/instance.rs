//! Parsing of instance descriptions: field, backend, the two algebras, the
//! algebra map, the base bimodule, and the transposition, all given by exact
//! structure constants in JSON.

use crate::algebra::{AlgebraData, Bimod, Context};
use crate::backend::{Backend, Obj};
use crate::error::{EngineError, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{BiCharacter, GradedSpace};
use crate::group::{FiniteAbelianGroup, GroupElt};
use crate::hopf::{HModuleSpace, HopfAlgebraData, RMatrixData};
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;
use crate::tower::{Op, Tower};
use serde::Deserialize;

/// A scalar literal: an integer or a string like "3/4" (or a residue).
#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Str(String),
}

impl ScalarLit {
    fn to_scalar(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            ScalarLit::Int(n) => Ok(field.from_i64(*n)),
            ScalarLit::Str(s) => field.parse(s),
        }
    }
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum FieldDesc {
    Rationals,
    Prime { p: u64 },
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum BackendDesc {
    Graded {
        invariant_factors: Vec<u64>,
        /// |G| x |G| table of values, rows and columns in group element order.
        bicharacter: Vec<Vec<ScalarLit>>,
    },
    Hopf {
        dim: usize,
        /// e_i e_j = sum c e_k, entries [i, j, k, c].
        mult: Vec<(usize, usize, usize, ScalarLit)>,
        unit: Vec<ScalarLit>,
        /// Delta(e_k) = sum c e_i ⊗ e_j, entries [i, j, k, c].
        comult: Vec<(usize, usize, usize, ScalarLit)>,
        counit: Vec<ScalarLit>,
        /// S(e_j) = sum c e_i, entries [i, j, c].
        antipode: Vec<(usize, usize, ScalarLit)>,
        /// R = sum c e_i ⊗ e_j, entries [i, j, c].
        r: Vec<(usize, usize, ScalarLit)>,
        r_inv: Vec<(usize, usize, ScalarLit)>,
    },
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ObjectDesc {
    dim: usize,
    /// Graded backend: the degree of each basis vector.
    #[serde(default)]
    degrees: Option<Vec<GroupElt>>,
    /// Hopf backend: one dense dim x dim matrix per Hopf basis element.
    #[serde(default)]
    action: Option<Vec<Vec<Vec<ScalarLit>>>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct AlgebraDesc {
    #[serde(flatten)]
    object: ObjectDesc,
    unit: Vec<ScalarLit>,
    /// e_i e_j = sum c e_k, entries [i, j, k, c].
    mult: Vec<(usize, usize, usize, ScalarLit)>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct BimoduleDesc {
    #[serde(flatten)]
    object: ObjectDesc,
    /// e_a . v_x = sum c v_k, entries [a, x, k, c].
    left_action: Vec<(usize, usize, usize, ScalarLit)>,
    /// v_x . e_a = sum c v_k, entries [x, a, k, c].
    right_action: Vec<(usize, usize, usize, ScalarLit)>,
}

#[derive(Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum TranspositionDesc {
    /// The identity on T ⊗ X, if it descends.
    Identity,
    /// Diagonal by the degree of the T factor: pairs [degree, coefficient].
    Diagonal { table: Vec<(GroupElt, ScalarLit)> },
    /// An explicit matrix between the presented quotients.
    Matrix { entries: Vec<Vec<ScalarLit>> },
    /// Search diagonal transpositions with coefficients among m-th roots of unity.
    Solve { order: u64 },
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct InstanceDesc {
    field: FieldDesc,
    backend: BackendDesc,
    r_algebra: AlgebraDesc,
    t_algebra: AlgebraDesc,
    /// phi(e_j) = sum c e_i as a dense dim T x dim R matrix.
    phi: Vec<Vec<ScalarLit>>,
    bimodule_x: BimoduleDesc,
    transposition: TranspositionDesc,
}

/// How the transposition for an instance is obtained.
#[derive(Clone, Debug)]
pub enum TranspositionSpec {
    Identity,
    Diagonal(Vec<(GroupElt, Scalar)>),
    Matrix(Mat),
    Solve { order: u64 },
}

pub struct Instance {
    pub ctx: Context,
    pub x: Bimod,
    pub transposition: TranspositionSpec,
}

fn parse_err(msg: impl Into<String>) -> EngineError {
    EngineError::Parse(msg.into())
}

fn dense(field: FieldSpec, rows: usize, cols: usize, lit: &[Vec<ScalarLit>]) -> Result<Mat> {
    if lit.len() != rows || lit.iter().any(|r| r.len() != cols) {
        return Err(parse_err(format!("expected a dense {rows} x {cols} matrix")));
    }
    let mut m = Mat::zeros(field, rows, cols);
    for (i, row) in lit.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, v.to_scalar(field)?);
        }
    }
    Ok(m)
}

fn vector(field: FieldSpec, n: usize, lit: &[ScalarLit], what: &str) -> Result<Mat> {
    if lit.len() != n {
        return Err(parse_err(format!("{what}: expected {n} entries")));
    }
    let mut m = Mat::zeros(field, n, 1);
    for (i, v) in lit.iter().enumerate() {
        m.set(i, 0, v.to_scalar(field)?);
    }
    Ok(m)
}

/// Assemble a structure-constant map pairs ⊗ -> basis into a matrix with
/// column index i * cols_j + j and row index k.
fn from_triples(
    field: FieldSpec,
    rows: usize,
    cols_i: usize,
    cols_j: usize,
    entries: &[(usize, usize, usize, ScalarLit)],
    what: &str,
) -> Result<Mat> {
    let mut m = Mat::zeros(field, rows, cols_i * cols_j);
    for (i, j, k, c) in entries {
        if *i >= cols_i || *j >= cols_j || *k >= rows {
            return Err(parse_err(format!("{what}: index out of range in [{i}, {j}, {k}]")));
        }
        let prev = m.get(*k, i * cols_j + j).clone();
        m.set(*k, i * cols_j + j, prev.add(&c.to_scalar(field)?));
    }
    Ok(m)
}

fn from_pairs(
    field: FieldSpec,
    dim: usize,
    entries: &[(usize, usize, ScalarLit)],
    what: &str,
) -> Result<Mat> {
    let mut m = Mat::zeros(field, dim, dim);
    for (i, j, c) in entries {
        if *i >= dim || *j >= dim {
            return Err(parse_err(format!("{what}: index out of range in [{i}, {j}]")));
        }
        m.set(*i, *j, c.to_scalar(field)?);
    }
    Ok(m)
}

fn build_obj(field: FieldSpec, backend: &Backend, desc: &ObjectDesc, what: &str) -> Result<Obj> {
    match backend {
        Backend::Graded { gamma } => {
            let degrees = desc
                .degrees
                .as_ref()
                .ok_or_else(|| parse_err(format!("{what}: graded backend needs degrees")))?;
            if degrees.len() != desc.dim {
                return Err(parse_err(format!("{what}: one degree per basis vector")));
            }
            let group = gamma.group.clone();
            for d in degrees {
                if d.len() != group.invariant_factors.len() {
                    return Err(parse_err(format!("{what}: degree of wrong rank")));
                }
            }
            let degrees = degrees.iter().map(|d| group.canon(d)).collect::<Result<Vec<_>>>()?;
            Ok(Obj::Graded(GradedSpace { group, degrees }))
        }
        Backend::Hopf { hopf, .. } => {
            let action = desc
                .action
                .as_ref()
                .ok_or_else(|| parse_err(format!("{what}: hopf backend needs an action")))?;
            if action.len() != hopf.dim {
                return Err(parse_err(format!("{what}: one action matrix per Hopf basis element")));
            }
            let mats = action
                .iter()
                .map(|a| dense(field, desc.dim, desc.dim, a))
                .collect::<Result<Vec<_>>>()?;
            Ok(Obj::Hopf(HModuleSpace { dim: desc.dim, action: mats }))
        }
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let desc: InstanceDesc =
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid instance: {e}")))?;
    let field = match desc.field {
        FieldDesc::Rationals => FieldSpec::Rationals,
        FieldDesc::Prime { p } => FieldSpec::prime_field(p)?,
    };
    let backend = match &desc.backend {
        BackendDesc::Graded { invariant_factors, bicharacter } => {
            let group = FiniteAbelianGroup::new(invariant_factors.clone())?;
            let n = group.order();
            let table = dense(field, n, n, bicharacter)?;
            let mut flat = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    flat.push(table.get(i, j).clone());
                }
            }
            Backend::Graded { gamma: BiCharacter::new(group, field, flat)? }
        }
        BackendDesc::Hopf { dim, mult, unit, comult, counit, antipode, r, r_inv } => {
            let n = *dim;
            if n == 0 {
                return Err(parse_err("hopf algebra must have positive dimension"));
            }
            let mut comult_mat = Mat::zeros(field, n * n, n);
            for (i, j, k, c) in comult {
                if *i >= n || *j >= n || *k >= n {
                    return Err(parse_err("comult: index out of range"));
                }
                let prev = comult_mat.get(i * n + j, *k).clone();
                comult_mat.set(i * n + j, *k, prev.add(&c.to_scalar(field)?));
            }
            let mut rv = Mat::zeros(field, n * n, 1);
            for (i, j, c) in r {
                rv.set(i * n + j, 0, c.to_scalar(field)?);
            }
            let mut rvi = Mat::zeros(field, n * n, 1);
            for (i, j, c) in r_inv {
                rvi.set(i * n + j, 0, c.to_scalar(field)?);
            }
            let hopf = HopfAlgebraData {
                dim: n,
                field,
                mult: from_triples(field, n, n, n, mult, "hopf mult")?,
                unit: vector(field, n, unit, "hopf unit")?,
                comult: comult_mat,
                counit: vector(field, n, counit, "hopf counit")?.transpose(),
                antipode: from_pairs(field, n, antipode, "antipode")?,
            };
            Backend::Hopf { hopf, rmat: RMatrixData { r: rv, r_inv: rvi } }
        }
    };

    let build_algebra = |desc: &AlgebraDesc, what: &str| -> Result<AlgebraData> {
        let n = desc.object.dim;
        Ok(AlgebraData {
            obj: build_obj(field, &backend, &desc.object, what)?,
            mult: from_triples(field, n, n, n, &desc.mult, what)?,
            unit: vector(field, n, &desc.unit, what)?,
        })
    };
    let r = build_algebra(&desc.r_algebra, "r_algebra")?;
    let t = build_algebra(&desc.t_algebra, "t_algebra")?;
    let phi = dense(field, t.dim(), r.dim(), &desc.phi)?;
    let ctx = Context { backend, r, t, phi };

    let xd = &desc.bimodule_x;
    let x_obj = build_obj(field, &ctx.backend, &xd.object, "bimodule_x")?;
    let nx = xd.object.dim;
    let left = from_triples(field, nx, ctx.r.dim(), nx, &xd.left_action, "left_action")?;
    let right = from_triples(field, nx, nx, ctx.r.dim(), &xd.right_action, "right_action")?;
    let x0 = ctx.right_action_to_x0(&right, &x_obj);
    let x = Bimod { obj: x_obj, x: left, x0 };

    let transposition = match desc.transposition {
        TranspositionDesc::Identity => TranspositionSpec::Identity,
        TranspositionDesc::Diagonal { table } => {
            let group = ctx.backend.group().ok_or_else(|| {
                parse_err("diagonal transpositions need the graded backend")
            })?;
            let mut out = Vec::new();
            for (g, c) in table {
                if g.len() != group.invariant_factors.len() {
                    return Err(parse_err("transposition table: degree of wrong rank"));
                }
                out.push((group.canon(&g)?, c.to_scalar(field)?));
            }
            TranspositionSpec::Diagonal(out)
        }
        TranspositionDesc::Matrix { entries } => {
            let m = if entries.is_empty() {
                Mat::zeros(field, 0, 0)
            } else {
                dense(field, entries.len(), entries[0].len(), &entries)?
            };
            TranspositionSpec::Matrix(m)
        }
        TranspositionDesc::Solve { order } => {
            if order == 0 {
                return Err(parse_err("transposition order must be positive"));
            }
            TranspositionSpec::Solve { order }
        }
    };
    Ok(Instance { ctx, x, transposition })
}

/// Materialize the transposition of an instance as a matrix between the inner
/// and outer quotients, solving if the instance says to.
pub fn resolve_transposition(tower: &mut Tower, spec: &TranspositionSpec) -> Result<Mat> {
    let q_i = tower.stage_q(&[Op::Inner])?;
    let q_o = tower.stage_q(&[Op::Outer])?;
    match spec {
        TranspositionSpec::Identity => {
            let id = Mat::identity(tower.ctx.field(), q_i.ambient_dim);
            QuotientSpace::induce(&id, &q_i, &q_o)
        }
        TranspositionSpec::Diagonal(table) => {
            let Obj::Graded(t_space) = tower.ctx.t.obj.clone() else {
                return Err(EngineError::UnsupportedBackend(
                    "diagonal transpositions need the graded backend".into(),
                ));
            };
            let group = tower.ctx.backend.group().expect("graded backend has a group");
            let field = tower.ctx.field();
            let dim_x = tower.base.dim();
            let dt = t_space.dim();
            let mut diag = Mat::zeros(field, dt * dim_x, dt * dim_x);
            for ti in 0..dt {
                let deg = group.canon(t_space.degree(ti))?;
                let c = table
                    .iter()
                    .find(|(g, _)| *g == deg)
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| {
                        EngineError::Validation(format!(
                            "transposition table misses degree {deg:?}"
                        ))
                    })?;
                for xi in 0..dim_x {
                    diag.set(ti * dim_x + xi, ti * dim_x + xi, c.clone());
                }
            }
            QuotientSpace::induce(&diag, &q_i, &q_o)
        }
        TranspositionSpec::Matrix(m) => {
            if m.rows != q_o.q_dim || m.cols != q_i.q_dim {
                return Err(EngineError::Validation(format!(
                    "transposition matrix must be {} x {}",
                    q_o.q_dim, q_i.q_dim
                )));
            }
            Ok(m.clone())
        }
        TranspositionSpec::Solve { order } => {
            let sols = tower.solve_diagonal_transposition(*order)?;
            sols.into_iter().map(|(_, w)| w).next().ok_or_else(|| {
                EngineError::SolveFailed("no diagonal transposition found".into())
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_json() {
        assert!(matches!(parse_instance("{"), Err(EngineError::Parse(_))));
        assert!(matches!(parse_instance("{}"), Err(EngineError::Parse(_))));
    }

    #[test]
    fn parses_minimal_graded_instance() {
        let text = r#"{
            "field": {"kind": "prime", "p": 13},
            "backend": {
                "kind": "graded",
                "invariant_factors": [2],
                "bicharacter": [[1, 1], [1, 12]]
            },
            "r_algebra": {"dim": 1, "degrees": [[0]], "unit": [1], "mult": [[0, 0, 0, 1]]},
            "t_algebra": {
                "dim": 2, "degrees": [[0], [1]], "unit": [1, 0],
                "mult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]
            },
            "phi": [[1], [0]],
            "bimodule_x": {
                "dim": 1, "degrees": [[0]],
                "left_action": [[0, 0, 0, 1]],
                "right_action": [[0, 0, 0, 1]]
            },
            "transposition": {"kind": "diagonal", "table": [[[0], 1], [[1], 2]]}
        }"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.ctx.t.dim(), 2);
        let mut tower = Tower::new(inst.ctx, inst.x);
        let w = resolve_transposition(&mut tower, &inst.transposition).unwrap();
        let checks = tower.check_transposition(&w).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn out_of_range_index_is_a_parse_error() {
        let text = r#"{
            "field": {"kind": "rationals"},
            "backend": {"kind": "graded", "invariant_factors": [2], "bicharacter": [[1, 1], [1, 1]]},
            "r_algebra": {"dim": 1, "degrees": [[0]], "unit": [1], "mult": [[0, 0, 5, 1]]},
            "t_algebra": {"dim": 1, "degrees": [[0]], "unit": [1], "mult": [[0, 0, 0, 1]]},
            "phi": [[1]],
            "bimodule_x": {"dim": 1, "degrees": [[0]], "left_action": [[0, 0, 0, 1]], "right_action": [[0, 0, 0, 1]]},
            "transposition": {"kind": "identity"}
        }"#;
        assert!(matches!(parse_instance(text), Err(EngineError::Parse(_))));
    }
}
