//! One abstract contract over the two braided realizations: G-graded spaces
//! with a bi-character, and modules over a quasitriangular Hopf algebra.

use crate::error::{EngineError, Result};
use crate::field::FieldSpec;
use crate::graded::{self, BiCharacter, GradedSpace};
use crate::group::FiniteAbelianGroup;
use crate::hopf::{self, HModuleSpace, HopfAlgebraData, RMatrixData};
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;

#[derive(Clone, Debug)]
pub enum Backend {
    Graded { gamma: BiCharacter },
    Hopf { hopf: HopfAlgebraData, rmat: RMatrixData },
}

#[derive(Clone, PartialEq, Debug)]
pub enum Obj {
    Graded(GradedSpace),
    Hopf(HModuleSpace),
}

impl Obj {
    pub fn dim(&self) -> usize {
        match self {
            Obj::Graded(v) => v.dim(),
            Obj::Hopf(m) => m.dim,
        }
    }
}

impl Backend {
    pub fn field(&self) -> FieldSpec {
        match self {
            Backend::Graded { gamma } => gamma.field,
            Backend::Hopf { hopf, .. } => hopf.field,
        }
    }

    pub fn group(&self) -> Option<&FiniteAbelianGroup> {
        match self {
            Backend::Graded { gamma } => Some(&gamma.group),
            Backend::Hopf { .. } => None,
        }
    }

    /// The monoidal unit object.
    pub fn unit_obj(&self) -> Obj {
        match self {
            Backend::Graded { gamma } => Obj::Graded(GradedSpace::unit(&gamma.group)),
            Backend::Hopf { hopf, .. } => Obj::Hopf(HModuleSpace::unit_module(hopf)),
        }
    }

    pub fn tensor(&self, a: &Obj, b: &Obj) -> Result<Obj> {
        match (self, a, b) {
            (Backend::Graded { .. }, Obj::Graded(v), Obj::Graded(w)) => Ok(Obj::Graded(v.tensor(w)?)),
            (Backend::Hopf { hopf, .. }, Obj::Hopf(m), Obj::Hopf(n)) => Ok(Obj::Hopf(m.tensor(n, hopf))),
            _ => Err(EngineError::UnsupportedBackend("mixed object kinds".into())),
        }
    }

    /// chi_{A,B}: A ⊗ B -> B ⊗ A.
    pub fn braid(&self, a: &Obj, b: &Obj) -> Mat {
        match (self, a, b) {
            (Backend::Graded { gamma }, Obj::Graded(v), Obj::Graded(w)) => graded::braid(v, w, gamma),
            (Backend::Hopf { hopf, rmat }, Obj::Hopf(m), Obj::Hopf(n)) => {
                hopf::braid_modules(m, n, hopf, rmat)
            }
            _ => panic!("mixed object kinds"),
        }
    }

    /// chi_{A,B}^{-1}: B ⊗ A -> A ⊗ B.
    pub fn braid_inv(&self, a: &Obj, b: &Obj) -> Mat {
        match (self, a, b) {
            (Backend::Graded { gamma }, Obj::Graded(v), Obj::Graded(w)) => graded::braid_inv(v, w, gamma),
            (Backend::Hopf { hopf, rmat }, Obj::Hopf(m), Obj::Hopf(n)) => {
                hopf::braid_modules_inv(m, n, hopf, rmat)
            }
            _ => panic!("mixed object kinds"),
        }
    }

    /// Whether a matrix is a morphism of the category (degree-homogeneous,
    /// respectively H-linear).
    pub fn is_morphism(&self, f: &Mat, dom: &Obj, cod: &Obj) -> bool {
        match (self, dom, cod) {
            (Backend::Graded { .. }, Obj::Graded(v), Obj::Graded(w)) => graded::is_homogeneous(f, v, w),
            (Backend::Hopf { hopf, .. }, Obj::Hopf(m), Obj::Hopf(n)) => {
                let _ = hopf;
                hopf::is_h_linear(f, m, n)
            }
            _ => false,
        }
    }

    /// Carry the object structure onto a quotient. For graded spaces the
    /// section coordinates inherit their degrees (and the projection must be
    /// homogeneous for them); for Hopf modules the action is conjugated
    /// through the quotient and must descend.
    pub fn quotient_obj(&self, ambient: &Obj, q: &QuotientSpace) -> Result<Obj> {
        assert_eq!(ambient.dim(), q.ambient_dim);
        match (self, ambient) {
            (Backend::Graded { .. }, Obj::Graded(v)) => {
                let degrees = q.sect_cols.iter().map(|&c| v.degree(c).clone()).collect();
                let out = GradedSpace { group: v.group.clone(), degrees };
                if !graded::is_homogeneous(&q.proj, v, &out) {
                    return Err(EngineError::NotWellDefined(
                        "quotient relations are not degree-homogeneous".into(),
                    ));
                }
                Ok(Obj::Graded(out))
            }
            (Backend::Hopf { .. }, Obj::Hopf(m)) => {
                let mut action = Vec::with_capacity(m.action.len());
                for rho in &m.action {
                    if !q.proj.mul(rho).mul(&q.relations).is_zero() {
                        return Err(EngineError::NotWellDefined(
                            "quotient relations are not an H-submodule".into(),
                        ));
                    }
                    action.push(q.proj.mul(rho).mul(&q.sect));
                }
                Ok(Obj::Hopf(HModuleSpace { dim: q.q_dim, action }))
            }
            _ => Err(EngineError::UnsupportedBackend("mixed object kinds".into())),
        }
    }
}
