//! Algebras, algebra morphisms, and bimodules inside a braided backend.

use crate::backend::{Backend, Obj};
use crate::error::{EngineError, Result};
use crate::matrix::Mat;
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub obj: Obj,
    /// dim x dim^2.
    pub mult: Mat,
    /// dim x 1.
    pub unit: Mat,
}

impl AlgebraData {
    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn validate(&self, backend: &Backend, label: &str) -> Vec<Check> {
        let f = backend.field();
        let n = self.dim();
        let id = Mat::identity(f, n);
        let mut checks = Vec::new();
        let assoc_l = self.mult.mul(&self.mult.kron(&id));
        let assoc_r = self.mult.mul(&id.kron(&self.mult));
        checks.push(Check::eq_mats(format!("algebra-{label}-associativity"), &assoc_l, &assoc_r));
        checks.push(Check::eq_mats(
            format!("algebra-{label}-unit-left"),
            &self.mult.mul(&self.unit.kron(&id)),
            &id,
        ));
        checks.push(Check::eq_mats(
            format!("algebra-{label}-unit-right"),
            &self.mult.mul(&id.kron(&self.unit)),
            &id,
        ));
        let sq = backend.tensor(&self.obj, &self.obj);
        match sq {
            Ok(sq) => {
                checks.push(Check::of(
                    format!("algebra-{label}-mult-morphism"),
                    backend.is_morphism(&self.mult, &sq, &self.obj),
                    "multiplication is not a morphism of the backend category",
                ));
            }
            Err(e) => checks.push(Check::fail(format!("algebra-{label}-mult-morphism"), e.to_string())),
        }
        checks.push(Check::of(
            format!("algebra-{label}-unit-morphism"),
            backend.is_morphism(&self.unit, &backend.unit_obj(), &self.obj),
            "unit is not a morphism of the backend category",
        ));
        checks
    }

    /// The braided opposite: same carrier, multiplication m ∘ chi.
    pub fn opposite_chi(&self, backend: &Backend) -> AlgebraData {
        let chi = backend.braid(&self.obj, &self.obj);
        AlgebraData { obj: self.obj.clone(), mult: self.mult.mul(&chi), unit: self.unit.clone() }
    }
}

/// An (A, A^chi)-style bimodule carrier: `x` is a left A-action and `x0` a
/// left action of the chi-twisted algebra, both with domain A ⊗ X.
#[derive(Clone, Debug)]
pub struct Bimod {
    pub obj: Obj,
    pub x: Mat,
    pub x0: Mat,
}

impl Bimod {
    pub fn dim(&self) -> usize {
        self.obj.dim()
    }
}

/// Fixed instance data every construction runs against.
#[derive(Clone, Debug)]
pub struct Context {
    pub backend: Backend,
    pub r: AlgebraData,
    pub t: AlgebraData,
    /// phi: R -> T, dim T x dim R.
    pub phi: Mat,
}

impl Context {
    pub fn field(&self) -> crate::field::FieldSpec {
        self.backend.field()
    }

    pub fn id_r(&self) -> Mat {
        Mat::identity(self.field(), self.r.dim())
    }

    pub fn id_t(&self) -> Mat {
        Mat::identity(self.field(), self.t.dim())
    }

    /// chi_{R,T}: R ⊗ T -> T ⊗ R.
    pub fn chi_rt(&self) -> Mat {
        self.backend.braid(&self.r.obj, &self.t.obj)
    }

    /// chi_{T,R}^{-1}: T ⊗ R -> R ⊗ T... inverse of chi_{T,R}: T ⊗ R -> R ⊗ T.
    pub fn chi_tr(&self) -> Mat {
        self.backend.braid(&self.t.obj, &self.r.obj)
    }

    pub fn chi_rr(&self) -> Mat {
        self.backend.braid(&self.r.obj, &self.r.obj)
    }

    pub fn chi_tt(&self) -> Mat {
        self.backend.braid(&self.t.obj, &self.t.obj)
    }

    pub fn chi_tt_inv(&self) -> Mat {
        self.backend.braid_inv(&self.t.obj, &self.t.obj)
    }

    /// chi_{R,X}: R ⊗ X -> X ⊗ R for an arbitrary carrier.
    pub fn chi_r_obj(&self, x: &Obj) -> Mat {
        self.backend.braid(&self.r.obj, x)
    }

    pub fn validate_phi(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        let mult_comp = self.phi.mul(&self.r.mult);
        let comp_mult = self.t.mult.mul(&self.phi.kron(&self.phi));
        checks.push(Check::eq_mats("phi-multiplicative", &mult_comp, &comp_mult));
        checks.push(Check::eq_mats("phi-unital", &self.phi.mul(&self.r.unit), &self.t.unit));
        checks.push(Check::of(
            "phi-morphism",
            self.backend.is_morphism(&self.phi, &self.r.obj, &self.t.obj),
            "phi is not a morphism of the backend category",
        ));
        checks
    }

    /// The operative braid-preservation test for phi: both displayed
    /// identities, evaluated as matrices.
    pub fn check_braid_preserving(&self) -> Vec<Check> {
        let id_t = self.id_t();
        let id_r = self.id_r();
        let phi_t = self.phi.kron(&id_t);
        // chi_{T,R}: T ⊗ R -> R ⊗ T and the inverse of chi_{R,T}.
        let chi_tr = self.chi_tr();
        let chi_rt_inv = self.backend.braid_inv(&self.r.obj, &self.t.obj);
        let lhs = phi_t.mul(&chi_tr);
        let rhs = phi_t.mul(&chi_rt_inv);
        let mut checks = vec![Check::eq_mats("braid-preserving-1", &lhs, &rhs)];

        let r_phi = id_r.kron(&self.phi);
        let chi_rt = self.chi_rt();
        let chi_tr_inv = self.backend.braid_inv(&self.t.obj, &self.r.obj);
        let lhs = chi_rt.mul(&r_phi);
        let rhs = chi_tr_inv.mul(&r_phi);
        checks.push(Check::eq_mats("braid-preserving-2", &lhs, &rhs));
        checks
    }

    pub fn braid_preserving(&self) -> bool {
        self.check_braid_preserving().iter().all(|c| c.pass)
    }

    /// Module and compatibility laws for an (R, R^chi)-bimodule.
    pub fn validate_bimodule(&self, bm: &Bimod, label: &str) -> Vec<Check> {
        self.validate_bimodule_over(bm, &self.r, label)
    }

    /// Same laws with an arbitrary first-acting algebra A (used for A = T):
    /// `x` is a left A-action, `x0` a left R^chi-action, and the two commute
    /// through the braiding chi_{R,A}.
    pub fn validate_bimodule_over(&self, bm: &Bimod, a: &AlgebraData, label: &str) -> Vec<Check> {
        let f = self.field();
        let dx = bm.dim();
        if dx == 0 {
            return vec![Check::pass(format!("bimodule-{label}-degenerate"))];
        }
        let id_x = Mat::identity(f, dx);
        let id_a = Mat::identity(f, a.dim());
        let id_r = self.id_r();
        let mut checks = Vec::new();

        // Left A-module axioms for x.
        let lhs = bm.x.mul(&a.mult.kron(&id_x));
        let rhs = bm.x.mul(&id_a.kron(&bm.x));
        checks.push(Check::eq_mats(format!("bimodule-{label}-action-assoc"), &lhs, &rhs));
        checks.push(Check::eq_mats(
            format!("bimodule-{label}-action-unit"),
            &bm.x.mul(&a.unit.kron(&id_x)),
            &id_x,
        ));

        // Left R^chi-module axioms for x0.
        let rchi = self.r.opposite_chi(&self.backend);
        let lhs = bm.x0.mul(&rchi.mult.kron(&id_x));
        let rhs = bm.x0.mul(&id_r.kron(&bm.x0));
        checks.push(Check::eq_mats(format!("bimodule-{label}-coaction-assoc"), &lhs, &rhs));
        checks.push(Check::eq_mats(
            format!("bimodule-{label}-coaction-unit"),
            &bm.x0.mul(&self.r.unit.kron(&id_x)),
            &id_x,
        ));

        // Compatibility: x ∘ (A ⊗ x0) ∘ (chi_{R,A} ⊗ X) = x0 ∘ (R ⊗ x).
        let chi_ra = self.backend.braid(&self.r.obj, &a.obj);
        let lhs = bm.x.mul(&id_a.kron(&bm.x0)).mul(&chi_ra.kron(&id_x));
        let rhs = bm.x0.mul(&id_r.kron(&bm.x));
        checks.push(Check::eq_mats(format!("bimodule-{label}-compatibility"), &lhs, &rhs));

        match (self.backend.tensor(&a.obj, &bm.obj), self.backend.tensor(&self.r.obj, &bm.obj)) {
            (Ok(ax), Ok(rx)) => {
                checks.push(Check::of(
                    format!("bimodule-{label}-action-morphism"),
                    self.backend.is_morphism(&bm.x, &ax, &bm.obj),
                    "first action is not a morphism of the backend category",
                ));
                checks.push(Check::of(
                    format!("bimodule-{label}-coaction-morphism"),
                    self.backend.is_morphism(&bm.x0, &rx, &bm.obj),
                    "second action is not a morphism of the backend category",
                ));
            }
            _ => checks.push(Check::fail(format!("bimodule-{label}-tensor"), "group mismatch")),
        }
        checks
    }

    /// Whether f: X -> Z is a map of (R, R^chi)-bimodules (both actions
    /// intertwined) and a morphism of the backend category.
    pub fn is_bimodule_map(&self, f: &Mat, dom: &Bimod, cod: &Bimod) -> bool {
        let id_r = self.id_r();
        f.mul(&dom.x) == cod.x.mul(&id_r.kron(f))
            && f.mul(&dom.x0) == cod.x0.mul(&id_r.kron(f))
            && self.backend.is_morphism(f, &dom.obj, &cod.obj)
    }

    /// Inside structure on T ⊗ X: x_i = (T ⊗ x)(chi_{R,T} ⊗ X) and
    /// x_i0 = (mult_T ⊗ X)(T ⊗ phi ⊗ X)(chi_{R,T} ⊗ X).
    pub fn inside(&self, bm: &Bimod) -> (Mat, Mat) {
        let f = self.field();
        let id_x = Mat::identity(f, bm.dim());
        let id_t = self.id_t();
        let braid_step = self.chi_rt().kron(&id_x);
        let x_i = id_t.kron(&bm.x).mul(&braid_step);
        let x_i0 = self
            .t
            .mult
            .kron(&id_x)
            .mul(&id_t.kron(&self.phi).kron(&id_x))
            .mul(&braid_step);
        (x_i, x_i0)
    }

    /// Outside structure on T ⊗ X: x_o = (mult_T ⊗ X)(phi ⊗ T ⊗ X) and
    /// x_o0 = (T ⊗ x0)(chi_{R,T} ⊗ X).
    pub fn outside(&self, bm: &Bimod) -> (Mat, Mat) {
        let f = self.field();
        let id_x = Mat::identity(f, bm.dim());
        let id_t = self.id_t();
        let x_o = self.t.mult.kron(&id_x).mul(&self.phi.kron(&id_t).kron(&id_x));
        let x_o0 = id_t.kron(&bm.x0).mul(&self.chi_rt().kron(&id_x));
        (x_o, x_o0)
    }

    /// The lift R~X = (R ⊗ X, (R ⊗ x)(chi_{R,R} ⊗ X), (R ⊗ x0)(chi_{R,R} ⊗ X)).
    pub fn lift_r_tilde(&self, bm: &Bimod) -> Result<Bimod> {
        self.lift_with(bm, &self.chi_rr())
    }

    /// The mirror lift built from the inverse braiding.
    pub fn lift_r_tilde_mirror(&self, bm: &Bimod) -> Result<Bimod> {
        self.lift_with(bm, &self.backend.braid_inv(&self.r.obj, &self.r.obj))
    }

    fn lift_with(&self, bm: &Bimod, braid_rr: &Mat) -> Result<Bimod> {
        let f = self.field();
        let id_x = Mat::identity(f, bm.dim());
        let id_r = self.id_r();
        let step = braid_rr.kron(&id_x);
        let obj = self.backend.tensor(&self.r.obj, &bm.obj)?;
        Ok(Bimod {
            obj,
            x: id_r.kron(&bm.x).mul(&step),
            x0: id_r.kron(&bm.x0).mul(&step),
        })
    }

    /// Free left module A ⊗ V with action mult_A ⊗ V.
    pub fn free_module(&self, a: &AlgebraData, v: &Obj) -> Result<(Obj, Mat)> {
        let f = self.field();
        let id_v = Mat::identity(f, v.dim());
        let obj = self.backend.tensor(&a.obj, v)?;
        Ok((obj, a.mult.kron(&id_v)))
    }

    /// Convert a right action mu^r: X ⊗ R -> X to the left R^chi-action
    /// x0 = mu^r ∘ chi_{R,X}.
    pub fn right_action_to_x0(&self, mu_r: &Mat, x_obj: &Obj) -> Mat {
        mu_r.mul(&self.chi_r_obj(x_obj))
    }

    /// The four distributive-law axioms for the braiding-induced law
    /// chi_{A,B}: A ⊗ B -> B ⊗ A between the monads A ⊗ (-) and B ⊗ (-).
    pub fn check_braiding_dlaw(&self, a: &AlgebraData, b: &AlgebraData, label: &str) -> Vec<Check> {
        let f = self.field();
        let id_a = Mat::identity(f, a.dim());
        let id_b = Mat::identity(f, b.dim());
        let chi = self.backend.braid(&a.obj, &b.obj);
        let mut checks = Vec::new();

        // chi ∘ (mult_A ⊗ B) = (B ⊗ mult_A) ∘ (chi ⊗ A) ∘ (A ⊗ chi).
        let lhs = chi.mul(&a.mult.kron(&id_b));
        let rhs = id_b.kron(&a.mult).mul(&chi.kron(&id_a)).mul(&id_a.kron(&chi));
        checks.push(Check::eq_mats(format!("dlaw-{label}-mult-first"), &lhs, &rhs));

        // chi ∘ (unit_A ⊗ B) = B ⊗ unit_A.
        let lhs = chi.mul(&a.unit.kron(&id_b));
        let rhs = id_b.kron(&a.unit);
        checks.push(Check::eq_mats(format!("dlaw-{label}-unit-first"), &lhs, &rhs));

        // chi ∘ (A ⊗ mult_B) = (mult_B ⊗ A) ∘ (B ⊗ chi) ∘ (chi ⊗ B).
        let lhs = chi.mul(&id_a.kron(&b.mult));
        let rhs = b.mult.kron(&id_a).mul(&id_b.kron(&chi)).mul(&chi.kron(&id_b));
        checks.push(Check::eq_mats(format!("dlaw-{label}-mult-second"), &lhs, &rhs));

        // chi ∘ (A ⊗ unit_B) = unit_B ⊗ A.
        let lhs = chi.mul(&id_a.kron(&b.unit));
        let rhs = b.unit.kron(&id_a);
        checks.push(Check::eq_mats(format!("dlaw-{label}-unit-second"), &lhs, &rhs));
        checks
    }

    /// Yang-Baxter for the braiding on the carriers of A, B, C.
    pub fn check_braiding_yb(&self, a: &Obj, b: &Obj, c: &Obj, label: &str) -> Check {
        let f = self.field();
        let id_a = Mat::identity(f, a.dim());
        let id_b = Mat::identity(f, b.dim());
        let id_c = Mat::identity(f, c.dim());
        let path_a = self
            .backend
            .braid(b, c)
            .kron(&id_a)
            .mul(&id_b.kron(&self.backend.braid(a, c)))
            .mul(&self.backend.braid(a, b).kron(&id_c));
        let path_b = id_c
            .kron(&self.backend.braid(a, b))
            .mul(&self.backend.braid(a, c).kron(&id_b))
            .mul(&id_a.kron(&self.backend.braid(b, c)));
        Check::eq_mats(format!("yang-baxter-{label}"), &path_a, &path_b)
    }
}

/// Independent closed-form assembly of the inside/outside actions for the
/// graded backend, looping over basis triples with explicit bi-character
/// coefficients. Used as a cross-check against the categorical composites.
pub fn graded_inside_closed(ctx: &Context, bm: &Bimod) -> Result<(Mat, Mat)> {
    let (Backend::Graded { gamma }, Obj::Graded(r), Obj::Graded(t), Obj::Graded(x)) =
        (&ctx.backend, &ctx.r.obj, &ctx.t.obj, &bm.obj)
    else {
        return Err(EngineError::UnsupportedBackend("closed graded form".into()));
    };
    let f = ctx.field();
    let (dr, dt, dx) = (r.dim(), t.dim(), x.dim());
    let mut x_i = Mat::zeros(f, dt * dx, dr * dt * dx);
    let mut x_i0 = Mat::zeros(f, dt * dx, dr * dt * dx);
    for a in 0..dr {
        for b in 0..dt {
            let coeff = gamma.eval(t.degree(b), r.degree(a)).clone();
            for c in 0..dx {
                let col = (a * dt + b) * dx + c;
                // x_i: r ⊗ t ⊗ v -> gamma(deg t, deg r) t ⊗ (r v).
                for out_x in 0..dx {
                    let v = bm.x.get(out_x, a * dx + c);
                    if !v.is_zero() {
                        let cur = x_i.get(b * dx + out_x, col).add(&coeff.mul(v));
                        x_i.set(b * dx + out_x, col, cur);
                    }
                }
                // x_i0: r ⊗ t ⊗ v -> gamma(deg t, deg r) (t phi(r)) ⊗ v.
                for tr in 0..dt {
                    let pv = ctx.phi.get(tr, a);
                    if pv.is_zero() {
                        continue;
                    }
                    for out_t in 0..dt {
                        let mv = ctx.t.mult.get(out_t, b * dt + tr);
                        if !mv.is_zero() {
                            let cur = x_i0.get(out_t * dx + c, col).add(&coeff.mul(pv).mul(mv));
                            x_i0.set(out_t * dx + c, col, cur);
                        }
                    }
                }
            }
        }
    }
    Ok((x_i, x_i0))
}

/// Small hand-built contexts shared by unit tests across modules.
#[cfg(test)]
pub mod testctx {
    use super::*;
    use crate::field::FieldSpec;
    use crate::graded::BiCharacter;
    use crate::graded::GradedSpace;
    use crate::group::FiniteAbelianGroup;

    /// The Grassmann line over F13 with the super braiding, R = K, X = K.
    pub fn super_ctx() -> (Context, Bimod) {
        let f = FieldSpec::prime_field(13).unwrap();
        let g = FiniteAbelianGroup::new(vec![2]).unwrap();
        let gamma = BiCharacter::new(
            g.clone(),
            f,
            vec![f.one(), f.one(), f.one(), f.from_i64(-1)],
        )
        .unwrap();
        let backend = Backend::Graded { gamma };
        let t_obj = Obj::Graded(GradedSpace { group: g.clone(), degrees: vec![vec![0], vec![1]] });
        let mut mult = Mat::zeros(f, 2, 4);
        mult.set(0, 0, f.one());
        mult.set(1, 1, f.one());
        mult.set(1, 2, f.one());
        let mut unit = Mat::zeros(f, 2, 1);
        unit.set(0, 0, f.one());
        let t = AlgebraData { obj: t_obj, mult, unit };
        let r_obj = Obj::Graded(GradedSpace::unit(&g));
        let r = AlgebraData {
            obj: r_obj,
            mult: Mat::identity(f, 1),
            unit: Mat::identity(f, 1),
        };
        let mut phi = Mat::zeros(f, 2, 1);
        phi.set(0, 0, f.one());
        let ctx = Context { backend, r, t, phi };
        let x = Bimod {
            obj: ctx.backend.unit_obj(),
            x: Mat::identity(f, 1),
            x0: Mat::identity(f, 1),
        };
        (ctx, x)
    }

    /// K[Z_2] trivially graded over Q, R = T = X, phi = id, trivial braiding.
    pub fn trivial_ctx() -> (Context, Bimod) {
        let f = FieldSpec::Rationals;
        let g = FiniteAbelianGroup::new(vec![2]).unwrap();
        let gamma = BiCharacter::new(g.clone(), f, vec![f.one(); 4]).unwrap();
        let backend = Backend::Graded { gamma };
        let obj = Obj::Graded(GradedSpace { group: g.clone(), degrees: vec![vec![0], vec![0]] });
        let mut mult = Mat::zeros(f, 2, 4);
        mult.set(0, 0, f.one());
        mult.set(1, 1, f.one());
        mult.set(1, 2, f.one());
        mult.set(0, 3, f.one());
        let mut unit = Mat::zeros(f, 2, 1);
        unit.set(0, 0, f.one());
        let a = AlgebraData { obj: obj.clone(), mult: mult.clone(), unit };
        let ctx = Context { backend, r: a.clone(), t: a.clone(), phi: Mat::identity(f, 2) };
        // X = A with regular left action and right action through the (trivial)
        // braiding.
        let chi = ctx.chi_r_obj(&obj);
        let mut right = Mat::zeros(f, 2, 4);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let c = mult.get(k, i * 2 + j).clone();
                    if !c.is_zero() {
                        right.set(k, i * 2 + j, c);
                    }
                }
            }
        }
        let x0 = right.mul(&chi);
        let x = Bimod { obj, x: mult, x0 };
        (ctx, x)
    }
}
