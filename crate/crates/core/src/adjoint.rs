//! The induction/restriction adjunction along the algebra map phi: induction
//! sends a bimodule to its outer tensor product with its left T-action,
//! restriction pulls a T-module back along phi, and the two hom-set bijections
//! are realized as explicit matrix operations with exact hom-space solvers.

use crate::algebra::{Bimod, Context};
use crate::backend::Obj;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;
use crate::tensor;

/// A left T-module that still carries the auxiliary twisted R-action.
#[derive(Clone, Debug)]
pub struct TMod {
    pub obj: Obj,
    /// Left T-action T ⊗ Y -> Y.
    pub y: Mat,
    /// Twisted R-action R ⊗ Y -> Y.
    pub y0: Mat,
}

impl TMod {
    pub fn dim(&self) -> usize {
        self.obj.dim()
    }
}

/// Induction: the outer tensor product with its left T-action, together with
/// the presenting quotient of T ⊗ X.
pub fn induct(ctx: &Context, x: &Bimod) -> Result<(TMod, QuotientSpace)> {
    let st = tensor::outer(ctx, x)?;
    let y = st.t_action.expect("outer stage carries a T-action");
    Ok((TMod { obj: st.bm.obj, y, y0: st.bm.x0 }, st.q))
}

/// Restriction along phi: keep the carrier, act through phi.
pub fn restrict(ctx: &Context, y: &TMod) -> Bimod {
    let id = Mat::identity(ctx.field(), y.dim());
    Bimod { obj: y.obj.clone(), x: y.y.mul(&ctx.phi.kron(&id)), x0: y.y0.clone() }
}

/// The adjunction unit at X: X -> restrict(induct(X)).
pub fn unit_map(ctx: &Context, x: &Bimod, q: &QuotientSpace) -> Mat {
    let id = Mat::identity(ctx.field(), x.dim());
    q.proj.mul(&ctx.t.unit.kron(&id))
}

/// The adjunction counit at Y: induct(restrict(Y)) -> Y, the action descended
/// through the presenting quotient.
pub fn counit_map(ctx: &Context, y: &TMod) -> Result<Mat> {
    let (_, q) = induct(ctx, &restrict(ctx, y))?;
    let target = QuotientSpace::identity(ctx.field(), y.dim());
    QuotientSpace::induce(&y.y, &q, &target)
}

/// Hom-set bijection, T-side to R-side: precompose with the unit.
pub fn to_rside(g: &Mat, sigma: &Mat) -> Mat {
    g.mul(sigma)
}

/// Hom-set bijection, R-side to T-side: extend by the action and descend.
pub fn to_tside(ctx: &Context, f: &Mat, y: &TMod, q: &QuotientSpace) -> Result<Mat> {
    let target = QuotientSpace::identity(ctx.field(), y.dim());
    let ext = y.y.mul(&ctx.id_t().kron(f));
    QuotientSpace::induce(&ext, &q, &target)
}

/// Solve a homogeneous linear system on matrix entries: `residuals` maps a
/// candidate matrix to a list of matrices that must all vanish. Returns a
/// basis of the solution space.
fn solve_matrix_space(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    residuals: impl Fn(&Mat) -> Vec<Mat>,
) -> Vec<Mat> {
    let n = rows * cols;
    let zero = Mat::zeros(field, rows, cols);
    let probe = residuals(&zero);
    let m: usize = probe.iter().map(|r| r.rows * r.cols).sum();
    let mut sys = Mat::zeros(field, m, n);
    for i in 0..rows {
        for j in 0..cols {
            let mut e = Mat::zeros(field, rows, cols);
            e.set(i, j, field.one());
            let mut row = 0usize;
            for r in residuals(&e) {
                for a in 0..r.rows {
                    for b in 0..r.cols {
                        sys.set(row, i * cols + j, r.get(a, b).clone());
                        row += 1;
                    }
                }
            }
        }
    }
    let ns = sys.nullspace();
    (0..ns.cols)
        .map(|k| {
            Mat::from_fn(field, rows, cols, |i, j| ns.get(i * cols + j, k).clone())
        })
        .collect()
}

/// Rows that force non-structure-preserving entries to vanish, as residuals.
fn backend_residual(ctx: &Context, f: &Mat, dom: &Obj, cod: &Obj) -> Mat {
    let field = ctx.field();
    match (dom, cod) {
        (Obj::Graded(d), Obj::Graded(c)) => Mat::from_fn(field, f.rows, f.cols, |i, j| {
            if c.degree(i) == d.degree(j) {
                field.zero()
            } else {
                f.get(i, j).clone()
            }
        }),
        (Obj::Hopf(d), Obj::Hopf(c)) => {
            let mut out = Mat::zeros(field, 0, 0);
            let mut first = true;
            for (a, b) in d.action.iter().zip(&c.action) {
                let r = f.mul(a).sub(&b.mul(f));
                out = if first { r } else { out.hstack(&r) };
                first = false;
            }
            out
        }
        _ => panic!("mismatched backends"),
    }
}

/// A basis of the bimodule homs dom -> cod that also respect the backend.
pub fn hom_rside(ctx: &Context, dom: &Bimod, cod: &Bimod) -> Vec<Mat> {
    let field = ctx.field();
    let id_r = ctx.id_r();
    solve_matrix_space(field, cod.dim(), dom.dim(), |f| {
        vec![
            f.mul(&dom.x).sub(&cod.x.mul(&id_r.kron(f))),
            f.mul(&dom.x0).sub(&cod.x0.mul(&id_r.kron(f))),
            backend_residual(ctx, f, &dom.obj, &cod.obj),
        ]
    })
}

/// A basis of the T-module homs dom -> cod that also respect the backend and
/// the auxiliary twisted action.
pub fn hom_tside(ctx: &Context, dom: &TMod, cod: &TMod) -> Vec<Mat> {
    let field = ctx.field();
    let id_t = ctx.id_t();
    let id_r = ctx.id_r();
    solve_matrix_space(field, cod.dim(), dom.dim(), |f| {
        vec![
            f.mul(&dom.y).sub(&cod.y.mul(&id_t.kron(f))),
            f.mul(&dom.y0).sub(&cod.y0.mul(&id_r.kron(f))),
            backend_residual(ctx, f, &dom.obj, &cod.obj),
        ]
    })
}

/// A deterministic pseudo-random combination of a hom basis.
pub fn random_combination(field: FieldSpec, basis: &[Mat], rng: &mut impl rand::Rng) -> Mat {
    assert!(!basis.is_empty());
    let mut out = Mat::zeros(field, basis[0].rows, basis[0].cols);
    for b in basis {
        let c = field.from_i64(rng.gen_range(-20i64..=20));
        out = out.add(&b.scale(&c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::testctx::{super_ctx, trivial_ctx};
    use rand::SeedableRng;

    fn regular_bimodule(ctx: &Context) -> Bimod {
        let x0 = ctx.right_action_to_x0(&ctx.r.mult, &ctx.r.obj);
        Bimod { obj: ctx.r.obj.clone(), x: ctx.r.mult.clone(), x0 }
    }

    #[test]
    fn triangle_identities() {
        for (ctx, x) in [trivial_ctx(), super_ctx()] {
            for dom in [x.clone(), regular_bimodule(&ctx)] {
                let (ind, q) = induct(&ctx, &dom).unwrap();
                let sigma = unit_map(&ctx, &dom, &q);
                // counit(induct X) ∘ induct(sigma) = id.
                let xi = counit_map(&ctx, &ind).unwrap();
                let (_, q2) = induct(&ctx, &restrict(&ctx, &ind)).unwrap();
                let ind_sigma = QuotientSpace::induce(
                    &ctx.id_t().kron(&sigma),
                    &q,
                    &q2,
                )
                .unwrap();
                assert_eq!(
                    xi.mul(&ind_sigma),
                    Mat::identity(ctx.field(), ind.dim())
                );
                // restrict(counit Y) ∘ sigma(restrict Y) = id, with Y = induct(dom).
                let ry = restrict(&ctx, &ind);
                let (_, qy) = induct(&ctx, &ry).unwrap();
                let sigma_y = unit_map(&ctx, &ry, &qy);
                let xi_y = counit_map(&ctx, &ind).unwrap();
                assert_eq!(
                    xi_y.mul(&sigma_y),
                    Mat::identity(ctx.field(), ry.dim())
                );
            }
        }
    }

    #[test]
    fn hom_bijection_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (ctx, x) in [trivial_ctx(), super_ctx()] {
            for dom in [x.clone(), regular_bimodule(&ctx)] {
                let (y, _) = induct(&ctx, &x).unwrap();
                let (_, q) = induct(&ctx, &dom).unwrap();
                let sigma = unit_map(&ctx, &dom, &q);
                let (ind_dom, _) = induct(&ctx, &dom).unwrap();
                let tside = hom_tside(&ctx, &ind_dom, &y);
                let rside = hom_rside(&ctx, &dom, &restrict(&ctx, &y));
                assert_eq!(tside.len(), rside.len());
                assert!(!tside.is_empty());
                for _ in 0..30 {
                    let g = random_combination(ctx.field(), &tside, &mut rng);
                    let f = to_rside(&g, &sigma);
                    let g2 = to_tside(&ctx, &f, &y, &q).unwrap();
                    assert_eq!(g, g2);
                    let f0 = random_combination(ctx.field(), &rside, &mut rng);
                    let g0 = to_tside(&ctx, &f0, &y, &q).unwrap();
                    let f1 = to_rside(&g0, &sigma);
                    assert_eq!(f0, f1);
                }
            }
        }
    }

    #[test]
    fn hom_spaces_are_module_maps() {
        let (ctx, x) = super_ctx();
        let (y, _) = induct(&ctx, &x).unwrap();
        let rest = restrict(&ctx, &y);
        for f in hom_rside(&ctx, &x, &rest) {
            assert!(ctx.is_bimodule_map(&f, &x, &rest));
        }
    }
}
