//! Relative tensor products as explicit coequalizers: the outer quotient
//! T ⊗_R X (from the inside pair), the inner quotient T ⊗_{R^chi} X (from the
//! outside pair), and the trace functor Pi.

use crate::algebra::{Bimod, Context};
use crate::backend::Obj;
use crate::error::Result;
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;

/// One application of an endofunctor on bimodules, presented as a quotient of
/// T ⊗ X together with the inherited bimodule structure on the quotient basis.
#[derive(Clone, Debug)]
pub struct Stage {
    /// Quotient of T ⊗ X (X the carrier of the input bimodule).
    pub q: QuotientSpace,
    /// The inherited (R, R^chi)-bimodule on the quotient.
    pub bm: Bimod,
    /// For the outer tensor: the induced left T-action on the quotient.
    pub t_action: Option<Mat>,
}

/// The two actions that descend to a given quotient of T ⊗ X, pushed through it.
fn descend_actions(
    ctx: &Context,
    ambient: &Obj,
    q: &QuotientSpace,
    acts: (&Mat, &Mat),
) -> Result<Bimod> {
    let dr = ctx.r.dim();
    let lifted = QuotientSpace::lift_left(dr, q);
    let x = QuotientSpace::induce(acts.0, &lifted, q)?;
    let x0 = QuotientSpace::induce(acts.1, &lifted, q)?;
    let obj = ctx.backend.quotient_obj(ambient, q)?;
    Ok(Bimod { obj, x, x0 })
}

/// T ⊗_R X: coequalizer of the inside pair, carrying the outside actions.
pub fn outer(ctx: &Context, bm: &Bimod) -> Result<Stage> {
    let (x_i, x_i0) = ctx.inside(bm);
    let (x_o, x_o0) = ctx.outside(bm);
    let q = QuotientSpace::cokernel(&x_i.sub(&x_i0));
    let ambient = ctx.backend.tensor(&ctx.t.obj, &bm.obj)?;
    let out = descend_actions(ctx, &ambient, &q, (&x_o, &x_o0))?;
    // The induced left T-action (outer tensor is a (T, R)-bimodule).
    let t_act = ctx.t.mult.kron(&Mat::identity(ctx.field(), bm.dim()));
    let lifted_t = QuotientSpace::lift_left(ctx.t.dim(), &q);
    let t_action = QuotientSpace::induce(&t_act, &lifted_t, &q)?;
    Ok(Stage { q, bm: out, t_action: Some(t_action) })
}

/// T ⊗_{R^chi} X: coequalizer of the outside pair, carrying the inside actions.
pub fn inner(ctx: &Context, bm: &Bimod) -> Result<Stage> {
    let (x_i, x_i0) = ctx.inside(bm);
    let (x_o, x_o0) = ctx.outside(bm);
    let q = QuotientSpace::cokernel(&x_o.sub(&x_o0));
    let ambient = ctx.backend.tensor(&ctx.t.obj, &bm.obj)?;
    let out = descend_actions(ctx, &ambient, &q, (&x_i, &x_i0))?;
    Ok(Stage { q, bm: out, t_action: None })
}

/// The unquotiented endofunctor T ⊗ (-) with the inside bimodule structure.
pub fn inner_free(ctx: &Context, bm: &Bimod) -> Result<Stage> {
    let (x_i, x_i0) = ctx.inside(bm);
    let ambient = ctx.backend.tensor(&ctx.t.obj, &bm.obj)?;
    let q = QuotientSpace::identity(ctx.field(), ambient.dim());
    Ok(Stage { q, bm: Bimod { obj: ambient, x: x_i, x0: x_i0 }, t_action: None })
}

/// Pi X: the coequalizer of the two actions of an (R, R^chi)-bimodule.
pub fn pi(ctx: &Context, bm: &Bimod) -> QuotientSpace {
    let _ = ctx;
    QuotientSpace::cokernel(&bm.x.sub(&bm.x0))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::algebra::testctx::{super_ctx, trivial_ctx};

    #[test]
    fn outer_of_regular_bimodule_has_dim_t() {
        // T ⊗_R R ≅ T.
        let (ctx, x) = trivial_ctx();
        let st = outer(&ctx, &x).unwrap();
        assert_eq!(st.q.q_dim, ctx.t.dim());
        let checks = ctx.validate_bimodule(&st.bm, "outer");
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn trivial_r_gives_free_quotients() {
        let (ctx, x) = super_ctx();
        let st = outer(&ctx, &x).unwrap();
        assert_eq!(st.q.q_dim, 2);
        assert_eq!(st.q.relations.rank(), 0);
        let st = inner(&ctx, &x).unwrap();
        assert_eq!(st.q.q_dim, 2);
    }

    #[test]
    fn inner_of_regular_bimodule() {
        let (ctx, x) = trivial_ctx();
        let st = inner(&ctx, &x).unwrap();
        assert_eq!(st.q.q_dim, ctx.t.dim());
        let checks = ctx.validate_bimodule(&st.bm, "inner");
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn projection_is_bimodule_morphism() {
        // x_bar ∘ (R ⊗ pi) = pi ∘ x_outer for the outer stage.
        let (ctx, x) = trivial_ctx();
        let st = outer(&ctx, &x).unwrap();
        let id_r = ctx.id_r();
        let (x_o, x_o0) = ctx.outside(&x);
        assert_eq!(st.bm.x.mul(&id_r.kron(&st.q.proj)), st.q.proj.mul(&x_o));
        assert_eq!(st.bm.x0.mul(&id_r.kron(&st.q.proj)), st.q.proj.mul(&x_o0));
    }

    #[test]
    fn pi_of_trivial_r_is_identity() {
        let (ctx, x) = super_ctx();
        let q = pi(&ctx, &x);
        assert_eq!(q.q_dim, x.dim());
    }

    #[test]
    fn pi_of_commutative_regular_is_identity() {
        let (ctx, x) = trivial_ctx();
        let q = pi(&ctx, &x);
        assert_eq!(q.q_dim, x.dim());
    }

    #[test]
    fn closed_form_relations_match_outer() {
        // The relation space of T ⊗_R X equals the span of
        // x_i - x_i0 assembled from the closed graded formulas.
        let (ctx, x) = trivial_ctx();
        let (ci, ci0) = crate::algebra::graded_inside_closed(&ctx, &x).unwrap();
        let st = outer(&ctx, &x).unwrap();
        assert!(st
            .q
            .relations
            .transpose()
            .row_space_eq(&ci.sub(&ci0).transpose()));
    }
}
