//! The tower of iterated relative tensor products over words in the outer,
//! inner, and free-inner endofunctors, with the induced monad structure, the
//! distributive laws between them, the i/j isomorphisms after Pi, and
//! transposition morphisms.

use crate::algebra::{Bimod, Context};
use crate::error::{EngineError, Result};
use crate::field::Scalar;
use crate::group::GroupElt;
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;
use crate::report::Check;
use crate::tensor::{self, Stage};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Op {
    /// T ⊗_R (-) with the outside actions (the outer monad).
    Outer,
    /// T ⊗_{R^chi} (-) with the inside actions (the inner monad).
    Inner,
    /// T ⊗ (-) unquotiented, with the inside actions.
    Free,
}

pub type Word = Vec<Op>;

/// Prepend an operation (the leftmost letter is the outermost application).
fn ext(op: Op, w: &[Op]) -> Word {
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(op);
    out.extend_from_slice(w);
    out
}

#[derive(Clone, Debug)]
struct Node {
    stage: Stage,
    /// Flattened quotient over the free ambient tensor power T^{⊗k} ⊗ X.
    flat: QuotientSpace,
}

pub struct Tower {
    pub ctx: Context,
    pub base: Bimod,
    nodes: BTreeMap<Word, Node>,
    pis: BTreeMap<Word, QuotientSpace>,
}

impl Tower {
    pub fn new(ctx: Context, base: Bimod) -> Tower {
        Tower { ctx, base, nodes: BTreeMap::new(), pis: BTreeMap::new() }
    }

    fn node(&mut self, w: &[Op]) -> Result<&Node> {
        if !self.nodes.contains_key(w) {
            let node = if w.is_empty() {
                let q = QuotientSpace::identity(self.ctx.field(), self.base.dim());
                Node {
                    stage: Stage { q: q.clone(), bm: self.base.clone(), t_action: None },
                    flat: q,
                }
            } else {
                let inner_bm = self.node(&w[1..])?.stage.bm.clone();
                let prev_flat = self.node(&w[1..])?.flat.clone();
                let stage = match w[0] {
                    Op::Outer => tensor::outer(&self.ctx, &inner_bm)?,
                    Op::Inner => tensor::inner(&self.ctx, &inner_bm)?,
                    Op::Free => tensor::inner_free(&self.ctx, &inner_bm)?,
                };
                let flat = QuotientSpace::compose(
                    &QuotientSpace::lift_left(self.ctx.t.dim(), &prev_flat),
                    &stage.q,
                );
                Node { stage, flat }
            };
            self.nodes.insert(w.to_vec(), node);
        }
        Ok(&self.nodes[w])
    }

    /// Carrier dimension of the bimodule at a word.
    pub fn dim(&mut self, w: &[Op]) -> Result<usize> {
        Ok(self.node(w)?.stage.bm.dim())
    }

    pub fn carrier(&mut self, w: &[Op]) -> Result<Bimod> {
        Ok(self.node(w)?.stage.bm.clone())
    }

    pub fn stage_q(&mut self, w: &[Op]) -> Result<QuotientSpace> {
        Ok(self.node(w)?.stage.q.clone())
    }

    pub fn flat_q(&mut self, w: &[Op]) -> Result<QuotientSpace> {
        Ok(self.node(w)?.flat.clone())
    }

    fn id_q(&mut self, w: &[Op]) -> Result<Mat> {
        Ok(Mat::identity(self.ctx.field(), self.dim(w)?))
    }

    /// Unit of the outer monad at a word: Q_w -> Q_{O w}.
    pub fn unit_o(&mut self, w: &[Op]) -> Result<Mat> {
        let id = self.id_q(w)?;
        let proj = self.stage_q(&ext(Op::Outer, w))?.proj;
        Ok(proj.mul(&self.ctx.t.unit.kron(&id)))
    }

    /// Unit of the inner monad at a word: Q_w -> Q_{I w}.
    pub fn unit_i(&mut self, w: &[Op]) -> Result<Mat> {
        let id = self.id_q(w)?;
        let proj = self.stage_q(&ext(Op::Inner, w))?.proj;
        Ok(proj.mul(&self.ctx.t.unit.kron(&id)))
    }

    /// Multiplication of the outer monad at a word: Q_{OOw} -> Q_{Ow}, solved
    /// through the sections and re-verified against its defining relation.
    pub fn mult_o(&mut self, w: &[Op]) -> Result<Mat> {
        let id_q = self.id_q(w)?;
        let id_t = self.ctx.id_t();
        let ow = ext(Op::Outer, w);
        let oow = ext(Op::Outer, &ow);
        let q1 = self.stage_q(&ow)?;
        let q2 = self.stage_q(&oow)?;
        let mul_step = self.ctx.t.mult.kron(&id_q);
        let m = q1.proj.mul(&mul_step).mul(&id_t.kron(&q1.sect)).mul(&q2.sect);
        // Defining relation: m ∘ pi2 ∘ (T ⊗ pi1) = pi1 ∘ (mult ⊗ Q).
        let lhs = m.mul(&q2.proj).mul(&id_t.kron(&q1.proj));
        let rhs = q1.proj.mul(&mul_step);
        if lhs != rhs {
            return Err(EngineError::SolveFailed("outer multiplication".into()));
        }
        Ok(m)
    }

    /// Multiplication of the inner monad: Q_{IIw} -> Q_{Iw}, the projection of
    /// mult ∘ chi^{-1} on the T factors.
    pub fn mult_i(&mut self, w: &[Op]) -> Result<Mat> {
        let id_q = self.id_q(w)?;
        let id_t = self.ctx.id_t();
        let iw = ext(Op::Inner, w);
        let iiw = ext(Op::Inner, &iw);
        let q1 = self.stage_q(&iw)?;
        let q2 = self.stage_q(&iiw)?;
        let twisted = self.ctx.t.mult.mul(&self.ctx.chi_tt_inv()).kron(&id_q);
        let m = q1.proj.mul(&twisted).mul(&id_t.kron(&q1.sect)).mul(&q2.sect);
        let lhs = m.mul(&q2.proj).mul(&id_t.kron(&q1.proj));
        let rhs = q1.proj.mul(&twisted);
        if lhs != rhs {
            return Err(EngineError::SolveFailed("inner multiplication".into()));
        }
        Ok(m)
    }

    /// Apply the outer endofunctor to a morphism f: Q_{w1} -> Q_{w2}.
    pub fn map_o(&mut self, f: &Mat, w1: &[Op], w2: &[Op]) -> Result<Mat> {
        let id_t = self.ctx.id_t();
        let dom = self.stage_q(&ext(Op::Outer, w1))?;
        let cod = self.stage_q(&ext(Op::Outer, w2))?;
        QuotientSpace::induce(&id_t.kron(f), &dom, &cod)
    }

    pub fn map_i(&mut self, f: &Mat, w1: &[Op], w2: &[Op]) -> Result<Mat> {
        let id_t = self.ctx.id_t();
        let dom = self.stage_q(&ext(Op::Inner, w1))?;
        let cod = self.stage_q(&ext(Op::Inner, w2))?;
        QuotientSpace::induce(&id_t.kron(f), &dom, &cod)
    }

    /// The outer functor applied to a morphism between arbitrary nodes (used
    /// for maps out of free-inner carriers).
    pub fn map_o_words(&mut self, f: &Mat, dom_w: &[Op], cod_w: &[Op]) -> Result<Mat> {
        self.map_o(f, dom_w, cod_w)
    }

    /// The mixed distributive law at a word: Q_{F O w} -> Q_{O F w}
    /// (free-inner past outer), the projection of chi_{T,T}.
    pub fn dlaw_free(&mut self, w: &[Op]) -> Result<Mat> {
        let id_q = self.id_q(w)?;
        let id_t = self.ctx.id_t();
        let ow = ext(Op::Outer, w);
        let fw = ext(Op::Free, w);
        let ofw = ext(Op::Outer, &fw);
        let q_o = self.stage_q(&ow)?;
        let q_ofw = self.stage_q(&ofw)?;
        let chi_step = self.ctx.chi_tt().kron(&id_q);
        let m = q_ofw.proj.mul(&chi_step).mul(&id_t.kron(&q_o.sect));
        // Defining relation: m ∘ (T ⊗ pi_o) = pi ∘ (chi ⊗ Q).
        let lhs = m.mul(&id_t.kron(&q_o.proj));
        let rhs = q_ofw.proj.mul(&chi_step);
        if lhs != rhs {
            return Err(EngineError::SolveFailed("free-inner distributive law".into()));
        }
        Ok(m)
    }

    /// The induced distributive law at a word: Q_{I O w} -> Q_{O I w}.
    pub fn dlaw(&mut self, w: &[Op]) -> Result<Mat> {
        let id_q = self.id_q(w)?;
        let id_t = self.ctx.id_t();
        let ow = ext(Op::Outer, w);
        let iw = ext(Op::Inner, w);
        let iow = ext(Op::Inner, &ow);
        let oiw = ext(Op::Outer, &iw);
        let q_o = self.stage_q(&ow)?;
        let q_i = self.stage_q(&iw)?;
        let q_iow = self.stage_q(&iow)?;
        let q_oiw = self.stage_q(&oiw)?;
        let chi_step = self.ctx.chi_tt().kron(&id_q);
        let m = q_oiw
            .proj
            .mul(&id_t.kron(&q_i.proj))
            .mul(&chi_step)
            .mul(&id_t.kron(&q_o.sect))
            .mul(&q_iow.sect);
        // Defining relation: pi_{OIw} ∘ (T ⊗ pi_i) ∘ (chi ⊗ Q)
        //                  = m ∘ pi_{IOw} ∘ (T ⊗ pi_o).
        let lhs = q_oiw.proj.mul(&id_t.kron(&q_i.proj)).mul(&chi_step);
        let rhs = m.mul(&q_iow.proj).mul(&id_t.kron(&q_o.proj));
        if lhs != rhs {
            return Err(EngineError::SolveFailed("induced distributive law".into()));
        }
        Ok(m)
    }

    /// Pi at a word: the quotient of Q_w by the difference of its two actions.
    pub fn pi(&mut self, w: &[Op]) -> Result<QuotientSpace> {
        if !self.pis.contains_key(w) {
            let bm = self.carrier(w)?;
            let q = tensor::pi(&self.ctx, &bm);
            self.pis.insert(w.to_vec(), q);
        }
        Ok(self.pis[w].clone())
    }

    /// Pi applied to a morphism f: Q_{w1} -> Q_{w2}.
    pub fn pi_map(&mut self, f: &Mat, w1: &[Op], w2: &[Op]) -> Result<Mat> {
        let dom = self.pi(w1)?;
        let cod = self.pi(w2)?;
        QuotientSpace::induce(f, &dom, &cod)
    }

    /// The isomorphism Pi(Ow) -> Pi(Iw), solved from its defining relation.
    pub fn iso_i(&mut self, w: &[Op]) -> Result<Mat> {
        let ow = ext(Op::Outer, w);
        let iw = ext(Op::Inner, w);
        let p_o = self.pi(&ow)?;
        let p_i = self.pi(&iw)?;
        let q_o = self.stage_q(&ow)?;
        let q_i = self.stage_q(&iw)?;
        let m = p_i.proj.mul(&q_i.proj).mul(&q_o.sect).mul(&p_o.sect);
        // Defining relation: m ∘ p_{Ow} ∘ pi_o = p_{Iw} ∘ pi_i on T ⊗ Q_w.
        let lhs = m.mul(&p_o.proj).mul(&q_o.proj);
        let rhs = p_i.proj.mul(&q_i.proj);
        if lhs != rhs {
            return Err(EngineError::SolveFailed("iso i".into()));
        }
        Ok(m)
    }

    /// The inverse isomorphism Pi(Iw) -> Pi(Ow).
    pub fn iso_j(&mut self, w: &[Op]) -> Result<Mat> {
        let ow = ext(Op::Outer, w);
        let iw = ext(Op::Inner, w);
        let p_o = self.pi(&ow)?;
        let p_i = self.pi(&iw)?;
        let q_o = self.stage_q(&ow)?;
        let q_i = self.stage_q(&iw)?;
        let m = p_o.proj.mul(&q_o.proj).mul(&q_i.sect).mul(&p_i.sect);
        let lhs = m.mul(&p_i.proj).mul(&q_i.proj);
        let rhs = p_o.proj.mul(&q_o.proj);
        if lhs != rhs {
            return Err(EngineError::SolveFailed("iso j".into()));
        }
        Ok(m)
    }

    /// Monad axioms for the outer and inner monads at a word.
    pub fn monad_checks(&mut self, w: &[Op]) -> Result<Vec<Check>> {
        let mut checks = Vec::new();
        for (label, op) in [("outer", Op::Outer), ("inner", Op::Inner)] {
            let xw = ext(op, w);
            let (unit_w, unit_xw, mult_w, mult_xw, fmap_unit, fmap_mult) = match op {
                Op::Outer => (
                    self.unit_o(w)?,
                    self.unit_o(&xw)?,
                    self.mult_o(w)?,
                    self.mult_o(&xw)?,
                    {
                        let u = self.unit_o(w)?;
                        self.map_o(&u, w, &xw)?
                    },
                    {
                        let m = self.mult_o(w)?;
                        self.map_o(&m, &ext(Op::Outer, &xw), &xw)?
                    },
                ),
                Op::Inner => (
                    self.unit_i(w)?,
                    self.unit_i(&xw)?,
                    self.mult_i(w)?,
                    self.mult_i(&xw)?,
                    {
                        let u = self.unit_i(w)?;
                        self.map_i(&u, w, &xw)?
                    },
                    {
                        let m = self.mult_i(w)?;
                        self.map_i(&m, &ext(Op::Inner, &xw), &xw)?
                    },
                ),
                Op::Free => unreachable!(),
            };
            let id = Mat::identity(self.ctx.field(), unit_w.rows);
            checks.push(Check::eq_mats(
                format!("monad-{label}-unit-first"),
                &mult_w.mul(&unit_xw),
                &id,
            ));
            checks.push(Check::eq_mats(
                format!("monad-{label}-unit-second"),
                &mult_w.mul(&fmap_unit),
                &id,
            ));
            checks.push(Check::eq_mats(
                format!("monad-{label}-associativity"),
                &mult_w.mul(&fmap_mult),
                &mult_w.mul(&mult_xw),
            ));
        }
        Ok(checks)
    }

    /// The four distributive-law axioms for the induced law at a word.
    pub fn dlaw_checks(&mut self, w: &[Op]) -> Result<Vec<Check>> {
        let ow = ext(Op::Outer, w);
        let iw = ext(Op::Inner, w);
        let mut checks = Vec::new();

        // (a) dlaw(w) ∘ mult_i(Ow) = O(mult_i(w)) ∘ dlaw(Iw) ∘ I(dlaw(w)).
        let lhs = self.dlaw(w)?.mul(&self.mult_i(&ow)?);
        let d = self.dlaw(w)?;
        let step1 = self.map_i(&d, &ext(Op::Inner, &ow), &ext(Op::Outer, &iw))?;
        let step2 = self.dlaw(&iw)?;
        let mi = self.mult_i(w)?;
        let step3 = self.map_o(&mi, &ext(Op::Inner, &iw), &iw)?;
        checks.push(Check::eq_mats(
            "dlaw-induced-mult-inner",
            &lhs,
            &step3.mul(&step2).mul(&step1),
        ));

        // (b) dlaw(w) ∘ unit_i(Ow) = O(unit_i(w)).
        let lhs = self.dlaw(w)?.mul(&self.unit_i(&ow)?);
        let ui = self.unit_i(w)?;
        let rhs = self.map_o(&ui, w, &iw)?;
        checks.push(Check::eq_mats("dlaw-induced-unit-inner", &lhs, &rhs));

        // (c) dlaw(w) ∘ I(mult_o(w)) = mult_o(Iw) ∘ O(dlaw(w)) ∘ dlaw(Ow).
        let mo = self.mult_o(w)?;
        let lhs = self.dlaw(w)?.mul(&self.map_i(&mo, &ext(Op::Outer, &ow), &ow)?);
        let step1 = self.dlaw(&ow)?;
        let d = self.dlaw(w)?;
        let step2 = self.map_o(&d, &ext(Op::Inner, &ow), &ext(Op::Outer, &iw))?;
        let step3 = self.mult_o(&iw)?;
        checks.push(Check::eq_mats(
            "dlaw-induced-mult-outer",
            &lhs,
            &step3.mul(&step2).mul(&step1),
        ));

        // (d) dlaw(w) ∘ I(unit_o(w)) = unit_o(Iw).
        let uo = self.unit_o(w)?;
        let lhs = self.dlaw(w)?.mul(&self.map_i(&uo, w, &ow)?);
        let rhs = self.unit_o(&iw)?;
        checks.push(Check::eq_mats("dlaw-induced-unit-outer", &lhs, &rhs));
        Ok(checks)
    }

    /// The two displays making the data an admissible septuple at the base
    /// object. The second display is also exposed with an explicit law matrix
    /// so mutation tests can corrupt it.
    pub fn admissible_checks(&mut self) -> Result<Vec<Check>> {
        let w: Word = vec![];
        let mut checks = Vec::new();

        // Display 1: i ∘ Pi(unit_o) = Pi(unit_i).
        let uo = self.unit_o(&w)?;
        let ui = self.unit_i(&w)?;
        let pi_uo = self.pi_map(&uo, &w, &[Op::Outer])?;
        let pi_ui = self.pi_map(&ui, &w, &[Op::Inner])?;
        let i0 = self.iso_i(&w)?;
        checks.push(Check::eq_mats("admissible-display-1", &i0.mul(&pi_uo), &pi_ui));

        // Display 2: i ∘ Pi(mult_o) = Pi(mult_i) ∘ i_{Iw} ∘ Pi(dlaw) ∘ i_{Ow}.
        let pdl = self.pi_dlaw_base()?;
        let (lhs, rhs_pre, rhs_post) = self.admissible_display2_parts()?;
        checks.push(Check::eq_mats(
            "admissible-display-2",
            &lhs,
            &rhs_post.mul(&pdl).mul(&rhs_pre),
        ));
        Ok(checks)
    }

    /// Pi applied to the induced distributive law at the base object.
    pub fn pi_dlaw_base(&mut self) -> Result<Mat> {
        let w: Word = vec![];
        let d = self.dlaw(&w)?;
        self.pi_map(&d, &ext(Op::Inner, &[Op::Outer]), &ext(Op::Outer, &[Op::Inner]))
    }

    /// The fixed parts of the second admissible display:
    /// (lhs, i at Ow, Pi(mult_i) ∘ i at Iw), so that
    /// lhs = (Pi(mult_i) ∘ i_{Iw}) ∘ Pi(dlaw) ∘ i_{Ow}.
    pub fn admissible_display2_parts(&mut self) -> Result<(Mat, Mat, Mat)> {
        let w: Word = vec![];
        let mo = self.mult_o(&w)?;
        let pi_mo = self.pi_map(&mo, &ext(Op::Outer, &[Op::Outer]), &[Op::Outer])?;
        let i0 = self.iso_i(&w)?;
        let lhs = i0.mul(&pi_mo);
        let i_at_o = self.iso_i(&[Op::Outer])?;
        let i_at_i = self.iso_i(&[Op::Inner])?;
        let mi = self.mult_i(&w)?;
        let pi_mi = self.pi_map(&mi, &ext(Op::Inner, &[Op::Inner]), &[Op::Inner])?;
        Ok((lhs, i_at_o, pi_mi.mul(&i_at_i)))
    }

    /// Both conditions a transposition morphism must satisfy, plus the
    /// morphism requirements on w itself.
    pub fn check_transposition(&mut self, w_mat: &Mat) -> Result<Vec<Check>> {
        let base: Word = vec![];
        let o: Word = vec![Op::Outer];
        let i: Word = vec![Op::Inner];
        let f = self.ctx.field();
        let id_q = self.id_q(&base)?;
        let id_t = self.ctx.id_t();
        let q_i = self.stage_q(&i)?;
        let mut checks = Vec::new();

        // w must map Q_I to Q_O as a bimodule morphism of the backend.
        let bm_i = self.carrier(&i)?;
        let bm_o = self.carrier(&o)?;
        checks.push(Check::of(
            "transposition-bimodule-morphism",
            w_mat.rows == bm_o.dim()
                && w_mat.cols == bm_i.dim()
                && self.ctx.is_bimodule_map(w_mat, &bm_i, &bm_o),
            "w does not intertwine the bimodule structures",
        ));

        // w~ := w ∘ pi_i on T ⊗ Q_X.
        let w_tilde = w_mat.mul(&q_i.proj);

        // Condition 1: w~ ∘ (unit_T ⊗ Q) = unit_o.
        let lhs = w_tilde.mul(&self.ctx.t.unit.kron(&id_q));
        let rhs = self.unit_o(&base)?;
        checks.push(Check::eq_mats("transposition-condition-1", &lhs, &rhs));

        // Condition 2 on T ⊗ T ⊗ Q:
        // w~ ∘ (mult ⊗ Q) = mult_o ∘ O(w~) ∘ dlaw_free ∘ (T ⊗ w~) ∘ (chi ⊗ Q).
        let lhs = w_tilde.mul(&self.ctx.t.mult.kron(&id_q));
        let chi_step = self.ctx.chi_tt().kron(&id_q);
        let t_w = id_t.kron(&w_tilde);
        let tp = self.dlaw_free(&base)?;
        // O applied to w~: Q_{F base} -> Q_{O base} lifted through the outer stages.
        let o_w = self.map_o(&w_tilde, &[Op::Free], &o)?;
        let mo = self.mult_o(&base)?;
        let rhs = mo.mul(&o_w).mul(&tp).mul(&t_w).mul(&chi_step);
        checks.push(Check::eq_mats("transposition-condition-2", &lhs, &rhs));
        let _ = f;
        Ok(checks)
    }

    /// Exhaustively enumerate diagonal transpositions w(t ⊗ x) = c(deg t) t ⊗ x
    /// with c valued in m-th roots of unity and c(e) = 1, keeping those that
    /// descend and pass both transposition conditions. Graded backend only.
    pub fn solve_diagonal_transposition(
        &mut self,
        order: u64,
    ) -> Result<Vec<(Vec<(GroupElt, Scalar)>, Mat)>> {
        use crate::backend::{Backend, Obj};
        let (Backend::Graded { gamma }, Obj::Graded(t_space)) =
            (self.ctx.backend.clone(), self.ctx.t.obj.clone())
        else {
            return Err(EngineError::UnsupportedBackend(
                "diagonal transpositions need the graded backend".into(),
            ));
        };
        let group = gamma.group.clone();
        let f = self.ctx.field();
        let roots = crate::field::roots_of_unity(f, order);

        // Degrees occurring in T, in group index order; the identity degree is
        // pinned to coefficient 1.
        let mut deg_idxs: Vec<usize> = t_space.degrees.iter().map(|d| group.index_of(d)).collect();
        deg_idxs.sort_unstable();
        deg_idxs.dedup();
        let free_slots: Vec<usize> = deg_idxs
            .iter()
            .copied()
            .filter(|&d| d != group.index_of(&group.zero()))
            .collect();

        let base: Word = vec![];
        let o: Word = vec![Op::Outer];
        let i: Word = vec![Op::Inner];
        let q_o = self.stage_q(&o)?;
        let q_i = self.stage_q(&i)?;
        let dim_x = self.dim(&base)?;

        let mut solutions = Vec::new();
        let mut choice = vec![0usize; free_slots.len()];
        loop {
            // Assemble the diagonal matrix on T ⊗ Q_X.
            let mut assign: BTreeMap<usize, Scalar> = BTreeMap::new();
            assign.insert(group.index_of(&group.zero()), f.one());
            for (s, &d) in free_slots.iter().enumerate() {
                assign.insert(d, roots[choice[s]].clone());
            }
            let mut diag = Mat::zeros(f, t_space.dim() * dim_x, t_space.dim() * dim_x);
            for ti in 0..t_space.dim() {
                let c = assign[&group.index_of(t_space.degree(ti))].clone();
                for xi in 0..dim_x {
                    diag.set(ti * dim_x + xi, ti * dim_x + xi, c.clone());
                }
            }
            // Descend Q_I -> Q_O if possible, then verify the conditions.
            if let Ok(w_mat) = QuotientSpace::induce(&diag, &q_i, &q_o) {
                let checks = self.check_transposition(&w_mat)?;
                if checks.iter().all(|c| c.pass) {
                    let table: Vec<(GroupElt, Scalar)> = deg_idxs
                        .iter()
                        .map(|&d| (group.elem(d), assign[&d].clone()))
                        .collect();
                    solutions.push((table, w_mat));
                }
            }
            // Advance the mixed-radix counter deterministically.
            let mut pos = free_slots.len();
            loop {
                if pos == 0 {
                    return Ok(solutions);
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < roots.len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }
}
