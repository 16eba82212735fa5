//! Explicitly presented quotients of based vector spaces. Every coequalizer in
//! the engine is realized as a cokernel through this type.

use crate::error::{EngineError, Result};
use crate::field::FieldSpec;
use crate::matrix::Mat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    /// Columns form the canonical (RREF) basis of the subspace quotiented out.
    pub relations: Mat,
    /// ambient_dim -> q_dim.
    pub proj: Mat,
    /// q_dim -> ambient_dim; picks the non-pivot ambient coordinates.
    pub sect: Mat,
    /// Ambient coordinates carried by the section, in increasing order.
    pub sect_cols: Vec<usize>,
    pub q_dim: usize,
}

impl QuotientSpace {
    /// Quotient by the column space of `m` (a map into the ambient space).
    pub fn cokernel(m: &Mat) -> QuotientSpace {
        let field = m.field;
        let n = m.rows;
        let (b, pivots) = m.transpose().rref();
        let r = pivots.len();
        let sect_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let q_dim = sect_cols.len();
        let mut relations = Mat::zeros(field, n, r);
        for i in 0..r {
            for j in 0..n {
                relations.set(j, i, b.get(i, j).clone());
            }
        }
        let mut sect = Mat::zeros(field, n, q_dim);
        for (k, &c) in sect_cols.iter().enumerate() {
            sect.set(c, k, field.one());
        }
        // The pivot coordinate of relation row i is congruent to minus the rest
        // of that row; project it accordingly.
        let mut proj = Mat::zeros(field, q_dim, n);
        for (k, &c) in sect_cols.iter().enumerate() {
            proj.set(k, c, field.one());
        }
        for (i, &pc) in pivots.iter().enumerate() {
            for (k, &c) in sect_cols.iter().enumerate() {
                proj.set(k, pc, b.get(i, c).neg());
            }
        }
        let q = QuotientSpace { ambient_dim: n, relations, proj, sect, sect_cols, q_dim };
        q.assert_invariants();
        q
    }

    /// The trivial quotient (no relations) on an n-dimensional space.
    pub fn identity(field: FieldSpec, n: usize) -> QuotientSpace {
        QuotientSpace::cokernel(&Mat::zeros(field, n, 1))
    }

    pub fn field(&self) -> FieldSpec {
        self.proj.field
    }

    fn assert_invariants(&self) {
        let id = Mat::identity(self.field(), self.q_dim);
        assert_eq!(self.proj.mul(&self.sect), id, "proj ∘ sect must be the identity");
        assert!(self.proj.mul(&self.relations).is_zero(), "proj must kill the relations");
        assert_eq!(
            self.relations.rank() + self.q_dim,
            self.ambient_dim,
            "rank(relations) + q_dim must equal ambient_dim"
        );
    }

    /// Push `f: dom.ambient -> cod.ambient` to the quotients, checking that it
    /// descends.
    pub fn induce(f: &Mat, dom: &QuotientSpace, cod: &QuotientSpace) -> Result<Mat> {
        assert_eq!(f.cols, dom.ambient_dim);
        assert_eq!(f.rows, cod.ambient_dim);
        let obstruction = cod.proj.mul(f).mul(&dom.relations);
        if !obstruction.is_zero() {
            return Err(EngineError::NotWellDefined(format!(
                "proj ∘ f ∘ relations has a nonzero column (ambient {} -> {})",
                dom.ambient_dim, cod.ambient_dim
            )));
        }
        Ok(cod.proj.mul(f).mul(&dom.sect))
    }

    /// Flatten a two-step quotient: `first` on the ambient space, `second` on
    /// the quotient of `first`.
    pub fn compose(first: &QuotientSpace, second: &QuotientSpace) -> QuotientSpace {
        assert_eq!(first.q_dim, second.ambient_dim);
        let rel = first.relations.hstack(&first.sect.mul(&second.relations));
        let proj = second.proj.mul(&first.proj);
        let sect = first.sect.mul(&second.sect);
        let sect_cols = second
            .sect_cols
            .iter()
            .map(|&c| first.sect_cols[c])
            .collect();
        let q = QuotientSpace {
            ambient_dim: first.ambient_dim,
            relations: rel,
            proj,
            sect,
            sect_cols,
            q_dim: second.q_dim,
        };
        q.assert_invariants();
        q
    }

    /// The quotient T ⊗ (V / W) of T ⊗ V, with T a free left tensor factor.
    pub fn lift_left(t_dim: usize, q: &QuotientSpace) -> QuotientSpace {
        let field = q.field();
        let id = Mat::identity(field, t_dim);
        let mut sect_cols = Vec::with_capacity(t_dim * q.q_dim);
        for i in 0..t_dim {
            for &c in &q.sect_cols {
                sect_cols.push(i * q.ambient_dim + c);
            }
        }
        let out = QuotientSpace {
            ambient_dim: t_dim * q.ambient_dim,
            relations: id.kron(&q.relations),
            proj: id.kron(&q.proj),
            sect: id.kron(&q.sect),
            sect_cols,
            q_dim: t_dim * q.q_dim,
        };
        out.assert_invariants();
        out
    }
}
