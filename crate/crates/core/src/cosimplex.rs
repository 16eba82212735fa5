//! The cosimplex attached to a tower and a transposition morphism: objects
//! Z^n = Pi(O^{n+1}), cofaces, codegeneracies, the para-cocyclic operator,
//! the relation checker, and the closed one-matrix form of the operator on
//! the graded backend.

use crate::backend::{Backend, Obj};
use crate::error::{EngineError, Result};
use crate::matrix::Mat;
use crate::quotient::QuotientSpace;
use crate::report::Check;
use crate::tower::{Op, Tower, Word};

fn oword(k: usize) -> Word {
    vec![Op::Outer; k]
}

/// Which relation family the checker enforces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationSet {
    /// Cosimplicial identities plus the compatibilities of the para-cocyclic
    /// operator with cofaces and codegeneracies (the operator's power is
    /// reported but not required to be the identity).
    Default,
    /// Additionally require w_n^{n+1} = id at every level.
    FullCyclic,
}

pub struct Cosimplex {
    pub max_degree: usize,
    /// Quotient presenting Z^n over Q_{O^{n+1}}, for n = 0..=max_degree.
    pub zq: Vec<QuotientSpace>,
    /// d[n-1][k] = d_k : Z^{n-1} -> Z^n, for n = 1..=max_degree, k = 0..=n.
    pub d: Vec<Vec<Mat>>,
    /// s[n][k] = s_k : Z^{n+1} -> Z^n, for n = 0..=max_degree, k = 0..=n.
    pub s: Vec<Vec<Mat>>,
    /// w[n] = the para-cocyclic operator on Z^n, for n = 0..=max_degree + 1.
    pub w: Vec<Mat>,
}

impl Cosimplex {
    pub fn dims(&self) -> Vec<usize> {
        self.zq.iter().map(|q| q.q_dim).collect()
    }
}

/// Apply the outer endofunctor k times to f: Q_{w1} -> Q_{w2}, tracking words.
fn map_o_iter(
    tower: &mut Tower,
    f: &Mat,
    k: usize,
    w1: &[Op],
    w2: &[Op],
) -> Result<(Mat, Word, Word)> {
    let mut m = f.clone();
    let mut a = w1.to_vec();
    let mut b = w2.to_vec();
    for _ in 0..k {
        m = tower.map_o(&m, &a, &b)?;
        a.insert(0, Op::Outer);
        b.insert(0, Op::Outer);
    }
    Ok((m, a, b))
}

/// The para-cocyclic operator on Z^n, built from the iso i, a chain of
/// induced distributive laws moving the inner factor outward, and the
/// transposition pushed through n outer applications.
fn build_w(tower: &mut Tower, w_mat: &Mat, n: usize) -> Result<Mat> {
    let mut acc = tower.iso_i(&oword(n))?;
    let mut dom_word = {
        let mut w = vec![Op::Inner];
        w.extend(oword(n));
        w
    };
    for k in 0..n {
        let base = oword(n - 1 - k);
        let step = tower.dlaw(&base)?;
        let mut d1 = vec![Op::Inner];
        d1.extend(oword(n - k));
        let mut d2 = vec![Op::Outer, Op::Inner];
        d2.extend(oword(n - 1 - k));
        let (lifted, lw1, lw2) = map_o_iter(tower, &step, k, &d1, &d2)?;
        debug_assert_eq!(lw1, dom_word);
        acc = tower.pi_map(&lifted, &lw1, &lw2)?.mul(&acc);
        dom_word = lw2;
    }
    let (pushed, pw1, pw2) = map_o_iter(tower, w_mat, n, &[Op::Inner], &[Op::Outer])?;
    debug_assert_eq!(pw1, dom_word);
    Ok(tower.pi_map(&pushed, &pw1, &pw2)?.mul(&acc))
}

/// Build the cosimplex through a maximal degree, with the operator available
/// one level above it so every stated relation is checkable at the top level.
pub fn build(tower: &mut Tower, w_mat: &Mat, max_degree: usize) -> Result<Cosimplex> {
    let mut zq = Vec::new();
    for n in 0..=max_degree {
        zq.push(tower.pi(&oword(n + 1))?);
    }
    let mut d = Vec::new();
    for n in 1..=max_degree {
        let mut row = Vec::new();
        for k in 0..=n {
            let unit = tower.unit_o(&oword(n - k))?;
            let (lifted, w1, w2) = map_o_iter(tower, &unit, k, &oword(n - k), &oword(n - k + 1))?;
            row.push(tower.pi_map(&lifted, &w1, &w2)?);
        }
        d.push(row);
    }
    let mut s = Vec::new();
    for n in 0..=max_degree {
        let mut row = Vec::new();
        for k in 0..=n {
            let mult = tower.mult_o(&oword(n - k))?;
            let (lifted, w1, w2) =
                map_o_iter(tower, &mult, k, &oword(n - k + 2), &oword(n - k + 1))?;
            row.push(tower.pi_map(&lifted, &w1, &w2)?);
        }
        s.push(row);
    }
    let mut w = Vec::new();
    for n in 0..=max_degree + 1 {
        w.push(build_w(tower, w_mat, n)?);
    }
    Ok(Cosimplex { max_degree, zq, d, s, w })
}

/// All relations expressible with the built levels, one named check each.
pub fn check_relations(cx: &Cosimplex, set: RelationSet) -> Vec<Check> {
    let n_max = cx.max_degree;
    let mut checks = Vec::new();
    let d = |n: usize, k: usize| -> &Mat { &cx.d[n - 1][k] };

    // d_j d_i = d_i d_{j-1} for i < j, composite Z^{n-2} -> Z^n.
    for n in 2..=n_max {
        for j in 1..=n {
            for i in 0..j {
                checks.push(Check::eq_mats(
                    format!("cosimplicial-dd-n{n}-i{i}-j{j}"),
                    &d(n, j).mul(d(n - 1, i)),
                    &d(n, i).mul(d(n - 1, j - 1)),
                ));
            }
        }
    }
    // s_j s_i = s_i s_{j+1} for i <= j, composite Z^{n+2} -> Z^n.
    for n in 0..n_max {
        for j in 0..=n {
            for i in 0..=j {
                checks.push(Check::eq_mats(
                    format!("cosimplicial-ss-n{n}-i{i}-j{j}"),
                    &cx.s[n][j].mul(&cx.s[n + 1][i]),
                    &cx.s[n][i].mul(&cx.s[n + 1][j + 1]),
                ));
            }
        }
    }
    // Mixed relations s_j d_i, composite Z^n -> Z^n.
    for n in 1..=n_max {
        for j in 0..n {
            for i in 0..=n {
                let lhs = cx.s[n - 1][j].mul(d(n, i));
                let name = format!("cosimplicial-sd-n{n}-i{i}-j{j}");
                if i == j || i == j + 1 {
                    let id = Mat::identity(lhs.field, lhs.rows);
                    checks.push(Check::eq_mats(name, &lhs, &id));
                } else if i < j {
                    checks.push(Check::eq_mats(name, &lhs, &d(n - 1, i).mul(&cx.s[n - 2][j - 1])));
                } else {
                    checks.push(Check::eq_mats(name, &lhs, &d(n - 1, i - 1).mul(&cx.s[n - 2][j])));
                }
            }
        }
    }
    // Compatibilities of the para-cocyclic operator.
    for n in 1..=n_max {
        checks.push(Check::eq_mats(
            format!("compat-wd-n{n}-i0"),
            &cx.w[n].mul(d(n, 0)),
            d(n, n),
        ));
        for i in 1..=n {
            checks.push(Check::eq_mats(
                format!("compat-wd-n{n}-i{i}"),
                &cx.w[n].mul(d(n, i)),
                &d(n, i - 1).mul(&cx.w[n - 1]),
            ));
        }
    }
    for n in 0..=n_max {
        checks.push(Check::eq_mats(
            format!("compat-ws-n{n}-j0"),
            &cx.w[n].mul(&cx.s[n][0]),
            &cx.s[n][n].mul(&cx.w[n + 1]).mul(&cx.w[n + 1]),
        ));
        for j in 1..=n {
            checks.push(Check::eq_mats(
                format!("compat-ws-n{n}-j{j}"),
                &cx.w[n].mul(&cx.s[n][j]),
                &cx.s[n][j - 1].mul(&cx.w[n + 1]),
            ));
        }
    }
    // The operator power at each level: required only in the full cyclic set,
    // otherwise reported as informational.
    for n in 0..=n_max {
        let mut p = Mat::identity(cx.w[n].field, cx.w[n].rows);
        for _ in 0..=n {
            p = cx.w[n].mul(&p);
        }
        let id = Mat::identity(p.field, p.rows);
        let mut chk = Check::eq_mats(format!("cyclic-wpow-n{n}"), &p, &id);
        if set == RelationSet::Default && !chk.pass {
            chk.witness = Some(format!(
                "operator power differs from the identity (informational): {}",
                chk.witness.unwrap_or_default()
            ));
        }
        checks.push(chk);
    }
    checks
}

/// Names of the checks whose failure is tolerated under the default set.
pub fn informational_only(name: &str, set: RelationSet) -> bool {
    set == RelationSet::Default && name.starts_with("cyclic-wpow-")
}

/// The closed one-matrix form of the operator on the graded backend: rotate
/// the outermost tensor factor to the inside with the bi-character coefficient
/// of moving it past the others, apply the transposition on the innermost
/// pair, and read the result off through the flattened presentation of Z^n.
pub fn closed_graded(tower: &mut Tower, w_mat: &Mat, n: usize) -> Result<Mat> {
    let (Backend::Graded { gamma }, Obj::Graded(t_space)) =
        (tower.ctx.backend.clone(), tower.ctx.t.obj.clone())
    else {
        return Err(EngineError::UnsupportedBackend(
            "the closed operator form needs the graded backend".into(),
        ));
    };
    let group = gamma.group.clone();
    let f = tower.ctx.field();
    let dt = t_space.dim();
    let word = oword(n + 1);
    let flat = tower.flat_q(&word)?;
    let pi_q = tower.pi(&word)?;
    let full = QuotientSpace::compose(&flat, &pi_q);
    let dim_x = tower.base.dim();

    // The transposition acting on the innermost T ⊗ X pair, as a map of the
    // free ambient: section of the outer stage after w after the inner stage
    // projection.
    let q_i = tower.stage_q(&[Op::Inner])?;
    let q_o = tower.stage_q(&[Op::Outer])?;
    let w_rep = q_o.sect.mul(w_mat).mul(&q_i.proj);

    // Rotation on T^{⊗(n+1)} ⊗ X with the braiding coefficient.
    let ambient = flat.ambient_dim;
    let mut rot = Mat::zeros(f, ambient, ambient);
    let mut idx = vec![0usize; n + 1];
    loop {
        // Source basis vector: t_{idx[0]} ⊗ ... ⊗ t_{idx[n]} ⊗ x.
        let mut col_base = 0usize;
        for &i in &idx {
            col_base = col_base * dt + i;
        }
        let mut row_base = 0usize;
        for &i in &idx[1..] {
            row_base = row_base * dt + i;
        }
        row_base = row_base * dt + idx[0];
        let mut rest = group.zero();
        for &i in &idx[1..] {
            rest = group.add(&rest, t_space.degree(i));
        }
        let coeff = gamma.eval(&rest, t_space.degree(idx[0]));
        for x in 0..dim_x {
            rot.set(row_base * dim_x + x, col_base * dim_x + x, coeff.clone());
        }
        let mut pos = n + 1;
        loop {
            if pos == 0 {
                let id_rest = Mat::identity(f, ambient / (dt * dim_x));
                let op = id_rest.kron(&w_rep);
                return Ok(full.proj.mul(&op).mul(&rot).mul(&full.sect));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dt {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::testctx::{super_ctx, trivial_ctx};

    fn trivial_setup() -> (Tower, Mat) {
        let (ctx, x) = trivial_ctx();
        let mut t = Tower::new(ctx, x);
        let q_i = t.stage_q(&[Op::Inner]).unwrap();
        let q_o = t.stage_q(&[Op::Outer]).unwrap();
        let id = Mat::identity(t.ctx.field(), q_i.ambient_dim);
        let w = QuotientSpace::induce(&id, &q_i, &q_o).unwrap();
        (t, w)
    }

    fn super_setup() -> (Tower, Mat) {
        let (ctx, x) = super_ctx();
        let mut t = Tower::new(ctx, x);
        let f = t.ctx.field();
        let two = f.from_i64(2);
        let sols = t.solve_diagonal_transposition(12).unwrap();
        let w = sols
            .into_iter()
            .find(|(table, _)| table.iter().any(|(g, c)| g == &vec![1] && *c == two))
            .unwrap()
            .1;
        (t, w)
    }

    #[test]
    fn trivial_full_cyclic() {
        let (mut t, w) = trivial_setup();
        let cx = build(&mut t, &w, 2).unwrap();
        assert_eq!(cx.dims(), vec![2, 2, 2]);
        let checks = check_relations(&cx, RelationSet::FullCyclic);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn super_para_but_not_cyclic() {
        let (mut t, w) = super_setup();
        let cx = build(&mut t, &w, 2).unwrap();
        assert_eq!(cx.dims(), vec![2, 4, 8]);
        let checks = check_relations(&cx, RelationSet::Default);
        for c in &checks {
            if c.name.starts_with("cyclic-wpow-n1") || c.name.starts_with("cyclic-wpow-n2") {
                assert!(!c.pass, "expected a para witness at {}", c.name);
            } else if !c.name.starts_with("cyclic-wpow-") {
                assert!(c.pass, "{c:?}");
            }
        }
    }

    #[test]
    fn closed_form_matches_composed() {
        for (mut t, w) in [trivial_setup(), super_setup()] {
            let cx = build(&mut t, &w, 2).unwrap();
            for n in 0..=2 {
                let closed = closed_graded(&mut t, &w, n).unwrap();
                assert_eq!(closed, cx.w[n], "degree {n}");
            }
        }
    }

    #[test]
    fn operator_order_on_super_top_class() {
        // On the mixed classes w_1 swaps the factors up to the coefficient
        // c(1) = 2, so w_1^2 = 2 on that block and the order of w_1 is 24.
        let (mut t, w) = super_setup();
        let cx = build(&mut t, &w, 1).unwrap();
        let f = t.ctx.field();
        let w1 = &cx.w[1];
        let id = Mat::identity(f, w1.rows);
        let mut p = id.clone();
        for k in 1..=24 {
            p = w1.mul(&p);
            assert_eq!(p == id, k == 24, "power {k}");
        }
    }
}
