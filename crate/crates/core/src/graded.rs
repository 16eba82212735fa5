//! G-graded vector spaces and the braiding induced by a bi-character.

use crate::error::{EngineError, Result};
use crate::field::{mult_order, FieldSpec, Scalar};
use crate::group::{FiniteAbelianGroup, GroupElt};
use crate::matrix::Mat;
use crate::report::Check;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiCharacter {
    pub group: FiniteAbelianGroup,
    pub field: FieldSpec,
    /// Dense table over G x G, indexed by group element indices.
    pub table: Vec<Scalar>,
}

impl BiCharacter {
    pub fn new(group: FiniteAbelianGroup, field: FieldSpec, table: Vec<Scalar>) -> Result<BiCharacter> {
        let n = group.order();
        if table.len() != n * n {
            return Err(EngineError::Parse(format!(
                "bi-character table must have {} entries, got {}",
                n * n,
                table.len()
            )));
        }
        for (k, v) in table.iter().enumerate() {
            if v.is_zero() {
                return Err(EngineError::ZeroValue(format!("bi-character table entry {k}")));
            }
        }
        Ok(BiCharacter { group, field, table })
    }

    pub fn eval_idx(&self, g: usize, h: usize) -> &Scalar {
        &self.table[g * self.group.order() + h]
    }

    pub fn eval(&self, g: &[u64], h: &[u64]) -> &Scalar {
        self.eval_idx(self.group.index_of(g), self.group.index_of(h))
    }

    /// Bilinearity in both slots, identity normalization, root-of-unity order,
    /// plus a symmetry report (gamma(h,k)^{-1} = gamma(k,h) for all h,k).
    pub fn validate(&self) -> Vec<Check> {
        let els = self.group.elements();
        let mut checks = Vec::new();
        let mut first_fail: Option<String> = None;
        'left: for g in &els {
            for h in &els {
                for k in &els {
                    let lhs = self.eval(&self.group.add(g, h), k);
                    let rhs = self.eval(g, k).mul(self.eval(h, k));
                    if *lhs != rhs {
                        first_fail = Some(format!("gamma(g+h,k) != gamma(g,k)gamma(h,k) at g={g:?} h={h:?} k={k:?}"));
                        break 'left;
                    }
                }
            }
        }
        checks.push(Check::of("bicharacter-bilinear-left", first_fail.is_none(), first_fail.unwrap_or_default()));

        let mut first_fail: Option<String> = None;
        'right: for g in &els {
            for h in &els {
                for k in &els {
                    let lhs = self.eval(g, &self.group.add(h, k));
                    let rhs = self.eval(g, h).mul(self.eval(g, k));
                    if *lhs != rhs {
                        first_fail = Some(format!("gamma(g,h+k) != gamma(g,h)gamma(g,k) at g={g:?} h={h:?} k={k:?}"));
                        break 'right;
                    }
                }
            }
        }
        checks.push(Check::of("bicharacter-bilinear-right", first_fail.is_none(), first_fail.unwrap_or_default()));

        let e = self.group.zero();
        let unital = els.iter().all(|g| self.eval(&e, g).is_one() && self.eval(g, &e).is_one());
        checks.push(Check::of("bicharacter-unit", unital, "gamma(e,g) or gamma(g,e) is not 1"));

        // Every value must be a root of unity of order dividing exp(G).
        let exp = self.group.exponent();
        let mut bad = None;
        for (k, v) in self.table.iter().enumerate() {
            match mult_order(v) {
                Some(ord) if exp % ord == 0 => {}
                _ => {
                    bad = Some(format!("entry {k} = {v} is not a root of unity of order dividing {exp}"));
                    break;
                }
            }
        }
        checks.push(Check::of("bicharacter-root-of-unity", bad.is_none(), bad.unwrap_or_default()));

        let symmetric = els
            .iter()
            .all(|h| els.iter().all(|k| self.eval(h, k).mul(self.eval(k, h)).is_one()));
        checks.push(Check::of(
            "bicharacter-symmetric",
            symmetric,
            "informational: gamma(h,k)gamma(k,h) != 1 for some pair",
        ));
        checks
    }

    pub fn is_bilinear(&self) -> bool {
        self.validate()
            .iter()
            .filter(|c| c.name != "bicharacter-symmetric")
            .all(|c| c.pass)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSpace {
    pub group: FiniteAbelianGroup,
    pub degrees: Vec<GroupElt>,
}

impl GradedSpace {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn unit(group: &FiniteAbelianGroup) -> GradedSpace {
        GradedSpace { group: group.clone(), degrees: vec![group.zero()] }
    }

    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace> {
        if self.group != other.group {
            return Err(EngineError::GroupMismatch);
        }
        let mut degrees = Vec::with_capacity(self.dim() * other.dim());
        for d1 in &self.degrees {
            for d2 in &other.degrees {
                degrees.push(self.group.add(d1, d2));
            }
        }
        Ok(GradedSpace { group: self.group.clone(), degrees })
    }

    /// Total degree of a flat basis vector of an iterated tensor product is
    /// already stored per basis vector, so nothing extra is needed here.
    pub fn degree(&self, i: usize) -> &GroupElt {
        &self.degrees[i]
    }
}

/// chi_{V,W}: V ⊗ W -> W ⊗ V, (v ⊗ w) -> gamma(deg w, deg v) w ⊗ v.
pub fn braid(v: &GradedSpace, w: &GradedSpace, gamma: &BiCharacter) -> Mat {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Mat::zeros(gamma.field, dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            let c = gamma.eval(w.degree(j), v.degree(i)).clone();
            m.set(j * dv + i, i * dw + j, c);
        }
    }
    m
}

/// chi_{V,W}^{-1}: W ⊗ V -> V ⊗ W, built from gamma^{-1} on the reverse flip
/// (never by matrix inversion).
pub fn braid_inv(v: &GradedSpace, w: &GradedSpace, gamma: &BiCharacter) -> Mat {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Mat::zeros(gamma.field, dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            let c = gamma.eval(w.degree(j), v.degree(i)).inv().expect("bi-character values are nonzero");
            m.set(i * dw + j, j * dv + i, c);
        }
    }
    m
}

/// Degree-homogeneity of a matrix as a morphism of graded spaces.
pub fn is_homogeneous(f: &Mat, dom: &GradedSpace, cod: &GradedSpace) -> bool {
    if f.rows != cod.dim() || f.cols != dom.dim() {
        return false;
    }
    for i in 0..f.rows {
        for j in 0..f.cols {
            if !f.get(i, j).is_zero() && cod.degree(i) != dom.degree(j) {
                return false;
            }
        }
    }
    true
}

/// Both hexagon composites of the Yang-Baxter equation on V ⊗ W ⊗ U.
pub fn check_yang_baxter(v: &GradedSpace, w: &GradedSpace, u: &GradedSpace, gamma: &BiCharacter) -> Check {
    let f = gamma.field;
    let idv = Mat::identity(f, v.dim());
    let idw = Mat::identity(f, w.dim());
    let idu = Mat::identity(f, u.dim());
    // Path A: VWU -> WVU -> WUV -> UWV.
    let a = braid(w, u, gamma)
        .kron(&idv)
        .mul(&idw.kron(&braid(v, u, gamma)))
        .mul(&braid(v, w, gamma).kron(&idu));
    // Path B: VWU -> VUW -> UVW -> UWV.
    let b = idu
        .kron(&braid(v, w, gamma))
        .mul(&braid(v, u, gamma).kron(&idw))
        .mul(&idv.kron(&braid(w, u, gamma)));
    Check::eq_mats("yang-baxter", &a, &b)
}

/// All bi-characters on the given group over the given field, enumerated
/// deterministically by assigning root-of-unity values to generator pairs.
pub fn enumerate_bicharacters(group: &FiniteAbelianGroup, field: FieldSpec) -> Vec<BiCharacter> {
    // A bi-character is determined by its values on pairs of cyclic generators;
    // the value on the (i, j) generator pair must be a root of unity of order
    // dividing gcd(n_i, n_j).
    let k = group.invariant_factors.len();
    let mut slots: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let m = crate::field::gcd(group.invariant_factors[i], group.invariant_factors[j]);
            slots.push((i, j, crate::field::roots_of_unity(field, m)));
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; slots.len()];
    loop {
        // Build the table from the generator values.
        let n = group.order();
        let mut table = Vec::with_capacity(n * n);
        for gi in 0..n {
            let g = group.elem(gi);
            for hi in 0..n {
                let h = group.elem(hi);
                let mut val = field.one();
                for (s, (i, j, roots)) in slots.iter().enumerate() {
                    let e = g[*i] * h[*j];
                    val = val.mul(&roots[choice[s]].pow(e));
                }
                table.push(val);
            }
        }
        let bc = BiCharacter::new(group.clone(), field, table).expect("constructed table is total and nonzero");
        debug_assert!(bc.is_bilinear());
        out.push(bc);
        // Advance the mixed-radix counter.
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < slots[pos].2.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}
