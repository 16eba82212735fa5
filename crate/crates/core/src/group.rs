//! Finite abelian groups presented by invariant factors.

use crate::error::{EngineError, Result};

pub type GroupElt = Vec<u64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<u64>) -> Result<FiniteAbelianGroup> {
        if invariant_factors.iter().any(|&n| n < 2) {
            return Err(EngineError::Validation("invariant factors must be >= 2".into()));
        }
        let g = FiniteAbelianGroup { invariant_factors };
        if g.order() > 64 {
            return Err(EngineError::Validation("group order must be <= 64".into()));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.invariant_factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn zero(&self) -> GroupElt {
        vec![0; self.invariant_factors.len()]
    }

    pub fn canon(&self, g: &[u64]) -> Result<GroupElt> {
        if g.len() != self.invariant_factors.len() {
            return Err(EngineError::GroupMismatch);
        }
        Ok(g.iter().zip(&self.invariant_factors).map(|(x, n)| x % n).collect())
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> GroupElt {
        a.iter()
            .zip(b)
            .zip(&self.invariant_factors)
            .map(|((x, y), n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> GroupElt {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(x, n)| (n - x % n) % n)
            .collect()
    }

    /// Mixed-radix index of an element, leftmost factor most significant.
    pub fn index_of(&self, g: &[u64]) -> usize {
        let mut idx = 0usize;
        for (x, n) in g.iter().zip(&self.invariant_factors) {
            idx = idx * (*n as usize) + (*x as usize);
        }
        idx
    }

    pub fn elem(&self, mut idx: usize) -> GroupElt {
        let mut out = vec![0u64; self.invariant_factors.len()];
        for k in (0..self.invariant_factors.len()).rev() {
            let n = self.invariant_factors[k] as usize;
            out[k] = (idx % n) as u64;
            idx /= n;
        }
        out
    }

    pub fn elements(&self) -> Vec<GroupElt> {
        (0..self.order()).map(|i| self.elem(i)).collect()
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::field::gcd(a, b) * b
}
