//! Quotients X = (Z/N)^4 / K with an explicit projection, materialized as
//! a table of lexicographically minimal coset representatives.

use super::{add_mod, decode, encode, space_size, ModVector, Subgroup};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

pub struct Quotient {
    modulus: u64,
    kernel: Subgroup,
    /// index -> index of the lex-min representative of its coset
    rep: Vec<u32>,
    /// sorted list of distinct representative indices (the elements of X)
    reps: Vec<u32>,
}

impl Quotient {
    pub fn new(kernel: &Subgroup) -> Result<Self> {
        let n = kernel.modulus();
        let size = space_size(n)?;
        let mut rep = vec![u32::MAX; size];
        let mut reps = Vec::with_capacity(size / kernel.raw_elements().len());
        // scanning in index order makes the first unassigned member of a
        // coset its lex-min element
        for idx in 0..size {
            if rep[idx] != u32::MAX {
                continue;
            }
            reps.push(idx as u32);
            let v = decode(n, idx);
            for k in kernel.raw_elements() {
                let mut s = [0u64; 4];
                for i in 0..4 {
                    s[i] = add_mod(v[i], k[i], n);
                }
                rep[encode(n, s)] = idx as u32;
            }
        }
        Ok(Quotient {
            modulus: n,
            kernel: kernel.clone(),
            rep,
            reps,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn order(&self) -> u64 {
        self.reps.len() as u64
    }

    pub(crate) fn rep_of(&self, idx: u32) -> u32 {
        self.rep[idx as usize]
    }

    pub(crate) fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// The representative of v + K.
    pub fn project(&self, v: &ModVector) -> Result<ModVector> {
        if v.modulus() != self.modulus {
            return Err(Error::invalid("modulus mismatch"));
        }
        let r = self.rep_of(encode(self.modulus, v.coords()) as u32);
        Ok(ModVector::from_raw(self.modulus, decode(self.modulus, r as usize)))
    }

    pub(crate) fn add_reps(&self, a: u32, b: u32) -> u32 {
        let n = self.modulus;
        let va = decode(n, a as usize);
        let vb = decode(n, b as usize);
        let mut s = [0u64; 4];
        for i in 0..4 {
            s[i] = add_mod(va[i], vb[i], n);
        }
        self.rep_of(encode(n, s) as u32)
    }

    /// Order of v + K in the quotient.
    pub(crate) fn order_of_rep(&self, r: u32) -> u64 {
        let zero = self.rep_of(0);
        let mut acc = self.rep_of(r);
        let mut k = 1u64;
        while acc != zero {
            acc = self.add_reps(acc, r);
            k += 1;
        }
        k
    }

    /// The cyclic subgroup of X generated by v + K, as sorted rep indices.
    pub(crate) fn cyclic_reps(&self, r: u32) -> Vec<u32> {
        let zero = self.rep_of(0);
        let mut out = vec![zero];
        let mut acc = self.rep_of(r);
        while acc != zero {
            out.push(acc);
            acc = self.add_reps(acc, r);
        }
        out.sort_unstable();
        out
    }

    /// Image of a subgroup, as the sorted set of rep indices.
    pub(crate) fn image_reps(&self, s: &Subgroup) -> Result<BTreeSet<u32>> {
        if s.modulus() != self.modulus {
            return Err(Error::invalid("modulus mismatch"));
        }
        Ok(s
            .raw_elements()
            .iter()
            .map(|&c| self.rep_of(encode(self.modulus, c) as u32))
            .collect())
    }

    /// Image of a subgroup as ModVectors.
    pub fn image(&self, s: &Subgroup) -> Result<BTreeSet<ModVector>> {
        Ok(self
            .image_reps(s)?
            .into_iter()
            .map(|r| ModVector::from_raw(self.modulus, decode(self.modulus, r as usize)))
            .collect())
    }

    /// All vector indices whose coset representative lies in the given set.
    pub(crate) fn preimage_indices(&self, reps: &BTreeSet<u32>) -> Vec<u32> {
        (0..self.rep.len() as u32)
            .filter(|&i| reps.contains(&self.rep_of(i)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::standard_isotropic;
    use super::*;

    #[test]
    fn quotient_order_example() {
        let data = standard_isotropic(1, 1, 2, 2).unwrap();
        let q = Quotient::new(&data.subgroup).unwrap();
        assert_eq!(q.order(), 64);
        assert_eq!(q.order() * data.subgroup.order(), 4u64.pow(4));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let data = standard_isotropic(1, 3, 2, 3).unwrap();
        let q = Quotient::new(&data.subgroup).unwrap();
        let n = q.modulus();
        // kernel maps to zero
        for k in data.subgroup.elements() {
            assert!(q.project(&k).unwrap().is_zero());
        }
        for idx in (0..super::super::space_size(n).unwrap()).step_by(7) {
            for jdx in (0..super::super::space_size(n).unwrap()).step_by(11) {
                let v = ModVector::from_raw(n, decode(n, idx));
                let w = ModVector::from_raw(n, decode(n, jdx));
                let lhs = q.project(&v.add(&w)).unwrap();
                let rhs = q.project(&q.project(&v).unwrap().add(&q.project(&w).unwrap())).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn representatives_are_lex_minimal() {
        let data = standard_isotropic(1, 1, 2, 2).unwrap();
        let q = Quotient::new(&data.subgroup).unwrap();
        let n = q.modulus();
        for &r in q.reps() {
            let v = decode(n, r as usize);
            for k in data.subgroup.raw_elements() {
                let mut s = [0u64; 4];
                for i in 0..4 {
                    s[i] = add_mod(v[i], k[i], n);
                }
                assert!(encode(n, s) >= r as usize);
            }
        }
    }

    #[test]
    fn quotient_element_orders_divide_group_order() {
        let data = standard_isotropic(1, 1, 2, 2).unwrap();
        let q = Quotient::new(&data.subgroup).unwrap();
        for &r in q.reps() {
            assert_eq!(q.order() % q.order_of_rep(r), 0);
            assert_eq!(q.cyclic_reps(r).len() as u64, q.order_of_rep(r));
        }
    }
}
