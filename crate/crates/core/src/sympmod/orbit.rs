//! Blockwise SL2 x SL2 action on (Z/N)^4 and orbit closures of subgroup
//! states under it.
//!
//! The action is materialized as one permutation table per generator over
//! all N^4 vectors, so orbit steps are index lookups. Subgroup states are
//! canonicalized as sorted index vectors.

use super::{decode, encode, space_size};
use crate::arith::factorize;
use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// All 2x2 matrices over Z/N with determinant 1, as (m00, m01, m10, m11).
pub fn sl2_elements(n: u64) -> Result<Vec<[u64; 4]>> {
    // the candidate scan is n^4, the same budget as a full module scan
    let _ = space_size(n)?;
    let one = 1 % n;
    let mut out = Vec::new();
    for m00 in 0..n {
        for m01 in 0..n {
            for m10 in 0..n {
                for m11 in 0..n {
                    let det = (i128::from(m00) * i128::from(m11)
                        - i128::from(m01) * i128::from(m10))
                    .rem_euclid(i128::from(n)) as u64;
                    if det == one {
                        out.push([m00, m01, m10, m11]);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// |SL2(Z/N)| = N^3 * prod over p | N of (1 - p^-2), computed exactly.
pub fn sl2_order(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let mut count = u128::from(n).pow(3);
    for &(p, _) in f.factors() {
        let p2 = u128::from(p) * u128::from(p);
        count = count / p2 * (p2 - 1);
    }
    u64::try_from(count).map_err(|_| Error::magnitude("group order exceeds 64 bits"))
}

fn apply_block(n: u64, m: [u64; 4], x: u64, y: u64) -> (u64, u64) {
    (
        ((u128::from(m[0]) * u128::from(x) + u128::from(m[1]) * u128::from(y)) % u128::from(n))
            as u64,
        ((u128::from(m[2]) * u128::from(x) + u128::from(m[3]) * u128::from(y)) % u128::from(n))
            as u64,
    )
}

fn rotation(n: u64) -> [u64; 4] {
    // (x, y) -> (-y, x)
    [0, if n == 1 { 0 } else { n - 1 }, 1 % n, 0]
}

fn shear(n: u64) -> [u64; 4] {
    // (x, y) -> (x + y, y)
    [1 % n, 1 % n, 0, 1 % n]
}

/// Permutation tables for the four generators (S,I), (T,I), (I,S), (I,T)
/// of SL2(Z/N) x SL2(Z/N), each acting blockwise on (e-part, f-part).
pub(crate) fn pair_generator_tables(n: u64) -> Result<Vec<Vec<u32>>> {
    let size = space_size(n)?;
    let mut tables = Vec::with_capacity(4);
    for block in [0usize, 2] {
        for m in [rotation(n), shear(n)] {
            let mut table = vec![0u32; size];
            for (idx, slot) in table.iter_mut().enumerate() {
                let mut c = decode(n, idx);
                let (x, y) = apply_block(n, m, c[block], c[block + 1]);
                c[block] = x;
                c[block + 1] = y;
                *slot = encode(n, c) as u32;
            }
            tables.push(table);
        }
    }
    Ok(tables)
}

fn step(state: &[u32], table: &[u32]) -> Vec<u32> {
    let mut next: Vec<u32> = state.iter().map(|&i| table[i as usize]).collect();
    next.sort_unstable();
    next
}

/// Closure of a canonical subgroup state under the generator tables.
pub(crate) fn orbit_of_state(start: Vec<u32>, tables: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for table in tables {
            let next = step(&cur, table);
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Closure of a pair of canonical states under the simultaneous action.
pub(crate) fn orbit_of_state_pair(
    start: (Vec<u32>, Vec<u32>),
    tables: &[Vec<u32>],
) -> HashSet<(Vec<u32>, Vec<u32>)> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for table in tables {
            let next = (step(&cur.0, table), step(&cur.1, table));
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn mat_mul(n: u64, a: [u64; 4], b: [u64; 4]) -> [u64; 4] {
        let m = |x: u64, y: u64, z: u64, w: u64| {
            ((u128::from(x) * u128::from(y) + u128::from(z) * u128::from(w)) % u128::from(n))
                as u64
        };
        [
            m(a[0], b[0], a[1], b[2]),
            m(a[0], b[1], a[1], b[3]),
            m(a[2], b[0], a[3], b[2]),
            m(a[2], b[1], a[3], b[3]),
        ]
    }

    #[test]
    fn sl2_small_counts() {
        assert_eq!(sl2_elements(1).unwrap().len(), 1);
        assert_eq!(sl2_elements(2).unwrap().len(), 6);
        assert_eq!(sl2_elements(3).unwrap().len(), 24);
        assert_eq!(sl2_elements(6).unwrap().len(), 144);
    }

    #[test]
    fn sl2_counts_match_formula() {
        for n in 1u64..=12 {
            assert_eq!(
                sl2_elements(n).unwrap().len() as u64,
                sl2_order(n).unwrap(),
                "N = {n}"
            );
        }
    }

    #[test]
    fn sl2_bound_is_enforced() {
        assert!(matches!(
            sl2_elements(38),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn rotation_and_shear_generate_sl2() {
        for n in 1u64..=8 {
            let all: HashSet<[u64; 4]> = sl2_elements(n).unwrap().into_iter().collect();
            let id = [1 % n, 0, 0, 1 % n];
            let mut seen = HashSet::new();
            let mut queue = vec![id];
            seen.insert(id);
            while let Some(cur) = queue.pop() {
                for g in [rotation(n), shear(n)] {
                    let next = mat_mul(n, g, cur);
                    if seen.insert(next) {
                        queue.push(next);
                    }
                }
            }
            assert_eq!(seen, all, "N = {n}");
        }
    }

    #[test]
    fn generators_act_by_unit_determinant() {
        // orbit of a primitive vector under one factor covers exactly the
        // primitive pairs in that block
        let n = 4u64;
        let tables = pair_generator_tables(n).unwrap();
        let start = vec![encode(n, [1, 0, 0, 0]) as u32];
        let orbit = orbit_of_state(start, &tables[0..2]);
        let mut expected = 0;
        for a in 0..n {
            for b in 0..n {
                if crate::arith::gcd3(n, a, b) == 1 {
                    expected += 1;
                }
            }
        }
        assert_eq!(orbit.len(), expected as usize);
    }

    #[test]
    fn orbit_is_independent_of_generator_order() {
        let n = 6u64;
        let tables = pair_generator_tables(n).unwrap();
        let g = super::super::standard_cyclic(n, 2, 3).unwrap();
        let start = g.to_indices();
        let base = orbit_of_state(start.clone(), &tables);
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..3 {
            let mut shuffled: Vec<Vec<u32>> = tables.clone();
            shuffled.shuffle(&mut rng);
            assert_eq!(orbit_of_state(start.clone(), &shuffled), base);
        }
    }

    #[test]
    fn tables_preserve_the_form() {
        use super::super::form_raw;
        for n in [2u64, 3, 4, 6] {
            let tables = pair_generator_tables(n).unwrap();
            let size = space_size(n).unwrap();
            for table in &tables {
                for idx in 0..size.min(200) {
                    for jdx in 0..size.min(200) {
                        let v = decode(n, idx);
                        let w = decode(n, jdx);
                        let tv = decode(n, table[idx] as usize);
                        let tw = decode(n, table[jdx] as usize);
                        assert_eq!(form_raw(v, w, n), form_raw(tv, tw, n));
                    }
                }
            }
        }
    }
}
