//! Exact integer arithmetic used everywhere else: gcd/lcm, trial-division
//! factorisation, divisor counting, smallest-witness solutions of
//! `a*u - b*v = c`, and the valuation split of a pair (n, d).

use crate::error::{Error, Result};

/// Largest value accepted by [`factorize`]: 2^63 - 1.
///
/// Trial division up to sqrt(x) is the chosen method; above this bound the
/// call is rejected rather than silently taking unbounded time on a large
/// prime. Everything this crate is used for lives far below the bound.
pub const FACTORIZE_LIMIT: u64 = i64::MAX as u64;

/// Greatest common divisor; gcd(0, 0) = 0 by convention.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of three values.
pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Signed gcd, always non-negative.
pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd and lcm of two positive integers in one call.
pub fn gcd_lcm(x: u64, y: u64) -> Result<(u64, u64)> {
    if x == 0 || y == 0 {
        return Err(Error::invalid("gcd_lcm needs positive arguments"));
    }
    let g = gcd(x, y);
    let l = (x / g)
        .checked_mul(y)
        .ok_or_else(|| Error::magnitude(format!("lcm({x}, {y}) does not fit in 64 bits")))?;
    Ok((g, l))
}

/// Prime factorisation of a positive integer, exponents included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    /// (prime, exponent) pairs in increasing prime order.
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of `p` in the factored value (0 if `p` does not divide it).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |(_, e)| *e)
    }

    /// Number of positive divisors, i.e. the product of (exponent + 1).
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(e + 1)).product()
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                out.extend(prev.iter().map(|d| d * pk));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Factor `x` by trial division. `x` must be in `1..=FACTORIZE_LIMIT`.
pub fn factorize(x: u64) -> Result<Factorization> {
    if x == 0 {
        return Err(Error::invalid("factorize needs a positive argument"));
    }
    if x > FACTORIZE_LIMIT {
        return Err(Error::magnitude(format!(
            "factorize accepts at most {FACTORIZE_LIMIT}, got {x}"
        )));
    }
    let mut rest = x;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    while p.saturating_mul(p) <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: x, factors })
}

/// Number of positive divisors of `x`.
pub fn divisor_count(x: u64) -> Result<u64> {
    Ok(factorize(x)?.divisor_count())
}

/// A solution of `a*u - b*v = c` with the smallest `u >= 1`.
///
/// `v` may be zero or negative; only `u` is canonicalised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutWitness {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub u: u64,
    pub v: i128,
}

impl BezoutWitness {
    /// The defining identity, re-checked exactly.
    pub fn holds(&self) -> bool {
        i128::from(self.a) * i128::from(self.u) - i128::from(self.b) * self.v
            == i128::from(self.c)
    }

    /// The next witness in the u-increasing direction: (u + b, v + a).
    pub fn successor(&self) -> BezoutWitness {
        BezoutWitness {
            u: self.u + self.b,
            v: self.v + i128::from(self.a),
            ..*self
        }
    }
}

// Extended Euclid on signed integers: returns (g, s, t) with a*s + b*t = g.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Solve `a*u - b*v = c` over the integers, returning the witness with the
/// smallest `u >= 1`. Solvable exactly when gcd(a, b) divides c.
pub fn solve_au_bv(a: u64, b: u64, c: u64) -> Result<BezoutWitness> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::invalid("solve_au_bv needs positive a, b, c"));
    }
    let g = gcd(a, b);
    if c % g != 0 {
        return Err(Error::NoSolution(format!(
            "gcd({a}, {b}) = {g} does not divide {c}"
        )));
    }
    // Reduce to a'*u = c' (mod b') with gcd(a', b') = 1, then invert.
    let (ar, br, cr) = (
        i128::from(a / g),
        i128::from(b / g),
        i128::from(c / g) % i128::from(b / g),
    );
    let u = if br == 1 {
        1u64
    } else {
        let (_, inv, _) = egcd(ar.rem_euclid(br), br);
        let u0 = (inv.rem_euclid(br) * cr).rem_euclid(br);
        // smallest representative >= 1 of the residue class u0 mod b'
        if u0 == 0 {
            u64::try_from(br).expect("b' fits u64")
        } else {
            u64::try_from(u0).expect("residue fits u64")
        }
    };
    let v = (i128::from(a) * i128::from(u) - i128::from(c)) / i128::from(b);
    let w = BezoutWitness { a, b, c, u, v };
    assert!(w.holds(), "witness identity must hold by construction");
    Ok(w)
}

/// The split of a pair (n, d) into a common part and coprime leftovers.
///
/// ```text
/// t = product of p^e over primes p with v_p(n) = v_p(d) = e,
/// n = n_reduced * t,   d = d_reduced * t,
/// gcd(n_reduced, t) = gcd(d_reduced, t) = 1,
/// ```
/// and t is the largest divisor of gcd(n, d) with that coprimality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationSplit {
    pub n: u64,
    pub d: u64,
    pub n_reduced: u64,
    pub d_reduced: u64,
    pub common: u64,
}

/// Compute the [`ValuationSplit`] of (n, d).
pub fn valuation_split(n: u64, d: u64) -> Result<ValuationSplit> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("valuation_split needs positive arguments"));
    }
    let fd = factorize(d)?;
    let mut t = 1u64;
    for &(p, e) in factorize(n)?.factors() {
        if fd.exponent_of(p) == e {
            t *= p.pow(e);
        }
    }
    let split = ValuationSplit {
        n,
        d,
        n_reduced: n / t,
        d_reduced: d / t,
        common: t,
    };
    debug_assert_eq!(gcd(split.n_reduced, t), 1);
    debug_assert_eq!(gcd(split.d_reduced, t), 1);
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_gcd(x: u64, y: u64) -> u64 {
        // loop oracle, intentionally dumb
        (1..=x.min(y)).rev().find(|k| x % k == 0 && y % k == 0).unwrap_or(1)
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd_lcm(12, 18).unwrap(), (6, 36));
        assert_eq!(gcd_lcm(5, 7).unwrap(), (1, 35));
        assert_eq!(gcd_lcm(1, 1).unwrap(), (1, 1));
    }

    #[test]
    fn gcd_lcm_matches_naive_oracle_exhaustively() {
        for x in 1u64..=60 {
            for y in 1u64..=60 {
                let (g, l) = gcd_lcm(x, y).unwrap();
                assert_eq!(g, naive_gcd(x, y), "gcd({x}, {y})");
                assert_eq!(g * l, x * y, "gcd*lcm identity for ({x}, {y})");
            }
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(90).unwrap().factors(), &[(2, 1), (3, 2), (5, 1)]);
        assert_eq!(factorize(1).unwrap().factors(), &[]);
        assert_eq!(factorize(8191).unwrap().factors(), &[(8191, 1)]);
    }

    #[test]
    fn factorize_rejects_zero_and_large_values() {
        assert!(matches!(factorize(0), Err(Error::InvalidInput(_))));
        assert!(matches!(
            factorize(FACTORIZE_LIMIT + 1),
            Err(Error::UnsupportedMagnitude(_))
        ));
    }

    #[test]
    fn divisor_count_examples() {
        assert_eq!(divisor_count(45).unwrap(), 6);
        assert_eq!(divisor_count(1).unwrap(), 1);
        assert_eq!(divisor_count(64).unwrap(), 7);
    }

    #[test]
    fn divisors_are_sorted_and_complete() {
        assert_eq!(
            factorize(90).unwrap().divisors(),
            vec![1, 2, 3, 5, 6, 9, 10, 15, 18, 30, 45, 90]
        );
        for x in 1u64..=300 {
            let divs = factorize(x).unwrap().divisors();
            let scan: Vec<u64> = (1..=x).filter(|k| x % k == 0).collect();
            assert_eq!(divs, scan, "divisors of {x}");
        }
    }

    #[test]
    fn bezout_examples() {
        let w = solve_au_bv(3, 2, 1).unwrap();
        assert_eq!((w.u, w.v), (1, 1));
        let w = solve_au_bv(5, 2, 1).unwrap();
        assert_eq!((w.u, w.v), (1, 2));
        let w = solve_au_bv(6, 1, 1).unwrap();
        assert_eq!((w.u, w.v), (1, 5));
    }

    #[test]
    fn bezout_no_solution_when_gcd_fails_to_divide() {
        assert!(matches!(solve_au_bv(4, 2, 3), Err(Error::NoSolution(_))));
    }

    #[test]
    fn bezout_smallest_u_matches_scan_oracle() {
        // independent oracle: scan u upward and take the first that works
        for a in 1u64..=12 {
            for b in 1u64..=12 {
                for c in 1u64..=12 {
                    let scan = (1..=b).find_map(|u| {
                        let num = i128::from(a) * i128::from(u) - i128::from(c);
                        (num.rem_euclid(i128::from(b)) == 0).then(|| (u, num / i128::from(b)))
                    });
                    match (solve_au_bv(a, b, c), scan) {
                        (Ok(w), Some((u, v))) => {
                            assert_eq!((w.u, w.v), (u, v), "witness for ({a}, {b}, {c})")
                        }
                        (Err(Error::NoSolution(_)), None) => {}
                        (got, want) => {
                            panic!("mismatch for ({a}, {b}, {c}): {got:?} vs {want:?}")
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn valuation_split_examples() {
        let s = valuation_split(6, 6).unwrap();
        assert_eq!((s.n_reduced, s.d_reduced, s.common), (1, 1, 6));
        let s = valuation_split(12, 18).unwrap();
        assert_eq!((s.n_reduced, s.d_reduced, s.common), (12, 18, 1));
        let s = valuation_split(1, 6).unwrap();
        assert_eq!((s.n_reduced, s.d_reduced, s.common), (1, 6, 1));
    }

    #[test]
    fn valuation_split_matches_maximality_oracle() {
        // t is the largest divisor of gcd(n, d) that is coprime to both
        // leftovers; check against a direct scan.
        for n in 1u64..=200 {
            for d in 1u64..=200 {
                let g = gcd(n, d);
                let best = (1..=g)
                    .filter(|t| g % t == 0 && gcd(n / t, *t) == 1 && gcd(d / t, *t) == 1)
                    .max()
                    .unwrap();
                assert_eq!(
                    valuation_split(n, d).unwrap().common,
                    best,
                    "common part of ({n}, {d})"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn gcd_lcm_agrees_with_naive_loop(x in 1u64..=10_000, y in 1u64..=10_000) {
            let (g, l) = gcd_lcm(x, y).unwrap();
            prop_assert_eq!(g, naive_gcd(x, y));
            prop_assert_eq!(g as u128 * l as u128, x as u128 * y as u128);
        }

        #[test]
        fn bezout_witness_identity_holds(a in 1u64..=5_000, b in 1u64..=5_000, c in 1u64..=5_000) {
            match solve_au_bv(a, b, c) {
                Ok(w) => {
                    prop_assert!(w.holds());
                    prop_assert!(w.u >= 1);
                    prop_assert!(w.u <= b, "u is a least residue, so u <= b");
                    prop_assert!(w.successor().holds());
                }
                Err(Error::NoSolution(_)) => prop_assert_ne!(c % gcd(a, b), 0),
                Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
            }
        }

        #[test]
        fn divisor_count_matches_scan(x in 1u64..=20_000) {
            let scan = (1..=x).filter(|k| x % k == 0).count() as u64;
            prop_assert_eq!(divisor_count(x).unwrap(), scan);
        }
    }
}
