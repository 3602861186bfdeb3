//! Loci of products inside the moduli space of (1, d)-polarised abelian
//! surfaces. A surface in the image of E x F -> A determines exponents
//! (m, n) of the two elliptic curves; the pair is admissible for a given d
//! exactly when the complementary-exponent equation holds:
//!
//! ```text
//! m * n * gcd(m, n, d) = gcd(m, n)^2 * d .
//! ```
//!
//! This module decides that equation, decomposes admissible labels into
//! coprime invariants, lists all exponents complementary to a given one
//! (two independent routes), and counts irreducible components.

use crate::arith::{factorize, gcd, gcd3, valuation_split};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A label (d, m, n): level d with elliptic exponents m and n.
///
/// Constructing one through [`LocusLabel::new`] checks the
/// complementary-exponent equation, so a value of this type always refers
/// to a non-empty locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocusLabel {
    pub d: u64,
    pub m: u64,
    pub n: u64,
}

impl LocusLabel {
    pub fn new(d: u64, m: u64, n: u64) -> Result<Self> {
        if d == 0 || m == 0 || n == 0 {
            return Err(Error::invalid("locus label needs positive d, m, n"));
        }
        if !is_complementary(d, m, n) {
            return Err(Error::NotComplementary { d, m, n });
        }
        Ok(LocusLabel { d, m, n })
    }

    /// The same locus with the two exponents swapped.
    pub fn swapped(self) -> Self {
        LocusLabel {
            d: self.d,
            m: self.n,
            n: self.m,
        }
    }
}

impl std::fmt::Display for LocusLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.d, self.m, self.n)
    }
}

/// Does (d, m, n) satisfy `m*n*gcd(m,n,d) = gcd(m,n)^2 * d`?
///
/// Zero arguments never satisfy it. Overflow-safe for the full u64 range.
pub fn is_complementary(d: u64, m: u64, n: u64) -> bool {
    if d == 0 || m == 0 || n == 0 {
        return false;
    }
    // divide both sides by gcd(m,n)^2 first so products stay in range
    let g = gcd(m, n);
    let reduced = u128::from(m / g) * u128::from(n / g);
    reduced
        .checked_mul(u128::from(gcd3(m, n, d)))
        .is_some_and(|lhs| lhs == u128::from(d))
}

/// The coprime invariants of an admissible label.
///
/// ```text
/// g = gcd(m, n),   a = n/g,   b = m/g,   c = g*a*b/d,
/// ```
/// with a, b, c pairwise coprime, a | d, b | d, and back again
/// m = c*d/a, n = c*d/b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub g: u64,
}

/// Decompose an admissible label into its [`Decomposition`].
pub fn decompose(label: &LocusLabel) -> Result<Decomposition> {
    let LocusLabel { d, m, n } = *label;
    let g = gcd(m, n);
    let a = n / g;
    let b = m / g;
    let gab = u128::from(g) * u128::from(a) * u128::from(b);
    // the exponent equation forces d | g*a*b
    assert_eq!(gab % u128::from(d), 0, "c must be integral on a valid label");
    let c = u64::try_from(gab / u128::from(d))
        .map_err(|_| Error::magnitude(format!("invariant c of {label} exceeds 64 bits")))?;
    let dec = Decomposition { a, b, c, g };
    assert!(
        gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1 && d % a == 0 && d % b == 0,
        "coprimality of the decomposition is forced by the exponent equation"
    );
    Ok(dec)
}

/// All m complementary to n at level d, in increasing order.
///
/// Works prime by prime: writing alpha = v_p(n) and beta = v_p(d), the
/// admissible exponent gamma = v_p(m) is
///
/// ```text
/// alpha = beta  ->  gamma in 0..=alpha,
/// alpha > beta  ->  gamma = alpha,
/// alpha < beta  ->  gamma = beta.
/// ```
pub fn complements(d: u64, n: u64) -> Result<Vec<u64>> {
    if d == 0 || n == 0 {
        return Err(Error::invalid("complements needs positive d, n"));
    }
    let fn_ = factorize(n)?;
    let fd = factorize(d)?;
    let mut primes: Vec<u64> = fn_.factors().iter().map(|&(p, _)| p).collect();
    for &(p, _) in fd.factors() {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    let mut values = vec![1u128];
    for p in primes {
        let alpha = fn_.exponent_of(p);
        let beta = fd.exponent_of(p);
        let choices: Vec<u32> = if alpha == beta {
            (0..=alpha).collect()
        } else {
            vec![alpha.max(beta)]
        };
        let prev = std::mem::take(&mut values);
        for &gamma in &choices {
            let pk = u128::from(p).pow(gamma);
            values.extend(prev.iter().map(|v| v * pk));
        }
    }
    let mut out = Vec::with_capacity(values.len());
    for v in values {
        out.push(
            u64::try_from(v)
                .map_err(|_| Error::magnitude(format!("a complement of ({d}, {n}) exceeds 64 bits")))?,
        );
    }
    out.sort_unstable();
    debug_assert!(out.iter().all(|&m| is_complementary(d, m, n)));
    Ok(out)
}

/// Same set as [`complements`], built through admissible divisors of d.
///
/// With a = d/gcd(n, d) and c = n/gcd(n, d), every divisor q of d with
/// a | q and a, q/a, c pairwise coprime yields the complement m = c*d/(q/a),
/// and every complement arises once this way.
pub fn complements_by_divisors(d: u64, n: u64) -> Result<Vec<u64>> {
    if d == 0 || n == 0 {
        return Err(Error::invalid("complements_by_divisors needs positive d, n"));
    }
    let g = gcd(n, d);
    let (a, c) = (d / g, n / g);
    let mut out = Vec::new();
    for q in factorize(d)?.divisors() {
        if q % a != 0 {
            continue;
        }
        let b = q / a;
        if gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1 {
            continue;
        }
        let m = u128::from(c) * u128::from(d) / u128::from(b);
        out.push(
            u64::try_from(m)
                .map_err(|_| Error::magnitude(format!("a complement of ({d}, {n}) exceeds 64 bits")))?,
        );
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Number of irreducible components with one exponent equal to n, i.e. the
/// number of complements of n at level d.
///
/// Equals the divisor count of the common part t of the valuation split of
/// (n, d), so it never requires listing the complements.
pub fn component_count(d: u64, n: u64) -> Result<u64> {
    let split = valuation_split(n, d)?;
    Ok(factorize(split.common)?.divisor_count())
}

/// Polarisation data of a product of elliptic curves with exponents a and b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductType {
    /// Polarisation type (gcd(a, b), lcm(a, b)).
    pub polarisation: (u64, u64),
    /// The exponents divided by their gcd.
    pub reduced: (u64, u64),
}

/// The polarisation type (gcd, lcm) induced on a product with exponents
/// (a, b), together with the reduced exponents (a/g, b/g).
pub fn product_type(a: u64, b: u64) -> Result<ProductType> {
    let (g, l) = crate::arith::gcd_lcm(a, b)?;
    Ok(ProductType {
        polarisation: (g, l),
        reduced: (a / g, b / g),
    })
}
