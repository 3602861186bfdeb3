//! Singular relations cutting out the product loci, and the integer pairs
//! (x, y) that witness them.
//!
//! A relation is stored through its coefficient vector (a1, ..., a5) and
//! reads
//!
//! ```text
//! d*a1*z1 + a2*z2 + a3*z3 + a4*(z2^2 - z1*z3) + d*a5 = 0 ,
//! Delta = a2^2 - 4*d*a1*a3 - 4*d*a4*a5 = p^2 .
//! ```
//!
//! The produced family always has a3 = 1, a4 = a5 = 0: it comes from a pair
//! x > y of nonzero integers with d | x*y via z3 = (x+y)*z2 - x*y*z1, and
//! then Delta = (x - y)^2. Conversely such a relation determines (x, y) as
//! the roots of X^2 + a2*X + d*a1 and hence a locus label.

use crate::arith::{gcd_i128, solve_au_bv};
use crate::error::{Error, Result};
use crate::locus::{decompose, LocusLabel};
use crate::wire::JsonInt;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A witness pair x > y of nonzero integers with d | x*y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct XyPair {
    pub x: i128,
    pub y: i128,
}

impl XyPair {
    /// Validate the pair against the level d.
    pub fn new(d: u64, x: i128, y: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("level d must be positive"));
        }
        if x == 0 || y == 0 {
            return Err(Error::Degenerate(
                "a zero slope does not embed an elliptic curve".into(),
            ));
        }
        if x == y {
            return Err(Error::Degenerate("x = y collapses the two factors".into()));
        }
        if x < y {
            return Err(Error::invalid(format!(
                "pairs are oriented: expected x > y, got x = {x}, y = {y}"
            )));
        }
        let prod = x
            .checked_mul(y)
            .ok_or_else(|| Error::magnitude("x*y exceeds 128 bits"))?;
        if prod % i128::from(d) != 0 {
            return Err(Error::Degenerate(format!(
                "{d} does not divide x*y = {prod}"
            )));
        }
        Ok(XyPair { x, y })
    }
}

impl fmt::Display for XyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x, y) = ({}, {})", self.x, self.y)
    }
}

/// gcd(d, t) for signed t, as a positive integer.
fn gcd_d(d: u64, t: i128) -> i128 {
    gcd_i128(i128::from(d), t)
}

/// Canonical witness pair of an admissible label.
///
/// From the decomposition (a, b, c) take the smallest-u solution of
/// a*u - b*v = c and set x = (d/b)*u, y = (d/a)*v. When that witness has
/// v = 0 (possible only for a = 1) the next one (u+b, v+a) is used, so both
/// slopes are always nonzero.
pub fn xy_from_locus(label: &LocusLabel) -> Result<XyPair> {
    let dec = decompose(label)?;
    let mut w = solve_au_bv(dec.a, dec.b, dec.c)?;
    if w.v == 0 {
        w = w.successor();
    }
    let d = label.d;
    let x = i128::from(d / dec.b) * i128::from(w.u);
    let y = i128::from(d / dec.a) * w.v;
    let pair = XyPair::new(d, x, y)?;
    // the construction fixes the gcds, which the exponent formulas rely on
    assert_eq!(gcd_d(d, x), i128::from(d / dec.b), "gcd(d, x) = d/b");
    assert_eq!(gcd_d(d, y), i128::from(d / dec.a), "gcd(d, y) = d/a");
    Ok(pair)
}

/// The exponent pair of the two curves embedded at slopes x and y:
///
/// ```text
/// m = d*(x - y) / gcd(d, x),   n = d*(x - y) / gcd(d, y).
/// ```
pub fn exponents_from_xy(d: u64, pair: &XyPair) -> Result<(u64, u64)> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    let diff = pair.x - pair.y; // positive by the pair invariant
    let m = i128::from(d) * diff / gcd_d(d, pair.x);
    let n = i128::from(d) * diff / gcd_d(d, pair.y);
    let m = u64::try_from(m).map_err(|_| Error::magnitude("exponent m exceeds 64 bits"))?;
    let n = u64::try_from(n).map_err(|_| Error::magnitude("exponent n exceeds 64 bits"))?;
    Ok((m, n))
}

/// A singular relation with square discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularRelation {
    d: u64,
    coeffs: [i128; 5],
    delta: i128,
    p: i128,
}

impl SingularRelation {
    /// Build a relation from raw coefficients, checking that they are
    /// primitive (no common divisor) and that the discriminant is a
    /// perfect square.
    pub fn new(d: u64, coeffs: [i128; 5]) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("level d must be positive"));
        }
        if coeffs == [0; 5] {
            return Err(Error::invalid("all five coefficients are zero"));
        }
        let g = coeffs.iter().copied().fold(0i128, gcd_i128);
        if g != 1 {
            return Err(Error::invalid(format!(
                "coefficients must be primitive; common divisor {g}"
            )));
        }
        let [a1, a2, a3, a4, a5] = coeffs;
        let di = i128::from(d);
        let delta = (|| {
            let t1 = a2.checked_mul(a2)?;
            let t2 = di.checked_mul(4)?.checked_mul(a1)?.checked_mul(a3)?;
            let t3 = di.checked_mul(4)?.checked_mul(a4)?.checked_mul(a5)?;
            t1.checked_sub(t2)?.checked_sub(t3)
        })()
        .ok_or_else(|| Error::magnitude("discriminant exceeds 128 bits"))?;
        if delta < 0 {
            return Err(Error::OutsideFamily(format!(
                "discriminant {delta} is negative"
            )));
        }
        let p = (delta as u128).isqrt() as i128;
        if p * p != delta {
            return Err(Error::OutsideFamily(format!(
                "discriminant {delta} is not a perfect square"
            )));
        }
        Ok(SingularRelation { d, coeffs, delta, p })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The coefficient vector (a1, a2, a3, a4, a5).
    pub fn coeffs(&self) -> [i128; 5] {
        self.coeffs
    }

    pub fn delta(&self) -> i128 {
        self.delta
    }

    /// The non-negative square root of the discriminant.
    pub fn p(&self) -> i128 {
        self.p
    }

    /// Evaluate the defining polynomial at a complex point, exactly in the
    /// coefficients. Used by the period checks.
    pub fn eval(
        &self,
        z1: num_complex::Complex64,
        z2: num_complex::Complex64,
        z3: num_complex::Complex64,
    ) -> num_complex::Complex64 {
        let [a1, a2, a3, a4, a5] = self.coeffs;
        let d = self.d as f64;
        d * (a1 as f64) * z1
            + (a2 as f64) * z2
            + (a3 as f64) * z3
            + (a4 as f64) * (z2 * z2 - z1 * z3)
            + d * (a5 as f64)
    }
}

impl fmt::Display for SingularRelation {
    /// Renders the relation as an equation, e.g. `6*z1 - 5*z2 + z3 = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a5] = self.coeffs;
        let di = i128::from(self.d);
        let terms: [(i128, &str); 5] = [
            (di * a1, "z1"),
            (a2, "z2"),
            (a3, "z3"),
            (a4, "(z2^2 - z1*z3)"),
            (di * a5, ""),
        ];
        let mut first = true;
        for (coeff, var) in terms {
            if coeff == 0 {
                continue;
            }
            if first {
                if coeff < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.unsigned_abs();
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        write!(f, " = 0")
    }
}

/// The relation cut out by a witness pair: coefficients
/// (x*y/d, -(x+y), 1, 0, 0), with discriminant (x - y)^2.
pub fn relation_from_xy(d: u64, pair: &XyPair) -> Result<SingularRelation> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    let prod = pair
        .x
        .checked_mul(pair.y)
        .ok_or_else(|| Error::magnitude("x*y exceeds 128 bits"))?;
    if prod % i128::from(d) != 0 {
        return Err(Error::Degenerate(format!("{d} does not divide x*y")));
    }
    let a1 = prod / i128::from(d);
    let a2 = -(pair.x + pair.y);
    let rel = SingularRelation::new(d, [a1, a2, 1, 0, 0])?;
    debug_assert_eq!(rel.p, pair.x - pair.y);
    Ok(rel)
}

/// Recover the locus label of a relation in the produced family
/// (a3 = 1, a4 = a5 = 0): the slopes are the roots of X^2 + a2*X + d*a1.
pub fn locus_from_relation(rel: &SingularRelation) -> Result<LocusLabel> {
    let [a1, a2, a3, a4, a5] = rel.coeffs;
    if a3 != 1 || a4 != 0 || a5 != 0 {
        return Err(Error::OutsideFamily(
            "only relations with a3 = 1, a4 = a5 = 0 determine a product locus here".into(),
        ));
    }
    if rel.p == 0 {
        return Err(Error::Degenerate(
            "zero discriminant means x = y".into(),
        ));
    }
    // a2 and p have the same parity because a2^2 - p^2 = 4*d*a1
    assert_eq!((a2 - rel.p).rem_euclid(2), 0, "roots are integral");
    let x = (-a2 + rel.p) / 2;
    let y = (-a2 - rel.p) / 2;
    let pair = XyPair::new(rel.d, x, y)?;
    debug_assert_eq!(pair.x * pair.y, i128::from(rel.d) * a1);
    let (m, n) = exponents_from_xy(rel.d, &pair)?;
    // the exponents of two complementary curves always satisfy the equation
    LocusLabel::new(rel.d, m, n)
}

/// All witness pairs for the label (d, m, n) with |x|, |y| <= bound,
/// in increasing lexicographic (x, y) order.
pub fn enumerate_xy(d: u64, m: u64, n: u64, bound: u64) -> Result<Vec<XyPair>> {
    let label = LocusLabel::new(d, m, n)?;
    if bound == 0 {
        return Err(Error::invalid("bound must be positive"));
    }
    let b = i128::from(bound);
    let (di, mi, ni) = (i128::from(d), i128::from(m), i128::from(n));
    let mut out = Vec::new();
    for x in -b..=b {
        if x == 0 {
            continue;
        }
        for y in -b..x {
            if y == 0 || (x * y) % di != 0 {
                continue;
            }
            let lhs = di * (x - y);
            if lhs == mi * gcd_d(d, x) && lhs == ni * gcd_d(d, y) {
                out.push(XyPair { x, y });
            }
        }
    }
    debug_assert!(out.iter().all(|p| {
        exponents_from_xy(label.d, p).is_ok_and(|en| en == (m, n))
    }));
    Ok(out)
}

/// Do two relations (at the same level) cut out the same product locus?
pub fn same_locus(r1: &SingularRelation, r2: &SingularRelation) -> Result<bool> {
    if r1.d() != r2.d() {
        return Err(Error::invalid(format!(
            "levels differ ({} vs {}); the relations live in different spaces",
            r1.d(),
            r2.d()
        )));
    }
    let l1 = locus_from_relation(r1)?;
    let l2 = locus_from_relation(r2)?;
    Ok(l1 == l2 || l1 == l2.swapped())
}

/// Wire format of a relation: `{d, a, delta, p}`, integers as JSON numbers
/// up to 53 bits of magnitude and decimal strings beyond.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub d: JsonInt,
    pub a: [JsonInt; 5],
    pub delta: JsonInt,
    pub p: JsonInt,
}

impl From<&SingularRelation> for RelationJson {
    fn from(rel: &SingularRelation) -> Self {
        RelationJson {
            d: rel.d.into(),
            a: rel.coeffs.map(JsonInt),
            delta: rel.delta.into(),
            p: rel.p.into(),
        }
    }
}

impl TryFrom<&RelationJson> for SingularRelation {
    type Error = Error;

    fn try_from(json: &RelationJson) -> Result<Self> {
        let d = u64::try_from(json.d.0)
            .map_err(|_| Error::invalid("d must be a positive 64-bit integer"))?;
        let rel = SingularRelation::new(d, json.a.map(|v| v.0))?;
        if JsonInt(rel.delta) != json.delta || JsonInt(rel.p) != json.p {
            return Err(Error::invalid(
                "stored delta/p disagree with the coefficients",
            ));
        }
        Ok(rel)
    }
}
