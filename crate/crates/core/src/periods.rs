//! Period matrices of surfaces containing two complementary elliptic
//! curves, and the lattice bookkeeping for those curves.
//!
//! Conventions, fixed once for the whole crate:
//!
//! ```text
//! lattice basis      (f1, f2, mu1, mu2)
//! column vectors     f1 = (z1, z2),  f2 = (z2, z3),  mu1 = (1, 0),  mu2 = (0, d)
//! symplectic pairing w(f1, mu1) = 1,  w(f2, mu2) = d,  all other basis pairings 0
//! surface relation   z3 = (x + y) * z2 - x * y * z1
//! ```
//!
//! The curve at slope s sits inside the surface through t -> (t, s*t); its
//! two periods are spanned by the lattice vectors carried by
//! [`EllipticEmbedding`], and the absolute pairing of those two vectors is
//! the exponent of the curve.

use crate::arith::gcd_i128;
use crate::error::{Error, Result};
use crate::humbert::{exponents_from_xy, XyPair};
use crate::locus::LocusLabel;
use crate::wire::JsonInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default absolute tolerance for residuals of numeric identities.
pub const ABS_TOL: f64 = 1e-10;

/// Default relative tolerance for round-trip comparisons.
pub const REL_TOL: f64 = 1e-9;

/// The three entries of a symmetric 2x2 period matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodMatrix {
    pub z1: Complex64,
    pub z2: Complex64,
    pub z3: Complex64,
}

impl PeriodMatrix {
    /// The two leading minors of the imaginary part:
    /// Im z1 and Im z1 * Im z3 - (Im z2)^2. Both must be positive.
    pub fn positivity_minors(&self) -> (f64, f64) {
        let (y1, y2, y3) = (self.z1.im, self.z2.im, self.z3.im);
        (y1, y1 * y3 - y2 * y2)
    }

    /// Error unless the imaginary part is positive definite.
    pub fn check_positive(&self) -> Result<()> {
        let (m1, m2) = self.positivity_minors();
        if m1 > 0.0 && m2 > 0.0 {
            Ok(())
        } else {
            Err(Error::NotPositive(format!(
                "leading minors of the imaginary part are {m1} and {m2}"
            )))
        }
    }
}

/// An integer vector in the fixed lattice basis (f1, f2, mu1, mu2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub coords: [i128; 4],
}

impl LatticeVector {
    pub fn new(coords: [i128; 4]) -> Self {
        LatticeVector { coords }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coords;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// The symplectic pairing of two lattice vectors at level d:
///
/// ```text
/// w(v, w) = (v_f1 * w_mu1 - v_mu1 * w_f1) + d * (v_f2 * w_mu2 - v_mu2 * w_f2)
/// ```
pub fn pairing(v: &LatticeVector, w: &LatticeVector, d: u64) -> Result<i128> {
    let [v0, v1, v2, v3] = v.coords;
    let [w0, w1, w2, w3] = w.coords;
    (|| {
        let first = v0.checked_mul(w2)?.checked_sub(v2.checked_mul(w0)?)?;
        let second = v1.checked_mul(w3)?.checked_sub(v3.checked_mul(w1)?)?;
        first.checked_add(i128::from(d).checked_mul(second)?)
    })()
    .ok_or_else(|| Error::magnitude("pairing exceeds 128 bits"))
}

/// One elliptic curve inside the surface: its slope, the two lattice
/// vectors spanning its period lattice, and its exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllipticEmbedding {
    pub slope: i128,
    pub v1: LatticeVector,
    pub v2: LatticeVector,
    pub exponent: u64,
}

fn lcm_level(d: u64, s: i128) -> i128 {
    let a = i128::from(d);
    a / gcd_i128(a, s) * s.abs()
}

fn embedding_at(d: u64, slope: i128, other: i128) -> Result<EllipticEmbedding> {
    let v1 = LatticeVector::new([-other, 1, 0, 0]);
    let l = lcm_level(d, slope);
    let v2 = LatticeVector::new([0, 0, l / slope, l / i128::from(d)]);
    // (lcm/s, lcm/d) is primitive
    debug_assert_eq!(gcd_i128(l / slope, l / i128::from(d)), 1);
    let exponent = pairing(&v1, &v2, d)?.unsigned_abs();
    let exponent =
        u64::try_from(exponent).map_err(|_| Error::magnitude("exponent exceeds 64 bits"))?;
    Ok(EllipticEmbedding { slope, v1, v2, exponent })
}

/// The two embedded curves of a witness pair, in (slope x, slope y) order.
/// Their exponents are exactly the label exponents (m, n).
pub fn embeddings(d: u64, pair: &XyPair) -> Result<(EllipticEmbedding, EllipticEmbedding)> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    let ex = embedding_at(d, pair.x, pair.y)?;
    let ey = embedding_at(d, pair.y, pair.x)?;
    let (m, n) = exponents_from_xy(d, pair)?;
    assert_eq!((ex.exponent, ey.exponent), (m, n), "pairing exponents match");
    Ok((ex, ey))
}

/// Complete (z1, z2) to the full period matrix of the surface carrying the
/// witness pair, checking positivity.
pub fn build_period(d: u64, pair: &XyPair, z1: Complex64, z2: Complex64) -> Result<PeriodMatrix> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    let (x, y) = (pair.x as f64, pair.y as f64);
    let z3 = (x + y) * z2 - x * y * z1;
    let pm = PeriodMatrix { z1, z2, z3 };
    pm.check_positive()?;
    Ok(pm)
}

/// Verify that an embedding's lattice vectors really express the curve at
/// its slope: each vector, expanded through the lattice columns, must be a
/// complex multiple of (1, slope), exactly in the coefficients of z1, z2
/// and the constants. The identity is then re-checked numerically at the
/// given (z1, z2) within `tol`.
pub fn verify_membership(
    d: u64,
    pair: &XyPair,
    z1: Complex64,
    z2: Complex64,
    emb: &EllipticEmbedding,
    tol: f64,
) -> Result<bool> {
    if tol <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    for v in [&emb.v1, &emb.v2] {
        let [n0, n1, n2, n3] = v.coords;
        // both components as exact polynomials alpha*z1 + beta*z2 + gamma,
        // substituting z3 = (x+y) z2 - x y z1 and mu2 = (0, d)
        let (a1, b1, g1) = (n0, n1, n2);
        let (a2, b2, g2) = (|| {
            let a2 = n1.checked_mul(pair.x)?.checked_mul(pair.y)?.checked_neg()?;
            let b2 = n0.checked_add(n1.checked_mul(pair.x.checked_add(pair.y)?)?)?;
            let g2 = n3.checked_mul(i128::from(d))?;
            Some((a2, b2, g2))
        })()
        .ok_or_else(|| Error::magnitude("membership expansion exceeds 128 bits"))?;
        let s = emb.slope;
        let scaled = (|| {
            Some((s.checked_mul(a1)?, s.checked_mul(b1)?, s.checked_mul(g1)?))
        })()
        .ok_or_else(|| Error::magnitude("membership expansion exceeds 128 bits"))?;
        if (a2, b2, g2) != scaled {
            return Ok(false);
        }
        // numeric re-check of the same identity
        let lhs = s as f64 * ((a1 as f64) * z1 + (b1 as f64) * z2 + (g1 as f64));
        let rhs = (a2 as f64) * z1 + (b2 as f64) * z2 + (g2 as f64);
        let scale = 1.0_f64.max(lhs.norm()).max(rhs.norm());
        if (lhs - rhs).norm() > tol * scale {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Periods (z1, z2) of the surface whose two curves have moduli tau_e (at
/// slope x) and tau_f (at slope y):
///
/// ```text
/// cx = d / gcd(d, x),   cy = d / gcd(d, y),
/// z1 = (cx * tau_e + cy * tau_f) / (x - y),
/// z2 = y * z1 + cx * tau_e .
/// ```
///
/// The result always satisfies the positivity conditions because the minor
/// factors as (cx Im tau_e)(cy Im tau_f).
pub fn solve_period(
    d: u64,
    pair: &XyPair,
    tau_e: Complex64,
    tau_f: Complex64,
) -> Result<(Complex64, Complex64)> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    if tau_e.im <= 0.0 || tau_f.im <= 0.0 {
        return Err(Error::NotPositive(format!(
            "curve moduli must lie in the upper half plane, got Im = {} and {}",
            tau_e.im, tau_f.im
        )));
    }
    let cx = (i128::from(d) / gcd_i128(i128::from(d), pair.x)) as f64;
    let cy = (i128::from(d) / gcd_i128(i128::from(d), pair.y)) as f64;
    let z1 = (cx * tau_e + cy * tau_f) / ((pair.x - pair.y) as f64);
    let z2 = (pair.y as f64) * z1 + cx * tau_e;
    Ok((z1, z2))
}

/// The curve moduli back out of (z1, z2): the inverse of [`solve_period`].
pub fn extract_moduli(
    d: u64,
    pair: &XyPair,
    z1: Complex64,
    z2: Complex64,
) -> Result<(Complex64, Complex64)> {
    if d == 0 {
        return Err(Error::invalid("level d must be positive"));
    }
    let cx = (i128::from(d) / gcd_i128(i128::from(d), pair.x)) as f64;
    let cy = (i128::from(d) / gcd_i128(i128::from(d), pair.y)) as f64;
    let tau_e = (z2 - (pair.y as f64) * z1) / cx;
    let tau_f = ((pair.x as f64) * z1 - z2) / cy;
    Ok((tau_e, tau_f))
}

/// The locus label read off the two embeddings' pairing exponents. Also
/// cross-checked against the arithmetic exponent formulas.
pub fn exponent_report(d: u64, pair: &XyPair) -> Result<LocusLabel> {
    let (ex, ey) = embeddings(d, pair)?;
    // embeddings() already asserts agreement with exponents_from_xy
    LocusLabel::new(d, ex.exponent, ey.exponent)
}

/// Wire format of a period matrix: `{d, x, y, z1, z2, z3}` with each
/// complex entry as `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodJson {
    pub d: JsonInt,
    pub x: JsonInt,
    pub y: JsonInt,
    pub z1: [f64; 2],
    pub z2: [f64; 2],
    pub z3: [f64; 2],
}

impl PeriodJson {
    pub fn new(d: u64, pair: &XyPair, pm: &PeriodMatrix) -> Self {
        PeriodJson {
            d: d.into(),
            x: JsonInt(pair.x),
            y: JsonInt(pair.y),
            z1: [pm.z1.re, pm.z1.im],
            z2: [pm.z2.re, pm.z2.im],
            z3: [pm.z3.re, pm.z3.im],
        }
    }
}
