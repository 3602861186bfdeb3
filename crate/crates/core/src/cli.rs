//! Command-line front end. Every subcommand prints a human line (or
//! lines) by default and a single-line JSON envelope with `--json`:
//!
//! ```text
//! {"command": ..., "inputs": ..., "result": ..., "status": "ok"|"error", "error": ...}
//! ```
//!
//! Exit codes: 0 ok, 2 invalid input (including argv errors), 3 a
//! mathematical condition failed, 4 enumeration bound exceeded.

use crate::error::{Error, Result};
use crate::humbert::{self, RelationJson, SingularRelation, XyPair};
use crate::locus::{self, LocusLabel};
use crate::periods::{self, PeriodJson};
use crate::sympmod::{self, ModVector, Subgroup};
use crate::wire::JsonInt;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use std::io::Write;

/// Environment variable consulted for the default numeric tolerance.
pub const TOLERANCE_ENV: &str = "NONSIMPLE_TOLERANCE";

#[derive(Parser, Debug)]
#[command(
    name = "nonsimple",
    version,
    about = "Loci of non-simple (1,d)-polarised abelian surfaces: exponents, singular relations, periods, finite symplectic oracles",
    propagate_version = true
)]
pub struct Cli {
    /// Emit a single-line JSON envelope instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,
    /// Numeric tolerance for floating-point checks (default 1e-10, or the
    /// NONSIMPLE_TOLERANCE environment variable)
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Random seed; accepted for interface stability, every current
    /// command is deterministic
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that exponents (m, n) can coexist at polarisation level d
    Check { d: u64, m: u64, n: u64 },
    /// List every exponent complementary to n at level d
    Complements { d: u64, n: u64 },
    /// Factor a label (d, m, n) into its coprime building blocks
    Decompose { d: u64, m: u64, n: u64 },
    /// Number of components the pair (n, d) contributes
    Count { d: u64, n: u64 },
    /// Canonical singular relation for the label (d, m, n)
    Equation { d: u64, m: u64, n: u64 },
    /// All witness pairs (x, y) for the label with |x|, |y| <= bound
    XyEnum {
        d: u64,
        m: u64,
        n: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Recover the exponent label from a linear singular relation
    LocusOfRelation {
        d: u64,
        #[arg(allow_negative_numbers = true)]
        a1: i128,
        #[arg(allow_negative_numbers = true)]
        a2: i128,
        #[arg(allow_negative_numbers = true)]
        a3: i128,
        #[arg(allow_negative_numbers = true)]
        a4: i128,
        #[arg(allow_negative_numbers = true)]
        a5: i128,
    },
    /// Complete (z1, z2) to the period matrix of the label's surface
    Period {
        d: u64,
        m: u64,
        n: u64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z1: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z2: Complex64,
    },
    /// Solve for the period matrix from the two curve moduli
    SolvePeriod {
        d: u64,
        m: u64,
        n: u64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau_e: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau_f: Complex64,
    },
    /// Verify the two embedded curves of a witness pair on given periods
    VerifyLattice {
        d: u64,
        #[arg(allow_negative_numbers = true)]
        x: i128,
        #[arg(allow_negative_numbers = true)]
        y: i128,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z1: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z2: Complex64,
    },
    /// Exhaustive finite symplectic module oracles
    #[command(subcommand)]
    SpOracle(SpOracle),
}

#[derive(Subcommand, Debug)]
pub enum SpOracle {
    /// Orbit check on cyclic subgroups of (Z/N)^4 of full order
    TransitiveG { n: u64, a: u64, b: u64 },
    /// Enumerate allowable kernel subgroups for (c, d)
    AllowableK { a: u64, b: u64, c: u64, d: u64 },
    /// Orbit check on (kernel, cyclic source) pairs
    Technical1 { a: u64, b: u64, c: u64, d: u64 },
    /// Quotient torsion domination check
    Domination { c: u64, d: u64, a: u64, b: u64 },
    /// Divide a vector of (Z/N)^4 by the cofactor of its order
    Division {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        c0: i64,
        #[arg(allow_negative_numbers = true)]
        c1: i64,
        #[arg(allow_negative_numbers = true)]
        c2: i64,
        #[arg(allow_negative_numbers = true)]
        c3: i64,
    },
    /// k-torsion identity on the standard rank-2 block
    Torsion { n: u64, k: u64 },
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    command: &'static str,
    inputs: I,
    result: Option<R>,
    status: &'static str,
    error: Option<String>,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected re,im but got {s:?}"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part {re:?}: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part {im:?}: {e}"))?;
    Ok(Complex64::new(re, im))
}

fn resolve_tolerance(flag: Option<f64>) -> Result<f64> {
    let t = match flag {
        Some(t) => t,
        None => match std::env::var(TOLERANCE_ENV) {
            Ok(s) => s.parse::<f64>().map_err(|e| {
                Error::invalid(format!("bad {TOLERANCE_ENV} value {s:?}: {e}"))
            })?,
            Err(_) => periods::ABS_TOL,
        },
    };
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::invalid("tolerance must be positive and finite"));
    }
    Ok(t)
}

fn finish<I: Serialize, R: Serialize>(
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
    command: &'static str,
    inputs: I,
    outcome: Result<(R, String)>,
) -> i32 {
    match outcome {
        Ok((result, human)) => {
            if json {
                let envelope = Envelope {
                    command,
                    inputs,
                    result: Some(result),
                    status: "ok",
                    error: None,
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&envelope).expect("serializable"));
            } else {
                let _ = writeln!(out, "{human}");
            }
            0
        }
        Err(e) => {
            let code = e.exit_code();
            if json {
                let envelope = Envelope::<I, R> {
                    command,
                    inputs,
                    result: None,
                    status: "error",
                    error: Some(e.to_string()),
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&envelope).expect("serializable"));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
    }
}

fn c_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Serialize)]
struct LabelIn {
    d: u64,
    m: u64,
    n: u64,
}

#[derive(Serialize)]
struct LevelIn {
    d: u64,
    n: u64,
}

#[derive(Serialize)]
struct XyEnumIn {
    d: u64,
    m: u64,
    n: u64,
    bound: u64,
}

#[derive(Serialize)]
struct RelationIn {
    d: u64,
    a: [JsonInt; 5],
}

#[derive(Serialize)]
struct PeriodIn {
    d: u64,
    m: u64,
    n: u64,
    z1: [f64; 2],
    z2: [f64; 2],
}

#[derive(Serialize)]
struct SolveIn {
    d: u64,
    m: u64,
    n: u64,
    tau_e: [f64; 2],
    tau_f: [f64; 2],
}

#[derive(Serialize)]
struct LatticeIn {
    d: u64,
    x: JsonInt,
    y: JsonInt,
    z1: [f64; 2],
    z2: [f64; 2],
    tolerance: f64,
}

#[derive(Serialize)]
struct TripleIn {
    n: u64,
    a: u64,
    b: u64,
}

#[derive(Serialize)]
struct QuadIn {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

#[derive(Serialize)]
struct DominationIn {
    c: u64,
    d: u64,
    a: u64,
    b: u64,
}

#[derive(Serialize)]
struct DivisionIn {
    n: u64,
    x: [i64; 4],
}

#[derive(Serialize)]
struct TorsionIn {
    n: u64,
    k: u64,
}

#[derive(Serialize)]
struct CheckOut {
    complementary: bool,
}

#[derive(Serialize)]
struct DecomposeOut {
    g: u64,
    a: u64,
    b: u64,
    c: u64,
}

#[derive(Serialize)]
struct LocusOut {
    d: u64,
    m: u64,
    n: u64,
}

#[derive(Serialize)]
struct LatticeOut {
    x_member: bool,
    y_member: bool,
    m: u64,
    n: u64,
}

#[derive(Serialize)]
struct OrbitOut {
    count: u64,
    single_orbit: bool,
}

#[derive(Serialize)]
struct AllowableOut {
    count: u64,
    contains_standard: bool,
}

#[derive(Serialize)]
struct PairOrbitOut {
    pair_count: u64,
    single_orbit: bool,
}

#[derive(Serialize)]
struct HoldsOut {
    holds: bool,
}

#[derive(Serialize)]
struct DivisionOut {
    y: [u64; 4],
    order: u64,
}

/// Parse argv and run one command, writing to the given streams.
/// Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    let json = cli.json;
    let _ = cli.seed; // deterministic commands; accepted for stability

    match cli.command {
        Command::Check { d, m, n } => {
            let inputs = LabelIn { d, m, n };
            let outcome = LocusLabel::new(d, m, n).map(|label| {
                (
                    CheckOut { complementary: true },
                    format!("{label} is complementary"),
                )
            });
            finish(json, out, err, "check", inputs, outcome)
        }
        Command::Complements { d, n } => {
            let inputs = LevelIn { d, n };
            let outcome = locus::complements(d, n).map(|ms| {
                let human = ms
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                (ms, human)
            });
            finish(json, out, err, "complements", inputs, outcome)
        }
        Command::Decompose { d, m, n } => {
            let inputs = LabelIn { d, m, n };
            let outcome = LocusLabel::new(d, m, n)
                .and_then(|label| locus::decompose(&label))
                .map(|dec| {
                    (
                        DecomposeOut { g: dec.g, a: dec.a, b: dec.b, c: dec.c },
                        format!("g = {}, a = {}, b = {}, c = {}", dec.g, dec.a, dec.b, dec.c),
                    )
                });
            finish(json, out, err, "decompose", inputs, outcome)
        }
        Command::Count { d, n } => {
            let inputs = LevelIn { d, n };
            let outcome = locus::component_count(d, n).map(|k| (k, k.to_string()));
            finish(json, out, err, "count", inputs, outcome)
        }
        Command::Equation { d, m, n } => {
            let inputs = LabelIn { d, m, n };
            let outcome = LocusLabel::new(d, m, n)
                .and_then(|label| humbert::xy_from_locus(&label))
                .and_then(|pair| humbert::relation_from_xy(d, &pair))
                .map(|rel| {
                    let human = format!("{rel}, Delta = {}", rel.delta());
                    (RelationJson::from(&rel), human)
                });
            finish(json, out, err, "equation", inputs, outcome)
        }
        Command::XyEnum { d, m, n, bound } => {
            let inputs = XyEnumIn { d, m, n, bound };
            let outcome = humbert::enumerate_xy(d, m, n, bound).map(|pairs| {
                let human = pairs
                    .iter()
                    .map(|p| format!("({}, {})", p.x, p.y))
                    .collect::<Vec<_>>()
                    .join("\n");
                let wire: Vec<[JsonInt; 2]> = pairs
                    .iter()
                    .map(|p| [JsonInt(p.x), JsonInt(p.y)])
                    .collect();
                (wire, human)
            });
            finish(json, out, err, "xy-enum", inputs, outcome)
        }
        Command::LocusOfRelation { d, a1, a2, a3, a4, a5 } => {
            let coeffs = [a1, a2, a3, a4, a5];
            let inputs = RelationIn { d, a: coeffs.map(JsonInt) };
            let outcome = SingularRelation::new(d, coeffs)
                .and_then(|rel| humbert::locus_from_relation(&rel))
                .map(|label| {
                    (
                        LocusOut { d: label.d, m: label.m, n: label.n },
                        format!("d = {}, m = {}, n = {}", label.d, label.m, label.n),
                    )
                });
            finish(json, out, err, "locus-of-relation", inputs, outcome)
        }
        Command::Period { d, m, n, z1, z2 } => {
            let inputs = PeriodIn { d, m, n, z1: c_pair(z1), z2: c_pair(z2) };
            let outcome = LocusLabel::new(d, m, n)
                .and_then(|label| humbert::xy_from_locus(&label))
                .and_then(|pair| {
                    let pm = periods::build_period(d, &pair, z1, z2)?;
                    Ok((pair, pm))
                })
                .map(|(pair, pm)| {
                    let human = format!("z1 = {}\nz2 = {}\nz3 = {}", pm.z1, pm.z2, pm.z3);
                    (PeriodJson::new(d, &pair, &pm), human)
                });
            finish(json, out, err, "period", inputs, outcome)
        }
        Command::SolvePeriod { d, m, n, tau_e, tau_f } => {
            let inputs = SolveIn { d, m, n, tau_e: c_pair(tau_e), tau_f: c_pair(tau_f) };
            let outcome = LocusLabel::new(d, m, n)
                .and_then(|label| humbert::xy_from_locus(&label))
                .and_then(|pair| {
                    let (z1, z2) = periods::solve_period(d, &pair, tau_e, tau_f)?;
                    let pm = periods::build_period(d, &pair, z1, z2)?;
                    Ok((pair, pm))
                })
                .map(|(pair, pm)| {
                    let human = format!("z1 = {}\nz2 = {}\nz3 = {}", pm.z1, pm.z2, pm.z3);
                    (PeriodJson::new(d, &pair, &pm), human)
                });
            finish(json, out, err, "solve-period", inputs, outcome)
        }
        Command::VerifyLattice { d, x, y, z1, z2 } => {
            let tol = match resolve_tolerance(cli.tolerance) {
                Ok(t) => t,
                Err(e) => {
                    return finish::<_, LatticeOut>(
                        json,
                        out,
                        err,
                        "verify-lattice",
                        LatticeIn {
                            d,
                            x: JsonInt(x),
                            y: JsonInt(y),
                            z1: c_pair(z1),
                            z2: c_pair(z2),
                            tolerance: periods::ABS_TOL,
                        },
                        Err(e),
                    )
                }
            };
            let inputs = LatticeIn {
                d,
                x: JsonInt(x),
                y: JsonInt(y),
                z1: c_pair(z1),
                z2: c_pair(z2),
                tolerance: tol,
            };
            let outcome = XyPair::new(d, x, y).and_then(|pair| {
                let (ex, ey) = periods::embeddings(d, &pair)?;
                let x_member = periods::verify_membership(d, &pair, z1, z2, &ex, tol)?;
                let y_member = periods::verify_membership(d, &pair, z1, z2, &ey, tol)?;
                let human = format!(
                    "slope {}: member = {}\nslope {}: member = {}\nexponents = ({}, {})",
                    ex.slope, x_member, ey.slope, y_member, ex.exponent, ey.exponent
                );
                Ok((
                    LatticeOut { x_member, y_member, m: ex.exponent, n: ey.exponent },
                    human,
                ))
            });
            finish(json, out, err, "verify-lattice", inputs, outcome)
        }
        Command::SpOracle(oracle) => match oracle {
            SpOracle::TransitiveG { n, a, b } => {
                let inputs = TripleIn { n, a, b };
                let outcome = sympmod::verify_transitive_cyclic(n, a, b).map(|(count, single)| {
                    (
                        OrbitOut { count, single_orbit: single },
                        format!("count = {count}, single_orbit = {single}"),
                    )
                });
                finish(json, out, err, "sp-oracle transitive-g", inputs, outcome)
            }
            SpOracle::AllowableK { a, b, c, d } => {
                let inputs = QuadIn { a, b, c, d };
                let outcome = sympmod::allowable_isotropic(a, b, c, d).map(|(count, std)| {
                    (
                        AllowableOut { count, contains_standard: std },
                        format!("count = {count}, contains_standard = {std}"),
                    )
                });
                finish(json, out, err, "sp-oracle allowable-k", inputs, outcome)
            }
            SpOracle::Technical1 { a, b, c, d } => {
                let inputs = QuadIn { a, b, c, d };
                let outcome =
                    sympmod::verify_pair_transitivity(a, b, c, d).map(|(count, single)| {
                        (
                            PairOrbitOut { pair_count: count, single_orbit: single },
                            format!("pair_count = {count}, single_orbit = {single}"),
                        )
                    });
                finish(json, out, err, "sp-oracle technical1", inputs, outcome)
            }
            SpOracle::Domination { c, d, a, b } => {
                let inputs = DominationIn { c, d, a, b };
                let outcome = sympmod::verify_domination(c, d, a, b)
                    .map(|holds| (HoldsOut { holds }, format!("holds = {holds}")));
                finish(json, out, err, "sp-oracle domination", inputs, outcome)
            }
            SpOracle::Division { n, c0, c1, c2, c3 } => {
                let inputs = DivisionIn { n, x: [c0, c1, c2, c3] };
                let outcome = ModVector::new(n, [c0, c1, c2, c3]).and_then(|x| {
                    let k = sympmod::element_order(&x);
                    let y = sympmod::divide_by_cofactor(&x, k)?;
                    let [y0, y1, y2, y3] = y.coords();
                    Ok((
                        DivisionOut { y: y.coords(), order: k },
                        format!("y = ({y0}, {y1}, {y2}, {y3}), order = {k}"),
                    ))
                });
                finish(json, out, err, "sp-oracle division", inputs, outcome)
            }
            SpOracle::Torsion { n, k } => {
                let inputs = TorsionIn { n, k };
                let outcome = Subgroup::standard_e(n).and_then(|e| {
                    let holds = sympmod::torsion_check(&e, k)?;
                    Ok((HoldsOut { holds }, format!("holds = {holds}")))
                });
                finish(json, out, err, "sp-oracle torsion", inputs, outcome)
            }
        },
    }
}
