//! C ABI over the `nonsimple` library. Scalar results come back through
//! out-pointers, list results through an opaque handle, and every call
//! returns an [`NsStatus`]. On failure a thread-local message is kept and
//! can be read with [`ns_last_error_message`].
//!
//! The header `include/nonsimple.h` is regenerated on every build.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nonsimple::error::Error;
use nonsimple::humbert::{
    locus_from_relation, relation_from_xy, xy_from_locus, SingularRelation, XyPair,
};
use nonsimple::locus::{complements, component_count, decompose, is_complementary, LocusLabel};
use nonsimple::periods;
use nonsimple::sympmod;
use num_complex::Complex64;

/// Result of every call. Values above NS_OK match the CLI exit codes
/// where one exists (invalid input 2, failed condition 3, bound 4).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsStatus {
    NsOk = 0,
    NsErrNullPointer = 1,
    NsErrInvalidInput = 2,
    NsErrMath = 3,
    NsErrEnumerationBound = 4,
    NsErrOverflow = 5,
    NsErrPanic = 6,
}

/// A complex number as a plain pair of doubles.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NsComplex {
    pub re: f64,
    pub im: f64,
}

/// A linear singular relation with 64-bit coefficients. Calls that
/// produce one fail with NS_ERR_OVERFLOW if a value does not fit.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NsRelation {
    pub d: u64,
    pub a: [i64; 5],
    pub delta: i64,
    pub p: i64,
}

/// The three matrix entries determined by a label and two inputs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NsPeriod {
    pub z1: NsComplex,
    pub z2: NsComplex,
    pub z3: NsComplex,
}

/// Opaque list of unsigned values; free with ns_u64_list_free.
pub struct NsU64List {
    items: Vec<u64>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: NsStatus, message: String) -> NsStatus {
    set_error(message);
    status
}

fn core_failure(e: Error) -> NsStatus {
    let status = match e.exit_code() {
        2 => NsStatus::NsErrInvalidInput,
        4 => NsStatus::NsErrEnumerationBound,
        _ => NsStatus::NsErrMath,
    };
    fail(status, e.to_string())
}

fn null_failure(name: &str) -> NsStatus {
    fail(NsStatus::NsErrNullPointer, format!("null pointer: {name}"))
}

fn narrow(value: i128, what: &str) -> Result<i64, NsStatus> {
    i64::try_from(value).map_err(|_| {
        fail(
            NsStatus::NsErrOverflow,
            format!("{what} {value} does not fit in 64 bits"),
        )
    })
}

/// Runs a body under a panic guard; a panic becomes NS_ERR_PANIC
/// instead of unwinding across the ABI boundary.
fn guarded(body: impl FnOnce() -> Result<(), NsStatus>) -> NsStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NsStatus::NsOk,
        Ok(Err(status)) => status,
        Err(payload) => {
            let text = if let Some(s) = payload.downcast_ref::<&str>() {
                (*s).to_string()
            } else if let Some(s) = payload.downcast_ref::<String>() {
                s.clone()
            } else {
                "panic".to_string()
            };
            fail(NsStatus::NsErrPanic, text)
        }
    }
}

fn complex_in(z: NsComplex) -> Complex64 {
    Complex64::new(z.re, z.im)
}

fn complex_out(z: Complex64) -> NsComplex {
    NsComplex { re: z.re, im: z.im }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ns_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread, or null if the
/// last call succeeded. The pointer stays valid until the next call on
/// the same thread.
#[no_mangle]
pub extern "C" fn ns_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Whether exponents (m, n) can coexist at level d.
///
/// # Safety
/// `out_complementary` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_check(
    d: u64,
    m: u64,
    n: u64,
    out_complementary: *mut bool,
) -> NsStatus {
    guarded(|| {
        if out_complementary.is_null() {
            return Err(null_failure("out_complementary"));
        }
        if d == 0 || m == 0 || n == 0 {
            return Err(fail(
                NsStatus::NsErrInvalidInput,
                "level and exponents must be positive".to_string(),
            ));
        }
        unsafe { *out_complementary = is_complementary(d, m, n) };
        Ok(())
    })
}

/// Number of components contributed by the pair (n, d).
///
/// # Safety
/// `out_count` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_component_count(d: u64, n: u64, out_count: *mut u64) -> NsStatus {
    guarded(|| {
        if out_count.is_null() {
            return Err(null_failure("out_count"));
        }
        let count = component_count(d, n).map_err(core_failure)?;
        unsafe { *out_count = count };
        Ok(())
    })
}

/// All exponents complementary to n at level d, ascending. The list
/// must be released with ns_u64_list_free.
///
/// # Safety
/// `out_list` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_complements(d: u64, n: u64, out_list: *mut *mut NsU64List) -> NsStatus {
    guarded(|| {
        if out_list.is_null() {
            return Err(null_failure("out_list"));
        }
        let items = complements(d, n).map_err(core_failure)?;
        let handle = Box::new(NsU64List { items });
        unsafe { *out_list = Box::into_raw(handle) };
        Ok(())
    })
}

/// Length of a list handle; 0 for null.
///
/// # Safety
/// `list` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ns_u64_list_len(list: *const NsU64List) -> usize {
    if list.is_null() {
        return 0;
    }
    unsafe { (*list).items.len() }
}

/// Element of a list handle by index.
///
/// # Safety
/// `list` must be null or a live handle; `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ns_u64_list_get(
    list: *const NsU64List,
    index: usize,
    out_value: *mut u64,
) -> NsStatus {
    guarded(|| {
        if list.is_null() {
            return Err(null_failure("list"));
        }
        if out_value.is_null() {
            return Err(null_failure("out_value"));
        }
        let items = unsafe { &(*list).items };
        match items.get(index) {
            Some(&v) => {
                unsafe { *out_value = v };
                Ok(())
            }
            None => Err(fail(
                NsStatus::NsErrInvalidInput,
                format!("index {index} out of range for list of {}", items.len()),
            )),
        }
    })
}

/// Releases a list handle; null is ignored.
///
/// # Safety
/// `list` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ns_u64_list_free(list: *mut NsU64List) {
    if !list.is_null() {
        drop(unsafe { Box::from_raw(list) });
    }
}

/// Coprime building blocks (g, a, b, c) of a label, in that order.
///
/// # Safety
/// `out_gabc` must point to four writable values.
#[no_mangle]
pub unsafe extern "C" fn ns_decompose(d: u64, m: u64, n: u64, out_gabc: *mut u64) -> NsStatus {
    guarded(|| {
        if out_gabc.is_null() {
            return Err(null_failure("out_gabc"));
        }
        let label = LocusLabel::new(d, m, n).map_err(core_failure)?;
        let dec = decompose(&label).map_err(core_failure)?;
        for (i, v) in [dec.g, dec.a, dec.b, dec.c].into_iter().enumerate() {
            unsafe { *out_gabc.add(i) = v };
        }
        Ok(())
    })
}

/// Canonical witness pair (x, y) for a label.
///
/// # Safety
/// `out_x` and `out_y` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ns_xy_from_locus(
    d: u64,
    m: u64,
    n: u64,
    out_x: *mut i64,
    out_y: *mut i64,
) -> NsStatus {
    guarded(|| {
        if out_x.is_null() {
            return Err(null_failure("out_x"));
        }
        if out_y.is_null() {
            return Err(null_failure("out_y"));
        }
        let label = LocusLabel::new(d, m, n).map_err(core_failure)?;
        let pair = xy_from_locus(&label).map_err(core_failure)?;
        let x = narrow(pair.x, "witness x")?;
        let y = narrow(pair.y, "witness y")?;
        unsafe {
            *out_x = x;
            *out_y = y;
        }
        Ok(())
    })
}

/// Canonical singular relation of a label.
///
/// # Safety
/// `out_relation` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_equation(
    d: u64,
    m: u64,
    n: u64,
    out_relation: *mut NsRelation,
) -> NsStatus {
    guarded(|| {
        if out_relation.is_null() {
            return Err(null_failure("out_relation"));
        }
        let label = LocusLabel::new(d, m, n).map_err(core_failure)?;
        let pair = xy_from_locus(&label).map_err(core_failure)?;
        let rel = relation_from_xy(d, &pair).map_err(core_failure)?;
        let coeffs = rel.coeffs();
        let mut a = [0i64; 5];
        for (slot, &c) in a.iter_mut().zip(coeffs.iter()) {
            *slot = narrow(c, "coefficient")?;
        }
        let value = NsRelation {
            d,
            a,
            delta: narrow(rel.delta(), "discriminant")?,
            p: narrow(rel.p(), "discriminant root")?,
        };
        unsafe { *out_relation = value };
        Ok(())
    })
}

/// Exponent label recovered from a relation; `relation.delta` and
/// `relation.p` are ignored and recomputed.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ns_locus_of_relation(
    relation: *const NsRelation,
    out_m: *mut u64,
    out_n: *mut u64,
) -> NsStatus {
    guarded(|| {
        if relation.is_null() {
            return Err(null_failure("relation"));
        }
        if out_m.is_null() {
            return Err(null_failure("out_m"));
        }
        if out_n.is_null() {
            return Err(null_failure("out_n"));
        }
        let raw = unsafe { *relation };
        let coeffs = raw.a.map(i128::from);
        let rel = SingularRelation::new(raw.d, coeffs).map_err(core_failure)?;
        let label = locus_from_relation(&rel).map_err(core_failure)?;
        unsafe {
            *out_m = label.m;
            *out_n = label.n;
        }
        Ok(())
    })
}

/// Periods from the two curve moduli for the witness pair (x, y).
///
/// # Safety
/// `out_period` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_solve_period(
    d: u64,
    x: i64,
    y: i64,
    tau_e: NsComplex,
    tau_f: NsComplex,
    out_period: *mut NsPeriod,
) -> NsStatus {
    guarded(|| {
        if out_period.is_null() {
            return Err(null_failure("out_period"));
        }
        let pair = XyPair::new(d, i128::from(x), i128::from(y)).map_err(core_failure)?;
        let (z1, z2) = periods::solve_period(d, &pair, complex_in(tau_e), complex_in(tau_f))
            .map_err(core_failure)?;
        let pm = periods::build_period(d, &pair, z1, z2).map_err(core_failure)?;
        unsafe {
            *out_period = NsPeriod {
                z1: complex_out(pm.z1),
                z2: complex_out(pm.z2),
                z3: complex_out(pm.z3),
            };
        }
        Ok(())
    })
}

/// Checks both embedded curves on the periods spanned by (z1, z2) and
/// reports the pairing exponents. A tolerance of 0 or below selects the
/// built-in default.
///
/// # Safety
/// All out-pointers must be valid.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn ns_verify_lattice(
    d: u64,
    x: i64,
    y: i64,
    z1: NsComplex,
    z2: NsComplex,
    tolerance: f64,
    out_x_member: *mut bool,
    out_y_member: *mut bool,
    out_m: *mut u64,
    out_n: *mut u64,
) -> NsStatus {
    guarded(|| {
        for (ptr, name) in [
            (out_x_member as *mut u8, "out_x_member"),
            (out_y_member as *mut u8, "out_y_member"),
        ] {
            if ptr.is_null() {
                return Err(null_failure(name));
            }
        }
        if out_m.is_null() {
            return Err(null_failure("out_m"));
        }
        if out_n.is_null() {
            return Err(null_failure("out_n"));
        }
        let tol = if tolerance > 0.0 { tolerance } else { periods::ABS_TOL };
        let pair = XyPair::new(d, i128::from(x), i128::from(y)).map_err(core_failure)?;
        let (ex, ey) = periods::embeddings(d, &pair).map_err(core_failure)?;
        let (w1, w2) = (complex_in(z1), complex_in(z2));
        let x_member =
            periods::verify_membership(d, &pair, w1, w2, &ex, tol).map_err(core_failure)?;
        let y_member =
            periods::verify_membership(d, &pair, w1, w2, &ey, tol).map_err(core_failure)?;
        unsafe {
            *out_x_member = x_member;
            *out_y_member = y_member;
            *out_m = ex.exponent;
            *out_n = ey.exponent;
        }
        Ok(())
    })
}

/// Orbit check over full-order cyclic subgroups with the given block
/// intersection sizes.
///
/// # Safety
/// `out_count` and `out_single_orbit` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_transitive(
    n: u64,
    a: u64,
    b: u64,
    out_count: *mut u64,
    out_single_orbit: *mut bool,
) -> NsStatus {
    guarded(|| {
        if out_count.is_null() {
            return Err(null_failure("out_count"));
        }
        if out_single_orbit.is_null() {
            return Err(null_failure("out_single_orbit"));
        }
        let (count, single) = sympmod::verify_transitive_cyclic(n, a, b).map_err(core_failure)?;
        unsafe {
            *out_count = count;
            *out_single_orbit = single;
        }
        Ok(())
    })
}

/// Enumeration of allowable kernel subgroups for the quadruple.
///
/// # Safety
/// `out_count` and `out_contains_standard` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_allowable(
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    out_count: *mut u64,
    out_contains_standard: *mut bool,
) -> NsStatus {
    guarded(|| {
        if out_count.is_null() {
            return Err(null_failure("out_count"));
        }
        if out_contains_standard.is_null() {
            return Err(null_failure("out_contains_standard"));
        }
        let (count, standard) = sympmod::allowable_isotropic(a, b, c, d).map_err(core_failure)?;
        unsafe {
            *out_count = count;
            *out_contains_standard = standard;
        }
        Ok(())
    })
}

/// Orbit check over valid source/kernel pairs for the quadruple.
///
/// # Safety
/// `out_pair_count` and `out_single_orbit` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_technical1(
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    out_pair_count: *mut u64,
    out_single_orbit: *mut bool,
) -> NsStatus {
    guarded(|| {
        if out_pair_count.is_null() {
            return Err(null_failure("out_pair_count"));
        }
        if out_single_orbit.is_null() {
            return Err(null_failure("out_single_orbit"));
        }
        let (count, single) =
            sympmod::verify_pair_transitivity(a, b, c, d).map_err(core_failure)?;
        unsafe {
            *out_pair_count = count;
            *out_single_orbit = single;
        }
        Ok(())
    })
}

/// Quotient torsion domination check.
///
/// # Safety
/// `out_holds` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_domination(
    c: u64,
    d: u64,
    a: u64,
    b: u64,
    out_holds: *mut bool,
) -> NsStatus {
    guarded(|| {
        if out_holds.is_null() {
            return Err(null_failure("out_holds"));
        }
        let holds = sympmod::verify_domination(c, d, a, b).map_err(core_failure)?;
        unsafe { *out_holds = holds };
        Ok(())
    })
}

/// Divides the vector `x` (four coordinates mod n) by the cofactor of
/// its order: writes the lexicographically first full-order `y` with
/// (n / order) * y = x.
///
/// # Safety
/// `x` must point to four readable values, `out_y` to four writable
/// ones, and `out_order` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_division(
    n: u64,
    x: *const i64,
    out_y: *mut u64,
    out_order: *mut u64,
) -> NsStatus {
    guarded(|| {
        if x.is_null() {
            return Err(null_failure("x"));
        }
        if out_y.is_null() {
            return Err(null_failure("out_y"));
        }
        if out_order.is_null() {
            return Err(null_failure("out_order"));
        }
        let coords = unsafe { [*x, *x.add(1), *x.add(2), *x.add(3)] };
        let v = sympmod::ModVector::new(n, coords).map_err(core_failure)?;
        let order = sympmod::element_order(&v);
        let root = sympmod::divide_by_cofactor(&v, order).map_err(core_failure)?;
        for (i, c) in root.coords().into_iter().enumerate() {
            unsafe { *out_y.add(i) = c };
        }
        unsafe { *out_order = order };
        Ok(())
    })
}

/// k-torsion identity on the standard rank-2 block mod n.
///
/// # Safety
/// `out_holds` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ns_sp_torsion(n: u64, k: u64, out_holds: *mut bool) -> NsStatus {
    guarded(|| {
        if out_holds.is_null() {
            return Err(null_failure("out_holds"));
        }
        let block = sympmod::Subgroup::standard_e(n).map_err(core_failure)?;
        let holds = sympmod::torsion_check(&block, k).map_err(core_failure)?;
        unsafe { *out_holds = holds };
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    fn last_error() -> String {
        let ptr = ns_last_error_message();
        assert!(!ptr.is_null(), "expected an error message");
        unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string()
    }

    #[test]
    fn check_reports_both_ways() {
        let mut flag = false;
        assert_eq!(unsafe { ns_check(6, 2, 3, &mut flag) }, NsStatus::NsOk);
        assert!(flag);
        assert_eq!(unsafe { ns_check(1, 2, 3, &mut flag) }, NsStatus::NsOk);
        assert!(!flag);
        assert_eq!(
            unsafe { ns_check(0, 2, 3, &mut flag) },
            NsStatus::NsErrInvalidInput
        );
        assert!(last_error().contains("positive"));
    }

    #[test]
    fn null_pointers_are_rejected() {
        assert_eq!(
            unsafe { ns_check(6, 2, 3, std::ptr::null_mut()) },
            NsStatus::NsErrNullPointer
        );
        assert!(last_error().contains("out_complementary"));
        assert_eq!(
            unsafe { ns_complements(6, 6, std::ptr::null_mut()) },
            NsStatus::NsErrNullPointer
        );
    }

    #[test]
    fn complement_list_round_trip() {
        let mut list: *mut NsU64List = std::ptr::null_mut();
        assert_eq!(unsafe { ns_complements(6, 6, &mut list) }, NsStatus::NsOk);
        assert_eq!(unsafe { ns_u64_list_len(list) }, 4);
        let mut values = Vec::new();
        for i in 0..4 {
            let mut v = 0u64;
            assert_eq!(unsafe { ns_u64_list_get(list, i, &mut v) }, NsStatus::NsOk);
            values.push(v);
        }
        assert_eq!(values, vec![1, 2, 3, 6]);

        let mut v = 0u64;
        assert_eq!(
            unsafe { ns_u64_list_get(list, 4, &mut v) },
            NsStatus::NsErrInvalidInput
        );
        assert!(last_error().contains("out of range"));

        unsafe { ns_u64_list_free(list) };
        unsafe { ns_u64_list_free(std::ptr::null_mut()) };
        assert_eq!(unsafe { ns_u64_list_len(std::ptr::null()) }, 0);
    }

    #[test]
    fn equation_and_inverse_agree() {
        let mut rel = NsRelation { d: 0, a: [0; 5], delta: 0, p: 0 };
        assert_eq!(unsafe { ns_equation(6, 2, 3, &mut rel) }, NsStatus::NsOk);
        assert_eq!(rel.d, 6);
        assert_eq!(rel.a, [1, -5, 1, 0, 0]);
        assert_eq!(rel.delta, 1);
        assert_eq!(rel.p, 1);

        let (mut m, mut n) = (0u64, 0u64);
        assert_eq!(
            unsafe { ns_locus_of_relation(&rel, &mut m, &mut n) },
            NsStatus::NsOk
        );
        assert_eq!((m, n), (2, 3));
    }

    #[test]
    fn decompose_and_witness_match_the_library() {
        let mut gabc = [0u64; 4];
        assert_eq!(
            unsafe { ns_decompose(90, 18, 45, gabc.as_mut_ptr()) },
            NsStatus::NsOk
        );
        let label = LocusLabel::new(90, 18, 45).unwrap();
        let dec = decompose(&label).unwrap();
        assert_eq!(gabc, [dec.g, dec.a, dec.b, dec.c]);

        let (mut x, mut y) = (0i64, 0i64);
        assert_eq!(
            unsafe { ns_xy_from_locus(90, 18, 45, &mut x, &mut y) },
            NsStatus::NsOk
        );
        let pair = xy_from_locus(&label).unwrap();
        assert_eq!((i128::from(x), i128::from(y)), (pair.x, pair.y));
    }

    #[test]
    fn period_pipeline_works_end_to_end() {
        let mut pm = NsPeriod {
            z1: NsComplex { re: 0.0, im: 0.0 },
            z2: NsComplex { re: 0.0, im: 0.0 },
            z3: NsComplex { re: 0.0, im: 0.0 },
        };
        let tau_e = NsComplex { re: 0.0, im: 5.0 };
        let tau_f = NsComplex { re: 0.0, im: 12.0 };
        assert_eq!(
            unsafe { ns_solve_period(6, 3, 2, tau_e, tau_f, &mut pm) },
            NsStatus::NsOk
        );
        assert_eq!((pm.z1.re, pm.z1.im), (0.0, 46.0));
        assert_eq!((pm.z2.re, pm.z2.im), (0.0, 102.0));
        assert_eq!((pm.z3.re, pm.z3.im), (0.0, 234.0));

        let (mut xm, mut ym) = (false, false);
        let (mut m, mut n) = (0u64, 0u64);
        assert_eq!(
            unsafe {
                ns_verify_lattice(6, 3, 2, pm.z1, pm.z2, 0.0, &mut xm, &mut ym, &mut m, &mut n)
            },
            NsStatus::NsOk
        );
        assert!(xm);
        assert!(ym);
        assert_eq!((m, n), (2, 3));
    }

    #[test]
    fn oracle_calls_match_library_counts() {
        let mut count = 0u64;
        let mut flag = false;
        assert_eq!(
            unsafe { ns_sp_transitive(6, 2, 3, &mut count, &mut flag) },
            NsStatus::NsOk
        );
        assert_eq!(count, 12);
        assert!(flag);

        assert_eq!(
            unsafe { ns_sp_allowable(1, 1, 2, 2, &mut count, &mut flag) },
            NsStatus::NsOk
        );
        assert_eq!(count, 6);
        assert!(flag);

        assert_eq!(
            unsafe { ns_sp_technical1(1, 3, 2, 3, &mut count, &mut flag) },
            NsStatus::NsOk
        );
        assert_eq!(count, 24);
        assert!(flag);

        assert_eq!(
            unsafe { ns_sp_domination(2, 3, 1, 3, &mut flag) },
            NsStatus::NsOk
        );
        assert!(flag);

        assert_eq!(unsafe { ns_sp_torsion(6, 3, &mut flag) }, NsStatus::NsOk);
        assert!(flag);
    }

    #[test]
    fn division_round_trips() {
        let x = [3i64, 0, 0, 0];
        let mut y = [0u64; 4];
        let mut order = 0u64;
        assert_eq!(
            unsafe { ns_sp_division(6, x.as_ptr(), y.as_mut_ptr(), &mut order) },
            NsStatus::NsOk
        );
        assert_eq!(y, [1, 0, 0, 0]);
        assert_eq!(order, 2);
    }

    #[test]
    fn bound_errors_surface_with_code_4() {
        let mut count = 0u64;
        let mut flag = false;
        assert_eq!(
            unsafe { ns_sp_transitive(38, 1, 1, &mut count, &mut flag) },
            NsStatus::NsErrEnumerationBound
        );
        assert!(last_error().contains("enumeration bound"));
    }

    #[test]
    fn version_is_a_c_string() {
        let ptr = ns_version();
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap();
        assert_eq!(text, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn header_is_generated_with_the_full_surface() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/nonsimple.h");
        let text = std::fs::read_to_string(header).expect("header exists");
        for needle in [
            "NONSIMPLE_H",
            "typedef struct NsU64List NsU64List;",
            "NS_OK",
            "NS_ERR_ENUMERATION_BOUND",
            "ns_complements",
            "ns_equation",
            "ns_solve_period",
            "ns_verify_lattice",
            "ns_sp_technical1",
            "ns_u64_list_free",
            "ns_last_error_message",
        ] {
            assert!(text.contains(needle), "header is missing {needle}");
        }
    }
}
