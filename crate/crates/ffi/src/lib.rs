//! C ABI for the invcurve library: opaque context handles, plain error
//! codes, and the integer-valued query surface (group orders, Molien
//! coefficients, degree decisions, singularity classification).
//!
//! Every function is panic-safe at the boundary and returns
//! `InvStatus::Ok` on success. The context caches the group closure, so
//! order and Molien queries pay the enumeration once per handle.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use invcurve::decisions;
use invcurve::groups::{self, GroupId, MatrixGroup};
use invcurve::singularity::{self, SingularityType};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    Internal = 4,
}

/// Group selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvGroup {
    Valentiner = 0,
    Icosahedral = 1,
    Klein = 2,
}

/// Singularity classification of a general invariant curve.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvSingularity {
    Node = 0,
    Cusp = 1,
    Tacnode = 2,
    A5 = 3,
    D5 = 4,
    Nonsingular = 5,
    Undefined = 6,
}

impl From<SingularityType> for InvSingularity {
    fn from(t: SingularityType) -> Self {
        match t {
            SingularityType::Node => InvSingularity::Node,
            SingularityType::Cusp => InvSingularity::Cusp,
            SingularityType::Tacnode => InvSingularity::Tacnode,
            SingularityType::TypeA5 => InvSingularity::A5,
            SingularityType::TypeD5 => InvSingularity::D5,
            SingularityType::Nonsingular => InvSingularity::Nonsingular,
            SingularityType::Undefined => InvSingularity::Undefined,
        }
    }
}

/// Opaque handle owning one group's cached data.
pub struct InvCurveCtx {
    group: GroupId,
    closure: OnceLock<MatrixGroup>,
}

impl InvCurveCtx {
    fn group_closure(&self) -> &MatrixGroup {
        self.closure.get_or_init(|| {
            groups::closure(&groups::generators(self.group), groups::DEFAULT_CLOSURE_CAP)
                .expect("generator matrices close at the expected order")
        })
    }
}

fn group_of(g: InvGroup) -> GroupId {
    match g {
        InvGroup::Valentiner => GroupId::Valentiner,
        InvGroup::Icosahedral => GroupId::Icosahedral,
        InvGroup::Klein => GroupId::Klein,
    }
}

fn guarded<F: FnOnce() -> InvStatus>(f: F) -> InvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => InvStatus::Internal,
    }
}

/// Create a context for one group. Free with `invcurve_ctx_free`.
#[no_mangle]
pub extern "C" fn invcurve_ctx_new(group: InvGroup) -> *mut InvCurveCtx {
    let ctx = Box::new(InvCurveCtx {
        group: group_of(group),
        closure: OnceLock::new(),
    });
    Box::into_raw(ctx)
}

/// Release a context created by `invcurve_ctx_new`.
///
/// # Safety
/// `ctx` must be a pointer previously returned by `invcurve_ctx_new` and
/// not freed since; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn invcurve_ctx_free(ctx: *mut InvCurveCtx) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Order of the linear lift generated by the generator matrices
/// (1080, 60 or 168).
///
/// # Safety
/// `ctx` must be a live context pointer and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invcurve_lift_order(
    ctx: *const InvCurveCtx,
    out: *mut u64,
) -> InvStatus {
    if ctx.is_null() || out.is_null() {
        return InvStatus::NullArgument;
    }
    let ctx = &*ctx;
    guarded(|| {
        let order = ctx.group_closure().order() as u64;
        *out = order;
        InvStatus::Ok
    })
}

/// Order of the group in PGL(3, C) (360, 60 or 168).
///
/// # Safety
/// `ctx` must be a live context pointer and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invcurve_projective_order(
    ctx: *const InvCurveCtx,
    out: *mut u64,
) -> InvStatus {
    if ctx.is_null() || out.is_null() {
        return InvStatus::NullArgument;
    }
    let ctx = &*ctx;
    guarded(|| {
        let order = groups::projective_order(ctx.group_closure()) as u64;
        *out = order;
        InvStatus::Ok
    })
}

/// Does a nonsingular invariant curve of this degree exist?
/// Writes 1 or 0 to `out`.
///
/// # Safety
/// `ctx` must be a live context pointer and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invcurve_nonsingular_exists(
    ctx: *const InvCurveCtx,
    degree: u32,
    out: *mut i32,
) -> InvStatus {
    if ctx.is_null() || out.is_null() {
        return InvStatus::NullArgument;
    }
    if degree == 0 {
        return InvStatus::InvalidArgument;
    }
    let ctx = &*ctx;
    guarded(|| {
        *out = decisions::closed_form_nonsingular(ctx.group, degree) as i32;
        InvStatus::Ok
    })
}

/// Does an integral (irreducible, reduced) invariant curve of this degree
/// exist? Writes 1 or 0 to `out`.
///
/// # Safety
/// `ctx` must be a live context pointer and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn invcurve_integral_exists(
    ctx: *const InvCurveCtx,
    degree: u32,
    out: *mut i32,
) -> InvStatus {
    if ctx.is_null() || out.is_null() {
        return InvStatus::NullArgument;
    }
    if degree == 0 {
        return InvStatus::InvalidArgument;
    }
    let ctx = &*ctx;
    guarded(|| {
        *out = singularity::decide_integral(ctx.group, degree) as i32;
        InvStatus::Ok
    })
}

/// Singularity type of a general invariant curve of this degree, with the
/// branch multiplicity (0 when the type carries none) and the number of
/// singular points (0 when the general member is nonsingular/undefined).
/// Output pointers may be null to skip a field.
///
/// # Safety
/// `ctx` must be a live context pointer; non-null outputs writable.
#[no_mangle]
pub unsafe extern "C" fn invcurve_classify(
    ctx: *const InvCurveCtx,
    degree: u32,
    out_type: *mut InvSingularity,
    out_multiplicity: *mut u32,
    out_point_count: *mut u32,
) -> InvStatus {
    if ctx.is_null() {
        return InvStatus::NullArgument;
    }
    if degree == 0 {
        return InvStatus::InvalidArgument;
    }
    let ctx = &*ctx;
    guarded(|| {
        let sing = singularity::classify(ctx.group, degree);
        let profile = decisions::DegreeProfile::of(ctx.group);
        if !out_type.is_null() {
            *out_type = sing.into();
        }
        if !out_multiplicity.is_null() {
            *out_multiplicity = sing.branch_multiplicity().unwrap_or(0);
        }
        if !out_point_count.is_null() {
            *out_point_count = match sing {
                SingularityType::Nonsingular | SingularityType::Undefined => 0,
                _ => profile.a * profile.b,
            };
        }
        InvStatus::Ok
    })
}

/// Exact Molien coefficients of the lift's invariant ring, t⁰..t^max.
/// `out` must hold at least `max_degree + 1` entries.
///
/// # Safety
/// `ctx` must be a live context pointer; `out` must point to writable
/// memory of `out_len` elements.
#[no_mangle]
pub unsafe extern "C" fn invcurve_molien(
    ctx: *const InvCurveCtx,
    max_degree: u32,
    out: *mut i64,
    out_len: usize,
) -> InvStatus {
    if ctx.is_null() || out.is_null() {
        return InvStatus::NullArgument;
    }
    if out_len < max_degree as usize + 1 {
        return InvStatus::BufferTooSmall;
    }
    let ctx = &*ctx;
    guarded(|| {
        let coeffs = match groups::molien_series(ctx.group_closure(), max_degree) {
            Ok(c) => c,
            Err(_) => return InvStatus::Internal,
        };
        let dst = std::slice::from_raw_parts_mut(out, coeffs.len());
        dst.copy_from_slice(&coeffs);
        InvStatus::Ok
    })
}

/// Closed-form series expansion (same coefficients as `invcurve_molien`,
/// no group enumeration).
///
/// # Safety
/// `out` must point to writable memory of `out_len` elements.
#[no_mangle]
pub unsafe extern "C" fn invcurve_poincare(
    group: InvGroup,
    max_degree: u32,
    out: *mut i64,
    out_len: usize,
) -> InvStatus {
    if out.is_null() {
        return InvStatus::NullArgument;
    }
    if out_len < max_degree as usize + 1 {
        return InvStatus::BufferTooSmall;
    }
    guarded(|| {
        let coeffs = groups::expand_poincare(group_of(group), max_degree);
        let dst = std::slice::from_raw_parts_mut(out, coeffs.len());
        dst.copy_from_slice(&coeffs);
        InvStatus::Ok
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn invcurve_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
