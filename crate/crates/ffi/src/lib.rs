//! C ABI for the Suzuki curve toolkit.
//!
//! Every call returns a [`SuzukiStatus`]; results come back through out
//! pointers. A context is an opaque handle created by [`suzuki_context_new`]
//! and released with [`suzuki_context_free`]. The message for the most recent
//! failure on the calling thread is available from [`suzuki_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use suzuki_core::curve::Curve;
use suzuki_core::dims::dim_l_oracle;
use suzuki_core::forms::{kappa_eval, kappa_rank};
use suzuki_core::expr::parse_expression;
use suzuki_core::{make_params, Error, Reducer, SemigroupTable, SuzukiParams as CoreParams};

/// Status codes returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuzukiStatus {
    Ok = 0,
    NullPointer = 1,
    ParameterDomain = 2,
    Range = 3,
    Precondition = 4,
    Parse = 5,
    Unsupported = 6,
    InvalidUtf8 = 7,
    Defect = 8,
    Panic = 9,
}

/// Derived curve parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SuzukiParams {
    pub n: u32,
    pub q0: u64,
    pub q: u64,
    pub genus: u64,
    pub m_embed: u64,
    pub generators: [u64; 4],
}

/// Opaque per-curve state: semigroup table, reduction memo and, once needed,
/// the rational points.
pub struct SuzukiContext {
    params: CoreParams,
    table: SemigroupTable,
    reducer: Reducer,
    curve: Option<Curve>,
}

/// Largest `m` accepted by the semigroup queries.
const MAX_DEGREE: u64 = 1 << 24;
/// Largest form degree accepted by the kappa queries.
const MAX_FORM_DEGREE: u64 = 64;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> SuzukiStatus {
    match err {
        Error::ParameterDomain(_) => SuzukiStatus::ParameterDomain,
        Error::Range { .. } | Error::GrowthLimit { .. } => SuzukiStatus::Range,
        Error::Precondition(_) | Error::DivisionByZero { .. } => SuzukiStatus::Precondition,
        Error::Parse { .. } => SuzukiStatus::Parse,
        Error::UnsupportedRange { .. } => SuzukiStatus::Unsupported,
        Error::Defect(_) => SuzukiStatus::Defect,
    }
}

fn guard<F>(f: F) -> SuzukiStatus
where
    F: FnOnce() -> Result<(), SuzukiStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SuzukiStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SuzukiStatus::Panic
        }
    }
}

fn fail(err: Error) -> SuzukiStatus {
    set_error(err.to_string());
    status_of(&err)
}

unsafe fn context<'a>(ctx: *mut SuzukiContext) -> Result<&'a mut SuzukiContext, SuzukiStatus> {
    ctx.as_mut().ok_or_else(|| {
        set_error("null context");
        SuzukiStatus::NullPointer
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, SuzukiStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer");
        SuzukiStatus::NullPointer
    })
}

impl SuzukiContext {
    fn curve(&mut self) -> Result<&Curve, SuzukiStatus> {
        if self.curve.is_none() {
            self.curve = Some(Curve::new(self.params).map_err(fail)?);
        }
        Ok(self.curve.as_ref().unwrap())
    }

    fn table_covering(&mut self, m: u64) -> Result<&SemigroupTable, SuzukiStatus> {
        if m > MAX_DEGREE {
            return Err(fail(Error::Range { what: "m", value: m, bound: MAX_DEGREE }));
        }
        if m > self.table.bound() {
            self.table = SemigroupTable::build(self.params, m);
        }
        Ok(&self.table)
    }
}

fn form_degree(t: u64) -> Result<u64, SuzukiStatus> {
    if t > MAX_FORM_DEGREE {
        return Err(fail(Error::Range { what: "t", value: t, bound: MAX_FORM_DEGREE }));
    }
    Ok(t)
}

/// Creates a context for X_n. On success `*out_ctx` owns the handle.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn suzuki_context_new(n: u32, out_ctx: *mut *mut SuzukiContext) -> SuzukiStatus {
    guard(|| {
        let slot = out(out_ctx)?;
        *slot = ptr::null_mut();
        let params = make_params(n).map_err(fail)?;
        let ctx = SuzukiContext {
            params,
            table: SemigroupTable::with_default_bound(params),
            reducer: Reducer::new(params),
            curve: None,
        };
        *slot = Box::into_raw(Box::new(ctx));
        Ok(())
    })
}

/// Releases a context. Null is ignored.
///
/// # Safety
/// `ctx` must come from [`suzuki_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn suzuki_context_free(ctx: *mut SuzukiContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// # Safety
/// `ctx` must be a live context and `params` writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_params(ctx: *mut SuzukiContext, params: *mut SuzukiParams) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let p = c.params;
        *out(params)? = SuzukiParams {
            n: p.n,
            q0: p.q0,
            q: p.q,
            genus: p.genus,
            m_embed: p.m_embed,
            generators: p.generators,
        };
        Ok(())
    })
}

/// Dimension of L(m P_inf), counted from the Weierstrass semigroup.
///
/// # Safety
/// `ctx` must be a live context and `dim` writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_dim_l(ctx: *mut SuzukiContext, m: u64, dim: *mut u64) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let slot = out(dim)?;
        *slot = dim_l_oracle(c.table_covering(m)?, m).map_err(fail)?;
        Ok(())
    })
}

/// Whether |m P_inf| is very ample.
///
/// # Safety
/// `ctx` must be a live context and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_is_very_ample(ctx: *mut SuzukiContext, m: u64, result: *mut bool) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let slot = out(result)?;
        *slot = c.table_covering(m)?.is_very_ample(m).map_err(fail)?;
        Ok(())
    })
}

/// Dimension of degree-`t` forms vanishing on the curve, from the rank of
/// the reduction map over GF(2).
///
/// # Safety
/// `ctx` must be a live context and `kappa` writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_kappa_rank(ctx: *mut SuzukiContext, t: u64, kappa: *mut u64) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let slot = out(kappa)?;
        *slot = kappa_rank(&mut c.reducer, form_degree(t)?);
        Ok(())
    })
}

/// Same count as [`suzuki_kappa_rank`], from evaluation at rational points.
///
/// # Safety
/// `ctx` must be a live context and `kappa` writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_kappa_eval(ctx: *mut SuzukiContext, t: u64, kappa: *mut u64) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let slot = out(kappa)?;
        *slot = kappa_eval(c.curve()?, form_degree(t)?).map_err(fail)?;
        Ok(())
    })
}

/// Reduces a polynomial in x, y, v, w to normal form. `*result` receives a
/// NUL-terminated string to be released with [`suzuki_string_free`].
///
/// # Safety
/// `ctx` must be a live context, `expr` a NUL-terminated string and `result`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn suzuki_reduce(
    ctx: *mut SuzukiContext,
    expr: *const c_char,
    result: *mut *mut c_char,
) -> SuzukiStatus {
    guard(|| {
        let c = context(ctx)?;
        let slot = out(result)?;
        *slot = ptr::null_mut();
        if expr.is_null() {
            set_error("null expression");
            return Err(SuzukiStatus::NullPointer);
        }
        let src = CStr::from_ptr(expr).to_str().map_err(|_| {
            set_error("expression is not UTF-8");
            SuzukiStatus::InvalidUtf8
        })?;
        let poly = parse_expression(src).map_err(fail)?;
        let reduced = c.reducer.reduce(&poly).map_err(fail)?;
        *slot = CString::new(reduced.to_string()).unwrap_or_default().into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn suzuki_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn suzuki_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn suzuki_status_name(status: SuzukiStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SuzukiStatus::Ok => c"ok",
        SuzukiStatus::NullPointer => c"null pointer",
        SuzukiStatus::ParameterDomain => c"parameter domain",
        SuzukiStatus::Range => c"out of range",
        SuzukiStatus::Precondition => c"precondition",
        SuzukiStatus::Parse => c"parse error",
        SuzukiStatus::Unsupported => c"unsupported",
        SuzukiStatus::InvalidUtf8 => c"invalid utf-8",
        SuzukiStatus::Defect => c"defect",
        SuzukiStatus::Panic => c"panic",
    };
    s.as_ptr()
}
