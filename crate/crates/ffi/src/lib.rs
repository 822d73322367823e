//! C ABI over the `hamnum` library.
//!
//! Every fallible function returns an [`HnStatus`]; on failure the message is
//! available from [`hn_last_error_message`] until the next call on the same
//! thread. Objects are opaque handles released with their `_free` function;
//! strings returned by the library are released with [`hn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hamnum::grinberg::{self, FaceLengthVector, GrinbergSet};
use hamnum::reduction::reduction_report;
use hamnum::walks::{hamiltonian_number_exact, ClosedWalk};
use hamnum::{Error, PlanarEmbedding};

/// Result codes; one per library error plus the ABI's own failures.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HnStatus {
    Ok = 0,
    NullPointer,
    InvalidUtf8,
    BufferTooSmall,
    Panic,
    SyntaxError,
    DanglingDart,
    Disconnected,
    NonPlanarEmbedding,
    LoopEdge,
    TooFewFaces,
    InvalidFaceLength,
    OddGrinbergNumber,
    NonAdjacentStep,
    NotSpanning,
    UnknownVertex,
    EmptyWalk,
    TooLarge,
    NotSimpleHost,
    InvalidWalk,
    OddDualCycle,
    InconsistentBounds,
    UnknownFixture,
    BadParams,
    UnknownFace,
    TheoremViolated,
    Io,
}

impl From<&Error> for HnStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::SyntaxError { .. } => HnStatus::SyntaxError,
            Error::DanglingDart { .. } => HnStatus::DanglingDart,
            Error::Disconnected { .. } => HnStatus::Disconnected,
            Error::NonPlanarEmbedding { .. } => HnStatus::NonPlanarEmbedding,
            Error::LoopEdge { .. } => HnStatus::LoopEdge,
            Error::TooFewFaces { .. } => HnStatus::TooFewFaces,
            Error::InvalidFaceLength { .. } => HnStatus::InvalidFaceLength,
            Error::OddGrinbergNumber(_) => HnStatus::OddGrinbergNumber,
            Error::NonAdjacentStep { .. } => HnStatus::NonAdjacentStep,
            Error::NotSpanning { .. } => HnStatus::NotSpanning,
            Error::UnknownVertex { .. } => HnStatus::UnknownVertex,
            Error::EmptyWalk => HnStatus::EmptyWalk,
            Error::TooLarge { .. } => HnStatus::TooLarge,
            Error::NotSimpleHost { .. } => HnStatus::NotSimpleHost,
            Error::InvalidWalk(_) => HnStatus::InvalidWalk,
            Error::OddDualCycle { .. } => HnStatus::OddDualCycle,
            Error::InconsistentBounds(_) => HnStatus::InconsistentBounds,
            Error::UnknownFixture(_) => HnStatus::UnknownFixture,
            Error::BadParams(_) => HnStatus::BadParams,
            Error::UnknownFace { .. } => HnStatus::UnknownFace,
            Error::TheoremViolated(_) => HnStatus::TheoremViolated,
            Error::Io { .. } => HnStatus::Io,
        }
    }
}

/// Parsed, validated planar embedding.
pub struct HnEmbedding(PlanarEmbedding);

/// Grinberg set of a face-length vector.
pub struct HnGrinbergSet(GrinbergSet);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

struct Failure(HnStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(HnStatus::from(&e), format!("{}: {e}", e.name()))
    }
}

fn null(what: &str) -> Failure {
    Failure(HnStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HnStatus {
    set_error(String::new());
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HnStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            HnStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Copies `values` into a caller buffer of `capacity` elements. `len`
/// always receives the full count, so a too-small buffer can be resized.
unsafe fn fill<T: Copy>(values: &[T], buffer: *mut T, capacity: usize, len: *mut usize) -> Result<(), Failure> {
    write_out(len, values.len(), "len")?;
    if values.len() > capacity {
        return Err(Failure(
            HnStatus::BufferTooSmall,
            format!("buffer holds {capacity}, need {}", values.len()),
        ));
    }
    if !values.is_empty() {
        if buffer.is_null() {
            return Err(null("buffer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buffer, values.len());
    }
    Ok(())
}

/// Message describing the last failure on this thread; empty after success.
/// Owned by the library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a graph file (`p planar`, `e` and `r` lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hn_embedding_parse(text: *const c_char, out: *mut *mut HnEmbedding) -> HnStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(HnStatus::InvalidUtf8, e.to_string()))?;
        let g = PlanarEmbedding::parse(text)?;
        write_out(out, Box::into_raw(Box::new(HnEmbedding(g))), "out")
    })
}

/// # Safety
/// `g` must come from [`hn_embedding_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hn_embedding_free(g: *mut HnEmbedding) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex, edge and face counts.
///
/// # Safety
/// `g` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_embedding_counts(
    g: *const HnEmbedding,
    vertices: *mut usize,
    edges: *mut usize,
    faces: *mut usize,
) -> HnStatus {
    guard(|| {
        let g = &borrow(g, "embedding")?.0;
        write_out(vertices, g.num_vertices(), "vertices")?;
        write_out(edges, g.num_edges(), "edges")?;
        write_out(faces, g.trace_faces().len(), "faces")
    })
}

/// Face lengths in face-id order.
///
/// # Safety
/// `g` must be a live handle, `buffer` must hold `capacity` values and `len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_embedding_face_lengths(
    g: *const HnEmbedding,
    buffer: *mut u32,
    capacity: usize,
    len: *mut usize,
) -> HnStatus {
    guard(|| {
        let lengths = borrow(g, "embedding")?.0.trace_faces().lengths();
        fill(&lengths, buffer, capacity, len)
    })
}

/// Grinberg set of a literal face-length vector.
///
/// # Safety
/// `lengths` must hold `count` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_grinberg_from_lengths(
    lengths: *const u32,
    count: usize,
    out: *mut *mut HnGrinbergSet,
) -> HnStatus {
    guard(|| {
        let lengths = if count == 0 {
            Vec::new()
        } else if lengths.is_null() {
            return Err(null("lengths"));
        } else {
            std::slice::from_raw_parts(lengths, count).to_vec()
        };
        let set = grinberg::grinberg_set(&FaceLengthVector::new(lengths)?)?;
        write_out(out, Box::into_raw(Box::new(HnGrinbergSet(set))), "out")
    })
}

/// Grinberg set of the embedding's traced faces.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_grinberg_from_embedding(g: *const HnEmbedding, out: *mut *mut HnGrinbergSet) -> HnStatus {
    guard(|| {
        let analysis = grinberg::analyze(&borrow(g, "embedding")?.0)?;
        write_out(out, Box::into_raw(Box::new(HnGrinbergSet(analysis.set))), "out")
    })
}

/// Set elements in ascending order.
///
/// # Safety
/// `set` must be a live handle, `buffer` must hold `capacity` values and
/// `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_grinberg_set_values(
    set: *const HnGrinbergSet,
    buffer: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> HnStatus {
    guard(|| fill(borrow(set, "set")?.0.values(), buffer, capacity, len))
}

/// Smallest element of the set.
///
/// # Safety
/// `set` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_grinberg_number(set: *const HnGrinbergSet, out: *mut u64) -> HnStatus {
    guard(|| write_out(out, borrow(set, "set")?.0.min(), "out"))
}

/// # Safety
/// `set` must come from an `hn_grinberg_from_*` call and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hn_grinberg_set_free(set: *mut HnGrinbergSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// `n + g/2`, computed on the doubled graph when the embedding has bridges.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_hamiltonian_lower_bound(g: *const HnEmbedding, out: *mut u64) -> HnStatus {
    guard(|| {
        let g = &borrow(g, "embedding")?.0;
        let bound = if g.bridges().is_empty() {
            grinberg::hamiltonian_lower_bound(g)?
        } else {
            grinberg::hamiltonian_lower_bound(&g.double_all_edges())?
        };
        write_out(out, bound, "out")
    })
}

/// Exact Hamiltonian number; fails with `TooLarge` above `limit` vertices.
///
/// # Safety
/// `g` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_hamiltonian_number(g: *const HnEmbedding, limit: usize, out: *mut u64) -> HnStatus {
    guard(|| {
        let solution = hamiltonian_number_exact(&borrow(g, "embedding")?.0, limit)?;
        write_out(out, solution.h, "out")
    })
}

/// Reduction report of a closed walk (vertex ids, closure implicit) as JSON.
/// The string is released with [`hn_string_free`].
///
/// # Safety
/// `g` must be a live handle, `walk` must hold `count` vertex ids and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn hn_reduction_report_json(
    g: *const HnEmbedding,
    walk: *const usize,
    count: usize,
    out: *mut *mut c_char,
) -> HnStatus {
    guard(|| {
        let g = &borrow(g, "embedding")?.0;
        let vertices = if count == 0 {
            Vec::new()
        } else if walk.is_null() {
            return Err(null("walk"));
        } else {
            std::slice::from_raw_parts(walk, count).to_vec()
        };
        let report = reduction_report(g, &ClosedWalk::new(vertices)?)?;
        let json = serde_json::to_string(&report).expect("report serialises");
        let json = CString::new(json).expect("JSON has no nul bytes");
        write_out(out, json.into_raw(), "out")
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
