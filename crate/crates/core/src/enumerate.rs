//! Exhaustive enumeration of small semigroups.
//!
//! Tables are filled cell by cell in row-major order. After each assignment
//! only the associativity triples that read the new cell are checked, which
//! keeps the work per search node quadratic in the order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::pseudovariety::{pv_member, Pseudovariety};
use crate::semigroup::Semigroup;

/// Hard upper limit on the order accepted by [`enumerate_semigroups`].
pub const MAX_ENUMERATION_ORDER: usize = 5;

/// How enumerated tables are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dedup {
    /// One representative (the least relabeled table) per isomorphism class.
    UpToIso,
    /// One representative per class of isomorphism or anti-isomorphism.
    UpToIsoAntiIso,
    /// Every associative table on `0..n`.
    Raw,
}

const UNSET: usize = usize::MAX;

/// All semigroups of order `n` in lexicographic order of their tables.
///
/// With deduplication the emitted table is the canonical representative of
/// its class, i.e. the lexicographically least relabeling.
pub fn enumerate_semigroups(n: usize, dedup: Dedup) -> Result<Vec<Semigroup>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeCap {
            what: "enumeration order",
            got: n,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![Semigroup::empty()]);
    }
    let mut out = Vec::new();
    let mut table = vec![UNSET; n * n];
    fill(n, &mut table, 0, &mut |t| {
        let keep = match dedup {
            Dedup::Raw => true,
            Dedup::UpToIso | Dedup::UpToIsoAntiIso => {
                let s = Semigroup::from_flat_unchecked(n, t.to_vec());
                s.canonical_table(dedup == Dedup::UpToIsoAntiIso) == t
            }
        };
        if keep {
            out.push(Semigroup::from_flat_unchecked(n, t.to_vec()));
        }
    });
    Ok(out)
}

/// All semigroups of every order in `1..=max`, up to isomorphism, in
/// order of size. Lists are computed once per order and shared.
pub fn semigroups_up_to(max: usize) -> Result<Vec<Semigroup>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(iso_classes(n)?.iter().cloned());
    }
    Ok(out)
}

/// Members of `pv` of every order in `1..=max`, up to isomorphism.
pub fn members_up_to(pv: Pseudovariety, max: usize) -> Result<Vec<Semigroup>> {
    let mut out = semigroups_up_to(max)?;
    out.retain(|s| pv_member(pv, s));
    Ok(out)
}

fn iso_classes(n: usize) -> Result<Arc<Vec<Semigroup>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Semigroup>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(found.clone());
    }
    let classes = Arc::new(enumerate_semigroups(n, Dedup::UpToIso)?);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(n, classes.clone());
    Ok(classes)
}

fn fill(n: usize, t: &mut [usize], cell: usize, emit: &mut impl FnMut(&[usize])) {
    if cell == n * n {
        emit(t);
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for v in 0..n {
        t[cell] = v;
        if consistent_at(n, t, i, j) {
            fill(n, t, cell + 1, emit);
        }
    }
    t[cell] = UNSET;
}

#[inline]
fn triple_ok(n: usize, t: &[usize], a: usize, b: usize, c: usize) -> bool {
    let ab = t[a * n + b];
    let bc = t[b * n + c];
    if ab == UNSET || bc == UNSET {
        return true;
    }
    let left = t[ab * n + c];
    let right = t[a * n + bc];
    left == UNSET || right == UNSET || left == right
}

/// Checks every triple in which cell `(i, j)` is one of the four lookups.
fn consistent_at(n: usize, t: &[usize], i: usize, j: usize) -> bool {
    for c in 0..n {
        // (ij)c against i(jc)
        if !triple_ok(n, t, i, j, c) {
            return false;
        }
        // (ai)j against a(ij)
        if !triple_ok(n, t, c, i, j) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            // (ab)j with ab = i
            if t[a * n + b] == i && !triple_ok(n, t, a, b, j) {
                return false;
            }
            // i(ab) with ab = j
            if t[a * n + b] == j && !triple_ok(n, t, i, a, b) {
                return false;
            }
        }
    }
    true
}
