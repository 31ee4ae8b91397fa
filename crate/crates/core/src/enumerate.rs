//! Exhaustive enumeration of Cayley tables and canonical forms.
//!
//! Labeled enumeration fills the table in row-major order, pruning as soon as
//! an associativity triple with all four entries defined fails. Emission order
//! is lexicographic on the row-major entry sequence.

use itertools::Itertools;
use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

/// Default upper bound on enumerated orders.
pub const DEFAULT_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {order} exceeds the configured enumeration limit {limit}")]
    BoundExceeded { order: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedup {
    /// Every labeled table.
    #[default]
    None,
    /// One canonical representative per class under relabeling and transposition.
    UpToIsoAndAntiIso,
}

/// Enumerates all associative tables of order `n` with the default limit.
pub fn enumerate_semigroups(n: usize, dedup: Dedup) -> Result<Vec<FiniteSemigroup>, EnumerateError> {
    enumerate_semigroups_bounded(n, dedup, DEFAULT_MAX_ORDER)
}

pub fn enumerate_semigroups_bounded(
    n: usize,
    dedup: Dedup,
    limit: usize,
) -> Result<Vec<FiniteSemigroup>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::ZeroOrder);
    }
    if n > limit {
        return Err(EnumerateError::BoundExceeded { order: n, limit });
    }
    let mut out = Vec::new();
    let mut table = vec![UNSET; n * n];
    fill(n, 0, &mut table, &mut |t| {
        let s = FiniteSemigroup::from_flat(n, t.to_vec()).expect("backtracking emits associative tables");
        match dedup {
            Dedup::None => out.push(s),
            Dedup::UpToIsoAndAntiIso => {
                if canonical_entries(&s) == s.entries() {
                    out.push(s);
                }
            }
        }
    });
    Ok(out)
}

const UNSET: u8 = u8::MAX;

fn fill(n: usize, cell: usize, table: &mut [u8], emit: &mut impl FnMut(&[u8])) {
    if cell == n * n {
        emit(table);
        return;
    }
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent(n, table) {
            fill(n, cell + 1, table, emit);
        }
    }
    table[cell] = UNSET;
}

/// True if no fully defined triple violates associativity.
fn consistent(n: usize, t: &[u8]) -> bool {
    let get = |a: usize, b: usize| {
        let v = t[a * n + b];
        (v != UNSET).then_some(v as usize)
    };
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = get(i, j) else { continue };
            for k in 0..n {
                let (Some(lhs), Some(jk)) = (get(ij, k), get(j, k)) else { continue };
                if let Some(rhs) = get(i, jk) {
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographically least row-major table over all relabelings of `s` and of
/// its opposite.
pub fn canonical_form(s: &FiniteSemigroup) -> FiniteSemigroup {
    let entries = canonical_entries(s);
    FiniteSemigroup::from_flat(s.order(), entries).expect("relabeling preserves associativity")
}

pub fn is_canonical(s: &FiniteSemigroup) -> bool {
    canonical_entries(s) == s.entries()
}

fn canonical_entries(s: &FiniteSemigroup) -> Vec<u8> {
    let n = s.order();
    let mut best: Vec<u8> = s.entries().to_vec();
    let mut candidate = vec![0u8; n * n];
    for perm in (0..n).permutations(n) {
        for transpose in [false, true] {
            for a in 0..n {
                for b in 0..n {
                    let prod = if transpose { s.mul(b, a) } else { s.mul(a, b) };
                    candidate[perm[a] * n + perm[b]] = perm[prod] as u8;
                }
            }
            if candidate < best {
                best.copy_from_slice(&candidate);
            }
        }
    }
    best
}
