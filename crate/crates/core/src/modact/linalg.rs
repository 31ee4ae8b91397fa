//! Dense linear algebra over a prime field with at most 251 elements.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::ModuleSpace;

/// A `k x k` matrix over the `p`-element field, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    k: usize,
    entries: Vec<u8>,
}

impl Matrix {
    /// Entries must already be reduced mod `p`.
    pub fn from_entries(k: usize, entries: Vec<u8>) -> Self {
        assert_eq!(entries.len(), k * k, "matrix entry count");
        Matrix { k, entries }
    }

    pub fn zero(k: usize) -> Self {
        Matrix { k, entries: vec![0; k * k] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zero(k);
        for i in 0..k {
            m.entries[i * k + i] = 1;
        }
        m
    }

    /// `c * I`.
    pub fn scalar(k: usize, c: u8) -> Self {
        let mut m = Self::zero(k);
        for i in 0..k {
            m.entries[i * k + i] = c;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.k + col]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.k).map(|r| r.iter().map(|&x| x as u32).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, p: u32) -> Matrix {
        let k = self.k;
        debug_assert_eq!(other.k, k);
        let mut out = vec![0u8; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0u32;
                for t in 0..k {
                    acc += self.entries[i * k + t] as u32 * other.entries[t * k + j] as u32;
                }
                out[i * k + j] = (acc % p) as u8;
            }
        }
        Matrix { k, entries: out }
    }

    pub fn apply(&self, v: &[u8], p: u32) -> Vec<u8> {
        let k = self.k;
        (0..k)
            .map(|i| {
                let acc: u32 = (0..k).map(|t| self.entries[i * k + t] as u32 * v[t] as u32).sum();
                (acc % p) as u8
            })
            .collect()
    }

    /// Column vectors, i.e. images of the standard basis.
    pub fn columns(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.k).map(move |j| (0..self.k).map(|i| self.get(i, j)).collect())
    }
}

pub(crate) fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// A subspace of `F_p^k` held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    k: usize,
    p: u32,
    // each row has a leading 1 at pivots[i]
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(space: ModuleSpace) -> Self {
        Subspace { k: space.k(), p: space.p(), basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span<I: IntoIterator<Item = Vec<u8>>>(space: ModuleSpace, vectors: I) -> Self {
        let mut w = Self::zero(space);
        for v in vectors {
            w.insert(v);
        }
        w
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.k
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    fn reduce(&self, mut v: Vec<u8>) -> Vec<u8> {
        let p = self.p;
        for (row, &piv) in self.basis.iter().zip(&self.pivots) {
            let c = v[piv] as u32;
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u32 + (p - c) * r as u32) % p) as u8;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true if the dimension grew.
    pub fn insert(&mut self, v: Vec<u8>) -> bool {
        assert_eq!(v.len(), self.k);
        let p = self.p;
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inverse_mod(r[piv] as u32, p);
        for x in r.iter_mut() {
            *x = (*x as u32 * inv % p) as u8;
        }
        // clear the new pivot column from the existing rows
        for row in self.basis.iter_mut() {
            let c = row[piv] as u32;
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = ((*x as u32 + (p - c) * y as u32) % p) as u8;
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(pos, piv);
        self.basis.insert(pos, r);
        true
    }
}

/// All `p^k` vectors of `F_p^k` in lexicographic order.
pub fn all_vectors(space: ModuleSpace) -> impl Iterator<Item = Vec<u8>> {
    let (p, k) = (space.p(), space.k());
    let count = (p as u64).pow(k as u32);
    (0..count).map(move |mut code| {
        let mut v = vec![0u8; k];
        for slot in v.iter_mut().rev() {
            *slot = (code % p as u64) as u8;
            code /= p as u64;
        }
        v
    })
}

/// Largest endomorphism count for which a full multiplication table is cached.
const CACHED_TABLE_LIMIT: usize = 1024;

/// The matrix algebra `M_k(F_p)` with matrices numbered by their lexicographic
/// rank on the row-major entry sequence.
pub(crate) struct EndRing {
    space: ModuleSpace,
    matrices: Vec<Matrix>,
    table: Option<Vec<u32>>,
}

impl EndRing {
    pub fn new(space: ModuleSpace) -> Self {
        let (p, k) = (space.p(), space.k());
        let size = space.endomorphism_count() as usize;
        let mut matrices = Vec::with_capacity(size);
        for mut code in 0..size {
            let mut entries = vec![0u8; k * k];
            for slot in entries.iter_mut().rev() {
                *slot = (code % p as usize) as u8;
                code /= p as usize;
            }
            matrices.push(Matrix::from_entries(k, entries));
        }
        let mut ring = EndRing { space, matrices, table: None };
        if size <= CACHED_TABLE_LIMIT {
            let mut table = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    table.push(ring.encode(&ring.matrices[a].mul(&ring.matrices[b], p)));
                }
            }
            ring.table = Some(table);
        }
        ring
    }

    /// Shared instance per space, built once per process.
    pub fn shared(space: ModuleSpace) -> Arc<EndRing> {
        static RINGS: OnceLock<Mutex<HashMap<ModuleSpace, Arc<EndRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(Default::default);
        if let Some(r) = rings.lock().unwrap().get(&space) {
            return Arc::clone(r);
        }
        let ring = Arc::new(EndRing::new(space));
        Arc::clone(rings.lock().unwrap().entry(space).or_insert(ring))
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, idx: u32) -> &Matrix {
        &self.matrices[idx as usize]
    }

    pub fn encode(&self, m: &Matrix) -> u32 {
        let p = self.space.p();
        m.entries().iter().fold(0u32, |acc, &x| acc * p + x as u32)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.matrices.len() + b as usize],
            None => self.encode(&self.matrices[a as usize].mul(&self.matrices[b as usize], self.space.p())),
        }
    }

    /// `a^e` for `e >= 1`.
    pub fn pow(&self, a: u32, e: usize) -> u32 {
        (1..e).fold(a, |acc, _| self.mul(acc, a))
    }
}
