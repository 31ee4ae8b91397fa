//! Finite semigroups given by Cayley tables, and homomorphisms between them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{ElemSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("semigroup order must be at least 1")]
    ZeroOrder,
    #[error("semigroup order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
}

/// An associative multiplication table on `{0, .., order-1}`.
///
/// Immutable once validated. The identity, when one exists, is detected at
/// construction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u8>,
    identity: Option<usize>,
}

/// Wire form of a Cayley table: `{"order": n, "table": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl TryFrom<RawTable> for FiniteSemigroup {
    type Error = TableError;

    fn try_from(raw: RawTable) -> Result<Self, TableError> {
        validate_table(raw.order, &raw.table)
    }
}

impl From<FiniteSemigroup> for RawTable {
    fn from(s: FiniteSemigroup) -> Self {
        RawTable { order: s.order, table: s.rows() }
    }
}

/// Validates an `order x order` table and detects the identity.
///
/// On failure the error names the first offending entry or the first
/// non-associative triple `(i, j, k)` in lexicographic order.
pub fn validate_table(order: usize, table: &[Vec<usize>]) -> Result<FiniteSemigroup, TableError> {
    if order == 0 {
        return Err(TableError::ZeroOrder);
    }
    if order > MAX_ORDER {
        return Err(TableError::OrderTooLarge(order));
    }
    if table.len() != order {
        return Err(TableError::RowCount { expected: order, found: table.len() });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(TableError::RowLength { row, expected: order, found: entries.len() });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(TableError::OutOfRange { row, col, value, order });
            }
            flat.push(value as u8);
        }
    }
    FiniteSemigroup::from_flat(order, flat)
}

impl FiniteSemigroup {
    /// Builds from a row-major table. Entries are assumed in range.
    pub(crate) fn from_flat(order: usize, table: Vec<u8>) -> Result<Self, TableError> {
        debug_assert_eq!(table.len(), order * order);
        let mul = |a: usize, b: usize| table[a * order + b] as usize;
        for i in 0..order {
            for j in 0..order {
                let ij = mul(i, j);
                for k in 0..order {
                    if mul(ij, k) != mul(i, mul(j, k)) {
                        return Err(TableError::NonAssociative { i, j, k });
                    }
                }
            }
        }
        let identity = (0..order).find(|&e| (0..order).all(|s| mul(e, s) == s && mul(s, e) == s));
        Ok(FiniteSemigroup { order, table, identity })
    }

    /// Builds from a closure computing the product. Validates associativity.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        let rows: Vec<Vec<usize>> = (0..order).map(|i| (0..order).map(|j| f(i, j)).collect()).collect();
        validate_table(order, &rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Row-major table entries.
    pub fn entries(&self) -> &[u8] {
        &self.table
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn idempotents(&self) -> ElemSet {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// The set product `AB = {ab : a in A, b in B}`.
    pub fn set_product(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `S A`.
    pub fn left_multiple(&self, a: ElemSet) -> ElemSet {
        self.set_product(self.elements(), a)
    }

    /// `A S`.
    pub fn right_multiple(&self, a: ElemSet) -> ElemSet {
        self.set_product(a, self.elements())
    }

    /// Image of a subset under an element map.
    pub fn image(map: &[usize], a: ElemSet) -> ElemSet {
        a.iter().map(|s| map[s]).collect()
    }

    /// The subsemigroup generated by `gens` (empty for empty `gens`).
    pub fn subsemigroup(&self, gens: ElemSet) -> ElemSet {
        let mut closed = gens;
        loop {
            let next = closed.union(self.set_product(closed, closed));
            if next == closed {
                return closed;
            }
            closed = next;
        }
    }

    /// Index and period of the cyclic subsemigroup of `s`: the least `m >= 1`
    /// and `r >= 1` with `s^(m+r) = s^m`.
    pub fn index_period(&self, s: usize) -> (usize, usize) {
        let mut powers = vec![s];
        loop {
            let next = self.mul(*powers.last().unwrap(), s);
            if let Some(pos) = powers.iter().position(|&x| x == next) {
                return (pos + 1, powers.len() - pos);
            }
            powers.push(next);
        }
    }

    /// Componentwise product; element `(a, b)` has index `a * other.order() + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order;
        let order = self.order * m;
        assert!(order <= MAX_ORDER, "direct product too large");
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let (xa, xb) = (x / m, x % m);
                let (ya, yb) = (y / m, y % m);
                table.push((self.mul(xa, ya) * m + other.mul(xb, yb)) as u8);
            }
        }
        FiniteSemigroup::from_flat(order, table).expect("direct product of semigroups is associative")
    }

    /// The table with the product reversed, `a *' b = b * a`.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..n * n).map(|idx| self.table[(idx % n) * n + idx / n]).collect();
        FiniteSemigroup::from_flat(n, table).expect("opposite of a semigroup is associative")
    }

    /// Relabels elements by `perm`: the result has `perm[a] * perm[b] = perm[a * b]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u8;
            }
        }
        FiniteSemigroup::from_flat(n, table).expect("relabeling preserves associativity")
    }
}

impl std::fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("table", &self.rows())
            .field("identity", &self.identity)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has length {found}, source order is {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("map sends {source_elem} to {image}, outside target of order {order}")]
    OutOfRange { source_elem: usize, image: usize, order: usize },
    #[error("not a homomorphism: phi({s}*{t}) != phi({s})*phi({t})")]
    NotHomomorphism { s: usize, t: usize },
}

/// A validated multiplicative map between finite semigroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupHom {
    source: FiniteSemigroup,
    target: FiniteSemigroup,
    map: Vec<usize>,
}

/// Checks `map[s*t] = map[s]*map[t]` for all pairs, reporting the first
/// failing pair in lexicographic order.
pub fn check_homomorphism(
    source: &FiniteSemigroup,
    target: &FiniteSemigroup,
    map: &[usize],
) -> Result<SemigroupHom, HomError> {
    if map.len() != source.order() {
        return Err(HomError::LengthMismatch { expected: source.order(), found: map.len() });
    }
    if let Some((s, &image)) = map.iter().enumerate().find(|(_, &v)| v >= target.order()) {
        return Err(HomError::OutOfRange { source_elem: s, image, order: target.order() });
    }
    for s in 0..source.order() {
        for t in 0..source.order() {
            if map[source.mul(s, t)] != target.mul(map[s], map[t]) {
                return Err(HomError::NotHomomorphism { s, t });
            }
        }
    }
    Ok(SemigroupHom { source: source.clone(), target: target.clone(), map: map.to_vec() })
}

impl SemigroupHom {
    pub fn identity(s: &FiniteSemigroup) -> Self {
        SemigroupHom { source: s.clone(), target: s.clone(), map: (0..s.order()).collect() }
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, s: usize) -> usize {
        self.map[s]
    }

    pub fn image(&self, a: ElemSet) -> ElemSet {
        FiniteSemigroup::image(&self.map, a)
    }

    /// `phi^-1(B)` as a subset of the source.
    pub fn preimage(&self, b: ElemSet) -> ElemSet {
        (0..self.source.order()).filter(|&s| b.contains(self.map[s])).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.elements()) == self.target.elements()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn b2m_is_a_monoid() {
        let s = validate_table(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(s.identity(), Some(1));
    }

    #[test]
    fn left_zero_has_no_identity() {
        let s = validate_table(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(s.identity(), None);
    }

    #[test]
    fn cyclic_group_of_order_two_is_associative() {
        // 0*0=1, 0*1=0, 1*0=0, 1*1=1: the group of order 2 with identity 1.
        let s = validate_table(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(s.identity(), Some(1));
    }

    #[test]
    fn first_failing_triple_is_reported() {
        // x*y = 1 - x
        let err = validate_table(2, &[vec![1, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(err, TableError::NonAssociative { i: 0, j: 0, k: 0 });
    }

    #[test]
    fn shape_errors() {
        assert_eq!(validate_table(0, &[]).unwrap_err(), TableError::ZeroOrder);
        assert!(matches!(validate_table(2, &[vec![0, 0]]), Err(TableError::RowCount { .. })));
        assert!(matches!(validate_table(2, &[vec![0, 0], vec![0]]), Err(TableError::RowLength { row: 1, .. })));
        assert!(matches!(
            validate_table(2, &[vec![0, 2], vec![0, 0]]),
            Err(TableError::OutOfRange { row: 0, col: 1, value: 2, .. })
        ));
        assert_eq!(validate_table(65, &[]).unwrap_err(), TableError::OrderTooLarge(65));
    }

    #[test]
    fn set_products() {
        let b2m = catalog::b2m();
        assert_eq!(b2m.set_product(ElemSet::singleton(0), ElemSet::singleton(1)), ElemSet::singleton(0));
        let lz2 = catalog::lz2();
        assert_eq!(lz2.set_product(ElemSet::singleton(0), ElemSet::singleton(1)), ElemSet::singleton(0));
        // (0,1)*(1,0) = (0,0) in B2xB2, indices 2x+y.
        let b22 = catalog::b2xb2();
        assert_eq!(b22.set_product(ElemSet::singleton(1), ElemSet::singleton(2)), ElemSet::singleton(0));
        assert!(b22.set_product(ElemSet::EMPTY, b22.elements()).is_empty());
    }

    #[test]
    fn homomorphism_checks() {
        let b2m = catalog::b2m();
        let b22 = catalog::b2xb2();
        assert!(check_homomorphism(&b2m, &b22, &[0, 3]).is_ok());
        // constant map onto the idempotent (1,0)
        assert!(check_homomorphism(&b2m, &b22, &[2, 2]).is_ok());
        let err = check_homomorphism(&b2m, &b2m, &[1, 0]).unwrap_err();
        assert_eq!(err, HomError::NotHomomorphism { s: 0, t: 1 });
        // (1,0) fails as well: phi(1*0) = 1 but phi(1)*phi(0) = 0*1 = 0.
        assert_ne!([1, 0][b2m.mul(1, 0)], b2m.mul(0, 1));
        assert!(matches!(check_homomorphism(&b2m, &b2m, &[0]), Err(HomError::LengthMismatch { .. })));
        assert!(matches!(check_homomorphism(&b2m, &b2m, &[0, 5]), Err(HomError::OutOfRange { .. })));
    }

    #[test]
    fn index_and_period() {
        let t3 = catalog::t3();
        assert_eq!(t3.index_period(0), (1, 1));
        assert_eq!(t3.index_period(1), (2, 1));
        let z2 = validate_table(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(z2.index_period(0), (1, 2));
    }

    #[test]
    fn opposite_and_relabel() {
        let lz2 = catalog::lz2();
        let rz2 = lz2.opposite();
        assert_eq!(rz2.rows(), vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(catalog::b2m().relabel(&[1, 0]).identity(), Some(0));
    }
}
