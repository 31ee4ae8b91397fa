//! Brute-force S-modules over arbitrary small finite abelian groups.
//!
//! Elements, endomorphisms and subgroups are all enumerated explicitly. This
//! is the independent model used to confirm that simple finite modules live
//! on elementary abelian groups.

use thiserror::Error;

use crate::semigroup::FiniteSemigroup;
use crate::subset::ElemSet;

/// Largest group order handled by the brute-force model.
pub const MAX_GROUP_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("cyclic factor orders must be at least 2")]
    BadFactor,
    #[error("group order {0} exceeds {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("exhaustive search of {0} tuples exceeds the budget")]
    BudgetExceeded(u64),
}

/// `Z_{n_1} x ... x Z_{n_r}`, elements numbered in mixed radix (last factor fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(moduli: &[usize]) -> Result<Self, AbelianError> {
        if moduli.iter().any(|&n| n < 2) {
            return Err(AbelianError::BadFactor);
        }
        let order = moduli.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n)).unwrap_or(usize::MAX);
        if order > MAX_GROUP_ORDER {
            return Err(AbelianError::TooLarge(order));
        }
        Ok(AbelianGroup { moduli: moduli.to_vec(), order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn coords(&self, mut x: usize) -> Vec<usize> {
        let mut c = vec![0; self.moduli.len()];
        for (slot, &n) in c.iter_mut().zip(&self.moduli).rev() {
            *slot = x % n;
            x /= n;
        }
        c
    }

    fn index(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.moduli).fold(0, |acc, (&c, &n)| acc * n + c % n)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.index(&sum)
    }

    fn scale(&self, c: usize, a: usize) -> usize {
        (0..c).fold(0, |acc, _| self.add(acc, a))
    }

    /// All additive maps `M -> M` as lookup tables, ordered by generator images.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.moduli.len();
        let units: Vec<usize> = (0..r)
            .map(|i| {
                let mut c = vec![0; r];
                c[i] = 1;
                self.index(&c)
            })
            .collect();
        // image of the i-th unit must be killed by n_i
        let allowed: Vec<Vec<usize>> =
            self.moduli.iter().map(|&n| (0..self.order).filter(|&g| self.scale(n, g) == 0).collect()).collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; r];
        'outer: loop {
            let images: Vec<usize> = (0..r).map(|i| allowed[i][choice[i]]).collect();
            let table: Vec<usize> = (0..self.order)
                .map(|x| {
                    let c = self.coords(x);
                    (0..r).fold(0, |acc, i| self.add(acc, self.scale(c[i], images[i])))
                })
                .collect();
            debug_assert!(units.iter().zip(&images).all(|(&u, &g)| table[u] == g));
            out.push(table);
            for i in (0..r).rev() {
                choice[i] += 1;
                if choice[i] < allowed[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            return out;
        }
    }

    /// Every subgroup, as a mask over element indices.
    pub fn subgroups(&self) -> Vec<ElemSet> {
        ElemSet::all_subsets(self.order)
            .filter(|h| h.contains(0))
            .filter(|h| h.iter().all(|a| h.iter().all(|b| h.contains(self.add(a, b)))))
            .collect()
    }

    pub fn is_additive(&self, f: &[usize]) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| f[self.add(a, b)] == self.add(f[a], f[b])))
    }
}

/// An action of `S` by group endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub maps: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn acted_span_is_zero(&self) -> bool {
        self.maps.iter().all(|f| f.iter().all(|&v| v == 0))
    }

    pub fn annihilator(&self) -> ElemSet {
        self.maps.iter().enumerate().filter(|(_, f)| f.iter().all(|&v| v == 0)).map(|(s, _)| s).collect()
    }

    pub fn is_invariant(&self, h: ElemSet) -> bool {
        self.maps.iter().all(|f| h.iter().all(|m| h.contains(f[m])))
    }

    /// `SM != 0` and no subgroup strictly between `0` and `M` is invariant.
    pub fn is_simple(&self, group: &AbelianGroup) -> bool {
        if self.acted_span_is_zero() {
            return false;
        }
        let full = ElemSet::full(group.order());
        let zero = ElemSet::singleton(0);
        !group.subgroups().into_iter().any(|h| h != zero && h != full && self.is_invariant(h))
    }
}

/// Every action of `s` on `group`, by exhaustive search over `End(M)^|S|`.
pub fn enumerate_group_actions(
    s: &FiniteSemigroup,
    group: &AbelianGroup,
    budget: u64,
) -> Result<Vec<GroupAction>, AbelianError> {
    let ends = group.endomorphisms();
    let n = s.order();
    let total = (ends.len() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > budget {
        return Err(AbelianError::BudgetExceeded(total));
    }
    let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { g.iter().map(|&x| f[x]).collect() };
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let ok = (0..n).all(|a| (0..n).all(|b| ends[idx[s.mul(a, b)]] == compose(&ends[idx[a]], &ends[idx[b]])));
        if ok {
            out.push(GroupAction { maps: idx.iter().map(|&i| ends[i].clone()).collect() });
        }
        for pos in (0..n).rev() {
            idx[pos] += 1;
            if idx[pos] < ends.len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        return Ok(out);
    }
}

/// Number of simple actions of `s` on `group`.
pub fn simple_action_count(s: &FiniteSemigroup, group: &AbelianGroup, budget: u64) -> Result<usize, AbelianError> {
    Ok(enumerate_group_actions(s, group, budget)?.iter().filter(|a| a.is_simple(group)).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn endomorphism_counts() {
        let z4 = AbelianGroup::new(&[4]).unwrap();
        assert_eq!(z4.endomorphisms().len(), 4);
        let v4 = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(v4.endomorphisms().len(), 16);
        let z4z2 = AbelianGroup::new(&[4, 2]).unwrap();
        // (1,0) -> any of 8, (0,1) -> one of the 4 elements of order <= 2
        assert_eq!(z4z2.endomorphisms().len(), 32);
        for g in [z4, v4, z4z2] {
            for f in g.endomorphisms() {
                assert!(g.is_additive(&f));
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(AbelianGroup::new(&[4]).unwrap().subgroups().len(), 3);
        assert_eq!(AbelianGroup::new(&[2, 2]).unwrap().subgroups().len(), 5);
        assert_eq!(AbelianGroup::new(&[2, 2, 2]).unwrap().subgroups().len(), 16);
    }

    #[test]
    fn cyclic_four_admits_no_simple_module() {
        let z4 = AbelianGroup::new(&[4]).unwrap();
        for s in [catalog::b2m(), catalog::t3(), catalog::cyclic_group(3), catalog::trivial()] {
            assert_eq!(simple_action_count(&s, &z4, 1 << 20).unwrap(), 0);
        }
    }

    #[test]
    fn rejects_bad_groups() {
        assert_eq!(AbelianGroup::new(&[1]).unwrap_err(), AbelianError::BadFactor);
        assert_eq!(AbelianGroup::new(&[4, 5]).unwrap_err(), AbelianError::TooLarge(20));
    }
}
