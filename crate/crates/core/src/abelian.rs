//! Explicit finite abelian groups arising as subquotients of a ring's additive group.

use std::collections::BTreeMap;

use crate::commutators::AdditiveSubgroup;
use crate::ring::{AdditiveGroupShape, RingElement};

/// `sub / kernel` for subgroups `kernel <= sub` of some `Z_{d1} x ... x Z_{dk}`.
///
/// Each element is stored as the lexicographically smallest member of its coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    shape: AdditiveGroupShape,
    reps: Vec<RingElement>,
    /// Ambient element index -> position in `reps`, for members of `sub`.
    slot: Vec<Option<u32>>,
}

impl FiniteAbelianGroup {
    pub fn subquotient(sub: &AdditiveSubgroup, kernel: &AdditiveSubgroup) -> Self {
        let shape = sub.shape().clone();
        let mut slot = vec![None; shape.order()];
        let mut reps = Vec::new();
        // members are sorted, so the first unassigned member of a coset is its minimum
        for x in sub.members() {
            if slot[shape.index_of(x)].is_some() {
                continue;
            }
            let pos = reps.len() as u32;
            for z in kernel.members() {
                slot[shape.index_of(&shape.add(x, z))] = Some(pos);
            }
            reps.push(x.clone());
        }
        FiniteAbelianGroup { shape, reps, slot }
    }

    pub fn from_subgroup(sub: &AdditiveSubgroup) -> Self {
        Self::subquotient(sub, &AdditiveSubgroup::trivial(sub.shape()))
    }

    /// `Z_{d1} x ... x Z_{dk}` itself.
    pub fn of_shape(shape: &AdditiveGroupShape) -> Self {
        Self::from_subgroup(&AdditiveSubgroup::whole(shape))
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn shape(&self) -> &AdditiveGroupShape {
        &self.shape
    }

    /// Canonical representatives in increasing order; position 0 is the identity.
    pub fn representatives(&self) -> &[RingElement] {
        &self.reps
    }

    pub fn representative(&self, i: usize) -> &RingElement {
        &self.reps[i]
    }

    /// Position of the class of an ambient element, `None` if it lies outside `sub`.
    pub fn locate(&self, x: &RingElement) -> Option<usize> {
        if !self.shape.contains(x) {
            return None;
        }
        self.slot[self.shape.index_of(x)].map(|p| p as usize)
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.locate(&self.shape.add(&self.reps[i], &self.reps[j]))
            .expect("closed under addition")
    }

    pub fn neg(&self, i: usize) -> usize {
        self.locate(&self.shape.neg(&self.reps[i]))
            .expect("closed under negation")
    }

    /// `k * g` for a group position `g`.
    pub fn scale(&self, k: u64, i: usize) -> usize {
        self.locate(&self.shape.scale(k, &self.reps[i]))
            .expect("closed under multiples")
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut acc = 0;
        let mut n = 1;
        loop {
            acc = self.add(acc, i);
            if acc == 0 {
                return n;
            }
            n += 1;
        }
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        let orders: Vec<u64> = (0..self.order()).map(|i| self.element_order(i)).collect();
        invariant_factors_from_orders(&orders)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors `f1 | f2 | ... | fm` (ascending) of an abelian group given the
/// additive order of every element.
///
/// For each prime `p`, `#{x : p^k x = 0} = p^(sum_i min(k, e_i))` over the
/// `p`-primary exponents `e_i`, so successive ratios count the exponents `>= k`.
pub fn invariant_factors_from_orders(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(n) {
        let mut at_least = Vec::new();
        let mut prev = 1u64;
        let mut k = 1;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            if count == prev {
                break;
            }
            let mut ratio = count / prev;
            let mut rank = 0usize;
            while ratio > 1 {
                ratio /= p;
                rank += 1;
            }
            at_least.push(rank);
            prev = count;
            k += 1;
        }
        // at_least[k-1] = #{i : e_i >= k}
        let mut exps = Vec::new();
        for (k, &count) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            exps.extend(std::iter::repeat_n(k as u32 + 1, count - next));
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        exponents.insert(p, exps);
    }
    let m = exponents.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..m)
        .map(|t| {
            exponents
                .iter()
                .map(|(&p, exps)| exps.get(t).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}
