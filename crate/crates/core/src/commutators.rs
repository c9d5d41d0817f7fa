//! Centralizers, commutator subgroups, solution sets of `[x, y] = r`, and the
//! probability that a random ordered pair has commutator `r`.
//!
//! Two independent routes compute the probability: [`pr_bruteforce`] counts
//! pairs directly, [`pr_formula`] sums centralizer orders over the `x` whose
//! commutator image contains `r`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::probability::{ExactProbability, Fraction};
use crate::ring::{AdditiveGroupShape, FiniteRing, RingElement, MAX_RING_ORDER};

/// A subgroup of `(R, +)` held as its sorted element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveSubgroup {
    shape: AdditiveGroupShape,
    members: Vec<RingElement>,
}

impl AdditiveSubgroup {
    /// Caller guarantees the set is a subgroup.
    pub(crate) fn from_set(shape: &AdditiveGroupShape, members: BTreeSet<RingElement>) -> Self {
        AdditiveSubgroup {
            shape: shape.clone(),
            members: members.into_iter().collect(),
        }
    }

    pub fn trivial(shape: &AdditiveGroupShape) -> Self {
        AdditiveSubgroup {
            shape: shape.clone(),
            members: vec![shape.zero()],
        }
    }

    pub fn whole(shape: &AdditiveGroupShape) -> Self {
        AdditiveSubgroup {
            shape: shape.clone(),
            members: shape.elements().collect(),
        }
    }

    /// Additive closure of `generators`.
    pub fn generated_by<'a>(
        shape: &AdditiveGroupShape,
        generators: impl IntoIterator<Item = &'a RingElement>,
    ) -> Self {
        let gens: BTreeSet<RingElement> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        let mut members = BTreeSet::from([shape.zero()]);
        let mut frontier = vec![shape.zero()];
        // In a finite group adding generators repeatedly reaches every sum and inverse.
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = shape.add(&x, g);
                if members.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Self::from_set(shape, members)
    }

    pub fn shape(&self) -> &AdditiveGroupShape {
        &self.shape
    }

    pub fn members(&self) -> &[RingElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// Contains zero and is closed under addition and negation.
    pub fn is_closed(&self) -> bool {
        self.contains(&self.shape.zero())
            && self.members.iter().all(|a| {
                self.contains(&self.shape.neg(a))
                    && self.members.iter().all(|b| self.contains(&self.shape.add(a, b)))
            })
    }

    pub fn is_subgroup_of(&self, other: &AdditiveSubgroup) -> bool {
        self.members.iter().all(|x| other.contains(x))
    }
}

/// `representative + subgroup`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    representative: RingElement,
    subgroup: AdditiveSubgroup,
}

impl Coset {
    pub fn new(representative: RingElement, subgroup: AdditiveSubgroup) -> Self {
        Coset {
            representative,
            subgroup,
        }
    }

    pub fn representative(&self) -> &RingElement {
        &self.representative
    }

    pub fn subgroup(&self) -> &AdditiveSubgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.subgroup.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, y: &RingElement) -> bool {
        self.subgroup
            .contains(&self.subgroup.shape.sub(y, &self.representative))
    }

    /// Sorted member list.
    pub fn members(&self) -> Vec<RingElement> {
        let shape = &self.subgroup.shape;
        let mut out: Vec<_> = self
            .subgroup
            .members
            .iter()
            .map(|h| shape.add(&self.representative, h))
            .collect();
        out.sort();
        out
    }
}

/// `C_R(x) = {y : xy = yx}`.
pub fn centralizer(ring: &FiniteRing, x: &RingElement) -> Result<AdditiveSubgroup> {
    ring.shape().check(x)?;
    let members = ring
        .elements()
        .iter()
        .filter(|y| ring.mul(x, y) == ring.mul(y, x))
        .cloned()
        .collect();
    Ok(AdditiveSubgroup::from_set(ring.shape(), members))
}

/// `Z(R)`: the elements commuting with every generator (bilinearity makes that enough).
pub fn center(ring: &FiniteRing) -> AdditiveSubgroup {
    let gens: Vec<_> = (0..ring.shape().rank())
        .map(|i| ring.shape().generator(i))
        .collect();
    let members = ring
        .elements()
        .iter()
        .filter(|x| gens.iter().all(|g| ring.comm(x, g).is_zero()))
        .cloned()
        .collect();
    AdditiveSubgroup::from_set(ring.shape(), members)
}

/// `[x, R]`. The raw set `{[x, y] : y in R}` is already a subgroup, being the image
/// of the additive map `y -> [x, y]`, so no closure is taken.
pub fn commutator_image(ring: &FiniteRing, x: &RingElement) -> Result<AdditiveSubgroup> {
    ring.shape().check(x)?;
    let members = ring.elements().iter().map(|y| ring.comm(x, y)).collect();
    let image = AdditiveSubgroup::from_set(ring.shape(), members);
    debug_assert!(image.is_closed());
    Ok(image)
}

/// `[R, R]`: additive closure of every commutator. The commutator set itself need not be
/// closed.
pub fn commutator_subgroup(ring: &FiniteRing) -> AdditiveSubgroup {
    let commutators: BTreeSet<RingElement> = ring
        .elements()
        .iter()
        .flat_map(|x| ring.elements().iter().map(move |y| ring.comm(x, y)))
        .collect();
    AdditiveSubgroup::generated_by(ring.shape(), &commutators)
}

/// `T_{x,r} = {y : [x, y] = r}`; `None` when `r` is not in `[x, R]`, otherwise the
/// coset `t + C_R(x)` for the first solution `t`.
pub fn solution_set(ring: &FiniteRing, x: &RingElement, r: &RingElement) -> Result<Option<Coset>> {
    ring.shape().check(x)?;
    ring.shape().check(r)?;
    let Some(t) = ring.elements().iter().find(|y| &ring.comm(x, y) == r) else {
        return Ok(None);
    };
    Ok(Some(Coset::new(t.clone(), centralizer(ring, x)?)))
}

fn check_order(ring: &FiniteRing) -> Result<()> {
    if ring.order() as u64 > MAX_RING_ORDER {
        return Err(Error::OrderOverflow {
            order: ring.order() as u64,
            limit: MAX_RING_ORDER,
        });
    }
    Ok(())
}

fn total_pairs(ring: &FiniteRing) -> u64 {
    let n = ring.order() as u64;
    n * n
}

/// Below this order the thread pool costs more than it saves.
#[cfg(feature = "parallel")]
pub(crate) const PARALLEL_MIN_ORDER: usize = 128;

#[cfg(feature = "parallel")]
fn sum_over_elements<F>(ring: &FiniteRing, f: F) -> u64
where
    F: Fn(&RingElement) -> u64 + Sync + Send,
{
    use rayon::prelude::*;
    if ring.order() < PARALLEL_MIN_ORDER {
        return ring.elements().iter().map(f).sum();
    }
    ring.elements().par_iter().map(f).sum()
}

#[cfg(not(feature = "parallel"))]
fn sum_over_elements<F>(ring: &FiniteRing, f: F) -> u64
where
    F: Fn(&RingElement) -> u64,
{
    ring.elements().iter().map(f).sum()
}

/// `|{(x, y) : [x, y] = r}| / |R|^2` by full enumeration.
pub fn pr_bruteforce(ring: &FiniteRing, r: &RingElement) -> Result<ExactProbability> {
    check_order(ring)?;
    ring.shape().check(r)?;
    let count = sum_over_elements(ring, |x| {
        ring.elements().iter().filter(|y| &ring.comm(x, y) == r).count() as u64
    });
    Ok(ExactProbability::new(count, total_pairs(ring)))
}

/// Counts of every commutator value, indexed by element position.
fn commutator_counts(ring: &FiniteRing) -> Vec<u64> {
    let n = ring.order();
    let row = |x: &RingElement| {
        let mut counts = vec![0u64; n];
        for y in ring.elements() {
            counts[ring.index_of(&ring.comm(x, y))] += 1;
        }
        counts
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(s, v)| *s += v);
        a
    };
    #[cfg(feature = "parallel")]
    if n >= PARALLEL_MIN_ORDER {
        use rayon::prelude::*;
        return ring
            .elements()
            .par_iter()
            .map(row)
            .reduce(|| vec![0u64; n], add);
    }
    ring.elements().iter().map(row).fold(vec![0u64; n], add)
}

/// Centralizer-sum evaluation. Both the `|C_R(x)|` form and the `1/|[x,R]|` form are
/// computed and must agree.
pub fn pr_formula(ring: &FiniteRing, r: &RingElement) -> Result<ExactProbability> {
    ring.shape().check(r)?;
    let n = ring.order() as u64;
    let mut centralizer_sum = 0u64;
    let mut inverse_sum = Fraction::from_integer(0);
    for x in ring.elements() {
        let image = commutator_image(ring, x)?;
        if image.contains(r) {
            centralizer_sum += centralizer(ring, x)?.len() as u64;
            inverse_sum += Fraction::new(1, image.len() as i64);
        }
    }
    let first = ExactProbability::new(centralizer_sum, n * n);
    let second = inverse_sum / Fraction::from_integer(n as i64);
    assert_eq!(first.value(), second, "centralizer and image forms disagree");
    Ok(first)
}

/// `Pr_r` for every `r`, in lexicographic order of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(RingElement, ExactProbability)>,
}

impl Spectrum {
    fn from_counts(ring: &FiniteRing, counts: &[u64]) -> Self {
        let total = total_pairs(ring);
        Spectrum {
            entries: ring
                .elements()
                .iter()
                .zip(counts)
                .map(|(r, &c)| (r.clone(), ExactProbability::new(c, total)))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(RingElement, ExactProbability)] {
        &self.entries
    }

    pub fn get(&self, r: &RingElement) -> Option<ExactProbability> {
        self.entries
            .binary_search_by(|(e, _)| e.cmp(r))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn sum(&self) -> Fraction {
        self.entries.iter().map(|(_, p)| p.value()).sum()
    }

    /// Elements with non-zero probability.
    pub fn support(&self) -> impl Iterator<Item = &RingElement> {
        self.entries
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(r, _)| r)
    }
}

/// Spectrum by the centralizer-sum route: each `x` contributes `|C_R(x)|` to every `r`
/// in `[x, R]`.
pub fn pr_spectrum(ring: &FiniteRing) -> Result<Spectrum> {
    check_order(ring)?;
    let mut counts = vec![0u64; ring.order()];
    for x in ring.elements() {
        let c = centralizer(ring, x)?.len() as u64;
        for r in commutator_image(ring, x)?.members() {
            counts[ring.index_of(r)] += c;
        }
    }
    Ok(Spectrum::from_counts(ring, &counts))
}

/// Spectrum by direct pair enumeration.
pub fn pr_spectrum_bruteforce(ring: &FiniteRing) -> Result<Spectrum> {
    check_order(ring)?;
    Ok(Spectrum::from_counts(ring, &commutator_counts(ring)))
}
